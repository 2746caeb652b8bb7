//! Cup and cap products: simplicial, Whitney (on subcomplexes of products of
//! simplicial complexes) and the closed forms on the word basis.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cells::{mu_iso, sign, CellChain, CellWord, Flavor, WordComplex};
use crate::error::{MacError, Result};
use crate::homology::snf::determinant;
use crate::homology::{to_i64, BasedComplex, Direction};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// A simplicial (co)chain: oriented simplices in increasing vertex order.
pub type SimplexChain = BTreeMap<VertexSet, i64>;

fn add_to<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, v: i64) {
    if v == 0 {
        return;
    }
    let e = map.entry(key).or_insert(0);
    *e = e.checked_add(v).expect("coefficient overflow");
    if *e == 0 {
        map.retain(|_, x| *x != 0);
    }
}

fn front(s: VertexSet, len: usize) -> VertexSet {
    s.iter().take(len).collect()
}

fn back(s: VertexSet, len: usize) -> VertexSet {
    s.iter().skip(s.len() - len).collect()
}

/// Front-face/back-face cup product of simplicial cochains on `k`.
pub fn simplicial_cup(c1: &SimplexChain, c2: &SimplexChain, k: &SimplicialComplex) -> SimplexChain {
    let mut out = SimplexChain::new();
    for (&a, &x) in c1 {
        for (&b, &y) in c2 {
            if let Some(s) = cup_simplices(a, b) {
                if k.contains(s) {
                    add_to(&mut out, s, x * y);
                }
            }
        }
    }
    out
}

fn cup_simplices(a: VertexSet, b: VertexSet) -> Option<VertexSet> {
    let (Some(top), Some(bottom)) = (a.max(), b.min()) else {
        return None;
    };
    (top == bottom).then_some(a | b)
}

/// `c ⌢ [i_0..i_r] = c([i_{r-p}..i_r]) [i_0..i_{r-p}]`.
pub fn simplicial_cap(c: &SimplexChain, z: &SimplexChain) -> SimplexChain {
    let mut out = SimplexChain::new();
    for (&s, &y) in z {
        for (&a, &x) in c {
            if let Some(f) = cap_simplices(a, s) {
                add_to(&mut out, f, x * y);
            }
        }
    }
    out
}

fn cap_simplices(a: VertexSet, s: VertexSet) -> Option<VertexSet> {
    if a.is_empty() || a.len() > s.len() || back(s, a.len()) != a {
        return None;
    }
    Some(front(s, s.len() - a.len() + 1))
}

/// `(p, q) = Σ_i q_i Σ_{j>i} p_j mod 2`, as a sign.
pub fn shuffle_sign(p: &[usize], q: &[usize]) -> i64 {
    let mut total = 0usize;
    let mut above = 0usize;
    for i in (0..p.len()).rev() {
        total += q[i] * above;
        above += p[i];
    }
    sign(total)
}

/// `(v(p), v(q))` for indicator vectors of vertex sets.
fn set_shuffle(p: VertexSet, q: VertexSet) -> usize {
    q.iter().map(|i| p.count_above(i)).sum()
}

/// A cell of a product of simplicial complexes: one nonempty simplex per factor.
pub type ProductCell = Vec<VertexSet>;

/// A (co)chain on a product cell complex.
pub type ProductChain = BTreeMap<ProductCell, i64>;

fn cell_dims(c: &ProductCell) -> Vec<usize> {
    c.iter().map(|s| s.len() - 1).collect()
}

/// A subcomplex of `|K_1| × ... × |K_m|` given by its cells.
#[derive(Clone, Debug)]
pub struct ProductSubcomplex {
    factors: Vec<SimplicialComplex>,
    cells: BTreeSet<ProductCell>,
}

impl ProductSubcomplex {
    /// Fails unless every cell is a product of simplices and every face of a
    /// cell is again listed.
    pub fn new<I: IntoIterator<Item = ProductCell>>(factors: Vec<SimplicialComplex>, cells: I) -> Result<Self> {
        let cells: BTreeSet<ProductCell> = cells.into_iter().collect();
        for c in &cells {
            if c.len() != factors.len() {
                return Err(MacError::input(format!("cell with {} factors, expected {}", c.len(), factors.len())));
            }
            for (s, k) in c.iter().zip(&factors) {
                if s.is_empty() || !k.contains(*s) {
                    return Err(MacError::input(format!("{s} is not a nonempty simplex of its factor")));
                }
            }
            for (i, s) in c.iter().enumerate() {
                if s.len() < 2 {
                    continue;
                }
                for v in s.iter() {
                    let mut f = c.clone();
                    f[i] = s.remove(v);
                    if !cells.contains(&f) {
                        return Err(MacError::input("cell set is not closed under taking faces"));
                    }
                }
            }
        }
        Ok(ProductSubcomplex { factors, cells })
    }

    /// The whole product.
    pub fn full(factors: Vec<SimplicialComplex>) -> Self {
        let mut cells: Vec<ProductCell> = vec![Vec::new()];
        for k in &factors {
            let simplices: Vec<VertexSet> = k.simplices().into_iter().filter(|s| !s.is_empty()).collect();
            cells = cells
                .into_iter()
                .flat_map(|c| {
                    simplices.iter().map(move |s| {
                        let mut c = c.clone();
                        c.push(*s);
                        c
                    })
                })
                .collect();
        }
        ProductSubcomplex {
            factors,
            cells: cells.into_iter().collect(),
        }
    }

    /// `(D¹,S⁰)^K` inside `I^m`, with `I` triangulated on vertices `1 = t̲`,
    /// `2 = t` and `u = {1,2}`.
    pub fn polyhedral(k: &SimplicialComplex) -> Self {
        let m = k.m();
        let full = Self::full(vec![interval(); m]);
        let cells = full
            .cells
            .into_iter()
            .filter(|c| k.contains(u_support(c)))
            .collect();
        ProductSubcomplex {
            factors: full.factors,
            cells,
        }
    }

    pub fn factors(&self) -> &[SimplicialComplex] {
        &self.factors
    }

    pub fn cells(&self) -> impl Iterator<Item = &ProductCell> {
        self.cells.iter()
    }

    pub fn contains(&self, c: &ProductCell) -> bool {
        self.cells.contains(c)
    }

    fn check_support(&self, c: &ProductChain) -> Result<()> {
        match c.keys().find(|x| !self.contains(x)) {
            Some(x) => Err(MacError::input(format!("cell {x:?} is not in the subcomplex"))),
            None => Ok(()),
        }
    }

    /// `∂(⊗c_i) = Σ_i (-1)^{Σ_{j<i} p_j} ⊗ ... ∂c_i ...`.
    pub fn boundary(&self, z: &ProductChain) -> Result<ProductChain> {
        self.check_support(z)?;
        let mut out = ProductChain::new();
        for (c, &v) in z {
            let mut before = 0usize;
            for (i, s) in c.iter().enumerate() {
                if s.len() >= 2 {
                    for (pos, x) in s.iter().enumerate() {
                        let mut f = c.clone();
                        f[i] = s.remove(x);
                        add_to(&mut out, f, v * sign(before + pos));
                    }
                }
                before += s.len() - 1;
            }
        }
        Ok(out)
    }

    /// The transpose of [`Self::boundary`] on the cells of the subcomplex.
    pub fn coboundary(&self, a: &ProductChain) -> Result<ProductChain> {
        self.check_support(a)?;
        let mut out = ProductChain::new();
        for c in &self.cells {
            let d = self.boundary(&BTreeMap::from([(c.clone(), 1)]))?;
            let v: i64 = d.iter().map(|(f, x)| x * a.get(f).copied().unwrap_or(0)).sum();
            add_to(&mut out, c.clone(), v);
        }
        Ok(out)
    }
}

/// The interval `I` as the 1-simplex on `{1,2}`.
pub fn interval() -> SimplicialComplex {
    SimplicialComplex::simplex(2)
}

fn u_support(c: &ProductCell) -> VertexSet {
    c.iter()
        .enumerate()
        .filter(|(_, s)| s.len() == 2)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `(⊗c^{p_i}) ⌣ (⊗c^{q_i}) = (-1)^{(p,q)} ⊗ (c^{p_i} ⌣ c^{q_i})`, restricted to `A`.
pub fn whitney_cup(a: &ProductChain, b: &ProductChain, sub: &ProductSubcomplex) -> Result<ProductChain> {
    sub.check_support(a)?;
    sub.check_support(b)?;
    let mut out = ProductChain::new();
    for (x, &cx) in a {
        let p = cell_dims(x);
        'pairs: for (y, &cy) in b {
            let mut z = Vec::with_capacity(x.len());
            for ((s, t), k) in x.iter().zip(y).zip(&sub.factors) {
                match cup_simplices(*s, *t) {
                    Some(r) if k.contains(r) => z.push(r),
                    _ => continue 'pairs,
                }
            }
            if sub.contains(&z) {
                let q = cell_dims(y);
                add_to(&mut out, z, shuffle_sign(&p, &q) * cx * cy);
            }
        }
    }
    Ok(out)
}

/// `(⊗c^{p_i}) ⌢ (⊗c_{r_i}) = (-1)^{(r-p,p)} ⊗ c^{p_i} ⌢ c_{r_i}`.
pub fn whitney_cap(a: &ProductChain, z: &ProductChain, sub: &ProductSubcomplex) -> Result<ProductChain> {
    sub.check_support(a)?;
    sub.check_support(z)?;
    let mut out = ProductChain::new();
    for (x, &cx) in a {
        let p = cell_dims(x);
        'pairs: for (y, &cy) in z {
            let mut f = Vec::with_capacity(x.len());
            for (s, t) in x.iter().zip(y) {
                match cap_simplices(*s, *t) {
                    Some(r) => f.push(r),
                    None => continue 'pairs,
                }
            }
            let r = cell_dims(y);
            let rp: Vec<usize> = r.iter().zip(&p).map(|(r, p)| r - p).collect();
            add_to(&mut out, f, shuffle_sign(&rp, &p) * cx * cy);
        }
    }
    Ok(out)
}

const LOW: VertexSet = VertexSet::from_bits(1);
const HIGH: VertexSet = VertexSet::from_bits(2);
const EDGE: VertexSet = VertexSet::from_bits(3);

/// Expands words into product cells of `I^m`: `ε = t - t̲` for chains,
/// `δ = t* + t̲*` for cochains.
pub fn words_to_product(c: &CellChain, m: usize) -> ProductChain {
    let mut out = ProductChain::new();
    for (w, v) in c.terms() {
        let mut partial: Vec<(ProductCell, i64)> = vec![(Vec::with_capacity(m), v)];
        for i in 1..=m {
            let options: &[(VertexSet, i64)] = if w.sigma().contains(i) {
                &[(EDGE, 1)]
            } else {
                match (w.flavor(), w.tau().contains(i)) {
                    (Flavor::Chain, true) => &[(HIGH, 1), (LOW, -1)],
                    (Flavor::Chain, false) => &[(LOW, 1)],
                    (Flavor::Cochain, true) => &[(HIGH, 1)],
                    (Flavor::Cochain, false) => &[(HIGH, 1), (LOW, 1)],
                }
            };
            partial = partial
                .into_iter()
                .flat_map(|(c, x)| {
                    options.iter().map(move |(s, y)| {
                        let mut c = c.clone();
                        c.push(*s);
                        (c, x * y)
                    })
                })
                .collect();
        }
        for (c, x) in partial {
            add_to(&mut out, c, x);
        }
    }
    out
}

/// Inverse of [`words_to_product`] on `I^m`: `t = ε + t̲`, `t̲* = δ - t*`.
pub fn product_to_words(c: &ProductChain, flavor: Flavor) -> Result<CellChain> {
    let mut out = CellChain::zero(flavor);
    for (cell, &v) in c {
        let mut partial = vec![(VertexSet::EMPTY, VertexSet::EMPTY, v)];
        for (k, s) in cell.iter().enumerate() {
            let i = k + 1;
            let next: Vec<(VertexSet, VertexSet, i64)> = partial
                .into_iter()
                .flat_map(|(sig, tau, x)| {
                    let opts: Vec<(VertexSet, VertexSet, i64)> = match (*s, flavor) {
                        (s, _) if s == EDGE => vec![(sig.insert(i), tau, x)],
                        (s, Flavor::Chain) if s == HIGH => vec![(sig, tau.insert(i), x), (sig, tau, x)],
                        (_, Flavor::Chain) => vec![(sig, tau, x)],
                        (s, Flavor::Cochain) if s == HIGH => vec![(sig, tau.insert(i), x)],
                        (_, Flavor::Cochain) => vec![(sig, tau, x), (sig, tau.insert(i), -x)],
                    };
                    opts
                })
                .collect();
            partial = next;
        }
        for (sig, tau, x) in partial {
            out.add_term(CellWord::new(sig, tau, flavor)?, x);
        }
    }
    Ok(out)
}

/// `u^σt^τ ⌣ u^{σ'}t^{τ'}` on single words.
pub fn cup_words(a: CellWord, b: CellWord, k: &SimplicialComplex) -> Option<(CellWord, i64)> {
    let (s, t, s2, t2) = (a.sigma(), a.tau(), b.sigma(), b.tau());
    if !s2.is_disjoint(s | t) || !k.contains(s | s2) {
        return None;
    }
    let w = CellWord::cochain(s | s2, t | (t2 - s)).ok()?;
    Some((w, sign(set_shuffle(s, s2))))
}

/// The word-basis cup product, extended bilinearly.
pub fn word_cup(a: &CellChain, b: &CellChain, k: &SimplicialComplex) -> Result<CellChain> {
    if a.flavor() != Flavor::Cochain || b.flavor() != Flavor::Cochain {
        return Err(MacError::input("cup products take cochains"));
    }
    let mut out = CellChain::zero(Flavor::Cochain);
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            if let Some((w, s)) = cup_words(x, y, k) {
                out.add_term(w, s * cx * cy);
            }
        }
    }
    Ok(out)
}

/// `u^σt^τ ⌢ u_{σ''}ε_{τ''}` on single words.
pub fn cap_words(a: CellWord, z: CellWord) -> Vec<(CellWord, i64)> {
    let (s, t, s2, t2) = (a.sigma(), a.tau(), z.sigma(), z.tau());
    if !s.is_subset(s2) || !t.is_subset(s2 | t2) {
        return Vec::new();
    }
    let rest = s2 - s;
    let sg = sign(set_shuffle(rest, s));
    (t - s2)
        .subsets()
        .map(|g| (CellWord::chain(rest, t2 - g).expect("disjoint"), sg))
        .collect()
}

/// The word-basis cap product, extended bilinearly.
pub fn word_cap(a: &CellChain, z: &CellChain) -> Result<CellChain> {
    if a.flavor() != Flavor::Cochain || z.flavor() != Flavor::Chain {
        return Err(MacError::input("cap products take a cochain and a chain"));
    }
    let mut out = CellChain::zero(Flavor::Chain);
    for (x, cx) in a.terms() {
        for (y, cy) in z.terms() {
            for (w, s) in cap_words(x, y) {
                out.add_term(w, s * cx * cy);
            }
        }
    }
    Ok(out)
}

/// The Kronecker pairing of dual word bases.
pub fn evaluate(a: &CellChain, z: &CellChain) -> Result<i64> {
    if a.flavor() != Flavor::Cochain || z.flavor() != Flavor::Chain {
        return Err(MacError::input("evaluation takes a cochain and a chain"));
    }
    Ok(a.terms()
        .map(|(w, v)| {
            let dual = CellWord::chain(w.sigma(), w.tau()).expect("valid word");
            v * z.coefficient(&dual)
        })
        .sum())
}

/// The orientation class of `(D¹,S⁰)^K`: `μ` of a generator of `H̃_{n-1}(K)`,
/// with the least word carrying `+1`.
pub fn fundamental_class(k: &SimplicialComplex) -> Result<CellChain> {
    let n = k.dim() + 1;
    if n < 0 {
        return Err(MacError::NotManifold("the void complex has no top class".into()));
    }
    let top = crate::cells::cellular_homology(k, crate::cells::HomologyRoute::SubsetSum)?.get(n as i32);
    if top.rank != 1 || !top.torsion.is_empty() {
        return Err(MacError::NotManifold(format!("top homology in degree {n} is {top}, not Z")));
    }
    let cells = k.simplices().into_iter().map(|s| (s.len() as i32 - 1, s));
    let chains = BasedComplex::new(Direction::Lowering, cells, |s: &VertexSet| {
        s.iter()
            .enumerate()
            .map(|(pos, v)| (s.remove(v), sign(pos)))
            .collect()
    })?;
    let gens = chains.generators(n as i32 - 1);
    let [gen] = gens.as_slice() else {
        return Err(MacError::NotManifold(format!("H̃_{}(K) is not Z", n - 1)));
    };
    let full = k.label_set();
    let mut out = CellChain::zero(Flavor::Chain);
    for (s, v) in gen {
        out.add_term(mu_iso(*s, full)?, to_i64(v)?);
    }
    if out.terms().next().is_some_and(|(_, v)| v < 0) {
        out = out.neg();
    }
    Ok(out)
}

/// The free part of capping with `Γ` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityDegree {
    pub p: usize,
    pub cohomology_rank: usize,
    pub homology_rank: usize,
    /// Row `i`: the free coordinates of `g_i ⌢ Γ` for the `i`-th free generator of `H^p`.
    pub matrix: Vec<Vec<BigInt>>,
    pub unimodular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub dimension: usize,
    pub fundamental_class: CellChain,
    pub degrees: Vec<DualityDegree>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|d| d.unimodular)
    }
}

/// Checks that `- ⌢ Γ` maps the free part of `H^p` isomorphically onto the
/// free part of `H_{n-p}` for every `p`.
pub fn poincare_duality_check(k: &SimplicialComplex) -> Result<DualityReport> {
    let gamma = fundamental_class(k)?;
    let n = (k.dim() + 1) as usize;
    let cochains = WordComplex::new(k, Flavor::Cochain)?;
    let chains = WordComplex::new(k, Flavor::Chain)?;
    let mut degrees = Vec::new();
    for p in 0..=n {
        let q = (n - p) as i32;
        let mut offsets = BTreeMap::new();
        let mut homology_rank = 0;
        for omega in k.label_set().subsets() {
            let r = chains.summand(omega).solver(q).group().rank;
            if r > 0 {
                offsets.insert(omega, homology_rank);
                homology_rank += r;
            }
        }
        let gens = cochains.free_generators(p)?;
        let mut matrix = Vec::with_capacity(gens.len());
        for (_, _, g) in &gens {
            let capped = word_cap(g, &gamma)?;
            let mut row = vec![BigInt::zero(); homology_rank];
            for (omega, coords) in chains.class_of(&capped)? {
                let off = offsets[&omega];
                for (j, x) in coords.free.into_iter().enumerate() {
                    row[off + j] = x;
                }
            }
            matrix.push(row);
        }
        let unimodular = gens.len() == homology_rank && (homology_rank == 0 || determinant(&matrix).abs().is_one());
        degrees.push(DualityDegree {
            p,
            cohomology_rank: gens.len(),
            homology_rank,
            matrix,
            unimodular,
        });
    }
    Ok(DualityReport {
        dimension: n,
        fundamental_class: gamma,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::catalog::*;

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::of(l)
    }

    fn sc(terms: &[(&[usize], i64)]) -> SimplexChain {
        terms.iter().map(|(s, v)| (vs(s), *v)).collect()
    }

    fn cw(s: &[usize], t: &[usize]) -> CellChain {
        CellChain::from_word(CellWord::cochain(vs(s), vs(t)).unwrap())
    }

    fn chw(s: &[usize], t: &[usize]) -> CellWord {
        CellWord::chain(vs(s), vs(t)).unwrap()
    }

    #[test]
    fn interval_table() {
        let i = interval();
        let (tl, t, u) = (&[1usize][..], &[2usize][..], &[1usize, 2][..]);
        let delta = sc(&[(tl, 1), (t, 1)]);
        assert_eq!(simplicial_cup(&sc(&[(t, 1)]), &sc(&[(t, 1)]), &i), sc(&[(t, 1)]));
        assert_eq!(simplicial_cup(&sc(&[(u, 1)]), &sc(&[(t, 1)]), &i), sc(&[(u, 1)]));
        assert!(simplicial_cup(&sc(&[(t, 1)]), &sc(&[(u, 1)]), &i).is_empty());
        assert_eq!(simplicial_cup(&delta, &delta, &i), delta);
        assert_eq!(simplicial_cap(&sc(&[(u, 1)]), &sc(&[(u, 1)])), sc(&[(tl, 1)]));
        let eps = sc(&[(t, 1), (tl, -1)]);
        assert_eq!(simplicial_cap(&sc(&[(t, 1)]), &eps), sc(&[(t, 1)]));
        assert_eq!(simplicial_cap(&delta, &sc(&[(u, 1)])), sc(&[(u, 1)]));
    }

    #[test]
    fn shuffle_signs() {
        assert_eq!(shuffle_sign(&[1, 0], &[0, 1]), 1);
        assert_eq!(shuffle_sign(&[0, 1], &[1, 0]), -1);
        assert_eq!(shuffle_sign(&[1, 1, 1], &[1, 1, 1]), -1);
        assert_eq!(set_shuffle(vs(&[2]), vs(&[1])), 1);
    }

    #[test]
    fn heptagon_cup_example() {
        let k = heptagon_sphere();
        let c = word_cup(&cw(&[1, 2], &[3]), &cw(&[5, 6], &[4, 7]), &k).unwrap();
        assert_eq!(c, cw(&[1, 2, 5, 6], &[3, 4, 7]));
    }

    #[test]
    fn unit_for_cup_and_cap() {
        let k = pentagon();
        let one = CellChain::from_word(CellWord::void(Flavor::Cochain));
        let a = cw(&[1], &[3, 4]);
        assert_eq!(word_cup(&one, &a, &k).unwrap(), a);
        assert_eq!(word_cup(&a, &one, &k).unwrap(), a);
        let z = CellChain::from_word(chw(&[2, 3], &[5]));
        assert_eq!(word_cap(&one, &z).unwrap(), z);
    }

    #[test]
    fn whitney_on_one_factor_is_simplicial() {
        let k = SimplicialComplex::from_facet_lists(3, &[&[1, 2], &[2, 3]]);
        let sub = ProductSubcomplex::full(vec![k.clone()]);
        let lift = |c: &SimplexChain| -> ProductChain { c.iter().map(|(s, v)| (vec![*s], *v)).collect() };
        let a = sc(&[(&[1], 1), (&[2], 2)]);
        let b = sc(&[(&[2, 3], 1), (&[1, 2], -1)]);
        let cup = whitney_cup(&lift(&a), &lift(&b), &sub).unwrap();
        assert_eq!(cup, lift(&simplicial_cup(&a, &b, &k)));
        let z = sc(&[(&[1, 2], 3), (&[2, 3], 1)]);
        let cap = whitney_cap(&lift(&b), &lift(&z), &sub).unwrap();
        assert_eq!(cap, lift(&simplicial_cap(&b, &z)));
    }

    #[test]
    fn subcomplex_must_be_closed() {
        let cells = vec![vec![EDGE]];
        assert!(ProductSubcomplex::new(vec![interval()], cells).is_err());
        let ok = vec![vec![EDGE], vec![LOW], vec![HIGH]];
        assert!(ProductSubcomplex::new(vec![interval()], ok).is_ok());
    }

    #[test]
    fn word_product_conversions_round_trip() {
        let c = cw(&[1], &[3]).add(&cw(&[], &[2]).scale(3)).unwrap();
        assert_eq!(product_to_words(&words_to_product(&c, 4), Flavor::Cochain).unwrap(), c);
        let z = CellChain::from_word(chw(&[2], &[1, 3]));
        assert_eq!(product_to_words(&words_to_product(&z, 3), Flavor::Chain).unwrap(), z);
    }

    #[test]
    fn whitney_agrees_with_words_on_pentagon() {
        let k = pentagon();
        let sub = ProductSubcomplex::polyhedral(&k);
        let words: Vec<CellWord> = k
            .simplices()
            .into_iter()
            .flat_map(|s| (k.label_set() - s).subsets().map(move |t| CellWord::cochain(s, t).unwrap()))
            .collect();
        for &a in &words {
            let pa = words_to_product(&CellChain::from_word(a), 5);
            for &b in &words {
                let pb = words_to_product(&CellChain::from_word(b), 5);
                let w = word_cup(&CellChain::from_word(a), &CellChain::from_word(b), &k).unwrap();
                let p = whitney_cup(&pa, &pb, &sub).unwrap();
                assert_eq!(product_to_words(&p, Flavor::Cochain).unwrap(), w, "{a} ⌣ {b}");
            }
        }
    }

    #[test]
    fn heptagon_cap_with_gamma() {
        let k = heptagon_sphere();
        let gamma = fundamental_class(&k).unwrap();
        assert_eq!(gamma.len(), 14);
        assert_eq!(gamma.coefficient(&chw(&[1, 2, 4, 5], &[3, 6, 7])), 1);
        let c = word_cap(&cw(&[1, 2], &[3]), &gamma).unwrap();
        let want = CellChain::from_terms(
            Flavor::Chain,
            [
                (chw(&[4, 5], &[6, 7]), 1),
                (chw(&[4, 6], &[5, 7]), -1),
                (chw(&[5, 6], &[4, 7]), 1),
                (chw(&[4, 5], &[3, 6, 7]), 1),
                (chw(&[4, 6], &[3, 5, 7]), -1),
                (chw(&[5, 6], &[3, 4, 7]), 1),
            ],
        )
        .unwrap();
        assert_eq!(c, want);
    }

    #[test]
    fn duality_on_small_spheres() {
        for k in [pentagon(), SimplicialComplex::simplex_boundary(4), two_points()] {
            let r = poincare_duality_check(&k).unwrap();
            assert!(r.holds(), "{:?}", r.degrees);
        }
        assert!(fundamental_class(&SimplicialComplex::from_facet_lists(3, &[&[1, 2], &[3]])).is_err());
    }

    #[test]
    fn gamma_for_two_points() {
        let g = fundamental_class(&two_points()).unwrap();
        let want = CellChain::from_terms(Flavor::Chain, [(chw(&[1], &[2]), 1), (chw(&[2], &[1]), -1)]).unwrap();
        assert_eq!(g, want);
    }
}
