//! The differential graded algebra `R*_K(J)` on generators `ṽ^i` (degree
//! `j_i`) and `ũ^i` (degree `j_i - 1`) with `dũ^i = ṽ^i`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::cells::{sign, CellChain, CellWord, Flavor, WordClass, WORD_COMPLEX_CAP};
use crate::error::{MacError, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::homology::{to_i64, BasedComplex, Direction, GradedHomology};
use crate::simplicial::{JTuple, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// `ṽ^σ ũ^τ`, written in increasing position order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DgaMonomial {
    sigma: VertexSet,
    tau: VertexSet,
}

impl DgaMonomial {
    pub const ONE: DgaMonomial = DgaMonomial {
        sigma: VertexSet::EMPTY,
        tau: VertexSet::EMPTY,
    };

    pub fn sigma(&self) -> VertexSet {
        self.sigma
    }

    pub fn tau(&self) -> VertexSet {
        self.tau
    }

    pub fn omega(&self) -> VertexSet {
        self.sigma | self.tau
    }
}

impl fmt::Display for DgaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return f.write_str("1");
        }
        if !self.sigma.is_empty() {
            write!(f, "v{}", self.sigma)?;
        }
        if !self.tau.is_empty() {
            write!(f, "u{}", self.tau)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DgaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An integer combination of normal-form monomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DgaElement {
    terms: BTreeMap<DgaMonomial, i64>,
}

impl DgaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(x: DgaMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(x, 1);
        e
    }

    pub fn add_term(&mut self, x: DgaMonomial, v: i64) {
        if v == 0 {
            return;
        }
        let e = self.terms.entry(x).or_insert(0);
        *e = e.checked_add(v).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&x);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (DgaMonomial, i64)> + '_ {
        self.terms.iter().map(|(x, v)| (*x, *v))
    }

    pub fn coefficient(&self, x: &DgaMonomial) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &DgaElement) -> DgaElement {
        let mut out = self.clone();
        for (x, v) in other.terms() {
            out.add_term(x, v);
        }
        out
    }

    pub fn scale(&self, c: i64) -> DgaElement {
        let mut out = Self::zero();
        for (x, v) in self.terms() {
            out.add_term(x, v.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    /// `ṽ ↦ u`, `ũ ↦ t`; meaningful for `J = (1,...,1)`.
    pub fn to_cochain(&self) -> CellChain {
        let mut out = CellChain::zero(Flavor::Cochain);
        for (x, v) in self.terms() {
            out.add_term(CellWord::cochain(x.sigma, x.tau).expect("disjoint"), v);
        }
        out
    }

    pub fn from_cochain(c: &CellChain) -> Result<DgaElement> {
        if c.flavor() != Flavor::Cochain {
            return Err(MacError::input("expected a cochain"));
        }
        let mut out = Self::zero();
        for (w, v) in c.terms() {
            out.add_term(
                DgaMonomial {
                    sigma: w.sigma(),
                    tau: w.tau(),
                },
                v,
            );
        }
        Ok(out)
    }
}

impl fmt::Display for DgaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (x, v)) in self.terms().enumerate() {
            let mag = v.unsigned_abs();
            match (k, v < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mag != 1 {
                write!(f, "{mag} ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DgaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `R*_K(J)`.
pub struct Dga {
    k: SimplicialComplex,
    j: JTuple,
    summands: Vec<OnceLock<BasedComplex<DgaMonomial>>>,
}

impl Dga {
    pub fn new(k: &SimplicialComplex, j: &JTuple) -> Result<Self> {
        j.check_len(k.m())?;
        let summands = if k.m() <= WORD_COMPLEX_CAP {
            (0..1usize << k.m()).map(|_| OnceLock::new()).collect()
        } else {
            Vec::new()
        };
        Ok(Dga {
            k: k.clone(),
            j: j.clone(),
            summands,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.k
    }

    pub fn j(&self) -> &JTuple {
        &self.j
    }

    pub fn monomial(&self, sigma: VertexSet, tau: VertexSet) -> Result<DgaMonomial> {
        if !sigma.is_disjoint(tau) {
            return Err(MacError::input(format!("ṽ-part {sigma} meets ũ-part {tau}")));
        }
        if !(sigma | tau).is_subset(self.k.label_set()) {
            return Err(MacError::input(format!("labels outside [1, {}]", self.k.m())));
        }
        if !self.k.contains(sigma) {
            return Err(MacError::input(format!("ṽ{sigma} lies in the Stanley-Reisner ideal")));
        }
        Ok(DgaMonomial { sigma, tau })
    }

    pub fn element(&self, sigma: VertexSet, tau: VertexSet) -> Result<DgaElement> {
        Ok(DgaElement::from_monomial(self.monomial(sigma, tau)?))
    }

    fn check(&self, a: &DgaElement) -> Result<()> {
        for (x, _) in a.terms() {
            self.monomial(x.sigma, x.tau)?;
        }
        Ok(())
    }

    fn gen_degree(&self, i: usize, is_v: bool) -> usize {
        self.j.get(i) - usize::from(!is_v)
    }

    pub fn degree(&self, x: &DgaMonomial) -> usize {
        x.sigma.iter().map(|i| self.j.get(i)).sum::<usize>()
            + x.tau.iter().map(|i| self.j.get(i) - 1).sum::<usize>()
    }

    /// The common degree of all terms (`Some(0)` for zero).
    pub fn homogeneous_degree(&self, a: &DgaElement) -> Option<usize> {
        let mut it = a.terms().map(|(x, _)| self.degree(&x));
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    /// The product of two normal-form monomials, normalized.
    pub fn multiply_monomials(&self, a: DgaMonomial, b: DgaMonomial) -> Option<(DgaMonomial, i64)> {
        let sa = a.omega();
        if !b.sigma.is_disjoint(sa) {
            return None;
        }
        if (b.tau & sa).iter().any(|i| self.j.get(i) != 1) {
            return None;
        }
        let sigma = a.sigma | b.sigma;
        if !self.k.contains(sigma) {
            return None;
        }
        let mut parity = 0usize;
        for i in b.omega().iter() {
            let dy = self.gen_degree(i, b.sigma.contains(i));
            if dy % 2 == 0 {
                continue;
            }
            for l in sa.iter().filter(|&l| l > i) {
                parity += self.gen_degree(l, a.sigma.contains(l));
            }
        }
        let tau = (a.tau | b.tau) - sigma;
        Some((DgaMonomial { sigma, tau }, sign(parity)))
    }

    pub fn multiply(&self, a: &DgaElement, b: &DgaElement) -> Result<DgaElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = DgaElement::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                if let Some((z, s)) = self.multiply_monomials(x, y) {
                    out.add_term(z, s * cx * cy);
                }
            }
        }
        Ok(out)
    }

    fn monomial_differential(&self, x: DgaMonomial) -> Vec<(DgaMonomial, i64)> {
        let mut out = Vec::new();
        let mut before = 0usize;
        for i in x.omega().iter() {
            let is_v = x.sigma.contains(i);
            if !is_v {
                let sigma = x.sigma.insert(i);
                if self.k.contains(sigma) {
                    out.push((
                        DgaMonomial {
                            sigma,
                            tau: x.tau.remove(i),
                        },
                        sign(before),
                    ));
                }
            }
            before += self.gen_degree(i, is_v);
        }
        out
    }

    /// Leibniz extension of `dũ^i = ṽ^i`, `dṽ^i = 0`.
    pub fn differential(&self, a: &DgaElement) -> Result<DgaElement> {
        self.check(a)?;
        let mut out = DgaElement::zero();
        for (x, v) in a.terms() {
            for (y, s) in self.monomial_differential(x) {
                out.add_term(y, s * v);
            }
        }
        Ok(out)
    }

    fn summand_complex(&self, omega: VertexSet) -> BasedComplex<DgaMonomial> {
        let cells: Vec<(i32, DgaMonomial)> = self
            .k
            .faces_within(omega)
            .into_iter()
            .map(|s| {
                let x = DgaMonomial {
                    sigma: s,
                    tau: omega - s,
                };
                (self.degree(&x) as i32, x)
            })
            .collect();
        BasedComplex::new(Direction::Raising, cells, |x| self.monomial_differential(*x))
            .expect("d preserves ω and squares to zero")
    }

    /// The subcomplex spanned by monomials with `σ ∪ τ = ω`.
    pub fn summand(&self, omega: VertexSet) -> Result<&BasedComplex<DgaMonomial>> {
        if self.summands.is_empty() {
            return Err(MacError::resource(format!(
                "algebra cohomology limited to {WORD_COMPLEX_CAP} vertices, got {}",
                self.k.m()
            )));
        }
        if !omega.is_subset(self.k.label_set()) {
            return Err(MacError::input(format!("{omega} is not a subset of [1, {}]", self.k.m())));
        }
        Ok(self.summands[omega.bits() as usize].get_or_init(|| self.summand_complex(omega)))
    }

    /// `H*(R*_K(J))`, summand by summand.
    pub fn cohomology(&self) -> Result<GradedHomology> {
        let mut out = GradedHomology::new();
        for omega in self.k.label_set().subsets() {
            for (p, h) in self.summand(omega)?.homology_all() {
                out.add(p, &h);
            }
        }
        Ok(out)
    }

    pub fn is_cocycle(&self, a: &DgaElement) -> Result<bool> {
        Ok(self.differential(a)?.is_zero())
    }

    /// The class of a homogeneous cocycle; an input error otherwise.
    pub fn class_of(&self, a: &DgaElement) -> Result<WordClass> {
        self.check(a)?;
        let p = self
            .homogeneous_degree(a)
            .ok_or_else(|| MacError::input("classes need a homogeneous element"))?;
        let mut by_omega: BTreeMap<VertexSet, Vec<(DgaMonomial, i64)>> = BTreeMap::new();
        for (x, v) in a.terms() {
            by_omega.entry(x.omega()).or_default().push((x, v));
        }
        let mut out = WordClass::new();
        for (omega, terms) in by_omega {
            let c = self.summand(omega)?.class_of(p as i32, &terms)?;
            if !c.is_zero() {
                out.insert(omega, c);
            }
        }
        Ok(out)
    }

    /// `η_J(σ*_ω) = (-1)^{(σ,ω)_J} ṽ^σ ũ^{ω∖σ}`.
    pub fn eta(&self, sigma: VertexSet, omega: VertexSet) -> Result<DgaElement> {
        if !sigma.is_subset(omega) {
            return Err(MacError::input(format!("{sigma} is not contained in {omega}")));
        }
        let x = self.monomial(sigma, omega - sigma)?;
        let mut e = DgaElement::zero();
        e.add_term(x, eta_sign(sigma, omega, &self.j));
        Ok(e)
    }
}

/// `(-1)^{(σ,ω)_J}`.
pub fn eta_sign(sigma: VertexSet, omega: VertexSet, j: &JTuple) -> i64 {
    let mut total = 0usize;
    for k in omega.iter() {
        let w = j.get(k) - 1;
        total += w * sigma.count_above(k);
        total += w * omega.iter().filter(|&r| r > k).map(|r| j.get(r) - 1).sum::<usize>();
    }
    sign(total)
}

/// `ϖ_i: R*_K → R*_{K(v_i)}` (both with `J = (1,...,1)`): relabel by `χ_i`
/// and append `u^{i+1}` when `i ∈ σ ∪ τ`.
pub fn varpi_i(a: &DgaElement, k: &SimplicialComplex, i: usize) -> Result<DgaElement> {
    if i == 0 || i > k.m() {
        return Err(MacError::input(format!("no vertex {i} in [1, {}]", k.m())));
    }
    let source = Dga::new(k, &JTuple::ones(k.m()))?;
    source.check(a)?;
    let mut out = DgaElement::zero();
    for (x, v) in a.terms() {
        let sigma = x.sigma.shift_above(i, 1);
        let tau = x.tau.shift_above(i, 1);
        if x.omega().contains(i) {
            let s = sign(sigma.count_above(i + 1));
            out.add_term(
                DgaMonomial {
                    sigma: sigma.insert(i + 1),
                    tau,
                },
                s * v,
            );
        } else {
            out.add_term(DgaMonomial { sigma, tau }, v);
        }
    }
    Ok(out)
}

/// The composite of `ϖ_i` along the wedge sequence of `K(J)`.
pub fn varpi_composite(a: &DgaElement, k: &SimplicialComplex, j: &JTuple) -> Result<DgaElement> {
    j.check_len(k.m())?;
    let mut current = k.clone();
    let mut out = a.clone();
    for (pos, _) in SimplicialComplex::wedge_sequence(j) {
        out = varpi_i(&out, &current, pos)?;
        current = current.simplicial_wedge(pos)?;
    }
    Ok(out)
}

/// The embedding `R*_K(J) → R*_{K(J)}`, `ṽ^k ↦ u^{k̃}u^{B̃_k}`,
/// `ũ^k ↦ t^{k̃}u^{B̃_k}`.
pub struct VarpiEmbedding {
    pub source: Dga,
    pub target: Dga,
}

impl VarpiEmbedding {
    pub fn new(k: &SimplicialComplex, j: &JTuple) -> Result<Self> {
        let kj = k.kj_construction(j)?;
        Ok(VarpiEmbedding {
            source: Dga::new(k, j)?,
            target: Dga::new(&kj, &JTuple::ones(kj.m()))?,
        })
    }

    pub fn map_monomial(&self, x: DgaMonomial) -> DgaMonomial {
        let j = self.source.j();
        let heads: VertexSet = x.sigma.iter().map(|k| j.head(k)).collect();
        let t_heads: VertexSet = x.tau.iter().map(|k| j.head(k)).collect();
        let tails = x.omega().iter().fold(VertexSet::EMPTY, |acc, k| acc | j.tail(k));
        DgaMonomial {
            sigma: heads | tails,
            tau: t_heads,
        }
    }

    pub fn map(&self, a: &DgaElement) -> Result<DgaElement> {
        self.source.check(a)?;
        let mut out = DgaElement::zero();
        for (x, v) in a.terms() {
            out.add_term(self.map_monomial(x), v);
        }
        Ok(out)
    }
}

/// Products of cocycle classes, pairwise and for the requested triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    pub classes: Vec<WordClass>,
    /// `pairs[a][b]`: the class of `x_a · x_b`.
    pub pairs: Vec<Vec<WordClass>>,
    pub triples: Vec<((usize, usize, usize), DgaElement, WordClass)>,
}

pub fn ring_product_table(
    dga: &Dga,
    cocycles: &[DgaElement],
    triples: &[(usize, usize, usize)],
) -> Result<ProductTable> {
    for (n, c) in cocycles.iter().enumerate() {
        if !dga.is_cocycle(c)? {
            return Err(MacError::input(format!("element {n} ({c}) is not a cocycle")));
        }
    }
    let classes = cocycles.iter().map(|c| dga.class_of(c)).collect::<Result<Vec<_>>>()?;
    let pairs = cocycles
        .iter()
        .map(|a| {
            cocycles
                .iter()
                .map(|b| dga.class_of(&dga.multiply(a, b)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out_triples = Vec::new();
    for &(a, b, c) in triples {
        let get = |n: usize| {
            cocycles
                .get(n)
                .ok_or_else(|| MacError::input(format!("no element {n} in the list")))
        };
        let p = dga.multiply(&dga.multiply(get(a)?, get(b)?)?, get(c)?)?;
        let cls = dga.class_of(&p)?;
        out_triples.push(((a, b, c), p, cls));
    }
    Ok(ProductTable {
        classes,
        pairs,
        triples: out_triples,
    })
}

/// A cocycle of `R*_K(J)` representing a generator of `H̃^q(K_ω)` through `η_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingGenerator {
    pub omega: VertexSet,
    /// Degree in `R*_K(J)`.
    pub degree: usize,
    /// Degree `q` of the simplicial class in `H̃^q(K_ω)`.
    pub simplicial_degree: i32,
    /// `None` for a free generator, otherwise the order of the torsion summand.
    pub order: Option<BigUint>,
    pub cocycle: DgaElement,
}

/// A product of generators with its class written in the generators of its summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingProduct {
    pub factors: Vec<usize>,
    pub product: DgaElement,
    /// Nonzero coefficients on [`RingStructure::generators`].
    pub expansion: Vec<(usize, BigInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingStructure {
    pub generators: Vec<RingGenerator>,
    /// Every ordered pair with a nonzero product.
    pub pairs: Vec<RingProduct>,
    pub triples: Vec<RingProduct>,
}

fn simplicial_cochains(k: &SimplicialComplex, omega: VertexSet) -> Result<BasedComplex<VertexSet>> {
    let cells = k.faces_within(omega).into_iter().map(|s| (s.len() as i32 - 1, s));
    BasedComplex::new(Direction::Raising, cells, |s: &VertexSet| {
        (omega - *s)
            .iter()
            .filter(|&i| k.contains(s.insert(i)))
            .map(|i| (s.insert(i), sign(s.count_below(i))))
            .collect()
    })
}

struct EtaSummand {
    omega: VertexSet,
    cochains: BasedComplex<VertexSet>,
    first: usize,
    /// Generator count per simplicial degree, in order.
    counts: BTreeMap<i32, usize>,
}

impl Dga {
    /// Generators of `H*(R*_K(J))` summand by summand, each `η_J` of a
    /// simplicial cocycle of `K_ω`; within a degree torsion comes first.
    fn eta_summands(&self) -> Result<(Vec<RingGenerator>, Vec<EtaSummand>)> {
        if self.k.m() > WORD_COMPLEX_CAP {
            return Err(MacError::resource(format!(
                "ring computations limited to {WORD_COMPLEX_CAP} vertices, got {}",
                self.k.m()
            )));
        }
        let mut generators = Vec::new();
        let mut summands = Vec::new();
        for omega in self.k.label_set().subsets() {
            let cochains = simplicial_cochains(&self.k, omega)?;
            let first = generators.len();
            let mut counts = BTreeMap::new();
            let degrees: Vec<i32> = cochains.degrees().collect();
            for q in degrees {
                let group = cochains.solver(q).group().clone();
                let gens = cochains.generators(q);
                counts.insert(q, gens.len());
                for (n, g) in gens.into_iter().enumerate() {
                    let mut cocycle = DgaElement::zero();
                    for (s, v) in g {
                        cocycle = cocycle.add(&self.eta(s, omega)?.scale(to_i64(&v)?));
                    }
                    let degree = self
                        .homogeneous_degree(&cocycle)
                        .ok_or_else(|| MacError::invariant("η_J of a cocycle is not homogeneous"))?;
                    generators.push(RingGenerator {
                        omega,
                        degree,
                        simplicial_degree: q,
                        order: group.torsion.get(n).cloned(),
                        cocycle,
                    });
                }
            }
            if generators.len() > first {
                summands.push(EtaSummand {
                    omega,
                    cochains,
                    first,
                    counts,
                });
            }
        }
        Ok((generators, summands))
    }

    /// Writes the class of a cocycle supported on one `ω` in the `η_J` generators.
    fn expand(&self, a: &DgaElement, summands: &[EtaSummand]) -> Result<Vec<(usize, BigInt)>> {
        let Some((x, _)) = a.terms().next() else {
            return Ok(Vec::new());
        };
        let omega = x.omega();
        if a.terms().any(|(y, _)| y.omega() != omega) {
            return Err(MacError::invariant("a product of summand cocycles spans several summands"));
        }
        if !self.is_cocycle(a)? {
            return Err(MacError::invariant("a product of cocycles is not a cocycle"));
        }
        let Some(s) = summands.iter().find(|s| s.omega == omega) else {
            return Ok(Vec::new());
        };
        let q = x.sigma.len() as i32 - 1;
        let pulled: Vec<(VertexSet, i64)> = a
            .terms()
            .map(|(y, v)| (y.sigma, v * eta_sign(y.sigma, omega, &self.j)))
            .collect();
        let coords = s.cochains.class_of(q, &pulled)?;
        let offset = s.first + s.counts.range(..q).map(|(_, n)| n).sum::<usize>();
        Ok(coords
            .torsion
            .into_iter()
            .map(|(r, _)| r)
            .chain(coords.free)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (offset + n, c))
            .collect())
    }

    pub fn ring_generators(&self) -> Result<Vec<RingGenerator>> {
        Ok(self.eta_summands()?.0)
    }

    /// Generators of the cohomology, all nonzero pairwise products, and the
    /// requested triple products, each product expanded in the generators.
    pub fn ring_structure(&self, triples: &[(usize, usize, usize)]) -> Result<RingStructure> {
        let (generators, summands) = self.eta_summands()?;
        let mut pairs = Vec::new();
        for (a, ga) in generators.iter().enumerate() {
            for (b, gb) in generators.iter().enumerate() {
                let product = self.multiply(&ga.cocycle, &gb.cocycle)?;
                if product.is_zero() {
                    continue;
                }
                let expansion = self.expand(&product, &summands)?;
                pairs.push(RingProduct {
                    factors: vec![a, b],
                    product,
                    expansion,
                });
            }
        }
        let mut out_triples = Vec::new();
        for &(a, b, c) in triples {
            let get = |n: usize| {
                generators
                    .get(n)
                    .map(|g| &g.cocycle)
                    .ok_or_else(|| MacError::input(format!("no generator {n}")))
            };
            let product = self.multiply(&self.multiply(get(a)?, get(b)?)?, get(c)?)?;
            let expansion = self.expand(&product, &summands)?;
            out_triples.push(RingProduct {
                factors: vec![a, b, c],
                product,
                expansion,
            });
        }
        Ok(RingStructure {
            generators,
            pairs,
            triples: out_triples,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::ClassCoords;
    use crate::products::word_cup;
    use crate::simplicial::catalog::*;

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::of(l)
    }

    fn jt(e: &[usize]) -> JTuple {
        JTuple::new(e.to_vec()).unwrap()
    }

    #[test]
    fn relations() {
        let k = two_points();
        let r = Dga::new(&k, &jt(&[2, 2])).unwrap();
        let u1 = r.element(vs(&[]), vs(&[1])).unwrap();
        let u2 = r.element(vs(&[]), vs(&[2])).unwrap();
        let v1 = r.element(vs(&[1]), vs(&[])).unwrap();
        assert!(r.multiply(&u1, &v1).unwrap().is_zero());
        assert!(r.multiply(&v1, &u1).unwrap().is_zero());
        assert!(r.multiply(&u1, &u1).unwrap().is_zero());
        let a = r.multiply(&u1, &u2).unwrap();
        let b = r.multiply(&u2, &u1).unwrap();
        assert_eq!(a, b.scale(-1));
        assert_eq!(a, r.element(vs(&[]), vs(&[1, 2])).unwrap());

        let r1 = Dga::new(&k, &jt(&[1, 1])).unwrap();
        let u1 = r1.element(vs(&[]), vs(&[1])).unwrap();
        let v1 = r1.element(vs(&[1]), vs(&[])).unwrap();
        assert_eq!(r1.multiply(&u1, &u1).unwrap(), u1);
        assert_eq!(r1.multiply(&v1, &u1).unwrap(), v1);
        assert!(r1.multiply(&u1, &v1).unwrap().is_zero());
        assert!(r1.multiply(&v1, &r1.element(vs(&[2]), vs(&[])).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn leibniz_on_two_generators() {
        let k = two_points();
        for j in [jt(&[2, 3]), jt(&[1, 2]), jt(&[3, 1])] {
            let r = Dga::new(&k, &j).unwrap();
            let x = r.element(vs(&[]), vs(&[1, 2])).unwrap();
            let mut want = r.element(vs(&[1]), vs(&[2])).unwrap();
            want.add_term(r.monomial(vs(&[2]), vs(&[1])).unwrap(), sign(j.get(1) - 1));
            assert_eq!(r.differential(&x).unwrap(), want);
        }
    }

    #[test]
    fn trivial_j_matches_words() {
        let k = pentagon();
        let r = Dga::new(&k, &JTuple::ones(5)).unwrap();
        let monos: Vec<DgaMonomial> = k
            .simplices()
            .into_iter()
            .flat_map(|s| (k.label_set() - s).subsets().map(move |t| DgaMonomial { sigma: s, tau: t }))
            .collect();
        for &a in &monos {
            let ea = DgaElement::from_monomial(a);
            let d = r.differential(&ea).unwrap();
            assert_eq!(d.to_cochain(), ea.to_cochain().coboundary(&k).unwrap());
            for &b in &monos {
                let eb = DgaElement::from_monomial(b);
                let p = r.multiply(&ea, &eb).unwrap();
                assert_eq!(p.to_cochain(), word_cup(&ea.to_cochain(), &eb.to_cochain(), &k).unwrap());
            }
        }
    }

    #[test]
    fn eta_signs() {
        assert_eq!(eta_sign(vs(&[1]), vs(&[1, 2]), &jt(&[2, 2])), -1);
        assert_eq!(eta_sign(vs(&[1, 3]), vs(&[1, 2, 3]), &JTuple::ones(3)), 1);
        let r = Dga::new(&two_points(), &jt(&[2, 2])).unwrap();
        let e = r.eta(vs(&[1]), vs(&[1, 2])).unwrap();
        assert_eq!(e, r.element(vs(&[1]), vs(&[2])).unwrap().scale(-1));
        assert!(r.eta(vs(&[1]), vs(&[2])).is_err());
    }

    #[test]
    fn moment_angle_pentagon() {
        let r = Dga::new(&pentagon(), &JTuple::constant(5, 2).unwrap()).unwrap();
        let h = r.cohomology().unwrap();
        assert_eq!(h.betti(), vec![1, 0, 0, 5, 5, 0, 0, 1]);
    }

    #[test]
    fn varpi_one_on_pentagon() {
        let k = pentagon();
        let a = DgaElement::from_monomial(DgaMonomial {
            sigma: vs(&[1]),
            tau: vs(&[3]),
        });
        let b = varpi_i(&a, &k, 1).unwrap();
        assert_eq!(
            b,
            DgaElement::from_monomial(DgaMonomial {
                sigma: vs(&[1, 2]),
                tau: vs(&[4]),
            })
        );
        let one = DgaElement::from_monomial(DgaMonomial::ONE);
        assert_eq!(varpi_i(&one, &k, 3).unwrap(), one);
        assert!(varpi_i(&one, &k, 6).is_err());
    }

    #[test]
    fn embedding_of_two_points() {
        let e = VarpiEmbedding::new(&two_points(), &jt(&[2, 2])).unwrap();
        let m = |s: &[usize], t: &[usize]| DgaMonomial {
            sigma: vs(s),
            tau: vs(t),
        };
        assert_eq!(e.map_monomial(m(&[1], &[])), m(&[1, 2], &[]));
        assert_eq!(e.map_monomial(m(&[], &[1])), m(&[2], &[1]));
        assert_eq!(e.map_monomial(m(&[2], &[])), m(&[3, 4], &[]));
        assert_eq!(e.map_monomial(m(&[], &[2])), m(&[4], &[3]));
        assert_eq!(e.target.complex(), &SimplicialComplex::simplex_boundary(4));
    }

    #[test]
    fn rendering() {
        let x = DgaMonomial {
            sigma: vs(&[1]),
            tau: vs(&[4, 7]),
        };
        assert_eq!(x.to_string(), "v{1}u{4,7}");
        assert_eq!(DgaMonomial::ONE.to_string(), "1");
    }

    fn check_expansions(r: &Dga, ring: &RingStructure) {
        let zero_class = |c: &WordClass| c.values().all(ClassCoords::is_zero);
        for p in &ring.pairs {
            let mut want = DgaElement::zero();
            for (n, c) in &p.expansion {
                want = want.add(&ring.generators[*n].cocycle.scale(to_i64(c).unwrap()));
            }
            let diff = p.product.add(&want.scale(-1));
            assert!(zero_class(&r.class_of(&diff).unwrap()), "{:?}", p.factors);
        }
    }

    #[test]
    fn pentagon_ring() {
        let r = Dga::new(&pentagon(), &JTuple::ones(5)).unwrap();
        let ring = r.ring_structure(&[]).unwrap();
        let degrees: Vec<usize> = ring.generators.iter().map(|g| g.degree).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 10);
        assert_eq!(ring.generators.len(), 12);
        check_expansions(&r, &ring);
        let top = ring.generators.iter().position(|g| g.degree == 2).unwrap();
        let hits = ring
            .pairs
            .iter()
            .filter(|p| ring.generators[p.factors[0]].degree == 1 && !p.expansion.is_empty())
            .inspect(|p| assert_eq!(p.expansion.len(), 1))
            .filter(|p| p.expansion[0].0 == top)
            .count();
        assert_eq!(hits, 20);
    }

    #[test]
    fn torsion_generators_are_labelled() {
        let r = Dga::new(&projective_plane(), &JTuple::ones(6)).unwrap();
        let ring = r.ring_structure(&[]).unwrap();
        let orders: Vec<_> = ring.generators.iter().filter_map(|g| g.order.clone()).collect();
        assert_eq!(orders, vec![BigUint::from(2u32)]);
        check_expansions(&r, &ring);
    }

    #[test]
    fn triples_in_the_moment_angle_pentagon() {
        let r = Dga::new(&pentagon(), &JTuple::constant(5, 2).unwrap()).unwrap();
        let ring = r.ring_structure(&[(1, 2, 3)]).unwrap();
        assert_eq!(ring.generators.len(), 12);
        check_expansions(&r, &ring);
        assert_eq!(ring.triples.len(), 1);
        let top = ring.generators.iter().position(|g| g.degree == 7).unwrap();
        let hits = ring
            .pairs
            .iter()
            .filter(|p| ring.generators[p.factors[0]].degree == 3 && p.expansion.iter().any(|(n, _)| *n == top))
            .count();
        assert_eq!(hits, 5);
    }
}
