//! The cellular (co)chains of `(D¹,S⁰)^K` in the word basis.
//!
//! A chain word `u_σ ε_τ` and a cochain word `u^σ t^τ` (with `σ ∈ K`,
//! `σ ∩ τ = ∅`) have degree `|σ|`. Both differentials preserve `ω = σ ∪ τ`,
//! so the complexes split into summands indexed by `ω ⊆ [m]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{MacError, Result};
use crate::homology::{
    reduced_homology_all_subsets, BasedComplex, ClassCoords, Direction, GradedHomology,
    IntegerChainComplex, SparseMatrix,
};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Largest `m` for which word complexes are materialized.
pub const WORD_COMPLEX_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Chain,
    Cochain,
}

/// `u_σ ε_τ` (chain) or `u^σ t^τ` (cochain). The void word (`σ = τ = ∅`)
/// stands for `t̲_[m]` or `δ^[m]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellWord {
    sigma: VertexSet,
    tau: VertexSet,
    flavor: Flavor,
}

impl CellWord {
    pub fn new(sigma: VertexSet, tau: VertexSet, flavor: Flavor) -> Result<Self> {
        if !sigma.is_disjoint(tau) {
            return Err(MacError::input(format!("u-part {sigma} meets the other part {tau}")));
        }
        Ok(CellWord { sigma, tau, flavor })
    }

    pub fn chain(sigma: VertexSet, tau: VertexSet) -> Result<Self> {
        Self::new(sigma, tau, Flavor::Chain)
    }

    pub fn cochain(sigma: VertexSet, tau: VertexSet) -> Result<Self> {
        Self::new(sigma, tau, Flavor::Cochain)
    }

    pub fn void(flavor: Flavor) -> Self {
        CellWord {
            sigma: VertexSet::EMPTY,
            tau: VertexSet::EMPTY,
            flavor,
        }
    }

    pub fn sigma(&self) -> VertexSet {
        self.sigma
    }

    pub fn tau(&self) -> VertexSet {
        self.tau
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn omega(&self) -> VertexSet {
        self.sigma | self.tau
    }

    pub fn degree(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_void(&self) -> bool {
        self.sigma.is_empty() && self.tau.is_empty()
    }

    /// Checks that the word is a cell of `(D¹,S⁰)^K`.
    pub fn check(&self, k: &SimplicialComplex) -> Result<()> {
        if !self.omega().is_subset(k.label_set()) {
            return Err(MacError::input(format!("{self} has labels outside [1, {}]", k.m())));
        }
        if !k.contains(self.sigma) {
            return Err(MacError::input(format!("{} is not a simplex, so {self} is not a cell", self.sigma)));
        }
        Ok(())
    }

    /// `∂(u_σ ε_τ) = Σ_{i∈σ} (-1)^{(i,σ)} u_{σ∖i} ε_{τ∪i}`.
    pub fn boundary(&self) -> Result<CellChain> {
        if self.flavor != Flavor::Chain {
            return Err(MacError::input("boundary needs a chain word"));
        }
        let mut out = CellChain::zero(Flavor::Chain);
        for i in self.sigma.iter() {
            let w = CellWord {
                sigma: self.sigma.remove(i),
                tau: self.tau.insert(i),
                flavor: Flavor::Chain,
            };
            out.add_term(w, sign(self.sigma.count_below(i)));
        }
        Ok(out)
    }

    /// `d(u^σ t^τ) = Σ_{i∈τ, σ∪i∈K} (-1)^{(i,σ)} u^{σ∪i} t^{τ∖i}`.
    pub fn coboundary(&self, k: &SimplicialComplex) -> Result<CellChain> {
        if self.flavor != Flavor::Cochain {
            return Err(MacError::input("coboundary needs a cochain word"));
        }
        let mut out = CellChain::zero(Flavor::Cochain);
        for i in self.tau.iter() {
            let s = self.sigma.insert(i);
            if !k.contains(s) {
                continue;
            }
            let w = CellWord {
                sigma: s,
                tau: self.tau.remove(i),
                flavor: Flavor::Cochain,
            };
            out.add_term(w, sign(self.sigma.count_below(i)));
        }
        Ok(out)
    }
}

pub(crate) fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn write_labels(f: &mut fmt::Formatter<'_>, prefix: char, s: VertexSet) -> fmt::Result {
    if s.is_empty() {
        return Ok(());
    }
    write!(f, "{prefix}{s}")
}

/// `u{1,2}e{3}` for chains, `u{1,2}t{3}` for cochains, `1` for the void word.
impl fmt::Display for CellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("1");
        }
        write_labels(f, 'u', self.sigma)?;
        let second = match self.flavor {
            Flavor::Chain => 'e',
            Flavor::Cochain => 't',
        };
        write_labels(f, second, self.tau)
    }
}

impl fmt::Debug for CellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `μ(σ_ω) = u_σ ε_{ω∖σ}`.
pub fn mu_iso(sigma: VertexSet, omega: VertexSet) -> Result<CellWord> {
    if !sigma.is_subset(omega) {
        return Err(MacError::input(format!("{sigma} is not contained in {omega}")));
    }
    CellWord::chain(sigma, omega - sigma)
}

/// `η(σ*_ω) = u^σ t^{ω∖σ}`.
pub fn eta_iso(sigma: VertexSet, omega: VertexSet) -> Result<CellWord> {
    if !sigma.is_subset(omega) {
        return Err(MacError::input(format!("{sigma} is not contained in {omega}")));
    }
    CellWord::cochain(sigma, omega - sigma)
}

/// A finite integer combination of words of one flavor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CellChain {
    flavor: Flavor,
    terms: BTreeMap<CellWord, i64>,
}

impl CellChain {
    pub fn zero(flavor: Flavor) -> Self {
        CellChain {
            flavor,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: CellWord) -> Self {
        let mut c = Self::zero(w.flavor);
        c.add_term(w, 1);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (CellWord, i64)>>(flavor: Flavor, terms: I) -> Result<Self> {
        let mut c = Self::zero(flavor);
        for (w, v) in terms {
            if w.flavor != flavor {
                return Err(MacError::input("chains and cochains cannot be mixed"));
            }
            c.add_term(w, v);
        }
        Ok(c)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn add_term(&mut self, w: CellWord, v: i64) {
        debug_assert_eq!(w.flavor, self.flavor);
        if v == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e = e.checked_add(v).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (CellWord, i64)> + '_ {
        self.terms.iter().map(|(w, v)| (*w, *v))
    }

    pub fn coefficient(&self, w: &CellWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CellChain) -> Result<CellChain> {
        if self.flavor != other.flavor {
            return Err(MacError::input("chains and cochains cannot be mixed"));
        }
        let mut out = self.clone();
        for (w, v) in other.terms() {
            out.add_term(w, v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> CellChain {
        let mut out = Self::zero(self.flavor);
        for (w, v) in self.terms() {
            out.add_term(w, v.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn neg(&self) -> CellChain {
        self.scale(-1)
    }

    /// The common degree of all terms, if there is one (`Some(0)` for zero).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(CellWord::degree);
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    /// Terms grouped by `ω = σ ∪ τ`.
    pub fn by_omega(&self) -> BTreeMap<VertexSet, Vec<(CellWord, i64)>> {
        let mut out: BTreeMap<VertexSet, Vec<(CellWord, i64)>> = BTreeMap::new();
        for (w, v) in self.terms() {
            out.entry(w.omega()).or_default().push((w, v));
        }
        out
    }

    pub fn check(&self, k: &SimplicialComplex) -> Result<()> {
        self.terms.keys().try_for_each(|w| w.check(k))
    }

    pub fn boundary(&self) -> Result<CellChain> {
        let mut out = Self::zero(Flavor::Chain);
        for (w, v) in self.terms() {
            for (x, c) in w.boundary()?.terms() {
                out.add_term(x, c * v);
            }
        }
        Ok(out)
    }

    pub fn coboundary(&self, k: &SimplicialComplex) -> Result<CellChain> {
        let mut out = Self::zero(Flavor::Cochain);
        for (w, v) in self.terms() {
            for (x, c) in w.coboundary(k)?.terms() {
                out.add_term(x, c * v);
            }
        }
        Ok(out)
    }
}

/// `u{1}e{2} - 2 u{2}e{1}`; the zero chain renders as `0`.
impl fmt::Display for CellChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, v)) in self.terms().enumerate() {
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
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CellChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The `ω`-summand of the word (co)chain complex: words with `σ ∪ τ = ω`.
pub fn word_summand(
    k: &SimplicialComplex,
    omega: VertexSet,
    flavor: Flavor,
) -> Result<BasedComplex<CellWord>> {
    let faces = k.faces_within(omega);
    let cells = faces.into_iter().map(|s| {
        let w = CellWord {
            sigma: s,
            tau: omega - s,
            flavor,
        };
        (s.len() as i32, w)
    });
    match flavor {
        Flavor::Chain => BasedComplex::new(Direction::Lowering, cells, |w| {
            w.boundary().expect("chain word").terms().collect()
        }),
        Flavor::Cochain => BasedComplex::new(Direction::Raising, cells, |w| {
            w.coboundary(k).expect("cochain word").terms().collect()
        }),
    }
}

/// A (co)homology class of `(D¹,S⁰)^K`: nonzero coordinates per summand.
pub type WordClass = BTreeMap<VertexSet, ClassCoords>;

/// The word (co)chain complex of `(D¹,S⁰)^K`, with summands built on demand.
pub struct WordComplex {
    k: SimplicialComplex,
    flavor: Flavor,
    summands: Vec<OnceLock<BasedComplex<CellWord>>>,
}

impl WordComplex {
    pub fn new(k: &SimplicialComplex, flavor: Flavor) -> Result<Self> {
        if k.m() > WORD_COMPLEX_CAP {
            return Err(MacError::resource(format!(
                "word complexes limited to {WORD_COMPLEX_CAP} vertices, got {}",
                k.m()
            )));
        }
        Ok(WordComplex {
            k: k.clone(),
            flavor,
            summands: (0..1usize << k.m()).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.k
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn summand(&self, omega: VertexSet) -> &BasedComplex<CellWord> {
        self.summands[omega.bits() as usize].get_or_init(|| {
            word_summand(&self.k, omega, self.flavor).expect("word differentials square to zero")
        })
    }

    /// The class of a homogeneous cycle; an input error if it is not a cycle.
    pub fn class_of(&self, c: &CellChain) -> Result<WordClass> {
        if c.flavor != self.flavor {
            return Err(MacError::input("flavor mismatch"));
        }
        c.check(&self.k)?;
        let p = c
            .homogeneous_degree()
            .ok_or_else(|| MacError::input("classes need a homogeneous chain"))?;
        let mut out = WordClass::new();
        for (omega, terms) in c.by_omega() {
            let coords = self.summand(omega).class_of(p as i32, &terms)?;
            if !coords.is_zero() {
                out.insert(omega, coords);
            }
        }
        Ok(out)
    }

    pub fn is_cycle(&self, c: &CellChain) -> Result<bool> {
        Ok(match self.flavor {
            Flavor::Chain => c.boundary()?.is_zero(),
            Flavor::Cochain => c.coboundary(&self.k)?.is_zero(),
        })
    }

    /// (Co)homology as the direct sum over all summands.
    pub fn homology(&self) -> GradedHomology {
        let mut out = GradedHomology::new();
        for omega in self.k.label_set().subsets() {
            for (p, h) in self.summand(omega).homology_all() {
                out.add(p, &h);
            }
        }
        out
    }

    /// Free generators in degree `p`, summand by summand, each tagged with
    /// its `ω` and position among that summand's generators.
    pub fn free_generators(&self, p: usize) -> Result<Vec<(VertexSet, usize, CellChain)>> {
        let mut out = Vec::new();
        for omega in self.k.label_set().subsets() {
            let s = self.summand(omega);
            let ntors = s.solver(p as i32).group().torsion.len();
            for (idx, g) in s.generators(p as i32).into_iter().enumerate().skip(ntors) {
                let mut c = CellChain::zero(self.flavor);
                for (w, v) in g {
                    c.add_term(w, crate::homology::to_i64(&v)?);
                }
                out.push((omega, idx - ntors, c));
            }
        }
        Ok(out)
    }
}

/// How [`cellular_homology`] is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyRoute {
    /// One chain complex on all words.
    Monolithic,
    /// `⊕_ω H̃_{*-1}(K_ω)` from the full-subcomplex sweep.
    SubsetSum,
}

/// The whole word (co)chain complex as a single integer complex (cochains in
/// negated degrees).
pub fn monolithic_word_complex(k: &SimplicialComplex, flavor: Flavor) -> Result<IntegerChainComplex> {
    if k.m() > WORD_COMPLEX_CAP {
        return Err(MacError::resource(format!(
            "word complexes limited to {WORD_COMPLEX_CAP} vertices, got {}",
            k.m()
        )));
    }
    let range = k.label_set();
    let mut by_deg: Vec<Vec<CellWord>> = vec![Vec::new(); (k.dim() + 2) as usize];
    for s in k.simplices() {
        for tau in (range - s).subsets() {
            by_deg[s.len()].push(CellWord { sigma: s, tau, flavor: Flavor::Chain });
        }
    }
    for list in &mut by_deg {
        list.sort();
    }
    let index: Vec<std::collections::HashMap<CellWord, u32>> = by_deg
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, w)| (*w, i as u32)).collect())
        .collect();
    let mut dims = Vec::new();
    let mut boundaries = Vec::new();
    for (p, list) in by_deg.iter().enumerate() {
        dims.push(list.len());
        if p == 0 {
            boundaries.push(SparseMatrix::zeros(0, list.len()));
            continue;
        }
        let cols = list
            .iter()
            .map(|w| {
                w.boundary()
                    .expect("chain word")
                    .terms()
                    .map(|(x, v)| (index[p - 1][&x], v))
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(by_deg[p - 1].len(), cols));
    }
    let chains = IntegerChainComplex::new(0, dims, boundaries)?;
    Ok(match flavor {
        Flavor::Chain => chains,
        Flavor::Cochain => chains.dual(),
    })
}

/// `H_*((D¹,S⁰)^K)`.
pub fn cellular_homology(k: &SimplicialComplex, route: HomologyRoute) -> Result<GradedHomology> {
    match route {
        HomologyRoute::Monolithic => {
            let c = monolithic_word_complex(k, Flavor::Chain)?;
            Ok(GradedHomology::from_groups(c.homology_all()))
        }
        HomologyRoute::SubsetSum => {
            let sweep = reduced_homology_all_subsets(k, Some(WORD_COMPLEX_CAP))?;
            let mut out = GradedHomology::new();
            for (_, h) in sweep.nonzero() {
                out.merge(&h.shifted(1));
            }
            Ok(out)
        }
    }
}

/// `H^*((D¹,S⁰)^K)` from the monolithic cochain complex.
pub fn cellular_cohomology(k: &SimplicialComplex) -> Result<GradedHomology> {
    let c = monolithic_word_complex(k, Flavor::Cochain)?;
    Ok(GradedHomology::from_groups(
        c.homology_all().into_iter().map(|(p, h)| (-p, h)),
    ))
}
