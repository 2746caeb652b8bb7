//! Abstract simplicial complexes on the vertex labels `[m] = {1, ..., m}`.
//!
//! A complex is stored by its facets. Labels in `[m]` that lie in no facet
//! ("ghost vertices") are allowed; they matter for full subcomplexes, the
//! missing-face description and the `K(J)` construction.

mod construct;
mod derived;
mod format;

pub use construct::JTuple;
pub use derived::{
    basic_construction_triangulation, DerivedComplex, GeneralComplex, BASIC_CONSTRUCTION_CAP,
};
pub use format::{parse_complex, write_complex, ComplexFileStyle};

use std::collections::{BTreeSet, HashSet};

use crate::error::{MacError, Result};
use crate::vertex_set::{VertexSet, MAX_LABEL};

/// Complexes with at most this many labels get a dense face table in the
/// subset sweeps.
pub const FACE_TABLE_MAX_LABELS: usize = 26;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    /// Mutually incomparable, sorted; `[∅]` for the complex `{∅}`.
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds `K` on `[m]` from a list of simplices whose downward closure is `K`.
    /// Non-maximal entries are discarded.
    pub fn new<I>(m: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if m > MAX_LABEL {
            return Err(MacError::resource(format!(
                "{m} vertices exceeds the {MAX_LABEL}-label limit"
            )));
        }
        let range = VertexSet::initial(m);
        let gens: Vec<VertexSet> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|s| !s.is_subset(range)) {
            return Err(MacError::input(format!(
                "simplex {bad} has labels outside [1, {m}]"
            )));
        }
        Ok(Self::from_generators(m, gens))
    }

    /// Convenience constructor from label slices; panics on bad labels.
    pub fn from_facet_lists(m: usize, facets: &[&[usize]]) -> Self {
        Self::new(m, facets.iter().map(|f| VertexSet::of(f))).expect("invalid complex literal")
    }

    pub(crate) fn from_generators(m: usize, mut gens: Vec<VertexSet>) -> Self {
        gens.sort_by_key(|s| std::cmp::Reverse(s.len()));
        gens.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(gens.len());
        for g in gens {
            if !facets.iter().any(|f| g.is_subset(*f)) {
                facets.push(g);
            }
        }
        if facets.is_empty() {
            facets.push(VertexSet::EMPTY);
        }
        facets.sort();
        SimplicialComplex { m, facets }
    }

    /// The complex `{∅}` on `[m]` (every label a ghost).
    pub fn empty(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `[m]`.
    pub fn simplex(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: vec![VertexSet::initial(m)],
        }
    }

    /// The boundary of the simplex on `[m]`.
    pub fn simplex_boundary(m: usize) -> Self {
        let all = VertexSet::initial(m);
        Self::from_generators(m, all.iter().map(|i| all.remove(i)).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// `[m]`.
    pub fn label_set(&self) -> VertexSet {
        VertexSet::initial(self.m)
    }

    /// Labels that span a 0-simplex.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a | *f)
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        self.label_set() - self.vertices()
    }

    /// `max dim σ`; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// Membership without range checking.
    #[inline]
    pub fn contains(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn is_simplex(&self, s: VertexSet) -> Result<bool> {
        if !s.is_subset(self.label_set()) {
            return Err(MacError::input(format!(
                "{s} has labels outside [1, {}]",
                self.m
            )));
        }
        Ok(self.contains(s))
    }

    /// All simplices (including `∅`), sorted by cardinality then lexicographically.
    pub fn simplices(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.faces_within(self.label_set());
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Number of simplices of each cardinality `0..=dim+1`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; (self.dim() + 2) as usize];
        for s in self.faces_within(self.label_set()) {
            f[s.len()] += 1;
        }
        f
    }

    /// `Σ (-1)^{dim σ}` over nonempty simplices.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Simplices contained in `omega` (unordered), found by depth-first extension.
    pub(crate) fn faces_within(&self, omega: VertexSet) -> Vec<VertexSet> {
        let relevant: Vec<VertexSet> = {
            let cut: Vec<VertexSet> = self.facets.iter().map(|f| *f & omega).collect();
            Self::from_generators(self.m, cut).facets
        };
        let mut seen: HashSet<VertexSet> = HashSet::new();
        let mut stack = Vec::new();
        for f in &relevant {
            if seen.insert(*f) {
                stack.push(*f);
            }
        }
        while let Some(s) = stack.pop() {
            for l in s.iter() {
                let t = s.remove(l);
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Dense membership table over all `2^m` subsets, if `m` is small enough.
    pub fn face_table(&self) -> Option<FaceTable> {
        (self.m <= FACE_TABLE_MAX_LABELS).then(|| FaceTable::build(self))
    }

    /// Minimal non-faces, sorted.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        let range = self.label_set();
        let mut out = BTreeSet::new();
        for s in self.faces_within(range) {
            for v in (range - s).iter() {
                let t = s.insert(v);
                if out.contains(&t) || self.contains(t) {
                    continue;
                }
                if t.iter().all(|i| self.contains(t.remove(i))) {
                    out.insert(t);
                }
            }
        }
        out.into_iter().collect()
    }

    /// The complex on `[m]` whose minimal non-faces are exactly `missing`
    /// (after discarding non-minimal entries).
    pub fn from_missing_faces<I>(m: usize, missing: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if m > MAX_LABEL {
            return Err(MacError::resource(format!(
                "{m} vertices exceeds the {MAX_LABEL}-label limit"
            )));
        }
        let range = VertexSet::initial(m);
        let missing: Vec<VertexSet> = missing.into_iter().collect();
        if let Some(bad) = missing.iter().find(|s| !s.is_subset(range)) {
            return Err(MacError::input(format!(
                "missing face {bad} has labels outside [1, {m}]"
            )));
        }
        if missing.iter().any(|s| s.is_empty()) {
            return Err(MacError::input("the empty set cannot be a missing face"));
        }
        let allowed = |s: VertexSet| !missing.iter().any(|t| t.is_subset(s));
        // Grow faces in increasing label order; keep those that admit no extension.
        let mut facets = Vec::new();
        let mut stack = vec![VertexSet::EMPTY];
        while let Some(s) = stack.pop() {
            let mut maximal = true;
            for v in (range - s).iter() {
                let t = s.insert(v);
                if allowed(t) {
                    maximal = false;
                    if s.max().is_none_or(|top| v > top) {
                        stack.push(t);
                    }
                }
            }
            if maximal {
                facets.push(s);
            }
        }
        Ok(Self::from_generators(m, facets))
    }

    /// `K_ω = {σ ∈ K | σ ⊆ ω}`, keeping the labels of `K` (labels outside `ω`
    /// become ghosts). See [`SimplicialComplex::compact`] for a relabeled copy.
    pub fn full_subcomplex(&self, omega: VertexSet) -> Result<Self> {
        if !omega.is_subset(self.label_set()) {
            return Err(MacError::input(format!(
                "{omega} has labels outside [1, {}]",
                self.m
            )));
        }
        let cut = self.facets.iter().map(|f| *f & omega).collect();
        Ok(Self::from_generators(self.m, cut))
    }

    /// Relabels the labels of `support` (a superset of the vertices) to
    /// `1..=|support|` in increasing order. Returns the new complex and the
    /// original label of each new label.
    pub fn compact(&self, support: VertexSet) -> Result<(Self, Vec<usize>)> {
        if !self.vertices().is_subset(support) || !support.is_subset(self.label_set()) {
            return Err(MacError::input(format!(
                "{support} must contain every vertex and lie in [1, {}]",
                self.m
            )));
        }
        let labels = support.to_vec();
        let relabel = |s: VertexSet| {
            s.iter()
                .map(|l| labels.iter().position(|&x| x == l).unwrap() + 1)
                .collect::<VertexSet>()
        };
        let facets = self.facets.iter().map(|f| relabel(*f)).collect();
        Ok((Self::from_generators(labels.len(), facets), labels))
    }

    /// `Lk(σ, K) = {τ ∈ K | τ ∩ σ = ∅, τ ∪ σ ∈ K}` on the same labels.
    pub fn link(&self, sigma: VertexSet) -> Result<Self> {
        if !self.is_simplex(sigma)? {
            return Err(MacError::input(format!("{sigma} is not a simplex")));
        }
        let gens = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| *f - sigma)
            .collect();
        Ok(Self::from_generators(self.m, gens))
    }

    /// Star of a simplex: the union of facets containing it.
    pub fn star(&self, sigma: VertexSet) -> Result<Self> {
        if !self.is_simplex(sigma)? {
            return Err(MacError::input(format!("{sigma} is not a simplex")));
        }
        let gens = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .copied()
            .collect();
        Ok(Self::from_generators(self.m, gens))
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K[m={}; ", self.m)?;
        for (k, s) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

/// Bitmap of the faces of a complex over all subsets of `[m]`.
pub struct FaceTable {
    words: Vec<u64>,
}

impl FaceTable {
    fn build(k: &SimplicialComplex) -> Self {
        let n = 1usize << k.m;
        let mut words = vec![0u64; n.div_ceil(64)];
        let mut stack: Vec<u64> = Vec::new();
        let mark = |words: &mut Vec<u64>, s: u64| -> bool {
            let (w, b) = ((s >> 6) as usize, s & 63);
            let fresh = words[w] & (1u64 << b) == 0;
            words[w] |= 1u64 << b;
            fresh
        };
        for f in k.facets() {
            if mark(&mut words, f.bits()) {
                stack.push(f.bits());
            }
        }
        while let Some(s) = stack.pop() {
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let t = s ^ bit;
                if mark(&mut words, t) {
                    stack.push(t);
                }
            }
        }
        FaceTable { words }
    }

    #[inline]
    pub fn contains(&self, s: VertexSet) -> bool {
        let b = s.bits();
        self.words
            .get((b >> 6) as usize)
            .is_some_and(|w| w & (1u64 << (b & 63)) != 0)
    }
}

/// A few complexes that recur in examples and tests.
pub mod catalog {
    use super::SimplicialComplex;
    use crate::vertex_set::VertexSet;

    /// The boundary of an `m`-gon, `m >= 3`.
    pub fn polygon(m: usize) -> SimplicialComplex {
        assert!(m >= 3);
        let edges = (1..=m).map(|i| VertexSet::of(&[i, i % m + 1])).collect();
        SimplicialComplex::from_generators(m, edges)
    }

    pub fn pentagon() -> SimplicialComplex {
        polygon(5)
    }

    /// The 3-sphere on `[7]` whose missing faces are the seven cyclic
    /// triples `{i, i+1, i+2}`; its real moment-angle complex is the
    /// connected sum of seven copies of `S² × S²`.
    pub fn heptagon_sphere() -> SimplicialComplex {
        let missing = (1..=7).map(|i| VertexSet::of(&[i, i % 7 + 1, (i + 1) % 7 + 1]));
        SimplicialComplex::from_missing_faces(7, missing).expect("valid")
    }

    /// Boundary of the octahedron on `[6]` (antipodal pairs `(1,6)`, `(2,4)`,
    /// `(3,5)`) with the facet `{4,5,6}` stellarly subdivided by vertex 7:
    /// the dual of a cube with one corner truncated.
    pub fn truncated_cube_dual() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in [1, 6] {
            for b in [2, 4] {
                for c in [3, 5] {
                    if (a, b, c) != (6, 4, 5) {
                        facets.push(VertexSet::of(&[a, b, c]));
                    }
                }
            }
        }
        facets.push(VertexSet::of(&[4, 5, 7]));
        facets.push(VertexSet::of(&[4, 6, 7]));
        facets.push(VertexSet::of(&[5, 6, 7]));
        SimplicialComplex::from_generators(7, facets)
    }

    /// The six-vertex real projective plane.
    pub fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(
            6,
            &[
                &[1, 2, 3],
                &[1, 3, 4],
                &[1, 4, 5],
                &[1, 5, 6],
                &[1, 2, 6],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 4, 6],
                &[3, 4, 6],
                &[3, 5, 6],
            ],
        )
    }

    /// `S⁰` on two labels.
    pub fn two_points() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(2, &[&[1], &[2]])
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::of(l)
    }

    #[test]
    fn is_simplex_on_pentagon() {
        let k = pentagon();
        assert!(k.is_simplex(vs(&[1, 2])).unwrap());
        assert!(k.is_simplex(vs(&[1, 5])).unwrap());
        assert!(!k.is_simplex(vs(&[1, 3])).unwrap());
        assert!(k.is_simplex(VertexSet::EMPTY).unwrap());
        assert!(k.is_simplex(vs(&[6])).is_err());
    }

    #[test]
    fn missing_faces_examples() {
        let h = heptagon_sphere();
        let expected: Vec<VertexSet> = {
            let mut v: Vec<_> = (1..=7)
                .map(|i| vs(&[i, i % 7 + 1, (i + 1) % 7 + 1]))
                .collect();
            v.sort();
            v
        };
        assert_eq!(h.missing_faces(), expected);
        assert_eq!(h.facets().len(), 14);
        assert!(SimplicialComplex::simplex(4).missing_faces().is_empty());
        assert_eq!(two_points().missing_faces(), vec![vs(&[1, 2])]);
    }

    #[test]
    fn ghost_vertices_are_missing_faces() {
        let k = SimplicialComplex::from_facet_lists(3, &[&[1, 2]]);
        assert_eq!(k.ghost_vertices(), vs(&[3]));
        assert_eq!(k.missing_faces(), vec![vs(&[3])]);
        let back = SimplicialComplex::from_missing_faces(3, k.missing_faces()).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn full_subcomplexes() {
        let k = pentagon();
        let k13 = k.full_subcomplex(vs(&[1, 3])).unwrap();
        assert_eq!(k13.facets(), &[vs(&[1]), vs(&[3])]);
        assert_eq!(
            k.full_subcomplex(VertexSet::EMPTY).unwrap(),
            SimplicialComplex::empty(5)
        );
        let h = heptagon_sphere().full_subcomplex(vs(&[4, 5, 6, 7])).unwrap();
        assert!(h.contains(vs(&[4, 5, 7])));
        assert!(!h.contains(vs(&[4, 5, 6])));
    }

    #[test]
    fn links() {
        let k = pentagon();
        assert_eq!(k.link(vs(&[1])).unwrap().facets(), &[vs(&[2]), vs(&[5])]);
        assert_eq!(k.link(VertexSet::EMPTY).unwrap(), k);
        assert!(k.link(vs(&[1, 3])).is_err());
        let b = SimplicialComplex::simplex_boundary(4);
        assert_eq!(b.link(vs(&[1, 2])).unwrap().facets(), &[vs(&[3]), vs(&[4])]);
    }

    #[test]
    fn compaction_keeps_labels() {
        let k = pentagon().full_subcomplex(vs(&[2, 3, 5])).unwrap();
        let (c, labels) = k.compact(vs(&[2, 3, 5])).unwrap();
        assert_eq!(labels, vec![2, 3, 5]);
        assert_eq!(c.m(), 3);
        assert_eq!(c.facets(), &[vs(&[1, 2]), vs(&[3])]);
    }

    #[test]
    fn face_table_agrees_with_facets() {
        let k = truncated_cube_dual();
        let t = k.face_table().unwrap();
        for s in k.label_set().subsets() {
            assert_eq!(t.contains(s), k.contains(s), "{s}");
        }
    }

    #[test]
    fn truncated_cube_is_a_sphere_with_seven_vertices() {
        let k = truncated_cube_dual();
        assert_eq!(k.facets().len(), 10);
        assert_eq!(k.f_vector(), vec![1, 7, 15, 10]);
        assert_eq!(k.euler_characteristic(), 2);
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(SimplicialComplex::new(3, [vs(&[1, 4])]).is_err());
        assert!(SimplicialComplex::from_missing_faces(2, [VertexSet::EMPTY]).is_err());
    }
}
