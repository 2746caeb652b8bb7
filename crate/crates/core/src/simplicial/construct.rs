//! Simplicial wedges and the `K(J)` construction.

use std::fmt;
use std::str::FromStr;

use super::SimplicialComplex;
use crate::error::{MacError, Result};
use crate::vertex_set::{VertexSet, MAX_LABEL};

/// A tuple `J = (j_1, ..., j_m)` of positive integers.
///
/// Vertex `k` of `K` is inflated to the block
/// `B_k = {k̃, k̃+1, ..., k̃+j_k-1}` of `[d(J)]`, where
/// `k̃ = 1 + Σ_{r<k} j_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JTuple(Vec<usize>);

impl JTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(MacError::input("J entries must be positive"));
        }
        Ok(JTuple(entries))
    }

    /// `(1, ..., 1)` of length `m`.
    pub fn ones(m: usize) -> Self {
        JTuple(vec![1; m])
    }

    /// `(c, ..., c)` of length `m`.
    pub fn constant(m: usize, c: usize) -> Result<Self> {
        Self::new(vec![c; m])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `j_k` for `1 <= k <= m`.
    pub fn get(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    /// `d(J) = Σ j_k`.
    pub fn d(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&j| j == 1)
    }

    pub fn check_len(&self, m: usize) -> Result<()> {
        if self.0.len() != m {
            return Err(MacError::input(format!(
                "J has {} entries but the complex has {m} vertices",
                self.0.len()
            )));
        }
        Ok(())
    }

    /// `k̃`, the first label of the block of `k`.
    pub fn head(&self, k: usize) -> usize {
        1 + self.0[..k - 1].iter().sum::<usize>()
    }

    /// The block `B_k` (labels of `[d(J)]`).
    pub fn block(&self, k: usize) -> VertexSet {
        let h = self.head(k);
        (h..h + self.get(k)).collect()
    }

    /// `B_k` without its head, i.e. `{k̃+1, ..., k̃+j_k-1}`.
    pub fn tail(&self, k: usize) -> VertexSet {
        self.block(k).remove(self.head(k))
    }

    /// `∪_{k∈s} B_k`.
    pub fn inflate(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, k| acc | self.block(k))
    }

    /// Degree of the generator `ṽ^k` (`j_k`); `ũ^k` has degree `j_k - 1`.
    pub fn v_degree(&self, k: usize) -> usize {
        self.get(k)
    }
}

impl fmt::Display for JTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, j) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

/// Parses `2,2,1`.
impl FromStr for JTuple {
    type Err = MacError;
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| MacError::parse(0, format!("bad J entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        JTuple::new(entries)
    }
}

impl SimplicialComplex {
    /// The simplicial wedge `K(v_i)` on `[m+1]`: labels above `i` move up by
    /// one and `i` is doubled to `{i, i+1}`.
    pub fn simplicial_wedge(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.m() || !self.vertices().contains(i) {
            return Err(MacError::input(format!("{i} is not a vertex")));
        }
        if self.m() + 1 > MAX_LABEL {
            return Err(MacError::resource(format!(
                "the wedge needs {} labels",
                self.m() + 1
            )));
        }
        let chi = |s: VertexSet| s.shift_above(i, 1);
        let rest = self.full_subcomplex(self.label_set().remove(i))?;
        let link = self.link(VertexSet::singleton(i))?;
        let mut gens = Vec::new();
        for f in rest.facets() {
            gens.push(chi(*f).insert(i));
            gens.push(chi(*f).insert(i + 1));
        }
        for l in link.facets() {
            gens.push(chi(*l).insert(i).insert(i + 1));
        }
        Ok(Self::from_generators(self.m() + 1, gens))
    }

    /// `K(J)` on `[d(J)]`, whose missing faces are the block unions
    /// `∪_{i∈τ} B_i` of the missing faces `τ` of `K`.
    pub fn kj_construction(&self, j: &JTuple) -> Result<Self> {
        j.check_len(self.m())?;
        if j.d() > MAX_LABEL {
            return Err(MacError::resource(format!(
                "d(J) = {} exceeds the {MAX_LABEL}-label limit",
                j.d()
            )));
        }
        let missing: Vec<VertexSet> = self.missing_faces().into_iter().map(|t| j.inflate(t)).collect();
        Self::from_missing_faces(j.d(), missing)
    }

    /// `K(J)` as an iterated simplicial wedge: vertex `m` is doubled first,
    /// then `m-1`, down to `1`; vertex `k` is wedged at `v_k, v_{k+1}, ...,
    /// v_{k+j_k-2}`.
    pub fn kj_by_wedges(&self, j: &JTuple) -> Result<Self> {
        j.check_len(self.m())?;
        let mut k = self.clone();
        for (v, _) in Self::wedge_sequence(j) {
            k = k.simplicial_wedge(v)?;
        }
        Ok(k)
    }

    /// The wedge positions in application order, each paired with the
    /// original vertex it inflates.
    pub fn wedge_sequence(j: &JTuple) -> Vec<(usize, usize)> {
        let mut seq = Vec::new();
        for k in (1..=j.len()).rev() {
            for step in 0..j.get(k) - 1 {
                seq.push((k + step, k));
            }
        }
        seq
    }
}
