//! Barycentric subdivision and the cubical triangulation of `(D¹,S⁰)^K`.

use std::collections::BTreeMap;

use super::SimplicialComplex;
use crate::error::{MacError, Result};
use crate::vertex_set::{VertexSet, MAX_LABEL};

/// Default cap on `m` for [`basic_construction_triangulation`].
pub const BASIC_CONSTRUCTION_CAP: usize = 6;

/// `K'` or `K'_+` together with the simplex of `K` behind each new vertex.
#[derive(Clone, Debug)]
pub struct DerivedComplex {
    pub complex: SimplicialComplex,
    /// `vertex_simplices[v - 1]` is the simplex of `K` labelled `v`.
    pub vertex_simplices: Vec<VertexSet>,
}

/// A simplicial complex on vertices `0..vertex_count`, with no limit on the
/// number of vertices. Facets are sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralComplex {
    pub vertex_count: usize,
    pub facets: Vec<Vec<u32>>,
}

impl GeneralComplex {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let facets = k
            .facets()
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.iter().map(|l| (l - 1) as u32).collect())
            .collect();
        GeneralComplex {
            vertex_count: k.m(),
            facets,
        }
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// All nonempty simplices grouped by dimension, each group sorted.
    pub fn simplices_by_dim(&self) -> Vec<Vec<Vec<u32>>> {
        let top = (self.dim() + 1).max(0) as usize;
        let mut sets: Vec<std::collections::BTreeSet<Vec<u32>>> = vec![Default::default(); top];
        for f in &self.facets {
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let s: Vec<u32> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                sets[s.len() - 1].insert(s);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }
}

impl SimplicialComplex {
    /// The derived complex `K'` (vertices: nonempty simplices; simplices:
    /// chains under inclusion), or its cone `K'_+` with `∅` as apex.
    ///
    /// New labels are assigned by cardinality, then lexicographically, with
    /// `∅` first when augmented.
    pub fn derived_complex(&self, augmented: bool) -> Result<DerivedComplex> {
        let mut simplices = self.simplices();
        if !augmented {
            simplices.retain(|s| !s.is_empty());
        }
        if simplices.len() > MAX_LABEL {
            return Err(MacError::resource(format!(
                "the derived complex has {} vertices",
                simplices.len()
            )));
        }
        let index: BTreeMap<VertexSet, usize> = simplices
            .iter()
            .enumerate()
            .map(|(k, s)| (*s, k + 1))
            .collect();
        let mut gens = Vec::new();
        for f in self.facets() {
            for order in permutations(&f.to_vec()) {
                let mut chain = if augmented {
                    VertexSet::singleton(index[&VertexSet::EMPTY])
                } else {
                    VertexSet::EMPTY
                };
                let mut s = VertexSet::EMPTY;
                for v in order {
                    s = s.insert(v);
                    chain = chain.insert(index[&s]);
                }
                gens.push(chain);
            }
        }
        Ok(DerivedComplex {
            complex: SimplicialComplex::from_generators(simplices.len(), gens),
            vertex_simplices: simplices,
        })
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Triangulates `(D¹,S⁰)^K ⊂ [-1,1]^m` as `2^m` reflected copies of `K'_+`.
///
/// The vertex for `σ ∈ K` in the copy `g ∈ {±1}^m` is the point with
/// coordinate `0` on `σ` and `g_i` elsewhere; two copies share it exactly
/// when they differ only on `σ`. Vertices are numbered in the order of their
/// (zero set, sign pattern) keys. Returns a resource error when `m > cap`.
pub fn basic_construction_triangulation(
    k: &SimplicialComplex,
    cap: Option<usize>,
) -> Result<GeneralComplex> {
    let m = k.m();
    let cap = cap.unwrap_or(BASIC_CONSTRUCTION_CAP);
    if m > cap {
        return Err(MacError::resource(format!(
            "basic construction limited to {cap} vertices, got {m}"
        )));
    }
    let full = k.label_set().bits();
    let mut ids: BTreeMap<(u64, u64), u32> = BTreeMap::new();
    for s in k.simplices() {
        let free = full & !s.bits();
        for g in VertexSet::from_bits(free).subsets() {
            let next = ids.len() as u32;
            ids.entry((s.bits(), g.bits())).or_insert(next);
        }
    }
    let mut facets = Vec::new();
    for f in k.facets() {
        let orders = permutations(&f.to_vec());
        for g in 0..(1u64 << m) {
            for order in &orders {
                let mut s = 0u64;
                let mut simplex = vec![ids[&(0, g & full)]];
                for &v in order {
                    s |= 1u64 << (v - 1);
                    simplex.push(ids[&(s, g & full & !s)]);
                }
                simplex.sort_unstable();
                facets.push(simplex);
            }
        }
    }
    facets.sort();
    facets.dedup();
    Ok(GeneralComplex {
        vertex_count: ids.len(),
        facets,
    })
}
