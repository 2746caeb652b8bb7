//! Simplicial (co)homology of complexes and of all their full subcomplexes.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{elementary_divisors, HomologyGroup, IntegerChainComplex, SparseMatrix};
use crate::error::{MacError, Result};
use crate::simplicial::{GeneralComplex, SimplicialComplex};
use crate::vertex_set::VertexSet;

/// Default cap on `m` for [`reduced_homology_all_subsets`].
pub const SUBSET_SWEEP_CAP: usize = 16;

/// Nonzero groups of a graded homology, by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedHomology(BTreeMap<i32, HomologyGroup>);

impl GradedHomology {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_groups<I: IntoIterator<Item = (i32, HomologyGroup)>>(groups: I) -> Self {
        let mut g = Self::new();
        for (p, h) in groups {
            g.add(p, &h);
        }
        g
    }

    pub fn get(&self, p: i32) -> HomologyGroup {
        self.0.get(&p).cloned().unwrap_or_default()
    }

    /// Adds `h` to the group in degree `p`.
    pub fn add(&mut self, p: i32, h: &HomologyGroup) {
        if h.is_zero() {
            return;
        }
        let sum = self.get(p).direct_sum(h);
        self.0.insert(p, sum);
    }

    pub fn merge(&mut self, other: &GradedHomology) {
        for (p, h) in &other.0 {
            self.add(*p, h);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &HomologyGroup)> {
        self.0.iter().map(|(p, h)| (*p, h))
    }

    /// Degrees moved by `k`.
    pub fn shifted(&self, k: i32) -> GradedHomology {
        GradedHomology(self.0.iter().map(|(p, h)| (p + k, h.clone())).collect())
    }

    pub fn top_degree(&self) -> Option<i32> {
        self.0.keys().next_back().copied()
    }

    /// Free ranks in degrees `0..=top`.
    pub fn betti(&self) -> Vec<usize> {
        let top = self.top_degree().unwrap_or(-1);
        (0..=top).map(|p| self.get(p).rank).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.0.values().all(HomologyGroup::is_free)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .map(|(p, h)| if p.rem_euclid(2) == 0 { h.rank as i64 } else { -(h.rank as i64) })
            .sum()
    }
}

impl std::fmt::Display for GradedHomology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(p, h)| format!("H{p}={h}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Simplices of `k` grouped by cardinality (index `s` holds the `s`-element ones).
fn faces_by_size(k: &SimplicialComplex, augmented: bool) -> Vec<Vec<VertexSet>> {
    let mut out: Vec<Vec<VertexSet>> = vec![Vec::new(); (k.dim() + 2) as usize];
    for s in k.simplices() {
        out[s.len()].push(s);
    }
    if !augmented {
        out[0].clear();
    }
    out
}

/// The simplicial chain complex with simplices in increasing label order;
/// augmented (with `C_{-1} = Z·∅`) when `augmented`.
pub fn simplicial_chain_complex(k: &SimplicialComplex, augmented: bool) -> IntegerChainComplex {
    let faces = faces_by_size(k, augmented);
    let index: Vec<HashMap<VertexSet, u32>> = faces
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect())
        .collect();
    let start = if augmented { 0 } else { 1 };
    let mut dims = Vec::new();
    let mut boundaries = Vec::new();
    for size in start..faces.len() {
        dims.push(faces[size].len());
        if size == start {
            boundaries.push(SparseMatrix::zeros(0, faces[size].len()));
            continue;
        }
        let cols = faces[size]
            .iter()
            .map(|s| {
                s.iter()
                    .map(|i| {
                        let sign = if s.count_below(i) % 2 == 0 { 1 } else { -1 };
                        (index[size - 1][&s.remove(i)], sign)
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(faces[size - 1].len(), cols));
    }
    IntegerChainComplex::new(start as i32 - 1, dims, boundaries)
        .expect("simplicial boundaries square to zero")
}

/// `H̃_*(K)`; the complex `{∅}` has `H̃_{-1} = Z`.
pub fn reduced_homology(k: &SimplicialComplex) -> GradedHomology {
    GradedHomology::from_groups(simplicial_chain_complex(k, true).homology_all())
}

/// `H_*(K)`.
pub fn unreduced_homology(k: &SimplicialComplex) -> GradedHomology {
    GradedHomology::from_groups(simplicial_chain_complex(k, false).homology_all())
}

/// `H̃^*(K)`, by dualizing the augmented chain complex.
pub fn reduced_cohomology(k: &SimplicialComplex) -> GradedHomology {
    let dual = simplicial_chain_complex(k, true).dual();
    GradedHomology::from_groups(dual.homology_all().into_iter().map(|(p, h)| (-p, h)))
}

/// Unreduced homology of a complex given by vertex lists.
pub fn general_homology(k: &GeneralComplex) -> GradedHomology {
    let groups = k.simplices_by_dim();
    let index: Vec<HashMap<&[u32], u32>> = groups
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (s.as_slice(), i as u32)).collect())
        .collect();
    let mut dims = Vec::new();
    let mut boundaries = Vec::new();
    for (d, list) in groups.iter().enumerate() {
        dims.push(list.len());
        if d == 0 {
            boundaries.push(SparseMatrix::zeros(0, list.len()));
            continue;
        }
        let cols = list
            .iter()
            .map(|s| {
                (0..s.len())
                    .map(|pos| {
                        let mut face = s.clone();
                        face.remove(pos);
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[d - 1][face.as_slice()], sign)
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(groups[d - 1].len(), cols));
    }
    let c = IntegerChainComplex::new(0, dims, boundaries).expect("simplicial boundaries square to zero");
    GradedHomology::from_groups(c.homology_all())
}

/// Reduced homology of every full subcomplex `K_ω`, indexed by the bit
/// pattern of `ω` (binary counter order, least label least significant).
#[derive(Clone, Debug)]
pub struct SubsetHomology {
    m: usize,
    groups: Vec<GradedHomology>,
}

impl SubsetHomology {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, omega: VertexSet) -> &GradedHomology {
        &self.groups[omega.bits() as usize]
    }

    /// All `(ω, H̃_*(K_ω))` in binary counter order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, &GradedHomology)> {
        self.groups
            .iter()
            .enumerate()
            .map(|(b, h)| (VertexSet::from_bits(b as u64), h))
    }

    /// The `ω` with nonvanishing reduced homology.
    pub fn nonzero(&self) -> impl Iterator<Item = (VertexSet, &GradedHomology)> {
        self.iter().filter(|(_, h)| !h.is_zero())
    }
}

/// Runs the reduced-homology computation for all `2^m` full subcomplexes.
/// `cap` defaults to [`SUBSET_SWEEP_CAP`].
pub fn reduced_homology_all_subsets(
    k: &SimplicialComplex,
    cap: Option<usize>,
) -> Result<SubsetHomology> {
    let cap = cap.unwrap_or(SUBSET_SWEEP_CAP);
    let m = k.m();
    if m > cap || m > crate::simplicial::FACE_TABLE_MAX_LABELS {
        return Err(MacError::resource(format!(
            "subset sweep limited to {} vertices, got {m}",
            cap.min(crate::simplicial::FACE_TABLE_MAX_LABELS)
        )));
    }
    let table = k.face_table().expect("size checked");
    let groups: Vec<GradedHomology> = (0..1u64 << m)
        .into_par_iter()
        .map_init(
            || vec![0u32; 1usize << m],
            |scratch, bits| full_subcomplex_homology(&table, bits, scratch),
        )
        .collect();
    Ok(SubsetHomology { m, groups })
}

/// `H̃_*(K_ω)` from the face table; `scratch` maps face bits to positions.
pub(crate) fn full_subcomplex_homology(
    table: &crate::simplicial::FaceTable,
    omega: u64,
    scratch: &mut [u32],
) -> GradedHomology {
    // faces of K_ω by size, grown in increasing label order
    let mut by_size: Vec<Vec<u64>> = vec![vec![0]];
    let mut frontier = vec![0u64];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            let top = 64 - s.leading_zeros();
            let mut rest = omega & !((1u64 << top) - 1);
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let t = s | bit;
                if table.contains(VertexSet::from_bits(t)) {
                    next.push(t);
                }
            }
        }
        if !next.is_empty() {
            by_size.push(next.clone());
        }
        frontier = next;
    }
    for list in &by_size {
        for (i, &s) in list.iter().enumerate() {
            scratch[s as usize] = i as u32;
        }
    }
    let ranks_and_torsion: Vec<(usize, Vec<num_bigint::BigUint>)> = (0..by_size.len())
        .map(|size| {
            if size == 0 {
                return (0, Vec::new());
            }
            let cols = by_size[size]
                .iter()
                .map(|&s| {
                    let mut col = Vec::with_capacity(size);
                    let mut rest = s;
                    let mut pos = 0;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest ^= bit;
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        col.push((scratch[(s ^ bit) as usize], sign));
                        pos += 1;
                    }
                    col
                })
                .collect();
            let d = elementary_divisors(&SparseMatrix::from_columns(by_size[size - 1].len(), cols));
            (d.rank(), d.torsion())
        })
        .collect();
    let mut out = GradedHomology::new();
    for size in 0..by_size.len() {
        let out_rank = ranks_and_torsion[size].0;
        let (in_rank, torsion) = ranks_and_torsion
            .get(size + 1)
            .cloned()
            .unwrap_or((0, Vec::new()));
        let g = HomologyGroup {
            rank: by_size[size].len() - out_rank - in_rank,
            torsion,
        };
        out.add(size as i32 - 1, &g);
    }
    out
}
