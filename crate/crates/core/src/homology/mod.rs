//! Integral homology of finitely generated chain complexes.

mod based;
mod simplicial;
pub mod snf;

pub use based::{to_i64, BasedComplex, ClassCoords, ClassSolver, Direction};
pub use simplicial::{
    general_homology, reduced_cohomology, reduced_homology, reduced_homology_all_subsets,
    simplicial_chain_complex, unreduced_homology, GradedHomology, SubsetHomology,
    SUBSET_SWEEP_CAP,
};
pub use snf::{elementary_divisors, DenseSnf, SmithDiagonal};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{MacError, Result};

/// Column-major sparse integer matrix; each column is sorted by row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from columns of `(row, value)` pairs; duplicates are summed
    /// and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(u32, i64)> = Vec::with_capacity(c.len());
                for (r, v) in c {
                    debug_assert!((r as usize) < rows);
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    /// Adds `v` at `(i, j)`.
    pub fn push(&mut self, i: usize, j: usize, v: i64) {
        let col = &mut self.columns[j];
        match col.binary_search_by_key(&(i as u32), |e| e.0) {
            Ok(pos) => {
                col[pos].1 += v;
                if col[pos].1 == 0 {
                    col.remove(pos);
                }
            }
            Err(pos) if v != 0 => col.insert(pos, (i as u32, v)),
            Err(_) => {}
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for &(r, v) in c {
                cols[r as usize].push((j as u32, v));
            }
        }
        SparseMatrix {
            rows: self.columns.len(),
            columns: cols,
        }
    }

    /// `self · other`, or an invariant error on overflow or shape mismatch.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(MacError::invariant("matrix shapes do not compose"));
        }
        let mut cols = Vec::with_capacity(other.cols());
        for c in &other.columns {
            let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
            for &(k, b) in c {
                for &(i, a) in &self.columns[k as usize] {
                    let e = acc.entry(i).or_insert(0);
                    *e = a
                        .checked_mul(b)
                        .and_then(|p| e.checked_add(p))
                        .ok_or_else(|| MacError::invariant("matrix product overflow"))?;
                }
            }
            cols.push(acc.into_iter().filter(|e| e.1 != 0).collect());
        }
        Ok(SparseMatrix {
            rows: self.rows,
            columns: cols,
        })
    }

    /// Dense rows as big integers.
    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols()]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for &(r, v) in c {
                d[r as usize][j] = BigInt::from(v);
            }
        }
        d
    }
}

/// A finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with
/// `t_1 | t_2 | ... | t_k` and every `t_i >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Normalizes arbitrary cyclic torsion orders into invariant factors.
    pub fn new(rank: usize, orders: Vec<BigUint>) -> Self {
        HomologyGroup {
            rank,
            torsion: invariant_factors(orders),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &HomologyGroup) -> HomologyGroup {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        HomologyGroup::new(self.rank + other.rank, orders)
    }
}

/// Rewrites a list of cyclic orders (entries `<= 1` ignored) as invariant
/// factors with each dividing the next.
pub fn invariant_factors(orders: Vec<BigUint>) -> Vec<BigUint> {
    let mut fs: Vec<BigUint> = orders.into_iter().filter(|o| *o > BigUint::one()).collect();
    // repeatedly replace (a, b) by (gcd, lcm) until sorted by divisibility
    let n = fs.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = fs[i].gcd(&fs[j]);
            let l = fs[i].lcm(&fs[j]);
            fs[i] = g;
            fs[j] = l;
        }
    }
    fs.retain(|o| *o > BigUint::one());
    fs
}

/// Renders as `0`, `Z`, `Z^3 + Z/2 + Z/4`.
impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A chain complex `C_lo <- ... <- C_hi` of free abelian groups; the
/// boundary out of degree `p` maps `C_p` to `C_{p-1}`.
///
/// Cochain complexes are stored with negated degrees (`C_{-p} = C^p`).
#[derive(Clone, Debug)]
pub struct IntegerChainComplex {
    lo: i32,
    dims: Vec<usize>,
    /// `boundaries[k]` leaves degree `lo + k`; `boundaries[0]` maps to degree `lo - 1` (zero).
    boundaries: Vec<SparseMatrix>,
}

impl IntegerChainComplex {
    /// `boundaries[k]` is the boundary out of degree `lo + k` and must have
    /// `dims[k]` columns and `dims[k-1]` rows (`0` rows for `k = 0`).
    pub fn new(lo: i32, dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if dims.len() != boundaries.len() {
            return Err(MacError::invariant("one boundary per degree expected"));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let target = if k == 0 { 0 } else { dims[k - 1] };
            if b.cols() != dims[k] || b.rows() != target {
                return Err(MacError::invariant(format!(
                    "boundary out of degree {} has shape {}x{}",
                    lo + k as i32,
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let c = IntegerChainComplex {
            lo,
            dims,
            boundaries,
        };
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, p: i32) -> usize {
        self.index(p).map_or(0, |k| self.dims[k])
    }

    fn index(&self, p: i32) -> Option<usize> {
        (p >= self.lo && p <= self.hi()).then(|| (p - self.lo) as usize)
    }

    /// The boundary out of degree `p`.
    pub fn boundary(&self, p: i32) -> Option<&SparseMatrix> {
        self.index(p).map(|k| &self.boundaries[k])
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for k in 1..self.boundaries.len() {
            let prod = self.boundaries[k - 1].mul(&self.boundaries[k])?;
            if !prod.is_zero() {
                return Err(MacError::invariant(format!(
                    "boundary squares to a nonzero map at degree {}",
                    self.lo + k as i32
                )));
            }
        }
        Ok(())
    }

    /// `H_p = ker ∂_p / im ∂_{p+1}`.
    pub fn homology(&self, p: i32) -> HomologyGroup {
        let Some(k) = self.index(p) else {
            return HomologyGroup::zero();
        };
        let out_rank = elementary_divisors(&self.boundaries[k]).rank();
        let incoming = self
            .index(p + 1)
            .map(|k1| elementary_divisors(&self.boundaries[k1]));
        let (in_rank, torsion) = incoming.map_or((0, Vec::new()), |d| (d.rank(), d.torsion()));
        HomologyGroup {
            rank: self.dims[k] - out_rank - in_rank,
            torsion,
        }
    }

    /// Homology in every degree `lo..=hi`, computing each divisor list once.
    pub fn homology_all(&self) -> Vec<(i32, HomologyGroup)> {
        let diags: Vec<SmithDiagonal> = self.boundaries.iter().map(elementary_divisors).collect();
        (0..self.dims.len())
            .map(|k| {
                let (in_rank, torsion) = diags
                    .get(k + 1)
                    .map_or((0, Vec::new()), |d| (d.rank(), d.torsion()));
                (
                    self.lo + k as i32,
                    HomologyGroup {
                        rank: self.dims[k] - diags[k].rank() - in_rank,
                        torsion,
                    },
                )
            })
            .collect()
    }

    /// The dual cochain complex `Hom(C, Z)`, in negated degrees.
    pub fn dual(&self) -> IntegerChainComplex {
        // C^p = C_{-p}; d: C^p -> C^{p+1} is ∂_{p+1}^T.
        let n = self.dims.len();
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let mut boundaries = Vec::with_capacity(n);
        for k in 0..n {
            // new degree -(hi - k) ... new index k corresponds to old index n-1-k
            let old = n - 1 - k;
            if k == 0 {
                boundaries.push(SparseMatrix::zeros(0, dims[0]));
            } else {
                // out of new degree index k (old degree index old) into new index k-1 (old old+1)
                boundaries.push(self.boundaries[old + 1].transpose());
            }
        }
        IntegerChainComplex {
            lo: -self.hi(),
            dims,
            boundaries,
        }
    }

    /// `Σ (-1)^p dim C_p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if (self.lo + k as i32).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn invariant_factor_normalization() {
        assert_eq!(invariant_factors(vec![n(2), n(3)]), vec![n(6)]);
        assert_eq!(invariant_factors(vec![n(4), n(2), n(1)]), vec![n(2), n(4)]);
        let g = HomologyGroup::new(1, vec![n(2)]).direct_sum(&HomologyGroup::new(0, vec![n(3)]));
        assert_eq!(g, HomologyGroup::new(1, vec![n(6)]));
        assert_eq!(g.to_string(), "Z + Z/6");
        assert_eq!(HomologyGroup::zero().to_string(), "0");
        assert_eq!(HomologyGroup::free(3).to_string(), "Z^3");
    }

    fn circle() -> IntegerChainComplex {
        // two vertices, two edges a: 1->2, b: 2->1
        let d1 = SparseMatrix::from_columns(2, vec![vec![(0, -1), (1, 1)], vec![(0, 1), (1, -1)]]);
        IntegerChainComplex::new(0, vec![2, 2], vec![SparseMatrix::zeros(0, 2), d1]).unwrap()
    }

    #[test]
    fn circle_homology_and_dual() {
        let c = circle();
        assert_eq!(c.homology(0), HomologyGroup::free(1));
        assert_eq!(c.homology(1), HomologyGroup::free(1));
        assert_eq!(c.homology(2), HomologyGroup::zero());
        let d = c.dual();
        assert_eq!(d.lo(), -1);
        assert_eq!(d.homology(0), HomologyGroup::free(1));
        assert_eq!(d.homology(-1), HomologyGroup::free(1));
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d1 = SparseMatrix::from_columns(1, vec![vec![(0, 1)]]);
        let d2 = SparseMatrix::from_columns(1, vec![vec![(0, 1)]]);
        let e = IntegerChainComplex::new(0, vec![1, 1, 1], vec![SparseMatrix::zeros(0, 1), d1, d2]);
        assert!(matches!(e, Err(MacError::Invariant(_))));
    }

    #[test]
    fn cohomology_torsion_shifts_up() {
        // Z --2--> Z in degrees 1 -> 0: H_0 = Z/2, H^1 = Z/2
        let d1 = SparseMatrix::from_columns(1, vec![vec![(0, 2)]]);
        let c = IntegerChainComplex::new(0, vec![1, 1], vec![SparseMatrix::zeros(0, 1), d1]).unwrap();
        assert_eq!(c.homology(0), HomologyGroup::new(0, vec![n(2)]));
        assert_eq!(c.homology(1), HomologyGroup::zero());
        let d = c.dual();
        assert_eq!(d.homology(-1), HomologyGroup::new(0, vec![n(2)]));
        assert_eq!(d.homology(0), HomologyGroup::zero());
    }
}
