//! Chain complexes with named basis elements, and coordinates of
//! (co)homology classes in them.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::snf::{mat_mul, DenseSnf};
use super::{elementary_divisors, HomologyGroup, SparseMatrix};
use crate::error::{MacError, Result};

/// Whether the differential lowers (chains) or raises (cochains) degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lowering,
    Raising,
}

impl Direction {
    fn step(self) -> i32 {
        match self {
            Direction::Lowering => -1,
            Direction::Raising => 1,
        }
    }
}

/// A finite free complex whose basis elements are values of type `B`.
pub struct BasedComplex<B> {
    direction: Direction,
    cells: BTreeMap<i32, Vec<B>>,
    index: HashMap<B, (i32, usize)>,
    /// Differential out of each degree; rows index the target degree.
    diff: BTreeMap<i32, SparseMatrix>,
    solvers: BTreeMap<i32, OnceLock<ClassSolver>>,
}

impl<B: Clone + Ord + Hash> BasedComplex<B> {
    /// Builds the complex spanned by `cells` with differential `d`. Every
    /// term of `d(b)` must be a listed cell one degree away; `d∘d = 0` is
    /// verified.
    pub fn new<I, F>(direction: Direction, cells: I, d: F) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, B)>,
        F: Fn(&B) -> Vec<(B, i64)>,
    {
        let mut by_deg: BTreeMap<i32, Vec<B>> = BTreeMap::new();
        for (p, b) in cells {
            by_deg.entry(p).or_default().push(b);
        }
        let mut index = HashMap::new();
        for (p, list) in by_deg.iter_mut() {
            list.sort();
            list.dedup();
            for (k, b) in list.iter().enumerate() {
                if index.insert(b.clone(), (*p, k)).is_some() {
                    return Err(MacError::invariant("a basis element sits in two degrees"));
                }
            }
        }
        let step = direction.step();
        let mut diff = BTreeMap::new();
        for (p, list) in &by_deg {
            let target = p + step;
            let rows = by_deg.get(&target).map_or(0, Vec::len);
            let mut columns = Vec::with_capacity(list.len());
            for b in list {
                let mut col = Vec::new();
                for (t, c) in d(b) {
                    match index.get(&t) {
                        Some(&(q, k)) if q == target => col.push((k as u32, c)),
                        _ => {
                            return Err(MacError::invariant(
                                "differential leaves the listed basis",
                            ))
                        }
                    }
                }
                columns.push(col);
            }
            diff.insert(*p, SparseMatrix::from_columns(rows, columns));
        }
        for (p, m) in &diff {
            if let Some(next) = diff.get(&(p + step)) {
                if !next.mul(m)?.is_zero() {
                    return Err(MacError::invariant(format!(
                        "differential squares to a nonzero map at degree {p}"
                    )));
                }
            }
        }
        let solvers = by_deg.keys().map(|p| (*p, OnceLock::new())).collect();
        Ok(BasedComplex {
            direction,
            cells: by_deg,
            index,
            diff,
            solvers,
        })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.cells.keys().copied()
    }

    pub fn basis(&self, p: i32) -> &[B] {
        self.cells.get(&p).map_or(&[], Vec::as_slice)
    }

    pub fn degree_of(&self, b: &B) -> Option<i32> {
        self.index.get(b).map(|e| e.0)
    }

    pub fn contains(&self, b: &B) -> bool {
        self.index.contains_key(b)
    }

    fn incoming(&self, p: i32) -> Option<&SparseMatrix> {
        self.diff.get(&(p - self.direction.step()))
    }

    fn outgoing(&self, p: i32) -> Option<&SparseMatrix> {
        self.diff.get(&p)
    }

    pub fn homology(&self, p: i32) -> HomologyGroup {
        let dim = self.basis(p).len();
        if dim == 0 {
            return HomologyGroup::zero();
        }
        let out_rank = self.outgoing(p).map_or(0, |m| elementary_divisors(m).rank());
        let (in_rank, torsion) = self.incoming(p).map_or((0, Vec::new()), |m| {
            let d = elementary_divisors(m);
            (d.rank(), d.torsion())
        });
        HomologyGroup {
            rank: dim - out_rank - in_rank,
            torsion,
        }
    }

    /// Nonzero (co)homology groups by degree.
    pub fn homology_all(&self) -> BTreeMap<i32, HomologyGroup> {
        let diags: BTreeMap<i32, super::SmithDiagonal> = self
            .diff
            .iter()
            .map(|(p, m)| (*p, elementary_divisors(m)))
            .collect();
        let step = self.direction.step();
        let mut out = BTreeMap::new();
        for (p, list) in &self.cells {
            let out_rank = diags.get(p).map_or(0, |d| d.rank());
            let (in_rank, torsion) = diags
                .get(&(p - step))
                .map_or((0, Vec::new()), |d| (d.rank(), d.torsion()));
            let g = HomologyGroup {
                rank: list.len() - out_rank - in_rank,
                torsion,
            };
            if !g.is_zero() {
                out.insert(*p, g);
            }
        }
        out
    }

    /// The differential of a combination of basis elements.
    pub fn differential(&self, chain: &[(B, i64)]) -> Result<Vec<(B, i64)>> {
        let mut acc: BTreeMap<B, i64> = BTreeMap::new();
        let step = self.direction.step();
        for (b, c) in chain {
            let &(p, k) = self
                .index
                .get(b)
                .ok_or_else(|| MacError::input("element outside the basis"))?;
            let targets = self.basis(p + step);
            for &(r, v) in self.diff[&p].column(k) {
                *acc.entry(targets[r as usize].clone()).or_insert(0) += c * v;
            }
        }
        Ok(acc.into_iter().filter(|e| e.1 != 0).collect())
    }

    /// Dense coordinate vector of a homogeneous combination in degree `p`.
    pub fn vector(&self, p: i32, chain: &[(B, i64)]) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.basis(p).len()];
        for (b, c) in chain {
            match self.index.get(b) {
                Some(&(q, k)) if q == p => v[k] += BigInt::from(*c),
                Some(_) => return Err(MacError::input(format!("element not of degree {p}"))),
                None => return Err(MacError::input("element outside the basis")),
            }
        }
        Ok(v)
    }

    /// Class-coordinate machinery for degree `p`, computed once.
    pub fn solver(&self, p: i32) -> &ClassSolver {
        static EMPTY: OnceLock<ClassSolver> = OnceLock::new();
        match self.solvers.get(&p) {
            Some(cell) => cell.get_or_init(|| ClassSolver::new(self, p)),
            None => EMPTY.get_or_init(ClassSolver::trivial),
        }
    }

    /// Coordinates of the class of a cycle `chain` of degree `p`.
    pub fn class_of(&self, p: i32, chain: &[(B, i64)]) -> Result<ClassCoords> {
        let v = self.vector(p, chain)?;
        self.solver(p).coords(&v)
    }

    /// Generators of the (co)homology in degree `p`: torsion generators
    /// first (in the order of [`HomologyGroup::torsion`]), then free ones.
    pub fn generators(&self, p: i32) -> Vec<Vec<(B, BigInt)>> {
        let basis = self.basis(p);
        self.solver(p)
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (basis[k].clone(), c.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Coordinates of a class: residues for the torsion summands and integers for
/// the free summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassCoords {
    pub torsion: Vec<(BigInt, BigUint)>,
    pub free: Vec<BigInt>,
}

impl ClassCoords {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(|(r, _)| r.is_zero())
    }

    pub fn negate(&self) -> ClassCoords {
        ClassCoords {
            torsion: self
                .torsion
                .iter()
                .map(|(r, d)| (reduce(&-r, d), d.clone()))
                .collect(),
            free: self.free.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &ClassCoords) -> ClassCoords {
        ClassCoords {
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .map(|((a, d), (b, _))| (reduce(&(a + b), d), d.clone()))
                .collect(),
            free: self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect(),
        }
    }
}

fn reduce(x: &BigInt, d: &BigUint) -> BigInt {
    x.mod_floor(&BigInt::from(d.clone()))
}

/// Smith-form data for one degree.
pub struct ClassSolver {
    dim: usize,
    /// Outgoing differential (dense rows) for the cycle test.
    outgoing: Vec<Vec<BigInt>>,
    /// Rows `a..` of `Q_A^{-1}`: kernel coordinates.
    kernel_coords: Vec<Vec<BigInt>>,
    p_m: Vec<Vec<BigInt>>,
    /// Divisors of the boundary block, one per leading coordinate.
    divisors: Vec<BigUint>,
    /// Cycle representing each coordinate direction (in the basis of the degree).
    generators: Vec<Vec<BigInt>>,
    group: HomologyGroup,
}

impl ClassSolver {
    fn trivial() -> Self {
        ClassSolver {
            dim: 0,
            outgoing: Vec::new(),
            kernel_coords: Vec::new(),
            p_m: Vec::new(),
            divisors: Vec::new(),
            generators: Vec::new(),
            group: HomologyGroup::zero(),
        }
    }

    fn new<B: Clone + Ord + Hash>(c: &BasedComplex<B>, p: i32) -> Self {
        let dim = c.basis(p).len();
        let outgoing = c.outgoing(p).map_or_else(Vec::new, SparseMatrix::to_dense);
        let a_snf = DenseSnf::new(
            outgoing.clone(),
            true,
        );
        let (q_a, q_a_inv) = if outgoing.is_empty() {
            (identity(dim), identity(dim))
        } else {
            (a_snf.q.clone(), a_snf.q_inv.clone())
        };
        let a = a_snf.rank;
        let k = dim - a;
        let kernel_coords: Vec<Vec<BigInt>> = q_a_inv[a..].to_vec();
        let incoming = c
            .incoming(p)
            .map_or_else(|| vec![Vec::new(); dim], SparseMatrix::to_dense);
        let m = mat_mul(&kernel_coords, &incoming);
        let m_snf = DenseSnf::new(m, true);
        let (p_m, p_m_inv) = if m_snf.rows == 0 {
            (Vec::new(), Vec::new())
        } else {
            (m_snf.p.clone(), m_snf.p_inv.clone())
        };
        let b = m_snf.rank;
        let divisors = m_snf.divisors();
        // kernel basis: columns a.. of Q_A
        let kernel: Vec<Vec<BigInt>> = (0..k)
            .map(|i| (0..dim).map(|r| q_a[r][a + i].clone()).collect())
            .collect();
        let mut generators = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..k {
            if i < b && divisors[i].is_one() {
                continue;
            }
            if i < b {
                torsion.push(divisors[i].clone());
            }
            let mut g = vec![BigInt::zero(); dim];
            for (j, kv) in kernel.iter().enumerate() {
                let coef = &p_m_inv[j][i];
                if coef.is_zero() {
                    continue;
                }
                for (gr, x) in g.iter_mut().zip(kv) {
                    *gr += coef * x;
                }
            }
            generators.push(g);
        }
        let group = HomologyGroup {
            rank: k - b,
            torsion,
        };
        ClassSolver {
            dim,
            outgoing,
            kernel_coords,
            p_m,
            divisors,
            generators,
            group,
        }
    }

    pub fn group(&self) -> &HomologyGroup {
        &self.group
    }

    /// Coordinates of the class of the cycle `z`; an input error if `z` is not a cycle.
    pub fn coords(&self, z: &[BigInt]) -> Result<ClassCoords> {
        if z.len() != self.dim {
            return Err(MacError::input("vector has the wrong length"));
        }
        for row in &self.outgoing {
            let s: BigInt = row.iter().zip(z).map(|(a, b)| a * b).sum();
            if !s.is_zero() {
                return Err(MacError::input("not a cycle"));
            }
        }
        let y: Vec<BigInt> = self
            .kernel_coords
            .iter()
            .map(|row| row.iter().zip(z).map(|(a, b)| a * b).sum())
            .collect();
        let c: Vec<BigInt> = self
            .p_m
            .iter()
            .map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum())
            .collect();
        let c = if self.p_m.is_empty() { y } else { c };
        let b = self.divisors.len();
        let mut torsion = Vec::new();
        for i in 0..b {
            if !self.divisors[i].is_one() {
                torsion.push((reduce(&c[i], &self.divisors[i]), self.divisors[i].clone()));
            }
        }
        Ok(ClassCoords {
            torsion,
            free: c[b..].to_vec(),
        })
    }

    pub fn is_boundary(&self, z: &[BigInt]) -> Result<bool> {
        Ok(self.coords(z)?.is_zero())
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Narrows a coefficient, failing with a resource error beyond 64 bits.
pub fn to_i64(v: &BigInt) -> Result<i64> {
    i64::try_from(v.clone()).map_err(|_| MacError::resource("coefficient exceeds 64 bits"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Circle with two vertices `a, b` and edges `x: a->b`, `y: b->a`, plus a
    /// 2-cell glued along `2x + 2y` (so `H_1 = Z/2`, projective-plane style).
    fn complex() -> BasedComplex<&'static str> {
        BasedComplex::new(
            Direction::Lowering,
            [(0, "a"), (0, "b"), (1, "x"), (1, "y"), (2, "f")],
            |c| match *c {
                "x" => vec![("b", 1), ("a", -1)],
                "y" => vec![("a", 1), ("b", -1)],
                "f" => vec![("x", 2), ("y", 2)],
                _ => vec![],
            },
        )
        .unwrap()
    }

    #[test]
    fn homology_with_torsion() {
        let c = complex();
        assert_eq!(c.homology(0), HomologyGroup::free(1));
        assert_eq!(c.homology(1), HomologyGroup::new(0, vec![BigUint::from(2u32)]));
        assert_eq!(c.homology(2), HomologyGroup::zero());
        assert_eq!(c.solver(1).group(), &c.homology(1));
    }

    #[test]
    fn class_coordinates() {
        let c = complex();
        let cls = c.class_of(1, &[("x", 1), ("y", 1)]).unwrap();
        assert!(!cls.is_zero());
        assert_eq!(cls.torsion.len(), 1);
        let twice = c.class_of(1, &[("x", 2), ("y", 2)]).unwrap();
        assert!(twice.is_zero());
        assert_eq!(cls.add(&cls), twice);
        assert!(c.class_of(1, &[("x", 1)]).is_err());
        let a = c.class_of(0, &[("a", 1)]).unwrap();
        let b = c.class_of(0, &[("b", 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.free.len(), 1);
        assert_eq!(a.free[0].magnitude(), &BigUint::one());
    }

    #[test]
    fn generators_are_cycles() {
        let c = complex();
        for p in 0..=2 {
            for g in c.generators(p) {
                let chain: Vec<(&str, i64)> =
                    g.iter().map(|(b, v)| (*b, to_i64(v).unwrap())).collect();
                assert!(c.differential(&chain).unwrap().is_empty());
                assert!(!c.class_of(p, &chain).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rejects_foreign_targets() {
        let r = BasedComplex::new(Direction::Raising, [(0, 1u8)], |_| vec![(2u8, 1)]);
        assert!(r.is_err());
    }
}
