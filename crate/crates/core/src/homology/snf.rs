//! Smith normal form over the integers.
//!
//! [`elementary_divisors`] handles large sparse matrices: unit pivots are
//! eliminated in place with machine integers (promoted to big integers on
//! overflow) and whatever is left is finished densely. [`DenseSnf`] keeps the
//! change-of-basis matrices and is meant for small blocks.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;

/// Diagonal of the Smith normal form: `d_1 | d_2 | ... | d_r`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDiagonal {
    pub divisors: Vec<BigUint>,
}

impl SmithDiagonal {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Divisors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.divisors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form diagonal of a sparse integer matrix.
pub fn elementary_divisors(m: &SparseMatrix) -> SmithDiagonal {
    let (units, rest) = match eliminate_units::<i64>(m) {
        Some(r) => r,
        None => eliminate_units::<BigInt>(m).expect("big integers cannot overflow"),
    };
    let mut divisors = vec![BigUint::one(); units];
    if !rest.is_empty() {
        let snf = DenseSnf::new(rest, false);
        divisors.extend(snf.divisors());
    }
    SmithDiagonal { divisors }
}

/// Rank of a sparse integer matrix.
pub fn rank(m: &SparseMatrix) -> usize {
    elementary_divisors(m).rank()
}

trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - a * b`, or `None` on overflow.
    fn mul_sub(&self, a: &Self, b: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul_sub(&self, a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn mul_sub(&self, a: &Self, b: &Self) -> Option<Self> {
        Some(self - a * b)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Eliminates unit pivots. Returns the number eliminated and the remaining
/// nonzero block (rows x cols, dense), or `None` on overflow.
fn eliminate_units<T: Scalar>(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let ncols = m.cols();
    let nrows = m.rows();
    let mut cols: Vec<Vec<(u32, T)>> = (0..ncols)
        .map(|j| {
            m.column(j)
                .iter()
                .map(|&(r, v)| (r, T::from_i64(v)))
                .collect()
        })
        .collect();
    // row -> columns that may hold an entry in it (stale entries allowed)
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for &(r, _) in c {
            row_cols[r as usize].push(j as u32);
        }
    }
    let mut alive_col = vec![true; ncols];
    let mut units = 0usize;
    let mut order: Vec<usize> = (0..ncols).collect();
    order.sort_by_key(|&j| cols[j].len());
    let mut progress = true;
    let mut scratch: Vec<(u32, T)> = Vec::new();
    while progress {
        progress = false;
        for &j in &order {
            if !alive_col[j] || cols[j].is_empty() {
                continue;
            }
            // cheapest unit entry by row population
            let pick = cols[j]
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(r, _)| row_cols[*r as usize].len())
                .map(|(r, v)| (*r, v.clone()));
            let Some((pr, pv)) = pick else { continue };
            progress = true;
            units += 1;
            alive_col[j] = false;
            let pivot_col = std::mem::take(&mut cols[j]);
            let others = std::mem::take(&mut row_cols[pr as usize]);
            for &k in &others {
                let k = k as usize;
                if !alive_col[k] {
                    continue;
                }
                let Ok(pos) = cols[k].binary_search_by_key(&pr, |(r, _)| *r) else {
                    continue;
                };
                // col_k -= (a_{pr,k} / pv) * pivot_col, and pv = ±1
                let factor = {
                    let a = cols[k][pos].1.clone();
                    if pv == T::from_i64(1) {
                        a
                    } else {
                        T::from_i64(0).mul_sub(&a, &T::from_i64(1))?
                    }
                };
                scratch.clear();
                let (mut x, mut y) = (0usize, 0usize);
                let ck = &cols[k];
                while x < ck.len() || y < pivot_col.len() {
                    let rx = ck.get(x).map(|e| e.0).unwrap_or(u32::MAX);
                    let ry = pivot_col.get(y).map(|e| e.0).unwrap_or(u32::MAX);
                    if rx < ry {
                        scratch.push(ck[x].clone());
                        x += 1;
                    } else if ry < rx {
                        let v = T::from_i64(0).mul_sub(&factor, &pivot_col[y].1)?;
                        scratch.push((ry, v));
                        row_cols[ry as usize].push(k as u32);
                        y += 1;
                    } else {
                        let v = ck[x].1.mul_sub(&factor, &pivot_col[y].1)?;
                        if !v.is_nil() {
                            scratch.push((rx, v));
                        }
                        x += 1;
                        y += 1;
                    }
                }
                std::mem::swap(&mut cols[k], &mut scratch);
            }
            // the pivot row is now zero outside the pivot column
            for &(r, _) in &pivot_col {
                if r != pr {
                    row_cols[r as usize].retain(|&c| c as usize != j);
                }
            }
        }
        order.retain(|&j| alive_col[j] && !cols[j].is_empty());
    }
    let live: Vec<usize> = (0..ncols).filter(|&j| alive_col[j] && !cols[j].is_empty()).collect();
    if live.is_empty() {
        return Some((units, Vec::new()));
    }
    let mut rows_used: Vec<u32> = live.iter().flat_map(|&j| cols[j].iter().map(|e| e.0)).collect();
    rows_used.sort_unstable();
    rows_used.dedup();
    let mut dense = vec![vec![BigInt::zero(); live.len()]; rows_used.len()];
    for (c, &j) in live.iter().enumerate() {
        for (r, v) in &cols[j] {
            let i = rows_used.binary_search(r).unwrap();
            dense[i][c] = v.to_big();
        }
    }
    Some((units, dense))
}

/// Dense Smith normal form `P·A·Q = D` with optional unimodular transforms.
#[derive(Clone, Debug)]
pub struct DenseSnf {
    /// `D`, rows x cols.
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub p: Vec<Vec<BigInt>>,
    pub p_inv: Vec<Vec<BigInt>>,
    pub q: Vec<Vec<BigInt>>,
    pub q_inv: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

impl DenseSnf {
    /// Computes the form of `a` (given as rows). When `track` is false the
    /// transform fields are left empty.
    pub fn new(mut a: Vec<Vec<BigInt>>, track: bool) -> Self {
        let rows = a.len();
        let cols = a.first().map_or(0, |r| r.len());
        let (mut p, mut p_inv, mut q, mut q_inv) = if track {
            (identity(rows), identity(rows), identity(cols), identity(cols))
        } else {
            (Vec::new(), Vec::new(), Vec::new(), Vec::new())
        };
        let mut t = 0usize;
        while t < rows.min(cols) {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            swap_rows(&mut a, &mut p, &mut p_inv, t, bi, track);
            swap_cols(&mut a, &mut q, &mut q_inv, t, bj, track);
            loop {
                let mut restart = false;
                for i in t + 1..rows {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let quo = a[i][t].div_floor(&a[t][t]);
                    add_row(&mut a, &mut p, &mut p_inv, i, t, &(-quo), track);
                    if !a[i][t].is_zero() {
                        swap_rows(&mut a, &mut p, &mut p_inv, t, i, track);
                        restart = true;
                    }
                }
                for j in t + 1..cols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let quo = a[t][j].div_floor(&a[t][t]);
                    add_col(&mut a, &mut q, &mut q_inv, j, t, &(-quo), track);
                    if !a[t][j].is_zero() {
                        swap_cols(&mut a, &mut q, &mut q_inv, t, j, track);
                        restart = true;
                    }
                }
                if restart {
                    continue;
                }
                // the pivot must divide the whole trailing block
                let mut bad = None;
                'scan: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if !a[i][j].is_multiple_of(&a[t][t]) {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                match bad {
                    Some(i) => add_row(&mut a, &mut p, &mut p_inv, t, i, &BigInt::one(), track),
                    None => break,
                }
            }
            if a[t][t].is_negative() {
                // multiply row t by -1
                for v in a[t].iter_mut() {
                    *v = -v.clone();
                }
                if track {
                    for v in p[t].iter_mut() {
                        *v = -v.clone();
                    }
                    for row in p_inv.iter_mut() {
                        row[t] = -row[t].clone();
                    }
                }
            }
            t += 1;
        }
        let diag = (0..t).map(|i| a[i][i].clone()).collect();
        DenseSnf {
            diag,
            rank: t,
            rows,
            cols,
            p,
            p_inv,
            q,
            q_inv,
        }
    }

    pub fn divisors(&self) -> Vec<BigUint> {
        self.diag.iter().map(|d| d.magnitude().clone()).collect()
    }
}

fn swap_rows(
    a: &mut [Vec<BigInt>],
    p: &mut [Vec<BigInt>],
    p_inv: &mut [Vec<BigInt>],
    i: usize,
    j: usize,
    track: bool,
) {
    if i == j {
        return;
    }
    a.swap(i, j);
    if track {
        p.swap(i, j);
        for row in p_inv.iter_mut() {
            row.swap(i, j);
        }
    }
}

fn swap_cols(
    a: &mut [Vec<BigInt>],
    q: &mut [Vec<BigInt>],
    q_inv: &mut [Vec<BigInt>],
    i: usize,
    j: usize,
    track: bool,
) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    if track {
        for row in q.iter_mut() {
            row.swap(i, j);
        }
        q_inv.swap(i, j);
    }
}

/// `row_dst += c * row_src`.
fn add_row(
    a: &mut [Vec<BigInt>],
    p: &mut [Vec<BigInt>],
    p_inv: &mut [Vec<BigInt>],
    dst: usize,
    src: usize,
    c: &BigInt,
    track: bool,
) {
    if c.is_zero() {
        return;
    }
    axpy_rows(a, dst, src, c);
    if track {
        axpy_rows(p, dst, src, c);
        // P^{-1} <- P^{-1} E^{-1}: col_src -= c * col_dst
        for row in p_inv.iter_mut() {
            let v = &row[dst] * c;
            row[src] -= v;
        }
    }
}

/// `col_dst += c * col_src`.
fn add_col(
    a: &mut [Vec<BigInt>],
    q: &mut [Vec<BigInt>],
    q_inv: &mut [Vec<BigInt>],
    dst: usize,
    src: usize,
    c: &BigInt,
    track: bool,
) {
    if c.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let v = &row[src] * c;
        row[dst] += v;
    }
    if track {
        for row in q.iter_mut() {
            let v = &row[src] * c;
            row[dst] += v;
        }
        // Q^{-1} <- E^{-1} Q^{-1}: row_src -= c * row_dst
        let neg = -c.clone();
        axpy_rows(q_inv, src, dst, &neg);
    }
}

fn axpy_rows(m: &mut [Vec<BigInt>], dst: usize, src: usize, c: &BigInt) {
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x += y * c;
        }
    }
}

/// Matrix product of dense big-integer matrices given as rows.
pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); cols];
            for k in 0..inner {
                if row[k].is_zero() {
                    continue;
                }
                for (o, bv) in out.iter_mut().zip(&b[k]) {
                    if !bv.is_zero() {
                        *o += &row[k] * bv;
                    }
                }
            }
            out
        })
        .collect()
}

/// Determinant of a square matrix by Bareiss fraction-free elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn sparse(rows: &[&[i64]]) -> SparseMatrix {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::zeros(nr, nc);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.push(i, j, v);
            }
        }
        m
    }

    fn ints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn identity_and_simple_torsion() {
        let d = elementary_divisors(&sparse(&[&[1, 0], &[0, 1]]));
        assert_eq!(d.divisors, ints(&[1, 1]));
        let d = elementary_divisors(&sparse(&[&[2, 0], &[0, 0]]));
        assert_eq!(d.divisors, ints(&[2]));
        assert_eq!(d.rank(), 1);
    }

    #[test]
    fn divisibility_is_restored() {
        let d = elementary_divisors(&sparse(&[&[2, 0], &[0, 3]]));
        assert_eq!(d.divisors, ints(&[1, 6]));
        let d = elementary_divisors(&sparse(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]));
        assert_eq!(d.divisors, ints(&[2, 2, 60]));
    }

    #[test]
    fn transforms_reproduce_the_diagonal() {
        let a = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = DenseSnf::new(a.clone(), true);
        assert_eq!(s.divisors(), ints(&[2, 6, 12]));
        let d = mat_mul(&mat_mul(&s.p, &a), &s.q);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diag[i].clone() } else { BigInt::zero() };
                assert_eq!(d[i][j], want);
            }
        }
        assert_eq!(mat_mul(&s.p, &s.p_inv), identity(3));
        assert_eq!(mat_mul(&s.q_inv, &s.q), identity(3));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&big(&[&[2, 1], &[1, 1]])), BigInt::from(1));
        assert_eq!(determinant(&big(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(determinant(&big(&[&[3]])), BigInt::from(3));
        assert_eq!(determinant(&big(&[&[0, 2, 0], &[0, 0, 1], &[1, 0, 0]])), BigInt::from(2));
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let h = i64::MAX / 2;
        let m = sparse(&[&[1, h, 0], &[h, 1, h], &[0, h, 1]]);
        let dense = DenseSnf::new(big(&[&[1, h, 0], &[h, 1, h], &[0, h, 1]]), false);
        assert_eq!(elementary_divisors(&m).divisors, dense.divisors());
    }

    proptest! {
        #[test]
        fn sparse_agrees_with_dense(
            rows in 1usize..7,
            cols in 1usize..7,
            seed in proptest::collection::vec(-3i64..4, 49),
        ) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * 7 + j]).collect())
                .collect();
            let refs: Vec<&[i64]> = data.iter().map(|r| r.as_slice()).collect();
            let sp = elementary_divisors(&sparse(&refs));
            let de = DenseSnf::new(big(&refs), true);
            prop_assert_eq!(&sp.divisors, &de.divisors());
            for w in sp.divisors.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            let d = mat_mul(&mat_mul(&de.p, &big(&refs)), &de.q);
            for i in 0..rows {
                for j in 0..cols {
                    let want = if i == j && i < de.rank { de.diag[i].clone() } else { BigInt::zero() };
                    prop_assert_eq!(&d[i][j], &want);
                }
            }
        }
    }
}
