//! Dense exact linear algebra over the rationals.
//!
//! Everything in the crate reduces to ranks, kernels and linear solves over `Q`. Matrices are
//! small (tens to a few hundred columns) and very sparse, so elimination is plain Gauss-Jordan on
//! `BigRational` entries, skipping zero entries in the inner loops.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Row-major dense matrix with rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of a reduced row echelon computation.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&x| q(x)).collect(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m[(r, c)] = x.clone();
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = &self[(r, c)];
                if !x.is_zero() {
                    t[(c, r)] = x.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let mut out = vec![Q::zero(); self.rows];
        for (r, o) in out.iter_mut().enumerate() {
            for (c, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let a = &self[(r, c)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Matrix, s: &Q) {
        assert_eq!(self.shape(), other.shape());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out[(r, k)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m[(lead, c)].recip();
            for k in c..m.cols {
                if !m[(lead, k)].is_zero() {
                    let v = &m[(lead, k)] * &inv;
                    m[(lead, k)] = v;
                }
            }
            let pivot_row: Vec<(usize, Q)> = (c..m.cols)
                .filter(|&k| !m[(lead, k)].is_zero())
                .map(|k| (k, m[(lead, k)].clone()))
                .collect();
            for r in 0..m.rows {
                if r == lead || m[(r, c)].is_zero() {
                    continue;
                }
                let f = m[(r, c)].clone();
                for (k, x) in &pivot_row {
                    let v = &m[(r, *k)] - &f * x;
                    m[(r, *k)] = v;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if self.rows < self.cols {
            self.rref().pivots.len()
        } else {
            self.transpose().rref().pivots.len()
        }
    }

    /// Basis of the right kernel `{x : A x = 0}`, returned as columns of a matrix.
    pub fn nullspace(&self) -> Matrix {
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = &matrix[(r, f)];
                if !x.is_zero() {
                    basis[(p, k)] = -x.clone();
                }
            }
        }
        basis
    }

    /// A basis of the column space, chosen among the original columns (first maximal subset).
    pub fn column_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// One solution of `A x = b`, or `None` if inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hcat(&Matrix::from_columns(self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Solve `A X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hcat(b);
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = matrix[(r, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    /// Determinant by fraction-free (Bareiss) elimination on a cleared-denominator copy.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Q::one();
        }
        let mut denom = BigInt::one();
        for x in &self.data {
            denom = num_integer::Integer::lcm(&denom, x.denom());
        }
        let mut a: Vec<BigInt> = self
            .data
            .iter()
            .map(|x| x.numer() * (&denom / x.denom()))
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return Q::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = a[k * n + k].clone();
        }
        let det = sign * &a[n * n - 1];
        BigRational::new(det, num_traits::pow(denom, n))
    }
}

/// Maintains a row-reduced spanning set of a subspace of `Q^n`, pivoting on the *largest* index.
///
/// Used for ideal saturation: with basis elements ordered by (length, lex), reducing against the
/// highest index leaves normal forms on the smaller ones.
#[derive(Clone, Debug, Default)]
pub struct HighPivotEchelon {
    n: usize,
    /// (pivot index, sparse row with coefficient 1 at the pivot)
    rows: Vec<(usize, Vec<(usize, Q)>)>,
}

impl HighPivotEchelon {
    pub fn new(n: usize) -> Self {
        HighPivotEchelon { n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.iter().any(|(p, _)| *p == i)
    }

    /// Reduce a dense vector against the current rows until no pivot entry remains.
    pub fn reduce(&self, v: &mut [Q]) {
        assert_eq!(v.len(), self.n);
        loop {
            let mut changed = false;
            for (p, row) in &self.rows {
                if v[*p].is_zero() {
                    continue;
                }
                let f = v[*p].clone();
                for (k, x) in row {
                    v[*k] -= &f * x;
                }
                changed = true;
            }
            if !changed {
                break;
            }
        }
    }

    /// Insert a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Q>) -> bool {
        self.reduce(&mut v);
        let Some(p) = (0..self.n).rev().find(|&i| !v[i].is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        let row: Vec<(usize, Q)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x * &inv))
            .collect();
        // keep rows fully reduced: clear the new pivot from the existing rows
        for (_, other) in self.rows.iter_mut() {
            if let Some(pos) = other.iter().position(|(k, _)| *k == p) {
                let f = other[pos].1.clone();
                let mut dense = vec![Q::zero(); self.n];
                for (k, x) in other.iter() {
                    dense[*k] = x.clone();
                }
                for (k, x) in &row {
                    dense[*k] -= &f * x;
                }
                *other = dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
            }
        }
        self.rows.push((p, row));
        true
    }

    /// Sparse rows (pivot, entries) of the reduced basis.
    pub fn rows(&self) -> &[(usize, Vec<(usize, Q)>)] {
        &self.rows
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Q>> {
        self.rows
            .iter()
            .map(|(_, row)| {
                let mut v = vec![Q::zero(); self.n];
                for (k, x) in row {
                    v[*k] = x.clone();
                }
                v
            })
            .collect()
    }
}

/// Rank of a set of column vectors of common length `n`.
pub fn span_rank(n: usize, vectors: &[Vec<Q>]) -> usize {
    Matrix::from_columns(n, vectors).rank()
}

/// Extend the columns of `sub` (assumed independent) by columns of `whole`, greedily, returning
/// the indices of the columns of `whole` that complete a basis of `span(sub) + span(whole)`.
pub fn complement_columns(sub: &Matrix, whole: &Matrix) -> Vec<usize> {
    assert_eq!(sub.rows(), whole.rows());
    let combined = sub.hcat(whole);
    combined
        .rref()
        .pivots
        .into_iter()
        .filter(|&p| p >= sub.cols())
        .map(|p| p - sub.cols())
        .collect()
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", -x.numer(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_i64(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 2);
        assert!(m.mul(&ns).is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert!(m.solve(&[q(1), q(2)]).is_none());
        let x = m.solve(&[q(3), q(3)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(3), q(3)]);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = Matrix::from_rows(vec![
            vec![q_frac(1, 2), q(2), q(0)],
            vec![q(3), q(-1), q(4)],
            vec![q(0), q_frac(5, 3), q(1)],
        ]);
        // cofactor expansion along the first row
        let expected = q_frac(1, 2) * (q(-1) * q(1) - q(4) * q_frac(5, 3))
            - q(2) * (q(3) * q(1) - q(4) * q(0));
        assert_eq!(m.determinant(), expected);
        assert_eq!(Matrix::zeros(2, 2).determinant(), q(0));
    }

    #[test]
    fn high_pivot_echelon_reduces_to_low_indices() {
        let mut e = HighPivotEchelon::new(3);
        assert!(e.insert(vec![q(1), q(0), q(1)]));
        assert!(!e.insert(vec![q(2), q(0), q(2)]));
        assert!(e.is_pivot(2));
        let mut v = vec![q(0), q(0), q(5)];
        e.reduce(&mut v);
        assert_eq!(v, vec![q(-5), q(0), q(0)]);
    }
}
