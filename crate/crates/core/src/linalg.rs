//! Sparse exact rational matrices.
//!
//! A [`Matrix`] is stored row-major; each row is a list of `(column, value)`
//! pairs sorted by column with no zero values. Elimination routines work on
//! rows directly. Rank uses fraction-free integer elimination; kernels and
//! column spaces use reduced row echelon form over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{lcm_denominators, Q};

/// A sparse row: sorted `(column, nonzero value)` pairs.
pub type SparseRow = Vec<(usize, Q)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `target += c * source` on sparse rows.
pub fn axpy_row(target: &SparseRow, c: &Q, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        if j == source.len() || (i < target.len() && target[i].0 < source[j].0) {
            out.push(target[i].clone());
            i += 1;
        } else if i == target.len() || source[j].0 < target[i].0 {
            let v = c * &source[j].1;
            if !v.is_zero() {
                out.push((source[j].0, v));
            }
            j += 1;
        } else {
            let v = &target[i].1 + &(c * &source[j].1);
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn row_get(row: &SparseRow, col: usize) -> Option<&Q> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Row echelon data: pivot rows keyed by leading column, each normalized to a leading 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduces `row` against the stored pivots (leading entries only).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut start = 0;
        loop {
            let next = row
                .iter()
                .skip_while(|e| e.0 < start)
                .find(|e| self.pivots.contains_key(&e.0))
                .map(|e| (e.0, e.1.clone()));
            match next {
                None => return row,
                Some((col, c)) => {
                    row = axpy_row(&row, &(-c), &self.pivots[&col]);
                    start = col + 1;
                }
            }
        }
    }

    /// Inserts `row` if it is independent of the current span; returns whether it was.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        let lead = row[0].0;
        let inv = row[0].1.recip();
        let row: SparseRow = row.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced pivot rows in increasing pivot-column order.
    pub fn rref_rows(&self) -> Vec<(usize, SparseRow)> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&col, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            loop {
                let next = r
                    .iter()
                    .skip(1)
                    .find(|e| done.contains_key(&e.0))
                    .map(|e| (e.0, e.1.clone()));
                match next {
                    None => break,
                    Some((c, v)) => r = axpy_row(&r, &(-v), &done[&c]),
                }
            }
            done.insert(col, r);
        }
        done.into_iter().collect()
    }
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Matrix {
        Matrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix { nrows: n, ncols: n, rows: (0..n).map(|i| vec![(i, Q::one())]).collect() }
    }

    pub fn scalar(n: usize, c: &Q) -> Matrix {
        Matrix::identity(n).scale(c)
    }

    /// Builds from sparse rows; rows must be sorted and zero-free.
    pub fn from_rows(nrows: usize, ncols: usize, rows: Vec<SparseRow>) -> Matrix {
        assert_eq!(rows.len(), nrows);
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)
            && r.iter().all(|e| e.0 < ncols && !e.1.is_zero())));
        Matrix { nrows, ncols, rows }
    }

    /// Builds from triplets, summing duplicates.
    pub fn from_triplets(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, Q)>) -> Matrix {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); nrows];
        for (i, j, v) in entries {
            assert!(i < nrows && j < ncols, "triplet out of range");
            *acc[i].entry(j).or_insert_with(Q::zero) += v;
        }
        let rows = acc
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix { nrows, ncols, rows }
    }

    pub fn from_dense(data: &[Vec<Q>]) -> Matrix {
        let nrows = data.len();
        let ncols = data.first().map_or(0, |r| r.len());
        let rows = data
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols);
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
            })
            .collect();
        Matrix { nrows, ncols, rows }
    }

    pub fn from_ints(data: &[Vec<i64>]) -> Matrix {
        let dense: Vec<Vec<Q>> = data.iter().map(|r| r.iter().map(|&x| Q::from_int(x)).collect()).collect();
        Matrix::from_dense(&dense)
    }

    /// Column matrix from a dense vector.
    pub fn column(v: &[Q]) -> Matrix {
        let rows = v.iter().map(|x| if x.is_zero() { vec![] } else { vec![(0, x.clone())] }).collect();
        Matrix { nrows: v.len(), ncols: 1, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        row_get(&self.rows[i], j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j].push((i, v.clone()));
            }
        }
        Matrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.nrows, self.ncols);
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect()).collect();
        Matrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Q::one())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.axpy(&Q::one(), other)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.axpy(&-Q::one(), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Q, other: &Matrix) -> Matrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch in add");
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| axpy_row(a, c, b)).collect();
        Matrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in mul");
        let mut acc: Vec<Option<Q>> = vec![None; other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            for (k, a) in r {
                for (j, b) in &other.rows[*k] {
                    let p = a * b;
                    match &mut acc[*j] {
                        Some(x) => *x += p,
                        slot @ None => {
                            *slot = Some(p);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = acc[j].take().unwrap();
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            touched.clear();
            rows.push(out);
        }
        Matrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    /// Matrix-vector product on a dense vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|r| r.iter().filter(|(j, _)| !v[*j].is_zero()).map(|(j, a)| a * &v[*j]).sum())
            .collect()
    }

    /// Dense column `j`.
    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    /// `I_k ⊗ self` (block diagonal with `k` copies).
    pub fn kron_identity_left(&self, k: usize) -> Matrix {
        let mut rows = Vec::with_capacity(k * self.nrows);
        for b in 0..k {
            for r in &self.rows {
                rows.push(r.iter().map(|(j, v)| (b * self.ncols + j, v.clone())).collect());
            }
        }
        Matrix { nrows: k * self.nrows, ncols: k * self.ncols, rows }
    }

    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let nrows = blocks.iter().map(|b| b.nrows).sum();
        let ncols = blocks.iter().map(|b| b.ncols).sum();
        let mut rows = Vec::with_capacity(nrows);
        let mut off = 0;
        for b in blocks {
            for r in &b.rows {
                rows.push(r.iter().map(|(j, v)| (off + j, v.clone())).collect());
            }
            off += b.ncols;
        }
        Matrix { nrows, ncols, rows }
    }

    /// Block matrix from a grid of blocks; `None` entries are zero blocks.
    pub fn from_blocks(row_dims: &[usize], col_dims: &[usize], block: impl Fn(usize, usize) -> Option<Matrix>) -> Matrix {
        let nrows: usize = row_dims.iter().sum();
        let ncols: usize = col_dims.iter().sum();
        let mut rows: Vec<SparseRow> = vec![Vec::new(); nrows];
        let mut roff = 0;
        for (bi, &rd) in row_dims.iter().enumerate() {
            let mut coff = 0;
            for (bj, &cd) in col_dims.iter().enumerate() {
                if let Some(m) = block(bi, bj) {
                    assert_eq!((m.nrows, m.ncols), (rd, cd), "block shape mismatch at ({bi},{bj})");
                    for (i, r) in m.rows.iter().enumerate() {
                        rows[roff + i].extend(r.iter().map(|(j, v)| (coff + j, v.clone())));
                    }
                }
                coff += cd;
            }
            roff += rd;
        }
        Matrix { nrows, ncols, rows }
    }

    pub fn hstack(blocks: &[Matrix]) -> Matrix {
        let nrows = blocks.first().map_or(0, |b| b.nrows);
        let dims: Vec<usize> = blocks.iter().map(|b| b.ncols).collect();
        Matrix::from_blocks(&[nrows], &dims, |_, j| Some(blocks[j].clone()))
    }

    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let ncols = blocks.first().map_or(0, |b| b.ncols);
        let dims: Vec<usize> = blocks.iter().map(|b| b.nrows).collect();
        Matrix::from_blocks(&dims, &[ncols], |i, _| Some(blocks[i].clone()))
    }

    /// Submatrix on the given rows and columns (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut colmap = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            colmap[c] = k;
        }
        let out = rows
            .iter()
            .map(|&i| {
                let mut r: SparseRow = self.rows[i]
                    .iter()
                    .filter(|(j, _)| colmap[*j] != usize::MAX)
                    .map(|(j, v)| (colmap[*j], v.clone()))
                    .collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        Matrix { nrows: rows.len(), ncols: cols.len(), rows: out }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let cols: Vec<usize> = (0..self.ncols).collect();
        self.select(rows, &cols)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let rows: Vec<usize> = (0..self.nrows).collect();
        self.select(&rows, cols)
    }

    /// Row echelon form of the rows of `self`.
    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        let mut order: Vec<usize> = (0..self.nrows).collect();
        order.sort_by_key(|&i| self.rows[i].len());
        for i in order {
            e.insert(self.rows[i].clone());
        }
        e
    }

    /// Reduced row echelon form: `(pivot columns, nonzero rows)` as an `r × ncols` matrix.
    pub fn rref(&self) -> (Vec<usize>, Matrix) {
        let rows = self.echelon().rref_rows();
        let pivots = rows.iter().map(|(c, _)| *c).collect();
        let r = rows.len();
        (pivots, Matrix { nrows: r, ncols: self.ncols, rows: rows.into_iter().map(|(_, r)| r).collect() })
    }

    /// Rank by fraction-free integer elimination with content removal.
    pub fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
        for r in &self.rows {
            if r.is_empty() {
                continue;
            }
            let mut row = integer_row(r);
            while let Some(lead) = row.first().map(|e| e.0) {
                match pivots.get(&lead) {
                    None => {
                        pivots.insert(lead, row);
                        break;
                    }
                    Some(p) => row = ff_eliminate(&row, p),
                }
            }
        }
        pivots.len()
    }

    /// Basis of the kernel, as the columns of an `ncols × k` matrix.
    pub fn kernel(&self) -> Matrix {
        let (pivots, r) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.ncols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.ncols).filter(|&j| !is_pivot[j]).collect();
        let mut free_idx = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            free_idx[f] = k;
        }
        let mut trip = Vec::new();
        for &f in &free {
            trip.push((f, free_idx[f], Q::one()));
        }
        for (row, &p) in r.rows.iter().zip(&pivots) {
            for (j, v) in row.iter().skip(1) {
                trip.push((p, free_idx[*j], -v.clone()));
            }
        }
        Matrix::from_triplets(self.ncols, free.len(), trip)
    }

    /// Indices of a maximal set of independent columns (pivot columns).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivot_columns()
    }

    /// Rank factorization `self = C · R` with `C` the pivot columns and `R` the RREF rows.
    pub fn rank_factorization(&self) -> (Matrix, Matrix) {
        let (pivots, r) = self.rref();
        (self.select_cols(&pivots), r)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = Matrix::hstack(&[self.clone(), Matrix::identity(n)]);
        let (pivots, r) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.select(&rows, &cols))
    }

    /// Left inverse of a matrix with independent columns: `L` with `L · self = I`.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let rows = t.independent_columns();
        if rows.len() != self.ncols {
            return None;
        }
        let inv = self.select_rows(&rows).inverse()?;
        let sel = Matrix::from_triplets(rows.len(), self.nrows, rows.iter().enumerate().map(|(k, &i)| (k, i, Q::one())));
        Some(inv.mul(&sel))
    }

    /// Solves `self · x = b` for each column of `b`; `None` if inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.nrows, b.nrows);
        let aug = Matrix::hstack(&[self.clone(), b.clone()]);
        let (pivots, r) = aug.rref();
        if pivots.iter().any(|&p| p >= self.ncols) {
            return None;
        }
        let mut trip = Vec::new();
        for (row, &p) in r.rows.iter().zip(&pivots) {
            for (j, v) in row {
                if *j >= self.ncols {
                    trip.push((p, j - self.ncols, v.clone()));
                }
            }
        }
        Some(Matrix::from_triplets(self.ncols, b.ncols, trip))
    }

    /// Whether `self` is a scalar multiple of the identity; returns the scalar.
    pub fn as_scalar(&self) -> Option<Q> {
        if self.nrows != self.ncols {
            return None;
        }
        if self.nrows == 0 {
            return Some(Q::one());
        }
        let c = self.get(0, 0);
        if self.rows.iter().enumerate().all(|(i, r)| {
            if c.is_zero() {
                r.is_empty()
            } else {
                r.len() == 1 && r[0].0 == i && r[0].1 == c
            }
        }) {
            Some(c)
        } else {
            None
        }
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Q {
        assert_eq!(self.nrows, self.ncols);
        (0..self.nrows).filter_map(|i| row_get(&self.rows[i], i).cloned()).sum()
    }

    /// Whether every entry is equal; used for exact matrix equality across shapes.
    pub fn same_as(&self, other: &Matrix) -> bool {
        self == other
    }
}

fn integer_row(r: &SparseRow) -> Vec<(usize, BigInt)> {
    let l = lcm_denominators(r.iter().map(|e| &e.1));
    let row: Vec<(usize, BigInt)> = r.iter().map(|(j, v)| (*j, v.numer() * (&l / v.denom()))).collect();
    primitive(row)
}

fn primitive(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let g = row.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.1));
    if !g.is_zero() && !g.is_one() {
        for e in &mut row {
            e.1 = &e.1 / &g;
        }
    }
    if row.first().is_some_and(|e| e.1.is_negative()) {
        for e in &mut row {
            e.1 = -&e.1;
        }
    }
    row
}

/// `p0 * row - r0 * pivot` (both leading in the same column), made primitive.
fn ff_eliminate(row: &[(usize, BigInt)], pivot: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push((row[i].0, a * &row[i].1));
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -(b * &pivot[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    primitive(out)
}

/// Dense serialization form: row-major rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Q>>,
}

impl From<&Matrix> for DenseMatrix {
    fn from(m: &Matrix) -> Self {
        DenseMatrix { rows: m.nrows, cols: m.ncols, data: m.to_dense() }
    }
}

impl From<&DenseMatrix> for Matrix {
    fn from(d: &DenseMatrix) -> Self {
        if d.rows == 0 {
            return Matrix::zeros(0, d.cols);
        }
        Matrix::from_dense(&d.data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(data: &[Vec<i64>]) -> Matrix {
        Matrix::from_ints(data)
    }

    #[test]
    fn product_and_identity() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let b = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), m(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.mul(&Matrix::identity(2)), a);
    }

    #[test]
    fn rank_kernel_inverse() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.ncols(), 1);
        assert!(a.mul(&k).is_zero());
        let b = m(&[vec![2, 1], vec![1, 1]]);
        let inv = b.inverse().unwrap();
        assert!(b.mul(&inv).is_identity());
        assert!(a.inverse().is_none());
    }

    #[test]
    fn rank_factorization_reconstructs() {
        let a = m(&[vec![1, 2, 3, 0], vec![2, 4, 6, 1], vec![3, 6, 9, 1]]);
        let (c, r) = a.rank_factorization();
        assert_eq!(c.mul(&r), a);
        assert_eq!(c.ncols(), a.rank());
    }

    #[test]
    fn solve_and_left_inverse() {
        let a = m(&[vec![1, 0], vec![1, 1], vec![0, 1]]);
        let l = a.left_inverse().unwrap();
        assert!(l.mul(&a).is_identity());
        let b = m(&[vec![1], vec![3], vec![2]]);
        assert_eq!(a.solve(&b).unwrap(), m(&[vec![1], vec![2]]));
        assert!(a.solve(&m(&[vec![1], vec![0], vec![0]])).is_none());
    }

    #[test]
    fn blocks() {
        let a = m(&[vec![1]]);
        let b = m(&[vec![2, 3]]);
        let d = Matrix::block_diag(&[a.clone(), b.clone()]);
        assert_eq!(d, m(&[vec![1, 0, 0], vec![0, 2, 3]]));
        assert_eq!(a.kron_identity_left(2), Matrix::identity(2));
        assert_eq!(Matrix::hstack(&[a.clone(), b]), m(&[vec![1, 2, 3]]));
    }
}
