use std::fmt;

use super::sparse::SparseGf2Matrix;
use super::vector::{Gf2Vector, WORD_BITS};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Default size below which the dense path is always used.
pub const SPARSE_MIN_ENTRIES: usize = 1 << 16;

/// Row count times word count below which elimination stays on one thread.
const PARALLEL_MIN_WORDS: usize = 1 << 15;

/// Controls the automatic choice between dense and sparse elimination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EliminationConfig {
    /// Matrices with at least `sparse_min_entries` entries and a fill ratio
    /// at or below this value are eliminated on the sparse path.
    pub sparse_threshold: f64,
    pub sparse_min_entries: usize,
    pub execution: Execution,
}

impl Default for EliminationConfig {
    fn default() -> Self {
        Self {
            sparse_threshold: 0.02,
            sparse_min_entries: SPARSE_MIN_ENTRIES,
            execution: Execution::default(),
        }
    }
}

impl EliminationConfig {
    /// Always the sparse path, whatever the size or fill.
    pub fn always_sparse() -> Self {
        Self {
            sparse_threshold: 1.0,
            sparse_min_entries: 0,
            ..Self::default()
        }
    }

    /// Always the dense path.
    pub fn always_dense() -> Self {
        Self {
            sparse_threshold: -1.0,
            ..Self::default()
        }
    }

    pub fn prefers_sparse(&self, rows: usize, cols: usize, nnz: usize) -> bool {
        let entries = rows.saturating_mul(cols);
        entries >= self.sparse_min_entries && (nnz as f64) <= self.sparse_threshold * entries as f64
    }
}

/// Dense matrix over the two-element field, stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    cols: usize,
    data: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            data: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            data: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(),
        }
    }

    /// Empty matrix with a fixed column count.
    pub fn empty(cols: usize) -> Self {
        Self { cols, data: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
        }
        Self { cols, data: rows }
    }

    /// Builds a matrix from rows of `0`/`1` integers.
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                Gf2Vector::from_bools(&r.iter().map(|&b| b & 1 == 1).collect::<Vec<_>>())
            })
            .collect();
        Self { cols, data }
    }

    /// Parses rows given as bitstrings; all rows must have the same length.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let data = rows
            .iter()
            .map(|s| Gf2Vector::parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let cols = data.first().map_or(0, |r| r.len());
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows have different lengths".into()));
        }
        Ok(Self { cols, data })
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[Gf2Vector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Gf2Vector> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn push_row(&mut self, row: Gf2Vector) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Gf2Vector::weight).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Gf2Vector::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows());
        for (i, r) in self.data.iter().enumerate() {
            for j in r.iter_ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &Gf2Vector) -> Gf2Vector {
        assert_eq!(x.len(), self.cols, "vector length does not match column count");
        let mut out = Gf2Vector::zeros(self.rows());
        for (i, r) in self.data.iter().enumerate() {
            if r.dot(x) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows(), "inner dimensions differ");
        let mut out = Self::zeros(self.rows(), other.cols);
        for (i, r) in self.data.iter().enumerate() {
            for k in r.iter_ones() {
                out.data[i].xor_assign(&other.data[k]);
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { cols: self.cols, data }
    }

    pub fn to_sparse(&self) -> SparseGf2Matrix {
        SparseGf2Matrix::from_rows(
            self.cols,
            self.data
                .iter()
                .map(|r| r.iter_ones().map(|j| j as u32).collect())
                .collect(),
        )
    }

    /// Reduced row echelon form and its pivot columns, choosing the
    /// dense or sparse path automatically.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        self.rref_with(&EliminationConfig::default())
    }

    pub fn rref_with(&self, config: &EliminationConfig) -> (Gf2Matrix, Vec<usize>) {
        if config.prefers_sparse(self.rows(), self.cols, self.nnz()) {
            let (r, p) = self.to_sparse().rref();
            (r.to_dense(), p)
        } else {
            self.rref_dense(config.execution)
        }
    }

    /// Gauss-Jordan elimination on the packed rows.
    pub fn rref_dense(&self, exec: Execution) -> (Gf2Matrix, Vec<usize>) {
        let mut rows = self.data.clone();
        let nrows = rows.len();
        let words = self.cols.div_ceil(WORD_BITS).max(1);
        let exec = if nrows * words >= PARALLEL_MIN_WORDS {
            exec
        } else {
            Execution::Sequential
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            let start = col / WORD_BITS;
            exec.for_each_mut(&mut rows, |i, row| {
                if i != r && row.get(col) {
                    for (a, b) in row.words_mut()[start..].iter_mut().zip(&pivot.words()[start..]) {
                        *a ^= b;
                    }
                }
            });
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        (Gf2Matrix { cols: self.cols, data: rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.data {
            writeln!(f, "  {}", r.to_bitstring())?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of `m` with its strictly increasing pivot columns.
pub fn rref(m: &Gf2Matrix) -> (Gf2Matrix, Vec<usize>) {
    m.rref()
}

pub fn rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

/// Basis of `{x : m x = 0}`, one row per free column in ascending order.
pub fn nullspace_basis(m: &Gf2Matrix) -> Gf2Matrix {
    let (r, pivots) = m.rref();
    nullspace_from_rref(&r, &pivots, m.cols())
}

pub(crate) fn nullspace_from_rref(r: &Gf2Matrix, pivots: &[usize], cols: usize) -> Gf2Matrix {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut out = Gf2Matrix::empty(cols);
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = Gf2Vector::unit(cols, f);
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, f) {
                x.set(p, true);
            }
        }
        out.push_row(x);
    }
    out
}

/// Solves `m x = b`, returning the solution with all free variables zero.
pub fn solve(m: &Gf2Matrix, b: &Gf2Vector) -> Result<Option<Gf2Vector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let aug_rows = (0..m.rows())
        .map(|i| {
            let mut row = Gf2Vector::zeros(n + 1);
            for j in m.row(i).iter_ones() {
                row.set(j, true);
            }
            row.set(n, b.get(i));
            row
        })
        .collect();
    let (r, pivots) = Gf2Matrix::from_rows(n + 1, aug_rows).rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = Gf2Vector::zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        if r.get(i, n) {
            x.set(p, true);
        }
    }
    Ok(Some(x))
}
