//! Row-list representation for large, very sparse matrices.
//!
//! Rows are sorted column-index lists. Forward elimination visits rows in
//! ascending order of their fill (a Markowitz-style row choice), reducing
//! by leading entries; back-substitution then yields the same canonical
//! rref as the dense path.

use super::matrix::Gf2Matrix;
use super::vector::Gf2Vector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseGf2Matrix {
    cols: usize,
    rows: Vec<Vec<u32>>,
}

/// Symmetric difference of two sorted index lists.
pub(crate) fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Rows in echelon form, indexed by leading column.
#[derive(Debug, Clone)]
pub(crate) struct SparseEchelon {
    rows: Vec<Vec<u32>>,
    pivot_of_col: Vec<Option<u32>>,
}

impl SparseEchelon {
    pub(crate) fn new(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    /// Reduces `v` by the stored rows until its leading entry is not a pivot.
    pub(crate) fn reduce_leading(&self, mut v: Vec<u32>) -> Vec<u32> {
        while let Some(&lead) = v.first() {
            match self.pivot_of_col[lead as usize] {
                Some(p) => v = xor_sorted(&v, &self.rows[p as usize]),
                None => break,
            }
        }
        v
    }

    /// Inserts `v` if it is independent of the stored rows; returns whether it was.
    pub(crate) fn insert(&mut self, v: Vec<u32>) -> bool {
        let v = self.reduce_leading(v);
        match v.first() {
            Some(&lead) => {
                self.pivot_of_col[lead as usize] = Some(self.rows.len() as u32);
                self.rows.push(v);
                true
            }
            None => false,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical rref rows and pivots.
    pub(crate) fn into_rref(mut self) -> (Vec<Vec<u32>>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0]));
        for &r in &order {
            let mut cur = std::mem::take(&mut self.rows[r]);
            let mut i = 1;
            while i < cur.len() {
                match self.pivot_of_col[cur[i] as usize] {
                    Some(p) => cur = xor_sorted(&cur, &self.rows[p as usize]),
                    None => i += 1,
                }
            }
            self.rows[r] = cur;
        }
        order.reverse();
        let pivots = order.iter().map(|&i| self.rows[i][0] as usize).collect();
        let rows = order
            .into_iter()
            .map(|i| std::mem::take(&mut self.rows[i]))
            .collect();
        (rows, pivots)
    }
}

impl SparseGf2Matrix {
    pub fn from_rows(cols: usize, mut rows: Vec<Vec<u32>>) -> Self {
        for r in &mut rows {
            r.sort_unstable();
            // duplicate entries cancel in characteristic two
            let mut dedup: Vec<u32> = Vec::with_capacity(r.len());
            for &c in r.iter() {
                assert!((c as usize) < cols, "column {c} out of range");
                if dedup.last() == Some(&c) {
                    dedup.pop();
                } else {
                    dedup.push(c);
                }
            }
            *r = dedup;
        }
        Self { cols, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(
            self.cols,
            self.rows
                .iter()
                .map(|r| Gf2Vector::from_support(self.cols, r.iter().map(|&c| c as usize)))
                .collect(),
        )
    }

    fn markowitz_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| (self.rows[i].len(), i));
        order
    }

    pub(crate) fn echelon(&self) -> SparseEchelon {
        let mut ech = SparseEchelon::new(self.cols);
        for i in self.markowitz_order() {
            ech.insert(self.rows[i].clone());
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn rref(&self) -> (SparseGf2Matrix, Vec<usize>) {
        let (rows, pivots) = self.echelon().into_rref();
        (
            SparseGf2Matrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }
}
