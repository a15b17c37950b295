use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gf2::{nullspace_basis, Gf2Matrix, Gf2Vector};

/// Largest dimension for which codewords are enumerated.
pub const MAX_ENUMERATION_DIM: usize = 28;

/// A binary linear code, stored as the reduced row echelon form of a generator.
///
/// Two codes are equal iff they have the same length and the same row space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCode {
    length: usize,
    generator: Gf2Matrix,
}

impl BinaryCode {
    /// The code spanned by the rows of `generators`.
    pub fn new(generators: &Gf2Matrix) -> Self {
        let (r, pivots) = generators.rref();
        let rows = r.into_rows().into_iter().take(pivots.len()).collect();
        Self {
            length: generators.cols(),
            generator: Gf2Matrix::from_rows(generators.cols(), rows),
        }
    }

    pub fn from_words(length: usize, words: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != length) {
            return Err(Error::LengthMismatch(length, w.len()));
        }
        Ok(Self::new(&Gf2Matrix::from_rows(length, words)))
    }

    /// Parses generator rows written as `0`/`1` strings of equal length.
    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let words = rows
            .iter()
            .map(|r| Gf2Vector::parse(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let length = words.first().map_or(0, Gf2Vector::len);
        Self::from_words(length, words)
    }

    pub fn zero(length: usize) -> Self {
        Self {
            length,
            generator: Gf2Matrix::empty(length),
        }
    }

    pub fn full(length: usize) -> Self {
        Self {
            length,
            generator: Gf2Matrix::identity(length),
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Canonical generator matrix (rref, no zero rows).
    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    pub fn generator_rows(&self) -> Vec<String> {
        self.generator.row_vectors().iter().map(Gf2Vector::to_bitstring).collect()
    }

    pub fn contains(&self, v: &Gf2Vector) -> bool {
        if v.len() != self.length {
            return false;
        }
        let mut r = v.clone();
        for row in self.generator.row_vectors() {
            let p = row.first_one().expect("generator rows are nonzero");
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r.is_zero()
    }

    /// `{x : x·c = 0 for all c}`.
    pub fn dual(&self) -> Self {
        if self.dimension() == 0 {
            return Self::full(self.length);
        }
        Self::new(&nullspace_basis(&self.generator))
    }

    /// Every pair of generators, including a row with itself, is orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.generator.row_vectors();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| !a.dot(b)))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length && self.is_self_orthogonal()
    }

    /// All weights divisible by 4, decided on the generator rows.
    pub fn is_doubly_even(&self) -> bool {
        let rows = self.generator.row_vectors();
        rows.iter().all(|r| r.weight() % 4 == 0)
            && rows.iter().enumerate().all(|(i, a)| {
                rows[i + 1..]
                    .iter()
                    .all(|b| a.intersection_weight(b) % 2 == 0)
            })
    }

    /// Image under the coordinate permutation sending `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.length {
            return Err(Error::LengthMismatch(self.length, perm.len()));
        }
        let mut seen = vec![false; self.length];
        for &p in perm {
            if p >= self.length || std::mem::replace(&mut seen[p], true) {
                return Err(Error::DimensionMismatch(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.length
                )));
            }
        }
        let rows = self
            .generator
            .row_vectors()
            .iter()
            .map(|r| Gf2Vector::from_support(self.length, r.iter_ones().map(|i| perm[i])))
            .collect();
        Ok(Self::new(&Gf2Matrix::from_rows(self.length, rows)))
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        self.weight_enumerator_with(Execution::default())
    }

    /// Exact weight distribution by Gray-code enumeration of all codewords.
    pub fn weight_enumerator_with(&self, exec: Execution) -> Result<WeightEnumerator> {
        let k = self.dimension();
        if k > MAX_ENUMERATION_DIM {
            return Err(Error::EnumerationLimit {
                dimension: k,
                limit: MAX_ENUMERATION_DIM,
            });
        }
        let rows: Vec<&[u64]> = self.generator.row_vectors().iter().map(|r| r.words()).collect();
        let words = rows.first().map_or(0, |r| r.len());
        // chunks of 2^low consecutive Gray codes, each starting from its own prefix
        let low = k.min(16);
        let chunks = 1usize << (k - low);
        let partial = exec.map_range(chunks, |c| {
            let mut counts = vec![0u64; self.length + 1];
            let start = c << low;
            let gray = start ^ (start >> 1);
            let mut acc = vec![0u64; words];
            for (i, r) in rows.iter().enumerate() {
                if gray >> i & 1 == 1 {
                    for (a, &w) in acc.iter_mut().zip(r.iter()) {
                        *a ^= w;
                    }
                }
            }
            let weight = |acc: &[u64]| acc.iter().map(|w| w.count_ones() as usize).sum::<usize>();
            counts[weight(&acc)] += 1;
            for step in 1..(1usize << low) {
                let bit = step.trailing_zeros() as usize;
                for (a, &w) in acc.iter_mut().zip(rows[bit].iter()) {
                    *a ^= w;
                }
                counts[weight(&acc)] += 1;
            }
            counts
        });
        let mut coefficients = vec![0u64; self.length + 1];
        for p in partial {
            for (c, x) in coefficients.iter_mut().zip(p) {
                *c += x;
            }
        }
        Ok(WeightEnumerator { coefficients })
    }

    /// All codewords as bitmasks, in Gray-code order. Requires length ≤ 64.
    pub(crate) fn codeword_masks(&self) -> Vec<u64> {
        debug_assert!(self.length <= 64);
        let rows: Vec<u64> = self.generator.row_vectors().iter().map(Gf2Vector::to_u64).collect();
        let mut out = Vec::with_capacity(1 << rows.len());
        let mut acc = 0u64;
        out.push(acc);
        for step in 1..(1usize << rows.len()) {
            acc ^= rows[step.trailing_zeros() as usize];
            out.push(acc);
        }
        out
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.length, self.dimension())?;
        for r in self.generator.row_vectors() {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

/// Codeword counts by Hamming weight, `A_0..=A_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    coefficients: Vec<u64>,
}

impl WeightEnumerator {
    pub fn from_coefficients(coefficients: Vec<u64>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.coefficients.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Smallest nonzero weight, if the code is nonzero.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.coefficients.len()).find(|&w| self.coefficients[w] > 0)
    }
}

impl fmt::Display for WeightEnumerator {
    /// Polynomial in `z`, e.g. `1 + 14z^4 + z^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (w, a) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => f.write_str("z")?,
                (1, a) => write!(f, "{a}z")?,
                (w, 1) => write!(f, "z^{w}")?,
                (w, a) => write!(f, "{a}z^{w}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn dual(c: &BinaryCode) -> BinaryCode {
    c.dual()
}

pub fn is_self_dual(c: &BinaryCode) -> bool {
    c.is_self_dual()
}

pub fn is_doubly_even(c: &BinaryCode) -> bool {
    c.is_doubly_even()
}

pub fn weight_enumerator(c: &BinaryCode) -> Result<WeightEnumerator> {
    c.weight_enumerator()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep2() -> BinaryCode {
        BinaryCode::parse(&["11"]).unwrap()
    }

    #[test]
    fn repetition_code_is_self_dual() {
        let c = rep2();
        assert_eq!(c.dual(), c);
        assert!(c.is_self_dual());
        assert!(!c.is_doubly_even());
        assert_eq!(c.weight_enumerator().unwrap().coefficients(), &[1, 0, 1]);
    }

    #[test]
    fn zero_and_full_codes() {
        assert_eq!(BinaryCode::zero(4).dual(), BinaryCode::full(4));
        assert_eq!(BinaryCode::full(4).dual(), BinaryCode::zero(4));
        assert!(!BinaryCode::full(2).is_self_dual());
        assert!(BinaryCode::zero(3).is_doubly_even());
    }

    #[test]
    fn canonical_form_ignores_generator_choice() {
        let a = BinaryCode::parse(&["1100", "0011"]).unwrap();
        let b = BinaryCode::parse(&["1111", "0011", "1100"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.generator_rows(), vec!["1100", "0011"]);
    }

    #[test]
    fn enumerator_display() {
        let e = WeightEnumerator::from_coefficients(vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(e.to_string(), "1 + 14z^4 + z^8");
        let e = WeightEnumerator::from_coefficients(vec![1, 2, 1]);
        assert_eq!(e.to_string(), "1 + 2z + z^2");
    }

    #[test]
    fn sequential_and_parallel_enumerators_agree() {
        let rows: Vec<String> = (0..18)
            .map(|i| (0..40).map(|j| if (i * 7 + j * 3) % 5 < 2 || j == i { '1' } else { '0' }).collect())
            .collect();
        let c = BinaryCode::parse(&rows).unwrap();
        let s = c.weight_enumerator_with(Execution::Sequential).unwrap();
        let p = c.weight_enumerator_with(Execution::Parallel).unwrap();
        assert_eq!(s, p);
        assert_eq!(s.total(), 1 << c.dimension());
    }

    #[test]
    fn mixed_lengths_are_rejected() {
        assert!(matches!(BinaryCode::parse(&["11", "101"]), Err(Error::LengthMismatch(2, 3))));
        assert!(matches!(BinaryCode::parse(&["1x"]), Err(Error::MalformedWord(_))));
    }
}
