//! Permutation equivalence of binary codes by pruned backtracking.

use super::code::{BinaryCode, MAX_ENUMERATION_DIM};
use crate::error::{Error, Result};

/// Longest codes handled; codewords are held as 64-bit masks.
pub const MAX_EQUIVALENCE_LENGTH: usize = 64;

/// Cap on the number of minimum-weight words used for pruning.
const MAX_CHECK_WORDS: usize = 4096;

/// Membership test against a code in rref, on bitmasks.
struct Membership {
    rows: Vec<(u32, u64)>,
}

impl Membership {
    fn new(c: &BinaryCode) -> Self {
        let rows = c
            .generator()
            .row_vectors()
            .iter()
            .map(|r| (r.first_one().unwrap() as u32, r.to_u64()))
            .collect();
        Self { rows }
    }

    fn contains(&self, mut x: u64) -> bool {
        for &(p, r) in &self.rows {
            if x >> p & 1 == 1 {
                x ^= r;
            }
        }
        x == 0
    }
}

/// Per coordinate, the number of codewords of each weight whose support contains it.
fn coordinate_signatures(n: usize, words: &[u64]) -> Vec<Vec<u64>> {
    let mut sig = vec![vec![0u64; n + 1]; n];
    for &w in words {
        let wt = w.count_ones() as usize;
        let mut bits = w;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            sig[j][wt] += 1;
            bits &= bits - 1;
        }
    }
    sig
}

struct Search<'a> {
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    /// check words of `a` that become fully assigned at each depth
    completes_at: Vec<Vec<u64>>,
    target: &'a Membership,
    assign: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn image(&self, w: u64) -> u64 {
        let mut out = 0u64;
        let mut bits = w;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            out |= 1 << self.assign[j];
            bits &= bits - 1;
        }
        out
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        for ci in 0..self.candidates[i].len() {
            let j = self.candidates[i][ci];
            if self.used >> j & 1 == 1 {
                continue;
            }
            self.assign[i] = j;
            self.used |= 1 << j;
            let ok = self.completes_at[depth]
                .iter()
                .all(|&w| self.target.contains(self.image(w)));
            if ok && self.run(depth + 1) {
                return true;
            }
            self.used &= !(1 << j);
        }
        false
    }
}

/// A coordinate permutation `p` with `a.permuted(p) == b`, if one exists.
///
/// `p[i]` is the coordinate of `b` receiving coordinate `i` of `a`.
pub fn are_equivalent(a: &BinaryCode, b: &BinaryCode) -> Result<Option<Vec<usize>>> {
    let n = a.length();
    if b.length() != n {
        return Err(Error::LengthMismatch(n, b.length()));
    }
    if n > MAX_EQUIVALENCE_LENGTH {
        return Err(Error::UnsupportedLength {
            length: n,
            reason: format!("equivalence search supports lengths up to {MAX_EQUIVALENCE_LENGTH}"),
        });
    }
    for c in [a, b] {
        if c.dimension() > MAX_ENUMERATION_DIM {
            return Err(Error::EnumerationLimit {
                dimension: c.dimension(),
                limit: MAX_ENUMERATION_DIM,
            });
        }
    }
    if a.dimension() != b.dimension() {
        return Ok(None);
    }
    if a == b {
        return Ok(Some((0..n).collect()));
    }
    if a.weight_enumerator()? != b.weight_enumerator()? {
        return Ok(None);
    }
    let words_a = a.codeword_masks();
    let words_b = b.codeword_masks();
    let sig_a = coordinate_signatures(n, &words_a);
    let sig_b = coordinate_signatures(n, &words_b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| sig_b[j] == sig_a[i]).collect())
        .collect();

    // check words: generator rows, then minimum-weight words
    let mut checks: Vec<u64> = a.generator().row_vectors().iter().map(|r| r.to_u64()).collect();
    if let Some(d) = words_a.iter().filter(|w| **w != 0).map(|w| w.count_ones()).min() {
        let mut minimal: Vec<u64> = words_a.iter().copied().filter(|w| w.count_ones() == d).collect();
        minimal.sort_unstable();
        checks.extend(minimal.into_iter().take(MAX_CHECK_WORDS));
    }
    checks.sort_unstable();
    checks.dedup();

    // greedy order: finish the check word with fewest unassigned coordinates
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    while placed != full {
        let next = checks
            .iter()
            .filter(|&&w| w & !placed != 0)
            .min_by_key(|&&w| ((w & !placed).count_ones(), w))
            .copied();
        let add = match next {
            Some(w) => w & !placed,
            None => full & !placed,
        };
        let mut bits = add;
        // smallest candidate class first within the word
        let mut group = Vec::new();
        while bits != 0 {
            group.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        group.sort_by_key(|&i| (candidates[i].len(), i));
        order.extend(group);
        placed |= add;
    }
    let mut position = vec![0usize; n];
    for (t, &i) in order.iter().enumerate() {
        position[i] = t;
    }
    let mut completes_at = vec![Vec::new(); n];
    for &w in &checks {
        if w == 0 {
            continue;
        }
        let mut last = 0;
        let mut bits = w;
        while bits != 0 {
            last = last.max(position[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        completes_at[last].push(w);
    }
    let target = Membership::new(b);
    let mut search = Search {
        order,
        candidates,
        completes_at,
        target: &target,
        assign: vec![usize::MAX; n],
        used: 0,
    };
    if !search.run(0) {
        return Ok(None);
    }
    let perm = search.assign;
    debug_assert_eq!(a.permuted(&perm).as_ref().ok(), Some(b));
    Ok(Some(perm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexive_gives_identity() {
        let c = BinaryCode::parse(&["11110000", "00111100", "00001111", "01010101"]).unwrap();
        assert_eq!(are_equivalent(&c, &c).unwrap(), Some((0..8).collect()));
    }

    #[test]
    fn finds_a_permutation() {
        let c = BinaryCode::parse(&["110000", "001100", "000011"]).unwrap();
        let p = vec![3, 0, 5, 1, 2, 4];
        let d = c.permuted(&p).unwrap();
        let q = are_equivalent(&c, &d).unwrap().unwrap();
        assert_eq!(c.permuted(&q).unwrap(), d);
    }

    #[test]
    fn different_dimensions_are_inequivalent() {
        let a = BinaryCode::parse(&["1100"]).unwrap();
        let b = BinaryCode::parse(&["1100", "0011"]).unwrap();
        assert_eq!(are_equivalent(&a, &b).unwrap(), None);
    }

    #[test]
    fn enumerator_filter() {
        // weights {0, 2, 2, 4} against {0, 2, 2, 2}
        let a = BinaryCode::parse(&["110000", "001100"]).unwrap();
        let b = BinaryCode::parse(&["110000", "011000"]).unwrap();
        assert_eq!(are_equivalent(&a, &b).unwrap(), None);
        let c = BinaryCode::parse(&["110000", "000011"]).unwrap();
        assert!(are_equivalent(&a, &c).unwrap().is_some());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = BinaryCode::parse(&["11"]).unwrap();
        let b = BinaryCode::parse(&["1100"]).unwrap();
        assert!(matches!(are_equivalent(&a, &b), Err(Error::LengthMismatch(2, 4))));
    }
}
