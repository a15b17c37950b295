//! Exhaustive generation of self-dual codes of small length.

use std::collections::HashSet;

use super::code::BinaryCode;
use super::equivalence::are_equivalent;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gf2::Gf2Vector;

/// Longest length for which classification is attempted.
pub const MAX_CLASSIFICATION_LENGTH: usize = 10;

/// Reduced row echelon basis of a code of length ≤ 64, as bitmasks.
type Basis = Vec<u64>;

/// Inserts `v` into an rref basis (pivot = lowest set bit), returning the
/// canonical basis if `v` is independent.
fn extend_rref(basis: &Basis, v: u64) -> Option<Basis> {
    let mut v = v;
    for &r in basis {
        if v >> r.trailing_zeros() & 1 == 1 {
            v ^= r;
        }
    }
    if v == 0 {
        return None;
    }
    let p = v.trailing_zeros();
    let mut out: Basis = basis
        .iter()
        .map(|&r| if r >> p & 1 == 1 { r ^ v } else { r })
        .collect();
    out.push(v);
    out.sort_unstable_by_key(|r| r.trailing_zeros());
    Some(out)
}

/// All self-dual codes of length `n`, in ascending canonical order.
pub fn all_self_dual_codes(n: usize) -> Result<Vec<BinaryCode>> {
    all_self_dual_codes_with(n, Execution::default())
}

pub fn all_self_dual_codes_with(n: usize, exec: Execution) -> Result<Vec<BinaryCode>> {
    check_length(n)?;
    // every self-dual code contains the all-ones word; grow self-orthogonal
    // codes containing it one dimension at a time
    let ones = (1u64 << n) - 1;
    let even: Vec<u64> = (1..1u64 << n).filter(|v| v.count_ones() % 2 == 0).collect();
    let mut level: Vec<Basis> = vec![vec![ones]];
    for _ in 1..n / 2 {
        let next: Vec<Vec<Basis>> = exec.map_slice(&level, |b| {
            even.iter()
                .filter(|&&v| b.iter().all(|&r| (r & v).count_ones() % 2 == 0))
                .filter_map(|&v| extend_rref(b, v))
                .collect()
        });
        let set: HashSet<Basis> = next.into_iter().flatten().collect();
        level = set.into_iter().collect();
        level.sort_unstable();
    }
    let mut codes: Vec<BinaryCode> = level
        .into_iter()
        .map(|b| {
            let rows = b.iter().map(|&r| Gf2Vector::from_u64(n, r)).collect();
            BinaryCode::from_words(n, rows).expect("rows have length n")
        })
        .collect();
    codes.sort();
    Ok(codes)
}

fn check_length(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n == 0 || n > MAX_CLASSIFICATION_LENGTH {
        return Err(Error::UnsupportedLength {
            length: n,
            reason: format!("classification covers even lengths 2..={MAX_CLASSIFICATION_LENGTH}"),
        });
    }
    Ok(())
}

/// One representative per permutation-equivalence class of self-dual codes
/// of length `n`; each is the smallest code of its class in canonical order.
pub fn enumerate_self_dual_classes(n: usize) -> Result<Vec<BinaryCode>> {
    let mut reps: Vec<BinaryCode> = Vec::new();
    for c in all_self_dual_codes(n)? {
        let mut new_class = true;
        for r in &reps {
            if are_equivalent(r, &c)?.is_some() {
                new_class = false;
                break;
            }
        }
        if new_class {
            reps.push(c);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_two() {
        let classes = enumerate_self_dual_classes(2).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].generator_rows(), vec!["11"]);
    }

    #[test]
    fn small_totals() {
        // counts of all self-dual codes: prod_{i=1}^{n/2-1} (2^i + 1)
        assert_eq!(all_self_dual_codes(2).unwrap().len(), 1);
        assert_eq!(all_self_dual_codes(4).unwrap().len(), 3);
        assert_eq!(all_self_dual_codes(6).unwrap().len(), 15);
    }

    #[test]
    fn odd_and_large_lengths_are_refused() {
        assert!(matches!(enumerate_self_dual_classes(5), Err(Error::OddLength(5))));
        assert!(matches!(
            enumerate_self_dual_classes(12),
            Err(Error::UnsupportedLength { length: 12, .. })
        ));
    }

    #[test]
    fn rref_insertion_is_canonical() {
        let a = extend_rref(&vec![0b0011], 0b0110).unwrap();
        let b = extend_rref(&vec![0b0101], 0b0011).unwrap();
        assert_eq!(a, b);
        assert_eq!(extend_rref(&a, 0b0101), None);
    }
}
