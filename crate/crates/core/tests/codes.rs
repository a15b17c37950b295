use involcode::codes::{
    all_self_dual_codes, are_equivalent, enumerate_self_dual_classes, i2_power, known_code, BinaryCode,
};
use involcode::gf2::Gf2Vector;
use involcode::Error;
use proptest::prelude::*;

fn code(max_len: usize) -> impl Strategy<Value = BinaryCode> {
    (1..=max_len).prop_flat_map(|n| {
        prop::collection::vec(0..1u64 << n, 0..=n).prop_map(move |rows| {
            BinaryCode::from_words(n, rows.into_iter().map(|r| Gf2Vector::from_u64(n, r)).collect()).unwrap()
        })
    })
}

fn shuffle(n: usize, mut seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (seed >> 33) as usize % (i + 1));
    }
    p
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dual_is_an_involution(c in code(14)) {
        let d = c.dual();
        prop_assert_eq!(c.dimension() + d.dimension(), c.length());
        prop_assert_eq!(d.dual(), c);
    }

    #[test]
    fn macwilliams_identity(c in code(12)) {
        let n = c.length();
        let a = c.weight_enumerator().unwrap();
        let b = c.dual().weight_enumerator().unwrap();
        for j in 0..=n {
            let rhs: i128 = (0..=n)
                .map(|i| {
                    let k: i128 = (0..=j).map(|s| (if s % 2 == 0 { 1 } else { -1 }) * binomial(i, s) * binomial(n - i, j - s)).sum();
                    a.get(i) as i128 * k
                })
                .sum();
            prop_assert_eq!(b.get(j) as i128 * a.total() as i128, rhs);
        }
    }

    #[test]
    fn permuted_codes_are_equivalent(c in code(12), seed in any::<u64>()) {
        let p = shuffle(c.length(), seed);
        let d = c.permuted(&p).unwrap();
        let forward = are_equivalent(&c, &d).unwrap().expect("equivalent");
        prop_assert_eq!(c.permuted(&forward).unwrap(), d.clone());
        let back = are_equivalent(&d, &c).unwrap().expect("equivalence is symmetric");
        prop_assert_eq!(d.permuted(&back).unwrap(), c);
    }

    #[test]
    fn equivalence_verdict_is_symmetric(a in code(8), b in code(8)) {
        let ab = are_equivalent(&a, &b);
        let ba = are_equivalent(&b, &a);
        match (ab, ba) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x.is_some(), y.is_some()),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "one direction errored"),
        }
    }
}

#[test]
fn self_dual_totals() {
    // Number of self-dual codes of length n is the product of 2^i + 1 for i < n/2.
    for (n, total) in [(2, 1), (4, 3), (6, 15), (8, 135), (10, 2295)] {
        let codes = all_self_dual_codes(n).unwrap();
        assert_eq!(codes.len(), total, "n = {n}");
        assert!(codes.iter().all(BinaryCode::is_self_dual));
    }
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (1..=5).map(|h| enumerate_self_dual_classes(2 * h).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 2]);
    let eight = enumerate_self_dual_classes(8).unwrap();
    let hamming = known_code("extended_hamming8").unwrap();
    assert_eq!(eight.iter().filter(|c| c.is_doubly_even()).count(), 1);
    assert!(eight.iter().any(|c| are_equivalent(c, &hamming).unwrap().is_some()));
    assert!(eight.iter().any(|c| are_equivalent(c, &i2_power(4)).unwrap().is_some()));
}

#[test]
fn enumeration_limits() {
    assert!(matches!(enumerate_self_dual_classes(7), Err(Error::OddLength(7))));
    assert!(matches!(enumerate_self_dual_classes(12), Err(Error::UnsupportedLength { .. })));
}

#[test]
fn known_codes() {
    let h = known_code("extended_hamming8").unwrap();
    assert!(h.is_self_dual() && h.is_doubly_even());
    assert_eq!(h.weight_enumerator().unwrap().to_string(), "1 + 14z^4 + z^8");
    assert_eq!(are_equivalent(&h, &i2_power(4)).unwrap(), None);
    assert_eq!(known_code("repetition2").unwrap().generator_rows(), ["11"]);
    assert!(known_code("golay").is_err());
}
