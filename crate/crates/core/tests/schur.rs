//! Partition combinatorics against a literal one-based evaluation of the
//! double sum and the congruence condition.

use proptest::prelude::*;
use qha_core::schur::{d_lambda, is_regular, Partition};

/// Signed, one-based, with Euclidean floor division.
fn d_oracle(parts: &[u64], p: u64) -> i64 {
    let lam = |i: usize| parts[i - 1] as i64;
    let n = parts.len();
    let mut total = 0;
    for i in 1..n {
        for j in i + 1..=n {
            total += (lam(i) - lam(j) - i as i64 + j as i64 - 1).div_euclid(p as i64);
        }
    }
    total
}

fn regular_oracle(parts: &[u64], p: u64) -> bool {
    let n = parts.len();
    let p = p as i64;
    (1..=n).all(|i| {
        (i + 1..=n).all(|j| (parts[i - 1] as i64 - parts[j - 1] as i64 - (i as i64 - j as i64)).rem_euclid(p) != 0)
    })
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn d_values() {
    for a in 0..6 {
        for p in [2, 3, 5, 7] {
            assert_eq!(d_lambda(&Partition::new(vec![a, a]).unwrap(), p).unwrap(), 0);
        }
    }
    assert_eq!(d_lambda(&part("7,1"), 3).unwrap(), 2);
    assert_eq!(d_lambda(&part("6,0,0"), 2).unwrap(), 6);
    assert_eq!(d_oracle(&[7, 1], 3), 2);
    assert_eq!(d_oracle(&[6, 0, 0], 2), 6);
}

#[test]
fn regularity_values() {
    assert!(!is_regular(&part("3,0"), 2).unwrap());
    assert!(is_regular(&part("2,0"), 2).unwrap());
    assert!(is_regular(&part("1,0"), 5).unwrap());
}

fn partition() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..40, 1..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn translation_invariance(parts in partition(), p in prop::sample::select(vec![2u64, 3, 5]), c in 0u64..50) {
        let lam = Partition::new(parts.clone()).unwrap();
        let shifted = lam.shifted(c);
        prop_assert_eq!(d_lambda(&lam, p).unwrap(), d_lambda(&shifted, p).unwrap());
        prop_assert_eq!(is_regular(&lam, p).unwrap(), is_regular(&shifted, p).unwrap());
        prop_assert_eq!(d_lambda(&lam, p).unwrap() as i64, d_oracle(&parts, p));
        prop_assert_eq!(is_regular(&lam, p).unwrap(), regular_oracle(&parts, p));
    }

    #[test]
    fn vanishes_when_every_term_is_below_p(parts in partition(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let n = parts.len();
        let small = (0..n).all(|i| (i + 1..n).all(|j| parts[i] - parts[j] + (j - i) as u64 - 1 < p));
        if small {
            prop_assert_eq!(d_lambda(&Partition::new(parts).unwrap(), p).unwrap(), 0);
        }
    }
}
