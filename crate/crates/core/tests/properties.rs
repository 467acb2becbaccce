use proptest::prelude::*;

use sptk_core::partition::{count_base, enumerate_partitions, make_partition, BaseKind, ClassTag};
use sptk_core::qseries::{self, pochhammer, Factors, PochSign, PochSpec, Series};

fn series(max_trunc: usize) -> impl Strategy<Value = Series> {
    (0..=max_trunc).prop_flat_map(|n| prop::collection::vec(-50i64..=50, n + 1).prop_map(move |c| Series::from_coeffs(c, n)))
}

fn series_at(n: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..=50, n + 1).prop_map(move |c| Series::from_coeffs(c, n))
}

fn triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0usize..=32).prop_flat_map(|n| (series_at(n), series_at(n), series_at(n)))
}

fn spec() -> impl Strategy<Value = PochSpec> {
    (
        prop_oneof![Just(PochSign::Pos), Just(PochSign::Neg)],
        1u32..=6,
        1u32..=4,
        prop_oneof![(0u32..=10).prop_map(Factors::Finite), Just(Factors::Infinite)],
    )
        .prop_map(|(sign, a, b, m)| PochSpec::new(sign, a, b, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Series::one(a.truncation()), a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn mixed_truncation_is_minimum(a in series(32), b in series(32)) {
        let n = a.truncation().min(b.truncation());
        prop_assert_eq!((&a * &b).truncation(), n);
        prop_assert_eq!(&a * &b, &a.truncated(n) * &b.truncated(n));
    }

    #[test]
    fn shift_composes(a in series(32), i in 0i64..=10, j in 0i64..=10) {
        prop_assert_eq!(a.shift(i).unwrap().shift(j).unwrap(), a.shift(i + j).unwrap());
        let q_i = Series::monomial(1, i as usize, a.truncation());
        prop_assert_eq!(a.shift(i).unwrap(), &a * &q_i);
    }

    #[test]
    fn pochhammer_truncation_consistent(spec in spec(), big in 0usize..=48, small in 0usize..=48) {
        let (small, big) = (small.min(big), small.max(big));
        prop_assert_eq!(pochhammer(&spec, big).truncated(small), pochhammer(&spec, small));
    }

    #[test]
    fn make_partition_canonical(raw in prop::collection::vec(1i64..=20, 0..12)) {
        let p = make_partition(&raw).unwrap();
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.weight() as i64, raw.iter().sum::<i64>());
        let mut rev = raw.clone();
        rev.reverse();
        prop_assert_eq!(make_partition(&rev).unwrap(), p);
    }
}

#[test]
fn base_counts_match_products() {
    let n = 60;
    let products = [
        (BaseKind::Pd, qseries::distinct_parts(n)),
        (BaseKind::Pde, qseries::distinct_even_parts(n)),
        (BaseKind::Pdo, qseries::distinct_odd_parts(n)),
        (BaseKind::PdoSigned, qseries::distinct_odd_parts_signed(n)),
    ];
    for (kind, product) in products {
        for m in 0..=n {
            assert_eq!(count_base(kind, m as u32), product.coeff(m), "{kind:?} n={m}");
        }
    }
}

#[test]
fn base_counts_match_brute_force_up_to_thirty() {
    for n in 0..=30 {
        let brute = enumerate_partitions(n).filter(|p| p.has_distinct_parts()).count() as i64;
        assert_eq!(count_base(BaseKind::Pd, n), brute);
        assert_eq!(ClassTag::Pd { weight: n }.members().len() as i64, brute);
    }
}
