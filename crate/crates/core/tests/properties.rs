#[path = "common/cf_oracle.rs"]
mod cf_oracle;

use hoflab_core::exactnum::{isqrt_biguint, isqrt_u128, metallic_gamma, QuadraticSurd};
use hoflab_core::fibword::{fib, fib_index_of, fib_u64, zeckendorf, FibonacciWordIter};
use hoflab_core::oeis::{diff, parse_bfile, serialize, BFile, OffsetMap};
use hoflab_core::sequences::{
    constants, hof_g_closed, BeattyPair, Married, SequenceId, SequenceName, Side,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn non_square() -> impl Strategy<Value = u64> {
    (2u64..1_000_000).prop_filter("not a square", |d| {
        let r = isqrt_u128(u128::from(*d));
        r * r != u128::from(*d)
    })
}

fn surd() -> impl Strategy<Value = QuadraticSurd> {
    (-1000i64..=1000, -1000i64..=1000, 1i64..=1000, non_square())
        .prop_map(|(a, b, c, d)| QuadraticSurd::new(a, b, c, d).unwrap())
}

proptest! {
    #[test]
    fn isqrt_brackets(x in any::<u128>()) {
        let r = isqrt_u128(x);
        prop_assert!(r * r <= x);
        prop_assert!((r + 1).checked_mul(r + 1).is_none_or(|s| s > x));
        prop_assert_eq!(isqrt_biguint(&BigUint::from(x)), BigUint::from(r));
    }

    #[test]
    fn floor_matches_cf_oracle(q in surd(), n in 0u64..=1_000_000_000_000) {
        let expected = cf_oracle::cf_floor(q.a(), q.b(), q.c(), q.d(), &BigInt::from(n));
        prop_assert_eq!(q.floor_mul(n), expected.clone());
        prop_assert_eq!(q.scaler().floor(n), expected);
    }

    #[test]
    fn surd_field_laws(x in surd(), y in surd()) {
        // keep both on one radicand
        let y = QuadraticSurd::new(y.a().clone(), y.b().clone(), y.c().clone(), x.d()).unwrap();
        prop_assert_eq!(x.try_add(&y).unwrap().try_sub(&y).unwrap(), x.clone());
        if !y.signum().is_eq() {
            prop_assert_eq!(x.try_mul(&y).unwrap().try_div(&y).unwrap(), x.clone());
        }
        prop_assert_eq!(x.cmp_value(&y).unwrap(), x.try_sub(&y).unwrap().signum());
    }

    #[test]
    fn metallic_mean_is_a_root(k in 1u64..=1000) {
        let g = metallic_gamma(k).unwrap();
        let d = g.d();
        let lhs = g.try_mul(&g).unwrap()
            .try_add(&QuadraticSurd::integer(k, d).unwrap().try_mul(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, QuadraticSurd::integer(1, d).unwrap());
        prop_assert!(g.in_unit_interval());
    }

    #[test]
    fn beatty_pairs_partition(n in 1u64..=1_000_000_000_000, pell in any::<bool>()) {
        let pair = if pell { BeattyPair::pell() } else { BeattyPair::golden() };
        let (side, m) = pair.locate(n).unwrap();
        let back = match side { Side::Lower => pair.lower(m), Side::Upper => pair.upper(m) };
        prop_assert_eq!(back, n);
        prop_assert_eq!(pair.swap(pair.swap(n)), n);
        let step = pair.slow(n) - pair.slow(n - 1);
        prop_assert!(step <= 1);
    }

    #[test]
    fn zeckendorf_digits(n in any::<u64>()) {
        let digits = zeckendorf(n);
        prop_assert!(digits.windows(2).all(|w| w[0] >= w[1] + 2));
        prop_assert!(digits.iter().all(|&m| m >= 2));
        let sum: u128 = digits.iter().map(|&m| u128::from(fib_u64(m).unwrap())).sum();
        prop_assert_eq!(sum, u128::from(n));
    }

    #[test]
    fn fib_index_roundtrip(m in 5u32..400) {
        prop_assert_eq!(fib_index_of(&fib(m).unwrap()).unwrap().index(), m);
        prop_assert!(fib_index_of(&(fib(m).unwrap() + 1u32)).is_none());
    }

    #[test]
    fn fibonacci_word_is_fixed_point(len in 1usize..5000) {
        let word: Vec<u8> = FibonacciWordIter::infinite().take(len).collect();
        let image: Vec<u8> = word.iter()
            .flat_map(|&s| if s == 0 { vec![0, 1] } else { vec![0] })
            .take(len)
            .collect();
        prop_assert_eq!(image, word);
    }

    #[test]
    fn g_closed_recursion(n in 1u64..=1_000_000_000_000) {
        let g = hof_g_closed(n);
        prop_assert_eq!(g, n - hof_g_closed(hof_g_closed(n - 1)));
    }

    #[test]
    fn bfile_roundtrip(offset in -5i64..5, values in prop::collection::vec(any::<i128>(), 1..50)) {
        let entries: Vec<(i64, BigInt)> = values.iter().enumerate()
            .map(|(i, v)| (offset + i as i64, BigInt::from(*v)))
            .collect();
        let b = BFile::new("A123456", entries).unwrap();
        prop_assert_eq!(parse_bfile("A123456", &serialize(&b)).unwrap(), b);
    }

    #[test]
    fn single_corruption_single_failure(at in 0i64..200, delta in 1i64..1000) {
        let g = SequenceId::plain(SequenceName::GClosed);
        let entries = (0..200i64).map(|n| (n, BigInt::from(hof_g_closed(n as u64)))).collect();
        let mut b = BFile::new("A005206", entries).unwrap();
        let clean = diff(g, &b, OffsetMap::default(), None).unwrap();
        prop_assert_eq!(clean.report.failed, 0);
        let old = b.get(at).unwrap().clone();
        b.set(at, old + delta);
        let out = diff(g, &b, OffsetMap::default(), None).unwrap().report;
        prop_assert_eq!(out.failed, 1);
        prop_assert_eq!(out.first_counterexample.unwrap().index, at as u64);
    }
}

#[test]
fn married_pair_satisfies_mutual_recursion() {
    let mut a = Married::a();
    let mut b = Married::b();
    for n in 1..=20_000u64 {
        let an = a.get_a(n).unwrap();
        let bn = b.get_b(n).unwrap();
        assert_eq!(an, n - b.get_b(a.get_a(n - 1).unwrap()).unwrap());
        assert_eq!(bn, n - a.get_a(b.get_b(n - 1).unwrap()).unwrap());
    }
}

#[test]
fn every_catalog_generator_starts_where_declared() {
    for name in SequenceName::ALL {
        let id = if name.takes_k() {
            SequenceId::new(name, Some(3)).unwrap()
        } else {
            SequenceId::plain(name)
        };
        let mut g = id.generator().unwrap();
        let first = g.first_index();
        assert!(g.term(first).is_ok(), "{id}");
        if first > 0 {
            assert!(g.term(first - 1).is_err(), "{id}");
        }
    }
}

#[test]
fn cf_oracle_known_values() {
    let phi = constants::phi();
    let f = |n: u64| cf_oracle::cf_floor(phi.a(), phi.b(), phi.c(), phi.d(), &BigInt::from(n));
    assert_eq!(
        (1..=10).map(f).collect::<Vec<_>>(),
        [1, 3, 4, 6, 8, 9, 11, 12, 14, 16].map(BigInt::from)
    );
}
