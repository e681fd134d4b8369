use carlitz::series::{ht_derivative, ht_quotient_v1, ht_quotient_v2, StrictCompositions, WeakCompositions};
use carlitz::{FiniteField, RatFuncField, Rationals, TruncSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries<Rationals>> {
    prop::collection::vec(rational(), order).prop_map(|c| TruncSeries::new(Rationals, c))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncSeries<Rationals>> {
    series(order).prop_filter("unit constant term", |s| !s.coeff(0).is_zero())
}

proptest! {
    #[test]
    fn reciprocal_is_an_involution(f in unit_series(9)) {
        let inv = f.reciprocal().unwrap();
        prop_assert_eq!(inv.reciprocal().unwrap(), f.clone());
        prop_assert_eq!(f.mul(&inv), TruncSeries::one(Rationals, 9));
    }

    #[test]
    fn ht_derivative_is_linear(f in series(10), g in series(10), c in rational(), n in 0usize..6) {
        let lhs = ht_derivative(&f.scale(&c).add(&g), n);
        let rhs = ht_derivative(&f, n).scale(&c).add(&ht_derivative(&g, n));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ht_derivatives_compose(f in series(12), m in 0usize..4, n in 0usize..4) {
        // H^m H^n = C(m+n, n) H^(m+n)
        let lhs = ht_derivative(&ht_derivative(&f, n), m);
        let c = (1..=n as i64).fold(q(1, 1), |acc, i| acc * q(m as i64 + i, i));
        prop_assert_eq!(lhs, ht_derivative(&f, m + n).scale(&c));
    }

    #[test]
    fn quotient_rules_agree(f in unit_series(8), n in 1usize..6) {
        let direct = ht_derivative(&f.reciprocal().unwrap(), n);
        prop_assert_eq!(ht_quotient_v1(&f, n).unwrap(), direct.clone());
        prop_assert_eq!(ht_quotient_v2(&f, n).unwrap(), direct);
    }

    #[test]
    fn pow_matches_repeated_product(f in series(7), k in 0u64..6) {
        let mut expected = TruncSeries::one(Rationals, 7);
        for _ in 0..k {
            expected = expected.mul(&f);
        }
        prop_assert_eq!(f.pow(k), expected);
    }

    #[test]
    fn composition_counts(n in 0usize..9, k in 1usize..5) {
        let weak: Vec<Vec<usize>> = WeakCompositions::new(n, k).collect();
        let strict: Vec<Vec<usize>> = StrictCompositions::new(n, k).collect();
        prop_assert_eq!(weak.len() as u128, WeakCompositions::count(n, k));
        prop_assert_eq!(strict.len() as u128, StrictCompositions::count(n, k));
        prop_assert!(weak.iter().all(|c| c.len() == k && c.iter().sum::<usize>() == n));
        prop_assert!(strict.iter().all(|c| c.len() == k && c.iter().all(|&x| x >= 1) && c.iter().sum::<usize>() == n));
        let mut sorted = weak.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), weak.len());
    }
}

#[test]
fn geometric_series() {
    let f = TruncSeries::new(Rationals, vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1), q(0, 1)]);
    let inv = f.reciprocal().unwrap();
    assert!(inv.coeffs().iter().all(BigRational::is_one));
}

#[test]
fn non_unit_has_no_reciprocal() {
    let f = TruncSeries::new(Rationals, vec![q(0, 1), q(1, 1)]);
    assert!(f.reciprocal().is_err());
}

#[test]
fn mixed_orders_truncate_to_the_shorter() {
    let a = TruncSeries::one(Rationals, 4);
    let b = TruncSeries::one(Rationals, 7);
    assert_eq!(a.add(&b).order(), 4);
    assert_eq!(a.mul(&b).order(), 4);
}

#[test]
fn ht_derivative_in_characteristic_three() {
    // H^3 z^3 = C(3,3) = 1, while the ordinary third derivative would be 6 = 0
    let ring = RatFuncField::new(&FiniteField::prime(3).unwrap());
    let z3 = TruncSeries::monomial(ring.clone(), carlitz::RatFunc::one(ring.field()), 3, 6);
    let d = ht_derivative(&z3, 3);
    assert_eq!(d.coeff(0), &carlitz::RatFunc::one(ring.field()));
    let d1 = ht_derivative(&z3, 1);
    assert!(d1.coeff(2).is_zero());
}
