//! Hasse-Teichmüller derivatives and their product and quotient rules.
//!
//! `H^(n)(sum a_m z^m) = sum a_m C(m, n) z^(m-n)`, the divided-power
//! derivative, which stays meaningful in positive characteristic where
//! `d^n/dz^n / n!` does not. Only power series (no negative exponents) are
//! handled.

use super::compositions::{StrictCompositions, WeakCompositions};
use super::ring::CoeffRing;
use super::trunc::TruncSeries;
use crate::error::{Error, Result};

/// `H^(n)(f)`. The result has order `max(order - n, 0)`.
pub fn ht_derivative<R: CoeffRing>(f: &TruncSeries<R>, n: usize) -> TruncSeries<R> {
    let r = f.ring();
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .skip(n)
        .map(|(m, a)| {
            if r.is_zero(a) {
                r.zero()
            } else {
                r.mul(a, &r.binomial(m as u64, n as u64))
            }
        })
        .collect();
    TruncSeries::new(r.clone(), coeffs)
}

fn derivatives<R: CoeffRing>(f: &TruncSeries<R>, n: usize) -> Vec<TruncSeries<R>> {
    (0..=n).map(|i| ht_derivative(f, i)).collect()
}

fn product_over<R: CoeffRing>(factors: impl Iterator<Item = TruncSeries<R>>) -> Option<TruncSeries<R>> {
    factors.reduce(|acc, s| acc.mul(&s))
}

/// `H^(n)(f_1 ... f_k)` expanded as the sum over weak compositions
/// `i_1 + ... + i_k = n` of `H^(i_1)(f_1) ... H^(i_k)(f_k)`.
pub fn ht_product_rule<R: CoeffRing>(fs: &[TruncSeries<R>], n: usize) -> Result<TruncSeries<R>> {
    let first = fs
        .first()
        .ok_or_else(|| Error::InvalidArgument("product rule needs at least one factor".into()))?;
    let ring = first.ring().clone();
    let derivs: Vec<Vec<TruncSeries<R>>> = fs.iter().map(|f| derivatives(f, n)).collect();
    let order = fs.iter().map(|f| f.order()).min().unwrap_or(0).saturating_sub(n);
    let mut total = TruncSeries::zero(ring, order);
    for comp in WeakCompositions::new(n, fs.len()) {
        let term = product_over(comp.iter().zip(&derivs).map(|(&i, d)| d[i].clone()))
            .expect("non-empty factor list");
        total = total.add(&term);
    }
    Ok(total)
}

fn quotient_rule<R: CoeffRing>(
    f: &TruncSeries<R>,
    n: usize,
    weak: bool,
) -> Result<TruncSeries<R>> {
    if n == 0 {
        return Err(Error::InvalidArgument("quotient rule needs n >= 1".into()));
    }
    let ring = f.ring().clone();
    let recip = f.reciprocal()?;
    let derivs = derivatives(f, n);
    let mut total = TruncSeries::zero(ring.clone(), f.order().saturating_sub(n));
    for k in 1..=n {
        let mut inner: Option<TruncSeries<R>> = None;
        let comps: Box<dyn Iterator<Item = Vec<usize>>> = if weak {
            Box::new(WeakCompositions::new(n, k))
        } else {
            Box::new(StrictCompositions::new(n, k))
        };
        for comp in comps {
            let term = product_over(comp.iter().map(|&i| derivs[i].clone())).expect("k >= 1");
            inner = Some(match inner {
                None => term,
                Some(acc) => acc.add(&term),
            });
        }
        let Some(inner) = inner else { continue };
        let mut scalar = if k % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) };
        if weak {
            scalar = ring.mul(&scalar, &ring.binomial(n as u64 + 1, k as u64 + 1));
        }
        let term = recip.pow(k as u64 + 1).mul(&inner).scale(&scalar);
        total = total.add(&term);
    }
    Ok(total)
}

/// `H^(n)(1/f)` as `sum_k (-1)^k f^{-(k+1)} sum_{strict} H^(i_1)(f)...H^(i_k)(f)`.
pub fn ht_quotient_v1<R: CoeffRing>(f: &TruncSeries<R>, n: usize) -> Result<TruncSeries<R>> {
    quotient_rule(f, n, false)
}

/// `H^(n)(1/f)` as `sum_k C(n+1, k+1) (-1)^k f^{-(k+1)} sum_{weak} H^(i_1)(f)...H^(i_k)(f)`.
pub fn ht_quotient_v2<R: CoeffRing>(f: &TruncSeries<R>, n: usize) -> Result<TruncSeries<R>> {
    quotient_rule(f, n, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{FiniteField, FqPoly, RatFunc};
    use crate::series::{RatFuncField, Rationals};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn zeroth_derivative_is_identity() {
        let f = TruncSeries::new(Rationals, (1..6).map(q).collect());
        assert_eq!(ht_derivative(&f, 0), f);
    }

    #[test]
    fn first_derivative_over_rationals() {
        let z3 = TruncSeries::monomial(Rationals, q(1), 3, 6);
        let d = ht_derivative(&z3, 1);
        assert_eq!(d, TruncSeries::monomial(Rationals, q(3), 2, 5));
    }

    #[test]
    fn first_derivative_vanishes_in_char_three() {
        let field = FiniteField::prime(3).unwrap();
        let ring = RatFuncField::new(&field);
        let t = RatFunc::from_poly(FqPoly::t(&field));
        let z3 = TruncSeries::monomial(ring.clone(), t, 3, 6);
        let d = ht_derivative(&z3, 1);
        assert!(d.coeffs().iter().all(|c| c.is_zero()));
        // H^(3)(z^3) = 1 though
        assert_eq!(ht_derivative(&z3, 3).coeff(0), &RatFunc::from_poly(FqPoly::t(&field)));
    }

    #[test]
    fn leibniz() {
        let f = TruncSeries::new(Rationals, vec![q(1), q(2), q(-1), q(4)]);
        let g = TruncSeries::new(Rationals, vec![q(3), q(0), q(5), q(1)]);
        let lhs = ht_product_rule(&[f.clone(), g.clone()], 1).unwrap();
        let rhs = ht_derivative(&f, 1).mul(&g).add(&f.mul(&ht_derivative(&g, 1)));
        assert!(lhs.agrees_with(&rhs));
        assert_eq!(lhs, ht_derivative(&f.mul(&g), 1));
    }

    #[test]
    fn quotient_of_one_is_zero() {
        let one = TruncSeries::one(Rationals, 8);
        for n in 1..6 {
            let v1 = ht_quotient_v1(&one, n).unwrap();
            let v2 = ht_quotient_v2(&one, n).unwrap();
            assert!(v1.coeffs().iter().all(|c| *c == q(0)));
            assert!(v2.coeffs().iter().all(|c| *c == q(0)));
        }
    }

    #[test]
    fn errors() {
        let f = TruncSeries::new(Rationals, vec![q(0), q(1)]);
        assert_eq!(ht_quotient_v1(&f, 1), Err(Error::NonUnit));
        let g = TruncSeries::one(Rationals, 3);
        assert!(ht_quotient_v2(&g, 0).is_err());
        assert!(ht_product_rule::<Rationals>(&[], 1).is_err());
    }
}
