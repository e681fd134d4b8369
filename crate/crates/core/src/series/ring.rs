use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinat::{binomial, lucas_binomial};
use crate::ff::{FieldRef, FqPoly, RatFunc};

/// An exact commutative coefficient ring for [`TruncSeries`](super::TruncSeries).
///
/// The ring value is a context (the rationals need none, `F_r(T)` needs its
/// field) and elements are plain values manipulated through it.
pub trait CoeffRing: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Multiplicative inverse when `a` is a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// `k * 1`.
    fn from_bigint(&self, k: &BigInt) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, k: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(k))
    }

    /// The binomial `C(m, n)` embedded in the ring. In characteristic `p` this
    /// is `C(m, n) mod p`, computed digit-wise by Lucas' theorem.
    fn binomial(&self, m: u64, n: u64) -> Self::Elem {
        match self.characteristic() {
            0 => self.from_bigint(&BigInt::from(binomial(m, n))),
            p => self.from_int(lucas_binomial(m, n, p) as i64),
        }
    }
}

/// The rational numbers, with [`BigRational`] elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl CoeffRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_bigint(&self, k: &BigInt) -> BigRational {
        BigRational::from_integer(k.clone())
    }
}

/// The rational function field `F_r(T)`.
#[derive(Debug, Clone)]
pub struct RatFuncField {
    field: FieldRef,
}

impl RatFuncField {
    pub fn new(field: &FieldRef) -> Self {
        RatFuncField { field: field.clone() }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }
}

impl CoeffRing for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero(&self.field)
    }
    fn one(&self) -> RatFunc {
        RatFunc::one(&self.field)
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a + b
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        -a
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a * b
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        a.inv().ok()
    }
    fn characteristic(&self) -> u64 {
        self.field.characteristic() as u64
    }
    fn from_bigint(&self, k: &BigInt) -> RatFunc {
        let p = BigInt::from(self.field.characteristic());
        let mut residue = k % &p;
        if residue.is_negative() {
            residue += &p;
        }
        let c = self.field.from_int(residue.to_i64().expect("residue below p"));
        RatFunc::from_poly(FqPoly::constant(&self.field, c))
    }
}

/// Convenience: a non-negative big integer as a rational.
pub fn rational_from_biguint(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
