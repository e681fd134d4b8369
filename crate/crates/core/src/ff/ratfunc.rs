//! The field `F_r(T)` of rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::FieldRef;
use super::poly::{same_field, FqPoly, PolyStyle};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` with `den` monic and `gcd(num, den) = 1`.
/// Zero is stored as `0 / 1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: FqPoly,
    den: FqPoly,
}

impl RatFunc {
    pub fn new(num: FqPoly, den: FqPoly) -> Result<Self> {
        same_field(num.field(), den.field())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.field()));
        }
        if den.degree() == Some(0) {
            let inv = num.field().inv(den.coeffs()[0]).expect("nonzero constant");
            return Ok(RatFunc {
                num: num.scale(inv),
                den: FqPoly::one(num.field()),
            });
        }
        let g = num.gcd(&den)?;
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc = den.leading_coeff().expect("nonzero denominator");
        if lc != super::FieldElement::ONE {
            let inv = num.field().inv(lc).expect("nonzero");
            num = num.scale(inv);
            den = den.scale(inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: FqPoly) -> Self {
        let one = FqPoly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: &FieldRef) -> Self {
        Self::from_poly(FqPoly::zero(field))
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::from_poly(FqPoly::one(field))
    }

    pub fn field(&self) -> &FieldRef {
        self.num.field()
    }

    pub fn num(&self) -> &FqPoly {
        &self.num
    }

    pub fn den(&self) -> &FqPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&FqPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc> {
        same_field(self.field(), other.field())?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.den == other.den {
            return RatFunc::new(&self.num + &other.num, self.den.clone());
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RatFunc::new(num, &self.den * &other.den)
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        same_field(self.field(), other.field())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(&self.num * &other.num));
        }
        // cross-cancel first to keep intermediate degrees small
        let g1 = self.num.gcd(&other.den)?;
        let g2 = other.num.gcd(&self.den)?;
        let num = &self.num.div_exact(&g1)? * &other.num.div_exact(&g2)?;
        let den = &self.den.div_exact(&g2)? * &other.den.div_exact(&g1)?;
        RatFunc::new(num, den)
    }

    pub fn display(&self, style: PolyStyle) -> String {
        if self.den.is_one() {
            self.num.display(style)
        } else {
            format!("{} / {}", self.num.display(style), self.den.display(style))
        }
    }

    /// Parses `num` or `num / den`.
    pub fn parse(field: &FieldRef, text: &str) -> Result<RatFunc> {
        match text.split_once('/') {
            None => Ok(Self::from_poly(FqPoly::parse(field, text)?)),
            Some((n, d)) => RatFunc::new(FqPoly::parse(field, n)?, FqPoly::parse(field, d)?),
        }
    }
}

impl From<FqPoly> for RatFunc {
    fn from(p: FqPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(PolyStyle::Canonical))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("rational functions over different fields")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("rational functions over different fields")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FiniteField;

    #[test]
    fn normalization() {
        let f = FiniteField::prime(3).unwrap();
        let p = |s| FqPoly::parse(&f, s).unwrap();
        // (2T^2 - 2) / (2T - 2) = T + 1
        let q = RatFunc::new(p("2*T^2 - 2"), p("2*T - 2")).unwrap();
        assert_eq!(q.num(), &p("T + 1"));
        assert!(q.den().is_one());
        // representative independence
        let a = RatFunc::new(p("T"), p("2*T^2 + 2")).unwrap();
        let b = RatFunc::new(p("2*T^2"), p("T^3 + T")).unwrap();
        assert_eq!(a, b);
        assert!(a.den().is_monic());
        assert_eq!(a.to_string(), "2*T / T^2 + 1");
        assert_eq!(RatFunc::parse(&f, &a.to_string()).unwrap(), a);
        assert_eq!(RatFunc::new(p("T"), FqPoly::zero(&f)), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::zero(&f).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_operations() {
        let f = FiniteField::prime(5).unwrap();
        let p = |s| FqPoly::parse(&f, s).unwrap();
        let a = RatFunc::new(p("T + 1"), p("T^2 + 3")).unwrap();
        let b = RatFunc::new(p("2*T"), p("T + 4")).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), RatFunc::one(&f));
        assert!((&a - &a).is_zero());
    }
}
