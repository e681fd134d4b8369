//! Dense polynomials in `T` over a finite field: the ring `A = F_r[T]`.
//!
//! Coefficients are stored in ascending degree order and are always trimmed,
//! so the zero polynomial has an empty coefficient vector.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::field::{FieldElement, FieldRef};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct FqPoly {
    field: FieldRef,
    coeffs: Vec<FieldElement>,
}

/// How coefficients are rendered by [`FqPoly::display`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PolyStyle {
    /// Least non-negative residues joined by ` + `.
    #[default]
    Canonical,
    /// Symmetric residues (`-1` for `p - 1`) joined by ` + ` / ` - `.
    Balanced,
    /// Balanced, with no spaces around the joins (`T^6+T^4-1`).
    Compact,
}

pub(crate) fn same_field(a: &FieldRef, b: &FieldRef) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::FieldMismatch {
            left_p: a.characteristic(),
            left_e: a.degree(),
            right_p: b.characteristic(),
            right_e: b.degree(),
        })
    }
}

impl FqPoly {
    pub fn zero(field: &FieldRef) -> Self {
        FqPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &FieldRef, c: FieldElement) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The variable `T`.
    pub fn t(field: &FieldRef) -> Self {
        Self::monomial(field, FieldElement::ONE, 1)
    }

    /// `c * T^k`.
    pub fn monomial(field: &FieldRef, c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// From ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(field: &FieldRef, coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.0 < field.order()));
        let mut p = FqPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// From ascending integer coefficients, each reduced into `F_p`.
    pub fn from_ints(field: &FieldRef, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Self::from_coeffs(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    /// `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn checked_add(&self, other: &FqPoly) -> Result<FqPoly> {
        same_field(&self.field, &other.field)?;
        let f = &self.field;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = f.add(*c, s);
        }
        Ok(Self::from_coeffs(f, coeffs))
    }

    pub fn checked_sub(&self, other: &FqPoly) -> Result<FqPoly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &FqPoly) -> Result<FqPoly> {
        same_field(&self.field, &other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        if f.is_prime_field() && (f.order() as u64) < (1 << 16) {
            // products are < 2^32, so a u64 accumulator absorbs 2^32 of them
            let p = f.order() as u64;
            let mut acc = vec![0u64; n];
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let a = a.0 as u64;
                for (slot, b) in acc[i..].iter_mut().zip(&other.coeffs) {
                    *slot += a * b.0 as u64;
                }
            }
            let coeffs = acc.into_iter().map(|c| FieldElement((c % p) as u32)).collect();
            return Ok(Self::from_coeffs(f, coeffs));
        }
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_coeffs(f, out))
    }

    fn neg_ref(&self) -> FqPoly {
        let f = &self.field;
        FqPoly {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> FqPoly {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> FqPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("leading coefficient is nonzero")),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(FieldElement::ONE)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &FqPoly) -> Result<(FqPoly, FqPoly)> {
        same_field(&self.field, &divisor.field)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= db {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.coeffs[db]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let q = f.mul(c, lead_inv);
            let shift = top - db;
            quot[shift] = q;
            let nq = f.neg(q);
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[shift + j] = f.add(rem[shift + j], f.mul(nq, b));
                }
            }
        }
        rem.truncate(db);
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    /// The quotient `self / divisor`, which must be exact. A nonzero remainder
    /// is reported as [`Error::InexactDivision`], never truncated away.
    pub fn div_exact(&self, divisor: &FqPoly) -> Result<FqPoly> {
        let (q, r) = self.div_rem(divisor)?;
        match r.degree() {
            None => Ok(q),
            Some(d) => Err(Error::InexactDivision { remainder_degree: d }),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &FqPoly) -> Result<FqPoly> {
        same_field(&self.field, &other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self(T^k)`.
    pub fn substitute_t_power(&self, k: usize) -> FqPoly {
        if self.coeffs.len() <= 1 || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::ZERO; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::from_coeffs(&self.field, coeffs)
    }

    /// `self^(r^i)`. Since `c^r = c` on `F_r`, this is `self(T^(r^i))`.
    pub fn pow_r_power(&self, i: u32, max_degree: u64) -> Result<FqPoly> {
        let r = self.field.order() as u64;
        let Some(rp) = crate::limits::checked_pow(r, i as u64) else {
            return self.pow(&BigUint::from(r).pow(i), max_degree);
        };
        let deg = self.degree().unwrap_or(0) as u128;
        let new_deg = deg.checked_mul(rp).unwrap_or(u128::MAX);
        if new_deg > max_degree as u128 {
            return Err(Error::DegreeCap {
                degree: new_deg.to_string(),
                cap: max_degree,
            });
        }
        Ok(self.substitute_t_power(rp as usize))
    }

    /// `self^exp` for an arbitrary-precision exponent. Uses the base-`r`
    /// digits of `exp` and Frobenius, `self^(c r^j) = self(T^(r^j))^c`.
    pub fn pow(&self, exp: &BigUint, max_degree: u64) -> Result<FqPoly> {
        let f = &self.field;
        if exp.is_zero() {
            return Ok(Self::one(f));
        }
        match self.degree() {
            None => return Ok(self.clone()),
            Some(0) => {
                let c = self.coeffs[0];
                // c^(r-1) = 1 for nonzero c
                let reduced = (exp - 1u32) % (f.order() - 1) + 1u32;
                let e = reduced.to_u64().expect("reduced exponent fits");
                return Ok(Self::constant(f, f.pow(c, e)));
            }
            Some(d) => {
                let total = BigUint::from(d) * exp;
                if total > BigUint::from(max_degree) {
                    return Err(Error::DegreeCap {
                        degree: total.to_string(),
                        cap: max_degree,
                    });
                }
            }
        }
        let r = f.order();
        let mut acc = Self::one(f);
        let mut frob = self.clone();
        for (j, digit) in exp.to_radix_le(r).into_iter().enumerate() {
            if j > 0 {
                frob = frob.substitute_t_power(r as usize);
            }
            for _ in 0..digit {
                acc = &acc * &frob;
            }
        }
        Ok(acc)
    }

    pub fn pow_u64(&self, exp: u64, max_degree: u64) -> Result<FqPoly> {
        self.pow(&BigUint::from(exp), max_degree)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn display(&self, style: PolyStyle) -> String {
        let f = &self.field;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) = match (style, f.balanced(c)) {
                (PolyStyle::Canonical, _) | (_, None) => (false, c.0 as i64),
                (_, Some(v)) => (v < 0, v.abs()),
            };
            let sep = match (style, negative) {
                (PolyStyle::Compact, true) => "-",
                (PolyStyle::Compact, false) => "+",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(sep);
            }
            let var = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            match (magnitude, k) {
                (_, 0) => out.push_str(&magnitude.to_string()),
                (1, _) => out.push_str(&var),
                _ => out.push_str(&format!("{magnitude}*{var}")),
            }
        }
        out
    }

    /// Parses the text produced by [`FqPoly::display`] in any style.
    pub fn parse(field: &FieldRef, text: &str) -> Result<FqPoly> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<FieldElement> = Vec::new();
        let bad = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                _ => false,
            };
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coef_text, var_text) = match term.find('T') {
                Some(pos) => (term[..pos].trim_end_matches('*'), Some(&term[pos + 1..])),
                None => (term, None),
            };
            let coef: u64 = if coef_text.is_empty() {
                1
            } else {
                coef_text.parse().map_err(|_| bad("bad coefficient"))?
            };
            if coef >= field.order() as u64 {
                return Err(bad("coefficient out of range"));
            }
            let k: usize = match var_text {
                None => 0,
                Some("") => 1,
                Some(e) => e
                    .strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(|| bad("bad exponent"))?,
            };
            let mut c = FieldElement(coef as u32);
            if negative {
                c = field.neg(c);
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, FieldElement::ZERO);
            }
            coeffs[k] = field.add(coeffs[k], c);
        }
        Ok(Self::from_coeffs(field, coeffs))
    }
}

impl PartialEq for FqPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FqPoly {}

impl Hash for FqPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.characteristic().hash(state);
        self.field.degree().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(PolyStyle::Canonical))
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqPoly[{:?}]({})", self.field, self)
    }
}

impl Add for &FqPoly {
    type Output = FqPoly;
    fn add(self, rhs: &FqPoly) -> FqPoly {
        self.checked_add(rhs).expect("polynomials over different fields")
    }
}

impl Sub for &FqPoly {
    type Output = FqPoly;
    fn sub(self, rhs: &FqPoly) -> FqPoly {
        self.checked_sub(rhs).expect("polynomials over different fields")
    }
}

impl Mul for &FqPoly {
    type Output = FqPoly;
    fn mul(self, rhs: &FqPoly) -> FqPoly {
        self.checked_mul(rhs).expect("polynomials over different fields")
    }
}

impl Neg for &FqPoly {
    type Output = FqPoly;
    fn neg(self) -> FqPoly {
        self.neg_ref()
    }
}

impl Neg for FqPoly {
    type Output = FqPoly;
    fn neg(self) -> FqPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FiniteField;

    fn f3() -> FieldRef {
        FiniteField::prime(3).unwrap()
    }

    fn p(field: &FieldRef, s: &str) -> FqPoly {
        FqPoly::parse(field, s).unwrap()
    }

    /// Schoolbook product with the field's scalar ops only, independent of the
    /// accumulator fast path.
    fn naive_mul(a: &FqPoly, b: &FqPoly) -> FqPoly {
        let f = a.field();
        let mut out = vec![FieldElement::ZERO; a.coeffs().len() + b.coeffs().len()];
        for (i, &x) in a.coeffs().iter().enumerate() {
            for (j, &y) in b.coeffs().iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        FqPoly::from_coeffs(f, out)
    }

    #[test]
    fn difference_of_squares() {
        let f = f3();
        let a = p(&f, "T + 1");
        let b = p(&f, "T - 1");
        assert_eq!((&a * &b).to_string(), "T^2 + 2");
        assert!((&a * &FqPoly::zero(&f)).is_zero());
    }

    #[test]
    fn d2_over_f3_from_brackets() {
        // D_2 = [2] [1]^3 = (T^9 - T)(T^3 - T)^3
        let f = f3();
        let b1 = p(&f, "T^3 - T");
        let b2 = p(&f, "T^9 - T");
        let b1_cubed = naive_mul(&naive_mul(&b1, &b1), &b1);
        let d2 = &b2 * &b1_cubed;
        assert_eq!(d2, naive_mul(&b2, &b1_cubed));
        // (T^3 - T)^3 = T^9 - T^3 in characteristic 3
        assert_eq!(b1_cubed, p(&f, "T^9 - T^3"));
        assert_eq!(d2.to_string(), "T^18 + 2*T^12 + 2*T^10 + T^4");
        assert_eq!(d2.degree(), Some(18));
    }

    #[test]
    fn exact_division() {
        let f = f3();
        let d1 = p(&f, "T^3 - T");
        let d2 = p(&f, "T^18 - T^12 - T^10 + T^4");
        let l1_cubed = d1.pow_r_power(1, 1000).unwrap();
        let q = d2.div_exact(&(&d1 * &l1_cubed)).unwrap();
        // stf{2}{1}_A = -(T^6 + T^4 + T^2 + 1), and q = -stf{2}{1}_A
        assert_eq!(q, p(&f, "T^6 + T^4 + T^2 + 1"));
        assert_eq!(
            p(&f, "T^2").div_exact(&p(&f, "T + 1")),
            Err(Error::InexactDivision { remainder_degree: 0 })
        );
        assert_eq!(p(&f, "T").div_exact(&FqPoly::zero(&f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_cases() {
        let f = f3();
        let a = p(&f, "2*T^2 + T");
        assert_eq!(a.gcd(&FqPoly::zero(&f)).unwrap(), a.monic());
        assert_eq!(a.gcd(&a).unwrap(), a.monic());
        assert_eq!(p(&f, "T^2 - 1").gcd(&p(&f, "T - 1")).unwrap(), p(&f, "T + 2"));
        assert_eq!(FqPoly::zero(&f).gcd(&FqPoly::zero(&f)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn mismatched_fields() {
        let a = FqPoly::t(&f3());
        let b = FqPoly::t(&FiniteField::prime(5).unwrap());
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn display_formats() {
        let f = f3();
        let a = p(&f, "-T^6 - T^4 + 1");
        assert_eq!(a.display(PolyStyle::Canonical), "2*T^6 + 2*T^4 + 1");
        assert_eq!(a.display(PolyStyle::Balanced), "-T^6 - T^4 + 1");
        assert_eq!(a.display(PolyStyle::Compact), "-T^6-T^4+1");
        assert_eq!(FqPoly::zero(&f).to_string(), "0");
        assert_eq!(FqPoly::t(&f).to_string(), "T");
        assert_eq!(p(&f, "2*T + 2").to_string(), "2*T + 2");
        for style in [PolyStyle::Canonical, PolyStyle::Balanced, PolyStyle::Compact] {
            assert_eq!(p(&f, &a.display(style)), a);
        }
        assert!(FqPoly::parse(&f, "3*T").is_err());
        assert!(FqPoly::parse(&f, "T^").is_err());
        assert!(FqPoly::parse(&f, "").is_err());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = f3();
        let a = p(&f, "T^2 + 2*T + 2");
        let mut acc = FqPoly::one(&f);
        for e in 0..12u64 {
            assert_eq!(a.pow_u64(e, 1000).unwrap(), acc, "exponent {e}");
            acc = naive_mul(&acc, &a);
        }
        let two = FqPoly::constant(&f, FieldElement(2));
        let huge = BigUint::from(10u32).pow(40);
        assert!(two.pow(&huge, 10).unwrap().is_one());
        assert!(matches!(a.pow(&huge, 1_000_000), Err(Error::DegreeCap { .. })));
    }
}
