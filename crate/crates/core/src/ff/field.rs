use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared handle to a finite field. Polynomials and rational functions carry one.
pub type FieldRef = Arc<FiniteField>;

/// Largest field size accepted for non-prime fields (log tables are built eagerly).
const MAX_EXTENSION_ORDER: u64 = 1 << 20;

/// An element of `F_r`, stored by its canonical index in `0..r`.
///
/// For prime fields the index is the least non-negative residue. For `r = p^e`
/// it encodes the coefficient vector `(c_0, ..., c_{e-1})` over `F_p` of the
/// representative modulo the field's modulus, as `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(transparent)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The finite field `F_r` with `r = p^e`.
pub struct FiniteField {
    p: u32,
    e: u32,
    r: u32,
    /// Monic irreducible over `F_p`, ascending coefficients, length `e + 1`.
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for a primitive element `g`; empty for prime fields.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.e)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}

impl Eq for FiniteField {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<FieldRef> {
        Self::new(p, 1)
    }

    /// `F_{p^e}`. The modulus is the smallest monic irreducible of degree `e`
    /// over `F_p`, ordering candidates by `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`.
    pub fn new(p: u32, e: u32) -> Result<FieldRef> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if e == 1 {
            if p >= 1 << 31 {
                return Err(Error::InvalidField(format!("prime {p} too large")));
            }
            return Ok(Arc::new(FiniteField {
                p,
                e,
                r: p,
                modulus: vec![0, 1],
                exp: Vec::new(),
                log: Vec::new(),
            }));
        }
        let r = (p as u64)
            .checked_pow(e)
            .filter(|&r| r <= MAX_EXTENSION_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{e} exceeds {MAX_EXTENSION_ORDER}")))?;
        let r = r as u32;
        let modulus = smallest_irreducible(p, e);
        let mut field = FiniteField {
            p,
            e,
            r,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(Arc::new(field))
    }

    /// The field with exactly `r` elements; `r` must be a prime power.
    pub fn of_order(r: u32) -> Result<FieldRef> {
        if r < 2 {
            return Err(Error::InvalidField(format!("{r} is not a prime power")));
        }
        let p = (2..=r).find(|d| r % d == 0).unwrap_or(r);
        let mut e = 0;
        let mut rest = r;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidField(format!("{r} is not a prime power")));
        }
        Self::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    /// Ascending coefficients of the defining polynomial over `F_p` (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.e == 1
    }

    /// Element from its canonical index; `None` when `index >= r`.
    pub fn element(&self, index: u32) -> Option<FieldElement> {
        (index < self.r).then_some(FieldElement(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.r).map(FieldElement)
    }

    /// Image of an integer under `Z -> F_p -> F_r`.
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.e == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return FieldElement((s % self.p as u64) as u32);
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.e == 1 {
            return if a.0 == 0 { a } else { FieldElement(self.p - a.0) };
        }
        self.digitwise(a, FieldElement(0), |x, _| (self.p - x) % self.p)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        if self.e == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let k = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % (self.r as u64 - 1);
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        if self.e == 1 {
            return Some(self.pow(a, self.p as u64 - 2));
        }
        let k = (self.r - 1 - self.log[a.0 as usize]) % (self.r - 1);
        Some(FieldElement(self.exp[k as usize]))
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `(-1)^k` as a field element.
    pub fn sign(&self, k: u64) -> FieldElement {
        if k % 2 == 0 {
            FieldElement::ONE
        } else {
            self.neg(FieldElement::ONE)
        }
    }

    /// Symmetric residue for prime fields (`p - 1` shows as `-1`); `None` for
    /// extension fields, where signs carry no meaning.
    pub fn balanced(&self, a: FieldElement) -> Option<i64> {
        if self.e != 1 {
            return None;
        }
        let v = a.0 as i64;
        let p = self.p as i64;
        Some(if v > p / 2 { v - p } else { v })
    }

    fn digitwise(&self, a: FieldElement, b: FieldElement, op: impl Fn(u32, u32) -> u32) -> FieldElement {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.e {
            out += op(x % self.p, y % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    fn build_log_tables(&mut self) {
        let order = self.r as usize - 1;
        let p = self.p;
        let modulus = self.modulus.clone();
        let e = self.e as usize;
        let mul_raw = |a: u32, b: u32| -> u32 {
            let av = digits(a, p, e);
            let bv = digits(b, p, e);
            undigits(&mulmod(&av, &bv, &modulus, p), p)
        };
        for g in 2..self.r {
            let mut exp = Vec::with_capacity(order);
            let mut x = 1u32;
            let mut primitive = true;
            for k in 0..order {
                if k > 0 && x == 1 {
                    primitive = false;
                    break;
                }
                exp.push(x);
                x = mul_raw(x, g);
            }
            if primitive && x == 1 {
                let mut log = vec![0u32; self.r as usize];
                for (k, &v) in exp.iter().enumerate() {
                    log[v as usize] = k as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }
}

fn digits(mut x: u32, p: u32, e: usize) -> Vec<u32> {
    let mut v = vec![0; e];
    for d in v.iter_mut() {
        *d = x % p;
        x /= p;
    }
    v
}

fn undigits(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// `a * b mod modulus` over `F_p`; `a`, `b` have length `deg(modulus)`.
fn mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for top in (e..2 * e).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate() {
            let idx = top - e + j;
            prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
        }
    }
    prod.truncate(e);
    prod.into_iter().map(|c| c as u32).collect()
}

/// Remainder of `a` modulo monic `b` over `F_p`, both ascending.
fn rem_fp(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while a.len() > db {
        let c = a[a.len() - 1];
        let shift = a.len() - 1 - db;
        if c != 0 {
            for (j, &m) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + (p as u64 - c) * m as u64) % p as u64;
            }
        }
        a.pop();
    }
    a.into_iter().map(|c| c as u32).collect()
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    let count = (p as u64).pow(e as u32);
    'candidate: for t in 0..count {
        let mut f = digits(t as u32, p, e);
        f.push(1);
        if f[0] == 0 {
            continue;
        }
        // trial division by every monic polynomial of degree 1..=e/2
        for d in 1..=e / 2 {
            for s in 0..(p as u64).pow(d as u32) {
                let mut g = digits(s as u32, p, d);
                g.push(1);
                if rem_fp(&f, &g, p).iter().all(|&c| c == 0) {
                    continue 'candidate;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::prime(3).unwrap();
        let two = f.element(2).unwrap();
        assert_eq!(f.add(two, two), FieldElement(1));
        assert_eq!(f.neg(FieldElement::ONE), two);
        assert_eq!(f.inv(two), Some(two));
        assert_eq!(f.balanced(two), Some(-1));
        assert_eq!(f.from_int(-1), two);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::of_order(6).is_err());
        assert!(FiniteField::of_order(1).is_err());
        assert!(FiniteField::new(4, 1).is_err());
    }

    #[test]
    fn extension_moduli() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^2 + 1 is irreducible over F_3 since -1 is a non-residue
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn extension_field_axioms() {
        for (p, e) in [(2, 2), (2, 3), (3, 2), (5, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                    // a^r = a
                    assert_eq!(f.pow(a, f.order() as u64), a);
                }
                for &b in &all {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in all.iter().take(5) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn minus_one_to_power_of_r_is_minus_one() {
        for r in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::of_order(r).unwrap();
            let minus_one = f.neg(FieldElement::ONE);
            for l in 0..5 {
                let rl = (r as u64).pow(l);
                assert_eq!(f.pow(minus_one, rl), minus_one, "r={r} l={l}");
            }
        }
    }
}
