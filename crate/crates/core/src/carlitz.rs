//! The Carlitz apparatus over `A = F_r[T]`: brackets `[i]`, the products
//! `D_i` and `L_i`, the Carlitz factorial, the additive polynomials `e_n(z)`,
//! and truncated Carlitz exponential / logarithm series.
//!
//! The normalised polynomial `E_n(z) = e_n(z) / D_n` is not exposed
//! separately; divide the coefficients of [`CarlitzContext::e_n`] by
//! [`CarlitzContext::d`] when needed.

use std::fmt;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::ff::{enumerate_a, FieldElement, FieldRef, FiniteField, FqPoly, PolyStyle, RatFunc};
use crate::limits::{checked_pow, Limits};
use crate::series::{ht_quotient_v1, RatFuncField, TruncSeries};

/// Which Carlitz coefficient family: `z / e_C(z)` or `z / log_C(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CarlitzKind {
    /// Bernoulli-Carlitz numbers `BC_n`.
    Bernoulli,
    /// Cauchy-Carlitz numbers `CC_n`.
    Cauchy,
}

impl CarlitzKind {
    pub fn label(self) -> &'static str {
        match self {
            CarlitzKind::Bernoulli => "BC",
            CarlitzKind::Cauchy => "CC",
        }
    }
}

#[derive(Default)]
struct Tables {
    /// `brackets[i] = [i + 1]`
    brackets: Vec<FqPoly>,
    d: Vec<FqPoly>,
    l: Vec<FqPoly>,
}

/// Field, size guards, and a write-once cache of `[i]`, `D_i`, `L_i`.
pub struct CarlitzContext {
    field: FieldRef,
    limits: Limits,
    tables: RwLock<Tables>,
}

impl fmt::Debug for CarlitzContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CarlitzContext")
            .field("field", &self.field)
            .field("limits", &self.limits)
            .finish()
    }
}

/// The additive polynomial `e_n(z) = sum_i coeffs[i] z^(r^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivePoly {
    level: u32,
    coeffs: Vec<FqPoly>,
}

impl AdditivePoly {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// `coeffs()[i]` multiplies `z^(r^i)`.
    pub fn coeffs(&self) -> &[FqPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &FqPoly {
        &self.coeffs[i]
    }

    /// Evaluates at `z = x` for `x` in `A`.
    pub fn eval(&self, x: &FqPoly, max_degree: u64) -> Result<FqPoly> {
        let mut acc = FqPoly::zero(x.field());
        for (i, c) in self.coeffs.iter().enumerate() {
            let power = x.pow_r_power(i as u32, max_degree)?;
            acc = &acc + &(c * &power);
        }
        Ok(acc)
    }

    /// `z^9 - (T^6+T^4+T^2+1) z^3 + (T^6+T^4+T^2) z` style rendering.
    pub fn display(&self, style: PolyStyle) -> String {
        let field = match self.coeffs.first() {
            Some(c) => c.field().clone(),
            None => return "0".into(),
        };
        let r = field.order() as u64;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let z = match r.pow(i as u32) {
                1 => "z".to_string(),
                e => format!("z^{e}"),
            };
            let signed = style != PolyStyle::Canonical && field.is_prime_field();
            let lc_negative = signed && field.balanced(c.leading_coeff().unwrap()).unwrap_or(0) < 0;
            let shown = if lc_negative { -c } else { c.clone() };
            let body = shown.display(if signed { PolyStyle::Compact } else { PolyStyle::Canonical });
            let term = if shown.is_one() {
                z
            } else if shown.coeffs().iter().filter(|a| !a.is_zero()).count() > 1 {
                format!("({body}) {z}")
            } else {
                format!("{body} {z}")
            };
            match (out.is_empty(), lc_negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        out
    }
}

/// `BC_0, BC_1, ...` or `CC_0, CC_1, ...` as exact elements of `F_r(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarlitzCoeffSeq {
    pub kind: CarlitzKind,
    pub values: Vec<RatFunc>,
}

impl CarlitzCoeffSeq {
    /// Number of coefficients, i.e. the truncation order used.
    pub fn order(&self) -> usize {
        self.values.len()
    }
}

fn degree_of_d(r: u64, i: u64) -> Option<u128> {
    checked_pow(r, i)?.checked_mul(i as u128)
}

impl CarlitzContext {
    pub fn new(r: u32) -> Result<Self> {
        Ok(Self::with_field(FiniteField::of_order(r)?, Limits::default()))
    }

    pub fn with_field(field: FieldRef, limits: Limits) -> Self {
        CarlitzContext {
            field,
            limits,
            tables: RwLock::new(Tables::default()),
        }
    }

    pub fn with_limits(r: u32, limits: Limits) -> Result<Self> {
        Ok(Self::with_field(FiniteField::of_order(r)?, limits))
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// The field size `r`.
    pub fn r(&self) -> u32 {
        self.field.order()
    }

    fn guard(&self, degree: Option<u128>) -> Result<()> {
        match degree {
            Some(d) => self.limits.check_degree(d),
            None => Err(Error::DegreeCap {
                degree: "overflow".into(),
                cap: self.limits.max_degree,
            }),
        }
    }

    /// Fills the cache through index `i` (brackets through `[i]`).
    fn ensure(&self, i: usize) -> Result<()> {
        {
            let t = self.tables.read().expect("carlitz cache poisoned");
            if t.d.len() > i {
                return Ok(());
            }
        }
        let r = self.r() as u64;
        self.guard(degree_of_d(r, i as u64))?;
        self.guard(checked_pow(r, i as u64))?;
        let mut t = self.tables.write().expect("carlitz cache poisoned");
        if t.d.is_empty() {
            t.d.push(FqPoly::one(&self.field));
            t.l.push(FqPoly::one(&self.field));
        }
        while t.d.len() <= i {
            let j = t.d.len() as u32;
            let bracket = &FqPoly::monomial(&self.field, FieldElement::ONE, r.pow(j) as usize)
                - &FqPoly::t(&self.field);
            // D_j = [j] D_{j-1}^r, L_j = [j] L_{j-1}
            let d_prev_r = t.d[j as usize - 1].pow_r_power(1, self.limits.max_degree)?;
            let d = &bracket * &d_prev_r;
            let l = &bracket * &t.l[j as usize - 1];
            t.brackets.push(bracket);
            t.d.push(d);
            t.l.push(l);
        }
        Ok(())
    }

    /// `[i] = T^(r^i) - T` for `i >= 1`.
    pub fn bracket(&self, i: u32) -> Result<FqPoly> {
        if i == 0 {
            return Err(Error::InvalidArgument("[i] is defined for i >= 1".into()));
        }
        self.ensure(i as usize)?;
        Ok(self.tables.read().expect("carlitz cache poisoned").brackets[i as usize - 1].clone())
    }

    /// `D_i = [i] [i-1]^r ... [1]^(r^(i-1))`, `D_0 = 1`. Degree `i r^i`.
    pub fn d(&self, i: u32) -> Result<FqPoly> {
        self.ensure(i as usize)?;
        Ok(self.tables.read().expect("carlitz cache poisoned").d[i as usize].clone())
    }

    /// `L_i = [i] [i-1] ... [1]`, `L_0 = 1`. Degree `r + r^2 + ... + r^i`.
    pub fn l(&self, i: u32) -> Result<FqPoly> {
        self.ensure(i as usize)?;
        Ok(self.tables.read().expect("carlitz cache poisoned").l[i as usize].clone())
    }

    /// Base-`r` digits of `n`, least significant first.
    pub fn digits(&self, mut n: u64) -> Vec<u64> {
        let r = self.r() as u64;
        let mut out = Vec::new();
        while n > 0 {
            out.push(n % r);
            n /= r;
        }
        out
    }

    /// The Carlitz factorial `Pi(n) = prod_j D_j^(c_j)` over the base-`r` digits `c_j` of `n`.
    pub fn carlitz_factorial(&self, n: u64) -> Result<FqPoly> {
        let r = self.r() as u64;
        let digits = self.digits(n);
        let degree = digits.iter().enumerate().try_fold(0u128, |acc, (j, &c)| {
            acc.checked_add(degree_of_d(r, j as u64)?.checked_mul(c as u128)?)
        });
        self.guard(degree)?;
        let mut acc = FqPoly::one(&self.field);
        for (j, &c) in digits.iter().enumerate() {
            let d = self.d(j as u32)?;
            for _ in 0..c {
                acc = &acc * &d;
            }
        }
        Ok(acc)
    }

    /// `e_n(z) = prod_{a in A(n)} (z + a)`, expanded in full.
    ///
    /// The product is multiplied out as a dense polynomial of degree `r^n` in
    /// `z`; every coefficient away from the exponents `r^i` must vanish, and a
    /// nonzero one is reported as [`Error::SparsityViolation`].
    pub fn e_n(&self, n: u32) -> Result<AdditivePoly> {
        let dense = self.e_n_dense(n)?;
        let r = self.r() as usize;
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut next_power = 1usize;
        for (exponent, c) in dense.into_iter().enumerate() {
            if exponent == next_power {
                coeffs.push(c);
                next_power *= r;
            } else if !c.is_zero() {
                return Err(Error::SparsityViolation { level: n, exponent });
            }
        }
        debug_assert!(coeffs.last().is_some_and(FqPoly::is_one));
        Ok(AdditivePoly { level: n, coeffs })
    }

    /// Dense coefficients (index = exponent of `z`) of `prod_{a in A(n)} (z + a)`.
    pub fn e_n_dense(&self, n: u32) -> Result<Vec<FqPoly>> {
        let points = enumerate_a(&self.field, n, &self.limits)?;
        let zero = FqPoly::zero(&self.field);
        let mut acc = vec![FqPoly::one(&self.field)];
        for a in &points {
            // acc * (z + a)
            let mut next = vec![zero.clone(); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                next[k + 1] = &next[k + 1] + c;
                if !a.is_zero() {
                    next[k] = &next[k] + &(c * a);
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    fn sparse_series(&self, order: usize, coeff_at: impl Fn(u32) -> Result<RatFunc>) -> Result<TruncSeries<RatFuncField>> {
        let ring = RatFuncField::new(&self.field);
        let mut coeffs = vec![RatFunc::zero(&self.field); order];
        let r = self.r() as usize;
        let mut m = 1usize;
        let mut i = 0u32;
        while m < order {
            coeffs[m] = coeff_at(i)?;
            m *= r;
            i += 1;
        }
        Ok(TruncSeries::new(ring, coeffs))
    }

    /// `e_C(x) = sum_i x^(r^i) / D_i`, truncated to `order` coefficients.
    pub fn ec_series(&self, order: usize) -> Result<TruncSeries<RatFuncField>> {
        self.sparse_series(order, |i| RatFunc::new(FqPoly::one(&self.field), self.d(i)?))
    }

    /// `log_C(x) = sum_i (-1)^i x^(r^i) / L_i`, truncated to `order` coefficients.
    pub fn logc_series(&self, order: usize) -> Result<TruncSeries<RatFuncField>> {
        self.sparse_series(order, |i| {
            let sign = FqPoly::constant(&self.field, self.field.sign(i as u64));
            RatFunc::new(sign, self.l(i)?)
        })
    }

    /// `e_C(z) / z` or `log_C(z) / z`, of the given order.
    pub fn unit_series(&self, kind: CarlitzKind, order: usize) -> Result<TruncSeries<RatFuncField>> {
        let s = match kind {
            CarlitzKind::Bernoulli => self.ec_series(order + 1)?,
            CarlitzKind::Cauchy => self.logc_series(order + 1)?,
        };
        s.div_z_power(1)
    }

    /// `BC_n` (resp. `CC_n`) for `n = 0..=max_n`, by inverting `e_C(z)/z`
    /// (resp. `log_C(z)/z`) and scaling coefficient `n` by `Pi(n)`.
    pub fn bc_cc_numbers(&self, kind: CarlitzKind, max_n: usize) -> Result<CarlitzCoeffSeq> {
        let f = self.unit_series(kind, max_n + 1)?;
        let recip = f.reciprocal()?;
        let values = recip
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(n, c)| Ok(&c * &RatFunc::from_poly(self.carlitz_factorial(n as u64)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CarlitzCoeffSeq { kind, values })
    }

    /// The same numbers through the first quotient rule: `BC_n / Pi(n)` is
    /// `H^(n)(1 / f)` at `z = 0` with `f = e_C(z)/z`.
    pub fn bc_cc_via_quotient_rule(&self, kind: CarlitzKind, max_n: usize) -> Result<CarlitzCoeffSeq> {
        let f = self.unit_series(kind, max_n + 1)?;
        let mut values = vec![RatFunc::one(&self.field)];
        for n in 1..=max_n {
            let h = ht_quotient_v1(&f.truncate(n + 1), n)?;
            let at_zero = h.coeff_at_zero(0)?;
            values.push(&at_zero * &RatFunc::from_poly(self.carlitz_factorial(n as u64)?));
        }
        Ok(CarlitzCoeffSeq { kind, values })
    }

    /// `r^2`, the default largest index for coefficient tables (order `r^2 + 1`).
    pub fn default_max_n(&self) -> usize {
        (self.r() as usize).pow(2)
    }
}
