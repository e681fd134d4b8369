//! A-Stirling-Carlitz numbers of both kinds.
//!
//! First kind: `e_n(z) = sum_i stf(n, i) z^(r^i)` with the closed form
//! `stf(n, i) = (-1)^(n-i) D_n / (D_i L_{n-i}^(r^i))`.
//! Second kind: `z^(r^n) = sum_k e_k(z) sts(n, k)`, with the closed form
//! `sts(n, j) = D_n / (D_j D_{n-j}^(r^j))`.
//!
//! Both closed forms are evaluated as exact divisions in `A`; a remainder
//! would mean the divisibility the formulas rely on failed, and is an error.

use crate::carlitz::CarlitzContext;
use crate::error::{Error, Result};
use crate::ff::{FqPoly, RatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    First,
    Second,
}

impl StirlingKind {
    pub fn label(self) -> &'static str {
        match self {
            StirlingKind::First => "first",
            StirlingKind::Second => "second",
        }
    }
}

fn check_index(n: u32, k: u32) -> Result<()> {
    if k > n {
        return Err(Error::IndexOutOfRange { n: n as u64, k: k as u64 });
    }
    Ok(())
}

impl CarlitzContext {
    /// `stf(n, i) = (-1)^(n-i) D_n / (D_i L_{n-i}^(r^i))`.
    pub fn stf_a(&self, n: u32, i: u32) -> Result<FqPoly> {
        check_index(n, i)?;
        let max = self.limits().max_degree;
        let denom = &self.d(i)? * &self.l(n - i)?.pow_r_power(i, max)?;
        let q = self.d(n)?.div_exact(&denom)?;
        Ok(q.scale(self.field().sign((n - i) as u64)))
    }

    /// `sts(n, j) = D_n / (D_j D_{n-j}^(r^j))`.
    pub fn sts_a(&self, n: u32, j: u32) -> Result<FqPoly> {
        check_index(n, j)?;
        let max = self.limits().max_degree;
        let denom = &self.d(j)? * &self.d(n - j)?.pow_r_power(j, max)?;
        self.d(n)?.div_exact(&denom)
    }

    pub fn stirling_a(&self, kind: StirlingKind, n: u32, k: u32) -> Result<FqPoly> {
        match kind {
            StirlingKind::First => self.stf_a(n, k),
            StirlingKind::Second => self.sts_a(n, k),
        }
    }

    /// `sum_{a=0}^{l} (-1)^a / (L_a D_{l-a}^(r^a))`, which should be `1` for
    /// `l = 0` and `0` otherwise.
    pub fn delta_identity(&self, l: u32) -> Result<RatFunc> {
        let field = self.field();
        let max = self.limits().max_degree;
        let mut acc = RatFunc::zero(field);
        for a in 0..=l {
            let den = &self.l(a)? * &self.d(l - a)?.pow_r_power(a, max)?;
            let num = FqPoly::constant(field, field.sign(a as u64));
            acc = &acc + &RatFunc::new(num, den)?;
        }
        Ok(acc)
    }

    /// Solves `sum_k e_k(z) s_k = z^(r^n)` for `s_0..s_n` by back-substitution
    /// against the brute-force expansions of `e_0, ..., e_n`. Each `e_k` is
    /// monic with leading exponent `r^k`, so the system is unitriangular.
    pub fn sts_a_via_linear_system(&self, n: u32) -> Result<Vec<FqPoly>> {
        let basis = (0..=n).map(|k| self.e_n(k)).collect::<Result<Vec<_>>>()?;
        let field = self.field();
        let mut residual = vec![FqPoly::zero(field); n as usize + 1];
        residual[n as usize] = FqPoly::one(field);
        let mut solution = vec![FqPoly::zero(field); n as usize + 1];
        for k in (0..=n as usize).rev() {
            let s = residual[k].clone();
            let e_k = &basis[k];
            if !e_k.coeff(k).is_one() {
                return Err(Error::InvalidArgument(format!("e_{k} is not monic")));
            }
            for (i, c) in e_k.coeffs().iter().enumerate() {
                residual[i] = &residual[i] - &(c * &s);
            }
            solution[k] = s;
        }
        debug_assert!(residual.iter().all(FqPoly::is_zero));
        Ok(solution)
    }
}

/// Triangular table of A-Stirling-Carlitz numbers, `0 <= k <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingCarlitzTable {
    pub kind: StirlingKind,
    pub r: u32,
    pub max_n: u32,
    rows: Vec<Vec<FqPoly>>,
}

impl StirlingCarlitzTable {
    /// Fills rows in increasing `n`.
    pub fn build(ctx: &CarlitzContext, kind: StirlingKind, max_n: u32) -> Result<Self> {
        let rows = (0..=max_n)
            .map(|n| (0..=n).map(|k| ctx.stirling_a(kind, n, k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(StirlingCarlitzTable {
            kind,
            r: ctx.r(),
            max_n,
            rows,
        })
    }

    pub fn get(&self, n: u32, k: u32) -> Option<&FqPoly> {
        self.rows.get(n as usize)?.get(k as usize)
    }

    /// `(n, k, value)` in increasing `n`, then `k`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &FqPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n as u32, k as u32, v)))
    }
}

/// Which of the two orthogonality sums failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityViolation {
    /// 1 for `sum_k stf(k, i) sts(n, k)`, 2 for `sum_k sts(k, i) stf(n, k)`.
    pub identity: u8,
    pub n: u32,
    pub i: u32,
    pub value: FqPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub r: u32,
    pub max_n: u32,
    pub checked: usize,
    pub violations: Vec<OrthogonalityViolation>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks both orthogonality relations between the first- and second-kind
/// tables for every `0 <= i <= n <= max_n`.
pub fn verify_orthogonality(ctx: &CarlitzContext, max_n: u32) -> Result<OrthogonalityReport> {
    let first = StirlingCarlitzTable::build(ctx, StirlingKind::First, max_n)?;
    let second = StirlingCarlitzTable::build(ctx, StirlingKind::Second, max_n)?;
    let field = ctx.field();
    let mut report = OrthogonalityReport {
        r: ctx.r(),
        max_n,
        checked: 0,
        violations: Vec::new(),
    };
    let entry = |t: &StirlingCarlitzTable, n: u32, k: u32| t.get(n, k).expect("in range").clone();
    for n in 0..=max_n {
        for i in 0..=n {
            let expected = if n == i { FqPoly::one(field) } else { FqPoly::zero(field) };
            let (mut s1, mut s2) = (FqPoly::zero(field), FqPoly::zero(field));
            for k in i..=n {
                s1 = &s1 + &(&entry(&first, k, i) * &entry(&second, n, k));
                s2 = &s2 + &(&entry(&second, k, i) * &entry(&first, n, k));
            }
            for (identity, value) in [(1u8, s1), (2u8, s2)] {
                report.checked += 1;
                if value != expected {
                    report.violations.push(OrthogonalityViolation { identity, n, i, value });
                }
            }
        }
    }
    Ok(report)
}
