//! Hypergeometric Bernoulli and Cauchy numbers, and associated Stirling numbers.
//!
//! `1 / 1F1(1; N+1; x) = sum B_{N,n} x^n / n!` and
//! `1 / 2F1(1, N; N+1; -x) = sum c_{N,n} x^n / n!`. Each family is computed
//! four ways: series inversion (the reference), sums over strict
//! compositions, sums over weak compositions with binomial weights, and sums
//! of associated Stirling numbers. All arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::series::{rational_from_biguint, Rationals, StrictCompositions, TruncSeries, WeakCompositions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperFamily {
    /// `B_{N,n}`, from `1F1(1; N+1; x)`.
    Bernoulli,
    /// `c_{N,n}`, from `2F1(1, N; N+1; -x)`.
    Cauchy,
}

impl HyperFamily {
    pub fn label(self) -> &'static str {
        match self {
            HyperFamily::Bernoulli => "hb",
            HyperFamily::Cauchy => "hc",
        }
    }

    /// The associated Stirling kind used by this family's Stirling formula.
    pub fn stirling_kind(self) -> AssocKind {
        match self {
            HyperFamily::Bernoulli => AssocKind::Second,
            HyperFamily::Cauchy => AssocKind::First,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    Strict,
    Weak,
    Assoc,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Series, Method::Strict, Method::Weak, Method::Assoc];

    pub fn label(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Strict => "strict",
            Method::Weak => "weak",
            Method::Assoc => "assoc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Associated Stirling numbers: first kind from `-log(1-x) - F_{m-1}(x)`,
/// second kind from `e^x - E_{m-1}(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AssocKind {
    First,
    Second,
}

impl AssocKind {
    pub fn label(self) -> &'static str {
        match self {
            AssocKind::First => "first",
            AssocKind::Second => "second",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperNumberSeq {
    pub family: HyperFamily,
    pub big_n: u64,
    pub method: Method,
    /// `values[n]` for `n = 0..=max_n`.
    pub values: Vec<BigRational>,
}

fn rat(n: BigUint) -> BigRational {
    rational_from_biguint(n)
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn check_big_n(big_n: u64) -> Result<()> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(())
}

/// `2F1(1, N; N+1; -x) = N sum_j (-x)^j / (N + j)` (Cauchy) or
/// `1F1(1; N+1; x) = sum_j N! x^j / (N + j)!` (Bernoulli).
pub fn hyper_series(family: HyperFamily, big_n: u64, order: usize) -> Result<TruncSeries<Rationals>> {
    check_big_n(big_n)?;
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let coeffs = (0..order as u64)
        .map(|j| hyper_coeff(family, big_n, j))
        .collect();
    Ok(TruncSeries::new(Rationals, coeffs))
}

/// `H^(i)(h)` at zero: `N (-1)^i / (N + i)` or `N! / (N + i)!`.
pub fn hyper_coeff(family: HyperFamily, big_n: u64, i: u64) -> BigRational {
    match family {
        HyperFamily::Cauchy => {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign * big_n as i64), BigInt::from(big_n + i))
        }
        HyperFamily::Bernoulli => rat(factorial(big_n)) / rat(factorial(big_n + i)),
    }
}

fn guard_compositions(n: u64, weak: bool, limits: &Limits) -> Result<()> {
    let n = n as usize;
    let total: u128 = (1..=n)
        .map(|k| {
            if weak {
                WeakCompositions::count(n, k)
            } else {
                StrictCompositions::count(n, k)
            }
        })
        .fold(0u128, |a, b| a.saturating_add(b));
    limits.check_enumeration(total)
}

pub fn hyper_numbers(
    family: HyperFamily,
    big_n: u64,
    max_n: u64,
    method: Method,
    limits: &Limits,
) -> Result<HyperNumberSeq> {
    check_big_n(big_n)?;
    let values = match method {
        Method::Series => series_method(family, big_n, max_n)?,
        Method::Strict | Method::Weak => {
            let weak = method == Method::Weak;
            guard_compositions(max_n, weak, limits)?;
            (0..=max_n).map(|n| composition_method(family, big_n, n, weak)).collect()
        }
        Method::Assoc => assoc_method(family, big_n, max_n)?,
    };
    Ok(HyperNumberSeq { family, big_n, method, values })
}

/// `n! [x^n] 1/h`, the reference method.
pub fn hyper_numbers_series_method(family: HyperFamily, big_n: u64, max_n: u64) -> Result<HyperNumberSeq> {
    hyper_numbers(family, big_n, max_n, Method::Series, &Limits::default())
}

/// Sums over strict compositions (`i_j >= 1`).
pub fn hyper_numbers_strict_compositions(family: HyperFamily, big_n: u64, max_n: u64) -> Result<HyperNumberSeq> {
    hyper_numbers(family, big_n, max_n, Method::Strict, &Limits::default())
}

/// Sums over weak compositions (`i_j >= 0`) weighted by `C(n+1, k+1)`.
pub fn hyper_numbers_weak_compositions(family: HyperFamily, big_n: u64, max_n: u64) -> Result<HyperNumberSeq> {
    hyper_numbers(family, big_n, max_n, Method::Weak, &Limits::default())
}

/// Sums of associated Stirling numbers.
pub fn hyper_numbers_assoc_stirling(family: HyperFamily, big_n: u64, max_n: u64) -> Result<HyperNumberSeq> {
    hyper_numbers(family, big_n, max_n, Method::Assoc, &Limits::default())
}

fn series_method(family: HyperFamily, big_n: u64, max_n: u64) -> Result<Vec<BigRational>> {
    let h = hyper_series(family, big_n, max_n as usize + 1)?;
    let recip = h.reciprocal()?;
    Ok(recip
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| c * rat(factorial(n as u64)))
        .collect())
}

/// Per-part weight: `1 / (N + i)` (Cauchy) or `1 / (N + i)!` (Bernoulli).
fn part_weight(family: HyperFamily, big_n: u64, i: u64) -> BigRational {
    match family {
        HyperFamily::Cauchy => BigRational::new(BigInt::one(), BigInt::from(big_n + i)),
        HyperFamily::Bernoulli => BigRational::new(BigInt::one(), BigInt::from(factorial(big_n + i))),
    }
}

/// Per-composition scalar `(-N)^k` (Cauchy) or `(-N!)^k` (Bernoulli).
fn k_weight(family: HyperFamily, big_n: u64, k: u64) -> BigRational {
    let base = match family {
        HyperFamily::Cauchy => -BigInt::from(big_n),
        HyperFamily::Bernoulli => -BigInt::from(factorial(big_n)),
    };
    BigRational::from_integer(num_traits::pow(base, k as usize))
}

/// Leading factor `(-1)^n n!` (Cauchy) or `n!` (Bernoulli).
fn lead(family: HyperFamily, n: u64) -> BigRational {
    let f = rat(factorial(n));
    match family {
        HyperFamily::Cauchy if n % 2 == 1 => -f,
        _ => f,
    }
}

fn composition_method(family: HyperFamily, big_n: u64, n: u64, weak: bool) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let weights: Vec<BigRational> = (0..=n).map(|i| part_weight(family, big_n, i)).collect();
    let mut total = BigRational::zero();
    for k in 1..=n {
        let comps: Box<dyn Iterator<Item = Vec<usize>>> = if weak {
            Box::new(WeakCompositions::new(n as usize, k as usize))
        } else {
            Box::new(StrictCompositions::new(n as usize, k as usize))
        };
        let inner = comps.fold(BigRational::zero(), |acc, c| {
            acc + c.iter().fold(BigRational::one(), |p, &i| p * &weights[i])
        });
        let mut term = inner * k_weight(family, big_n, k);
        if weak {
            term *= rat(binomial(n + 1, k + 1));
        }
        total += term;
    }
    lead(family, n) * total
}

fn assoc_method(family: HyperFamily, big_n: u64, max_n: u64) -> Result<Vec<BigRational>> {
    let table = AssocStirlingTable::build(family.stirling_kind(), big_n, max_n + big_n * max_n)?;
    let mut values = vec![BigRational::one()];
    for n in 1..=max_n {
        let mut total = BigRational::zero();
        for k in 1..=n {
            let top = n + big_n * k;
            let s = table.get(top, k).expect("table covers n + N k").clone();
            total += rat(binomial(n + 1, k + 1)) * k_weight(family, big_n, k) * rat(factorial(k))
                / rat(factorial(top))
                * s;
        }
        values.push(lead(family, n) * total);
    }
    Ok(values)
}

/// `g(x) = -log(1-x) - F_{m-1}(x) = sum_{j>=m} x^j / j` (first kind) or
/// `e^x - E_{m-1}(x) = sum_{j>=m} x^j / j!` (second kind).
pub fn assoc_base_series(kind: AssocKind, m: u64, order: usize) -> TruncSeries<Rationals> {
    let coeffs = (0..order as u64)
        .map(|j| {
            if j < m || j == 0 {
                BigRational::zero()
            } else {
                match kind {
                    AssocKind::First => BigRational::new(BigInt::one(), BigInt::from(j)),
                    AssocKind::Second => BigRational::new(BigInt::one(), BigInt::from(factorial(j))),
                }
            }
        })
        .collect();
    TruncSeries::new(Rationals, coeffs)
}

/// The associated Stirling number `n! [x^n] g(x)^k / k!` (an integer, kept
/// as an exact rational).
pub fn assoc_stirling(kind: AssocKind, m: u64, n: u64, k: u64) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::InvalidArgument("association order m must be at least 1".into()));
    }
    if m.checked_mul(k).map_or(true, |mk| n < mk) {
        return Ok(BigRational::zero());
    }
    let g = assoc_base_series(kind, m, n as usize + 1);
    let c = g.pow(k).coeff(n as usize).clone();
    Ok(c * rat(factorial(n)) / rat(factorial(k)))
}

/// Associated Stirling numbers for `0 <= k <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocStirlingTable {
    pub kind: AssocKind,
    pub m: u64,
    pub max_n: u64,
    rows: Vec<Vec<BigRational>>,
}

impl AssocStirlingTable {
    pub fn build(kind: AssocKind, m: u64, max_n: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("association order m must be at least 1".into()));
        }
        let order = max_n as usize + 1;
        let g = assoc_base_series(kind, m, order);
        let mut rows: Vec<Vec<BigRational>> = (0..=max_n).map(|n| vec![BigRational::zero(); n as usize + 1]).collect();
        let mut power = TruncSeries::one(Rationals, order);
        for k in 0..=max_n {
            if k > 0 {
                power = power.mul(&g);
            }
            let k_fact = rat(factorial(k));
            for n in k..=max_n {
                let c = power.coeff(n as usize);
                if !c.is_zero() {
                    rows[n as usize][k as usize] = c * rat(factorial(n)) / &k_fact;
                }
            }
        }
        Ok(AssocStirlingTable { kind, m, max_n, rows })
    }

    pub fn get(&self, n: u64, k: u64) -> Option<&BigRational> {
        self.rows.get(n as usize)?.get(k as usize)
    }

    /// `(n, k, value)` in increasing `n`, then `k`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, &BigRational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n as u64, k as u64, v)))
    }
}

/// Checks `k! / (n + N k)! * S(n + N k, k)_{>=N}` against the sum over weak
/// compositions of `n` into `k` parts of `prod 1/(i_j + N)` (first kind) or
/// `prod 1/(i_j + N)!` (second kind).
pub fn composition_identity_check(kind: AssocKind, big_n: u64, n: u64, k: u64) -> Result<bool> {
    let (lhs, rhs) = composition_identity_sides(kind, big_n, n, k)?;
    Ok(lhs == rhs)
}

/// Both sides of [`composition_identity_check`].
pub fn composition_identity_sides(kind: AssocKind, big_n: u64, n: u64, k: u64) -> Result<(BigRational, BigRational)> {
    check_big_n(big_n)?;
    let top = n + big_n * k;
    let lhs = assoc_stirling(kind, big_n, top, k)? * rat(factorial(k)) / rat(factorial(top));
    let family = match kind {
        AssocKind::First => HyperFamily::Cauchy,
        AssocKind::Second => HyperFamily::Bernoulli,
    };
    let rhs = WeakCompositions::new(n as usize, k as usize).fold(BigRational::zero(), |acc, c| {
        acc + c
            .iter()
            .fold(BigRational::one(), |p, &i| p * part_weight(family, big_n, i as u64))
    });
    Ok((lhs, rhs))
}

/// Classical Cauchy numbers `c_n` via the `N = 1` reduction
/// `sum_k (-1)^(n-k) C(n+1, k+1) / C(n+k, k) [n+k, k]`.
pub fn cauchy_from_stirling(n: u64) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::one());
    }
    let table = AssocStirlingTable::build(AssocKind::First, 1, 2 * n)?;
    let mut total = BigRational::zero();
    for k in 1..=n {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        total += int(sign) * rat(binomial(n + 1, k + 1)) / rat(binomial(n + k, k))
            * table.get(n + k, k).expect("in range");
    }
    Ok(total)
}

/// Classical Bernoulli numbers `B_n` (with `B_1 = -1/2`) via the `N = 1`
/// reduction `sum_k (-1)^k C(n+1, k+1) / C(n+k, k) {n+k, k}`.
pub fn bernoulli_from_stirling(n: u64) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::one());
    }
    let table = AssocStirlingTable::build(AssocKind::Second, 1, 2 * n)?;
    let mut total = BigRational::zero();
    for k in 1..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        total += int(sign) * rat(binomial(n + 1, k + 1)) / rat(binomial(n + k, k))
            * table.get(n + k, k).expect("in range");
    }
    Ok(total)
}
