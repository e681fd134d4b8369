//! Identity-verification suites. Each compares two independently computed
//! routes to the same quantity and reports every disagreement.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carlitz::{CarlitzContext, CarlitzKind};
use crate::classical::{composition_identity_sides, hyper_numbers, AssocKind, HyperFamily, Method};
use crate::error::Result;
use crate::ff::{FieldElement, FieldRef, FiniteField, FqPoly, RatFunc};
use crate::limits::Limits;
use crate::series::{
    ht_derivative, ht_product_rule, ht_quotient_v1, ht_quotient_v2, CoeffRing, RatFuncField, Rationals,
    TruncSeries,
};
use crate::stirling::verify_orthogonality;

/// Outcome of a verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl VerifyReport {
    fn new(suite: &'static str) -> Self {
        VerifyReport { suite, checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn orthogonality(ctx: &CarlitzContext, max_n: u32) -> Result<VerifyReport> {
    let report = verify_orthogonality(ctx, max_n)?;
    Ok(VerifyReport {
        suite: "orthogonality",
        checked: report.checked as u64,
        failures: report
            .violations
            .iter()
            .map(|v| format!("identity {} fails at n={} i={}: got {}", v.identity, v.n, v.i, v.value))
            .collect(),
    })
}

pub fn delta(ctx: &CarlitzContext, max_l: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("delta");
    for l in 0..=max_l {
        let value = ctx.delta_identity(l)?;
        let expected = if l == 0 { RatFunc::one(ctx.field()) } else { RatFunc::zero(ctx.field()) };
        report.check(value == expected, || format!("l={l}: sum is {value}"));
    }
    Ok(report)
}

/// First-kind closed form vs. the coefficients of the expanded product
/// `e_n`, and second-kind closed form vs. the triangular linear system.
pub fn closed_form(ctx: &CarlitzContext, max_n: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("closed-form");
    for n in 0..=max_n {
        let e = ctx.e_n(n)?;
        let solved = ctx.sts_a_via_linear_system(n)?;
        for i in 0..=n {
            let stf = ctx.stf_a(n, i)?;
            report.check(&stf == e.coeff(i as usize), || format!("stf({n},{i}) != [z^(r^{i})] e_{n}"));
            let sts = ctx.sts_a(n, i)?;
            report.check(sts == solved[i as usize], || format!("sts({n},{i}) != linear-system solution"));
        }
    }
    Ok(report)
}

/// `BC_n` / `CC_n` by series inversion vs. the first quotient rule.
pub fn carlitz_coeffs(ctx: &CarlitzContext, max_n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("carlitz-coeffs");
    for kind in [CarlitzKind::Bernoulli, CarlitzKind::Cauchy] {
        let a = ctx.bc_cc_numbers(kind, max_n)?;
        let b = ctx.bc_cc_via_quotient_rule(kind, max_n)?;
        for (n, (x, y)) in a.values.iter().zip(&b.values).enumerate() {
            report.check(x == y, || format!("{}_{n}: series {x} vs quotient rule {y}", kind.label()));
        }
        report.check(a.values[0] == RatFunc::one(ctx.field()), || format!("{}_0 != 1", kind.label()));
    }
    Ok(report)
}

pub fn cross_method(family: HyperFamily, big_n: u64, max_n: u64, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("cross-method");
    let runs = Method::ALL
        .iter()
        .map(|&m| hyper_numbers(family, big_n, max_n, m, limits))
        .collect::<Result<Vec<_>>>()?;
    for n in 0..=max_n as usize {
        let reference = &runs[0].values[n];
        for run in &runs[1..] {
            let v = &run.values[n];
            report.check(v == reference, || {
                format!("{} N={big_n} n={n}: {} gives {v}, series gives {reference}", family.label(), run.method)
            });
        }
    }
    Ok(report)
}

pub fn compositions(max_big_n: u64, max_n: u64, max_k: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("compositions");
    for kind in [AssocKind::First, AssocKind::Second] {
        for big_n in 1..=max_big_n {
            for n in 0..=max_n {
                for k in 1..=max_k {
                    let (lhs, rhs) = composition_identity_sides(kind, big_n, n, k)?;
                    report.check(lhs == rhs, || {
                        format!("{} kind N={big_n} n={n} k={k}: {lhs} vs {rhs}", kind.label())
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Random coefficient generators for the randomized rule checks.
pub trait RandomCoeffs: CoeffRing {
    fn random(&self, rng: &mut ChaCha8Rng) -> Self::Elem;

    fn random_unit(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        loop {
            let c = self.random(rng);
            if self.inv(&c).is_some() {
                return c;
            }
        }
    }
}

impl RandomCoeffs for Rationals {
    fn random(&self, rng: &mut ChaCha8Rng) -> BigRational {
        BigRational::new(BigInt::from(rng.random_range(-9i64..=9)), BigInt::from(rng.random_range(1i64..=5)))
    }
}

fn random_poly(field: &FieldRef, rng: &mut ChaCha8Rng, max_deg: usize) -> FqPoly {
    let deg = rng.random_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| field.element(rng.random_range(0..field.order())).expect("in range"))
        .collect();
    FqPoly::from_coeffs(field, coeffs)
}

impl RandomCoeffs for RatFuncField {
    fn random(&self, rng: &mut ChaCha8Rng) -> RatFunc {
        let field = self.field();
        let num = random_poly(field, rng, 2);
        // a third of the coefficients are proper fractions
        let den = if rng.random_range(0..3) == 0 {
            let mut d = random_poly(field, rng, 1);
            if d.is_zero() {
                d = FqPoly::t(field);
            }
            d
        } else {
            FqPoly::constant(field, FieldElement::ONE)
        };
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

pub fn random_series<R: RandomCoeffs>(ring: &R, order: usize, unit: bool, rng: &mut ChaCha8Rng) -> TruncSeries<R> {
    let coeffs = (0..order)
        .map(|i| if i == 0 && unit { ring.random_unit(rng) } else { ring.random(rng) })
        .collect();
    TruncSeries::new(ring.clone(), coeffs)
}

/// Product and quotient rules against direct computation on `cases` random
/// series of the given order, for `1 <= n <= max_n`.
pub fn ht_rules_for<R: RandomCoeffs>(
    ring: &R,
    cases: usize,
    order: usize,
    max_n: usize,
    rng: &mut ChaCha8Rng,
    report: &mut VerifyReport,
    label: &str,
) -> Result<()> {
    for case in 0..cases {
        let f = random_series(ring, order, true, rng);
        let g = random_series(ring, order, false, rng);
        let h = random_series(ring, order, false, rng);
        let recip = f.reciprocal()?;
        for n in 1..=max_n {
            let direct2 = ht_derivative(&f.mul(&g), n);
            let rule2 = ht_product_rule(&[f.clone(), g.clone()], n)?;
            report.check(rule2 == direct2, || format!("{label} case {case}: product rule k=2 n={n}"));
            let direct3 = ht_derivative(&f.mul(&g).mul(&h), n);
            let rule3 = ht_product_rule(&[f.clone(), g.clone(), h.clone()], n)?;
            report.check(rule3 == direct3, || format!("{label} case {case}: product rule k=3 n={n}"));
            let direct = ht_derivative(&recip, n);
            let v1 = ht_quotient_v1(&f, n)?;
            let v2 = ht_quotient_v2(&f, n)?;
            report.check(v1 == direct, || format!("{label} case {case}: quotient rule v1 n={n}"));
            report.check(v2 == direct, || format!("{label} case {case}: quotient rule v2 n={n}"));
        }
    }
    Ok(())
}

/// Randomized product/quotient rule suite over `Q` and `F_3(T)`, order 10.
pub fn ht_rules(cases: usize, max_n: usize, seed: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("ht-rules");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ht_rules_for(&Rationals, cases, 10, max_n, &mut rng, &mut report, "Q")?;
    let f3 = RatFuncField::new(&FiniteField::prime(3)?);
    ht_rules_for(&f3, cases, 10, max_n, &mut rng, &mut report, "F_3(T)")?;
    Ok(report)
}
