//! Acceptance checks. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, then exits nonzero if any
//! failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use carlitz::classical::{
    assoc_stirling, bernoulli_from_stirling, cauchy_from_stirling, hyper_numbers, AssocKind, HyperFamily, Method,
};
use carlitz::verify;
use carlitz::{CarlitzContext, FqPoly, Limits};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Outcome = Result<(), String>;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let took = start.elapsed();
    if took > budget {
        return Err(format!("took {took:?}, budget {budget:?}"));
    }
    Ok(())
}

fn report(report: verify::VerifyReport) -> Outcome {
    if report.checked == 0 {
        return Err(format!("{}: nothing checked", report.suite));
    }
    if !report.passed() {
        return Err(format!("{}: {}", report.suite, report.failures.join("; ")));
    }
    Ok(())
}

/// Coefficient vector from a signed sum of monomials like `-T^36-T^30-1`.
/// Written here rather than reusing the library parser.
fn signed_terms(text: &str) -> Vec<i64> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let exp = match term {
            "1" => 0,
            "T" => 1,
            t => t.strip_prefix("T^").expect("monomial").parse::<usize>().expect("exponent"),
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += sign;
    }
    coeffs
}

fn golden_stirling_table() -> Outcome {
    let start = Instant::now();
    let ctx = CarlitzContext::new(3).map_err(|e| e.to_string())?;
    let golden: [(u32, u32, &str); 9] = [
        (1, 0, "-1"),
        (1, 1, "1"),
        (2, 0, "T^6+T^4+T^2"),
        (2, 1, "-T^6-T^4-T^2-1"),
        (2, 2, "1"),
        (
            3,
            0,
            "-T^42-T^40-T^38-T^36+T^34+T^32+T^30+T^28+T^24+T^22+T^20+T^18-T^16-T^14-T^12-T^10",
        ),
        (3, 1, "T^42+T^40+T^38-T^36-T^34-T^32-T^16-T^14-T^12+T^10+T^8+T^6"),
        (3, 2, "-T^36-T^30-T^28-T^24-T^22-T^20-T^18-T^16-T^14-T^12-T^8-T^6-1"),
        (3, 3, "1"),
    ];
    for (n, i, text) in golden {
        let got = ctx.stf_a(n, i).map_err(|e| e.to_string())?;
        let residues: Vec<u32> = signed_terms(text).iter().map(|c| c.rem_euclid(3) as u32).collect();
        let have: Vec<u32> = got.coeffs().iter().map(|c| c.index()).collect();
        if have != residues {
            return Err(format!("stf({n},{i}) = {got}, expected {text}"));
        }
        if got != FqPoly::from_ints(ctx.field(), &signed_terms(text)) {
            return Err(format!("stf({n},{i}) differs from signed golden"));
        }
    }
    within(start, Duration::from_secs(5))
}

fn golden_assoc_stirling() -> Outcome {
    let start = Instant::now();
    let fact = |n: u64| (1..=n).fold(BigInt::one(), |acc, i| acc * i);
    let cases = [(7, 1, q(1, 7)), (10, 2, q(153, 1400)), (13, 3, q(1751, 50400)), (16, 4, q(190261, 29030400))];
    for (n, k, expected) in cases {
        let v = assoc_stirling(AssocKind::First, 3, n, k).map_err(|e| e.to_string())?;
        let scaled = v / BigRational::from_integer(fact(n));
        if scaled != expected {
            return Err(format!("stf({n},{k})_>=3 / {n}! = {scaled}, expected {expected}"));
        }
    }
    within(start, Duration::from_secs(1))
}

fn golden_c34() -> Outcome {
    let start = Instant::now();
    let expected = q(-1971, 5600);
    for method in Method::ALL {
        let seq = hyper_numbers(HyperFamily::Cauchy, 3, 4, method, &Limits::default()).map_err(|e| e.to_string())?;
        if seq.values[4] != expected {
            return Err(format!("{method}: c_(3,4) = {}", seq.values[4]));
        }
    }
    within(start, Duration::from_secs(1))
}

fn orthogonality() -> Outcome {
    let start = Instant::now();
    for (r, max_n) in [(2, 5), (3, 5), (5, 4)] {
        let ctx = CarlitzContext::new(r).map_err(|e| e.to_string())?;
        report(verify::orthogonality(&ctx, max_n).map_err(|e| e.to_string())?)
            .map_err(|e| format!("r={r}: {e}"))?;
    }
    within(start, Duration::from_secs(60))
}

fn closed_forms() -> Outcome {
    for r in [2, 3] {
        let ctx = CarlitzContext::new(r).map_err(|e| e.to_string())?;
        report(verify::closed_form(&ctx, 3).map_err(|e| e.to_string())?).map_err(|e| format!("r={r}: {e}"))?;
    }
    Ok(())
}

fn delta_identity() -> Outcome {
    for r in [2, 3] {
        let ctx = CarlitzContext::new(r).map_err(|e| e.to_string())?;
        report(verify::delta(&ctx, 6).map_err(|e| e.to_string())?).map_err(|e| format!("r={r}: {e}"))?;
    }
    Ok(())
}

fn ht_rules() -> Outcome {
    let rep = verify::ht_rules(100, 5, 20240601).map_err(|e| e.to_string())?;
    // 100 cases per ring, 5 values of n, 4 checks each
    if rep.checked < 2 * 100 * 5 * 4 {
        return Err(format!("only {} checks ran", rep.checked));
    }
    report(rep)
}

fn composition_identities() -> Outcome {
    report(verify::compositions(3, 6, 4).map_err(|e| e.to_string())?)
}

fn carlitz_coefficients() -> Outcome {
    for r in [2u32, 3] {
        let ctx = CarlitzContext::new(r).map_err(|e| e.to_string())?;
        let max_n = (r * r) as usize;
        report(verify::carlitz_coeffs(&ctx, max_n).map_err(|e| e.to_string())?).map_err(|e| format!("r={r}: {e}"))?;
    }
    Ok(())
}

/// `B_n` from `sum_{k<=n} C(n+1, k) B_k = 0`.
fn bernoulli_oracle(max_n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for n in 1..=max_n {
        let mut c = BigInt::one(); // C(n+1, 0)
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(c.clone()) * bk;
            c = c * (n + 1 - k) / (k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// `c_n = sum_k s(n, k) / (k + 1)` with signed Stirling numbers of the first kind.
fn cauchy_oracle(max_n: usize) -> Vec<BigRational> {
    let mut row = vec![BigInt::one()];
    let mut out = Vec::new();
    for n in 0..=max_n {
        let c = row
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (k, s)| acc + BigRational::new(s.clone(), BigInt::from(k + 1)));
        out.push(c);
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, s) in row.iter().enumerate() {
            next[k + 1] += s;
            next[k] -= s * BigInt::from(n);
        }
        row = next;
    }
    out
}

fn classical_reductions() -> Outcome {
    let b = bernoulli_oracle(12);
    let seq = hyper_numbers(HyperFamily::Bernoulli, 1, 12, Method::Series, &Limits::default())
        .map_err(|e| e.to_string())?;
    if seq.values != b {
        return Err(format!("B_(1,n) = {:?}", seq.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
    }
    let c = cauchy_oracle(10);
    for n in 0..=10u64 {
        let bn = bernoulli_from_stirling(n).map_err(|e| e.to_string())?;
        if bn != b[n as usize] {
            return Err(format!("Bernoulli reduction at n={n}: {bn}, expected {}", b[n as usize]));
        }
        let cn = cauchy_from_stirling(n).map_err(|e| e.to_string())?;
        if cn != c[n as usize] {
            return Err(format!("Cauchy reduction at n={n}: {cn}, expected {}", c[n as usize]));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("stf_A golden table, r=3, n<=3", golden_stirling_table),
        ("associated Stirling golden fractions, m=3", golden_assoc_stirling),
        ("c_(3,4) = -1971/5600 by all four methods", golden_c34),
        ("orthogonality, r in {2,3} n<=5 and r=5 n<=4", orthogonality),
        ("closed forms vs product expansion and linear system", closed_forms),
        ("delta identity, r in {2,3}, l<=6", delta_identity),
        ("HT product and quotient rules on random series", ht_rules),
        ("composition identities, N<=3 n<=6 k<=4", composition_identities),
        ("BC_n/CC_n series vs quotient rule, n<=r^2", carlitz_coefficients),
        ("classical Bernoulli and Cauchy reductions", classical_reductions),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
