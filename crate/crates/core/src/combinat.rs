//! Integer helpers: binomials, Lucas' theorem, cached factorials.

use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)` as an arbitrary-precision integer (0 when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    // n, k < p here, so the denominator is invertible mod p
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num = num * ((n - i) as u128) % p as u128;
        den = den * ((i + 1) as u128) % p as u128;
    }
    let mut inv = 1u128;
    let (mut base, mut e) = (den, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    (num * inv % p as u128) as u64
}

/// `C(m, n) mod p` for a prime `p`, as the product of the base-`p` digit binomials.
pub fn lucas_binomial(mut m: u64, mut n: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while n > 0 || m > 0 {
        let (md, nd) = (m % p, n % p);
        if nd > md {
            return 0;
        }
        acc = (acc as u128 * small_binomial_mod(md, nd, p) as u128 % p as u128) as u64;
        m /= p;
        n /= p;
    }
    acc
}

static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// `n!`, memoised across calls.
pub fn factorial(n: u64) -> BigUint {
    let n = n as usize;
    {
        let table = FACTORIALS.read().expect("factorial cache poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().expect("factorial cache poisoned");
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let next = table.last().expect("non-empty") * table.len();
        table.push(next);
    }
    table[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 6), BigUint::from(0u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn lucas_agrees_with_reduction() {
        for p in [2u64, 3, 5, 7] {
            for m in 0..=200u64 {
                for n in 0..=m {
                    let direct = (binomial(m, n) % p).to_u64().unwrap();
                    assert_eq!(lucas_binomial(m, n, p), direct, "C({m},{n}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
    }
}
