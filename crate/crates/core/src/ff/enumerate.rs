use super::field::{FieldElement, FieldRef};
use super::poly::FqPoly;
use crate::error::{Error, Result};
use crate::limits::{checked_pow, Limits};

/// All `r^d` polynomials of degree `< d` (the space `A(d)`), ordered
/// lexicographically by `(c_0, ..., c_{d-1})`. The first element is `0`.
pub fn enumerate_a(field: &FieldRef, d: u32, limits: &Limits) -> Result<Vec<FqPoly>> {
    let r = field.order();
    let count = checked_pow(r as u64, d as u64).ok_or_else(|| Error::EnumerationCap {
        size: format!("{r}^{d}"),
        cap: limits.max_enumeration,
    })?;
    limits.check_enumeration(count)?;
    let d = d as usize;
    let mut out = Vec::with_capacity(count as usize);
    let mut digits = vec![0u32; d];
    loop {
        let coeffs = digits.iter().map(|&c| FieldElement(c)).collect();
        out.push(FqPoly::from_coeffs(field, coeffs));
        // odometer with c_{d-1} the fastest-moving digit
        let mut pos = d;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < r {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FiniteField;
    use std::collections::HashSet;

    #[test]
    fn small_spaces() {
        let f = FiniteField::prime(3).unwrap();
        let lim = Limits::default();
        assert_eq!(enumerate_a(&f, 0, &lim).unwrap(), vec![FqPoly::zero(&f)]);
        let a1: Vec<String> = enumerate_a(&f, 1, &lim).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(a1, ["0", "1", "2"]);
        let a2 = enumerate_a(&f, 2, &lim).unwrap();
        assert_eq!(a2.len(), 9);
        assert!(a2[0].is_zero());
        assert_eq!(a2[1].to_string(), "T");
        assert_eq!(a2[3].to_string(), "1");
        for s in ["T", "2*T", "T + 1", "T + 2", "2*T + 1", "2*T + 2"] {
            assert!(a2.contains(&FqPoly::parse(&f, s).unwrap()), "{s}");
        }
    }

    #[test]
    fn distinct_and_bounded() {
        let lim = Limits::default();
        for (r, d) in [(2u32, 4u32), (3, 3), (4, 2), (5, 2)] {
            let f = FiniteField::of_order(r).unwrap();
            let all = enumerate_a(&f, d, &lim).unwrap();
            assert_eq!(all.len() as u32, r.pow(d));
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|p| p.degree().map_or(true, |k| k < d as usize)));
        }
    }

    #[test]
    fn guard() {
        let f = FiniteField::prime(3).unwrap();
        let lim = Limits { max_enumeration: 100, ..Limits::default() };
        assert!(matches!(enumerate_a(&f, 5, &lim), Err(Error::EnumerationCap { .. })));
        assert!(enumerate_a(&f, 4, &lim).is_ok());
    }
}
