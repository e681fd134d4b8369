use super::ring::CoeffRing;
use crate::error::{Error, Result};

/// A power series `a_0 + a_1 z + ... + a_{N-1} z^{N-1} + O(z^N)`.
///
/// The order `N` is the number of stored coefficients. Binary operations
/// return a series of the smaller of the two orders.
#[derive(Clone, Debug)]
pub struct TruncSeries<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoeffRing> PartialEq for TruncSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: CoeffRing> TruncSeries<R> {
    /// A series of order `coeffs.len()`.
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        TruncSeries { ring, coeffs }
    }

    pub fn zero(ring: R, order: usize) -> Self {
        let coeffs = vec![ring.zero(); order];
        TruncSeries { ring, coeffs }
    }

    pub fn one(ring: R, order: usize) -> Self {
        Self::monomial(ring.clone(), ring.one(), 0, order)
    }

    /// `c z^k + O(z^order)`.
    pub fn monomial(ring: R, c: R::Elem, k: usize, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// Coefficient of `z^i`; panics beyond the truncation order.
    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    /// `H^(i)(f)` evaluated at `z = 0`, which is the coefficient `a_i`.
    pub fn coeff_at_zero(&self, i: usize) -> Result<R::Elem> {
        self.coeffs.get(i).cloned().ok_or(Error::BeyondTruncation {
            index: i,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries::new(self.ring.clone(), self.coeffs[..order].to_vec())
    }

    /// Equality of the first `min(order)` coefficients.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = &self.ring;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| r.add(a, b)).collect();
        TruncSeries::new(r.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let r = &self.ring;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| r.sub(a, b)).collect();
        TruncSeries::new(r.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let r = &self.ring;
        TruncSeries::new(r.clone(), self.coeffs.iter().map(|a| r.neg(a)).collect())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let r = &self.ring;
        TruncSeries::new(r.clone(), self.coeffs.iter().map(|a| r.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let r = &self.ring;
        let n = self.order().min(other.order());
        let mut out = vec![r.zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !r.is_zero(b) {
                    out[i + j] = r.add(&out[i + j], &r.mul(a, b));
                }
            }
        }
        TruncSeries::new(r.clone(), out)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::one(self.ring.clone(), self.order());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `1/f`, by `b_0 = a_0^{-1}`, `b_m = -a_0^{-1} sum_{j=1}^m a_j b_{m-j}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let r = &self.ring;
        let Some(a0) = self.coeffs.first() else {
            return Ok(self.clone());
        };
        let a0_inv = r.inv(a0).ok_or(Error::NonUnit)?;
        let neg_inv = r.neg(&a0_inv);
        let mut b: Vec<R::Elem> = Vec::with_capacity(self.order());
        b.push(a0_inv);
        for m in 1..self.order() {
            let mut acc = r.zero();
            for j in 1..=m {
                let a = &self.coeffs[j];
                if !r.is_zero(a) {
                    acc = r.add(&acc, &r.mul(a, &b[m - j]));
                }
            }
            b.push(r.mul(&neg_inv, &acc));
        }
        Ok(TruncSeries::new(r.clone(), b))
    }

    /// `f / z^k`; the first `k` coefficients must vanish. Order drops by `k`.
    pub fn div_z_power(&self, k: usize) -> Result<Self> {
        let r = &self.ring;
        if k > self.order() {
            return Err(Error::BeyondTruncation { index: k, order: self.order() });
        }
        if self.coeffs[..k].iter().any(|a| !r.is_zero(a)) {
            return Err(Error::InvalidArgument(format!("series is not divisible by z^{k}")));
        }
        Ok(TruncSeries::new(r.clone(), self.coeffs[k..].to_vec()))
    }
}
