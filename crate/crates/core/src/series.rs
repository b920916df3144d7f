//! Truncated power series in `h = 1/κ` with Gaussian-rational coefficients.
//!
//! Every value carries its truncation order `N`; arithmetic is carried out
//! modulo `h^{N+1}` and both operands must agree on `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{GaussRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HSeries {
    coeffs: Vec<GaussRational>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        HSeries { coeffs: vec![GaussRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(GaussRational::one(), order)
    }

    pub fn constant(c: GaussRational, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c · h^power`; vanishes when `power > order`.
    pub fn monomial(c: GaussRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Coefficients `c_0 … c_k`; entries beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(coeffs: Vec<GaussRational>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> &GaussRational {
        static ZERO: std::sync::OnceLock<GaussRational> = std::sync::OnceLock::new();
        self.coeffs.get(power).unwrap_or_else(|| ZERO.get_or_init(GaussRational::zero))
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussRational::is_zero)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn checked_add(&self, other: &HSeries) -> Result<HSeries> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &HSeries) -> Result<HSeries> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &HSeries) -> Result<HSeries> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Multiplicative inverse modulo `h^{N+1}`, by the recursion
    /// `b_0 = 1/a_0`, `b_k = -(1/a_0) Σ_{j=1..k} a_j b_{k-j}`.
    pub fn invert(&self) -> Result<HSeries> {
        let a0_inv = self.coeffs[0]
            .inv()
            .map_err(|_| Error::NotInvertible("series has zero constant term".into()))?;
        let n = self.order();
        let mut b: Vec<GaussRational> = Vec::with_capacity(n + 1);
        b.push(a0_inv.clone());
        for k in 1..=n {
            let mut acc = GaussRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !b[k - j].is_zero() {
                    acc += &(&self.coeffs[j] * &b[k - j]);
                }
            }
            b.push(-(&acc * &a0_inv));
        }
        Ok(HSeries { coeffs: b })
    }

    /// Re-truncate to a lower order, or pad with zeros to a higher one.
    pub fn with_order(&self, order: usize) -> HSeries {
        let mut s = HSeries::zero(order);
        for (k, c) in self.coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    /// Multiply by `h^k` (dropping overflow).
    pub fn shift(&self, k: usize) -> HSeries {
        let n = self.order();
        let mut s = HSeries::zero(n);
        for p in 0..=n {
            if p + k <= n {
                s.coeffs[p + k] = self.coeffs[p].clone();
            }
        }
        s
    }

    /// Divide by `h^k`. Fails unless the lowest `k` coefficients vanish; the
    /// result is exact modulo `h^{N+1-k}` and is returned at order `N - k`.
    pub fn div_h(&self, k: usize) -> Result<HSeries> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotInvertible(format!("series not divisible by h^{k}")));
        }
        Ok(HSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn scale(&self, c: &GaussRational) -> HSeries {
        if c.is_zero() {
            return HSeries::zero(self.order());
        }
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| if x.is_zero() { x.clone() } else { x * c })
                .collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|x| x.scale(q)).collect() }
    }

    /// Coefficient-wise complex conjugation (`h` is real).
    pub fn conj(&self) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(GaussRational::conj).collect() }
    }

    /// Substitute `h → λ h`.
    pub fn rescale_h(&self, lambda: &Rational) -> HSeries {
        let mut factor = Rational::from_integer(1.into());
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.scale(&factor);
            factor *= lambda;
        }
        out
    }

    pub(crate) fn add_unchecked(&self, other: &HSeries) -> HSeries {
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        out
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &HSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    /// `self += c · h^shift · other`, truncating.
    pub(crate) fn add_scaled_shifted(&mut self, other: &HSeries, c: &GaussRational, shift: usize) {
        let n = self.order();
        for (p, b) in other.coeffs.iter().enumerate() {
            if p + shift > n {
                break;
            }
            if !b.is_zero() {
                self.coeffs[p + shift] += &(b * c);
            }
        }
    }

    /// `self += a · b` (Cauchy product, truncated).
    pub(crate) fn add_product(&mut self, a: &HSeries, b: &HSeries) {
        let n = self.order();
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(n + 1 - i) {
                if !y.is_zero() {
                    self.coeffs[i + j] += &(x * y);
                }
            }
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &HSeries) -> HSeries {
        let mut out = HSeries::zero(self.order());
        out.add_product(self, other);
        out
    }

    fn check(&self, other: &HSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·h")?,
                _ => write!(f, "{c}·h^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl fmt::Debug for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on an order mismatch; the `checked_*` methods return it.
impl Add for &HSeries {
    type Output = HSeries;
    fn add(self, rhs: &HSeries) -> HSeries {
        self.checked_add(rhs).expect("HSeries order mismatch")
    }
}

impl Sub for &HSeries {
    type Output = HSeries;
    fn sub(self, rhs: &HSeries) -> HSeries {
        self.checked_sub(rhs).expect("HSeries order mismatch")
    }
}

impl Mul for &HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &HSeries) -> HSeries {
        self.checked_mul(rhs).expect("HSeries order mismatch")
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[i64], order: usize) -> HSeries {
        HSeries::from_coeffs(cs.iter().map(|&c| GaussRational::from_int(c)).collect(), order)
    }

    #[test]
    fn addition_cancels_and_truncates() {
        assert_eq!(&s(&[1, 1], 2) + &s(&[2, -1], 2), s(&[3], 2));
        let a = s(&[1, 2, 3], 2);
        assert_eq!(&HSeries::zero(2) + &a, a);
        let h2 = HSeries::monomial(GaussRational::one(), 2, 2);
        let h3 = HSeries::monomial(GaussRational::one(), 3, 2);
        assert_eq!(&h2 + &h3, h2);
    }

    #[test]
    fn multiplication() {
        assert_eq!(&s(&[1, 1], 2) * &s(&[1, -1], 2), s(&[1, 0, -1], 2));
        let i = HSeries::constant(GaussRational::i(), 2);
        assert_eq!(&i * &i, s(&[-1], 2));
        let h = s(&[0, 1], 1);
        assert_eq!(&h * &h, HSeries::zero(1));
    }

    #[test]
    fn inversion() {
        assert_eq!(s(&[1, 1], 2).invert().unwrap(), s(&[1, -1, 1], 2));
        assert_eq!(
            s(&[2], 2).invert().unwrap(),
            HSeries::constant(GaussRational::from_ratio(1, 2), 2)
        );
        assert!(matches!(s(&[0, 1], 2).invert(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert_eq!(s(&[1], 2).checked_add(&s(&[1], 3)), Err(Error::OrderMismatch(2, 3)));
        assert!(s(&[1], 2).checked_mul(&s(&[1], 1)).is_err());
    }

    #[test]
    fn division_by_h() {
        let a = s(&[0, 3, 4], 2);
        assert_eq!(a.div_h(1).unwrap(), s(&[3, 4], 1));
        assert!(s(&[1, 3], 2).div_h(1).is_err());
    }
}
