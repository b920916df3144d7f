//! Exact Gaussian rationals `a + b i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Build a rational from a small numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integral rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Render a rational as `"p/q"` (or `"p"` when integral).
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Generalized binomial coefficient `binom(1/2, n)`.
pub fn binom_half(n: usize) -> Rational {
    let half = rat(1, 2);
    let mut acc = Rational::one();
    for k in 0..n {
        acc = acc * (&half - int(k as i64)) / int(k as i64 + 1);
    }
    acc
}

/// A Gaussian rational. Both parts are kept in canonical (reduced) form by
/// `num-rational`, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(rat(num, den))
    }

    pub fn zero() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero Gaussian rational".into()));
        }
        let n = self.norm_sq();
        Ok(GaussRational { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Multiply by a real rational.
    pub fn scale(&self, q: &Rational) -> Self {
        GaussRational { re: &self.re * q, im: &self.im * q }
    }

    /// Multiply by `i`.
    pub fn times_i(&self) -> Self {
        GaussRational { re: -&self.im, im: self.re.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of the real part, when the value is real.
    pub fn real_sign(&self) -> Option<i8> {
        if !self.is_real() {
            return None;
        }
        Some(if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        })
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::real(re)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        if !rhs.re.is_zero() {
            self.re += &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        if !rhs.re.is_zero() {
            self.re -= &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        // Most coefficients are purely real or purely imaginary.
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussRational::real(&self.re * &rhs.re),
            (true, false) => GaussRational { re: &self.re * &rhs.re, im: &self.re * &rhs.im },
            (false, true) => GaussRational { re: &self.re * &rhs.re, im: &self.im * &rhs.re },
            (false, false) => GaussRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        &self * &rhs
    }
}

impl Div for &GaussRational {
    type Output = GaussRational;
    /// Panics on division by zero; use [`GaussRational::inv`] for a checked inverse.
    fn div(self, rhs: &GaussRational) -> GaussRational {
        self * &rhs.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", format_rational(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                let im = self.im.abs();
                if im.is_one() {
                    write!(f, "({} {} i)", format_rational(&self.re), sign)
                } else {
                    write!(f, "({} {} {}i)", format_rational(&self.re), sign, format_rational(&im))
                }
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, GaussRational::from_int(-1));
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = GaussRational::from_ratio(2, 4);
        let b = GaussRational::from_ratio(-3, -6);
        assert_eq!(a, b);
        assert_eq!(a.re.denom(), &BigInt::from(2));
    }

    #[test]
    fn inverse() {
        let z = GaussRational::new(rat(1, 1), rat(2, 1));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, GaussRational::one());
        assert!(GaussRational::zero().inv().is_err());
    }

    #[test]
    fn binomial_half() {
        assert_eq!(binom_half(0), int(1));
        assert_eq!(binom_half(1), rat(1, 2));
        assert_eq!(binom_half(2), rat(-1, 8));
        assert_eq!(binom_half(3), rat(1, 16));
        assert_eq!(binom_half(4), rat(-5, 128));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
    }
}
