//! Exact complex numbers with rational real and imaginary parts.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{GaussInt, Ring};
use crate::error::{Error, Result};

/// An element of Q(i). Both components are kept in lowest terms with a
/// positive denominator, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        GaussianRational::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
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
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse via the conjugate: (a+bi)^-1 = (a-bi)/(a^2+b^2).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact quotient `self / rhs`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    /// Least common multiple of the two denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// `self * scale` as a Gaussian integer; `scale` must clear both denominators.
    pub fn to_gauss_int(&self, scale: &BigInt) -> GaussInt {
        let re = &self.re * BigRational::from_integer(scale.clone());
        let im = &self.im * BigRational::from_integer(scale.clone());
        debug_assert!(re.is_integer() && im.is_integer());
        GaussInt::new(re.to_integer(), im.to_integer())
    }

    pub fn from_gauss_int(g: &GaussInt) -> Self {
        GaussianRational::new(BigRational::from_integer(g.re.clone()), BigRational::from_integer(g.im.clone()))
    }
}

/// Division returning an explicit error on a zero divisor.
pub fn gq_div(p: &GaussianRational, q: &GaussianRational) -> Result<GaussianRational> {
    p.checked_div(q)
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
    fn add_to(&mut self, rhs: &Self) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
    fn sub_from(&mut self, rhs: &Self) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on a zero divisor; use [`gq_div`] for a fallible variant.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::from_ints(v, 0)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(v: BigInt) -> Self {
        GaussianRational::real(BigRational::from_integer(v))
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Text form `re`, `re+imi` or `re-imi`, each component `p` or `p/q`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational> {
    let err =
        |reason: &str| Error::Parse { what: "Gaussian rational", input: whole.to_string(), reason: reason.to_string() };
    if s.is_empty() {
        return Err(err("empty component"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    if den.starts_with(['+', '-']) {
        return Err(err("signed denominator"));
    }
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if Zero::is_zero(&den) {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts the canonical text form plus the shorthands `i`, `-i`, `2i`, `1+i`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::real(parse_rational(s, s)?));
        };
        // split at the last sign that is not leading and not part of a denominator
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && bytes[k - 1] != b'/');
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other, s)?,
        };
        Ok(GaussianRational::new(parse_rational(re_str, s)?, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let one = GaussianRational::one();
        assert_eq!(gq_div(&one, &q("1+1i")).unwrap(), q("1/2-1/2i"));
    }

    #[test]
    fn half_one_plus_i_times_inverse() {
        let h = q("1/2+1/2i");
        assert!((&h * &h.inv().unwrap()).is_one());
    }

    #[test]
    fn real_over_imaginary() {
        // (3/2) / (2i) = -(3/4) i
        let r = gq_div(&q("3/2"), &q("0+2i")).unwrap();
        assert_eq!(r, q("0-3/4i"));
        assert_eq!(r.to_string(), "0-3/4i");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(gq_div(&GaussianRational::one(), &GaussianRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_format() {
        for s in ["0", "-7", "1/2+1/2i", "0-3/4i", "5/3-1i", "-2/9+4i"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("i"), GaussianRational::i());
        assert_eq!(q("-i"), -GaussianRational::i());
        assert_eq!(q("1+i"), GaussianRational::from_ints(1, 1));
        assert_eq!(q("2/4"), GaussianRational::from_fraction(1, 2));
        assert_eq!(q("-1/2-3/4i").re(), &BigRational::new((-1).into(), 2.into()));
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
        assert!("1.5".parse::<GaussianRational>().is_err());
    }
}
