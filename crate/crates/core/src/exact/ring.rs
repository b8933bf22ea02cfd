use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A commutative integral domain with exact division.
///
/// Fraction-free elimination only ever divides by a value that is known to
/// divide the numerator, so `div_exact` returning `None` signals a broken
/// invariant rather than a recoverable condition.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn add_to(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    fn sub_from(&mut self, rhs: &Self) {
        *self = self.minus(rhs);
    }

    /// `a*b - c*d`; the elimination inner loop.
    fn mul_sub_mul(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a.times(b).minus(&c.times(d))
    }

    /// Size measure used for pivot selection (number of terms for polynomials).
    fn support(&self) -> usize {
        usize::from(!self.is_zero())
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn add_to(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_from(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

/// Element of the Gaussian integers Z[i].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl Ring for GaussInt {
    fn zero() -> Self {
        GaussInt::default()
    }
    fn one() -> Self {
        GaussInt::new(One::one(), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn plus(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn minus(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_real() && rhs.is_real() {
            return GaussInt::new(&self.re * &rhs.re, Zero::zero());
        }
        GaussInt::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
    fn negate(&self) -> Self {
        GaussInt::new(-&self.re, -&self.im)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_real() {
            let re = Ring::div_exact(&self.re, &rhs.re)?;
            let im = Ring::div_exact(&self.im, &rhs.re)?;
            return Some(GaussInt::new(re, im));
        }
        let n = rhs.norm();
        let conj = GaussInt::new(rhs.re.clone(), -&rhs.im);
        let num = self.times(&conj);
        let re = Ring::div_exact(&num.re, &n)?;
        let im = Ring::div_exact(&num.im, &n)?;
        Some(GaussInt::new(re, im))
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

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::new(v.into(), Zero::zero())
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re.into(), im.into())
    }

    #[test]
    fn gaussian_integer_exact_division() {
        let a = gi(3, 4);
        let b = gi(1, 2);
        let p = a.times(&b);
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&a), Some(b));
        // 1 is not divisible by 1+i in Z[i]
        assert_eq!(gi(1, 0).div_exact(&gi(1, 1)), None);
        assert_eq!(gi(2, 0).div_exact(&gi(1, 1)), Some(gi(1, -1)));
    }

    #[test]
    fn bigint_division_rejects_remainders() {
        let seven = BigInt::from(7);
        assert_eq!(Ring::div_exact(&BigInt::from(21), &seven), Some(BigInt::from(3)));
        assert_eq!(Ring::div_exact(&BigInt::from(22), &seven), None);
        assert_eq!(Ring::div_exact(&seven, &BigInt::from(0)), None);
    }
}
