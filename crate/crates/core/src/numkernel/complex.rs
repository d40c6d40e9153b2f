use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::Float;

/// A complex number stored as a pair of `BigReal`s of equal precision.
#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl BigComplex {
    pub fn new(re: Float, im: Float) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex::new(Float::new(prec), Float::new(prec))
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        BigComplex { re, im }
    }

    pub fn i(prec: u32) -> Self {
        BigComplex::new(Float::new(prec), Float::with_val(prec, 1))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, factor: &Float) -> Self {
        let p = self.prec();
        BigComplex::new(
            Float::with_val(p, &self.re * factor),
            Float::with_val(p, &self.im * factor),
        )
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        BigComplex::new(-self.im.clone(), self.re.clone())
    }

    /// Principal square root (branch cut along the negative real axis).
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return BigComplex::zero(p);
        }
        let r = self.abs();
        if self.re >= 0 {
            let u = Float::with_val(p, &r + &self.re) / 2u32;
            let u = u.sqrt();
            let v = Float::with_val(p, &self.im / &u) / 2u32;
            BigComplex::new(u, v)
        } else {
            let v = Float::with_val(p, &r - &self.re) / 2u32;
            let mut v = v.sqrt();
            if self.im.is_sign_negative() {
                v = -v;
            }
            let u = Float::with_val(p, &self.im / &v) / 2u32;
            BigComplex::new(u, v)
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex::new(
            Float::with_val(self.prec(), &self.re / &n),
            -Float::with_val(self.prec(), &self.im / &n),
        )
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        write!(
            f,
            "({} {} {}i)",
            self.re.to_string_radix(10, Some(digits)),
            if self.im.is_sign_negative() { '-' } else { '+' },
            Float::with_val(self.im.prec(), self.im.abs_ref()).to_string_radix(10, Some(digits))
        )
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }
}

impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        BigComplex::new(re, im)
    }
}

impl<'a> Div<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a BigComplex) -> BigComplex {
        self * &rhs.recip()
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &'a BigComplex) -> BigComplex {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::new(Float::with_val(128, re), Float::with_val(128, im))
    }

    #[test]
    fn sqrt_is_principal() {
        let s = c(-4.0, 0.0).sqrt();
        assert_eq!(s.re, 0);
        assert_eq!(s.im, 2);
        let s = c(-4.0, -0.0).sqrt();
        assert_eq!(s.im, -2);
        let s = c(3.0, 4.0).sqrt();
        assert_eq!(s.re, 2);
        assert_eq!(s.im, 1);
        let s = c(-3.0, -4.0).sqrt();
        assert_eq!(s.re, 1);
        assert_eq!(s.im, -2);
    }

    #[test]
    fn field_operations() {
        let a = c(1.0, 2.0);
        let b = c(3.0, -1.0);
        let prod = &a * &b;
        assert_eq!(prod, c(5.0, 5.0));
        let back = &prod / &b;
        assert!((back.re - 1.0f64).abs() < 1e-30);
        assert!((back.im - 2.0f64).abs() < 1e-30);
        assert_eq!(&a - &a, c(0.0, 0.0));
        assert_eq!(a.conj(), c(1.0, -2.0));
        assert_eq!(c(3.0, 4.0).abs(), 5);
    }
}
