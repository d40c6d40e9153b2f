use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Float};

use crate::error::{Error, Result};

/// Extra working digits carried on top of the requested precision.
pub const DEFAULT_GUARD: u32 = 15;

const MIN_DIGITS: u32 = 20;
const MIN_GUARD: u32 = 5;

/// Decimal working precision shared by every numeric operation.
///
/// Results are meant to be good to `digits` significant digits; internally
/// every operation runs with `digits + guard` digits. The context is a small
/// `Copy` value and is threaded explicitly through every call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::domain(format!(
                "precision of {digits} digits is below the minimum of {MIN_DIGITS}"
            )));
        }
        if guard < MIN_GUARD {
            return Err(Error::domain(format!(
                "guard of {guard} digits is below the minimum of {MIN_GUARD}"
            )));
        }
        Ok(PrecisionContext { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// `digits + guard`.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision of every `BigReal` created through this context.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * std::f64::consts::LOG2_10).ceil() as u32 + 4
    }

    /// Same guard, `factor` times the digits.
    pub fn scaled(&self, factor: u32) -> Self {
        PrecisionContext {
            digits: self.digits * factor,
            guard: self.guard,
        }
    }

    pub fn with_digits(&self, digits: u32) -> Result<Self> {
        Self::with_guard(digits, self.guard)
    }

    pub fn real<T>(&self, value: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }

    pub fn zero(&self) -> Float {
        Float::new(self.bits())
    }

    pub fn one(&self) -> Float {
        self.real(1)
    }

    /// `p / q`, rounded once.
    pub fn ratio(&self, p: i64, q: i64) -> Float {
        let mut x = self.real(p);
        x /= q;
        x
    }

    pub fn pi(&self) -> Float {
        self.real(Constant::Pi)
    }

    pub fn sqrt_of(&self, n: i64) -> Float {
        self.real(n).sqrt()
    }

    pub fn pow10(&self, exponent: i32) -> Float {
        self.real(10).pow(exponent)
    }

    /// `10^(-digits)`.
    pub fn eps(&self) -> Float {
        self.pow10(-(self.digits as i32))
    }

    /// `10^(-(digits - 10))`, the default equality tolerance.
    pub fn tolerance(&self) -> Float {
        self.pow10(-(self.digits as i32 - 10))
    }

    /// `10^(-(digits + guard))`, the stopping threshold of inner iterations.
    pub fn working_eps(&self) -> Float {
        self.pow10(-(self.working_digits() as i32))
    }

    /// `|a - b| <= max(1, |b|) * tolerance`.
    pub fn close(&self, a: &Float, b: &Float) -> bool {
        let diff = self.real(a - b).abs();
        let scale = self.real(b.abs_ref()).max(&self.one());
        diff <= scale * self.tolerance()
    }

    pub fn parse(&self, text: &str) -> Result<Float> {
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::Parse(format!("{text:?} is not a decimal number: {e}")))?;
        Ok(Float::with_val(self.bits(), parsed))
    }
}

/// Full-precision decimal form of `x`; `parse` at the same precision gives
/// back the identical value.
pub fn to_decimal(x: &Float) -> String {
    x.to_string_radix(10, None)
}

/// Decimal form rounded to `digits` significant digits, for display.
pub fn to_decimal_digits(x: &Float, digits: u32) -> String {
    x.to_string_radix(10, Some(digits as usize))
}
