use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::{to_decimal, BigComplex, PrecisionContext};

/// `P(η, ζ) = ηⁿ + a_1(ζ) ηⁿ⁻¹ + … + a_n(ζ)` with `deg a_r ≤ 2r`.
///
/// `a[r - 1][j]` is the coefficient `c_{r,j}` of `ζʲ` in `a_r`; every list
/// has exactly `2r + 1` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCurve {
    n: usize,
    a: Vec<Vec<BigComplex>>,
}

impl SpectralCurve {
    pub fn new(n: usize, a: Vec<Vec<BigComplex>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("spectral curve needs charge n >= 1"));
        }
        if a.len() != n {
            return Err(Error::domain(format!(
                "charge {n} curve needs {n} coefficient polynomials, got {}",
                a.len()
            )));
        }
        for (idx, poly) in a.iter().enumerate() {
            let r = idx + 1;
            if poly.len() != 2 * r + 1 {
                return Err(Error::domain(format!(
                    "a_{r} must list {} coefficients, got {}",
                    2 * r + 1,
                    poly.len()
                )));
            }
        }
        Ok(SpectralCurve { n, a })
    }

    /// `ηⁿ`, every `a_r` zero.
    pub fn zero(n: usize, ctx: &PrecisionContext) -> Result<Self> {
        let a = (1..=n)
            .map(|r| vec![BigComplex::zero(ctx.bits()); 2 * r + 1])
            .collect();
        SpectralCurve::new(n, a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of `a_r`, `1 ≤ r ≤ n`.
    pub fn a(&self, r: usize) -> &[BigComplex] {
        &self.a[r - 1]
    }

    pub fn coeff(&self, r: usize, j: usize) -> &BigComplex {
        &self.a[r - 1][j]
    }

    pub fn set(&mut self, r: usize, j: usize, value: BigComplex) {
        self.a[r - 1][j] = value;
    }

    /// Iterates `(r, j, c_{r,j})` with `r` then `j` ascending.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigComplex)> {
        self.a
            .iter()
            .enumerate()
            .flat_map(|(idx, poly)| poly.iter().enumerate().map(move |(j, c)| (idx + 1, j, c)))
    }

    pub fn to_file(&self, ctx: &PrecisionContext) -> CurveFile {
        CurveFile {
            n: self.n,
            digits: ctx.digits(),
            coefficients: self
                .iter()
                .map(|(r, j, c)| CoefficientEntry {
                    r,
                    j,
                    re: to_decimal(&c.re),
                    im: to_decimal(&c.im),
                })
                .collect(),
        }
    }

    pub fn to_json(&self, ctx: &PrecisionContext) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_file(ctx))?)
    }

    /// Parses the form written by [`to_json`](Self::to_json). Entries may
    /// come in any order; missing entries are zero.
    pub fn from_json(text: &str, ctx: &PrecisionContext) -> Result<Self> {
        let file: CurveFile = serde_json::from_str(text)?;
        let mut curve = SpectralCurve::zero(file.n, ctx)?;
        for e in &file.coefficients {
            if e.r == 0 || e.r > file.n || e.j > 2 * e.r {
                return Err(Error::Parse(format!(
                    "coefficient index ({}, {}) out of range",
                    e.r, e.j
                )));
            }
            curve.set(
                e.r,
                e.j,
                BigComplex::new(ctx.parse(&e.re)?, ctx.parse(&e.im)?),
            );
        }
        Ok(curve)
    }
}

/// Serialized curve: `n`, the digits it was computed at, and every
/// coefficient as a decimal string pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveFile {
    pub n: usize,
    pub digits: u32,
    pub coefficients: Vec<CoefficientEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub r: usize,
    pub j: usize,
    pub re: String,
    pub im: String,
}
