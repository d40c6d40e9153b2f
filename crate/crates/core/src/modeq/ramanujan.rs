use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;

/// One of the two Ramanujan series
/// `4/π = Σ (1 + 6m) ((1/2)_m)³ / ((m!)³ 4^m)` and
/// `27/(4π) = Σ (2 + 15m) (1/2)_m (1/3)_m (2/3)_m / ((m!)³ (27/2)^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamanujanSeries {
    FourOverPi,
    TwentySevenOverFourPi,
}

impl RamanujanSeries {
    pub fn from_id(id: u32) -> Result<Self> {
        match id {
            1 => Ok(RamanujanSeries::FourOverPi),
            2 => Ok(RamanujanSeries::TwentySevenOverFourPi),
            _ => Err(Error::domain(format!(
                "Ramanujan series id must be 1 or 2, got {id}"
            ))),
        }
    }

    /// Limit of the ratio of consecutive terms.
    pub fn rate(self) -> f64 {
        match self {
            RamanujanSeries::FourOverPi => 0.25,
            RamanujanSeries::TwentySevenOverFourPi => 2.0 / 27.0,
        }
    }

    /// The value the series converges to.
    pub fn limit(self, ctx: &PrecisionContext) -> Float {
        match self {
            RamanujanSeries::FourOverPi => ctx.real(4) / ctx.pi(),
            RamanujanSeries::TwentySevenOverFourPi => ctx.real(27) / (ctx.pi() * 4u32),
        }
    }

    /// Last index `N` whose partial sum is within `10^-digits` of the limit.
    ///
    /// The Pochhammer quotients are at most 1, so with weight `w(m) = c m + d`
    /// the tail after `N` is below
    /// `Σ_{m>N} w(m) ρ^m = ρ^{N+1} (w(N+1)/(1-ρ) + c ρ/(1-ρ)²)`.
    pub fn terms_for_digits(self, digits: u32) -> u32 {
        let rho = self.rate();
        let (slope, offset) = match self {
            RamanujanSeries::FourOverPi => (6.0, 1.0),
            RamanujanSeries::TwentySevenOverFourPi => (15.0, 2.0),
        };
        let target = -f64::from(digits) * std::f64::consts::LN_10;
        let mut n = 0u32;
        loop {
            let nf = f64::from(n);
            let weight = slope * (nf + 1.0) + offset;
            let tail = weight / (1.0 - rho) + slope * rho / (1.0 - rho).powi(2);
            let bound = tail.ln() + (nf + 1.0) * rho.ln();
            if bound < target {
                return n;
            }
            n += 1;
        }
    }
}

/// Partial sum over `m = 0..=n`.
pub fn ramanujan_sum(series: RamanujanSeries, n: u32, ctx: &PrecisionContext) -> Float {
    let mut coeff = ctx.one();
    let mut sum = ctx.zero();
    for m in 0..=n {
        let weight = match series {
            RamanujanSeries::FourOverPi => 1 + 6 * u64::from(m),
            RamanujanSeries::TwentySevenOverFourPi => 2 + 15 * u64::from(m),
        };
        sum += ctx.real(&coeff * weight);
        let mf = ctx.real(m);
        let step = match series {
            RamanujanSeries::FourOverPi => {
                let h = ctx.real(&mf + 0.5) / (m + 1);
                ctx.real(h.square_ref()) * h / 4u32
            }
            RamanujanSeries::TwentySevenOverFourPi => {
                let third = ctx.ratio(1, 3);
                let a = ctx.real(&mf + 0.5);
                let b = ctx.real(&mf + &third);
                let c = ctx.real(&mf + 1u32) - &third;
                let den = u64::from(m + 1).pow(3) * 27;
                a * b * c * 2u32 / den
            }
        };
        coeff *= step;
    }
    sum
}
