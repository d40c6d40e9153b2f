use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{BigComplex, PrecisionContext};
use crate::specfun::{ellip_k, weier_half_period, EllipticModulus, WeierstrassInvariants};

use super::constants::{a3, a4, a7};
use super::spectral::SpectralCurve;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, x: Float) -> Float {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// Row of the table of known curves together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Table1Params {
    /// `η ∏_{l=1}^m (η² + l²π²ζ²)`.
    Row1 { m: u32 },
    /// `∏_{l=0}^m (η² + (l + 1/2)²π²ζ²)`.
    Row2 { m: u32 },
    /// `η² + (K(k)²/4)(ζ⁴ + 2(k² - k'²)ζ² + 1)`.
    Row3 { k: Float },
    /// `η³ ± a₃(ζ⁶ + 5√2ζ³ - 1)`.
    Row4 { sign: Sign },
    /// `η⁴ + a₄(ζ⁸ + 14ζ⁴ + 1)`.
    Row5,
    /// `η(η⁴ - 4a₄(ζ⁸ + 14ζ⁴ + 1))`.
    Row6,
    /// `η(η⁶ ± a₇ζ(ζ¹⁰ + 11ζ⁵ - 1))`.
    Row7 { sign: Sign },
    /// `η⁴ + 36iaκ³ηζ(ζ⁴ - 1) + 3κ⁴(ζ⁸ + 14ζ⁴ + 1)`, κ for `g2 = 4, g3 = -12a²`.
    Row8 { a: Float },
    /// `η³ - 6(a² + 4ε)^{1/3}κ²ηζ² + 2iκ³a(ζ⁵ - ζ)`, κ for
    /// `g2 = 3(a² + 4ε)^{2/3}, g3 = -4ε`.
    Row9 { a: Float, epsilon: i32 },
    /// `η³ + αηζ² + βζ⁶ + γζ³ - β`.
    Row10 {
        alpha: Float,
        beta: Float,
        gamma: Float,
    },
}

impl Table1Params {
    pub fn row(&self) -> u32 {
        match self {
            Table1Params::Row1 { .. } => 1,
            Table1Params::Row2 { .. } => 2,
            Table1Params::Row3 { .. } => 3,
            Table1Params::Row4 { .. } => 4,
            Table1Params::Row5 => 5,
            Table1Params::Row6 => 6,
            Table1Params::Row7 { .. } => 7,
            Table1Params::Row8 { .. } => 8,
            Table1Params::Row9 { .. } => 9,
            Table1Params::Row10 { .. } => 10,
        }
    }
}

fn real(x: Float) -> BigComplex {
    BigComplex::from_real(x)
}

fn imag(x: Float, ctx: &PrecisionContext) -> BigComplex {
    BigComplex::new(ctx.zero(), x)
}

/// Builds the curve of one table row.
pub fn build_table1(params: &Table1Params, ctx: &PrecisionContext) -> Result<SpectralCurve> {
    match params {
        Table1Params::Row1 { m } => {
            if *m < 1 {
                return Err(Error::domain("row 1 needs m >= 1"));
            }
            let factors: Vec<Float> = (1..=*m).map(|l| ctx.pi().square() * (l * l)).collect();
            rotational(2 * *m as usize + 1, &factors, ctx)
        }
        Table1Params::Row2 { m } => {
            if *m < 1 {
                return Err(Error::domain("row 2 needs m >= 1"));
            }
            let factors: Vec<Float> = (0..=*m)
                .map(|l| {
                    ctx.pi().square() * ctx.real(ctx.ratio(2 * i64::from(l) + 1, 2).square_ref())
                })
                .collect();
            rotational(2 * (*m as usize + 1), &factors, ctx)
        }
        Table1Params::Row3 { k } => {
            if *k <= 0 || *k >= 1 {
                return Err(Error::domain(format!("row 3 needs k in (0, 1), got {k}")));
            }
            let m = EllipticModulus::new(k, ctx)?;
            let kk = ellip_k(&m, ctx)?;
            let amp = ctx.real(kk.square_ref()) / 4u32;
            let k2 = ctx.real(m.k().square_ref());
            let kp2 = ctx.real(m.kprime().square_ref());
            let mut curve = SpectralCurve::zero(2, ctx)?;
            curve.set(2, 0, real(amp.clone()));
            curve.set(2, 2, real(ctx.real(&amp * (k2 - kp2)) * 2u32));
            curve.set(2, 4, real(amp));
            Ok(curve)
        }
        Table1Params::Row4 { sign } => {
            let c = sign.apply(a3(ctx)?);
            let mut curve = SpectralCurve::zero(3, ctx)?;
            curve.set(3, 0, real(-c.clone()));
            curve.set(3, 3, real(ctx.real(&c * ctx.sqrt_of(2)) * 5u32));
            curve.set(3, 6, real(c));
            Ok(curve)
        }
        Table1Params::Row5 => octahedral(4, 4, a4(ctx)?, ctx),
        Table1Params::Row6 => octahedral(5, 4, -(a4(ctx)? * 4u32), ctx),
        Table1Params::Row7 { sign } => {
            let c = sign.apply(a7(ctx)?);
            let mut curve = SpectralCurve::zero(7, ctx)?;
            curve.set(6, 1, real(-c.clone()));
            curve.set(6, 6, real(ctx.real(&c * 11u32)));
            curve.set(6, 11, real(c));
            Ok(curve)
        }
        Table1Params::Row8 { a } => {
            let limit = ctx.sqrt_of(2) / ctx.real(3).pow(ctx.ratio(5, 4));
            if ctx.real(a.abs_ref()) >= limit {
                return Err(Error::domain(format!(
                    "row 8 needs |a| < √2/3^(5/4), got {a}"
                )));
            }
            let a = ctx.real(a);
            let g3 = -(ctx.real(a.square_ref()) * 12u32);
            let kappa = weier_half_period(&WeierstrassInvariants::new(ctx.real(4), g3, ctx)?, ctx)?;
            let k3 = ctx.real((&kappa).pow(3u32));
            let k4 = ctx.real((&kappa).pow(4u32));
            let mut curve = SpectralCurve::zero(4, ctx)?;
            let c3 = ctx.real(&a * &k3) * 36u32;
            curve.set(3, 5, imag(c3.clone(), ctx));
            curve.set(3, 1, imag(-c3, ctx));
            let c4 = k4 * 3u32;
            curve.set(4, 0, real(c4.clone()));
            curve.set(4, 4, real(ctx.real(&c4 * 14u32)));
            curve.set(4, 8, real(c4));
            Ok(curve)
        }
        Table1Params::Row9 { a, epsilon } => {
            if *epsilon != 1 && *epsilon != -1 {
                return Err(Error::domain(format!(
                    "row 9 needs epsilon = ±1, got {epsilon}"
                )));
            }
            let a = ctx.real(a);
            let radicand = ctx.real(a.square_ref()) + ctx.real(4 * *epsilon);
            if radicand <= 0 {
                return Err(Error::domain(format!(
                    "row 9 needs a² + 4ε > 0, got {}",
                    radicand.to_f64()
                )));
            }
            let cbrt = ctx.real(radicand.cbrt_ref());
            let g2 = ctx.real(cbrt.square_ref()) * 3u32;
            let g3 = ctx.real(-4 * *epsilon);
            let kappa = weier_half_period(&WeierstrassInvariants::new(g2, g3, ctx)?, ctx)?;
            let k2 = ctx.real(kappa.square_ref());
            let k3 = ctx.real(&k2 * &kappa);
            let mut curve = SpectralCurve::zero(3, ctx)?;
            curve.set(2, 2, real(-(cbrt * k2 * 6u32)));
            let c3 = ctx.real(&a * &k3) * 2u32;
            curve.set(3, 5, imag(c3.clone(), ctx));
            curve.set(3, 1, imag(-c3, ctx));
            Ok(curve)
        }
        Table1Params::Row10 { alpha, beta, gamma } => {
            let mut curve = SpectralCurve::zero(3, ctx)?;
            curve.set(2, 2, real(ctx.real(alpha)));
            curve.set(3, 0, real(-ctx.real(beta)));
            curve.set(3, 3, real(ctx.real(gamma)));
            curve.set(3, 6, real(ctx.real(beta)));
            Ok(curve)
        }
    }
}

/// Expands `η^{n - 2f} ∏_l (η² + c_l ζ²)`: `a_{2k} = e_k(c) ζ^{2k}`.
fn rotational(n: usize, factors: &[Float], ctx: &PrecisionContext) -> Result<SpectralCurve> {
    let mut e = vec![ctx.one()];
    for c in factors {
        let mut next = e.clone();
        next.push(ctx.zero());
        for k in 1..next.len() {
            next[k] += ctx.real(&e[k - 1] * c);
        }
        e = next;
    }
    let mut curve = SpectralCurve::zero(n, ctx)?;
    for (k, ek) in e.into_iter().enumerate().skip(1) {
        curve.set(2 * k, 2 * k, real(ek));
    }
    Ok(curve)
}

/// Sets `a_r = c (ζ⁸ + 14ζ⁴ + 1)` on an otherwise empty charge-`n` curve.
fn octahedral(n: usize, r: usize, c: Float, ctx: &PrecisionContext) -> Result<SpectralCurve> {
    let mut curve = SpectralCurve::zero(n, ctx)?;
    curve.set(r, 0, real(c.clone()));
    curve.set(r, 4, real(ctx.real(&c * 14u32)));
    curve.set(r, 8, real(c));
    Ok(curve)
}
