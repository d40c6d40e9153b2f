//! The closed-form constants of the Platonic curves, each in two forms: one
//! through `Γ` and one through Euler's Beta integral evaluated by
//! quadrature. The two share no code below the arithmetic kernel.

use rug::ops::Pow;
use rug::Float;

use crate::error::Result;
use crate::numkernel::{PrecisionContext, QRational};
use crate::specfun::{beta_integral, gamma_q};

fn q(p: i64, d: i64) -> QRational {
    QRational::new(p, d).expect("nonzero denominator")
}

fn pi_pow(ctx: &PrecisionContext, num: i32, den: u32) -> Float {
    let e = ctx.ratio(i64::from(num), i64::from(den));
    ctx.pi().pow(e)
}

/// `a₃ = Γ(1/6)³ Γ(1/3)³ / (48 √3 π^{3/2})`.
pub fn a3(ctx: &PrecisionContext) -> Result<Float> {
    let g = gamma_q(&q(1, 6), ctx)? * gamma_q(&q(1, 3), ctx)?;
    Ok(g.pow(3u32) / (ctx.sqrt_of(3) * 48u32 * pi_pow(ctx, 3, 2)))
}

/// `a₃ = B(1/6, 1/3)³ / (48 √3)`.
pub fn a3_beta_form(ctx: &PrecisionContext) -> Result<Float> {
    let b = beta_integral(&q(1, 6), &q(1, 3), ctx)?;
    Ok(b.pow(3u32) / (ctx.sqrt_of(3) * 48u32))
}

/// `a₄ = 3 Γ(1/4)⁸ / (1024 π²)`.
pub fn a4(ctx: &PrecisionContext) -> Result<Float> {
    let g = gamma_q(&q(1, 4), ctx)?;
    Ok(g.pow(8u32) * 3u32 / (ctx.pi().square() * 1024u32))
}

/// `a₄ = (3/256) B(1/4, 1/2)⁴`.
pub fn a4_beta_form(ctx: &PrecisionContext) -> Result<Float> {
    let b = beta_integral(&q(1, 4), &q(1, 2), ctx)?;
    Ok(b.pow(4u32) * 3u32 / 256u32)
}

/// `a₇ = Γ(1/6)⁶ Γ(1/3)⁶ / (64 π³)`.
pub fn a7(ctx: &PrecisionContext) -> Result<Float> {
    let g = gamma_q(&q(1, 6), ctx)? * gamma_q(&q(1, 3), ctx)?;
    Ok(g.pow(6u32) / (ctx.pi().pow(3u32) * 64u32))
}

/// `a₇ = B(1/6, 1/3)⁶ / 64`.
pub fn a7_beta_form(ctx: &PrecisionContext) -> Result<Float> {
    let b = beta_integral(&q(1, 6), &q(1, 3), ctx)?;
    Ok(b.pow(6u32) / 64u32)
}
