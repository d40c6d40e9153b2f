//! Periods of `dζ / (2η)` on `η² + A(ζ⁴ + 2(k² - k'²)ζ² + 1) = 0`.
//!
//! The quartic has roots `R1 = √(-c + 2ikk')`, `R2 = R̄1`, `R3 = -R1`,
//! `R4 = -R2` with `c = k² - k'²`, all on the unit circle. A cycle encircling
//! a pair of roots has period twice the integral along the segment joining
//! them. With `z = r_a + s(r_b - r_a)` the integrand becomes
//! `ds / (2√A √(s(1-s)) ∏ √(z - r))` over the two remaining roots, and each of
//! those square roots is taken relative to the direction from `r` to the
//! segment midpoint so that no branch cut is crossed.

use rug::Float;

use crate::error::{Error, Result};
use crate::intrel::rational_detect;
use crate::numkernel::{integrate_de_complex, BigComplex, PrecisionContext};
use crate::specfun::{ellip_k, EllipticModulus};

use super::cycles::CycleRelation;

/// Largest `|u|, |v|` accepted for the period relation.
pub const MAX_COEFF: i64 = 8;

#[derive(Debug, Clone)]
pub struct Charge2Periods {
    /// Period around the pair `R1, R2`.
    pub p1: BigComplex,
    /// Period around the pair `R1, R4`.
    pub p2: BigComplex,
}

#[derive(Debug, Clone)]
pub struct Charge2Check {
    pub k: Float,
    pub periods: Charge2Periods,
    pub relation: CycleRelation,
    /// `|u p1 + v p2 + 2|`.
    pub residual: Float,
}

/// The branch points `[R1, R2, R3, R4]`.
pub fn charge2_roots(k: &Float, ctx: &PrecisionContext) -> Result<[BigComplex; 4]> {
    let m = EllipticModulus::new(k, ctx)?;
    let c = ctx.real(m.k().square_ref()) - ctx.real(m.kprime().square_ref());
    let im = ctx.real(m.k() * m.kprime()) * 2u32;
    let r1 = BigComplex::new(-c, im).sqrt();
    let r2 = r1.conj();
    Ok([r1.clone(), r2.clone(), -r1, -r2])
}

/// Periods with the normalization `A = factor · K(k)²/4`.
pub fn charge2_periods(
    k: &Float,
    factor: &Float,
    ctx: &PrecisionContext,
) -> Result<Charge2Periods> {
    if *k <= 0 || *k >= 1 {
        return Err(Error::domain(format!(
            "charge-2 check needs k in (0, 1), got {k}"
        )));
    }
    if *factor <= 0 {
        return Err(Error::domain("normalization factor must be positive"));
    }
    let kk = ellip_k(&EllipticModulus::new(k, ctx)?, ctx)?;
    let amp = ctx.real(kk.square_ref()) / 4u32 * factor;
    let sqrt_amp = amp.sqrt();
    let roots = charge2_roots(k, ctx)?;
    let p1 = segment_period(&roots, 1, 0, &sqrt_amp, ctx)?;
    let p2 = segment_period(&roots, 0, 3, &sqrt_amp, ctx)?;
    Ok(Charge2Periods { p1, p2 })
}

/// `2 ∫` of `dζ / (2η)` along the segment from `roots[from]` to `roots[to]`.
fn segment_period(
    roots: &[BigComplex; 4],
    from: usize,
    to: usize,
    sqrt_amp: &Float,
    ctx: &PrecisionContext,
) -> Result<BigComplex> {
    let start = &roots[from];
    let d = &roots[to] - start;
    let half = ctx.ratio(1, 2);
    let mid = start + &d.scale(&half);
    let others: Vec<(BigComplex, BigComplex, BigComplex)> = (0..4)
        .filter(|&i| i != from && i != to)
        .map(|i| {
            let r = roots[i].clone();
            let off = &mid - &r;
            let dir = off.scale(&off.abs().recip());
            let sqrt_dir = dir.sqrt();
            (r, dir, sqrt_dir)
        })
        .collect();
    let integral = integrate_de_complex(
        |node| {
            let z = start + &d.scale(&node.from_lo);
            let mut den = BigComplex::from_real(ctx.real(&node.from_lo * &node.from_hi).sqrt());
            for (r, dir, sqrt_dir) in &others {
                let rel = &(&z - r) / dir;
                den = &(&den * &rel.sqrt()) * sqrt_dir;
            }
            -den.recip()
        },
        &ctx.zero(),
        &ctx.one(),
        ctx,
    )?;
    // 2 (for the closed cycle) times 1/(2√A).
    Ok(integral.scale(&sqrt_amp.clone().recip()))
}

/// Finds integers `(u, v)` with `u p1 + v p2 = -2` for the curve at `k`.
pub fn charge2_es_check(k: &Float, ctx: &PrecisionContext) -> Result<Charge2Check> {
    charge2_es_check_scaled(k, &ctx.one(), ctx)
}

/// As [`charge2_es_check`] with `K(k)²/4` multiplied by `factor`.
pub fn charge2_es_check_scaled(
    k: &Float,
    factor: &Float,
    ctx: &PrecisionContext,
) -> Result<Charge2Check> {
    let periods = charge2_periods(k, factor, ctx)?;
    let (u, v) = solve_real_pair(&periods, ctx)?;
    let threshold = ctx.pow10(-(ctx.digits() as i32 - 15));
    let fail = |u: &Float, v: &Float| {
        let (ui, vi) = (nearest(u), nearest(v));
        Error::NoPeriodRelation {
            p1: Box::new(periods.p1.clone()),
            p2: Box::new(periods.p2.clone()),
            residual: residual_of(&periods, ui, vi, ctx).to_string_radix(10, Some(6)),
        }
    };
    let (Some(uq), Some(vq)) = (rational_detect(&u, 1, ctx), rational_detect(&v, 1, ctx)) else {
        return Err(fail(&u, &v));
    };
    let (ui, vi) = (uq.numer(), vq.numer());
    if ui.abs() > MAX_COEFF || vi.abs() > MAX_COEFF || (ui == 0 && vi == 0) {
        return Err(fail(&u, &v));
    }
    let residual = residual_of(&periods, ui, vi, ctx);
    if residual > threshold {
        return Err(fail(&u, &v));
    }
    Ok(Charge2Check {
        k: ctx.real(k),
        relation: CycleRelation::pair(ui, vi)?,
        periods,
        residual,
    })
}

/// `|u p1 + v p2 + 2|`.
pub fn residual_of(periods: &Charge2Periods, u: i64, v: i64, ctx: &PrecisionContext) -> Float {
    let re = ctx.real(&periods.p1.re * u) + ctx.real(&periods.p2.re * v) + 2u32;
    let im = ctx.real(&periods.p1.im * u) + ctx.real(&periods.p2.im * v);
    BigComplex::new(re, im).abs()
}

/// Real `(u, v)` solving `u p1 + v p2 = -2` componentwise.
fn solve_real_pair(p: &Charge2Periods, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let det = ctx.real(&p.p1.re * &p.p2.im) - ctx.real(&p.p2.re * &p.p1.im);
    if det.is_zero() {
        return Err(Error::domain(
            "charge-2 periods are real-linearly dependent",
        ));
    }
    let u = -(ctx.real(&p.p2.im * 2u32) / &det);
    let v = ctx.real(&p.p1.im * 2u32) / &det;
    Ok((u, v))
}

fn nearest(x: &Float) -> i64 {
    x.clone()
        .round()
        .to_integer()
        .and_then(|i| i.to_i64())
        .unwrap_or(i64::MAX)
}
