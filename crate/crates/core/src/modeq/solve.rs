use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;
use crate::specfun::{hyp_ratio, hyp_ratio_split, Signature};

/// Width in `u = logit t` at which bisection hands over to the secant.
const BISECT_WIDTH: f64 = 1e-2;
const MAX_SECANT: u32 = 200;

/// The unique `t ∈ (0, 1)` with `hyp_ratio(r, t) = target`.
pub fn solve_ratio(sig: Signature, target: &Float, ctx: &PrecisionContext) -> Result<Float> {
    Ok(solve_ratio_split(sig, target, ctx)?.0)
}

/// As [`solve_ratio`], returning `(t, 1 - t)` with both parts at full
/// relative precision.
///
/// The search runs in `u = ln(t / (1 - t))`, where `t = 1/(1 + e^{-u})` and
/// `1 - t = 1/(1 + e^u)` are each free of cancellation. The bracket covers
/// `t ∈ (10^-digits, 1 - 10^-digits)`; bisection narrows it, then an
/// Illinois-modified secant polishes the root.
pub fn solve_ratio_split(
    sig: Signature,
    target: &Float,
    ctx: &PrecisionContext,
) -> Result<(Float, Float)> {
    if target.is_nan() || *target <= 0 || !target.is_finite() {
        return Err(Error::domain(format!(
            "solve_ratio requires target > 0, got {target}"
        )));
    }
    let target = ctx.real(target);
    let g = |u: &Float| -> Result<Float> {
        let (t, s) = split(u, ctx);
        Ok(hyp_ratio_split(sig, &t, &s, ctx)? - &target)
    };

    let reach = f64::from(ctx.digits()) * std::f64::consts::LN_10;
    let mut lo = ctx.real(-reach);
    let mut hi = ctx.real(reach);
    let mut g_lo = g(&lo)?;
    let mut g_hi = g(&hi)?;
    if g_lo > 0 || g_hi < 0 {
        return Err(Error::domain(format!(
            "target {target} lies outside the range of hyp_ratio on (10^-{d}, 1 - 10^-{d})",
            d = ctx.digits()
        )));
    }

    while ctx.real(&hi - &lo) > BISECT_WIDTH {
        let mid = ctx.real(&lo + &hi) / 2u32;
        let g_mid = g(&mid)?;
        if g_mid.is_zero() {
            return Ok(split(&mid, ctx));
        }
        if g_mid < 0 {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
            g_hi = g_mid;
        }
    }

    let stop = ctx.working_eps();
    let mut side = 0i8;
    let mut best = lo.clone();
    for _ in 0..MAX_SECANT {
        let x = ctx.real(&hi - ctx.real(&g_hi * ctx.real(&hi - &lo)) / ctx.real(&g_hi - &g_lo));
        let gx = g(&x)?;
        best = x.clone();
        let width = ctx.real(&hi - &lo);
        let scale = ctx.real(x.abs_ref()).max(&ctx.one());
        if gx.is_zero()
            || ctx.real(gx.abs_ref()) <= ctx.real(&target * &stop)
            || width <= scale * &stop
        {
            break;
        }
        if gx < 0 {
            lo = x;
            g_lo = gx;
            if side == -1 {
                g_hi /= 2u32;
            }
            side = -1;
        } else {
            hi = x;
            g_hi = gx;
            if side == 1 {
                g_lo /= 2u32;
            }
            side = 1;
        }
    }

    let (t, s) = split(&best, ctx);
    let residual = ctx.real(hyp_ratio_split(sig, &t, &s, ctx)? - &target).abs();
    if residual > ctx.tolerance() * target.max(&ctx.one()) {
        return Err(Error::accuracy(
            "solve_ratio",
            format!("t in [{}, {}]", split(&lo, ctx).0, split(&hi, ctx).0),
            residual,
        ));
    }
    Ok((t, s))
}

fn split(u: &Float, ctx: &PrecisionContext) -> (Float, Float) {
    let e = ctx.real(u.exp_ref());
    let t = ctx.real(ctx.real(1u32 + e.clone().recip()).recip_ref());
    let s = ctx.real(ctx.real(1u32 + e).recip_ref());
    (t, s)
}

/// The degree-`n` partner `β` of `α`, defined by
/// `F(β)/F(1-β) = n · F(α)/F(1-α)` with `F = ₂F₁(1/r, 1 - 1/r; 1; ·)`.
pub fn modular_partner(
    alpha: &Float,
    n: u32,
    sig: Signature,
    ctx: &PrecisionContext,
) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("modular_partner requires degree n >= 1"));
    }
    let target = hyp_ratio(sig, alpha, ctx)? * n;
    solve_ratio(sig, &target, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    fn r3() -> Signature {
        Signature::new(3).unwrap()
    }

    #[test]
    fn symmetric_point() {
        let c = ctx();
        let t = solve_ratio(r3(), &c.one(), &c).unwrap();
        assert!(c.close(&t, &c.ratio(1, 2)));
    }

    #[test]
    fn ratio_three_closed_form() {
        let c = ctx();
        let cbrt2 = c.real(2).cbrt();
        let cbrt4 = c.real(4).cbrt();
        let expected = (c.real(63) + cbrt2 * 171u32 - cbrt4 * 18u32) / 250u32;
        let t = solve_ratio(r3(), &c.real(3), &c).unwrap();
        assert!(c.close(&t, &expected));
    }

    #[test]
    fn extreme_targets_keep_complement_precision() {
        let c = ctx();
        let (t, s) = solve_ratio_split(r3(), &c.real(20), &c).unwrap();
        assert!(s < 1e-20 && s > 0);
        let back = hyp_ratio_split(r3(), &t, &s, &c).unwrap();
        assert!(c.close(&back, &c.real(20)));
    }

    #[test]
    fn rejects_bad_targets() {
        let c = ctx();
        assert!(solve_ratio(r3(), &c.zero(), &c).is_err());
        assert!(solve_ratio(r3(), &c.real(-1), &c).is_err());
    }

    #[test]
    fn degree_one_is_identity() {
        let c = ctx();
        for sig in [2, 3, 4, 6] {
            let a = c.real(0.3);
            let b = modular_partner(&a, 1, Signature::new(sig).unwrap(), &c).unwrap();
            assert!(c.close(&a, &b));
        }
    }

    #[test]
    fn degree_two_signature_three() {
        let c = ctx();
        let b = modular_partner(&c.ratio(1, 2), 2, r3(), &c).unwrap();
        let expected = c.ratio(1, 2) + c.sqrt_of(3) * 5u32 / 18u32;
        assert!(c.close(&b, &expected));
        for a in [0.3, 0.7] {
            let a = c.real(a);
            let b = modular_partner(&a, 2, r3(), &c).unwrap();
            let lhs = c.real(&a * &b).cbrt() + (c.real(1u32 - &a) * c.real(1u32 - &b)).cbrt();
            assert!(c.close(&lhs, &c.one()));
        }
        assert!(modular_partner(&c.ratio(1, 2), 0, r3(), &c).is_err());
    }
}
