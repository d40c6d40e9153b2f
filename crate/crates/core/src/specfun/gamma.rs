use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{integrate_de, PrecisionContext, QRational};

/// Largest argument evaluated by the series directly; larger arguments are
/// shifted down with `Γ(x) = (x-1) Γ(x-1)`.
const DIRECT_LIMIT: i64 = 32;

/// `Γ(x)` for a positive rational `x`.
///
/// Splits `Γ(x) = γ(x, N) + Γ(x, N)` and sums the lower incomplete part
/// `γ(x, N) = N^x e^{-N} Σ_k N^k / (x (x+1) ⋯ (x+k))`, all terms positive.
/// `N` is chosen so that the dropped tail, bounded by
/// `Γ(x, N) ≤ N^{x-1} e^{-N} · N / (N - x + 1)`, is below `10^-(W+2)` where
/// `W` is the working digit count; `Γ(x) > 0.88` on `x > 0` makes that a
/// relative bound.
pub fn gamma_q(x: &QRational, ctx: &PrecisionContext) -> Result<Float> {
    if !x.is_positive() {
        return Err(Error::domain(format!("gamma_q requires x > 0, got {x}")));
    }
    let mut arg = *x;
    let mut factor = ctx.one();
    let shift = QRational::integer(-1);
    while arg.numer() > DIRECT_LIMIT * arg.denom() {
        arg = arg
            .checked_add(&shift)
            .ok_or_else(|| Error::domain("gamma_q argument overflow"))?;
        factor *= arg.to_real(ctx);
    }
    Ok(factor * lower_incomplete_series(&arg, ctx)?)
}

fn lower_incomplete_series(x: &QRational, ctx: &PrecisionContext) -> Result<Float> {
    let work = ctx.bits() + 64;
    let xf = x.numer() as f64 / x.denom() as f64;
    let target = f64::from(ctx.working_digits() + 2) * std::f64::consts::LN_10;
    let mut n = (target + 10.0).ceil().max(xf + 2.0);
    loop {
        let log_tail = (xf - 1.0) * n.ln() - n + (n / (n - xf + 1.0)).ln();
        if log_tail < -target - 1.0 {
            break;
        }
        n += 4.0;
    }
    let n_int = n as u64;

    let xr = Float::with_val(work, x.numer()) / x.denom();
    let big_n = Float::with_val(work, n_int);
    let mut term = Float::with_val(work, xr.recip_ref());
    let mut sum = term.clone();
    let stop = Float::with_val(work, 10).pow(-((ctx.working_digits() + 5) as i32));
    let mut denom = xr.clone();
    let max_terms = 20 * n_int + 1000;
    for k in 0..max_terms {
        denom += 1u32;
        term *= &big_n;
        term /= &denom;
        sum += &term;
        if k > 2 * n_int && term <= Float::with_val(work, &sum * &stop) {
            let scale =
                Float::with_val(work, (&big_n).pow(&xr)) * Float::with_val(work, -&big_n).exp();
            return Ok(ctx.real(sum * scale));
        }
    }
    Err(Error::accuracy(format!("gamma_q({x}) series"), &sum, &term))
}

/// `B(x, y) = Γ(x) Γ(y) / Γ(x + y)` for positive rationals.
pub fn beta_q(x: &QRational, y: &QRational, ctx: &PrecisionContext) -> Result<Float> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::domain(format!(
            "beta_q requires positive arguments, got ({x}, {y})"
        )));
    }
    let sum = x
        .checked_add(y)
        .ok_or_else(|| Error::domain("beta_q argument overflow"))?;
    Ok(gamma_q(x, ctx)? * gamma_q(y, ctx)? / gamma_q(&sum, ctx)?)
}

/// `B(x, y)` from Euler's integral `∫_0^1 u^{x-1} (1-u)^{y-1} du` by tanh-sinh.
///
/// Shares no code with [`gamma_q`]; used to cross-check the Beta forms of
/// the curve constants.
pub fn beta_integral(x: &QRational, y: &QRational, ctx: &PrecisionContext) -> Result<Float> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::domain(format!(
            "beta_integral requires positive arguments, got ({x}, {y})"
        )));
    }
    let xm1 = x.to_real(ctx) - 1u32;
    let ym1 = y.to_real(ctx) - 1u32;
    integrate_de(
        |node| ctx.real((&node.from_lo).pow(&xm1)) * ctx.real((&node.from_hi).pow(&ym1)),
        &ctx.zero(),
        &ctx.one(),
        ctx,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(60).unwrap()
    }

    fn q(p: i64, d: i64) -> QRational {
        QRational::new(p, d).unwrap()
    }

    #[test]
    fn classical_values() {
        let c = ctx();
        assert!(c.close(&gamma_q(&q(1, 1), &c).unwrap(), &c.one()));
        let half = gamma_q(&q(1, 2), &c).unwrap();
        assert!(c.close(&half, &c.pi().sqrt()));
        assert!(c.close(&gamma_q(&q(5, 1), &c).unwrap(), &c.real(24)));
    }

    #[test]
    fn quarter_by_reflection() {
        // Γ(1/4) Γ(3/4) = π / sin(π/4) = π √2, Γ(3/4) evaluated separately.
        let c = ctx();
        let prod = gamma_q(&q(1, 4), &c).unwrap() * gamma_q(&q(3, 4), &c).unwrap();
        assert!(c.close(&prod, &(c.pi() * c.sqrt_of(2))));
    }

    #[test]
    fn agrees_with_mpfr_gamma() {
        let c = ctx();
        for (p, d) in [(1, 6), (1, 3), (2, 3), (5, 6), (7, 2), (101, 3)] {
            let ours = gamma_q(&q(p, d), &c).unwrap();
            let theirs = c.ratio(p, d).gamma();
            assert!(c.close(&ours, &theirs), "Γ({p}/{d})");
        }
    }

    #[test]
    fn recurrence() {
        let c = ctx();
        for (p, d) in [(1, 6), (1, 4), (1, 3), (1, 2)] {
            let x = q(p, d);
            let x1 = x.checked_add(&QRational::integer(1)).unwrap();
            let lhs = gamma_q(&x1, &c).unwrap();
            let rhs = x.to_real(&c) * gamma_q(&x, &c).unwrap();
            assert!(c.close(&lhs, &rhs));
        }
    }

    #[test]
    fn beta_forms() {
        let c = ctx();
        assert!(c.close(&beta_q(&q(1, 2), &q(1, 2), &c).unwrap(), &c.pi()));
        let direct = beta_q(&q(1, 6), &q(1, 3), &c).unwrap();
        let integral = beta_integral(&q(1, 6), &q(1, 3), &c).unwrap();
        assert!(c.close(&direct, &integral));
    }

    #[test]
    fn rejects_non_positive() {
        let c = ctx();
        assert!(gamma_q(&q(0, 1), &c).is_err());
        assert!(gamma_q(&q(-1, 2), &c).is_err());
        assert!(beta_q(&q(1, 2), &q(-1, 2), &c).is_err());
    }
}
