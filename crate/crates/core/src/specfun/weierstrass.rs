use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{integrate_de_semi_infinite, PrecisionContext};

/// Invariants of `℘' ² = 4℘³ - g2 ℘ - g3` with real `g2`, `g3`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassInvariants {
    g2: Float,
    g3: Float,
}

impl WeierstrassInvariants {
    /// Rejects a vanishing discriminant `g2³ - 27 g3²`, judged relative to
    /// `max(1, |g2|³, 27 g3²)`.
    pub fn new(g2: Float, g3: Float, ctx: &PrecisionContext) -> Result<Self> {
        let w = WeierstrassInvariants {
            g2: ctx.real(g2),
            g3: ctx.real(g3),
        };
        let cube = ctx.real((&w.g2).pow(3u32));
        let sq = ctx.real(w.g3.square_ref()) * 27u32;
        let scale = ctx.real(cube.abs_ref()).max(&sq).max(&ctx.one());
        if w.discriminant(ctx).abs() <= scale * ctx.tolerance() {
            return Err(Error::domain(format!(
                "degenerate Weierstrass invariants g2 = {}, g3 = {}",
                w.g2, w.g3
            )));
        }
        Ok(w)
    }

    pub fn g2(&self) -> &Float {
        &self.g2
    }

    pub fn g3(&self) -> &Float {
        &self.g3
    }

    pub fn discriminant(&self, ctx: &PrecisionContext) -> Float {
        ctx.real((&self.g2).pow(3u32)) - ctx.real(self.g3.square_ref()) * 27u32
    }

    /// Largest real root `e1` of `4x³ - g2 x - g3`, by Newton's method from
    /// the Cauchy bound. The cubic is convex to the right of its largest
    /// critical point, so the iterates decrease monotonically to `e1`.
    pub fn largest_root(&self, ctx: &PrecisionContext) -> Result<Float> {
        let bound = ctx
            .real(self.g2.abs_ref())
            .max(&ctx.real(self.g3.abs_ref()))
            / 4u32;
        let mut x = bound + 1u32;
        let eps = ctx.working_eps();
        for _ in 0..2000 {
            let x2 = ctx.real(x.square_ref());
            let p = ctx.real(&x2 * &x) * 4u32 - ctx.real(&self.g2 * &x) - &self.g3;
            let dp = x2 * 12u32 - &self.g2;
            let step = p / dp;
            x -= &step;
            if ctx.real(step.abs_ref()) <= ctx.real(x.abs_ref()).max(&ctx.one()) * &eps {
                return Ok(x);
            }
        }
        Err(Error::accuracy(
            "largest root of 4x³ - g2 x - g3",
            &x,
            "Newton did not settle",
        ))
    }
}

/// Real half-period `κ = ∫_{e1}^∞ dx / √(4x³ - g2 x - g3)`.
///
/// The cubic is factored as `(x - e1) q(x)` with
/// `q(x) = 4x² + 4 e1 x + 4 e1² - g2`, so the endpoint singularity only sees
/// the accurate distance `x - e1` supplied by the quadrature node.
pub fn weier_half_period(w: &WeierstrassInvariants, ctx: &PrecisionContext) -> Result<Float> {
    let e1 = w.largest_root(ctx)?;
    let e1sq = ctx.real(e1.square_ref());
    let q0 = e1sq * 4u32 - &w.g2;
    integrate_de_semi_infinite(
        |node| {
            let x = &node.x;
            let q = ctx.real(x.square_ref()) * 4u32 + ctx.real(x * &e1) * 4u32 + &q0;
            (ctx.real(&node.from_start * &q)).sqrt().recip()
        },
        &e1,
        ctx,
    )
}
