//! Double-exponential (tanh-sinh) quadrature.
//!
//! The map `x = c + L/2 * tanh(pi/2 * sinh t)` pushes the endpoints of a
//! finite interval to `t = ±∞`, so integrable algebraic endpoint
//! singularities are sampled at points whose distance to the endpoint decays
//! double exponentially. Those distances are handed to the integrand
//! directly (see [`DeNode`]); computing them as `b - x` would lose every
//! digit once `x` rounds to `b`.
//!
//! Levels halve the step `h = 2^-level`; each level reuses the previous
//! nodes and only evaluates the new odd multiples of `h`. Refinement stops
//! once two successive levels agree to `10^-(digits + guard/2)` relative.

use std::fmt::Display;

use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{BigComplex, PrecisionContext};

/// Maximum number of step halvings before reporting non-convergence.
pub const MAX_LEVELS: u32 = 12;

/// Sample point handed to the integrand.
#[derive(Debug, Clone)]
pub struct DeNode {
    pub x: Float,
    /// `x - a`, accurate to full relative precision.
    pub from_lo: Float,
    /// `b - x`, accurate to full relative precision.
    pub from_hi: Float,
}

/// Sample point for `∫_a^∞`, under the substitution `x = a + u/(1-u)`.
#[derive(Debug, Clone)]
pub struct SemiInfiniteNode {
    pub x: Float,
    /// `x - a = u/(1-u)`.
    pub from_start: Float,
    pub u: Float,
    pub one_minus_u: Float,
}

/// Values the quadrature can accumulate.
pub trait DeSummand: Clone + Display {
    fn zero(prec: u32) -> Self;
    fn add_weighted(&mut self, weight: &Float, value: &Self);
    fn scaled(&self, factor: &Float) -> Self;
    fn magnitude(&self) -> Float;
    fn distance(&self, other: &Self) -> Float;
}

impl DeSummand for Float {
    fn zero(prec: u32) -> Self {
        Float::new(prec)
    }
    fn add_weighted(&mut self, weight: &Float, value: &Self) {
        *self += Float::with_val(self.prec(), weight * value);
    }
    fn scaled(&self, factor: &Float) -> Self {
        Float::with_val(self.prec(), self * factor)
    }
    fn magnitude(&self) -> Float {
        self.clone().abs()
    }
    fn distance(&self, other: &Self) -> Float {
        Float::with_val(self.prec(), self - other).abs()
    }
}

impl DeSummand for BigComplex {
    fn zero(prec: u32) -> Self {
        BigComplex::zero(prec)
    }
    fn add_weighted(&mut self, weight: &Float, value: &Self) {
        self.re += Float::with_val(self.re.prec(), weight * &value.re);
        self.im += Float::with_val(self.im.prec(), weight * &value.im);
    }
    fn scaled(&self, factor: &Float) -> Self {
        self.scale(factor)
    }
    fn magnitude(&self) -> Float {
        self.abs()
    }
    fn distance(&self, other: &Self) -> Float {
        (self - other).abs()
    }
}

/// `∫_a^b f(x) dx` for a real integrand.
pub fn integrate_de<F>(f: F, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<Float>
where
    F: FnMut(&DeNode) -> Float,
{
    tanh_sinh(f, a, b, ctx)
}

/// `∫_a^b f(x) dx` for a complex-valued integrand of a real variable.
pub fn integrate_de_complex<F>(
    f: F,
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
) -> Result<BigComplex>
where
    F: FnMut(&DeNode) -> BigComplex,
{
    tanh_sinh(f, a, b, ctx)
}

/// `∫_a^∞ f(x) dx` through the fixed substitution `x = a + u/(1-u)`,
/// `dx = du/(1-u)^2`, followed by tanh-sinh on `u ∈ (0, 1)`.
pub fn integrate_de_semi_infinite<F>(mut f: F, a: &Float, ctx: &PrecisionContext) -> Result<Float>
where
    F: FnMut(&SemiInfiniteNode) -> Float,
{
    let zero = ctx.zero();
    let one = ctx.one();
    tanh_sinh(
        |node: &DeNode| {
            let from_start = ctx.real(&node.from_lo / &node.from_hi);
            let semi = SemiInfiniteNode {
                x: ctx.real(a + &from_start),
                from_start,
                u: node.from_lo.clone(),
                one_minus_u: node.from_hi.clone(),
            };
            let jac = ctx.real(node.from_hi.square_ref());
            f(&semi) / jac
        },
        &zero,
        &one,
        ctx,
    )
}

fn tanh_sinh<T, F>(mut f: F, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<T>
where
    T: DeSummand,
    F: FnMut(&DeNode) -> T,
{
    if a.is_nan() || b.is_nan() || !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::domain("integration requires finite limits a < b"));
    }
    let prec = ctx.bits();
    let len = ctx.real(b - a);
    let pi = ctx.pi();
    let half_pi = ctx.real(&pi / 2u32);
    let target = ctx.pow10(-((ctx.digits() + ctx.guard() / 2) as i32));
    // Sample until the endpoint distance drops to ~10^(-8 W); this covers
    // endpoint singularities up to (x-a)^(-7/8).
    let ln10 = std::f64::consts::LN_10;
    let s_max = 4.0 * f64::from(ctx.working_digits()) * ln10;
    let t_max = (s_max / std::f64::consts::FRAC_PI_2).asinh();

    let node_pair = |t: &Float| -> (DeNode, DeNode, Float) {
        let et = ctx.real(t.exp_ref());
        let inv = ctx.real(et.recip_ref());
        let cosh_t = ctx.real(&et + &inv) / 2u32;
        let sinh_t = ctx.real(&et - &inv) / 2u32;
        let s = ctx.real(&half_pi * &sinh_t);
        let big = ctx.real(s * 2u32).exp();
        let one_plus = ctx.real(&big + 1u32);
        let from_hi = ctx.real(&len / &one_plus);
        let from_lo = ctx.real(&len - &from_hi);
        // w = L * pi * cosh t * E / (1 + E)^2
        let weight = ctx.real(&len * &pi) * cosh_t / &one_plus / ctx.real(&one_plus / &big);
        let right = DeNode {
            x: ctx.real(b - &from_hi),
            from_lo: from_lo.clone(),
            from_hi: from_hi.clone(),
        };
        let left = DeNode {
            x: ctx.real(a + &from_hi),
            from_lo: from_hi,
            from_hi: from_lo,
        };
        (right, left, weight)
    };

    let mut raw = T::zero(prec);
    let mut previous: Option<T> = None;
    for level in 0..=MAX_LEVELS {
        let h = ctx.real(1) >> level;
        let scale_hint = previous
            .as_ref()
            .map(|p| p.magnitude())
            .unwrap_or_else(|| ctx.zero());
        let (start, stride) = if level == 0 { (0u64, 1u64) } else { (1, 2) };
        if level == 0 {
            let centre = DeNode {
                x: ctx.real(a + ctx.real(&len / 2u32)),
                from_lo: ctx.real(&len / 2u32),
                from_hi: ctx.real(&len / 2u32),
            };
            let w0 = ctx.real(&len * &half_pi) / 2u32;
            raw.add_weighted(&w0, &f(&centre));
        }
        let mut negligible_run = 0;
        let mut k = if start == 0 { 1 } else { start };
        loop {
            let t = ctx.real(&h * k);
            if t.to_f64() > t_max {
                break;
            }
            let (right, left, w) = node_pair(&t);
            let fr = f(&right);
            let fl = f(&left);
            let term = ctx
                .real(&w * fr.magnitude())
                .max(&ctx.real(&w * fl.magnitude()));
            raw.add_weighted(&w, &fr);
            raw.add_weighted(&w, &fl);
            let reference = ctx.real(&scale_hint).max(&ctx.real(raw.magnitude() * &h));
            if t > 1 && !reference.is_zero() && term * &h <= ctx.real(&reference * &target) >> 20u32
            {
                negligible_run += 1;
                if negligible_run >= 3 {
                    break;
                }
            } else {
                negligible_run = 0;
            }
            k += stride;
        }
        let estimate = raw.scaled(&h);
        if let Some(prev) = &previous {
            if level >= 3 {
                let gap = estimate.distance(prev);
                let mag = estimate.magnitude();
                let converged = if mag.is_zero() {
                    gap <= target
                } else {
                    gap <= ctx.real(&mag * &target)
                };
                if converged {
                    return Ok(estimate);
                }
                if level == MAX_LEVELS {
                    return Err(Error::accuracy("tanh-sinh quadrature", &estimate, &gap));
                }
            }
        }
        previous = Some(estimate);
    }
    unreachable!("loop returns at the last level")
}
