//! Richelot's isogeny iteration for real genus-2 periods.
//!
//! The curve `y² = ∏(x - e_i)` is first moved by `s = 1/(x - p)`, with `p`
//! strictly between `e1` and `e2`, to a sextic whose roots are all finite and
//! which carries `dx/y` to `s ds / y_s`. Each Richelot step pairs the sorted
//! roots into quadratics `G1, G2, G3`, replaces them by
//! `H1 = [G2, G3]`, `H2 = [G3, G1]`, `H3 = [G1, G2]` with
//! `[A, B] = A'B - AB'`, and halves every period between paired roots. Once
//! the pairs have coalesced into double roots `α0 < α1 < α2` the remaining
//! integral is elementary:
//! `∫ s ds / √(λ (s - αi)² (s - αj)² (s - αk)²) → π |αi| / (√λ |αi - αj| |αi - αk|)`.

use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;

const MAX_STEPS: u32 = 100;

type Quadratic = [Float; 3];

/// `∫_{e2}^{e3} dx/y` and `∫_{e4}^{e5} dx/y` for `y² = ∏_{i=1}^{6} (x - e_i)`
/// with strictly increasing real roots.
pub fn richelot_periods(e: &[Float], ctx: &PrecisionContext) -> Result<(Float, Float)> {
    if e.len() != 6 {
        return Err(Error::domain(format!(
            "richelot_periods needs 6 roots, got {}",
            e.len()
        )));
    }
    let roots: Vec<Float> = e.iter().map(|x| ctx.real(x)).collect();
    for w in roots.windows(2) {
        if w[0].is_nan() || w[1].is_nan() || w[0] >= w[1] {
            return Err(Error::domain(
                "richelot_periods needs strictly increasing distinct roots",
            ));
        }
    }
    let mut last = None;
    for (num, den) in [(1, 2), (1, 3), (2, 5), (3, 7)] {
        let p = ctx.real(&roots[0] + ctx.real(&roots[1] - &roots[0]) * num / den);
        match iterate(&roots, &p, ctx) {
            Ok(v) => return Ok(v),
            Err(err) => last = Some(err),
        }
    }
    Err(last.expect("at least one base point tried"))
}

fn iterate(e: &[Float], p: &Float, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let mut lambda = ctx.one();
    for x in e {
        lambda *= ctx.real(p - x);
    }
    let mut lambda = lambda.abs();
    let mut s: Vec<Float> = e.iter().map(|x| ctx.real(x - p).recip()).collect();
    sort(&mut s);

    let converge = ctx.pow10(-(ctx.working_digits() as i32 + 1) / 2);
    let mut scale = ctx.one();
    let mut settled = false;
    for _ in 0..MAX_STEPS {
        let g: Vec<Quadratic> = (0..3)
            .map(|k| monic(&s[2 * k], &s[2 * k + 1], ctx))
            .collect();
        let h = [
            bracket(&g[1], &g[2], ctx),
            bracket(&g[2], &g[0], ctx),
            bracket(&g[0], &g[1], ctx),
        ];
        let det = det3(&g, ctx);
        let lead = ctx.real(&h[0][0] * &h[1][0]) * &h[2][0];
        let size = s
            .iter()
            .fold(ctx.one(), |m, x| m.max(&ctx.real(x.abs_ref())));
        let floor = ctx.real(&size * ctx.working_eps());
        if det.is_zero() || h.iter().any(|q| ctx.real(q[0].abs_ref()) <= floor) {
            return Err(Error::accuracy(
                "Richelot step",
                "degenerate quadratic",
                "choose another base point",
            ));
        }
        lambda *= (lead / det).abs();
        let mut next = Vec::with_capacity(6);
        for q in &h {
            let (r1, r2) = quadratic_roots(q, ctx)?;
            next.push(r1);
            next.push(r2);
        }
        sort(&mut next);
        s = next;
        scale *= 2u32;
        if settled {
            break;
        }
        let size = s
            .iter()
            .fold(ctx.one(), |m, x| m.max(&ctx.real(x.abs_ref())));
        let gap = (0..3)
            .map(|k| ctx.real(&s[2 * k + 1] - &s[2 * k]))
            .fold(ctx.zero(), |m, x| m.max(&x));
        // The limit formula is exact to second order in the gap; one more
        // step after the gap falls below √eps takes it to eps.
        if gap <= size * &converge {
            settled = true;
        }
    }
    if !settled {
        return Err(Error::accuracy(
            "Richelot iteration",
            &lambda,
            "pairs did not coalesce",
        ));
    }
    let alpha: Vec<Float> = (0..3)
        .map(|k| ctx.real(&s[2 * k] + &s[2 * k + 1]) / 2u32)
        .collect();
    let sqrt_lambda = lambda.sqrt();
    let limit = |i: usize| -> Float {
        let a = &alpha[i];
        let mut den = sqrt_lambda.clone();
        for (j, other) in alpha.iter().enumerate() {
            if j != i {
                den *= ctx.real(a - other).abs();
            }
        }
        ctx.real(&scale * ctx.pi()) * ctx.real(a.abs_ref()) / den
    };
    // After the Möbius map the interval (e2, e3) sits between the two
    // largest roots and (e4, e5) between the middle pair.
    Ok((limit(2), limit(1)))
}

fn sort(v: &mut [Float]) {
    v.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
}

fn monic(a: &Float, b: &Float, ctx: &PrecisionContext) -> Quadratic {
    [ctx.one(), -ctx.real(a + b), ctx.real(a * b)]
}

/// `A'B - AB'` for quadratics stored as `[x², x¹, x⁰]` coefficients.
fn bracket(a: &Quadratic, b: &Quadratic, ctx: &PrecisionContext) -> Quadratic {
    let cross = |i: usize, j: usize| ctx.real(&a[i] * &b[j]) - ctx.real(&a[j] * &b[i]);
    [cross(0, 1), cross(0, 2) * 2u32, cross(1, 2)]
}

fn det3(g: &[Quadratic], ctx: &PrecisionContext) -> Float {
    let m = |i: usize, j: usize| &g[i][j];
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        ctx.real(m(r1, c1) * m(r2, c2)) - ctx.real(m(r1, c2) * m(r2, c1))
    };
    ctx.real(m(0, 0) * minor(1, 2, 1, 2)) - ctx.real(m(0, 1) * minor(1, 2, 0, 2))
        + ctx.real(m(0, 2) * minor(1, 2, 0, 1))
}

/// Real roots of `a x² + b x + c` without cancellation. A discriminant that
/// is negative only at rounding level is treated as a double root.
fn quadratic_roots(q: &Quadratic, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let [a, b, c] = q;
    let b2 = ctx.real(b.square_ref());
    let mut disc = ctx.real(&b2 - ctx.real(a * c) * 4u32);
    if disc < 0 {
        let slack = ctx.real(&b2 + ctx.real(a * c).abs() * 4u32) * ctx.tolerance();
        if -disc.clone() > slack {
            return Err(Error::accuracy(
                "Richelot step",
                "complex roots",
                "root configuration left the real case",
            ));
        }
        disc = ctx.zero();
    }
    let root = disc.sqrt();
    let q = if b.is_sign_negative() {
        ctx.real(&root - b) / 2u32
    } else {
        -(ctx.real(b + &root) / 2u32)
    };
    if q.is_zero() {
        return Ok((ctx.zero(), ctx.zero()));
    }
    let r1 = ctx.real(&q / a);
    let r2 = ctx.real(c / &q);
    Ok(if r1 <= r2 { (r1, r2) } else { (r2, r1) })
}
