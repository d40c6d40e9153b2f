use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{integrate_de, PrecisionContext};

/// Signature `r` of the hypergeometric function `₂F₁(1/r, 1 - 1/r; 1; t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature(u32);

impl Signature {
    pub fn new(r: u32) -> Result<Self> {
        match r {
            2 | 3 | 4 | 6 => Ok(Signature(r)),
            _ => Err(Error::domain(format!(
                "signature must be one of 2, 3, 4, 6, got {r}"
            ))),
        }
    }

    pub fn r(self) -> u32 {
        self.0
    }

    fn params(self, ctx: &PrecisionContext) -> (Float, Float) {
        let r = i64::from(self.0);
        (ctx.ratio(1, r), ctx.ratio(r - 1, r))
    }

    /// `ψ(1) - ψ(1/r) + ψ(1) - ψ(1 - 1/r)` from Gauss's digamma theorem:
    /// `2 ln(2r) - 4 Σ_{k=1}^{⌊(r-1)/2⌋} cos(2πk/r) ln sin(πk/r)`.
    fn log_constant(self, ctx: &PrecisionContext) -> Float {
        let r = self.0;
        let mut c0 = ctx.real(2 * r).ln() * 2u32;
        for k in 1..=(r - 1) / 2 {
            let angle = ctx.pi() * k / r;
            let cos2 = ctx.real(&angle * 2u32).cos();
            let lnsin = angle.sin().ln();
            c0 -= cos2 * lnsin * 4u32;
        }
        c0
    }
}

/// `₂F₁(1/r, 1 - 1/r; 1; t)` for `0 ≤ t < 1`.
pub fn hyp2f1_unit(sig: Signature, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if t.is_nan() || *t < 0 || *t >= 1 {
        return Err(Error::domain(format!(
            "hyp2f1_unit requires 0 <= t < 1, got {t}"
        )));
    }
    let one_minus_t = ctx.real(1u32 - t);
    hyp2f1_unit_split(sig, t, &one_minus_t, ctx)
}

/// As [`hyp2f1_unit`], with `1 - t` supplied separately so that arguments
/// within rounding of 1 keep their full relative accuracy.
pub fn hyp2f1_unit_split(
    sig: Signature,
    t: &Float,
    one_minus_t: &Float,
    ctx: &PrecisionContext,
) -> Result<Float> {
    if *t < 0 || *one_minus_t <= 0 {
        return Err(Error::domain(format!(
            "hyp2f1_unit requires 0 <= t < 1, got {t}"
        )));
    }
    if *t <= 0.5 {
        power_series(sig, t, ctx)
    } else {
        log_series(sig, one_minus_t, ctx)
    }
}

/// `F(t) / F(1 - t)`, increasing on `(0, 1)` with value 1 at `t = 1/2`.
pub fn hyp_ratio(sig: Signature, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if t.is_nan() || *t <= 0 || *t >= 1 {
        return Err(Error::domain(format!(
            "hyp_ratio requires 0 < t < 1, got {t}"
        )));
    }
    let one_minus_t = ctx.real(1u32 - t);
    hyp_ratio_split(sig, t, &one_minus_t, ctx)
}

/// [`hyp_ratio`] with `t` and `1 - t` given independently.
pub fn hyp_ratio_split(
    sig: Signature,
    t: &Float,
    one_minus_t: &Float,
    ctx: &PrecisionContext,
) -> Result<Float> {
    if *t <= 0 || *one_minus_t <= 0 {
        return Err(Error::domain(format!(
            "hyp_ratio requires 0 < t < 1, got {t}"
        )));
    }
    let num = hyp2f1_unit_split(sig, t, one_minus_t, ctx)?;
    let den = hyp2f1_unit_split(sig, one_minus_t, t, ctx)?;
    Ok(num / den)
}

/// `(√3/2) ∫_0^1 u^{-1/3} (1-u)^{-2/3} (1-ut)^{-1/3} du`, Euler's integral
/// for `π ₂F₁(1/3, 2/3; 1; t)`, by tanh-sinh quadrature.
pub fn hyp_euler_integral(t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if t.is_nan() || *t < 0 || *t >= 1 {
        return Err(Error::domain(format!(
            "hyp_euler_integral requires 0 <= t < 1, got {t}"
        )));
    }
    let third = ctx.ratio(-1, 3);
    let two_thirds = ctx.ratio(-2, 3);
    let integral = integrate_de(
        |n| {
            let w = ctx.one() - ctx.real(&n.x * t);
            ctx.real((&n.from_lo).pow(&third))
                * ctx.real((&n.from_hi).pow(&two_thirds))
                * w.pow(&third)
        },
        &ctx.zero(),
        &ctx.one(),
        ctx,
    )?;
    Ok(integral * ctx.sqrt_of(3) / 2u32)
}

fn max_terms(ctx: &PrecisionContext) -> u32 {
    20 * ctx.working_digits() + 200
}

fn power_series(sig: Signature, z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let (a, b) = sig.params(ctx);
    let eps = ctx.working_eps();
    let mut term = ctx.one();
    let mut sum = ctx.one();
    if z.is_zero() {
        return Ok(sum);
    }
    for n in 0..max_terms(ctx) {
        let an = ctx.real(&a + n);
        let bn = ctx.real(&b + n);
        term *= an * bn;
        term *= z;
        term /= (n + 1) * (n + 1);
        sum += &term;
        if term <= ctx.real(&sum * &eps) {
            return Ok(sum);
        }
    }
    Err(Error::accuracy("₂F₁ power series", &sum, &term))
}

/// Connection formula for `c = a + b` at `z = 1 - t`:
/// `F(t) = (sin πa / π) Σ_n (a)_n (b)_n / (n!)² zⁿ [C0 + H_n - ln z]`,
/// `H_n = Σ_{k<n} (2/(k+1) - 1/(a+k) - 1/(b+k))`.
fn log_series(sig: Signature, z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let (a, b) = sig.params(ctx);
    let eps = ctx.working_eps();
    let base = sig.log_constant(ctx) - ctx.real(z.ln_ref());
    let mut coeff = ctx.one();
    let mut harmonic = ctx.zero();
    let mut sum = base.clone();
    for n in 0..max_terms(ctx) {
        let an = ctx.real(&a + n);
        let bn = ctx.real(&b + n);
        harmonic +=
            ctx.ratio(2, i64::from(n) + 1) - ctx.real(an.recip_ref()) - ctx.real(bn.recip_ref());
        coeff *= an * bn;
        coeff *= z;
        coeff /= (n + 1) * (n + 1);
        let term = ctx.real(&coeff * ctx.real(&base + &harmonic));
        sum += &term;
        if term.clone().abs() <= ctx.real(&sum * &eps) {
            let prefactor = ctx.real(ctx.pi() * &a).sin() / ctx.pi();
            return Ok(sum * prefactor);
        }
    }
    Err(Error::accuracy("₂F₁ logarithmic series", &sum, &coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{ellip_k, EllipticModulus};

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    fn sig(r: u32) -> Signature {
        Signature::new(r).unwrap()
    }

    #[test]
    fn signature_membership() {
        for r in [2, 3, 4, 6] {
            assert_eq!(Signature::new(r).unwrap().r(), r);
        }
        for r in [0, 1, 5, 7] {
            assert!(Signature::new(r).is_err());
        }
    }

    #[test]
    fn log_constant_small_cases() {
        let c = ctx();
        assert!(c.close(&sig(2).log_constant(&c), &(c.real(2).ln() * 4u32)));
        assert!(c.close(&sig(3).log_constant(&c), &(c.real(3).ln() * 3u32)));
    }

    #[test]
    fn value_at_zero_and_domain() {
        let c = ctx();
        assert_eq!(hyp2f1_unit(sig(3), &c.zero(), &c).unwrap(), 1);
        assert!(hyp2f1_unit(sig(3), &c.one(), &c).is_err());
        assert!(hyp2f1_unit(sig(3), &c.real(-0.1), &c).is_err());
        assert!(hyp_ratio(sig(3), &c.zero(), &c).is_err());
    }

    #[test]
    fn signature_two_is_elliptic_k() {
        let c = ctx();
        for k in [0.6, 0.9, 0.999] {
            let kf = c.real(k);
            let t = c.real(kf.square_ref());
            let lhs = hyp2f1_unit(sig(2), &t, &c).unwrap();
            let m = EllipticModulus::new(&kf, &c).unwrap();
            let rhs = ellip_k(&m, &c).unwrap() * 2u32 / c.pi();
            assert!(c.close(&lhs, &rhs), "k = {k}");
        }
    }

    #[test]
    fn series_matches_double_precision_series() {
        let c = ctx();
        let fine = c.scaled(2);
        let t = c.real(0.3);
        let ours = hyp2f1_unit(sig(3), &t, &c).unwrap();
        // Plain term-by-term summation at twice the digits, fixed length.
        let (a, b) = (fine.ratio(1, 3), fine.ratio(2, 3));
        let tf = fine.real(&t);
        let mut term = fine.one();
        let mut sum = fine.one();
        for n in 0..400u32 {
            term = term * fine.real(&a + n) * fine.real(&b + n) * &tf / ((n + 1) * (n + 1));
            sum += &term;
        }
        assert!(c.close(&ours, &c.real(&sum)));
    }

    #[test]
    fn connection_formula_agrees_with_series_past_one_half() {
        let c = ctx();
        for r in [2, 3, 4, 6] {
            let t = c.ratio(3, 5);
            let z = c.one() - t.clone();
            let direct = power_series(sig(r), &t, &c).unwrap();
            let connected = log_series(sig(r), &z, &c).unwrap();
            assert!(c.close(&direct, &connected), "r = {r}");
        }
    }

    #[test]
    fn euler_integral_identity() {
        let c = ctx();
        for t in [c.ratio(1, 10), c.ratio(3, 10), c.ratio(7, 10)] {
            let lhs = c.pi() * hyp2f1_unit(sig(3), &t, &c).unwrap();
            let rhs = hyp_euler_integral(&t, &c).unwrap();
            assert!(c.close(&lhs, &rhs), "t = {t}");
        }
    }

    #[test]
    fn ratio_symmetry_and_table_value() {
        let c = ctx();
        assert!(c.close(&hyp_ratio(sig(3), &c.ratio(1, 2), &c).unwrap(), &c.one()));
        let t = c.ratio(1, 2) + c.sqrt_of(3) * 5u32 / 18u32;
        assert!(c.close(&hyp_ratio(sig(3), &t, &c).unwrap(), &c.real(2)));
        let t = c.ratio(3, 10);
        let u = c.one() - t.clone();
        let prod = hyp_ratio(sig(3), &t, &c).unwrap() * hyp_ratio(sig(3), &u, &c).unwrap();
        assert!(c.close(&prod, &c.one()));
    }

    #[test]
    fn ratio_is_increasing() {
        let c = PrecisionContext::new(30).unwrap();
        for r in [2, 3, 4, 6] {
            let mut prev = c.zero();
            for i in 1..50 {
                let t = c.ratio(i, 50);
                let v = hyp_ratio(sig(r), &t, &c).unwrap();
                assert!(v > prev, "r = {r}, t = {i}/50");
                prev = v;
            }
        }
    }

    #[test]
    fn split_form_resolves_points_near_one() {
        let c = ctx();
        let z = c.pow10(-60);
        let t = c.one() - z.clone();
        let split = hyp2f1_unit_split(sig(3), &t, &z, &c).unwrap();
        // Leading behaviour (sin πa/π)(C0 - ln z) with the O(z ln z) term far below tolerance.
        let prefactor = c.real(c.pi() / 3u32).sin() / c.pi();
        let approx = (sig(3).log_constant(&c) - c.real(z.ln_ref())) * prefactor;
        assert!(c.close(&split, &approx));
    }
}
