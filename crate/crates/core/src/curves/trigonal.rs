use crate::error::Result;
use crate::modeq::{es_solve, ESData, ESPair};
use crate::numkernel::{BigComplex, PrecisionContext};

use super::spectral::SpectralCurve;

/// `η³ + χ(ζ⁶ + bζ³ - 1)` for the pair, in the orientation with `b ≥ 0`.
///
/// A negative solved `b` is flipped by `(η, ζ) ↦ (-η, -ζ)`, which sends
/// `(b, χ)` to `(-b, -χ)`.
pub fn build_symmetric_trigonal(pair: ESPair, ctx: &PrecisionContext) -> Result<SpectralCurve> {
    Ok(trigonal_from_data(&es_solve(pair, ctx)?, ctx))
}

pub fn trigonal_from_data(data: &ESData, ctx: &PrecisionContext) -> SpectralCurve {
    let chi = if data.b_raw.is_sign_negative() {
        -ctx.real(&data.chi)
    } else {
        ctx.real(&data.chi)
    };
    let mut curve = SpectralCurve::zero(3, ctx).expect("charge 3 is valid");
    curve.set(3, 0, BigComplex::from_real(-chi.clone()));
    curve.set(3, 3, BigComplex::from_real(ctx.real(&chi * &data.b)));
    curve.set(3, 6, BigComplex::from_real(chi));
    curve
}
