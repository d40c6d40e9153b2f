use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;

const MAX_AGM_STEPS: usize = 200;

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<Float> {
    Ok(agm_steps(a, b, ctx)?.0)
}

/// The AGM together with the differences `c_n = (a_{n-1} - b_{n-1}) / 2`
/// produced along the way (`c_0` is not included).
pub(crate) fn agm_steps(
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
) -> Result<(Float, Vec<Float>)> {
    if *a <= 0 || *b <= 0 || a.is_nan() || b.is_nan() {
        return Err(Error::domain("agm requires positive arguments"));
    }
    let stop = ctx.working_eps();
    let mut a = ctx.real(a);
    let mut b = ctx.real(b);
    let mut diffs = Vec::new();
    for _ in 0..MAX_AGM_STEPS {
        let gap = ctx.real(&a - &b).abs();
        if gap <= ctx.real(&a * &stop) {
            return Ok(((a + b) / 2u32, diffs));
        }
        let next_a = ctx.real(&a + &b) / 2u32;
        let next_b = ctx.real(&a * &b).sqrt();
        diffs.push(ctx.real(&a - &b) / 2u32);
        a = next_a;
        b = next_b;
    }
    Err(Error::accuracy("agm", &a, ctx.real(&a - &b)))
}
