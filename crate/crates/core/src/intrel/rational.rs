use rug::{Float, Integer};

use crate::numkernel::{PrecisionContext, QRational};

/// The first continued-fraction convergent `p/q` of `x` with `q ≤ max_den`
/// and `|x - p/q| ≤ 10^-(digits-15)`, if any.
pub fn rational_detect(x: &Float, max_den: i64, ctx: &PrecisionContext) -> Option<QRational> {
    if max_den < 1 || !x.is_finite() {
        return None;
    }
    let threshold = ctx.pow10(-(ctx.digits() as i32 - 15));
    let x = ctx.real(x);
    let (mut p_prev, mut p) = (Integer::new(), Integer::from(1));
    let (mut q_prev, mut q) = (Integer::from(1), Integer::new());
    let mut rest = x.clone();
    // A convergent denominator at least doubles every two steps.
    for _ in 0..(2 * 64 + 4) {
        let a = rest.clone().floor();
        let a_int = a.to_integer().expect("finite");
        // The floor of a rounded tail can land one below the true partial
        // quotient, so the next integer is tried as well.
        for bump in [0u32, 1] {
            let a_try = Integer::from(&a_int + bump);
            let p_try = Integer::from(&a_try * &p) + &p_prev;
            let q_try = Integer::from(&a_try * &q) + &q_prev;
            if q_try > max_den || q_try <= 0 {
                continue;
            }
            let approx = ctx.real(&p_try) / ctx.real(&q_try);
            if ctx.real(&x - &approx).abs() <= threshold {
                let (pi, qi) = (p_try.to_i64()?, q_try.to_i64()?);
                return QRational::new(pi, qi).ok();
            }
        }
        let p_next = Integer::from(&a_int * &p) + &p_prev;
        let q_next = Integer::from(&a_int * &q) + &q_prev;
        if q_next > max_den {
            return None;
        }
        (p_prev, p) = (p, p_next);
        (q_prev, q) = (q, q_next);
        let frac = rest - a;
        if frac.is_zero() {
            return None;
        }
        rest = frac.recip();
    }
    None
}
