use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{agm_steps, PrecisionContext};

/// Elliptic modulus `k` together with its complement `k' = √(1 - k²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticModulus {
    k: Float,
    kprime: Float,
}

impl EllipticModulus {
    /// Accepts `0 ≤ k ≤ 1`; the end points are only meaningful as limits.
    pub fn new(k: &Float, ctx: &PrecisionContext) -> Result<Self> {
        if k.is_nan() || *k < 0 || *k > 1 {
            return Err(Error::domain(format!(
                "elliptic modulus k = {k} outside [0, 1]"
            )));
        }
        let k = ctx.real(k);
        let kprime = (ctx.real(1u32 - &k) * ctx.real(1u32 + &k)).sqrt();
        Ok(EllipticModulus { k, kprime })
    }

    pub fn k(&self) -> &Float {
        &self.k
    }

    pub fn kprime(&self) -> &Float {
        &self.kprime
    }

    /// The modulus `k'`, whose complement is `k`.
    pub fn complementary(&self) -> Self {
        EllipticModulus {
            k: self.kprime.clone(),
            kprime: self.k.clone(),
        }
    }
}

/// Complete elliptic integral of the first kind, `K(k) = π / (2 agm(1, k'))`.
pub fn ellip_k(m: &EllipticModulus, ctx: &PrecisionContext) -> Result<Float> {
    if m.kprime.is_zero() {
        return Err(Error::domain("K(k) diverges at k = 1"));
    }
    let mean = crate::numkernel::agm(&ctx.one(), &m.kprime, ctx)?;
    Ok(ctx.pi() / (mean * 2u32))
}

/// Complete elliptic integral of the second kind by the AGM side sum
/// `E = K (1 - Σ_{n≥0} 2^{n-1} c_n²)`, `c_0 = k`.
pub fn ellip_e(m: &EllipticModulus, ctx: &PrecisionContext) -> Result<Float> {
    if m.kprime.is_zero() {
        return Ok(ctx.one());
    }
    let (mean, diffs) = agm_steps(&ctx.one(), &m.kprime, ctx)?;
    let k_int = ctx.pi() / (mean * 2u32);
    let mut sum = ctx.real(m.k.square_ref()) / 2u32;
    for (n, c) in diffs.iter().enumerate() {
        // weight 2^{(n+1)-1} = 2^n
        sum += ctx.real(c.square_ref()) << n as u32;
    }
    Ok(k_int * (ctx.one() - sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::integrate_de;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    #[test]
    fn limits() {
        let c = ctx();
        let zero = EllipticModulus::new(&c.zero(), &c).unwrap();
        let half_pi = c.pi() / 2u32;
        assert!(c.close(&ellip_k(&zero, &c).unwrap(), &half_pi));
        assert!(c.close(&ellip_e(&zero, &c).unwrap(), &half_pi));
        let one = EllipticModulus::new(&c.one(), &c).unwrap();
        assert!(c.close(&ellip_e(&one, &c).unwrap(), &c.one()));
        assert!(ellip_k(&one, &c).is_err());
        assert!(EllipticModulus::new(&c.real(1.5), &c).is_err());
        assert!(EllipticModulus::new(&c.real(-0.1), &c).is_err());
    }

    #[test]
    fn k_at_lemniscatic_point_matches_quadrature() {
        // Oracle: ∫_0^{π/2} dθ / √(1 - k² sin² θ) by tanh-sinh.
        let c = ctx();
        let k = c.ratio(1, 2).sqrt();
        let m = EllipticModulus::new(&k, &c).unwrap();
        let k2 = c.ratio(1, 2);
        let quad = integrate_de(
            |n| {
                let s = c.real(n.x.sin_ref());
                (c.one() - k2.clone() * s.square()).sqrt().recip()
            },
            &c.zero(),
            &(c.pi() / 2u32),
            &c,
        )
        .unwrap();
        assert!(c.close(&ellip_k(&m, &c).unwrap(), &quad));
    }

    #[test]
    fn e_matches_quadrature() {
        let c = ctx();
        let k = c.real(0.6);
        let m = EllipticModulus::new(&k, &c).unwrap();
        let k2 = c.real(k.square_ref());
        let quad = integrate_de(
            |n| {
                let s = c.real(n.x.sin_ref());
                (c.one() - k2.clone() * s.square()).sqrt()
            },
            &c.zero(),
            &(c.pi() / 2u32),
            &c,
        )
        .unwrap();
        assert!(c.close(&ellip_e(&m, &c).unwrap(), &quad));
    }

    #[test]
    fn legendre_relation() {
        let c = ctx();
        for k in [0.2, 0.5, 0.8] {
            let m = EllipticModulus::new(&c.real(k), &c).unwrap();
            let mc = m.complementary();
            let (kk, ee) = (ellip_k(&m, &c).unwrap(), ellip_e(&m, &c).unwrap());
            let (kc, ec) = (ellip_k(&mc, &c).unwrap(), ellip_e(&mc, &c).unwrap());
            let lhs = c.real(&ee * &kc) + c.real(&ec * &kk) - c.real(&kk * &kc);
            assert!(c.close(&lhs, &(c.pi() / 2u32)), "k = {k}");
        }
    }
}
