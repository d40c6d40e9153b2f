use std::fmt;

use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;
use crate::specfun::{hyp2f1_unit_split, Signature};

use super::solve::solve_ratio_split;

/// Coprime integers `(n, m)` labelling a solution of the Ercolani–Sinha
/// constraints for `η³ + χ(ζ⁶ + bζ³ − 1) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ESPair {
    n: i64,
    m: i64,
}

impl ESPair {
    pub fn new(n: i64, m: i64) -> Result<Self> {
        if gcd(n, m) != 1 {
            return Err(Error::Constraint(format!("gcd({n}, {m}) must be 1")));
        }
        if n + m == 0 {
            return Err(Error::Constraint(format!(
                "m + n must be nonzero, got ({n}, {m})"
            )));
        }
        if (m + n) * (m - 2 * n) >= 0 {
            return Err(Error::Constraint(format!(
                "(m + n)(m - 2n) < 0 fails for ({n}, {m})"
            )));
        }
        Ok(ESPair { n, m })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// `(2n - m) / (m + n)`, positive by the pair invariants.
    pub fn ratio(&self, ctx: &PrecisionContext) -> Float {
        ctx.ratio(2 * self.n - self.m, self.m + self.n)
    }
}

impl fmt::Display for ESPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Solution data of the trigonal Ercolani–Sinha problem for one pair.
#[derive(Debug, Clone)]
pub struct ESData {
    pub pair: ESPair,
    pub t: Float,
    /// `1 - t`, carried separately for `t` near 1.
    pub one_minus_t: Float,
    /// `|b_raw|`.
    pub b: Float,
    /// `(1 - 2t) / √(t(1 - t))`, negative for `t > 1/2`.
    pub b_raw: Float,
    /// Positive sixth root of `t / (1 - t)`.
    pub alpha: Float,
    pub chi: Float,
    /// Real cube root of `chi`, as produced by the closed formula.
    pub chi_cbrt: Float,
}

/// Solves for `t`, `b`, `α` and `χ` given a valid pair.
pub fn es_solve(pair: ESPair, ctx: &PrecisionContext) -> Result<ESData> {
    let sig = Signature::new(3)?;
    let (t, s) = solve_ratio_split(sig, &pair.ratio(ctx), ctx)?;
    let b_raw = ctx.real(&s - &t) / ctx.real(&t * &s).sqrt();
    let alpha6 = ctx.real(&t / &s);
    let alpha = ctx.real(alpha6.root_ref(6));
    let f = hyp2f1_unit_split(sig, &t, &s, ctx)?;
    let prefactor = ctx.pi() * 2u32 / (ctx.sqrt_of(3) * 3u32);
    let chi_cbrt = -(prefactor * (pair.n + pair.m)) * &alpha / ctx.real(1u32 + alpha6).cbrt() * f;
    let chi = ctx.real(chi_cbrt.square_ref()) * &chi_cbrt;
    Ok(ESData {
        pair,
        b: ctx.real(b_raw.abs_ref()),
        b_raw,
        t,
        one_minus_t: s,
        alpha,
        chi,
        chi_cbrt,
    })
}

/// `t(b) = (-b + √(b² + 4)) / (2 √(b² + 4))`, the branch of the inversion
/// lying in `(0, 1/2]` for `b ≥ 0`.
pub fn t_of_b(b: &Float, ctx: &PrecisionContext) -> Float {
    let root = (ctx.real(b.square_ref()) + 4u32).sqrt();
    ctx.real(&root - b) / (root * 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50).unwrap()
    }

    #[test]
    fn pair_validation() {
        assert!(ESPair::new(2, 1).is_ok());
        assert!(ESPair::new(5, -2).is_ok());
        assert!(matches!(ESPair::new(2, 2), Err(Error::Constraint(_))));
        assert!(matches!(ESPair::new(1, -1), Err(Error::Constraint(_))));
        // m = 2n makes (m + n)(m - 2n) vanish.
        assert!(matches!(ESPair::new(1, 2), Err(Error::Constraint(_))));
        assert!(matches!(ESPair::new(1, 3), Err(Error::Constraint(_))));
    }

    #[test]
    fn symmetric_pair() {
        let c = ctx();
        let d = es_solve(ESPair::new(2, 1).unwrap(), &c).unwrap();
        assert!(c.close(&d.t, &c.ratio(1, 2)));
        assert!(c.close(&d.b, &c.zero()));
    }

    #[test]
    fn reciprocal_pairs_share_b_and_chi() {
        let c = ctx();
        let a = es_solve(ESPair::new(1, 0).unwrap(), &c).unwrap();
        let b = es_solve(ESPair::new(1, 1).unwrap(), &c).unwrap();
        assert!(c.close(&a.b, &b.b));
        assert!(c.close(&(a.chi.clone().abs()), &(b.chi.clone().abs())));
        assert!(c.close(&a.t, &b.one_minus_t));
        let five_root2 = c.sqrt_of(2) * 5u32;
        assert!(c.close(&a.b, &five_root2));
    }

    #[test]
    fn invariants_hold() {
        let c = ctx();
        for (n, m) in [(1, 0), (4, -1), (5, -2)] {
            let d = es_solve(ESPair::new(n, m).unwrap(), &c).unwrap();
            let a6 = c.real((&d.alpha).pow(6u32));
            assert!(c.close(&a6, &(c.real(&d.t / &d.one_minus_t))));
            assert!(c.close(&c.real((&d.chi_cbrt).pow(3u32)), &d.chi));
            assert!(c.close(&(c.one() - d.t.clone()), &d.one_minus_t));
        }
    }

    #[test]
    fn b_round_trip_folds() {
        // The signed b inverts exactly; the canonical |b| folds t > 1/2 onto 1 - t.
        let c = ctx();
        for k in [1, 3, 7, 19] {
            let t = c.ratio(k, 20);
            let s = c.one() - t.clone();
            let b = c.real(&s - &t) / c.real(&t * &s).sqrt();
            assert!(c.close(&t_of_b(&b, &c), &t));
            let folded = if t < 0.5 { t.clone() } else { s.clone() };
            assert!(c.close(&t_of_b(&c.real(b.abs_ref()), &c), &folded));
        }
    }
}
