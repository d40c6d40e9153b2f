use rug::Float;

use crate::numkernel::{BigComplex, PrecisionContext};

use super::spectral::SpectralCurve;

/// One coefficient pair violating the reality condition.
#[derive(Debug, Clone)]
pub struct H1Violation {
    pub r: usize,
    pub j: usize,
    pub residual: Float,
}

#[derive(Debug, Clone)]
pub struct H1Report {
    pub passed: bool,
    pub max_residual: Float,
    pub violations: Vec<H1Violation>,
}

/// `c_{r,j} ↦ (-1)^{r+j} conj(c_{r,2r-j})`, the action of the real structure
/// `(η, ζ) ↦ (-η̄/ζ̄², -1/ζ̄)` on the coefficients of `P`.
pub fn h1_transform(curve: &SpectralCurve) -> SpectralCurve {
    let mut out = curve.clone();
    for (r, j, _) in curve.iter() {
        let mirror = curve.coeff(r, 2 * r - j).conj();
        let value = if (r + j) % 2 == 0 { mirror } else { -mirror };
        out.set(r, j, value);
    }
    out
}

/// Checks `c_{r,j} = (-1)^{r+j} conj(c_{r,2r-j})` for every coefficient,
/// each to `tolerance · max(1, |c_{r,2r-j}|)`.
pub fn check_h1(curve: &SpectralCurve, ctx: &PrecisionContext) -> H1Report {
    let image = h1_transform(curve);
    let mut max_residual = ctx.zero();
    let mut violations = Vec::new();
    for (r, j, c) in curve.iter() {
        let target: &BigComplex = image.coeff(r, j);
        let residual = (c - target).abs();
        let scale = target.abs().max(&ctx.one());
        if residual > scale * ctx.tolerance() {
            violations.push(H1Violation {
                r,
                j,
                residual: residual.clone(),
            });
        }
        max_residual = max_residual.max(&residual);
    }
    H1Report {
        passed: violations.is_empty(),
        max_residual,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_violation() {
        let c = PrecisionContext::new(30).unwrap();
        let mut curve = SpectralCurve::zero(1, &c).unwrap();
        curve.set(1, 2, BigComplex::i(c.bits()));
        let report = check_h1(&curve, &c);
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.r == 1 && v.j == 0));
        // Adding the required partner c_{1,0} = i repairs it.
        curve.set(1, 0, BigComplex::i(c.bits()));
        assert!(check_h1(&curve, &c).passed);
    }

    #[test]
    fn transform_is_an_involution() {
        let c = PrecisionContext::new(30).unwrap();
        let mut curve = SpectralCurve::zero(2, &c).unwrap();
        curve.set(1, 0, BigComplex::new(c.real(1.5), c.real(-2)));
        curve.set(2, 1, BigComplex::new(c.real(0.25), c.real(3)));
        curve.set(2, 4, BigComplex::new(c.real(-7), c.real(0.5)));
        assert_eq!(h1_transform(&h1_transform(&curve)), curve);
    }
}
