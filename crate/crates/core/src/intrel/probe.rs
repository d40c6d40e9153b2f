use std::fmt;

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::numkernel::PrecisionContext;

use super::pslq::{find_relation, required_digits};

/// Outcome of a bounded search for an integer polynomial vanishing at `x`.
#[derive(Debug, Clone)]
pub struct AlgebraicityReport {
    /// Coefficients `c_0, …, c_d` of `Σ c_i x^i`, leading coefficient
    /// positive, when a polynomial was found.
    pub found: Option<Vec<Integer>>,
    /// `|poly(x)|` for the polynomial found.
    pub residual: Option<Float>,
    pub precision_used: u32,
    pub dmax: u32,
    pub hmax: Integer,
}

impl AlgebraicityReport {
    /// `x^2 - 2x - 1` style rendering of the polynomial, if any.
    pub fn polynomial_string(&self) -> Option<String> {
        self.found.as_ref().map(|c| format_polynomial(c))
    }
}

impl fmt::Display for AlgebraicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polynomial_string() {
            Some(p) => write!(f, "{p} (degree <= {}, height <= {})", self.dmax, self.hmax),
            None => write!(
                f,
                "no polynomial of degree <= {} and height <= {} at {} digits",
                self.dmax, self.hmax, self.precision_used
            ),
        }
    }
}

/// Renders `Σ c_i x^i` from the highest power down.
pub fn format_polynomial(coeffs: &[Integer]) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if *c == 0 {
            continue;
        }
        let neg = *c < 0;
        let mag = c.clone().abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_mag = deg == 0 || mag != 1;
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match deg {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Looks for a nonzero integer polynomial of degree `≤ dmax` and height
/// `≤ hmax` vanishing at `x`, trying degrees in increasing order.
///
/// The precision budget is checked for the largest degree before any
/// search runs, so a refusal never follows partial evidence.
pub fn algebraicity_probe(
    x: &Float,
    dmax: u32,
    hmax: &Integer,
    ctx: &PrecisionContext,
) -> Result<AlgebraicityReport> {
    if dmax == 0 {
        return Err(Error::domain("algebraicity_probe needs dmax >= 1"));
    }
    let required = required_digits(dmax as usize + 1, hmax);
    if required > ctx.digits() {
        return Err(Error::Precision {
            required,
            available: ctx.digits(),
        });
    }
    let x = ctx.real(x);
    let mut powers = vec![ctx.one()];
    let mut report = AlgebraicityReport {
        found: None,
        residual: None,
        precision_used: ctx.digits(),
        dmax,
        hmax: hmax.clone(),
    };
    for d in 1..=dmax {
        let next = ctx.real(&powers[d as usize - 1] * &x);
        powers.push(next);
        if let Some(rel) = find_relation(&powers, hmax, ctx)? {
            let mut coeffs = rel.coeffs;
            while coeffs.last().is_some_and(|c| *c == 0) {
                coeffs.pop();
            }
            if coeffs.last().is_some_and(|c| *c < 0) {
                for c in coeffs.iter_mut() {
                    *c = -c.clone();
                }
            }
            let value = evaluate(&coeffs, &x, ctx);
            let deg = coeffs.len().saturating_sub(1) as u32;
            let height = coeffs
                .iter()
                .map(|c| c.clone().abs())
                .max()
                .unwrap_or_default();
            let scale = ctx.real(&height) * ctx.real(1u32 + x.clone().abs()).pow(deg);
            let bound = ctx.pow10(-(ctx.digits() as i32 - 15)) * scale;
            if value > bound {
                return Err(Error::accuracy(
                    "algebraicity_probe",
                    &value,
                    "relation fails bound",
                ));
            }
            report.found = Some(coeffs);
            report.residual = Some(value);
            return Ok(report);
        }
    }
    Ok(report)
}

fn evaluate(coeffs: &[Integer], x: &Float, ctx: &PrecisionContext) -> Float {
    let mut acc = ctx.zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + ctx.real(c);
    }
    acc.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&c| Integer::from(c)).collect()
    }

    #[test]
    fn quadratic_and_cubic_surds() {
        let c = PrecisionContext::new(50).unwrap();
        let x = c.one() + c.sqrt_of(2);
        let r = algebraicity_probe(&x, 2, &Integer::from(10), &c).unwrap();
        assert_eq!(r.found, Some(poly(&[-1, -2, 1])));
        assert_eq!(r.polynomial_string().unwrap(), "x^2 - 2x - 1");
        let y = c.real(2).cbrt();
        let r = algebraicity_probe(&y, 3, &Integer::from(10), &c).unwrap();
        assert_eq!(r.polynomial_string().unwrap(), "x^3 - 2");
    }

    #[test]
    fn rationals_give_linear_polynomials() {
        let c = PrecisionContext::new(50).unwrap();
        let r = algebraicity_probe(&c.ratio(-5, 7), 3, &Integer::from(10), &c).unwrap();
        assert_eq!(r.found, Some(poly(&[5, 7])));
    }

    #[test]
    fn refuses_unsupported_heights() {
        let c = PrecisionContext::new(50).unwrap();
        let h = Integer::from(Integer::u_pow_u(10, 40));
        assert!(matches!(
            algebraicity_probe(&c.pi(), 4, &h, &c),
            Err(Error::Precision { .. })
        ));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_polynomial(&poly(&[-2, 0, 0, 1])), "x^3 - 2");
        assert_eq!(format_polynomial(&poly(&[1, -1])), "-x + 1");
        assert_eq!(format_polynomial(&poly(&[0])), "0");
    }
}
