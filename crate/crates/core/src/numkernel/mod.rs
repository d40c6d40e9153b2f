//! Arbitrary-precision substrate: precision context, real and complex
//! numbers, exact rationals, the AGM and tanh-sinh quadrature.

mod agm;
mod complex;
mod context;
mod quad;
mod rational;

pub use agm::agm;
pub(crate) use agm::agm_steps;
pub use complex::BigComplex;
pub use context::{to_decimal, to_decimal_digits, PrecisionContext, DEFAULT_GUARD};
pub use quad::{
    integrate_de, integrate_de_complex, integrate_de_semi_infinite, DeNode, DeSummand,
    SemiInfiniteNode, MAX_LEVELS,
};
pub use rational::QRational;

/// Real number at the precision of the context that created it.
pub type BigReal = rug::Float;
