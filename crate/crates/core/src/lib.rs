//! Numerical workbench for the spectral curves of BPS monopoles.
//!
//! The crate builds the known spectral curves, checks Hitchin's reality
//! condition on their coefficients, solves the Ercolani–Sinha constraints for
//! the symmetric trigonal family `η³ + χ(ζ⁶ + bζ³ − 1) = 0`, verifies the
//! charge-2 period relation, and runs integer-relation searches that give
//! bounded numerical evidence about the (non-)algebraicity of curve
//! constants.
//!
//! Every numeric routine takes an explicit [`PrecisionContext`]; there is no
//! global precision state.

pub mod cli;
pub mod curves;
pub mod error;
pub mod intrel;
pub mod modeq;
pub mod numkernel;
pub mod specfun;

pub use error::{Error, Result};
pub use numkernel::{BigComplex, BigReal, PrecisionContext, QRational};
