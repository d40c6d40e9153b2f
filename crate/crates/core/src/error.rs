use thiserror::Error;

use crate::numkernel::BigComplex;

/// Failures shared by every numeric operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iteration or series did not reach the requested tolerance.
    #[error("accuracy error in {what}: best estimate {estimate}, gap {gap}")]
    Accuracy {
        what: String,
        estimate: String,
        gap: String,
    },

    /// A structural precondition (e.g. on an integer pair) does not hold.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// The working precision cannot support the requested search bound.
    #[error("precision budget refused: {required} digits required, {available} available")]
    Precision { required: u32, available: u32 },

    /// No integer relation between the computed periods was found.
    #[error(
        "verification failed: no relation u*p1 + v*p2 = -2 within bounds \
         (p1 = {p1}, p2 = {p2}, best residual {residual})"
    )]
    NoPeriodRelation {
        p1: Box<BigComplex>,
        p2: Box<BigComplex>,
        residual: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn accuracy(
        what: impl Into<String>,
        estimate: impl ToString,
        gap: impl ToString,
    ) -> Self {
        Error::Accuracy {
            what: what.into(),
            estimate: estimate.to_string(),
            gap: gap.to_string(),
        }
    }
}
