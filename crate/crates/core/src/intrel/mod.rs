//! Integer relations, rational recognition and bounded algebraicity probes.
//!
//! A negative answer is always tied to the bounds it was obtained under; it
//! is evidence, not proof.

mod probe;
mod pslq;
mod rational;

pub use probe::{algebraicity_probe, format_polynomial, AlgebraicityReport};
pub use pslq::{find_relation, required_digits, RelationResult};
pub use rational::rational_detect;
