//! Constraint solvers for the symmetric trigonal curves and the
//! signature-3 modular equations behind them.

mod es;
mod ramanujan;
mod solve;

pub use es::{es_solve, t_of_b, ESData, ESPair};
pub use ramanujan::{ramanujan_sum, RamanujanSeries};
pub use solve::{modular_partner, solve_ratio, solve_ratio_split};
