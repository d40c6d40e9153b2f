//! Spectral curves `P(η, ζ) = 0` in `TP¹` and the checks run on them.

mod charge2;
mod constants;
mod cycles;
mod differentials;
mod reality;
mod spectral;
mod table1;
mod trigonal;

pub use charge2::{
    charge2_es_check, charge2_es_check_scaled, charge2_periods, charge2_roots, residual_of,
    Charge2Check, Charge2Periods, MAX_COEFF,
};
pub use constants::{a3, a3_beta_form, a4, a4_beta_form, a7, a7_beta_form};
pub use cycles::{primitive_check, CycleRelation};
pub use differentials::{holomorphic_basis, holomorphic_basis_for_charge, DifferentialDescriptor};
pub use reality::{check_h1, h1_transform, H1Report, H1Violation};
pub use spectral::{CoefficientEntry, CurveFile, SpectralCurve};
pub use table1::{build_table1, Sign, Table1Params};
pub use trigonal::{build_symmetric_trigonal, trigonal_from_data};
