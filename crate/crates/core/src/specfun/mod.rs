//! Special functions behind the curve constants.

mod elliptic;
mod gamma;
mod hypergeom;
mod richelot;
mod weierstrass;

pub use elliptic::{ellip_e, ellip_k, EllipticModulus};
pub use gamma::{beta_integral, beta_q, gamma_q};
pub use hypergeom::{
    hyp2f1_unit, hyp2f1_unit_split, hyp_euler_integral, hyp_ratio, hyp_ratio_split, Signature,
};
pub use richelot::richelot_periods;
pub use weierstrass::{weier_half_period, WeierstrassInvariants};
