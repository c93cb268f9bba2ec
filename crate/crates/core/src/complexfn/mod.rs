//! Complex special functions at configurable working precision.

mod cnum;
mod dd;
mod gamma;
mod precision;
mod real;
mod series;

pub use cnum::{parse_complex, CNum, C64};
pub use dd::Dd;
pub use gamma::{gamma, gamma_ratio, log_gamma, rgamma};
pub use precision::PrecisionConfig;
pub use real::Real;
pub(crate) use series::sum_series;
pub use series::{hyp1f1, lower_incomplete_gamma, principal_log, principal_pow};
