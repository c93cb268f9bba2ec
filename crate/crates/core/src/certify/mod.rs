//! Holonomic-triangle certificates: exact power-series checks of the
//! generating-function ODEs, quadrature of the defining integrals and the
//! identity chains that tie them to `f` and `g`.

mod chain;
mod ode;
mod quad;
mod report;
mod series;

pub use chain::{identity_chain_e, identity_chain_pi, transfer_check, World, CHAIN_TOLERANCE};
pub use ode::{
    closed_form_u0, generating_series, ode_check_mutated, ode_residual_e, ode_residual_gamma, ode_residual_pi,
    ode_series_check_e, ode_series_check_gamma, ode_series_check_pi, OdeCheck,
};
pub use quad::{integrate, quad_i, quad_j, quad_l, QuadratureResult, MAX_SUBDIVISIONS};
pub use report::CertReport;
pub use series::PowerSeries;
