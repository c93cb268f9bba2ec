//! The order-2 additive Gamma functions `f` (e-world) and `g` (π-world):
//! explicit evaluation, functional-equation residuals, regularity
//! classification and growth/uniqueness probes.

mod eval;
mod probe;
mod spec;

pub use eval::{a_function, f_eval, f_eval_confluent, f_eval_gamma_route, g_eval};
pub use probe::{
    afe_grid_sweep, duality_check_e, duality_check_pi, f_route_sweep, growth_probe, near_pole_set, uniqueness_probe,
    DualityRow, GridSpec, GridSweep, GrowthNormalization, GrowthSample, UniquenessReport, POLE_RADIUS,
};
pub use spec::{afe_relative_residual, afe_residual, afe_terms, classify_regularity, AGFSpec, RegularityClass};
