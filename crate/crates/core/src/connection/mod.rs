//! Connection constants: asymptotic shells, extrapolation and the integer
//! slope condition.

mod extrapolate;
mod shell;
mod slope;

pub use extrapolate::{
    estimate_connection_constant, extrapolate_sequence, mirror_limit_e, mirror_limit_pi, richardson,
    ConnectionEstimate, ExtrapolationConfig,
};
pub use shell::{shell_eval, AsymptoticShell, GammaFactor};
pub use slope::{slope_ratio, slope_ratio_numeric_check, SlopeRatioKind, SlopeRatioResult, SlopeRationalForm};
