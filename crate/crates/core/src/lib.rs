//! Additive Gamma functions (AGFs).
//!
//! The crate evaluates the e/π mirror recurrences exactly, extracts their
//! connection constants by extrapolation, evaluates the explicit formulas for
//! the order-2 AGFs `f` and `g` in the complex plane, checks their additive
//! functional equations, decides the integer slope condition symbolically and
//! verifies the generating-function ODE certificates as exact power-series
//! identities.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`exact`] | [`BigRat`], factorials, derangements, the e- and π-world linear forms |
//! | [`complexfn`] | [`Real`] scalars (`f64`, double-double [`Dd`]), [`CNum`], Γ, γ(a,x), ₁F₁ |
//! | [`holonomic`] | Rational functions in `(n, z)`, [`PRecurrence`] and the built-in recurrences |
//! | [`connection`] | Asymptotic shells, Richardson extrapolation, the slope-ratio decision |
//! | [`agf`] | `f(z)`, `g(z)`, AFE specs, residuals, regularity and growth probes |
//! | [`certify`] | Power series, ODE certificates, quadrature and identity chains |

pub mod agf;
pub mod certify;
pub mod complexfn;
pub mod connection;
mod error;
pub mod exact;
pub mod holonomic;
mod scalar;

pub use complexfn::{CNum, Dd, PrecisionConfig, Real};
pub use error::{Error, Result};
pub use exact::BigRat;
pub use holonomic::{PRecurrence, RationalFn};

pub use scalar::Scalar;
