//! Exact arithmetic: big rationals, factorial-type sequences and the
//! arithmetic-duality linear forms.

mod bigrat;
mod combinatorics;
mod duality;

pub use bigrat::BigRat;
pub use combinatorics::{derangement, derangements, double_factorial, factorial, pochhammer};
pub use duality::{duality_form_e, duality_form_pi, duality_forms_e, duality_forms_pi, LinearFormE, LinearFormPi};
