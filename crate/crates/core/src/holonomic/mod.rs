//! P-recursive sequences in `(n, z)`: rational-function coefficients, forward
//! evaluation (exact or complex), the mirror recurrences and the Γ shells.

mod builtin;
mod parse;
mod poly;
mod recurrence;

pub use builtin::{gamma_recurrence, mirror_e, mirror_pi, shell_w, shell_w_recurrence, shell_wtilde};
pub(crate) use parse::{key_lines, parse_coeff_lines};
pub use parse::{parse_expr, parse_recurrence, Variables};
pub use poly::{Poly2, RationalFn, MAX_DEGREE};
pub use recurrence::{
    eval_sequence, eval_sequence_complex, sample_sequence, PRecurrence, SequenceIter, SequencePoint,
    EXTENDED_ITERATION_THRESHOLD,
};
