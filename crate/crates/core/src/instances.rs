//! Small reference instances used by tests, the acceptance suite and the
//! README walkthrough.

use crate::lp::LpProblem;
use crate::numeric::{int, ratio, Matrix};

/// Four variables, four rows, utility `(1, 1, 2, 2)`; symmetric under
/// swapping `x₁ ↔ x₂` together with `x₃ ↔ x₄`.
pub fn lambda0() -> LpProblem {
    LpProblem::canonical(
        Matrix::from_i64(&[&[1, 1, 0, 0], &[0, 0, 1, 1], &[1, 0, 1, 0], &[0, 1, 0, 1]]),
        vec![int(1), int(2), int(3), int(3)],
        vec![int(1), int(1), int(2), int(2)],
    )
    .unwrap()
}

/// `max x₁ + x₂` with `x₁ ≤ 2.5`, `x₂ ≤ 2.5`, `x₁ + x₂ ≤ 3.7`.
pub fn two_variable_example() -> LpProblem {
    LpProblem::canonical(
        Matrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]),
        vec![ratio(5, 2), ratio(5, 2), ratio(37, 10)],
        vec![int(1), int(1)],
    )
    .unwrap()
}

/// `max x₁ + x₂` with the single row `x₁ + x₂ ≤ 2`.
pub fn redundant_base() -> LpProblem {
    LpProblem::canonical(
        Matrix::from_i64(&[&[1, 1]]),
        vec![int(2)],
        vec![int(1), int(1)],
    )
    .unwrap()
}

/// Four variables whose detected group has orbits `{1,2}` and `{3,4}` but
/// whose retract gains a further swap symmetry, so two reduction rounds
/// reach dimension one.
pub fn nested_symmetry() -> LpProblem {
    LpProblem::canonical(
        Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, -1], &[0, 0, -1, 2]]),
        vec![int(1), int(1), int(1), int(1)],
        vec![int(1), int(1), int(1), int(1)],
    )
    .unwrap()
}
