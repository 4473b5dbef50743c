//! Linear programs in canonical form `max cᵗx  s.t.  Ax ≤ b, x ≥ 0`.

use num_traits::{Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::numeric::{dot, Matrix, Rational, Vector};

/// A linear program `max cᵗx` subject to `Ax ≤ b` and, when `nonneg` is
/// set, `x ≥ 0`.
///
/// Sign constraints are a flag rather than explicit rows so that row
/// permutations of a symmetry only ever range over the rows of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    a: Matrix,
    b: Vector,
    c: Vector,
    nonneg: bool,
}

impl LpProblem {
    /// Validates shapes and requires `c ≠ 0`. Zero-row systems are allowed.
    pub fn new(a: Matrix, b: Vector, c: Vector, nonneg: bool) -> Result<Self> {
        check_len("LpProblem: rows of A vs b", a.rows(), b.len())?;
        check_len("LpProblem: columns of A vs c", a.cols(), c.len())?;
        if c.iter().all(Zero::is_zero) {
            return Err(Error::ZeroUtility);
        }
        Ok(LpProblem { a, b, c, nonneg })
    }

    /// Canonical form with `x ≥ 0`.
    pub fn canonical(a: Matrix, b: Vector, c: Vector) -> Result<Self> {
        LpProblem::new(a, b, c, true)
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    pub fn nonneg(&self) -> bool {
        self.nonneg
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// Number of inequality rows.
    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn evaluate_utility(&self, x: &[Rational]) -> Result<Rational> {
        check_len("evaluate_utility", self.n(), x.len())?;
        dot(&self.c, x)
    }

    /// Exact test of `Ax ≤ b` and, if required, `x ≥ 0`.
    pub fn is_feasible(&self, x: &[Rational]) -> Result<bool> {
        check_len("is_feasible", self.n(), x.len())?;
        if self.nonneg && x.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        let ax = self.a.mul_vec(x)?;
        Ok(ax.iter().zip(&self.b).all(|(lhs, rhs)| lhs <= rhs))
    }

    /// Index of the first violated row, if any. Sign violations are reported
    /// as `None` from this helper; use [`is_feasible`](Self::is_feasible)
    /// for the full test.
    pub fn first_violated_row(&self, x: &[Rational]) -> Result<Option<usize>> {
        let ax = self.a.mul_vec(x)?;
        Ok(ax.iter().zip(&self.b).position(|(lhs, rhs)| lhs > rhs))
    }

    /// Stacks the inequality system of `bottom` below that of `top`. The
    /// utility vector and sign flag are taken from `top`.
    pub fn stack_systems(top: &LpProblem, bottom: &LpProblem) -> Result<LpProblem> {
        check_len("stack_systems", top.n(), bottom.n())?;
        let a = top.a.vstack(&bottom.a)?;
        let mut b = top.b.clone();
        b.extend(bottom.b.iter().cloned());
        LpProblem::new(a, b, top.c.clone(), top.nonneg)
    }

    /// Appends a single row `coeffs · x ≤ rhs`.
    pub fn with_row(&self, coeffs: Vector, rhs: Rational) -> Result<LpProblem> {
        let extra = LpProblem {
            a: Matrix::from_rows(self.n(), vec![coeffs])?,
            b: vec![rhs],
            c: self.c.clone(),
            nonneg: self.nonneg,
        };
        LpProblem::stack_systems(self, &extra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{lambda0, redundant_base, two_variable_example};
    use crate::numeric::{int, ratio};

    #[test]
    fn utility_of_worked_example_points() {
        let lp = lambda0();
        let x = vec![ratio(1, 2), ratio(1, 2), int(1), int(1)];
        assert_eq!(lp.evaluate_utility(&x).unwrap(), int(5));
        assert_eq!(lp.evaluate_utility(&vec![int(0); 4]).unwrap(), int(0));

        let lp = two_variable_example();
        let x = vec![ratio(37, 20), ratio(37, 20)];
        assert_eq!(lp.evaluate_utility(&x).unwrap(), ratio(37, 10));
    }

    #[test]
    fn feasibility_checks() {
        let lp = lambda0();
        assert!(lp
            .is_feasible(&[ratio(1, 2), ratio(1, 2), int(1), int(1)])
            .unwrap());
        assert!(!lp.is_feasible(&[int(1), int(1), int(0), int(0)]).unwrap());
        assert_eq!(
            lp.first_violated_row(&[int(1), int(1), int(0), int(0)])
                .unwrap(),
            Some(0)
        );
        assert!(!lp.is_feasible(&[int(-1), int(0), int(0), int(0)]).unwrap());
    }

    #[test]
    fn sign_flag_controls_negative_points() {
        let lp =
            LpProblem::new(Matrix::from_i64(&[&[1]]), vec![int(1)], vec![int(1)], false).unwrap();
        assert!(lp.is_feasible(&[int(-5)]).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let lp = lambda0();
        assert!(lp.evaluate_utility(&[int(1)]).is_err());
        assert!(lp.is_feasible(&[int(1)]).is_err());
    }

    #[test]
    fn zero_utility_rejected() {
        let err = LpProblem::canonical(Matrix::zeros(0, 2), vec![], vec![int(0), int(0)]);
        assert_eq!(err, Err(Error::ZeroUtility));
    }

    #[test]
    fn stacking_concatenates_rows() {
        let lp = lambda0();
        let stacked = LpProblem::stack_systems(&lp, &lp).unwrap();
        assert_eq!(stacked.m(), 8);
        assert_eq!(stacked.a().row(5), lp.a().row(1));
        assert_eq!(stacked.b()[6], lp.b()[2]);

        let empty = LpProblem::canonical(Matrix::zeros(0, 4), vec![], lp.c().to_vec()).unwrap();
        assert_eq!(LpProblem::stack_systems(&lp, &empty).unwrap(), lp);

        let other = redundant_base();
        assert!(LpProblem::stack_systems(&lp, &other).is_err());
    }
}
