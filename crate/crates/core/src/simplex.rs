//! Exact two-phase primal simplex on a dense rational tableau.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::lp::LpProblem;
use crate::numeric::{Matrix, Rational, Vector};
use crate::vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub x: Option<Vector>,
    pub value: Option<Rational>,
    pub pivot_count: usize,
}

impl SolveOutcome {
    fn without_point(status: SolveStatus, pivot_count: usize) -> Self {
        SolveOutcome {
            status,
            x: None,
            value: None,
            pivot_count,
        }
    }
}

/// Entering-variable rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Smallest improving index; never cycles.
    #[default]
    Bland,
    /// Largest reduced cost. Can cycle on degenerate problems.
    Dantzig,
}

pub fn solve(lp: &LpProblem) -> SolveOutcome {
    solve_with(lp, PivotRule::Bland)
}

/// Solves `lp`. Problems without sign constraints are handled by splitting
/// each variable into `x⁺ - x⁻`.
pub fn solve_with(lp: &LpProblem, rule: PivotRule) -> SolveOutcome {
    if lp.nonneg() {
        return solve_canonical(lp.a(), lp.b(), lp.c(), rule);
    }
    let n = lp.n();
    let a = lp.a();
    let rows: Vec<Vector> = (0..a.rows())
        .map(|i| {
            let row = a.row(i);
            row.iter().cloned().chain(row.iter().map(|v| -v)).collect()
        })
        .collect();
    let split = Matrix::from_rows(2 * n, rows).expect("split rows have 2n entries");
    let c: Vector = lp
        .c()
        .iter()
        .cloned()
        .chain(lp.c().iter().map(|v| -v))
        .collect();
    let mut outcome = solve_canonical(&split, lp.b(), &c, rule);
    if let Some(x) = outcome.x.take() {
        outcome.x = Some((0..n).map(|j| &x[j] - &x[n + j]).collect());
    }
    outcome
}

struct Tableau {
    rows: Vec<Vector>,
    rhs: Vector,
    basis: Vec<usize>,
    /// Reduced costs of the current objective; positive means improving.
    reduced: Vector,
    pivots: usize,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let factor = self.rows[i][e].clone();
            for (dst, src) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst -= &factor * src;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !self.reduced[e].is_zero() {
            let factor = self.reduced[e].clone();
            for (dst, src) in self.reduced.iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst -= &factor * src;
                }
            }
        }
        self.basis[r] = e;
        self.pivots += 1;
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let mut reduced = cost.to_vec();
        for (i, &bi) in self.basis.iter().enumerate() {
            let cb = &cost[bi];
            if cb.is_zero() {
                continue;
            }
            for (dst, src) in reduced.iter_mut().zip(&self.rows[i]) {
                *dst -= cb * src;
            }
        }
        self.reduced = reduced;
    }

    fn entering(&self, allowed: usize, rule: PivotRule) -> Option<usize> {
        let candidates = (0..allowed).filter(|&j| self.reduced[j].is_positive());
        match rule {
            PivotRule::Bland => candidates.min(),
            PivotRule::Dantzig => candidates.fold(None, |best: Option<usize>, j| match best {
                Some(b) if self.reduced[b] >= self.reduced[j] => Some(b),
                _ => Some(j),
            }),
        }
    }

    /// Minimum ratio test; ties go to the smallest basic variable index.
    fn leaving(&self, e: usize) -> Option<usize> {
        let mut best: Option<(Rational, usize)> = None;
        for i in 0..self.rows.len() {
            let coeff = &self.rows[i][e];
            if !coeff.is_positive() {
                continue;
            }
            let ratio = &self.rhs[i] / coeff;
            let better = match &best {
                None => true,
                Some((r, bi)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*bi]),
            };
            if better {
                best = Some((ratio, i));
            }
        }
        best.map(|(_, i)| i)
    }

    fn run(&mut self, allowed: usize, rule: PivotRule) -> PhaseEnd {
        while let Some(e) = self.entering(allowed, rule) {
            let Some(r) = self.leaving(e) else {
                return PhaseEnd::Unbounded;
            };
            self.pivot(r, e);
        }
        PhaseEnd::Optimal
    }

    fn basic_value(&self, j: usize) -> Rational {
        self.basis
            .iter()
            .position(|&bj| bj == j)
            .map_or_else(Rational::zero, |i| self.rhs[i].clone())
    }
}

/// Slack form `Ax + s = b`; rows with `b_i < 0` are negated and receive an
/// artificial variable, which phase I drives to zero.
fn solve_canonical(a: &Matrix, b: &[Rational], c: &[Rational], rule: PivotRule) -> SolveOutcome {
    let (m, n) = (a.rows(), a.cols());
    let negative: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let structural = n + m;
    let total = structural + negative.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); total];
        row[..n].clone_from_slice(a.row(i));
        row[n + i] = Rational::from_integer(1.into());
        if let Some(k) = negative.iter().position(|&r| r == i) {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            row[structural + k] = Rational::from_integer(1.into());
            rhs.push(-&b[i]);
            basis.push(structural + k);
        } else {
            rhs.push(b[i].clone());
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        reduced: Vec::new(),
        pivots: 0,
    };

    if !negative.is_empty() {
        let mut phase_one = vec![Rational::zero(); total];
        for v in &mut phase_one[structural..] {
            *v = Rational::from_integer((-1).into());
        }
        t.set_objective(&phase_one);
        // Phase I is bounded above by zero.
        t.run(total, rule);
        let infeasibility: Rational = (structural..total).map(|j| t.basic_value(j)).sum();
        if infeasibility.is_positive() {
            return SolveOutcome::without_point(SolveStatus::Infeasible, t.pivots);
        }
        // Artificials still basic sit at level zero; swap them out or drop
        // their (redundant) rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= structural {
                match (0..structural).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut cost = vec![Rational::zero(); total];
    cost[..n].clone_from_slice(c);
    t.set_objective(&cost);
    match t.run(structural, rule) {
        PhaseEnd::Unbounded => SolveOutcome::without_point(SolveStatus::Unbounded, t.pivots),
        PhaseEnd::Optimal => {
            let x: Vector = (0..n).map(|j| t.basic_value(j)).collect();
            let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
            SolveOutcome {
                status: SolveStatus::Optimal,
                x: Some(x),
                value: Some(value),
                pivot_count: t.pivots,
            }
        }
    }
}

/// Rechecks an outcome. Optimal points must be feasible with the stated
/// value. For `n ≤ 3` and `m ≤ 6` the status and optimal value are also
/// compared with exhaustive vertex enumeration.
pub fn certify(lp: &LpProblem, outcome: &SolveOutcome) -> bool {
    if outcome.status == SolveStatus::Optimal {
        let (Some(x), Some(value)) = (&outcome.x, &outcome.value) else {
            return false;
        };
        let consistent = lp.is_feasible(x).unwrap_or(false)
            && lp.evaluate_utility(x).map(|v| v == *value).unwrap_or(false);
        if !consistent {
            return false;
        }
    } else if outcome.x.is_some() || outcome.value.is_some() {
        return false;
    }
    if lp.n() <= 3 && lp.m() <= 6 && lp.nonneg() {
        let reference = vertex::enumerate(lp);
        return reference.status == outcome.status && reference.value == outcome.value;
    }
    true
}
