//! Brute-force reference solver for tiny canonical LPs.
//!
//! The feasible region `{x ≥ 0 : Ax ≤ b}` contains no line, so it is empty
//! iff it has no vertex, and the LP is unbounded iff it is feasible and some
//! extreme ray `d` of `{d ≥ 0 : Ad ≤ 0}` has `cᵗd > 0`. Extreme rays are the
//! vertices of that cone cut by `Σ d = 1`. Everything is found by solving
//! every square subsystem of tight constraints.

use num_traits::{One, Signed, Zero};

use crate::lp::LpProblem;
use crate::numeric::{dot, Rational, Vector};
use crate::simplex::SolveStatus;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexResult {
    pub status: SolveStatus,
    pub value: Option<Rational>,
    /// An optimal vertex, when one exists.
    pub x: Option<Vector>,
}

/// Constraint rows `aᵗx ≤ β`, including `-x_j ≤ 0`.
fn constraint_rows(lp: &LpProblem) -> Vec<(Vector, Rational)> {
    let n = lp.n();
    let mut rows: Vec<(Vector, Rational)> = (0..lp.m())
        .map(|i| (lp.a().row(i).to_vec(), lp.b()[i].clone()))
        .collect();
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = -Rational::one();
        rows.push((e, Rational::zero()));
    }
    rows
}

/// Unique solution of a square system, or `None` when singular.
pub fn solve_square(matrix: &[Vector], rhs: &[Rational]) -> Option<Vector> {
    let n = rhs.len();
    let mut m: Vec<Vector> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut aug = row.clone();
            aug.push(r.clone());
            aug
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (dst, src) in row.iter_mut().zip(&pivot_row) {
                *dst -= &factor * src;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

fn for_each_subset(total: usize, size: usize, mut f: impl FnMut(&[usize])) {
    if size > total {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + total - size) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Solves a canonical (`x ≥ 0`) LP by enumerating vertices and extreme rays.
pub fn enumerate(lp: &LpProblem) -> VertexResult {
    assert!(lp.nonneg(), "vertex enumeration requires x >= 0");
    let n = lp.n();
    let rows = constraint_rows(lp);

    let mut best: Option<(Rational, Vector)> = None;
    for_each_subset(rows.len(), n, |subset| {
        let a: Vec<Vector> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vector = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = solve_square(&a, &b) else {
            return;
        };
        if !rows.iter().all(|(r, beta)| dot(r, &x).unwrap() <= *beta) {
            return;
        }
        let value = dot(lp.c(), &x).unwrap();
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, x));
        }
    });
    let Some((value, x)) = best else {
        return VertexResult {
            status: SolveStatus::Infeasible,
            value: None,
            x: None,
        };
    };

    // Cone rows: Ad ≤ 0 and -d ≤ 0, plus the normalisation Σd = 1.
    let cone: Vec<Vector> = rows.iter().map(|(r, _)| r.clone()).collect();
    let mut improving_ray = false;
    for_each_subset(cone.len(), n - 1, |subset| {
        if improving_ray {
            return;
        }
        let mut a: Vec<Vector> = subset.iter().map(|&i| cone[i].clone()).collect();
        a.push(vec![Rational::one(); n]);
        let mut b = vec![Rational::zero(); n - 1];
        b.push(Rational::one());
        let Some(d) = solve_square(&a, &b) else {
            return;
        };
        if cone.iter().all(|r| !dot(r, &d).unwrap().is_positive())
            && dot(lp.c(), &d).unwrap().is_positive()
        {
            improving_ray = true;
        }
    });
    if improving_ray {
        VertexResult {
            status: SolveStatus::Unbounded,
            value: None,
            x: None,
        }
    } else {
        VertexResult {
            status: SolveStatus::Optimal,
            value: Some(value),
            x: Some(x),
        }
    }
}
