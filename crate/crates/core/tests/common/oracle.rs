//! Brute-force reference solver for tiny canonical LPs.
//!
//! The feasible region lies in the nonnegative orthant, so it is pointed:
//! nonempty iff it has a vertex, and unbounded above iff some extreme ray of
//! the recession cone `{d >= 0, A d <= 0}` increases the objective. Vertices
//! and rays are found by exhausting subsets of tight constraints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use symlp::LpProblem;

type Q = BigRational;

#[derive(Debug, Clone, PartialEq)]
pub enum Reference {
    Optimal(Q),
    Infeasible,
    Unbounded,
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (v, p) in m[r].iter_mut().zip(pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn subsets(total: usize, size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(
        start: usize,
        total: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..total {
            if total - i < size - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, total, size, cur, f);
            cur.pop();
        }
    }
    go(0, total, size, &mut Vec::new(), f);
}

/// Constraint rows `g x <= h` including the sign constraints `-x_j <= 0`.
fn constraints(lp: &LpProblem) -> (Vec<Vec<Q>>, Vec<Q>) {
    let n = lp.n();
    let mut g: Vec<Vec<Q>> = (0..lp.m()).map(|i| lp.a().row(i).to_vec()).collect();
    let mut h: Vec<Q> = lp.b().to_vec();
    for j in 0..n {
        let mut row = vec![Q::zero(); n];
        row[j] = -Q::one();
        g.push(row);
        h.push(Q::zero());
    }
    (g, h)
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn satisfies(g: &[Vec<Q>], h: &[Q], x: &[Q]) -> bool {
    g.iter().zip(h).all(|(row, rhs)| dot(row, x) <= *rhs)
}

pub fn vertices(lp: &LpProblem) -> Vec<Vec<Q>> {
    let n = lp.n();
    let (g, h) = constraints(lp);
    let mut out = Vec::new();
    subsets(g.len(), n, &mut |idx| {
        let mut aug: Vec<Vec<Q>> = idx
            .iter()
            .map(|&i| {
                let mut r = g[i].clone();
                r.push(h[i].clone());
                r
            })
            .collect();
        let pivots = rref(&mut aug, n);
        if pivots.len() < n {
            return;
        }
        let x: Vec<Q> = aug.iter().map(|r| r[n].clone()).collect();
        if satisfies(&g, &h, &x) && !out.contains(&x) {
            out.push(x);
        }
    });
    out
}

/// Extreme rays of the recession cone, one free coordinate scaled to ±1.
pub fn extreme_rays(lp: &LpProblem) -> Vec<Vec<Q>> {
    let n = lp.n();
    let (g, _) = constraints(lp);
    let zero = vec![Q::zero(); g.len()];
    let mut out = Vec::new();
    subsets(g.len(), n - 1, &mut |idx| {
        let mut m: Vec<Vec<Q>> = idx.iter().map(|&i| g[i].clone()).collect();
        let pivots = rref(&mut m, n);
        if pivots.len() != n - 1 {
            return;
        }
        let free = (0..n).find(|c| !pivots.contains(c)).unwrap();
        let mut d = vec![Q::zero(); n];
        d[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            d[p] = -m[r][free].clone();
        }
        for cand in [d.clone(), d.iter().map(|v| -v).collect::<Vec<_>>()] {
            if satisfies(&g, &zero, &cand) && !out.contains(&cand) {
                out.push(cand);
            }
        }
    });
    out
}

pub fn solve(lp: &LpProblem) -> Reference {
    assert!(lp.nonneg(), "reference solver handles x >= 0 only");
    let vs = vertices(lp);
    if vs.is_empty() {
        return Reference::Infeasible;
    }
    if extreme_rays(lp)
        .iter()
        .any(|d| dot(lp.c(), d).is_positive())
    {
        return Reference::Unbounded;
    }
    let best = vs.iter().map(|x| dot(lp.c(), x)).max().unwrap();
    Reference::Optimal(best)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
