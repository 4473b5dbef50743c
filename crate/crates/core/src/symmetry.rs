//! Verification and discovery of permutation symmetries.
//!
//! A column permutation `g` is a symmetry of `max cᵗx, Ax ≤ b` when `cᵍ = c`
//! and some row permutation `σ` gives `P_σ·A·P_g = A` and `b^σ = b`. All
//! comparisons are exact.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::group::Permutation;
use crate::lp::LpProblem;
use crate::numeric::{Matrix, Rational, Vector};

/// Largest `n` accepted by [`full_symmetry_group`] by default.
pub const DEFAULT_DETECTION_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymmetryReason {
    Ok,
    UtilityVectorMoved,
    NoRowMatching,
}

/// Outcome of checking one candidate permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub candidate: Permutation,
    pub reason: SymmetryReason,
    /// Row permutation certifying the symmetry; present iff `reason` is `Ok`.
    pub witness_sigma: Option<Permutation>,
}

impl SymmetryReport {
    pub fn verdict(&self) -> bool {
        self.reason == SymmetryReason::Ok
    }
}

/// Rows tagged with their right-hand side, in a form that sorts and compares
/// exactly.
fn tagged_rows(
    rows: impl Iterator<Item = Vector>,
    b: &[Rational],
) -> Vec<(Vector, Rational, usize)> {
    rows.zip(b)
        .enumerate()
        .map(|(i, (r, bi))| (r, bi.clone(), i))
        .collect()
}

/// Finds `σ` with `P_σ·(A·P_g) = A` and `b^σ = b`, if one exists.
///
/// Row `i` of `A·P_g` tagged with `b_i` must be matched to a row `j` of `A`
/// tagged with `b_j`; `σ(i) = j`. Both tagged row lists are sorted and
/// paired in order, so identical rows are matched by ascending index.
pub fn find_row_permutation(
    a: &Matrix,
    b: &[Rational],
    g: &Permutation,
) -> Result<Option<Permutation>> {
    check_len("find_row_permutation: rows vs b", a.rows(), b.len())?;
    check_len("find_row_permutation: columns vs g", a.cols(), g.degree())?;
    let permuted = (0..a.rows()).map(|i| {
        let row = a.row(i);
        (0..a.cols())
            .map(|j| row[g.apply(j)].clone())
            .collect::<Vector>()
    });
    let mut lhs = tagged_rows(permuted, b);
    let mut rhs = tagged_rows(a.row_vectors().into_iter(), b);
    lhs.sort();
    rhs.sort();
    let mut images = vec![0; a.rows()];
    for (l, r) in lhs.iter().zip(&rhs) {
        if l.0 != r.0 || l.1 != r.1 {
            return Ok(None);
        }
        images[l.2] = r.2;
    }
    Ok(Some(Permutation::from_images(images)?))
}

pub fn is_lp_symmetry(lp: &LpProblem, g: &Permutation) -> Result<SymmetryReport> {
    check_len("is_lp_symmetry", lp.n(), g.degree())?;
    let report = |reason, witness_sigma| SymmetryReport {
        candidate: g.clone(),
        reason,
        witness_sigma,
    };
    if g.act(lp.c())? != lp.c() {
        return Ok(report(SymmetryReason::UtilityVectorMoved, None));
    }
    Ok(match find_row_permutation(lp.a(), lp.b(), g)? {
        Some(sigma) => report(SymmetryReason::Ok, Some(sigma)),
        None => report(SymmetryReason::NoRowMatching, None),
    })
}

/// Independent recomputation of a positive report: `cᵍ = c`,
/// `P_σ·A·P_g = A` and `P_σ b = b` by explicit matrix products.
pub fn recompose_witness(lp: &LpProblem, report: &SymmetryReport) -> Result<bool> {
    let Some(sigma) = &report.witness_sigma else {
        return Ok(false);
    };
    let g = &report.candidate;
    let lhs = sigma.matrix().mul(lp.a())?.mul(&g.matrix())?;
    Ok(lhs == *lp.a() && sigma.act(lp.b())? == lp.b() && g.act(lp.c())? == lp.c())
}

/// One report per generator.
pub fn verify_group(lp: &LpProblem, gens: &[Permutation]) -> Result<Vec<SymmetryReport>> {
    gens.iter().map(|g| is_lp_symmetry(lp, g)).collect()
}

pub fn all_verified(reports: &[SymmetryReport]) -> bool {
    reports.iter().all(SymmetryReport::verdict)
}

/// Limits for [`full_symmetry_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectOptions {
    /// Largest accepted number of variables.
    pub cap: usize,
    /// For `n` up to this value the backtracking result is cross-checked
    /// against exhaustive enumeration of `S_n`.
    pub naive_threshold: usize,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            cap: DEFAULT_DETECTION_CAP,
            naive_threshold: 0,
        }
    }
}

/// Every element of the full symmetry group of `lp`, sorted by image array.
pub fn full_symmetry_group(lp: &LpProblem, naive_threshold: usize) -> Result<Vec<Permutation>> {
    detect_symmetries(
        lp,
        DetectOptions {
            naive_threshold,
            ..DetectOptions::default()
        },
    )
}

pub fn detect_symmetries(lp: &LpProblem, options: DetectOptions) -> Result<Vec<Permutation>> {
    let n = lp.n();
    if n > options.cap {
        return Err(Error::DimensionTooLarge {
            n,
            cap: options.cap,
        });
    }
    let found = Backtracker::new(lp).run()?;
    if n <= options.naive_threshold {
        let naive = naive_symmetry_group(lp)?;
        if naive != found {
            return Err(Error::DetectionMismatch {
                backtrack: found.len(),
                naive: naive.len(),
            });
        }
    }
    Ok(found)
}

/// Exhaustive filter of all `n!` permutations through [`is_lp_symmetry`].
pub fn naive_symmetry_group(lp: &LpProblem) -> Result<Vec<Permutation>> {
    let n = lp.n();
    let mut images: Vec<usize> = (0..n).collect();
    let mut found = BTreeSet::new();
    loop {
        let g = Permutation::from_images(images.clone())?;
        if is_lp_symmetry(lp, &g)?.verdict() {
            found.insert(g);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Depth-first assignment of column images `g(0), g(1), …`.
///
/// A column may only map to a column with the same utility coefficient and
/// the same multiset of entries. After each assignment the rows of `A`
/// restricted to the assigned columns, tagged with `b`, must still match as
/// multisets; that is necessary for a full row matching. Complete candidates
/// are confirmed with [`find_row_permutation`].
struct Backtracker<'a> {
    lp: &'a LpProblem,
    allowed: Vec<Vec<usize>>,
    /// Row prefixes of `A` (columns `0..t`) tagged with `b`, sorted, per `t`.
    target_prefixes: Vec<Vec<(Rational, Vector)>>,
    found: Vec<Permutation>,
}

impl<'a> Backtracker<'a> {
    fn new(lp: &'a LpProblem) -> Self {
        let n = lp.n();
        let a = lp.a();
        let sorted_column = |j: usize| {
            let mut col = a.column(j);
            col.sort();
            col
        };
        let signatures: Vec<(Rational, Vector)> = (0..n)
            .map(|j| (lp.c()[j].clone(), sorted_column(j)))
            .collect();
        let allowed = (0..n)
            .map(|i| (0..n).filter(|&j| signatures[j] == signatures[i]).collect())
            .collect();
        let target_prefixes = (0..=n)
            .map(|t| {
                let cols: Vec<usize> = (0..t).collect();
                Self::prefixes(lp, &cols)
            })
            .collect();
        Backtracker {
            lp,
            allowed,
            target_prefixes,
            found: Vec::new(),
        }
    }

    fn prefixes(lp: &LpProblem, cols: &[usize]) -> Vec<(Rational, Vector)> {
        let a = lp.a();
        let mut rows: Vec<(Rational, Vector)> = (0..a.rows())
            .map(|r| {
                let row = a.row(r);
                (
                    lp.b()[r].clone(),
                    cols.iter().map(|&j| row[j].clone()).collect(),
                )
            })
            .collect();
        rows.sort();
        rows
    }

    fn run(mut self) -> Result<Vec<Permutation>> {
        let n = self.lp.n();
        let mut assignment = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend(&mut assignment, &mut used)?;
        self.found.sort();
        Ok(self.found)
    }

    fn extend(&mut self, assignment: &mut Vec<usize>, used: &mut [bool]) -> Result<()> {
        let depth = assignment.len();
        if depth == self.lp.n() {
            let g = Permutation::from_images(assignment.clone())?;
            if is_lp_symmetry(self.lp, &g)?.verdict() {
                self.found.push(g);
            }
            return Ok(());
        }
        for idx in 0..self.allowed[depth].len() {
            let j = self.allowed[depth][idx];
            if used[j] {
                continue;
            }
            assignment.push(j);
            if Self::prefixes(self.lp, assignment) == self.target_prefixes[depth + 1] {
                used[j] = true;
                self.extend(assignment, used)?;
                used[j] = false;
            }
            assignment.pop();
        }
        Ok(())
    }
}
