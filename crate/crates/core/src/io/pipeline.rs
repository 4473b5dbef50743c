//! End-to-end driver: parse, verify or detect, reduce, solve, lift, and
//! re-verify in the original coordinates.

use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::format::{parse_generators_file, parse_lp_file};
use crate::error::Error;
use crate::group::{group_closure, orbits_from_generators, Permutation, DEFAULT_CLOSURE_LIMIT};
use crate::lp::LpProblem;
use crate::numeric::{format_rational, Rational};
use crate::reduction::{iterate_reduce, IteratedReduction};
use crate::simplex::{solve, SolveStatus};
use crate::symmetry::{
    all_verified, detect_symmetries, verify_group, DetectOptions, SymmetryReport,
};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error: {0}")]
    Parse(Error),

    #[error("generator {} is not a symmetry ({:?})", failing_generator(.0), failing_reason(.0))]
    VerificationFailed(Vec<SymmetryReport>),

    #[error("{0}")]
    Detection(Error),

    #[error(transparent)]
    Internal(#[from] Error),
}

fn failing(reports: &[SymmetryReport]) -> Option<&SymmetryReport> {
    reports.iter().find(|r| !r.verdict())
}

fn failing_generator(reports: &[SymmetryReport]) -> String {
    failing(reports).map_or_else(String::new, |r| r.candidate.to_cycle_string())
}

fn failing_reason(reports: &[SymmetryReport]) -> Option<crate::symmetry::SymmetryReason> {
    failing(reports).map(|r| r.reason)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Maximum number of reduce rounds; `1` reduces once.
    pub rounds: usize,
    pub closure_limit: usize,
    pub detect: DetectOptions,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            rounds: 1,
            closure_limit: DEFAULT_CLOSURE_LIMIT,
            detect: DetectOptions::default(),
        }
    }
}

/// Rationals are serialised as exact `p/q` (or `p`) strings.
fn q(value: &Rational) -> String {
    format_rational(value)
}

fn qs(values: &[Rational]) -> Vec<String> {
    values.iter().map(q).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub coefficients: Vec<String>,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportLp {
    pub n: usize,
    pub m: usize,
    pub objective: Vec<String>,
    pub rows: Vec<ReportRow>,
    pub nonneg: bool,
}

impl From<&LpProblem> for ReportLp {
    fn from(lp: &LpProblem) -> Self {
        ReportLp {
            n: lp.n(),
            m: lp.m(),
            objective: qs(lp.c()),
            rows: (0..lp.m())
                .map(|i| ReportRow {
                    coefficients: qs(lp.a().row(i)),
                    rhs: q(&lp.b()[i]),
                })
                .collect(),
            nonneg: lp.nonneg(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageReport {
    /// Dimension before this round.
    pub n: usize,
    pub symmetries: Vec<String>,
    /// 1-based orbits in the coordinates of the LP reduced in this round.
    pub orbits: Vec<Vec<usize>>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub feasible: bool,
    pub utility: String,
    pub matches_value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub input_digest: String,
    /// `"supplied"` or `"detected"`.
    pub generator_source: String,
    pub generators: Vec<String>,
    /// Order of the group generated, when it fits in the closure limit.
    pub group_order: Option<usize>,
    /// 1-based orbits of the original variables under the first-round group.
    pub orbits: Vec<Vec<usize>>,
    /// Dimension of the LP actually solved.
    pub k: usize,
    pub rounds: usize,
    pub stages: Vec<StageReport>,
    pub reduced_lp: ReportLp,
    pub status: SolveStatus,
    pub reduced_solution: Option<Vec<String>>,
    pub value: Option<String>,
    pub lifted_solution: Option<Vec<String>>,
    pub verification: Option<Verification>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Plain-text summary for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input      {}\n", self.input_digest));
        out.push_str(&format!(
            "symmetries {} ({}): {}\n",
            self.generator_source,
            self.group_order
                .map_or_else(|| "order unknown".to_string(), |o| format!("order {o}")),
            if self.generators.is_empty() {
                "()".to_string()
            } else {
                self.generators.join(", ")
            }
        ));
        out.push_str(&format!("orbits     {}\n", format_orbits(&self.orbits)));
        out.push_str(&format!("k          {}\n", self.k));
        out.push_str(&format!("rounds     {}\n", self.rounds));
        out.push_str(&format!("status     {:?}\n", self.status));
        if let Some(y) = &self.reduced_solution {
            out.push_str(&format!("y*         ({})\n", y.join(", ")));
        }
        if let Some(x) = &self.lifted_solution {
            out.push_str(&format!("x*         ({})\n", x.join(", ")));
        }
        if let Some(v) = &self.value {
            out.push_str(&format!("value      {v}\n"));
        }
        if let Some(v) = &self.verification {
            out.push_str(&format!(
                "verified   feasible={} utility={} matches={}\n",
                v.feasible, v.utility, v.matches_value
            ));
        }
        out
    }

    /// True when an optimal lifted solution re-verified in the original LP.
    pub fn verified(&self) -> bool {
        self.verification
            .as_ref()
            .is_some_and(|v| v.feasible && v.matches_value)
    }
}

pub fn format_orbits(orbits: &[Vec<usize>]) -> String {
    orbits
        .iter()
        .map(|b| {
            let parts: Vec<String> = b.iter().map(usize::to_string).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn input_digest(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

/// Symmetries used for the first round: supplied generators after
/// verification, or the detected group.
#[derive(Debug, Clone)]
pub struct SymmetrySource {
    pub supplied: bool,
    pub generators: Vec<Permutation>,
    pub group_order: Option<usize>,
}

pub fn resolve_symmetries(
    lp: &LpProblem,
    gens_text: Option<&str>,
    options: &PipelineOptions,
) -> Result<SymmetrySource, PipelineError> {
    match gens_text {
        Some(text) => {
            let generators = parse_generators_file(text, lp.n()).map_err(PipelineError::Parse)?;
            let reports = verify_group(lp, &generators)?;
            if !all_verified(&reports) {
                return Err(PipelineError::VerificationFailed(reports));
            }
            let group_order = group_closure(&generators, lp.n(), options.closure_limit)
                .ok()
                .map(|g| g.len());
            Ok(SymmetrySource {
                supplied: true,
                generators,
                group_order,
            })
        }
        None => {
            let elements =
                detect_symmetries(lp, options.detect).map_err(PipelineError::Detection)?;
            let group_order = Some(elements.len());
            Ok(SymmetrySource {
                supplied: false,
                generators: elements.into_iter().filter(|g| !g.is_identity()).collect(),
                group_order,
            })
        }
    }
}

/// Runs the reduction rounds only.
pub fn reduce_text(
    lp: &LpProblem,
    gens_text: Option<&str>,
    options: &PipelineOptions,
) -> Result<(SymmetrySource, IteratedReduction), PipelineError> {
    let source = resolve_symmetries(lp, gens_text, options)?;
    let reduction = iterate_reduce(lp, Some(&source.generators), options.rounds, options.detect)?;
    Ok((source, reduction))
}

/// Full pipeline on in-memory file contents.
pub fn run_pipeline_text(
    lp_text: &str,
    gens_text: Option<&str>,
    options: &PipelineOptions,
) -> Result<RunReport, PipelineError> {
    let lp = parse_lp_file(lp_text).map_err(PipelineError::Parse)?;
    let (source, reduction) = reduce_text(&lp, gens_text, options)?;
    let orbits = orbits_from_generators(&source.generators, lp.n())?;

    let solved = &reduction.final_lp;
    let outcome = solve(solved);
    let (lifted, verification) = match &outcome.x {
        Some(y) => {
            let x = reduction.lift(y)?;
            // Recomputed against the original LP, independent of the stages.
            let utility = lp.evaluate_utility(&x)?;
            let verification = Verification {
                feasible: lp.is_feasible(&x)?,
                matches_value: Some(&utility) == outcome.value.as_ref(),
                utility: q(&utility),
            };
            (Some(qs(&x)), Some(verification))
        }
        None => (None, None),
    };

    let stages = reduction
        .stages
        .iter()
        .map(|stage| {
            let n = stage.reduced.original_n;
            let orbits = orbits_from_generators(&stage.symmetries, n)?;
            Ok(StageReport {
                n,
                symmetries: stage
                    .symmetries
                    .iter()
                    .filter(|g| !g.is_identity())
                    .map(Permutation::to_cycle_string)
                    .collect(),
                orbits: orbits.to_one_based(),
                k: stage.reduced.maps.k(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;

    Ok(RunReport {
        input_digest: input_digest(lp_text),
        generator_source: if source.supplied {
            "supplied"
        } else {
            "detected"
        }
        .to_string(),
        generators: source
            .generators
            .iter()
            .map(Permutation::to_cycle_string)
            .collect(),
        group_order: source.group_order,
        orbits: orbits.to_one_based(),
        k: solved.n(),
        rounds: reduction.rounds(),
        stages,
        reduced_lp: ReportLp::from(solved),
        status: outcome.status,
        reduced_solution: outcome.x.as_deref().map(qs),
        value: outcome.value.as_ref().map(q),
        lifted_solution: lifted,
        verification,
    })
}

pub fn read_file(path: &Path) -> Result<String, PipelineError> {
    std::fs::read_to_string(path).map_err(|e| PipelineError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Full pipeline on files.
pub fn run_pipeline(
    lp_path: &Path,
    gens_path: Option<&Path>,
    options: &PipelineOptions,
) -> Result<RunReport, PipelineError> {
    let lp_text = read_file(lp_path)?;
    let gens_text = gens_path.map(read_file).transpose()?;
    run_pipeline_text(&lp_text, gens_text.as_deref(), options)
}
