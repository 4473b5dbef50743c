use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symlp::group::{decompose_signed_permutation, orbits_from_generators, DEFAULT_CLOSURE_LIMIT};
use symlp::io::{
    emit_lp_file, format_orbits, parse_lp_file, parse_matrix_file, read_file, reduce_text,
    resolve_symmetries, run_pipeline, PipelineError, PipelineOptions,
};
use symlp::simplex::SolveStatus;
use symlp::symmetry::{is_lp_symmetry, SymmetryReport};
use symlp::{Error, LpProblem};

const EXIT_FAILURE: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_UNBOUNDED: u8 = 3;
const EXIT_VERIFICATION: u8 = 4;
const EXIT_PARSE: u8 = 5;

const CLOSURE_LIMIT_VAR: &str = "SYMLP_CLOSURE_LIMIT";

/// Detect, verify and exploit permutation symmetries of linear programs.
#[derive(Parser)]
#[command(name = "symlp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of the full symmetry group (n ≤ 10).
    Detect {
        lp: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check that each supplied generator is a symmetry.
    Verify {
        lp: PathBuf,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the orbit partition of the variables.
    Orbits {
        lp: PathBuf,
        #[arg(long)]
        gens: Option<PathBuf>,
    },
    /// Write the reduced LP.
    Reduce {
        lp: PathBuf,
        #[arg(long)]
        gens: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
    },
    /// Reduce, solve exactly and lift the solution back.
    Solve {
        lp: PathBuf,
        #[arg(long)]
        gens: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        #[arg(long)]
        json: bool,
    },
    /// Factor a signed permutation matrix as a sign diagonal times a permutation.
    DecomposeSigned { matrix: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        let code = match &e {
            PipelineError::Parse(_) => EXIT_PARSE,
            PipelineError::VerificationFailed(_) => EXIT_VERIFICATION,
            _ => EXIT_FAILURE,
        };
        let mut message = e.to_string();
        if let PipelineError::Detection(Error::DimensionTooLarge { .. }) = e {
            message.push_str(" (pass --gens <file>)");
        }
        Failure::new(code, message)
    }
}

fn options(rounds: usize) -> Result<PipelineOptions, Failure> {
    let closure_limit = match std::env::var(CLOSURE_LIMIT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::new(
                EXIT_FAILURE,
                format!("{CLOSURE_LIMIT_VAR} must be a positive integer, got {v:?}"),
            )
        })?,
        Err(_) => DEFAULT_CLOSURE_LIMIT,
    };
    Ok(PipelineOptions {
        rounds,
        closure_limit,
        ..PipelineOptions::default()
    })
}

fn load_lp(path: &Path) -> Result<LpProblem, Failure> {
    let text = read_file(path)?;
    parse_lp_file(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn read_optional(path: Option<&PathBuf>) -> Result<Option<String>, Failure> {
    Ok(path.map(|p| read_file(p)).transpose()?)
}

fn report_json(report: &SymmetryReport) -> serde_json::Value {
    serde_json::json!({
        "candidate": report.candidate.to_cycle_string(),
        "verdict": report.verdict(),
        "reason": report.reason,
        "witness_sigma": report.witness_sigma.as_ref().map(|s| s.to_cycle_string()),
    })
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Detect { lp, json } => {
            let lp = load_lp(&lp)?;
            let opts = options(1)?;
            let elements = symlp::symmetry::detect_symmetries(&lp, opts.detect)
                .map_err(|e| Failure::from(PipelineError::Detection(e)))?;
            let cycles: Vec<String> = elements.iter().map(|g| g.to_cycle_string()).collect();
            let orbits = orbits_from_generators(&elements, lp.n()).map_err(PipelineError::from)?;
            let out = if json {
                serde_json::to_string_pretty(&serde_json::json!({
                    "order": elements.len(),
                    "elements": cycles,
                    "orbits": orbits.to_one_based(),
                }))
                .expect("json")
                    + "\n"
            } else {
                let mut s = format!("order {}\n", elements.len());
                for c in cycles {
                    s.push_str(&c);
                    s.push('\n');
                }
                s
            };
            Ok((out, 0))
        }
        Command::Verify { lp, gens, json } => {
            let lp = load_lp(&lp)?;
            let text = read_file(&gens)?;
            let generators = symlp::io::parse_generators_file(&text, lp.n())
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", gens.display())))?;
            let reports = generators
                .iter()
                .map(|g| is_lp_symmetry(&lp, g))
                .collect::<Result<Vec<_>, _>>()
                .map_err(PipelineError::from)?;
            let ok = reports.iter().all(SymmetryReport::verdict);
            let out = if json {
                let items: Vec<_> = reports.iter().map(report_json).collect();
                serde_json::to_string_pretty(&serde_json::json!({ "ok": ok, "reports": items }))
                    .expect("json")
                    + "\n"
            } else {
                let mut s = String::new();
                for r in &reports {
                    match &r.witness_sigma {
                        Some(sigma) => s.push_str(&format!(
                            "{} ok rows {}\n",
                            r.candidate,
                            sigma.to_cycle_string()
                        )),
                        None => s.push_str(&format!("{} fail {:?}\n", r.candidate, r.reason)),
                    }
                }
                s
            };
            Ok((out, if ok { 0 } else { EXIT_VERIFICATION }))
        }
        Command::Orbits { lp, gens } => {
            let lp = load_lp(&lp)?;
            let gens_text = read_optional(gens.as_ref())?;
            let source = resolve_symmetries(&lp, gens_text.as_deref(), &options(1)?)?;
            let orbits =
                orbits_from_generators(&source.generators, lp.n()).map_err(PipelineError::from)?;
            Ok((
                format!(
                    "k {}\n{}\n",
                    orbits.k(),
                    format_orbits(&orbits.to_one_based())
                ),
                0,
            ))
        }
        Command::Reduce {
            lp,
            gens,
            out,
            iterate,
        } => {
            let problem = load_lp(&lp)?;
            let gens_text = read_optional(gens.as_ref())?;
            let (_, reduction) = reduce_text(&problem, gens_text.as_deref(), &options(iterate)?)?;
            let text = emit_lp_file(&reduction.final_lp, None);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| {
                        Failure::new(
                            EXIT_FAILURE,
                            format!("cannot write {}: {e}", path.display()),
                        )
                    })?;
                    Ok((String::new(), 0))
                }
                None => Ok((text, 0)),
            }
        }
        Command::Solve {
            lp,
            gens,
            iterate,
            json,
        } => {
            let report = run_pipeline(&lp, gens.as_deref(), &options(iterate)?)?;
            let code = match report.status {
                SolveStatus::Optimal if report.verified() => 0,
                SolveStatus::Optimal => EXIT_VERIFICATION,
                SolveStatus::Infeasible => EXIT_INFEASIBLE,
                SolveStatus::Unbounded => EXIT_UNBOUNDED,
            };
            let out = if json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            Ok((out, code))
        }
        Command::DecomposeSigned { matrix } => {
            let text = read_file(&matrix)?;
            let m = parse_matrix_file(&text)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", matrix.display())))?;
            match decompose_signed_permutation(&m) {
                Ok(sp) => {
                    let signs: Vec<String> = sp.signs.iter().map(i8::to_string).collect();
                    Ok((
                        format!("signs {}\npermutation {}\n", signs.join(" "), sp.perm),
                        0,
                    ))
                }
                Err(e) => Err(Failure::new(EXIT_VERIFICATION, e.to_string())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            // One write so the whole document lands together.
            let _ = stdout.write_all(out.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("symlp: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
