//! `skewclean`: analyze finite rings, decompose matrices of `T_n(R, σ)` and
//! run the verification suites.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use skewclean::ring::ring_from_spec;
use skewclean::theorems::{recheck_report, run_suite, sweep_report, ClaimReport, Status, Suite};
use skewclean::{Endomorphism, Error, SkewTriRing};

use config::{Command, FileConfig, Flags, Format, Method, RunConfig};
use output::{AnalysisPayload, AnalysisView, DecompositionPayload, DecompositionView, Envelope, ReportsPayload};

#[derive(Parser)]
#[command(name = "skewclean", version, about = "Strongly clean decompositions in skew triangular matrix rings over finite local rings")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Units, radical, idempotents and related data of a ring and σ.
    Analyze(Shared),
    /// Decompose one matrix of T_n(R, σ).
    Decompose {
        #[command(flatten)]
        shared: Shared,
        /// Upper triangle in row-major order, e.g. "[3,1,0;0,1;2]".
        #[arg(long)]
        matrix: Option<String>,
        /// Matrix size; inferred from --matrix when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        shared: Shared,
        /// One of 2.1, 3.1, 4.1, 2.6, corollaries, all.
        #[arg(long)]
        suite: Option<String>,
    },
    /// Check that every (or a sample of) matrix of T_n(R, σ) is strongly clean.
    Sweep {
        #[command(flatten)]
        shared: Shared,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Re-run the witnesses of a structured verify or sweep report.
    Recheck {
        /// File written by `--format structured`.
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Args)]
struct Shared {
    /// Ring spec such as zmod:4, dual:zmod:4, groupring:zmod:4;C2.
    #[arg(long)]
    ring: Option<String>,
    /// Endomorphism: id, negx, aug or table:<path>.
    #[arg(long)]
    sigma: Option<String>,
    /// Largest enumeration allowed for brute-force searches.
    #[arg(long)]
    budget: Option<u64>,
    /// Matrices checked when a sweep is sampled.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Largest space swept exhaustively; beyond it sweeps are sampled.
    #[arg(long)]
    sweep_limit: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// TOML file with defaults for any of these flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Report elapsed milliseconds; structured output is then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

/// Failure modes, mapped to exit codes.
enum Failure {
    /// Bad input: unparsable specs, literals, configuration, non-local rings.
    Usage(String),
    /// A claim failed or no decomposition exists; the output says which.
    Claim,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

fn resolve(command: Command, shared: Shared, n: Option<usize>, matrix: Option<String>, method: Option<Method>, suite: Option<String>) -> Result<RunConfig, String> {
    let file = match &shared.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let flags = Flags {
        ring: shared.ring,
        sigma: shared.sigma,
        n,
        matrix,
        method,
        suite,
        budget: shared.budget,
        sample: shared.sample,
        seed: shared.seed,
        sweep_limit: shared.sweep_limit,
        format: shared.format,
        timing: shared.timing,
    };
    RunConfig::resolve(command, flags, file)
}

fn build_sigma(cfg: &RunConfig) -> Result<Endomorphism, Error> {
    let ring = Arc::new(ring_from_spec(&cfg.ring)?);
    Endomorphism::from_spec(&ring, &cfg.sigma)
}

fn analyze(cfg: &RunConfig) -> Result<(), Failure> {
    let view = AnalysisView::new(&build_sigma(cfg)?);
    match cfg.format {
        Format::Text => print!("{}", view.to_text()),
        Format::Structured => println!("{}", Envelope::new(cfg, AnalysisPayload { analysis: view }).to_json()),
    }
    Ok(())
}

fn decompose(cfg: &RunConfig) -> Result<(), Failure> {
    let n = cfg.n.expect("decompose resolves n");
    let t = SkewTriRing::new(build_sigma(cfg)?, n)?.with_budget(cfg.budget);
    let a = t.parse_literal(cfg.matrix.as_deref().expect("decompose resolves matrix"))?;
    let found = match cfg.method.expect("decompose resolves method") {
        Method::Constructive if n > 3 => {
            return Err(Failure::Usage(format!("the constructive method covers n = 2 and 3, got n = {n}")))
        }
        Method::Constructive => {
            t.ring().require_local()?;
            t.decompose(&a)?
        }
        Method::BruteForce => t.brute_force_strongly_clean(&a)?,
        Method::VeryClean => t.is_very_clean(&a)?,
    };
    let checks = found.as_ref().map(|d| t.checklist(&a, d));
    let view = DecompositionView::new(&a, found.as_ref().zip(checks));
    match cfg.format {
        Format::Text => print!("{}", view.to_text()),
        Format::Structured => {
            println!("{}", Envelope::new(cfg, DecompositionPayload { decomposition: view }).to_json())
        }
    }
    match checks {
        Some(c) if c.all() => Ok(()),
        _ => Err(Failure::Claim),
    }
}

fn emit_reports(cfg: &RunConfig, mut reports: Vec<ClaimReport>) -> Result<(), Failure> {
    if !cfg.timing {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    match cfg.format {
        Format::Text => print!("{}", output::reports_text(&reports, cfg.timing)),
        Format::Structured => println!("{}", Envelope::new(cfg, ReportsPayload { reports: &reports }).to_json()),
    }
    if reports.iter().any(ClaimReport::fails) {
        Err(Failure::Claim)
    } else {
        Ok(())
    }
}

fn verify(cfg: &RunConfig) -> Result<(), Failure> {
    let suite: Suite = cfg.suite.as_deref().unwrap_or("all").parse()?;
    let reports = run_suite(&build_sigma(cfg)?, cfg.verify_config(), suite)?;
    emit_reports(cfg, reports)
}

fn sweep(cfg: &RunConfig) -> Result<(), Failure> {
    let report = sweep_report(&build_sigma(cfg)?, cfg.n.unwrap_or(2), cfg.verify_config())?;
    emit_reports(cfg, vec![report])
}

/// The parts of a structured report needed to rebuild the ring and σ.
#[derive(Deserialize)]
struct SavedReport {
    config: SavedConfig,
    reports: Vec<ClaimReport>,
}

#[derive(Deserialize)]
struct SavedConfig {
    ring: String,
    sigma: String,
    budget: u64,
}

fn recheck(path: &PathBuf) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let saved: SavedReport =
        serde_json::from_str(&text).map_err(|e| format!("{} is not a structured report: {e}", path.display()))?;
    let ring = Arc::new(ring_from_spec(&saved.config.ring)?);
    let sigma = Endomorphism::from_spec(&ring, &saved.config.sigma)?;
    let mut mismatches = 0;
    for r in &saved.reports {
        // a witness is present exactly when the claim failed, and it must still refute it
        let (verdict, ok) = match (r.status, recheck_report(r, &sigma, saved.config.budget)?) {
            (Status::Fails, Some(true)) => ("witness reproduced", true),
            (Status::Fails, Some(false)) => ("witness does not refute the claim", false),
            (Status::Fails, None) => ("failure without a witness", false),
            (_, None) => ("no witness, nothing to recheck", true),
            (_, Some(_)) => ("unexpected witness on a claim that did not fail", false),
        };
        mismatches += usize::from(!ok);
        println!("{:<24}  {:<7}  {verdict}", r.claim_id, format!("{:?}", r.status).to_lowercase());
    }
    println!("{} reports, {mismatches} inconsistent", saved.reports.len());
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Cmd::Analyze(shared) => analyze(&resolve(Command::Analyze, shared, None, None, None, None)?),
        Cmd::Decompose { shared, matrix, n, method } => {
            decompose(&resolve(Command::Decompose, shared, n, matrix, method, None)?)
        }
        Cmd::Verify { shared, suite } => verify(&resolve(Command::Verify, shared, None, None, None, suite)?),
        Cmd::Sweep { shared, n } => sweep(&resolve(Command::Sweep, shared, n, None, None, None)?),
        Cmd::Recheck { report } => recheck(&report),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
