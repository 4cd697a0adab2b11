//! Command-line front end: table calculus, verification suites and
//! classification verdicts with deterministic, machine-readable output.
//!
//! Exit codes: 0 success / suite passed, 1 suite failed, 2 usage, parse or
//! enumeration-bound errors.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::process::ExitCode;
use thompson_core::classification::{
    cocf_check, cor28_decide, prop24_search, CocfOutcome, Verdict,
};
use thompson_core::coeff::{Triple, DEFAULT_MAX_GROUP};
use thompson_core::error::Error;
use thompson_core::suites::{run_suite, SUITE_NAMES};
use thompson_core::{CPoint, NormalizerElement, VElement};

/// Default seed used by the randomized suites when none is given.
const DEFAULT_SEED: u64 = 20240915;

#[derive(Parser)]
#[command(
    name = "thompson",
    about = "Exact calculus for Thompson-like fraction groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on elements of Thompson's group V.
    V(VArgs),
    /// Run a registered verification suite.
    Check(CheckArgs),
    /// Classification verdicts between two coefficient triples.
    Classify(ClassifyArgs),
}

#[derive(Args)]
struct VArgs {
    #[command(subcommand)]
    op: VOp,
}

#[derive(Subcommand)]
enum VOp {
    /// Compose two tables (the second is applied first).
    Compose { left: String, right: String },
    /// Invert a table.
    Invert { table: String },
    /// Reduce a table to its canonical form.
    Reduce { table: String },
    /// Apply a table to an eventually periodic point.
    Apply {
        table: String,
        #[arg(long)]
        at: String,
    },
    /// Slope exponent log2 v'(x) at a point.
    Slope {
        table: String,
        #[arg(long)]
        at: String,
    },
    /// Smallest of F, T, V containing the element.
    Member { table: String },
}

#[derive(Args)]
struct CheckArgs {
    /// Suite name (see --list).
    #[arg(long)]
    suite: Option<String>,
    /// List the registered suites and exit.
    #[arg(long)]
    list: bool,
    /// Seed for the randomized cases.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of randomized cases per law.
    #[arg(long, default_value_t = 200)]
    iters: usize,
    /// Coefficient triple file (JSON); defaults to the suite's fixtures.
    #[arg(long)]
    triple: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Left triple file (JSON).
    #[arg(long)]
    left: String,
    /// Right triple file (JSON).
    #[arg(long)]
    right: String,
    /// Decision procedure: prop24, cor28 or cocf.
    #[arg(long)]
    mode: String,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: String,
    cases: usize,
    failures: Vec<String>,
    seed: u64,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct ClassifyReport {
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct WitnessReport {
    beta: Vec<usize>,
    sigma: String,
    h0: usize,
    h1: usize,
}

fn enumeration_bound() -> usize {
    std::env::var("THOMPSON_MAX_GROUP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP)
}

fn load_triple(path: &str) -> Result<Triple, Error> {
    let text = std::fs::read_to_string(path)?;
    Triple::from_json(&text)
}

fn run_v(args: &VArgs) -> Result<(), Error> {
    match &args.op {
        VOp::Compose { left, right } => {
            let l: VElement = left.parse()?;
            let r: VElement = right.parse()?;
            println!("{}", l.compose(&r));
        }
        VOp::Invert { table } => {
            let v: VElement = table.parse()?;
            println!("{}", v.inverse());
        }
        VOp::Reduce { table } => {
            let v: VElement = table.parse()?;
            println!("{v}");
        }
        VOp::Apply { table, at } => {
            let v: NormalizerElement = table.parse()?;
            let x: CPoint = at.parse()?;
            println!("{}", v.apply(&x));
        }
        VOp::Slope { table, at } => {
            let v: VElement = table.parse()?;
            let x: CPoint = at.parse()?;
            let s = v.slope_at(&x);
            if s > 0 {
                println!("+{s}");
            } else {
                println!("{s}");
            }
        }
        VOp::Member { table } => {
            let v: VElement = table.parse()?;
            let class = if v.is_in_f() {
                "F"
            } else if v.is_in_t() {
                "T"
            } else {
                "V"
            };
            println!("{class}");
        }
    }
    Ok(())
}

fn run_check(args: &CheckArgs) -> Result<bool, Error> {
    if args.list {
        for name in SUITE_NAMES {
            println!("{name}");
        }
        return Ok(true);
    }
    let name = args.suite.as_deref().ok_or_else(|| {
        Error::Unsupported("missing --suite (use --list to see the registry)".into())
    })?;
    if !SUITE_NAMES.contains(&name) {
        return Err(Error::Unsupported(format!("unknown suite {name:?}")));
    }
    let triple = args.triple.as_deref().map(load_triple).transpose()?;
    let started = std::time::Instant::now();
    let mut outcome = run_suite(name, triple.as_ref(), args.seed, args.iters)?;
    outcome.failures.sort();
    let report = SuiteReport {
        suite: name.to_string(),
        cases: outcome.cases,
        failures: outcome.failures.clone(),
        seed: args.seed,
        notes: outcome.notes.clone(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serialises")
    );
    eprintln!(
        "suite {name}: {} cases, {} failures, elapsed {:.2?}",
        outcome.cases,
        outcome.failures.len(),
        started.elapsed()
    );
    Ok(outcome.passed())
}

fn run_classify(args: &ClassifyArgs) -> Result<(), Error> {
    let left = load_triple(&args.left)?;
    let right = load_triple(&args.right)?;
    let bound = enumeration_bound();
    let report = match args.mode.as_str() {
        "prop24" => match prop24_search(&left, &right, bound)? {
            Some(w) => ClassifyReport {
                verdict: "WitnessFound".into(),
                witness: Some(WitnessReport {
                    beta: w.beta.image().to_vec(),
                    sigma: if w.swap { "swap" } else { "id" }.into(),
                    h0: w.h0,
                    h1: w.h1,
                }),
                reason: None,
            },
            None => ClassifyReport {
                verdict: "NotFound".into(),
                witness: None,
                reason: Some(
                    "no witness for the sufficient condition; not a non-isomorphism proof".into(),
                ),
            },
        },
        "cor28" => {
            let verdict = cor28_decide(&left, &right, bound)?;
            ClassifyReport {
                verdict: match verdict {
                    Verdict::Isomorphic => "Isomorphic".into(),
                    Verdict::NotIsomorphic => "NotIsomorphic".into(),
                    Verdict::Inconclusive => "Inconclusive".into(),
                },
                witness: None,
                reason: Some("inner-automorphism criterion".into()),
            }
        }
        "cocf" => match cocf_check(&left, &right, bound)? {
            CocfOutcome::Holds => ClassifyReport {
                verdict: "Holds".into(),
                witness: None,
                reason: None,
            },
            CocfOutcome::Fails(reason) => ClassifyReport {
                verdict: "Fails".into(),
                witness: None,
                reason: Some(reason),
            },
        },
        other => {
            return Err(Error::Unsupported(format!(
                "unknown mode {other:?} (expected prop24, cor28 or cocf)"
            )))
        }
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serialises")
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<bool, Error> = match &cli.command {
        Command::V(args) => run_v(args).map(|_| true),
        Command::Check(args) => run_check(args),
        Command::Classify(args) => run_classify(args).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
