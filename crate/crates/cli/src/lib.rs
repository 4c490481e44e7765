//! Command-line driver for the q-series identity verifier.

pub mod dsl;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qsv_core::rational::parse as parse_rational;
use qsv_core::registry::{find, registry, VerifyMode};
use qsv_core::verify::{run_lineage, run_suite, summarize, Plan};
use qsv_core::{Args, Rational};

use crate::dsl::{eval_expression, parse_expression, EvalMode};
use crate::report::{emit, Report, RunInfo};

/// Exit status when every selected check passes.
pub const EXIT_OK: i32 = 0;
/// Exit status when some check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for bad arguments, unknown ids and unparsable expressions.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qsv", version, about = "Exact verification of q-series identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Formal,
    Analytic,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify registry identities over sampled bindings.
    Suite {
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        /// Restrict to these identity ids (repeatable).
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Series order for formal checks.
        #[arg(long, default_value_t = 40)]
        order: i64,
        /// Largest N for finite identities.
        #[arg(long, default_value_t = 6)]
        n_max: i64,
        /// Bindings per identity (per N for exact ones); defaults to 20 for
        /// exact and 10 for formal and analytic identities.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads.
        #[arg(long)]
        workers: Option<usize>,
        /// Skip specialization, correction and coherence checks.
        #[arg(long)]
        no_lineage: bool,
    },
    /// Evaluate an expression as a series or at a point.
    Eval {
        #[arg(long)]
        expr: String,
        /// Expand through q^K.
        #[arg(long, conflicts_with = "point", required_unless_present = "point")]
        series: Option<i64>,
        /// Evaluate at q = Q.
        #[arg(long)]
        point: Option<String>,
        /// Parameter values, `name=p/q` (repeatable).
        #[arg(long = "bind")]
        binds: Vec<String>,
    },
    /// List registry ids.
    List,
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("qsv: {msg}");
    EXIT_USAGE
}

fn parse_q(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational"))
}

/// Runs a parsed command and returns the process exit status.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::List => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            for i in registry() {
                if writeln!(out, "{:<16} {:<9} {}", i.id, i.mode, i.title).is_err() {
                    break;
                }
            }
            EXIT_OK
        }
        Command::Eval { expr, series, point, binds } => {
            let ast = match parse_expression(&expr) {
                Ok(a) => a,
                Err(e) => return usage(e),
            };
            let mut binding = Args::new();
            for b in &binds {
                let Some((k, v)) = b.split_once('=') else {
                    return usage(format!("binding `{b}` is not name=value"));
                };
                match parse_q(v.trim()) {
                    Ok(v) => binding.set(k.trim(), v),
                    Err(e) => return usage(e),
                }
            }
            let mode = match (series, point) {
                (Some(k), _) if k < 0 => return usage("series order must be non-negative"),
                (Some(k), _) => EvalMode::Series(k),
                (None, Some(q)) => match parse_q(&q) {
                    Ok(q) => EvalMode::Point(q),
                    Err(e) => return usage(e),
                },
                (None, None) => return usage("one of --series or --point is required"),
            };
            match eval_expression(&ast, &mode, &binding) {
                Ok(v) => {
                    println!("{v}");
                    EXIT_OK
                }
                Err(e) => usage(e),
            }
        }
        Command::Suite { mode, ids, order, n_max, samples, seed, format, out, workers, no_lineage } => {
            for id in &ids {
                if find(id).is_none() {
                    return usage(format!("unknown identity `{id}`"));
                }
            }
            if order < 0 || n_max < 1 {
                return usage("--order must be >= 0 and --n-max >= 1");
            }
            let modes = match mode {
                ModeArg::Exact => vec![VerifyMode::Exact],
                ModeArg::Formal => vec![VerifyMode::Formal],
                ModeArg::Analytic => vec![VerifyMode::Analytic],
                ModeArg::All => Vec::new(),
            };
            let mut plan = Plan { seed, order, n_max, modes, ids, workers, ..Plan::default() };
            if let Some(s) = samples {
                plan.exact_samples = s;
                plan.formal_samples = s;
                plan.analytic_samples = s;
            }
            let mut reports = run_suite(&plan);
            if mode == ModeArg::All && !no_lineage {
                reports.extend(run_lineage(&plan));
            }
            let run = RunInfo {
                seed,
                order,
                n_max,
                timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
                version: env!("CARGO_PKG_VERSION").to_string(),
            };
            let report = Report::new(run, &reports);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if let Err(e) = emit(&text, out.as_deref()) {
                return usage(e);
            }
            if summarize(&reports).all_passed() {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
    }
}
