//! Command line front end. Exit codes: 0 success, 1 counterexample or
//! inconsistent certificate, 2 usage or input error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::{run_sweep, Property, SweepConfig, SweepReport};
use crate::certify::{certify_with, Certificate, CertifyOptions};
use crate::graph::{graph6, make_named, NamedGraph};
use crate::hamilton::ORACLE_CAP;
use crate::spectral::DEFAULT_TOLERANCE;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hamspec", version, about = "Spectral Hamiltonicity certificates and small-graph sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify a single graph given in graph6.
    Check {
        graph6: String,
        /// Print the certificate as JSON instead of a summary.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 20)]
        oracle_cap: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Sweep all labeled graphs of one order, or a graph6 corpus.
    Verify {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        n: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON lines report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = ORACLE_CAP)]
        oracle_cap: usize,
        /// Comma-separated subset of properties to check.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
    },
    /// Print an extremal graph and its certificate.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::V)]
        kind: Kind,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    /// K_{n-1} plus an isolated vertex.
    V,
    /// K_{n-1} plus a pendant edge.
    E,
}

/// Runs the CLI on `args` (including the program name).
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Check {
            graph6: text,
            json,
            oracle_cap,
            tolerance,
        } => {
            check_tolerance(tolerance)?;
            let g = graph6::decode(&text).map_err(|e| format!("invalid graph6 '{text}': {e}"))?;
            let cert = certify_with(
                &g,
                &CertifyOptions {
                    run_oracle: true,
                    oracle_cap,
                    refine_to: Some(tolerance),
                    refine_complement: true,
                },
            );
            if json {
                print_json(out, &cert)?;
            } else {
                print_summary(out, &text, &cert).map_err(|e| e.to_string())?;
            }
            Ok(if cert.consistent == Some(false) {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
        Command::Verify {
            n,
            file,
            jobs,
            out: output,
            tolerance,
            seed,
            oracle_cap,
            properties,
        } => {
            let mut config = match (n, file) {
                (Some(n), None) => SweepConfig::exhaustive(n),
                (None, Some(path)) => SweepConfig::corpus(path),
                _ => return Err("give exactly one of --n and --file".into()),
            };
            if let Some(jobs) = jobs {
                config.jobs = jobs;
            }
            config.tolerance = tolerance;
            config.seed = seed;
            config.oracle_cap = oracle_cap;
            config.output = output;
            if !properties.is_empty() {
                config.properties = properties
                    .iter()
                    .map(|p| p.trim().parse::<Property>())
                    .collect::<crate::Result<BTreeSet<_>>>()
                    .map_err(|e| e.to_string())?;
            }
            let report = run_sweep(&config).map_err(|e| e.to_string())?;
            print_report(out, &report).map_err(|e| e.to_string())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Extremal { n, kind } => {
            let named = match kind {
                Kind::V => NamedGraph::CliquePlusIsolated,
                Kind::E => NamedGraph::CliquePlusPendant,
            };
            let g = make_named(named, n).map_err(|e| e.to_string())?;
            let cert = certify_with(&g, &CertifyOptions::default());
            writeln!(out, "{}", graph6::encode(&g)).map_err(|e| e.to_string())?;
            print_json(out, &cert)?;
            Ok(if cert.consistent == Some(false) {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
    }
}

fn check_tolerance(t: f64) -> Result<(), String> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(format!("tolerance must be positive, got {t}"))
    }
}

fn print_json(out: &mut dyn Write, cert: &Certificate) -> Result<(), String> {
    let text = serde_json::to_string_pretty(cert).map_err(|e| e.to_string())?;
    writeln!(out, "{text}").map_err(|e| e.to_string())
}

fn verdict_label<T: serde::Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => "?".into(),
    }
}

fn print_summary(out: &mut dyn Write, text: &str, cert: &Certificate) -> std::io::Result<()> {
    writeln!(out, "graph      {text} (n = {}, m = {})", cert.n, cert.m)?;
    writeln!(
        out,
        "mu         [{:.12}, {:.12}]{}",
        cert.mu_bound.lo,
        cert.mu_bound.hi,
        if cert.mu_bound.resolved_exactly { " exact tie" } else { "" }
    )?;
    writeln!(
        out,
        "mu(comp)   [{:.12}, {:.12}]{}",
        cert.mu_comp_bound.lo,
        cert.mu_comp_bound.hi,
        if cert.mu_comp_bound.resolved_exactly { " exact tie" } else { "" }
    )?;
    writeln!(out, "extremal   {}", verdict_label(&cert.extremal))?;
    writeln!(
        out,
        "radius     path {}, cycle {}",
        verdict_label(&cert.thm1_path),
        verdict_label(&cert.thm1_cycle)
    )?;
    writeln!(
        out,
        "complement path {}, cycle {}",
        verdict_label(&cert.thm2_path),
        verdict_label(&cert.thm2_cycle)
    )?;
    writeln!(
        out,
        "ore        path {}, cycle {}",
        verdict_label(&cert.ore.path),
        verdict_label(&cert.ore.cycle)
    )?;
    writeln!(out, "edges      {}", verdict_label(&cert.fact1))?;
    match (cert.oracle_path, cert.oracle_cycle, cert.consistent) {
        (Some(p), Some(c), Some(ok)) => {
            writeln!(out, "oracle     path {p}, cycle {c}")?;
            writeln!(out, "consistent {ok}")
        }
        _ => writeln!(out, "oracle     skipped (n above cap)"),
    }
}

fn print_report(out: &mut dyn Write, report: &SweepReport) -> std::io::Result<()> {
    writeln!(
        out,
        "{}: {} graphs, {} boundary cases, {} counterexamples, {} input errors, {:.2}s",
        report.source,
        report.graphs_checked,
        report.equality_boundary_cases.len(),
        report.counterexamples.len(),
        report.input_errors.len(),
        report.wall_time
    )?;
    for (key, count) in &report.verdict_counts {
        writeln!(out, "  {key}: {count}")?;
    }
    for c in report.counterexamples.iter().take(20) {
        writeln!(out, "COUNTEREXAMPLE {} {}: {}", c.graph6, c.property, c.detail)?;
    }
    for e in &report.input_errors {
        writeln!(out, "input error at line {}: {}", e.line, e.message)?;
    }
    writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" })
}
