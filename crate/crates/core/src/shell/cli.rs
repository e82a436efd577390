//! Command-line surface.
//!
//! Exit codes: 0 when every computation completed (numerical verdicts that
//! come out false are reported as data), 1 when a structural check or an
//! exact identity fails or the root finder does not converge, 2 for bad
//! input or usage.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::catalog::{demo_catalog, load_catalog, LoadOptions};
use super::report::{
    artin_report, bound_reports, full_report, invariants_report, miracle_entry, rank3_report,
    report_scatter, scatter_rows, to_json, write_csv, zeta_report, ExactIdentities, ScatterRow,
    Settings,
};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::highrank::bundle;
use crate::rhcheck::{rh_verdict, BoundReport, RhVerdict, DEFAULT_PRECISION, DEFAULT_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nazeta",
    version,
    about = "Exact rank-n zetas of curves over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Validate curves and print their Artin zeta functions.
    Artin,
    /// Rank-n zeta, numerator and invariants.
    Zeta,
    /// α and β invariants by every available route.
    Invariants,
    /// Riemann hypothesis verdicts for the rank-n numerators.
    Rh,
    /// Interval-certified inequality checks.
    Bounds,
    /// Counting-miracle identities up to `--max-rank`.
    Miracle,
    /// The rank-3 decomposition, its line checks and ratio predicates.
    Rank3,
    /// Everything above in one document.
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Curve catalog (JSON); the built-in demo catalog when omitted.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    /// Restrict to one curve of the catalog.
    #[arg(long, global = true)]
    pub curve: Option<String>,
    #[arg(long, global = true, conflicts_with = "ranks")]
    pub rank: Option<usize>,
    /// Inclusive range `A..B`.
    #[arg(long, global = true, value_parser = parse_ranks)]
    pub ranks: Option<RankRange>,
    #[arg(long = "max-rank", global = true, default_value_t = 5)]
    pub max_rank: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Predicate samples per side of each threshold.
    #[arg(long, global = true, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Treat a non-prime-power q as an input error instead of a warning.
    #[arg(long, global = true)]
    pub reject_non_prime_power: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankRange {
    pub start: usize,
    pub end: usize,
}

pub fn parse_ranks(s: &str) -> std::result::Result<RankRange, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let start: usize = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let end: usize = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if start == 0 || start > end {
        return Err(format!("need 1 <= A <= B, got {s:?}"));
    }
    Ok(RankRange { start, end })
}

impl Options {
    fn ranks(&self) -> Vec<usize> {
        match (self.rank, self.ranks) {
            (Some(n), _) => vec![n],
            (None, Some(r)) => (r.start..=r.end).collect(),
            (None, None) => vec![1, 2, 3],
        }
    }

    fn settings(&self) -> Settings {
        Settings {
            precision_bits: self.precision,
            tolerance: self.tolerance,
            samples: self.samples,
            seed: self.seed,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::StructureViolation(_)
        | Error::NonConvergence { .. }
        | Error::NonIntegralExponent { .. }
        | Error::HigherOrderPole(_)
        | Error::PoleEvaluation(_)
        | Error::ZeroDenominator
        | Error::PoleAtOrigin => EXIT_MATH,
        _ => EXIT_INPUT,
    }
}

fn select_curves(o: &Options) -> Result<Vec<Curve>> {
    let catalog = match &o.catalog {
        Some(p) => load_catalog(
            p,
            LoadOptions {
                reject_non_prime_power: o.reject_non_prime_power,
            },
        )?,
        None => demo_catalog(),
    };
    if !catalog.errors.is_empty() {
        let msgs = catalog
            .errors
            .iter()
            .map(|e| format!("entry {} ({}): {}", e.index, e.name, e.message))
            .collect();
        return Err(Error::Entries(msgs));
    }
    match &o.curve {
        None => Ok(catalog.curves),
        Some(name) => {
            catalog.get(name).cloned().map(|c| vec![c]).ok_or_else(|| {
                Error::InvalidCurve(format!("no curve named {name:?} in the catalog"))
            })
        }
    }
}

#[derive(Serialize)]
struct RhEntry {
    curve: String,
    rank: usize,
    #[serde(flatten)]
    verdict: RhVerdict,
}

#[derive(Serialize)]
struct BoundsEntry {
    curve: String,
    rank: usize,
    reports: Vec<BoundReport>,
}

struct Output {
    json: String,
    rows: Vec<ScatterRow>,
    failures: Vec<String>,
}

fn output<T: Serialize>(v: &T, rows: Vec<ScatterRow>, failures: Vec<String>) -> Result<Output> {
    Ok(Output {
        json: to_json(v)?,
        rows,
        failures,
    })
}

fn compute(cmd: Command, o: &Options, curves: &[Curve]) -> Result<Output> {
    let ranks = o.ranks();
    let s = o.settings();
    match cmd {
        Command::Artin => {
            let v: Vec<_> = curves.iter().map(artin_report).collect();
            output(&v, vec![], vec![])
        }
        Command::Zeta => {
            let mut v = Vec::new();
            for c in curves {
                for &n in &ranks {
                    v.push(zeta_report(c, &bundle(c, n)?));
                }
            }
            output(&v, vec![], vec![])
        }
        Command::Invariants => {
            let mut v = Vec::new();
            for c in curves {
                for &n in &ranks {
                    v.push(invariants_report(c, &bundle(c, n)?)?);
                }
            }
            let f = v.failures();
            output(&v, vec![], f)
        }
        Command::Rh => {
            let mut v = Vec::new();
            let mut rows = Vec::new();
            for c in curves {
                for &n in &ranks {
                    let verdict = rh_verdict(&bundle(c, n)?, s.tolerance, s.precision_bits)?;
                    rows.extend(scatter_rows(c.name(), n, "rh", &verdict));
                    v.push(RhEntry {
                        curve: c.name().to_string(),
                        rank: n,
                        verdict,
                    });
                }
            }
            output(&v, rows, vec![])
        }
        Command::Bounds => {
            let mut v = Vec::new();
            for c in curves {
                for &n in &ranks {
                    v.push(BoundsEntry {
                        curve: c.name().to_string(),
                        rank: n,
                        reports: bound_reports(c, &bundle(c, n)?),
                    });
                }
            }
            output(&v, vec![], vec![])
        }
        Command::Miracle => {
            let mut v = Vec::new();
            for c in curves {
                for n in 1..=o.max_rank {
                    v.push(miracle_entry(c, n)?);
                }
            }
            let f = v.failures();
            output(&v, vec![], f)
        }
        Command::Rank3 => {
            let mut v = Vec::new();
            let mut rows = Vec::new();
            for c in curves {
                let r = rank3_report(c, &s)?;
                rows.extend(scatter_rows(c.name(), 3, "third_line", &r.third_line));
                rows.extend(scatter_rows(c.name(), 3, "rh", &r.full_rh));
                v.push(r);
            }
            output(&v, rows, vec![])
        }
        Command::Report => {
            let r = full_report(curves, &ranks, &s)?;
            let f = r.failures();
            output(&r, report_scatter(&r), f)
        }
    }
}

fn write_to(path: Option<&Path>, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match path {
        Some(p) => {
            let mut file =
                File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            f(&mut file)
        }
        None => f(&mut io::stdout().lock()),
    }
}

fn emit(o: &Options, out: &Output) -> Result<()> {
    let json = |w: &mut dyn Write| -> Result<()> { Ok(w.write_all(out.json.as_bytes())?) };
    let csv = |w: &mut dyn Write| write_csv(&out.rows, w);
    match o.emit {
        Emit::Json => write_to(o.out.as_deref(), json),
        Emit::Csv => write_to(o.out.as_deref(), csv),
        Emit::Both => {
            let p = o
                .out
                .as_deref()
                .ok_or_else(|| Error::DomainViolation("--emit both needs --out".into()))?;
            write_to(Some(p), json)?;
            write_to(Some(&p.with_extension("csv")), csv)
        }
    }
}

fn execute(cli: &Cli) -> Result<Vec<String>> {
    let curves = select_curves(&cli.opts)?;
    let out = compute(cli.command, &cli.opts, &curves)?;
    emit(&cli.opts, &out)?;
    Ok(out.failures)
}

pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(failures) if failures.is_empty() => EXIT_OK,
        Ok(failures) => {
            for f in failures {
                log::error!("{f}");
            }
            EXIT_MATH
        }
        Err(e) => {
            log::error!("{e}");
            exit_code(&e)
        }
    }
}
