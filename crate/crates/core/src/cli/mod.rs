//! Command-line front end. Every subcommand produces a [`Report`] that is
//! rendered as JSON, CSV or an aligned text table.
//!
//! Exit codes: 0 success, 1 a verification found failing instances,
//! 2 a parameter error.

mod render;
mod reports;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::error::{Error, Result};
use crate::gram::GramReport;
use crate::lattice::{WeightCap, DEFAULT_WEIGHT_CAP};

pub use render::{Cell, Table};
pub use reports::*;

pub const MAX_N_ENV: &str = "GRIESSKIT_MAX_N";
pub const DEFAULT_MAX_N: usize = 8;
pub const MIN_N: usize = 3;
pub const MAX_M: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    Kac,
    Fusion,
    Griess,
    Spectrum,
    Autos,
    Positivity,
    Scan,
    LatticeVerify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "griesskit",
    version,
    about = "Exact Griess algebra, positivity and lattice computations"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub subcommand: Subcommand,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long = "m-max")]
    pub m_max: Option<u32>,
    #[arg(long = "format", value_enum, default_value_t = OutputFormat::Json)]
    pub output_format: OutputFormat,
    #[arg(long = "weight-cap")]
    pub weight_cap: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(subcommand: Subcommand) -> Self {
        RunConfig {
            subcommand,
            n: None,
            m: None,
            m_max: None,
            output_format: OutputFormat::Json,
            weight_cap: None,
            out: None,
        }
    }
}

/// Upper bound on `n`, raised by `GRIESSKIT_MAX_N` but never lowered.
pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_N, |v| v.max(DEFAULT_MAX_N))
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn need_n(c: &RunConfig) -> Result<usize> {
    let n = c.n.ok_or_else(|| bad("--n is required".into()))?;
    check_n(n)
}

fn check_n(n: usize) -> Result<usize> {
    let hi = max_n();
    if !(MIN_N..=hi).contains(&n) {
        return Err(bad(format!("--n must lie in [{MIN_N}, {hi}], got {n}")));
    }
    Ok(n)
}

fn check_m(flag: &str, m: u32) -> Result<u32> {
    if !(1..=MAX_M).contains(&m) {
        return Err(bad(format!("{flag} must lie in [1, {MAX_M}], got {m}")));
    }
    Ok(m)
}

fn need_m(c: &RunConfig) -> Result<u32> {
    check_m("--m", c.m.ok_or_else(|| bad("--m is required".into()))?)
}

fn opt_m(c: &RunConfig, default: u32) -> Result<u32> {
    check_m("--m", c.m.unwrap_or(default))
}

/// Validates the configuration and computes the report.
pub fn build_report(c: &RunConfig) -> Result<Report> {
    if let Some(m) = c.m_max {
        check_m("--m-max", m)?;
    }
    let cap = match c.weight_cap {
        Some(w) if !(3..=12).contains(&w) => {
            return Err(bad(format!("--weight-cap must lie in [3, 12], got {w}")))
        }
        Some(w) => WeightCap(w),
        None => WeightCap(DEFAULT_WEIGHT_CAP),
    };
    Ok(match c.subcommand {
        Subcommand::Kac => Report::Kac(KacReport::compute(need_m(c)?)?),
        Subcommand::Fusion => Report::Fusion(FusionReport::compute(need_m(c)?)?),
        Subcommand::Griess => {
            let n = need_n(c)?;
            Report::Griess(GriessReport::compute(n, need_m(c)?)?)
        }
        Subcommand::Spectrum => {
            let n = need_n(c)?;
            Report::Spectrum(SpectrumReport::compute(n, need_m(c)?)?)
        }
        Subcommand::Autos => {
            let n = need_n(c)?;
            Report::Autos(AutosReport::compute(n, opt_m(c, 1)?)?)
        }
        Subcommand::Positivity => {
            let n = need_n(c)?;
            match (c.m, c.m_max) {
                (Some(_), Some(_)) => {
                    return Err(bad("give either --m or --m-max, not both".into()))
                }
                (Some(_), None) => Report::Gram(GramReport::compute(n, need_m(c)?)?),
                (None, Some(m_max)) => {
                    Report::Classification(ClassificationReport::compute(n, m_max)?)
                }
                (None, None) => return Err(bad("positivity needs --m or --m-max".into())),
            }
        }
        Subcommand::Scan => {
            let n_max = check_n(c.n.unwrap_or(DEFAULT_MAX_N))?;
            Report::Scan(ScanReport::compute(n_max, c.m_max.unwrap_or(10))?)
        }
        Subcommand::LatticeVerify => {
            let n = need_n(c)?;
            Report::Lattice(lattice_report(n, need_m(c)?, cap)?)
        }
    })
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => report.table().to_csv(),
        OutputFormat::Text => report.table().to_text(),
    }
}

/// Exit code, rendered report and diagnostic lines for one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
    pub diagnostics: Vec<String>,
}

pub fn run(c: &RunConfig) -> Outcome {
    let report = match build_report(c) {
        Ok(r) => r,
        Err(e @ Error::InvalidParameter(_)) | Err(e @ Error::SizeLimit(_)) => {
            return Outcome {
                exit_code: 2,
                output: String::new(),
                diagnostics: vec![format!("error: {e}")],
            }
        }
        Err(e) => {
            return Outcome {
                exit_code: 1,
                output: String::new(),
                diagnostics: vec![format!("error: {e}")],
            }
        }
    };
    outcome(&report, c.output_format)
}

/// Exit 0 when every verification holds, otherwise 1 with the failing
/// instances as diagnostics; the report is emitted either way.
pub fn outcome(report: &Report, format: OutputFormat) -> Outcome {
    let output = render(report, format);
    if report.passed() {
        Outcome {
            exit_code: 0,
            output,
            diagnostics: Vec::new(),
        }
    } else {
        let diagnostics = report
            .failures()
            .into_iter()
            .map(|f| format!("failed: {f}"))
            .collect();
        Outcome {
            exit_code: 1,
            output,
            diagnostics,
        }
    }
}
