//! Command-line front-end: parse a position list, run the solvers, emit
//! text or JSON reports and optional fuel-curve CSV, and cross-verify with
//! the brute-force oracles on request.
//!
//! Exit codes are part of the contract: 0 on success, 1 on parse or usage
//! errors, 2 when `--verify` finds a mismatch.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crabmeet_core::rational::{to_f64, Rational};
use crabmeet_core::{
    oracle_continuous_exact, oracle_discrete_scan, solve_bisection, solve_discrete_from,
    solve_discrete_linear, solve_linear_scan, total_fuel, ContinuousReport, CostModel,
    DiscreteReport, PositionSet,
};

/// One solver invocation, straight from the command line.
#[derive(Parser, Debug, Clone)]
#[command(
    name = "crabmeet",
    version,
    about = "Compute the fuel-optimal meeting point of agents on a line",
    long_about = "Reads a comma- or whitespace-separated list of starting positions \
                  (integers or finite decimals) and reports the meeting point that \
                  minimizes total fuel, continuously and/or over the integers."
)]
pub struct RunConfig {
    /// Which problem to solve
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    pub mode: Mode,

    /// Fuel model: triangular d(d+1)/2 or linear d
    #[arg(long, value_enum, default_value_t = CostArg::Triangular)]
    pub cost: CostArg,

    /// Search strategy for the continuous solve
    #[arg(long, value_enum, default_value_t = StrategyArg::Scan)]
    pub strategy: StrategyArg,

    /// Re-derive the answer with the brute-force oracle; a mismatch exits 2
    #[arg(long)]
    pub verify: bool,

    /// Write a CSV sample of the total-fuel curve to FILE
    #[arg(long, value_name = "FILE")]
    pub curve: Option<PathBuf>,

    /// Number of curve sample points (at least 2)
    #[arg(long, value_name = "K", default_value_t = 400)]
    pub samples: usize,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Input file of positions, or "-" for standard input
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Continuous,
    Discrete,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CostArg {
    Triangular,
    Linear,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyArg {
    Scan,
    Bisection,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("no positions in input")]
    EmptyInput,

    #[error("malformed token {text:?} at position {token}")]
    Parse { token: usize, text: String },

    #[error("{0}")]
    Usage(String),

    #[error("integer answer does not fit the JSON number range")]
    JsonIntegerOverflow,

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Solver(#[from] crabmeet_core::Error),
}

/// Parses comma- and/or whitespace-separated position tokens. Each token is
/// an optionally signed integer or finite decimal, converted exactly. An
/// empty slot between commas is an error naming the offending token index.
pub fn parse_positions(raw: &str) -> Result<PositionSet, CliError> {
    if raw.trim().is_empty() {
        return Err(CliError::EmptyInput);
    }
    let mut values = Vec::new();
    for segment in raw.split(',') {
        let before = values.len();
        for token in segment.split_whitespace() {
            let value = crabmeet_core::rational::parse_decimal(token).map_err(|_| {
                CliError::Parse {
                    token: values.len() + 1,
                    text: token.to_string(),
                }
            })?;
            values.push(value);
        }
        if values.len() == before {
            return Err(CliError::Parse {
                token: values.len() + 1,
                text: String::new(),
            });
        }
    }
    PositionSet::new(values).map_err(|_| CliError::EmptyInput)
}

/// Writes a CSV sample of the total-fuel curve: header `x,y`, then `samples`
/// rows covering the position span widened by a quarter-span margin on each
/// side (or by 1 when all positions coincide). The grid is computed exactly
/// and rendered as shortest round-trip decimals.
pub fn emit_curve(
    ps: &PositionSet,
    model: CostModel,
    samples: usize,
    sink: &mut dyn Write,
) -> io::Result<()> {
    assert!(samples >= 2, "curve needs at least two samples");
    let span = ps.max() - ps.min();
    let margin = if span == crabmeet_core::rational::zero() {
        crabmeet_core::rational::integer(1)
    } else {
        span / crabmeet_core::rational::integer(4)
    };
    let lo = ps.min() - &margin;
    let width = ps.max() + &margin - &lo;

    writeln!(sink, "x,y")?;
    let steps = samples as i64 - 1;
    for j in 0..samples {
        let x = &lo + &width * crabmeet_core::rational::ratio(j as i64, steps);
        let y = total_fuel(ps, &x, model);
        writeln!(sink, "{},{}", to_f64(&x), to_f64(&y))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CertificateJson {
    lo: String,
    hi: String,
    lo_decimal: f64,
    hi_decimal: f64,
}

/// Stable JSON report: fixed field order, no timestamps. Rational values
/// carry both the exact `p/q` string and a decimal approximation.
#[derive(Serialize)]
struct ReportJson {
    n: usize,
    mean: String,
    mean_decimal: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    x_star: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x_star_decimal: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_minus: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_plus: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_star: Option<i128>,
    fuel_star: String,
    fuel_star_decimal: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    tie: Option<bool>,
    verified: Option<bool>,
}

struct Solved {
    ps: PositionSet,
    continuous: Option<ContinuousReport>,
    discrete: Option<DiscreteReport>,
    /// Fuel at the reported answer: the discrete minimum when an integer
    /// answer is requested, else the fuel at x*.
    fuel_star: Rational,
    verified: Option<bool>,
}

fn big_to_i128(value: &num_bigint::BigInt) -> Result<i128, CliError> {
    value.to_i128().ok_or(CliError::JsonIntegerOverflow)
}

fn render_json(solved: &Solved) -> Result<String, CliError> {
    let report = ReportJson {
        n: solved.ps.n(),
        mean: solved.ps.mean().to_string(),
        mean_decimal: to_f64(solved.ps.mean()),
        x_star: solved.continuous.as_ref().map(|c| c.x_star.to_string()),
        x_star_decimal: solved.continuous.as_ref().map(|c| to_f64(&c.x_star)),
        case: solved.continuous.as_ref().map(|c| c.case.to_string()),
        certificate: solved.continuous.as_ref().map(|c| CertificateJson {
            lo: c.certificate.lo().to_string(),
            hi: c.certificate.hi().to_string(),
            lo_decimal: to_f64(c.certificate.lo()),
            hi_decimal: to_f64(c.certificate.hi()),
        }),
        k_minus: solved
            .discrete
            .as_ref()
            .map(|d| big_to_i128(&d.k_minus))
            .transpose()?,
        k_plus: solved
            .discrete
            .as_ref()
            .map(|d| big_to_i128(&d.k_plus))
            .transpose()?,
        k_star: solved
            .discrete
            .as_ref()
            .map(|d| big_to_i128(&d.k_star))
            .transpose()?,
        fuel_star: solved.fuel_star.to_string(),
        fuel_star_decimal: to_f64(&solved.fuel_star),
        tie: solved.discrete.as_ref().map(|d| d.tie),
        verified: solved.verified,
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

fn render_text(solved: &Solved) -> String {
    let mut out = String::new();
    let mean = solved.ps.mean();
    out.push_str(&format!("n: {}\n", solved.ps.n()));
    out.push_str(&format!("mean: {} (~{})\n", mean, to_f64(mean)));
    if let Some(c) = &solved.continuous {
        out.push_str(&format!("x*: {} (~{})\n", c.x_star, to_f64(&c.x_star)));
        out.push_str(&format!("case: {}\n", c.case));
        out.push_str(&format!(
            "certificate: subgradient {} contains 0\n",
            c.certificate
        ));
    }
    if let Some(d) = &solved.discrete {
        out.push_str(&format!("k-: {} (fuel {})\n", d.k_minus, d.fuel_minus));
        out.push_str(&format!("k+: {} (fuel {})\n", d.k_plus, d.fuel_plus));
        out.push_str(&format!("k*: {} (fuel {})\n", d.k_star, d.fuel_star));
        out.push_str(&format!("tie: {}\n", d.tie));
    } else {
        out.push_str(&format!(
            "fuel at x*: {} (~{})\n",
            solved.fuel_star,
            to_f64(&solved.fuel_star)
        ));
    }
    match solved.verified {
        Some(true) => out.push_str("verified: ok\n"),
        Some(false) => out.push_str("verified: MISMATCH\n"),
        None => {}
    }
    out
}

fn read_input(source: &str) -> Result<String, CliError> {
    if source == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(source)?)
    }
}

fn solve(config: &RunConfig, ps: PositionSet) -> Result<Solved, CliError> {
    let wants_continuous = matches!(config.mode, Mode::Continuous | Mode::Both);
    let wants_discrete = matches!(config.mode, Mode::Discrete | Mode::Both);

    if config.cost == CostArg::Linear && config.mode != Mode::Discrete {
        return Err(CliError::Usage(
            "--cost linear solves the integer median baseline; use --mode discrete".into(),
        ));
    }

    let continuous_report = if config.cost == CostArg::Triangular {
        Some(match config.strategy {
            StrategyArg::Scan => solve_linear_scan(&ps),
            StrategyArg::Bisection => solve_bisection(&ps),
        })
    } else {
        None
    };

    let discrete_report = if wants_discrete {
        Some(match config.cost {
            CostArg::Triangular => solve_discrete_from(
                &ps,
                continuous_report.as_ref().expect("triangular mode solved"),
            ),
            CostArg::Linear => solve_discrete_linear(&ps)?,
        })
    } else {
        None
    };

    let mut verified = None;
    if config.verify {
        let mut ok = true;
        if wants_continuous {
            let oracle = oracle_continuous_exact(&ps);
            let solver = continuous_report.as_ref().expect("continuous mode solved");
            if oracle.x_star != solver.x_star {
                eprintln!(
                    "verification mismatch: solver x* = {}, oracle x* = {}",
                    solver.x_star, oracle.x_star
                );
                ok = false;
            }
        }
        if wants_discrete {
            let model = cost_model(config.cost);
            let oracle = oracle_discrete_scan(&ps, model)?;
            let solver = discrete_report.as_ref().expect("discrete mode solved");
            if oracle.fuel != solver.fuel_star {
                eprintln!(
                    "verification mismatch: solver fuel {} at k* = {}, oracle fuel {} at {}",
                    solver.fuel_star, solver.k_star, oracle.fuel, oracle.x_star
                );
                ok = false;
            }
        }
        verified = Some(ok);
    }

    let fuel_star = match (&discrete_report, &continuous_report) {
        (Some(d), _) => d.fuel_star.clone(),
        (None, Some(c)) => total_fuel(&ps, &c.x_star, CostModel::Triangular),
        (None, None) => unreachable!("at least one problem is always solved"),
    };

    Ok(Solved {
        ps,
        continuous: if wants_continuous { continuous_report } else { None },
        discrete: discrete_report,
        fuel_star,
        verified,
    })
}

fn cost_model(cost: CostArg) -> CostModel {
    match cost {
        CostArg::Triangular => CostModel::Triangular,
        CostArg::Linear => CostModel::Linear,
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    if config.curve.is_some() && config.samples < 2 {
        return Err(CliError::Usage(format!(
            "--samples {} is below the minimum of 2 required with --curve",
            config.samples
        )));
    }

    let raw = read_input(&config.input)?;
    let ps = parse_positions(&raw)?;
    let solved = solve(config, ps)?;

    if let Some(path) = &config.curve {
        let mut file = fs::File::create(path)?;
        emit_curve(&solved.ps, cost_model(config.cost), config.samples, &mut file)?;
    }

    match config.format {
        Format::Json => {
            let json = render_json(&solved)?;
            writeln!(out, "{json}")?;
        }
        Format::Text => {
            write!(out, "{}", render_text(&solved))?;
        }
    }

    Ok(if solved.verified == Some(false) { 2 } else { 0 })
}

/// Runs one solver invocation, returning the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(config, &mut out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}
