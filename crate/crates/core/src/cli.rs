//! Command-line front end: configuration, input loading, output rendering and
//! the validation table. The `fracdiff` binary is a thin wrapper over [`Cli`]
//! and [`execute`].

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;
use thiserror::Error;

use crate::error::Error;
use crate::expr::{self, ExprError};
use crate::gl::{gl_array_fast, gl_matrix_apply, gl_point};
use crate::gli::gli_array;
use crate::grid::{self, Input};
use crate::rl::{rl_array, rl_point};
use crate::special::check_values;

pub const EXIT_CODES: &str = "\
Exit codes:
  0   success
  2   command-line usage error
  3   invalid order, domain, point count or sample count
  4   expression syntax error or unknown identifier
  5   function evaluation error (domain error or non-finite sample)
  6   order excluded by a gamma-function pole, or gamma overflow
  7   data file could not be read
  8   data file is malformed
  9   result is not finite
  10  failed to write output
  11  internal error";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Grünwald-Letnikov at the right endpoint
    GlPoint,
    /// Grünwald-Letnikov on the whole grid, transform convolution
    Gl,
    /// Grünwald-Letnikov on the whole grid, Toeplitz matrix product
    GlMatrix,
    /// Improved Grünwald-Letnikov on the whole grid
    Gli,
    /// Riemann-Liouville at the right endpoint
    RlPoint,
    /// Riemann-Liouville on the whole grid
    Rl,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::GlPoint => "gl-point",
            Algorithm::Gl => "gl",
            Algorithm::GlMatrix => "gl-matrix",
            Algorithm::Gli => "gli",
            Algorithm::RlPoint => "rl-point",
            Algorithm::Rl => "rl",
        }
    }

    pub fn is_point(self) -> bool {
        matches!(self, Algorithm::GlPoint | Algorithm::RlPoint)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    Expression(String),
    DataFile(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub alpha: f64,
    pub domain: (f64, f64),
    /// Required for expressions; defaults to the sample count for data files.
    pub points: Option<f64>,
    pub input: InputSource,
    pub format: OutputFormat,
}

#[derive(Debug, Parser)]
#[command(
    name = "fracdiff",
    version,
    about = "Fractional derivatives and integrals of sampled or symbolic functions",
    after_help = EXIT_CODES,
    allow_negative_numbers = true
)]
pub struct Cli {
    /// Algorithm to run
    #[arg(long, value_enum, required_unless_present = "reproduce_table")]
    pub algorithm: Option<Algorithm>,

    /// Order of differintegration (negative integrates)
    #[arg(long, required_unless_present = "reproduce_table")]
    pub alpha: Option<f64>,

    /// Function of x, e.g. "sqrt(x)", "x^2 - 1", "exp(x)"
    #[arg(long, conflicts_with = "data", required_unless_present_any = ["data", "reproduce_table"])]
    pub expr: Option<String>,

    /// File of samples, one per line; `#` starts a comment
    #[arg(long, value_name = "PATH")]
    pub data: Option<PathBuf>,

    /// Domain endpoints
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [0.0, 1.0])]
    pub domain: Vec<f64>,

    /// Number of grid points, endpoints included
    #[arg(long)]
    pub points: Option<f64>,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    /// Print the half-derivative validation table and exit
    #[arg(long, conflicts_with_all = ["algorithm", "alpha", "expr", "data", "points"])]
    pub reproduce_table: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Run(RunConfig),
    ReproduceTable,
}

impl Cli {
    pub fn into_command(self) -> Command {
        if self.reproduce_table {
            return Command::ReproduceTable;
        }
        let input = match (self.expr, self.data) {
            (Some(text), _) => InputSource::Expression(text),
            (None, Some(path)) => InputSource::DataFile(path),
            (None, None) => unreachable!("clap requires --expr or --data"),
        };
        Command::Run(RunConfig {
            algorithm: self.algorithm.expect("clap requires --algorithm"),
            alpha: self.alpha.expect("clap requires --alpha"),
            domain: (self.domain[0], self.domain[1]),
            points: self.points,
            input,
            format: self.format,
        })
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Compute(#[from] Error),

    #[error("--points is required when the input is an expression")]
    MissingPoints,

    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("{}:{line}: {message}", path.display())]
    DataFormat {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("failed to write output: {0}")]
    Output(#[source] io::Error),
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Compute(Error::Expr(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(e) => match e {
                Error::NonFiniteOrder(_)
                | Error::NonFiniteDomain { .. }
                | Error::InvalidDomain { .. }
                | Error::NonIntegerPoints(_)
                | Error::TooFewPoints(_)
                | Error::LengthMismatch { .. } => 3,
                Error::Expr(ExprError::Syntax { .. } | ExprError::UnknownIdentifier { .. }) => 4,
                Error::Expr(ExprError::Domain { .. }) | Error::NonFiniteSample { .. } => 5,
                Error::OrderPole(_) | Error::GammaPole(_) | Error::GammaOverflow(_) => 6,
                Error::NonFiniteResult { .. } => 9,
                Error::NotPowerOfTwo(_) | Error::EmptyInput => 11,
            },
            CliError::MissingPoints => 3,
            CliError::Io { .. } => 7,
            CliError::DataFormat { .. } => 8,
            CliError::Output(_) => 10,
        }
    }
}

/// Parses a data file body: one finite decimal per line, blank lines and
/// `#` comments ignored. Errors carry the 1-based line number.
pub fn parse_samples(text: &str) -> Result<Vec<f64>, (usize, String)> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line
            .parse()
            .map_err(|_| (i + 1, format!("not a number: `{line}`")))?;
        if !value.is_finite() {
            return Err((i + 1, format!("non-finite sample `{line}`")));
        }
        values.push(value);
    }
    Ok(values)
}

pub fn read_data_file(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_samples(&text).map_err(|(line, message)| CliError::DataFormat {
        path: path.to_path_buf(),
        line,
        message,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub algorithm: Algorithm,
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub h: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint_estimated: Option<bool>,
}

/// Result of one run: abscissae and values, plus metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub meta: Meta,
    pub x: Vec<f64>,
    pub value: Vec<f64>,
}

/// Runs the configured algorithm without rendering anything.
pub fn compute(config: &RunConfig) -> Result<RunOutput, CliError> {
    let (a, b) = config.domain;
    let (parsed, data) = match &config.input {
        InputSource::Expression(text) => (Some(expr::parse(text)?), None),
        InputSource::DataFile(path) => (None, Some(read_data_file(path)?)),
    };
    let points = match (config.points, &data) {
        (Some(p), _) => p,
        (None, Some(values)) => values.len() as f64,
        (None, None) => return Err(CliError::MissingPoints),
    };
    let checked = check_values(config.alpha, a, b, points)?;
    let alpha = checked.order.get();
    let grid = checked.grid;
    let n = grid.n();

    let input = match (&parsed, &data) {
        (Some(e), _) => Input::expression(e),
        (None, Some(values)) => Input::samples(values),
        (None, None) => unreachable!(),
    };

    let mut endpoint_estimated = None;
    let value = match config.algorithm {
        Algorithm::GlPoint => vec![gl_point(alpha, &input, a, b, n)?],
        Algorithm::Gl => gl_array_fast(alpha, &input, a, b, n)?,
        Algorithm::GlMatrix => {
            let samples = grid::function_check(&input, a, b, n)?;
            gl_matrix_apply(alpha, &samples)?
        }
        Algorithm::Gli => {
            let out = gli_array(alpha, &input, a, b, n)?;
            endpoint_estimated = Some(out.endpoint_estimated);
            out.values
        }
        Algorithm::RlPoint => vec![rl_point(alpha, &input, a, b, n)?],
        Algorithm::Rl => rl_array(alpha, &input, a, b, n)?,
    };
    let x: Vec<f64> = if config.algorithm.is_point() {
        vec![grid.b()]
    } else {
        grid.points().collect()
    };
    if let Some(index) = value.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteResult { index, x: x[index] }.into());
    }

    Ok(RunOutput {
        meta: Meta {
            algorithm: config.algorithm,
            alpha,
            a,
            b,
            n,
            h: grid.h(),
            endpoint_estimated,
        },
        x,
        value,
    })
}

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

fn raw_numbers(values: &[f64]) -> Vec<Box<RawValue>> {
    values
        .iter()
        .map(|&v| RawValue::from_string(format_number(v)).expect("formatted float is valid JSON"))
        .collect()
}

pub fn render(output: &RunOutput, format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Csv => {
            s.push_str("x,value\n");
            for (x, v) in output.x.iter().zip(&output.value) {
                let _ = writeln!(s, "{},{}", format_number(*x), format_number(*v));
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Document<'a> {
                meta: &'a Meta,
                x: Vec<Box<RawValue>>,
                value: Vec<Box<RawValue>>,
            }
            let doc = Document {
                meta: &output.meta,
                x: raw_numbers(&output.x),
                value: raw_numbers(&output.value),
            };
            s = serde_json::to_string(&doc).expect("serializable document");
            s.push('\n');
        }
        OutputFormat::Plain => {
            let m = &output.meta;
            let _ = write!(
                s,
                "# algorithm={} alpha={} a={} b={} n={} h={}",
                m.algorithm.name(),
                m.alpha,
                m.a,
                m.b,
                m.n,
                format_number(m.h)
            );
            if let Some(flag) = m.endpoint_estimated {
                let _ = write!(s, " endpoint_estimated={flag}");
            }
            s.push('\n');
            if m.algorithm.is_point() {
                let _ = writeln!(s, "{}", format_number(output.value[0]));
            } else {
                for (x, v) in output.x.iter().zip(&output.value) {
                    let _ = writeln!(s, "{} {}", format_number(*x), format_number(*v));
                }
            }
        }
    }
    s
}

pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let output = compute(config)?;
    out.write_all(render(&output, config.format).as_bytes())
        .map_err(CliError::Output)
}

/// One line of the half-derivative validation table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub function: &'static str,
    pub algorithm: &'static str,
    pub computed: f64,
    pub exact: f64,
    pub abs_error: f64,
    pub rel_error: f64,
}

const ERF_1: f64 = 0.842_700_792_949_714_869_341_220_635_083;

/// Order-1/2 derivatives of `sqrt(x)`, `x^2 - 1` and `exp(x)` at `x = 1`,
/// each by GL, GLI and RL on `[0, 1]` with 120 points.
pub fn reproduce_table() -> Result<Vec<TableRow>, Error> {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let cases: [(&str, &str, f64); 3] = [
        ("sqrt(x)", "sqrt(x)", sqrt_pi / 2.0),
        ("x^2-1", "x^2 - 1", 5.0 / (3.0 * sqrt_pi)),
        ("e^x", "exp(x)", std::f64::consts::E * ERF_1 + 1.0 / sqrt_pi),
    ];
    let (alpha, n) = (0.5, 120);
    let mut rows = Vec::with_capacity(9);
    for (label, text, exact) in cases {
        let parsed = expr::parse(text)?;
        let input = Input::expression(&parsed);
        let results = [
            ("GL", *gl_array_fast(alpha, &input, 0.0, 1.0, n)?.last().expect("n >= 2")),
            ("GLI", *gli_array(alpha, &input, 0.0, 1.0, n)?.values.last().expect("n >= 2")),
            ("RL", *rl_array(alpha, &input, 0.0, 1.0, n)?.last().expect("n >= 2")),
        ];
        for (algorithm, computed) in results {
            let abs_error = (computed - exact).abs();
            rows.push(TableRow {
                function: label,
                algorithm,
                computed,
                exact,
                abs_error,
                rel_error: abs_error / exact.abs(),
            });
        }
    }
    Ok(rows)
}

pub fn format_table(rows: &[TableRow]) -> String {
    let mut s = format!(
        "{:<10}{:<11}{:<18}{:<18}{:<16}{}\n",
        "Function", "Algorithm", "Computed Value", "Exact Value", "Absolute Error", "Relative Error"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:<10}{:<11}{:<18.12}{:<18.12}{:<16.6e}{:.6e}",
            r.function, r.algorithm, r.computed, r.exact, r.abs_error, r.rel_error
        );
    }
    s
}

/// Entry point used by the binary.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Run(config) => run(config, out),
        Command::ReproduceTable => {
            let rows = reproduce_table()?;
            out.write_all(format_table(&rows).as_bytes())
                .map_err(CliError::Output)
        }
    }
}
