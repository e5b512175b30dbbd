//! Command-line frontend: argument parsing, dispatch, and file output.

mod commands;
mod output;
mod plot;

use std::path::PathBuf;
use std::time::Instant;

use apoint_lab::LabError;
use clap::{Parser, ValueEnum};
use serde::Serialize;

pub use output::{Manifest, Table};
pub use plot::{export_plotdata, PlotData};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Environment variable capping the worker pool size.
pub const THREADS_ENV: &str = "APOINT_LAB_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Gram,
    Zeros,
    Apoints,
    Dist,
    Approx,
    Charfn,
    Moments,
    Expsum,
    Paircorr,
    Hyps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize)]
#[command(name = "apoint-lab", version, about = "Experiments on a-points of the Riemann zeta-function")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Height (or lower end of the height window).
    #[arg(long = "T")]
    #[serde(rename = "T")]
    pub t: Option<f64>,
    /// Upper end of the height window.
    #[arg(long = "T2")]
    #[serde(rename = "T2")]
    pub t2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a_im: Option<f64>,
    /// Length of the Dirichlet polynomial in the approximate formula.
    #[arg(long = "X")]
    #[serde(rename = "X")]
    pub big_x: Option<f64>,
    /// Prime cutoff of the random model.
    #[arg(long = "Y")]
    #[serde(rename = "Y")]
    pub big_y: Option<f64>,
    #[arg(long)]
    pub sample_cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Data file; standard output when absent.
    #[arg(long = "out")]
    pub out_path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Base of the exponential sum.
    #[arg(long)]
    pub x: Option<f64>,
    /// Moment order (all of 0..=4 when absent).
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Gap multiple for the Hypothesis S statistic.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Also write plain-text plot data (dist, charfn, paircorr).
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_VALIDATION,
            CliError::Lab(e) if e.is_numerical() => EXIT_NUMERICAL,
            CliError::Lab(_) => EXIT_VALIDATION,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => EXIT_IO,
        }
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs one command, writing data (and a manifest) as configured.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// As [`run`] but returns the error instead of printing it.
pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    let started = Instant::now();
    let plan = commands::validate(config)?;
    let result = commands::dispatch(config, &plan)?;
    output::emit(config, result, started.elapsed())
}

/// Parses `args` (including the program name) and runs; clap's own
/// failures map to the validation exit code.
pub fn run_from_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

/// Sizes the global worker pool from `APOINT_LAB_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| usage(format!("cannot size the thread pool: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    fn code(args: &[&str]) -> i32 {
        run_from_args(std::iter::once("apoint-lab").chain(args.iter().copied()))
    }

    fn code_to(args: &[&str], out: &Path) -> i32 {
        let out = out.to_str().unwrap();
        let mut all = args.to_vec();
        all.extend(["--out", out]);
        code(&all)
    }

    fn read_json(path: &Path) -> serde_json::Value {
        serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap()
    }

    #[test]
    fn validation_failures_exit_2() {
        assert_eq!(code(&["gram"]), EXIT_VALIDATION);
        assert_eq!(code(&["nosuch"]), EXIT_VALIDATION);
        assert_eq!(code(&["expsum", "--x", "1", "--T", "100"]), EXIT_VALIDATION);
        assert_eq!(code(&["expsum", "--x", "1"]), EXIT_VALIDATION);
        assert_eq!(code(&["zeros", "--T", "200", "--T2", "100"]), EXIT_VALIDATION);
        assert_eq!(code(&["gram", "--T", "NaN"]), EXIT_VALIDATION);
        assert_eq!(code(&["apoints", "--T", "500", "--a-re", "0", "--a-im", "0"]), EXIT_VALIDATION);
        assert_eq!(code(&["dist", "--T", "1e4", "--sample-cap", "10"]), EXIT_VALIDATION);
        assert_eq!(code(&["moments", "--T", "1e4", "--m", "9"]), EXIT_VALIDATION);
    }

    #[test]
    fn help_exits_0() {
        assert_eq!(code(&["--help"]), EXIT_OK);
    }

    #[test]
    fn unwritable_output_exits_1() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("missing").join("x.csv");
        assert_eq!(code_to(&["gram", "--T", "1000", "--format", "csv"], &out), EXIT_IO);
    }

    #[test]
    fn csv_has_header_and_lf_endings() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("g.csv");
        assert_eq!(code_to(&["gram", "--T", "1000", "--T2", "1010", "--format", "csv"], &out), EXIT_OK);
        let text = std::fs::read_to_string(&out).unwrap();
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(header, ["n", "g", "residual", "seed_gap"]);
        let rows: Vec<&str> = lines.collect();
        // about ln(T/2π)/2π points per unit height
        assert!((6..=12).contains(&rows.len()), "{}", rows.len());
        assert!(rows.iter().all(|r| r.split(',').count() == header.len()));

        let m = read_json(&output::manifest_path(&out));
        assert_eq!(m["command"], "gram");
        assert_eq!(m["rows"], rows.len());
        assert!(m["wall_time_seconds"].as_f64().unwrap() >= 0.0);
        assert!(m["deviations"].is_array());
        assert_eq!(m["config"]["T"], 1000.0);
    }

    #[test]
    fn json_document_layout() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("z.json");
        assert_eq!(code_to(&["zeros", "--T", "10", "--T2", "50"], &out), EXIT_OK);
        let doc = read_json(&out);
        let manifest = &doc["manifest"];
        assert!(manifest.get("wall_time_seconds").is_none());
        assert_eq!(manifest["tool"], "apoint-lab");
        let data = doc["data"].as_object().unwrap();
        let rows = data.values().find_map(|v| v.as_array()).unwrap();
        assert_eq!(rows.len(), 10);
        assert_eq!(manifest["rows"], 10);
    }

    #[test]
    fn repeated_runs_are_identical() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("d.csv");
        let args = ["dist", "--T", "1e4", "--sample-cap", "1000", "--seed", "9", "--format", "csv"];
        assert_eq!(code_to(&args, &out), EXIT_OK);
        let first = std::fs::read(&out).unwrap();
        assert_eq!(code_to(&args, &out), EXIT_OK);
        assert_eq!(first, std::fs::read(&out).unwrap());
        let header = String::from_utf8_lossy(&first).lines().next().unwrap().to_string();
        assert_eq!(header, "index,g,log_abs_zeta,normalized");
    }

    #[test]
    fn plot_file_is_written() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("p.json");
        let plot = dir.path().join("p.dat");
        let args = ["paircorr", "--T", "1000", "--plot", plot.to_str().unwrap()];
        assert_eq!(code_to(&args, &out), EXIT_OK);
        let text = std::fs::read_to_string(&plot).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "# alpha beta normalized_count gue_value");
        let rows: Vec<Vec<f64>> = lines
            .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), 30);
        assert!(rows.iter().all(|r| r.len() == 4 && (r[1] - r[0] - 0.1).abs() < 1e-9));
    }

    #[test]
    fn empty_plot_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let err = export_plotdata(PlotData::CharFn(&[]), &dir.path().join("e.dat")).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_VALIDATION);
    }

    #[test]
    fn numerical_errors_exit_3() {
        let e = CliError::Lab(LabError::NonConvergence("x".into()));
        assert_eq!(e.exit_code(), EXIT_NUMERICAL);
    }
}
