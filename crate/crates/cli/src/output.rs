use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::{CliError, Format, RunConfig};

/// Column-oriented result rows; the CSV contract and the JSON row objects
/// share the column names.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Table {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn row_objects(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self.columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect();
                Value::Object(obj)
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        out.write_record(&self.columns)?;
        for row in &self.rows {
            out.write_record(row.iter().map(cell))?;
        }
        out.flush()?;
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// A parameter set away from its asymptotic choice.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Deviation {
    pub parameter: &'static str,
    pub value: Option<f64>,
    pub note: &'static str,
}

/// What a command hands back for output.
#[derive(Debug, Clone)]
pub(crate) struct CommandResult {
    pub table: Table,
    /// Key of the row array inside the JSON data object.
    pub rows_key: &'static str,
    /// Scalar results, reported in the manifest and at the top of the JSON data.
    pub summary: Map<String, Value>,
    pub parameters: Map<String, Value>,
    pub deviations: Vec<Deviation>,
    pub plot: Option<crate::plot::OwnedPlot>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: crate::Command,
    pub config: RunConfig,
    /// Effective parameters after defaults.
    pub parameters: Map<String, Value>,
    pub deviations: Vec<Deviation>,
    pub rows: usize,
    pub summary: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_seconds: Option<f64>,
}

/// Path of the manifest written next to a data file.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

fn write_json<W: Write, T: Serialize>(mut w: W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

pub(crate) fn emit(config: &RunConfig, result: CommandResult, elapsed: Duration) -> Result<(), CliError> {
    let mut manifest = Manifest {
        tool: "apoint-lab",
        version: env!("CARGO_PKG_VERSION"),
        command: config.command,
        config: config.clone(),
        parameters: result.parameters,
        deviations: result.deviations,
        rows: result.table.rows.len(),
        summary: result.summary,
        wall_time_seconds: None,
    };
    let sink: Box<dyn Write> = match &config.out_path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match config.format {
        Format::Csv => result.table.write_csv(sink)?,
        Format::Json => {
            let mut data = manifest.summary.clone();
            data.insert(result.rows_key.to_string(), Value::Array(result.table.row_objects()));
            let mut doc = Map::new();
            doc.insert("manifest".into(), serde_json::to_value(&manifest)?);
            doc.insert("data".into(), Value::Object(data));
            write_json(sink, &doc)?;
        }
    }
    if let (Some(path), Some(plot)) = (&config.plot, &result.plot) {
        crate::plot::export_plotdata(plot.as_ref(), path)?;
    }
    manifest.wall_time_seconds = Some(elapsed.as_secs_f64());
    match &config.out_path {
        Some(p) => write_json(BufWriter::new(File::create(manifest_path(p))?), &manifest)?,
        // CSV on stdout has no room for the manifest; it goes to stderr
        None if config.format == Format::Csv => write_json(io::stderr().lock(), &manifest)?,
        None => log::info!("wall time {:.3} s", elapsed.as_secs_f64()),
    }
    Ok(())
}
