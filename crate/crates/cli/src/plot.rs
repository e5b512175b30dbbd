use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use apoint_lab::stats::{normal_cdf, CharFnSample, DistSummary, PairCorrStat};

use crate::{usage, CliError};

/// Inputs accepted by [`export_plotdata`].
#[derive(Debug, Clone, Copy)]
pub enum PlotData<'a> {
    /// Columns v, ecdf(v), Φ(v).
    Dist(&'a DistSummary),
    /// Columns u, Re φ_T, Im φ_T, J₀ product, e^{−u²/2}.
    CharFn(&'a [CharFnSample]),
    /// Columns α, β, normalized count, GUE value.
    PairCorr(&'a [PairCorrStat]),
}

#[derive(Debug, Clone)]
pub(crate) enum OwnedPlot {
    Dist(DistSummary),
    CharFn(Vec<CharFnSample>),
    PairCorr(Vec<PairCorrStat>),
}

impl OwnedPlot {
    pub fn as_ref(&self) -> PlotData<'_> {
        match self {
            OwnedPlot::Dist(d) => PlotData::Dist(d),
            OwnedPlot::CharFn(c) => PlotData::CharFn(c),
            OwnedPlot::PairCorr(p) => PlotData::PairCorr(p),
        }
    }
}

fn num(v: f64) -> String {
    format!("{v:.11e}")
}

fn lines(data: PlotData<'_>) -> Result<(&'static str, Vec<Vec<f64>>), CliError> {
    let (header, rows): (&str, Vec<Vec<f64>>) = match data {
        PlotData::Dist(d) => (
            "v ecdf normal_cdf",
            d.values.iter().map(|&v| vec![v, d.ecdf(v), normal_cdf(v)]).collect(),
        ),
        PlotData::CharFn(c) => (
            "u empirical_re empirical_im model_j0 gaussian",
            c.iter()
                .map(|s| vec![s.u, s.empirical.re, s.empirical.im, s.model_j0, s.gaussian])
                .collect(),
        ),
        PlotData::PairCorr(p) => (
            "alpha beta normalized_count gue_value",
            p.iter().map(|s| vec![s.alpha, s.beta, s.normalized_count, s.gue_value]).collect(),
        ),
    };
    if rows.is_empty() {
        return Err(usage("nothing to plot"));
    }
    Ok((header, rows))
}

/// Writes whitespace-separated plot columns with a `#` header line;
/// numbers carry 12 significant digits.
pub fn export_plotdata(data: PlotData<'_>, path: &Path) -> Result<(), CliError> {
    let (header, rows) = lines(data)?;
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "# {header}")?;
    for r in rows {
        let cols: Vec<String> = r.into_iter().map(num).collect();
        writeln!(w, "{}", cols.join(" "))?;
    }
    w.flush()?;
    Ok(())
}
