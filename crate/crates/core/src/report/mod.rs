//! Batch analysis across indices and report rendering.

mod ingest;
mod render;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autocorrelation::{acf_table, AcfResult, SeMode};
use crate::error::{invalid, Result};
use crate::normality::{normality, KsMode, NormalityResult};
use crate::runs::{runs_test, RunsResult};
use crate::series::{changes, ChangeMode, PriceSeries};
use crate::unit_root::{adf, AdfResult, Deterministic};

pub use ingest::{ingest_csv, write_prices_csv};
pub use render::{render, ReportFormat};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisConfig {
    pub change_mode: ChangeMode,
    pub max_lag: usize,
    pub se_mode: SeMode,
    pub adf_lags: usize,
    pub adf_deterministic: Deterministic,
    pub ks_mode: KsMode,
    /// Display only; every decision rule is fixed at 5%.
    pub alpha: f64,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            change_mode: ChangeMode::ArithmeticDiff,
            max_lag: 20,
            se_mode: SeMode::Auto,
            adf_lags: 1,
            adf_deterministic: Deterministic::Constant,
            ks_mode: KsMode::Standardized,
            alpha: 0.05,
        }
    }
}

/// Everything computed for one index. A `None` result has a matching entry
/// in `notes` explaining the failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub label: String,
    pub n_prices: usize,
    pub n_changes: usize,
    /// Calendar months missing between the first and last price.
    pub gaps: usize,
    pub acf: Option<AcfResult>,
    pub runs: Option<RunsResult>,
    /// ADF on the change series.
    pub adf: Option<AdfResult>,
    /// ADF on the price levels.
    pub adf_levels: Option<AdfResult>,
    pub normality: Option<NormalityResult>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EfficiencyReport {
    pub config: AnalysisConfig,
    pub entries: Vec<IndexReport>,
}

fn record<T>(notes: &mut Vec<String>, test: &str, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            notes.push(format!("{test}: {e}"));
            None
        }
    }
}

fn analyze_one(series: &PriceSeries, config: &AnalysisConfig) -> IndexReport {
    let mut notes = Vec::new();
    let gaps = series.gaps();
    if gaps > 0 {
        notes.push(format!("data: {gaps} missing month(s), not imputed"));
    }
    let levels = series.closes();
    let adf_levels = record(
        &mut notes,
        "adf (levels)",
        adf(&levels, config.adf_lags, config.adf_deterministic)
            .map(|r| r.with_label(series.label())),
    );
    let mut report = IndexReport {
        label: series.label().to_string(),
        n_prices: series.len(),
        n_changes: series.len().saturating_sub(1),
        gaps,
        acf: None,
        runs: None,
        adf: None,
        adf_levels,
        normality: None,
        notes,
    };
    let Some(ch) = record(&mut report.notes, "changes", changes(series, config.change_mode)) else {
        return report;
    };
    let notes = &mut report.notes;
    report.acf = record(notes, "acf", acf_table(&ch, config.max_lag, config.se_mode));
    report.runs = record(notes, "runs", runs_test(&ch));
    if let Some(r) = &report.runs {
        if r.ties_excluded > 0 {
            notes.push(format!("runs: {} change(s) equal to the mean excluded", r.ties_excluded));
        }
        if r.small_sample {
            notes.push(format!("runs: N = {} is small for the normal approximation", r.n));
        }
    }
    report.adf = record(
        notes,
        "adf",
        adf(ch.values(), config.adf_lags, config.adf_deterministic).map(|r| r.with_label(ch.label())),
    );
    report.normality = record(notes, "normality", normality(&ch, config.ks_mode));
    report
}

/// Runs the full battery on every series. Failures of individual tests are
/// recorded in that index's notes; the batch always completes.
pub fn analyze(series: &[PriceSeries], config: &AnalysisConfig) -> Result<EfficiencyReport> {
    if series.is_empty() {
        return invalid("no series to analyze");
    }
    if config.max_lag == 0 {
        return invalid("max_lag must be at least 1");
    }
    let entries = series.par_iter().map(|s| analyze_one(s, config)).collect();
    Ok(EfficiencyReport { config: config.clone(), entries })
}
