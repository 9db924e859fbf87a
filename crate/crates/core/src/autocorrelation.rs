//! Lag-k autocorrelation of a change series and its significance.

use serde::{Deserialize, Serialize};

use crate::distributions::Z_CRIT_5PCT;
use crate::error::{degenerate, invalid, Result};
use crate::series::{sample_std, ChangeSeries};

/// Which standard-error formula to use for ACF(k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeMode {
    /// `1 / sqrt(n - k)`
    Exact,
    /// `1 / sqrt(n)`
    LargeN,
    /// `LargeN` when `n >= 50`, otherwise `Exact`.
    #[default]
    Auto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcfRow {
    pub lag: usize,
    pub acf: f64,
    pub se: f64,
    pub t: f64,
    /// `|t| > 1.96`
    pub significant_5pct: bool,
    /// `|acf| > 2 se`
    pub exceeds_two_se: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcfResult {
    pub label: String,
    pub n: usize,
    pub se_mode: SeMode,
    pub rows: Vec<AcfRow>,
    /// Sample standard deviation of the per-lag ACF values.
    pub summary_sd: f64,
    /// `summary_sd / sqrt(rows)`
    pub summary_se: f64,
}

impl AcfResult {
    pub fn significant_count(&self) -> usize {
        self.rows.iter().filter(|r| r.significant_5pct).count()
    }
}

/// Autocorrelation at lag `k` about the overall mean:
///
/// `Σ_{t=k+1..n} (y_t - ȳ)(y_{t-k} - ȳ) / Σ_{t=1..n} (y_t - ȳ)²`
///
/// Lag 0 returns 1. Valid lags are `1..=n-2`.
pub fn acf(values: &[f64], k: usize) -> Result<f64> {
    let n = values.len();
    if n < 3 {
        return invalid(format!("autocorrelation needs at least 3 observations, got {n}"));
    }
    if k > n - 2 {
        return invalid(format!("lag {k} out of range 1..={} for n = {n}", n - 2));
    }
    let m = values.iter().sum::<f64>() / n as f64;
    let denom: f64 = values.iter().map(|y| (y - m) * (y - m)).sum();
    let scale = values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    if denom <= n as f64 * (scale * 1e-14).powi(2) {
        return degenerate("zero variance, autocorrelation undefined");
    }
    if k == 0 {
        return Ok(1.0);
    }
    let num: f64 = values[k..]
        .iter()
        .zip(values)
        .map(|(a, b)| (a - m) * (b - m))
        .sum();
    Ok((num / denom).clamp(-1.0, 1.0))
}

pub fn acf_se(n: usize, k: usize, mode: SeMode) -> Result<f64> {
    if n <= k {
        return invalid(format!("standard error needs n > k, got n = {n}, k = {k}"));
    }
    let exact = match mode {
        SeMode::Exact => true,
        SeMode::LargeN => false,
        SeMode::Auto => n < 50,
    };
    let denom = if exact { n - k } else { n };
    Ok(1.0 / (denom as f64).sqrt())
}

/// t-ratio `acf / se`.
pub fn acf_t(acf_value: f64, se: f64) -> Result<f64> {
    if !(se > 0.0) {
        return invalid(format!("standard error must be positive, got {se}"));
    }
    Ok(acf_value / se)
}

pub fn significant_5pct(t: f64) -> bool {
    t.abs() > Z_CRIT_5PCT
}

/// Sample SD (n-1 divisor) of a column of ACF values and its standard error
/// `sd / sqrt(len)`.
pub fn acf_summary(acfs: &[f64]) -> Result<(f64, f64)> {
    let sd = sample_std(acfs)?;
    Ok((sd, sd / (acfs.len() as f64).sqrt()))
}

/// ACF, standard error and t-test for lags `1..=max_lag`, with the column summary.
pub fn acf_table(changes: &ChangeSeries, max_lag: usize, se_mode: SeMode) -> Result<AcfResult> {
    let n = changes.n();
    if max_lag == 0 {
        return invalid("max_lag must be at least 1");
    }
    if n < max_lag + 2 {
        return invalid(format!("{max_lag} lags need at least {} changes, got {n}", max_lag + 2));
    }
    let values = changes.values();
    let mut rows = Vec::with_capacity(max_lag);
    for lag in 1..=max_lag {
        let a = acf(values, lag)?;
        let se = acf_se(n, lag, se_mode)?;
        let t = acf_t(a, se)?;
        rows.push(AcfRow {
            lag,
            acf: a,
            se,
            t,
            significant_5pct: significant_5pct(t),
            exceeds_two_se: a.abs() > 2.0 * se,
        });
    }
    let acfs: Vec<f64> = rows.iter().map(|r| r.acf).collect();
    // a single lag has no spread; report 0 rather than fail
    let (summary_sd, summary_se) = if acfs.len() >= 2 { acf_summary(&acfs)? } else { (0.0, 0.0) };
    Ok(AcfResult {
        label: changes.label().to_string(),
        n,
        se_mode,
        rows,
        summary_sd,
        summary_se,
    })
}
