//! Augmented Dickey–Fuller unit-root test.
//!
//! The regression for lag order `p` is
//!
//! ```text
//! Δy_t = α [+ δ t] + γ y_{t-1} + Σ_{j=1..p} β_j Δy_{t-j} + e_t
//! ```
//!
//! over every `t` where all terms exist, so `len - 1 - p` observations are
//! used. The statistic is the t-ratio on `γ`, compared against the
//! Dickey–Fuller distribution rather than Student-t.

mod critical;
mod ols;
#[cfg(test)]
mod oracle;

use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::distributions::{PValue, Sided};
use crate::error::{invalid, Result};

pub use critical::critical_values;
pub use ols::{ols, OlsFit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Deterministic {
    #[default]
    Constant,
    ConstantTrend,
}

impl fmt::Display for Deterministic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Deterministic::Constant => "constant",
            Deterministic::ConstantTrend => "constant_trend",
        })
    }
}

/// Where a statistic fell relative to the critical-value table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableBound {
    Interpolated,
    /// More negative than the 1% value; the true p is below 0.01.
    BelowTable,
    /// Above the 10% value; the true p is above 0.10.
    AboveTable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdfPValue {
    pub p: PValue,
    pub bound: TableBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalValues {
    #[serde(rename = "1%")]
    pub pct1: f64,
    #[serde(rename = "5%")]
    pub pct5: f64,
    #[serde(rename = "10%")]
    pub pct10: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdfResult {
    pub label: String,
    /// t-ratio on the lagged level.
    pub statistic: f64,
    /// Estimated coefficient on the lagged level.
    pub gamma: f64,
    pub p_value: AdfPValue,
    pub lags: usize,
    pub nobs_included: usize,
    pub deterministic: Deterministic,
    pub critical_values: CriticalValues,
}

impl AdfResult {
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Unit root rejected at 5%.
    pub fn rejects_5pct(&self) -> bool {
        self.statistic < self.critical_values.pct5
    }
}

/// Runs the ADF regression on `values` with `lags` lagged differences.
pub fn adf(values: &[f64], lags: usize, deterministic: Deterministic) -> Result<AdfResult> {
    let len = values.len();
    if len < lags + 10 {
        return invalid(format!(
            "ADF with {lags} lags needs at least {} observations, got {len}",
            lags + 10
        ));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return invalid("ADF input contains non-finite values");
    }
    let diff: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let nobs = len - 1 - lags;
    let level_col = match deterministic {
        Deterministic::Constant => 1,
        Deterministic::ConstantTrend => 2,
    };
    let ncols = level_col + 1 + lags;
    // observation t (index into values) runs over lags+1 ..= len-1
    let design = DMatrix::from_fn(nobs, ncols, |row, col| {
        let t = row + lags + 1;
        match col {
            0 => 1.0,
            c if c == level_col => values[t - 1],
            1 => t as f64,
            c => {
                let j = c - level_col;
                diff[t - 1 - j]
            }
        }
    });
    let response: Vec<f64> = (0..nobs).map(|row| diff[row + lags]).collect();
    let fit = ols(&design, &response)?;
    let statistic = fit.t_stats[level_col];
    let cv = critical_values(deterministic, nobs);
    Ok(AdfResult {
        label: String::new(),
        statistic,
        gamma: fit.coefficients[level_col],
        p_value: adf_pvalue(statistic, deterministic, nobs),
        lags,
        nobs_included: nobs,
        deterministic,
        critical_values: CriticalValues { pct1: cv[0], pct5: cv[1], pct10: cv[2] },
    })
}

/// Approximate p-value by linear interpolation between the tabulated 1%, 5%
/// and 10% points. Outside that range the nearest level is returned and the
/// bound flag says which side the statistic fell on.
pub fn adf_pvalue(statistic: f64, deterministic: Deterministic, nobs: usize) -> AdfPValue {
    let cv = critical_values(deterministic, nobs);
    let levels = critical::LEVELS;
    let (value, bound) = if statistic < cv[0] {
        (levels[0], TableBound::BelowTable)
    } else if statistic > cv[2] {
        (levels[2], TableBound::AboveTable)
    } else {
        let i = if statistic <= cv[1] { 0 } else { 1 };
        let f = (statistic - cv[i]) / (cv[i + 1] - cv[i]);
        (levels[i] + f * (levels[i + 1] - levels[i]), TableBound::Interpolated)
    };
    AdfPValue {
        p: PValue::new(value, Sided::One, "dickey-fuller-table"),
        bound,
    }
}
