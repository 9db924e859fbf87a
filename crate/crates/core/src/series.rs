//! Price and change series plus the descriptive statistics the tests share.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{degenerate, invalid, Error, Result};

/// A calendar month. Ordering is chronological.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct YearMonth {
    year: i32,
    month: u32,
}

impl YearMonth {
    pub fn new(year: i32, month: u32) -> Result<Self> {
        if !(1..=12).contains(&month) {
            return invalid(format!("month {month} out of range 1..=12"));
        }
        Ok(YearMonth { year, month })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    pub fn month(self) -> u32 {
        self.month
    }

    /// Months since year 0, January.
    fn ordinal(self) -> i64 {
        self.year as i64 * 12 + (self.month as i64 - 1)
    }

    pub fn succ(self) -> Self {
        if self.month == 12 {
            YearMonth { year: self.year + 1, month: 1 }
        } else {
            YearMonth { year: self.year, month: self.month + 1 }
        }
    }

    /// Signed number of months from `self` to `later`.
    pub fn months_until(self, later: YearMonth) -> i64 {
        later.ordinal() - self.ordinal()
    }
}

impl FromStr for YearMonth {
    type Err = Error;

    /// Accepts `YYYY-MM` or `YYYY-MM-DD`; the day is validated loosely and ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut parts = s.split('-');
        let bad = || Error::Format(format!("unrecognised date {s:?}, expected YYYY-MM or YYYY-MM-DD"));
        let year: i32 = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        let month: u32 = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        if let Some(day) = parts.next() {
            let day: u32 = day.parse().map_err(|_| bad())?;
            if !(1..=31).contains(&day) {
                return Err(bad());
            }
        }
        if parts.next().is_some() {
            return Err(bad());
        }
        YearMonth::new(year, month).map_err(|_| bad())
    }
}

impl fmt::Display for YearMonth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

impl TryFrom<String> for YearMonth {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<YearMonth> for String {
    fn from(ym: YearMonth) -> String {
        ym.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PricePoint {
    pub date: YearMonth,
    pub close: f64,
}

/// Month-end closes for one index.
///
/// Dates are strictly increasing and closes strictly positive. Missing months
/// are allowed; [`PriceSeries::gaps`] counts them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PriceSeries {
    label: String,
    points: Vec<PricePoint>,
}

impl PriceSeries {
    pub fn new(label: impl Into<String>, points: Vec<PricePoint>) -> Result<Self> {
        let label = label.into();
        if points.len() < 3 {
            return invalid(format!(
                "series {label:?} has {} points, need at least 3",
                points.len()
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if !(p.close.is_finite() && p.close > 0.0) {
                return invalid(format!(
                    "series {label:?}: close {} at {} is not a positive finite price",
                    p.close, p.date
                ));
            }
            if i > 0 && points[i - 1].date >= p.date {
                return invalid(format!(
                    "series {label:?}: dates not strictly increasing at {}",
                    p.date
                ));
            }
        }
        Ok(PriceSeries { label, points })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn points(&self) -> &[PricePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn closes(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.close).collect()
    }

    /// Calendar months missing between the first and last observation.
    pub fn gaps(&self) -> usize {
        let first = self.points[0].date;
        let last = self.points[self.points.len() - 1].date;
        (first.months_until(last) + 1) as usize - self.points.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChangeMode {
    /// `p_t - p_{t-1}`
    #[default]
    ArithmeticDiff,
    /// `ln(p_t / p_{t-1})`
    LogReturn,
}

impl fmt::Display for ChangeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChangeMode::ArithmeticDiff => "arithmetic_diff",
            ChangeMode::LogReturn => "log_return",
        })
    }
}

/// Month-end changes derived from a [`PriceSeries`], or supplied directly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChangeSeries {
    label: String,
    values: Vec<f64>,
    mode: ChangeMode,
}

impl ChangeSeries {
    /// Wraps precomputed changes. Values must be finite.
    pub fn from_values(label: impl Into<String>, values: Vec<f64>, mode: ChangeMode) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return invalid("change series contains non-finite values");
        }
        Ok(ChangeSeries { label: label.into(), values, mode })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mode(&self) -> ChangeMode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn mean(&self) -> Result<f64> {
        mean(&self.values)
    }
}

/// First differences or log returns of consecutive closes.
pub fn changes(series: &PriceSeries, mode: ChangeMode) -> Result<ChangeSeries> {
    if series.len() < 3 {
        return invalid("need at least 3 prices to form changes");
    }
    let values = series
        .points
        .windows(2)
        .map(|w| match mode {
            ChangeMode::ArithmeticDiff => w[1].close - w[0].close,
            ChangeMode::LogReturn => (w[1].close / w[0].close).ln(),
        })
        .collect();
    ChangeSeries::from_values(series.label.clone(), values, mode)
}

pub fn mean(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return invalid("mean of empty input");
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Sample standard deviation with the `n - 1` divisor.
pub fn sample_std(values: &[f64]) -> Result<f64> {
    if values.len() < 2 {
        return invalid("sample standard deviation needs at least 2 values");
    }
    let m = mean(values)?;
    let ss: f64 = values.iter().map(|v| (v - m).powi(2)).sum();
    Ok((ss / (values.len() - 1) as f64).sqrt())
}

/// Population central moments m2, m3, m4 (divisor n).
fn central_moments(values: &[f64]) -> Result<(f64, f64, f64)> {
    if values.len() < 3 {
        return invalid("higher moments need at least 3 values");
    }
    let n = values.len() as f64;
    let m = mean(values)?;
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for v in values {
        let d = v - m;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    let (m2, m3, m4) = (m2 / n, m3 / n, m4 / n);
    // relative to the data scale, so that a constant series with rounding
    // noise in the mean still counts as degenerate
    let scale = values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    if m2 <= (scale * 1e-14).powi(2) {
        return degenerate("zero variance");
    }
    Ok((m2, m3, m4))
}

/// Moment skewness `m3 / m2^{3/2}`.
pub fn skewness(values: &[f64]) -> Result<f64> {
    let (m2, m3, _) = central_moments(values)?;
    Ok(m3 / m2.powf(1.5))
}

/// Moment kurtosis `m4 / m2^2` (not excess; a normal sample gives about 3).
pub fn kurtosis(values: &[f64]) -> Result<f64> {
    let (m2, _, m4) = central_moments(values)?;
    Ok(m4 / (m2 * m2))
}
