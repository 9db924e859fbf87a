//! Wald–Wolfowitz runs test about the mean.
//!
//! Each change is classified as above (`Up`) or below (`Down`) the series
//! mean; changes exactly at the mean are dropped and counted. The number of
//! runs is compared to its permutation expectation with a normal
//! approximation and a 0.5 continuity correction toward zero.

use serde::{Deserialize, Serialize};

use crate::distributions::{two_sided_normal_p, PValue, Sided};
use crate::error::{degenerate, Result};
use crate::series::{mean, ChangeSeries};

/// Below this many classified changes the normal approximation is flagged.
pub const MIN_NORMAL_APPROX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Down,
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub signs: Vec<Sign>,
    pub ties_excluded: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunCounts {
    pub nruns: usize,
    pub n_down: usize,
    pub n_up: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunsResult {
    pub label: String,
    /// Classified changes, `n_down + n_up`.
    pub n: usize,
    pub n_down: usize,
    pub n_up: usize,
    pub nruns: usize,
    pub expected_runs: f64,
    pub variance: f64,
    pub z: f64,
    pub p: PValue,
    pub ties_excluded: usize,
    /// Set when `n` is below [`MIN_NORMAL_APPROX_N`].
    pub small_sample: bool,
}

/// Relative tolerance, against the largest magnitude in the series, within
/// which a change counts as equal to the mean.
const TIE_TOL: f64 = 1e-12;

/// Classifies each change relative to the series mean.
pub fn classify_relative_to_mean(values: &[f64]) -> Classification {
    let Ok(m) = mean(values) else {
        return Classification { signs: Vec::new(), ties_excluded: 0 };
    };
    let tol = TIE_TOL * values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    let mut signs = Vec::with_capacity(values.len());
    let mut ties_excluded = 0;
    for &v in values {
        if v - m > tol {
            signs.push(Sign::Up);
        } else if m - v > tol {
            signs.push(Sign::Down);
        } else {
            ties_excluded += 1;
        }
    }
    Classification { signs, ties_excluded }
}

pub fn count_runs(signs: &[Sign]) -> Result<RunCounts> {
    if signs.is_empty() {
        return degenerate("no classified observations to count runs over");
    }
    let nruns = 1 + signs.windows(2).filter(|w| w[0] != w[1]).count();
    let n_up = signs.iter().filter(|&&s| s == Sign::Up).count();
    Ok(RunCounts { nruns, n_down: signs.len() - n_up, n_up })
}

/// Expected number of runs for any number of categories:
/// `M = (N(N+1) - Σ n_i²) / N` with `N = Σ n_i`.
pub fn expected_runs(counts: &[usize]) -> Result<f64> {
    let n: usize = counts.iter().sum();
    if n == 0 {
        return degenerate("expected runs undefined for N = 0");
    }
    let n = n as f64;
    let sq: f64 = counts.iter().map(|&c| (c as f64).powi(2)).sum();
    Ok((n * (n + 1.0) - sq) / n)
}

/// Variance of the run count for two categories,
/// `2 n0 n1 (2 n0 n1 - N) / (N² (N - 1))`.
pub fn runs_variance(n_down: usize, n_up: usize) -> Result<f64> {
    let n = n_down + n_up;
    if n < 2 {
        return degenerate(format!("runs variance needs N >= 2, got {n}"));
    }
    let (a, b, n) = (n_down as f64, n_up as f64, n as f64);
    let prod = 2.0 * a * b;
    Ok(prod * (prod - n) / (n * n * (n - 1.0)))
}

/// Runs statistic from summary counts alone.
pub fn runs_statistic(n_down: usize, n_up: usize, nruns: usize) -> Result<RunsResult> {
    let n = n_down + n_up;
    if n < 2 {
        return degenerate(format!("runs test needs at least 2 classified changes, got {n}"));
    }
    if n_down == 0 || n_up == 0 {
        return degenerate("one sign category is empty, runs variance is zero");
    }
    let expected = expected_runs(&[n_down, n_up])?;
    let variance = runs_variance(n_down, n_up)?;
    if !(variance > 0.0) {
        return degenerate("runs variance is zero");
    }
    let diff = nruns as f64 - expected;
    let corrected = diff.signum() * (diff.abs() - 0.5).max(0.0);
    let z = corrected / variance.sqrt();
    Ok(RunsResult {
        label: String::new(),
        n,
        n_down,
        n_up,
        nruns,
        expected_runs: expected,
        variance,
        z,
        p: PValue::new(two_sided_normal_p(z), Sided::Two, "normal-asymptotic"),
        ties_excluded: 0,
        small_sample: n < MIN_NORMAL_APPROX_N,
    })
}

pub fn runs_test(changes: &ChangeSeries) -> Result<RunsResult> {
    let class = classify_relative_to_mean(changes.values());
    let counts = count_runs(&class.signs)?;
    let mut r = runs_statistic(counts.n_down, counts.n_up, counts.nruns)?;
    r.label = changes.label().to_string();
    r.ties_excluded = class.ties_excluded;
    Ok(r)
}
