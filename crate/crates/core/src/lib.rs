//! Weak-form market efficiency and random-walk testing for monthly price series.
//!
//! The crate bundles the classic battery applied to index month-end changes:
//! lag-k autocorrelations with t-tests, the Wald–Wolfowitz runs test about the
//! mean, the augmented Dickey–Fuller unit-root test, and Kolmogorov–Smirnov /
//! Jarque–Bera normality tests. A seeded simulator supplies synthetic random
//! walks for size and power checks, and [`report`] ties everything together
//! into CSV ingestion, batch analysis, and table rendering.

pub mod autocorrelation;
pub mod distributions;
pub mod error;
pub mod normality;
pub mod report;
pub mod runs;
pub mod series;
pub mod simulate;
pub mod unit_root;

pub use autocorrelation::{acf, acf_se, acf_summary, acf_t, acf_table, AcfResult, AcfRow, SeMode};
pub use distributions::{chi2_df2_sf, kolmogorov_sf, std_normal_cdf, PValue, Sided};
pub use error::{Error, Result};
pub use normality::{jarque_bera, ks_test, normality, JarqueBera, KsMode, KsOutcome, NormalityResult};
pub use report::{
    analyze, ingest_csv, render, write_prices_csv, AnalysisConfig, EfficiencyReport, IndexReport,
    ReportFormat,
};
pub use runs::{
    classify_relative_to_mean, count_runs, expected_runs, runs_statistic, runs_test, runs_variance,
    Classification, RunCounts, RunsResult, Sign,
};
pub use series::{
    changes, kurtosis, mean, sample_std, skewness, ChangeMode, ChangeSeries, PricePoint,
    PriceSeries, YearMonth,
};
pub use simulate::{simulate, Model, SimSpec, Simulation};
pub use unit_root::{adf, adf_pvalue, ols, AdfPValue, AdfResult, Deterministic, OlsFit, TableBound};
