use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::unit_root::{AdfResult, TableBound};

use super::{EfficiencyReport, IndexReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::InvalidInput(format!("unknown report format {other:?}"))),
        }
    }
}

pub fn render(report: &EfficiencyReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Markdown => markdown(report),
        ReportFormat::Csv => csv(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is always serializable");
            s.push('\n');
            s
        }
    }
}

const NA: &str = "n/a";

fn f4(v: f64) -> String {
    format!("{v:.4}")
}

fn adf_p(r: &AdfResult) -> String {
    let p = f4(r.p_value.p.value);
    match r.p_value.bound {
        TableBound::Interpolated => p,
        TableBound::BelowTable => format!("<{p}"),
        TableBound::AboveTable => format!(">{p}"),
    }
}

/// A table with one column per index and one row per statistic.
struct Wide<'a> {
    entries: &'a [IndexReport],
    out: &'a mut String,
}

impl Wide<'_> {
    fn header(&mut self, corner: &str) {
        let mut line = format!("| {corner} |");
        let mut rule = String::from("|---|");
        for e in self.entries {
            let _ = write!(line, " {} |", e.label);
            rule.push_str("---:|");
        }
        let _ = writeln!(self.out, "{line}\n{rule}");
        if self.entries.is_empty() {
            let _ = writeln!(self.out, "| no data |");
        }
    }

    fn row(&mut self, name: &str, cell: impl Fn(&IndexReport) -> Option<String>) {
        if self.entries.is_empty() {
            return;
        }
        let mut line = format!("| {name} |");
        for e in self.entries {
            let _ = write!(line, " {} |", cell(e).unwrap_or_else(|| NA.to_string()));
        }
        let _ = writeln!(self.out, "{line}");
    }
}

fn markdown(report: &EfficiencyReport) -> String {
    let cfg = &report.config;
    let entries = &report.entries;
    let mut out = String::new();
    let _ = writeln!(out, "# Weak-form efficiency report\n");
    let _ = writeln!(
        out,
        "Changes: {} | ACF lags: {} ({:?} standard error) | ADF: {} lag(s), {} | KS: {:?} | alpha: {}\n",
        cfg.change_mode, cfg.max_lag, cfg.se_mode, cfg.adf_lags, cfg.adf_deterministic, cfg.ks_mode, cfg.alpha
    );

    let _ = writeln!(out, "## Autocorrelation of monthly changes\n");
    let mut t = Wide { entries, out: &mut out };
    t.header("Lag (k)");
    let lags = entries
        .iter()
        .filter_map(|e| e.acf.as_ref().map(|a| a.rows.len()))
        .max()
        .unwrap_or(0);
    for k in 1..=lags {
        t.row(&k.to_string(), |e| {
            let row = e.acf.as_ref()?.rows.get(k - 1)?;
            let mark = if row.significant_5pct { "*" } else { "" };
            Some(format!("{}{mark}", f4(row.acf)))
        });
    }
    t.row("Standard Deviation", |e| e.acf.as_ref().map(|a| format!("{:.5}", a.summary_sd)));
    t.row("Standard Error", |e| e.acf.as_ref().map(|a| format!("{:.5}", a.summary_se)));
    t.row("se(ACF)", |e| e.acf.as_ref().and_then(|a| a.rows.first()).map(|r| f4(r.se)));
    t.row("Lags with abs(t) > 1.96", |e| {
        e.acf.as_ref().map(|a| format!("{}/{}", a.significant_count(), a.rows.len()))
    });
    t.row("Lags with abs(ACF) > 2 se", |e| {
        e.acf
            .as_ref()
            .map(|a| format!("{}/{}", a.rows.iter().filter(|r| r.exceeds_two_se).count(), a.rows.len()))
    });
    let _ = writeln!(out, "\n`*` marks abs(t) > 1.96.\n");

    let _ = writeln!(out, "## Runs analysis of month-end changes relative to the mean\n");
    let _ = writeln!(out, "| Index | N | n_0 | n_1 | nruns | Z | p-value |\n|---|---:|---:|---:|---:|---:|---:|");
    if entries.is_empty() {
        let _ = writeln!(out, "| no data |");
    }
    for e in entries {
        match &e.runs {
            Some(r) => {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    e.label, r.n, r.n_down, r.n_up, r.nruns, f4(r.z), f4(r.p.value)
                );
            }
            None => {
                let _ = writeln!(out, "| {} | {NA} | {NA} | {NA} | {NA} | {NA} | {NA} |", e.label);
            }
        }
    }
    let _ = writeln!(out);

    for (title, levels) in [("ADF test of month-end changes", false), ("ADF test of price levels", true)] {
        let _ = writeln!(out, "## {title}\n");
        let pick = move |e: &IndexReport| if levels { e.adf_levels.clone() } else { e.adf.clone() };
        let mut t = Wide { entries, out: &mut out };
        t.header("");
        t.row("ADF test statistic", |e| pick(e).map(|r| f4(r.statistic)));
        t.row("p-Value", |e| pick(e).map(|r| adf_p(&r)));
        t.row("5% critical value", |e| pick(e).map(|r| f4(r.critical_values.pct5)));
        t.row("Included Observations", |e| pick(e).map(|r| r.nobs_included.to_string()));
        t.row("Number of lags", |e| pick(e).map(|r| r.lags.to_string()));
        let _ = writeln!(out);
    }

    let _ = writeln!(out, "## Kolmogorov-Smirnov test\n");
    let mut t = Wide { entries, out: &mut out };
    t.header("");
    t.row("Test statistic", |e| e.normality.as_ref().map(|n| f4(n.ks_d)));
    t.row("p-value", |e| e.normality.as_ref().map(|n| f4(n.ks_p.value)));
    let _ = writeln!(out);

    let _ = writeln!(out, "## Jarque-Bera test\n");
    let mut t = Wide { entries, out: &mut out };
    t.header("");
    t.row("Jarque-Bera", |e| e.normality.as_ref().map(|n| f4(n.jb)));
    t.row("JB p-value", |e| e.normality.as_ref().map(|n| f4(n.jb_p.value)));
    t.row("Skewness", |e| e.normality.as_ref().map(|n| f4(n.skewness)));
    t.row("Kurtosis", |e| e.normality.as_ref().map(|n| f4(n.kurtosis)));
    let _ = writeln!(out);

    let _ = writeln!(out, "## Notes\n");
    let mut any = false;
    for e in entries {
        for n in &e.notes {
            any = true;
            let _ = writeln!(out, "- {}: {n}", e.label);
        }
    }
    if !any {
        let _ = writeln!(out, "- none");
    }
    out
}

/// Long format: one statistic per line, `index,section,statistic,lag,value`.
fn csv(report: &EfficiencyReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "section", "statistic", "lag", "value"]).expect("in-memory write");
    let mut put = |idx: &str, sec: &str, stat: &str, lag: Option<usize>, val: String| {
        let lag = lag.map(|l| l.to_string()).unwrap_or_default();
        w.write_record([idx, sec, stat, lag.as_str(), val.as_str()]).expect("in-memory write");
    };
    for e in &report.entries {
        let l = e.label.as_str();
        put(l, "data", "n_prices", None, e.n_prices.to_string());
        put(l, "data", "gaps", None, e.gaps.to_string());
        if let Some(a) = &e.acf {
            for r in &a.rows {
                put(l, "acf", "acf", Some(r.lag), f4(r.acf));
                put(l, "acf", "se", Some(r.lag), f4(r.se));
                put(l, "acf", "t", Some(r.lag), f4(r.t));
            }
            put(l, "acf", "summary_sd", None, f4(a.summary_sd));
            put(l, "acf", "summary_se", None, f4(a.summary_se));
        }
        if let Some(r) = &e.runs {
            put(l, "runs", "n", None, r.n.to_string());
            put(l, "runs", "n_0", None, r.n_down.to_string());
            put(l, "runs", "n_1", None, r.n_up.to_string());
            put(l, "runs", "nruns", None, r.nruns.to_string());
            put(l, "runs", "expected_runs", None, f4(r.expected_runs));
            put(l, "runs", "z", None, f4(r.z));
            put(l, "runs", "p", None, f4(r.p.value));
        }
        for (sec, adf) in [("adf", &e.adf), ("adf_levels", &e.adf_levels)] {
            if let Some(r) = adf {
                put(l, sec, "statistic", None, f4(r.statistic));
                put(l, sec, "p", None, adf_p(r));
                put(l, sec, "nobs_included", None, r.nobs_included.to_string());
                put(l, sec, "lags", None, r.lags.to_string());
            }
        }
        if let Some(n) = &e.normality {
            put(l, "ks", "d", None, f4(n.ks_d));
            put(l, "ks", "p", None, f4(n.ks_p.value));
            put(l, "jb", "jb", None, f4(n.jb));
            put(l, "jb", "p", None, f4(n.jb_p.value));
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{PValue, Sided};
    use crate::report::AnalysisConfig;
    use crate::runs::runs_statistic;

    fn with_runs() -> EfficiencyReport {
        let mut runs = runs_statistic(59, 59, 67).unwrap();
        runs.label = "BSE LargeCap".into();
        runs.p = PValue::new(0.2290, Sided::Two, "normal-asymptotic");
        EfficiencyReport {
            config: AnalysisConfig::default(),
            entries: vec![IndexReport {
                label: "BSE LargeCap".into(),
                n_prices: 119,
                n_changes: 118,
                gaps: 0,
                acf: None,
                runs: Some(runs),
                adf: None,
                adf_levels: None,
                normality: None,
                notes: vec![],
            }],
        }
    }

    #[test]
    fn runs_row_format() {
        let md = render(&with_runs(), ReportFormat::Markdown);
        assert!(md.contains("| BSE LargeCap | 118 | 59 | 59 | 67 | 1.2019 | 0.2290 |"), "{md}");
        assert!(md.contains("| ADF test statistic | n/a |"));
    }

    #[test]
    fn pvalue_rounding_is_fixed_width() {
        let mut r = with_runs();
        r.entries[0].runs.as_mut().unwrap().p = PValue::new(0.2, Sided::Two, "normal-asymptotic");
        assert!(render(&r, ReportFormat::Markdown).contains("| 0.2000 |"));
    }

    #[test]
    fn empty_report_placeholders() {
        let r = EfficiencyReport { config: AnalysisConfig::default(), entries: vec![] };
        let md = render(&r, ReportFormat::Markdown);
        assert!(md.matches("| no data |").count() >= 5, "{md}");
        assert_eq!(render(&r, ReportFormat::Csv), "index,section,statistic,lag,value\n");
    }

    #[test]
    fn deterministic_and_json_round_trip() {
        let r = with_runs();
        for f in [ReportFormat::Markdown, ReportFormat::Csv, ReportFormat::Json] {
            assert_eq!(render(&r, f), render(&r, f));
        }
        let back: EfficiencyReport = serde_json::from_str(&render(&r, ReportFormat::Json)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn format_names() {
        assert_eq!("md".parse::<ReportFormat>().unwrap(), ReportFormat::Markdown);
        assert_eq!("JSON".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
