//! Wide CSV price files: a `date` column followed by one column of closes per
//! index. Blank cells are gaps.

use std::collections::BTreeMap;
use std::io::Read;

use crate::error::{invalid, Error, Result};
use crate::series::{PricePoint, PriceSeries, YearMonth};

/// Reads a wide price CSV into one [`PriceSeries`] per index column.
///
/// Dates must be strictly increasing down the file; `YYYY-MM` and
/// `YYYY-MM-DD` are both accepted (the day is dropped).
pub fn ingest_csv<R: Read>(reader: R) -> Result<Vec<PriceSeries>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| Error::Format(format!("cannot read header: {e}")))?
        .clone();
    match headers.get(0) {
        Some(h) if h.eq_ignore_ascii_case("date") => {}
        other => {
            return Err(Error::Format(format!(
                "first header column must be \"date\", found {:?}",
                other.unwrap_or("")
            )))
        }
    }
    let labels: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
    if labels.is_empty() {
        return Err(Error::Format("no index columns after \"date\"".into()));
    }
    let mut columns: Vec<Vec<PricePoint>> = vec![Vec::new(); labels.len()];
    let mut prev: Option<YearMonth> = None;
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Format(format!("malformed CSV: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let date: YearMonth = record
            .get(0)
            .unwrap_or("")
            .parse()
            .map_err(|e| Error::Format(format!("row {line}: {e}")))?;
        if let Some(p) = prev {
            if date <= p {
                return Err(Error::Format(format!(
                    "row {line}: date {date} does not follow {p} (dates must be strictly increasing, one row per month)"
                )));
            }
        }
        prev = Some(date);
        for (col, label) in labels.iter().enumerate() {
            let cell = record.get(col + 1).unwrap_or("");
            if cell.is_empty() {
                continue;
            }
            let close: f64 = cell.parse().map_err(|_| {
                Error::Format(format!("row {line}, column {label:?}: {cell:?} is not a number"))
            })?;
            if !(close.is_finite() && close > 0.0) {
                return Err(Error::Format(format!(
                    "row {line}, column {label:?}: price {cell} must be positive"
                )));
            }
            columns[col].push(PricePoint { date, close });
        }
    }
    labels
        .into_iter()
        .zip(columns)
        .map(|(label, points)| {
            if points.len() < 3 {
                return invalid(format!(
                    "column {label:?} has {} usable prices, need at least 3",
                    points.len()
                ));
            }
            PriceSeries::new(label, points)
        })
        .collect()
}

/// Writes series in the wide layout [`ingest_csv`] reads. Prices use Rust's
/// shortest round-trip formatting, so ingesting the output is lossless.
pub fn write_prices_csv(series: &[PriceSeries]) -> String {
    let mut rows: BTreeMap<YearMonth, Vec<Option<f64>>> = BTreeMap::new();
    for (i, s) in series.iter().enumerate() {
        for p in s.points() {
            rows.entry(p.date).or_insert_with(|| vec![None; series.len()])[i] = Some(p.close);
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["date".to_string()];
    header.extend(series.iter().map(|s| s.label().to_string()));
    w.write_record(&header).expect("in-memory write");
    for (date, cells) in rows {
        let mut rec = vec![date.to_string()];
        rec.extend(cells.into_iter().map(|c| c.map(|v| v.to_string()).unwrap_or_default()));
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}
