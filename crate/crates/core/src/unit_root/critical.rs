//! Dickey–Fuller critical values for the t-ratio on the lagged level.
//!
//! Values are Fuller (1976), Table 8.5.2, as reprinted in Hamilton (1994),
//! Table B.6: case 2 (constant, no trend) and case 4 (constant and linear
//! trend). Finite-sample rows are at n = 25, 50, 100, 250, 500; the final row
//! is the asymptotic distribution. Between rows the values are interpolated
//! linearly in 1/n.

use super::Deterministic;

/// `(n, [1%, 5%, 10%])`; `None` marks the asymptotic row.
type Row = (Option<usize>, [f64; 3]);

const CONSTANT: [Row; 6] = [
    (Some(25), [-3.75, -3.00, -2.63]),
    (Some(50), [-3.58, -2.93, -2.60]),
    (Some(100), [-3.51, -2.89, -2.58]),
    (Some(250), [-3.46, -2.88, -2.57]),
    (Some(500), [-3.44, -2.87, -2.57]),
    (None, [-3.43, -2.86, -2.57]),
];

const CONSTANT_TREND: [Row; 6] = [
    (Some(25), [-4.38, -3.60, -3.24]),
    (Some(50), [-4.15, -3.50, -3.18]),
    (Some(100), [-4.04, -3.45, -3.15]),
    (Some(250), [-3.99, -3.43, -3.13]),
    (Some(500), [-3.98, -3.42, -3.13]),
    (None, [-3.96, -3.41, -3.12]),
];

pub const LEVELS: [f64; 3] = [0.01, 0.05, 0.10];

fn table(det: Deterministic) -> &'static [Row; 6] {
    match det {
        Deterministic::Constant => &CONSTANT,
        Deterministic::ConstantTrend => &CONSTANT_TREND,
    }
}

/// Critical values at 1%, 5%, 10% for sample size `nobs`. Sizes below the
/// first row use that row.
pub fn critical_values(det: Deterministic, nobs: usize) -> [f64; 3] {
    let rows = table(det);
    let inv = |r: &Row| r.0.map_or(0.0, |n| 1.0 / n as f64);
    let x = 1.0 / nobs.max(1) as f64;
    if x >= inv(&rows[0]) {
        return rows[0].1;
    }
    for w in rows.windows(2) {
        let (hi, lo) = (inv(&w[0]), inv(&w[1]));
        if x <= hi && x >= lo {
            let f = (hi - x) / (hi - lo);
            return std::array::from_fn(|i| w[0].1[i] + f * (w[1].1[i] - w[0].1[i]));
        }
    }
    rows[rows.len() - 1].1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_and_ordering() {
        assert_eq!(critical_values(Deterministic::Constant, 100), [-3.51, -2.89, -2.58]);
        assert_eq!(critical_values(Deterministic::ConstantTrend, 25), [-4.38, -3.60, -3.24]);
        assert_eq!(critical_values(Deterministic::Constant, 10), [-3.75, -3.00, -2.63]);
        assert_eq!(critical_values(Deterministic::Constant, usize::MAX)[1], -2.86);
        for det in [Deterministic::Constant, Deterministic::ConstantTrend] {
            for n in [20, 30, 75, 116, 300, 1000, 100_000] {
                let cv = critical_values(det, n);
                assert!(cv[0] < cv[1] && cv[1] < cv[2], "{det:?} {n} {cv:?}");
            }
        }
    }

    #[test]
    fn interpolation_between_rows() {
        // 1/75 sits at 2/3 of the way from 1/50 to 1/100
        let cv = critical_values(Deterministic::Constant, 75);
        let f = (1.0 / 50.0 - 1.0 / 75.0) / (1.0 / 50.0 - 1.0 / 100.0);
        assert!((cv[1] - (-2.93 + f * (-2.89 + 2.93))).abs() < 1e-12);
    }
}
