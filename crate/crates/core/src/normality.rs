//! Kolmogorov–Smirnov and Jarque–Bera normality tests.

use serde::{Deserialize, Serialize};

use crate::distributions::{chi2_df2_sf, kolmogorov_sf, std_normal_cdf, PValue, Sided};
use crate::error::{degenerate, invalid, Result};
use crate::series::{kurtosis, mean, sample_std, skewness, ChangeSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KsMode {
    /// Compare the raw values against N(0, 1).
    RawStandardNormal,
    /// Standardize with the sample mean and SD first.
    #[default]
    Standardized,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KsOutcome {
    pub d: f64,
    pub p: PValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JarqueBera {
    pub jb: f64,
    pub p: PValue,
    pub skewness: f64,
    pub kurtosis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalityResult {
    pub label: String,
    pub n: usize,
    pub ks_mode: KsMode,
    pub ks_d: f64,
    pub ks_p: PValue,
    pub jb: f64,
    pub jb_p: PValue,
    pub skewness: f64,
    pub kurtosis: f64,
}

/// One-sample KS statistic against the standard normal, with the asymptotic
/// p-value `Q(√n · D)`.
///
/// Both one-sided gaps are checked at every sorted point:
/// `|i/n - Φ(z_i)|` and `|(i-1)/n - Φ(z_i)|`.
pub fn ks_test(values: &[f64], mode: KsMode) -> Result<KsOutcome> {
    let n = values.len();
    if n < 5 {
        return invalid(format!("KS test needs at least 5 observations, got {n}"));
    }
    let mut z: Vec<f64> = match mode {
        KsMode::RawStandardNormal => values.to_vec(),
        KsMode::Standardized => {
            let m = mean(values)?;
            let sd = sample_std(values)?;
            let scale = values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
            if !(sd > scale * 1e-14) {
                return degenerate("zero variance, cannot standardize");
            }
            values.iter().map(|v| (v - m) / sd).collect()
        }
    };
    z.sort_by(f64::total_cmp);
    let nf = n as f64;
    let d = z
        .iter()
        .enumerate()
        .map(|(i, &zi)| {
            let cdf = std_normal_cdf(zi);
            let above = (i + 1) as f64 / nf - cdf;
            let below = cdf - i as f64 / nf;
            above.abs().max(below.abs())
        })
        .fold(0.0_f64, f64::max)
        .min(1.0);
    Ok(KsOutcome {
        d,
        p: PValue::new(kolmogorov_sf(nf.sqrt() * d), Sided::Two, "kolmogorov-asymptotic"),
    })
}

/// `JB = n/6 (S² + (K - 3)² / 4)` with a χ²(2) p-value.
pub fn jarque_bera(values: &[f64]) -> Result<JarqueBera> {
    let n = values.len();
    if n < 8 {
        return invalid(format!("Jarque-Bera needs at least 8 observations, got {n}"));
    }
    let s = skewness(values)?;
    let k = kurtosis(values)?;
    let jb = n as f64 / 6.0 * (s * s + (k - 3.0).powi(2) / 4.0);
    Ok(JarqueBera {
        jb,
        p: PValue::new(chi2_df2_sf(jb)?, Sided::One, "chi2-2-asymptotic"),
        skewness: s,
        kurtosis: k,
    })
}

pub fn normality(changes: &ChangeSeries, ks_mode: KsMode) -> Result<NormalityResult> {
    let ks = ks_test(changes.values(), ks_mode)?;
    let jb = jarque_bera(changes.values())?;
    Ok(NormalityResult {
        label: changes.label().to_string(),
        n: changes.n(),
        ks_mode,
        ks_d: ks.d,
        ks_p: ks.p,
        jb: jb.jb,
        jb_p: jb.p,
        skewness: jb.skewness,
        kurtosis: jb.kurtosis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    /// Standard normal quantile by bisection on the CDF.
    fn normal_quantile(p: f64) -> f64 {
        let (mut lo, mut hi) = (-10.0, 10.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if std_normal_cdf(mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn quantile_sample_has_half_step_gap() {
        let n = 40;
        let xs: Vec<f64> = (1..=n).map(|i| normal_quantile((i as f64 - 0.5) / n as f64)).collect();
        let ks = ks_test(&xs, KsMode::RawStandardNormal).unwrap();
        assert_abs_diff_eq!(ks.d, 0.5 / n as f64, epsilon = 1e-12);
    }

    #[test]
    fn five_point_standardized() {
        // sd = sqrt(2.5); z = x / sqrt(2.5)
        let xs = [-2.0, -1.0, 0.0, 1.0, 2.0];
        let mut d: f64 = 0.0;
        for (i, &x) in xs.iter().enumerate() {
            let c = std_normal_cdf(x / 2.5f64.sqrt());
            d = d.max((c - i as f64 / 5.0).abs()).max(((i + 1) as f64 / 5.0 - c).abs());
        }
        let ks = ks_test(&xs, KsMode::Standardized).unwrap();
        assert_abs_diff_eq!(ks.d, d, epsilon = 1e-12);
    }

    #[test]
    fn ks_errors() {
        assert!(ks_test(&[1.0, 2.0, 3.0, 4.0], KsMode::Standardized).is_err());
        assert!(matches!(ks_test(&[1.0; 10], KsMode::Standardized), Err(crate::Error::Degenerate(_))));
        // raw mode tolerates a constant sample
        assert!(ks_test(&[1.0; 10], KsMode::RawStandardNormal).is_ok());
    }

    #[test]
    fn jb_of_normal_moments_is_zero() {
        // a third of the mass at ±1, the rest at 0: S = 0, K = 3
        let mut xs = vec![-1.0, -1.0, 1.0, 1.0];
        xs.extend([0.0; 8]);
        let jb = jarque_bera(&xs).unwrap();
        assert_abs_diff_eq!(jb.skewness, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(jb.kurtosis, 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(jb.jb, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(jb.p.value, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn jb_p_values() {
        assert_abs_diff_eq!(chi2_df2_sf(7.2904).unwrap(), 0.0261, epsilon = 1e-4);
        let heavy = [0.1, -0.2, 0.05, 4.0, -0.15, 0.2, -3.5, 0.0, 0.3, -0.1];
        let n = heavy.len() as f64;
        let m = heavy.iter().sum::<f64>() / n;
        let mom = |p: i32| heavy.iter().map(|x| (x - m).powi(p)).sum::<f64>() / n;
        let s = mom(3) / mom(2).powf(1.5);
        let k = mom(4) / mom(2).powi(2);
        let expected = n / 6.0 * (s * s + (k - 3.0).powi(2) / 4.0);
        let jb = jarque_bera(&heavy).unwrap();
        assert_abs_diff_eq!(jb.jb, expected, epsilon = 1e-10);
        assert_abs_diff_eq!(jb.p.value, (-expected / 2.0).exp(), epsilon = 1e-15);
        assert!(jarque_bera(&heavy[..7]).is_err());
        assert!(jarque_bera(&[0.5; 12]).is_err());
    }

    proptest! {
        #[test]
        fn standardized_d_affine_invariant(xs in prop::collection::vec(-5.0f64..5.0, 5..50), a in 0.1f64..10.0, b in -20.0f64..20.0) {
            prop_assume!(sample_std(&xs).unwrap() > 1e-3);
            let ys: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
            let d1 = ks_test(&xs, KsMode::Standardized).unwrap().d;
            let d2 = ks_test(&ys, KsMode::Standardized).unwrap().d;
            prop_assert!((d1 - d2).abs() < 1e-9);
            prop_assert!((0.0..=1.0).contains(&d1));
        }

        #[test]
        fn two_sided_gap_dominates_one_sided(xs in prop::collection::vec(-3.0f64..3.0, 5..40)) {
            let mut z = xs.clone();
            z.sort_by(f64::total_cmp);
            let n = z.len() as f64;
            let one_sided = z.iter().enumerate()
                .map(|(i, &v)| ((i + 1) as f64 / n - std_normal_cdf(v)).abs())
                .fold(0.0, f64::max);
            prop_assert!(ks_test(&xs, KsMode::RawStandardNormal).unwrap().d >= one_sided);
        }

        #[test]
        fn jb_identity_and_affine(xs in prop::collection::vec(-5.0f64..5.0, 8..60), a in prop_oneof![-6.0f64..-0.2, 0.2f64..6.0], b in -30.0f64..30.0) {
            prop_assume!(sample_std(&xs).unwrap() > 1e-2);
            let r = jarque_bera(&xs).unwrap();
            let n = xs.len() as f64;
            prop_assert!((r.jb - n / 6.0 * (r.skewness.powi(2) + (r.kurtosis - 3.0).powi(2) / 4.0)).abs() < 1e-12 * (1.0 + r.jb));
            let ys: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
            prop_assert!((jarque_bera(&ys).unwrap().jb - r.jb).abs() < 1e-8 * (1.0 + r.jb));
        }
    }
}
