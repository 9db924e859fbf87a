//! Reference distributions used for p-values.
//!
//! Only what the battery needs: the standard normal CDF, the chi-square
//! survival function with two degrees of freedom, and the asymptotic
//! Kolmogorov distribution. Significance of t-ratios uses the normal
//! approximation with a fixed 1.96 two-sided cutoff, so there is no Student-t.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Two-sided 5% critical value of the standard normal.
pub const Z_CRIT_5PCT: f64 = 1.96;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sided {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PValue {
    pub value: f64,
    pub sided: Sided,
    /// How the value was obtained, e.g. `normal-asymptotic`.
    pub method: String,
}

impl PValue {
    /// Clamps `value` into `[0, 1]`.
    pub fn new(value: f64, sided: Sided, method: impl Into<String>) -> Self {
        PValue { value: value.clamp(0.0, 1.0), sided, method: method.into() }
    }

    pub fn rejects_at(&self, alpha: f64) -> bool {
        self.value < alpha
    }
}

/// Standard normal CDF, via `erfc` so that both tails keep full relative precision.
pub fn std_normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Two-sided normal tail probability `2(1 - Φ(|z|))`.
pub fn two_sided_normal_p(z: f64) -> f64 {
    (2.0 * std_normal_cdf(-z.abs())).min(1.0)
}

/// Survival function of χ²(2), which is exactly `exp(-x/2)`.
pub fn chi2_df2_sf(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return invalid(format!("chi-square statistic must be non-negative, got {x}"));
    }
    Ok((-x / 2.0).exp())
}

/// Asymptotic Kolmogorov survival function
/// `Q(λ) = 2 Σ_{j≥1} (-1)^{j-1} exp(-2 j² λ²)`, clamped to `[0, 1]`.
///
/// Below `λ = 1.18` the alternating series cancels badly, so the equivalent
/// theta-function form `1 - √(2π)/λ Σ_{j≥1} exp(-(2j-1)² π² / (8λ²))` is
/// summed instead.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if !(lambda > 0.0) {
        return 1.0;
    }
    let q = if lambda < 1.18 {
        let c = std::f64::consts::PI.powi(2) / (8.0 * lambda * lambda);
        let mut sum = 0.0;
        for j in 1..=10_000u32 {
            let k = (2 * j - 1) as f64;
            let term = (-k * k * c).exp();
            sum += term;
            if term < 1e-12 {
                break;
            }
        }
        1.0 - (2.0 * std::f64::consts::PI).sqrt() / lambda * sum
    } else {
        let mut sum = 0.0;
        let mut sign = 1.0;
        for j in 1..=10_000u32 {
            let j = j as f64;
            let term = (-2.0 * j * j * lambda * lambda).exp();
            sum += sign * term;
            if term < 1e-12 {
                break;
            }
            sign = -sign;
        }
        2.0 * sum
    };
    q.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Composite Simpson integration of the normal density from -12 to x.
    fn phi_quadrature(x: f64) -> f64 {
        let lo = -12.0;
        let steps = 20_000;
        let h = (x - lo) / steps as f64;
        let pdf = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let mut s = pdf(lo) + pdf(x);
        for i in 1..steps {
            let t = lo + i as f64 * h;
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * pdf(t);
        }
        s * h / 3.0
    }

    #[test]
    fn normal_cdf_points() {
        assert_eq!(std_normal_cdf(0.0), 0.5);
        assert_abs_diff_eq!(phi_quadrature(1.2019), 0.88530, epsilon = 1e-4);
        assert_abs_diff_eq!(std_normal_cdf(1.2019), phi_quadrature(1.2019), epsilon = 1e-9);
        assert_abs_diff_eq!(two_sided_normal_p(1.2019), 0.2290, epsilon = 1e-3);
        for i in 0..=160 {
            let x = -8.0 + 0.1 * i as f64;
            assert!((std_normal_cdf(x) + std_normal_cdf(-x) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn chi2_df2() {
        assert_eq!(chi2_df2_sf(0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(chi2_df2_sf(2.0 * 2f64.ln()).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(chi2_df2_sf(7.2904).unwrap(), 0.026116, epsilon = 1e-6);
        assert!(chi2_df2_sf(-1.0).is_err());
        assert!(chi2_df2_sf(f64::NAN).is_err());
    }

    #[test]
    fn chi2_df2_matches_density_integral() {
        // sf(x) = ∫_x^∞ ½ e^{-t/2} dt, integrated on [x, x+80] by Simpson
        for i in 0..40 {
            let x = 0.5 * i as f64;
            let steps = 4000;
            let h = 80.0 / steps as f64;
            let f = |t: f64| 0.5 * (-t / 2.0).exp();
            let mut s = f(x) + f(x + 80.0);
            for k in 1..steps {
                s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(x + k as f64 * h);
            }
            assert_abs_diff_eq!(chi2_df2_sf(x).unwrap(), s * h / 3.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn kolmogorov_points() {
        assert_eq!(kolmogorov_sf(0.0), 1.0);
        assert!(kolmogorov_sf(10.0) < 1e-12);
        assert_abs_diff_eq!(kolmogorov_sf(1.0), 0.27000, epsilon = 1e-4);
        // both forms agree where they meet
        let direct = |l: f64| 2.0 * (1..200).map(|j| {
            let j = j as f64;
            (-1f64).powf(j - 1.0) * (-2.0 * j * j * l * l).exp()
        }).sum::<f64>();
        for l in [0.6, 0.9, 1.0, 1.17, 1.19, 1.5] {
            assert_abs_diff_eq!(kolmogorov_sf(l), direct(l), epsilon = 1e-12);
        }
        // 5% critical value of the Kolmogorov distribution
        assert_abs_diff_eq!(kolmogorov_sf(1.3581), 0.05, epsilon = 1e-4);
        let mut prev = 1.0;
        for i in 1..300 {
            let v = kolmogorov_sf(i as f64 * 0.01);
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn pvalue_clamps() {
        assert_eq!(PValue::new(1.2, Sided::Two, "x").value, 1.0);
        assert_eq!(PValue::new(-0.1, Sided::Two, "x").value, 0.0);
    }
}
