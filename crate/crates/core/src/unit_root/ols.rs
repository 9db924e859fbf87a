use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Columns whose QR diagonal falls below this fraction of the column norm are
/// treated as linearly dependent.
const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OlsFit {
    pub coefficients: Vec<f64>,
    pub standard_errors: Vec<f64>,
    pub t_stats: Vec<f64>,
    pub residuals: Vec<f64>,
    pub nobs: usize,
    pub dof: usize,
    /// Residual sum of squares.
    pub rss: f64,
}

impl OlsFit {
    pub fn fitted(&self, response: &[f64]) -> Vec<f64> {
        response.iter().zip(&self.residuals).map(|(y, e)| y - e).collect()
    }
}

/// Ordinary least squares through a Householder QR of the design.
///
/// Standard errors come from `s² (XᵀX)⁻¹` with `s² = RSS / (n - p)`, where
/// `(XᵀX)⁻¹ = R⁻¹ R⁻ᵀ`.
pub fn ols(design: &DMatrix<f64>, response: &[f64]) -> Result<OlsFit> {
    let (n, p) = design.shape();
    if response.len() != n {
        return invalid(format!("design has {n} rows but response has {}", response.len()));
    }
    if p == 0 || n < p + 1 {
        return invalid(format!("need more rows than regressors, got {n} rows for {p} columns"));
    }
    let y = DVector::from_column_slice(response);
    let qr = design.clone().qr();
    let r = qr.r();
    for j in 0..p {
        let col_norm = design.column(j).norm();
        if col_norm == 0.0 || r[(j, j)].abs() <= RANK_TOL * col_norm {
            return Err(Error::SingularDesign(format!("column {j} is linearly dependent")));
        }
    }
    let qty = qr.q().transpose() * &y;
    let beta = r
        .solve_upper_triangular(&qty)
        .ok_or_else(|| Error::SingularDesign("triangular solve failed".into()))?;
    let resid = &y - design * &beta;
    let rss = resid.norm_squared();
    let dof = n - p;
    let s2 = rss / dof as f64;
    let r_inv = r
        .solve_upper_triangular(&DMatrix::identity(p, p))
        .ok_or_else(|| Error::SingularDesign("R is not invertible".into()))?;
    let standard_errors: Vec<f64> = (0..p)
        .map(|j| (s2 * r_inv.row(j).norm_squared()).sqrt())
        .collect();
    let t_stats = beta
        .iter()
        .zip(&standard_errors)
        .map(|(b, se)| b / se)
        .collect();
    Ok(OlsFit {
        coefficients: beta.iter().copied().collect(),
        standard_errors,
        t_stats,
        residuals: resid.iter().copied().collect(),
        nobs: n,
        dof,
        rss,
    })
}
