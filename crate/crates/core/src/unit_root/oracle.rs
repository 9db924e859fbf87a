//! Independent least-squares oracle for tests: explicit normal equations.

/// Normal equations solved by Gauss-Jordan elimination with partial pivoting.
pub fn normal_equations(x: &[Vec<f64>], y: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let p = x[0].len();
    let mut a = vec![vec![0.0; 2 * p + 1]; p];
    for i in 0..p {
        for j in 0..p {
            a[i][j] = x.iter().map(|r| r[i] * r[j]).sum();
        }
        a[i][p + i] = 1.0;
        a[i][2 * p] = x.iter().zip(y).map(|(r, yy)| r[i] * yy).sum();
    }
    for c in 0..p {
        let piv = (c..p).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        a.swap(c, piv);
        let d = a[c][c];
        for v in a[c].iter_mut() {
            *v /= d;
        }
        for r in 0..p {
            if r != c {
                let f = a[r][c];
                for k in 0..=2 * p {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
    }
    let beta: Vec<f64> = (0..p).map(|i| a[i][2 * p]).collect();
    let rss: f64 = x
        .iter()
        .zip(y)
        .map(|(r, yy)| (yy - r.iter().zip(&beta).map(|(a, b)| a * b).sum::<f64>()).powi(2))
        .sum();
    let s2 = rss / (x.len() - p) as f64;
    let se = (0..p).map(|i| (s2 * a[i][p + i]).sqrt()).collect();
    (beta, se)
}
