//! PCA on standardized features (the correlation-matrix variant), with the
//! symmetric eigenproblem solved by cyclic Jacobi rotations.

use super::MlError;

const JACOBI_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct PcaResult {
    /// n_factors x F orthonormal rows, each with its largest-magnitude
    /// loading made positive.
    pub components: Vec<Vec<f64>>,
    /// Eigenvalues of the covariance of the standardized data, descending.
    pub explained_variance: Vec<f64>,
    /// records x n_factors projections of the standardized data.
    pub scores: Vec<Vec<f64>>,
}

/// Eigenvalues and eigenvectors (as columns) of a symmetric matrix by
/// cyclic Jacobi rotations; converged when the off-diagonal norm drops
/// below 1e-12.
pub(crate) fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off < JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < JACOBI_TOL / (n as f64) {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
                for row in v.iter_mut() {
                    let vip = row[p];
                    let viq = row[q];
                    row[p] = c * vip - s * viq;
                    row[q] = s * vip + c * viq;
                }
            }
        }
    }
    let eigenvalues = (0..n).map(|i| a[i][i]).collect();
    (eigenvalues, v)
}

pub fn pca(features: &[Vec<f64>], n_factors: usize) -> Result<PcaResult, MlError> {
    if features.is_empty() || features[0].is_empty() {
        return Err(MlError::EmptyMatrix);
    }
    let rows = features.len();
    let cols = features[0].len();
    if rows < 2 {
        return Err(MlError::TooFewRows { rows, min: 2 });
    }
    let max_factors = rows.min(cols);
    if n_factors == 0 || n_factors > max_factors {
        return Err(MlError::BadFactorCount {
            n: n_factors,
            max: max_factors,
        });
    }

    let (z, _) = super::standardize(features)?;
    // population covariance of the standardized data
    let mut cov = vec![vec![0.0; cols]; cols];
    for row in &z {
        for i in 0..cols {
            for j in i..cols {
                cov[i][j] += row[i] * row[j];
            }
        }
    }
    for i in 0..cols {
        for j in i..cols {
            cov[i][j] /= rows as f64;
            cov[j][i] = cov[i][j];
        }
    }

    let (eigenvalues, vectors) = jacobi_eigen(cov);
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&a, &b| eigenvalues[b].total_cmp(&eigenvalues[a]).then_with(|| a.cmp(&b)));
    order.truncate(n_factors);

    let mut components = Vec::with_capacity(n_factors);
    let mut explained_variance = Vec::with_capacity(n_factors);
    for &col in &order {
        let mut component: Vec<f64> = (0..cols).map(|row| vectors[row][col]).collect();
        let lead = component
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.abs().total_cmp(&b.abs()).then_with(|| j.cmp(i)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        if component[lead] < 0.0 {
            for x in &mut component {
                *x = -*x;
            }
        }
        components.push(component);
        explained_variance.push(eigenvalues[col].max(0.0));
    }

    let scores = z
        .iter()
        .map(|row| components.iter().map(|c| dot(row, c)).collect())
        .collect();

    Ok(PcaResult {
        components,
        explained_variance,
        scores,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collinear_data_is_rank_one() {
        let data: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64, 2.0 * i as f64]).collect();
        let result = pca(&data, 2).unwrap();
        let total: f64 = result.explained_variance.iter().sum();
        assert!(result.explained_variance[0] / total >= 0.999);
    }

    #[test]
    fn components_are_orthonormal() {
        let data: Vec<Vec<f64>> = (0..12)
            .map(|i| {
                let x = i as f64;
                vec![x, (x * 1.3).sin() * 4.0, x * x * 0.1, 7.0 - x]
            })
            .collect();
        let result = pca(&data, 4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let d = dot(&result.components[i], &result.components[j]);
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((d - expected).abs() < 1e-8, "{i},{j}: {d}");
            }
        }
        // explained variance non-increasing
        for pair in result.explained_variance.windows(2) {
            assert!(pair[0] >= pair[1]);
        }
    }

    #[test]
    fn full_rank_reconstruction() {
        let data: Vec<Vec<f64>> = (0..9)
            .map(|i| {
                let x = i as f64;
                vec![x * 0.7 - 2.0, (x * 0.9).cos() * 3.0, x.powf(1.5)]
            })
            .collect();
        let result = pca(&data, 3).unwrap();
        let (z, _) = crate::ml::standardize(&data).unwrap();
        for (row, score) in z.iter().zip(&result.scores) {
            for (j, &zj) in row.iter().enumerate() {
                let rebuilt: f64 = score
                    .iter()
                    .zip(&result.components)
                    .map(|(s, c)| s * c[j])
                    .sum();
                assert!((rebuilt - zj).abs() < 1e-8);
            }
        }
        // total variance preserved: eigenvalue sum equals trace
        let total: f64 = result.explained_variance.iter().sum();
        assert!((total - 3.0).abs() < 1e-8); // three non-constant standardized columns
    }

    #[test]
    fn sign_convention_makes_lead_loading_positive() {
        let data: Vec<Vec<f64>> = (0..8).map(|i| vec![i as f64, -(i as f64)]).collect();
        let result = pca(&data, 1).unwrap();
        let lead = result.components[0]
            .iter()
            .cloned()
            .fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
        assert!(lead > 0.0);
    }

    #[test]
    fn factor_count_is_checked() {
        let data = vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]];
        assert!(matches!(pca(&data, 3), Err(MlError::BadFactorCount { .. })));
        assert!(matches!(pca(&data, 0), Err(MlError::BadFactorCount { .. })));
        assert!(matches!(pca(&data[..1], 1), Err(MlError::TooFewRows { .. })));
    }
}
