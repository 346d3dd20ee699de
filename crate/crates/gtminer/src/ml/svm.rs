//! Linear SVM: L2-regularized hinge loss minimized by Pegasos-style
//! subgradient descent with step 1/(lambda * t) over seeded row
//! permutations. The bias is not regularized.

use crate::corpus::NumericTable;
use crate::rng::Rng;

use super::{Classifier, MlError, Standardization};

#[derive(Debug, Clone, PartialEq)]
pub struct SvmModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub lambda: f64,
    pub standardization: Standardization,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// lambda/2 ||w||^2 + mean hinge loss over (x, y in {-1,+1}).
pub fn hinge_objective(w: &[f64], b: f64, x: &[Vec<f64>], y: &[f64], lambda: f64) -> f64 {
    let reg = 0.5 * lambda * dot(w, w);
    let hinge: f64 = x
        .iter()
        .zip(y)
        .map(|(row, &t)| (1.0 - t * (dot(w, row) + b)).max(0.0))
        .sum();
    reg + hinge / x.len() as f64
}

/// Full-batch subgradient of `hinge_objective` at (w, b); away from margin
/// kinks it is the gradient.
pub fn hinge_subgradient(
    w: &[f64],
    b: f64,
    x: &[Vec<f64>],
    y: &[f64],
    lambda: f64,
) -> (Vec<f64>, f64) {
    let n = x.len() as f64;
    let mut gw: Vec<f64> = w.iter().map(|&wi| lambda * wi).collect();
    let mut gb = 0.0;
    for (row, &t) in x.iter().zip(y) {
        if t * (dot(w, row) + b) < 1.0 {
            for (g, &xi) in gw.iter_mut().zip(row) {
                *g -= t * xi / n;
            }
            gb -= t / n;
        }
    }
    (gw, gb)
}

pub fn fit_linear_svm(
    table: &NumericTable,
    epochs: usize,
    lambda: f64,
    seed: u64,
) -> Result<SvmModel, MlError> {
    if epochs == 0 {
        return Err(MlError::ZeroEpochs);
    }
    let mut has_zero = false;
    let mut has_one = false;
    for &v in &table.dv {
        match v {
            0.0 => has_zero = true,
            1.0 => has_one = true,
            _ => return Err(MlError::NonBinaryDv),
        }
    }
    if !(has_zero && has_one) {
        return Err(MlError::SingleClassDv);
    }
    let (x, standardization) = super::standardize(&table.features)?;
    let y: Vec<f64> = table.dv.iter().map(|&v| if v == 1.0 { 1.0 } else { -1.0 }).collect();

    let mut w = vec![0.0; x[0].len()];
    let mut b = 0.0;
    let mut rng = Rng::new(seed);
    let mut order: Vec<usize> = (0..x.len()).collect();
    let mut t = 0u64;
    for _ in 0..epochs {
        rng.shuffle(&mut order);
        for &i in &order {
            t += 1;
            let eta = 1.0 / (lambda * t as f64);
            let margin = y[i] * (dot(&w, &x[i]) + b);
            let shrink = 1.0 - eta * lambda;
            for wj in w.iter_mut() {
                *wj *= shrink;
            }
            if margin < 1.0 {
                for (wj, &xj) in w.iter_mut().zip(&x[i]) {
                    *wj += eta * y[i] * xj;
                }
                b += eta * y[i];
            }
        }
    }

    Ok(SvmModel {
        weights: w,
        bias: b,
        lambda,
        standardization,
    })
}

impl SvmModel {
    pub fn decision_value(&self, features: &[f64]) -> f64 {
        dot(&self.weights, &self.standardization.apply_row(features)) + self.bias
    }
}

impl Classifier for SvmModel {
    fn n_features(&self) -> usize {
        self.weights.len()
    }

    fn predict_row(&self, features: &[f64]) -> u8 {
        u8::from(self.decision_value(features) >= 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{evaluate_classifier, table_from_features};
    use super::*;

    #[test]
    fn separable_points_on_a_line() {
        let t = table_from_features(
            vec![vec![-2.0], vec![-1.0], vec![1.0], vec![2.0]],
            vec![0.0, 0.0, 1.0, 1.0],
        );
        let model = fit_linear_svm(&t, 1000, 1e-3, 42).unwrap();
        for (row, &y) in t.features.iter().zip(&t.dv) {
            assert_eq!(model.predict_row(row), y as u8);
        }
        let (acc, cm) = evaluate_classifier(&model, &t).unwrap();
        assert_eq!(acc, 1.0);
        assert_eq!(cm.total(), 4);
    }

    #[test]
    fn subgradient_matches_finite_differences_away_from_kinks() {
        let x = vec![
            vec![0.4, -1.1],
            vec![-0.7, 0.3],
            vec![1.8, 0.9],
            vec![-1.2, -0.5],
            vec![0.6, 1.4],
        ];
        let y = vec![1.0, -1.0, 1.0, -1.0, 1.0];
        let lambda = 1e-3;
        // a point with no margin exactly at 1
        let w = vec![0.31, -0.17];
        let b = 0.05;
        for (row, &t) in x.iter().zip(&y) {
            assert!((t * (dot(&w, row) + b) - 1.0).abs() > 1e-3, "kink too close");
        }
        let (gw, gb) = hinge_subgradient(&w, b, &x, &y, lambda);
        let h = 1e-5;
        let mut max_rel = 0.0f64;
        for j in 0..w.len() {
            let mut wp = w.clone();
            wp[j] += h;
            let mut wm = w.clone();
            wm[j] -= h;
            let numeric = (hinge_objective(&wp, b, &x, &y, lambda)
                - hinge_objective(&wm, b, &x, &y, lambda))
                / (2.0 * h);
            let rel = (gw[j] - numeric).abs() / (gw[j].abs() + numeric.abs()).max(1e-8);
            max_rel = max_rel.max(rel);
        }
        let numeric_b = (hinge_objective(&w, b + h, &x, &y, lambda)
            - hinge_objective(&w, b - h, &x, &y, lambda))
            / (2.0 * h);
        max_rel = max_rel.max((gb - numeric_b).abs() / (gb.abs() + numeric_b.abs()).max(1e-8));
        assert!(max_rel < 1e-4, "max relative error {max_rel}");
    }

    #[test]
    fn deterministic_per_seed() {
        let t = table_from_features(
            (0..12).map(|i| vec![i as f64, (i % 3) as f64]).collect(),
            (0..12).map(|i| f64::from(i >= 6)).collect(),
        );
        let a = fit_linear_svm(&t, 200, 1e-3, 42).unwrap();
        let b = fit_linear_svm(&t, 200, 1e-3, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_dv() {
        let t = table_from_features(vec![vec![0.0], vec![1.0]], vec![1.0, 1.0]);
        assert!(matches!(
            fit_linear_svm(&t, 10, 1e-3, 1),
            Err(MlError::SingleClassDv)
        ));
        let t = table_from_features(vec![vec![0.0], vec![1.0]], vec![0.0, 2.0]);
        assert!(matches!(
            fit_linear_svm(&t, 10, 1e-3, 1),
            Err(MlError::NonBinaryDv)
        ));
    }
}
