//! Single-hidden-layer perceptron: tanh hidden units, logistic output,
//! binary cross-entropy, full-batch gradient descent. The hidden width is
//! max(4, 2F). Weights start Xavier-uniform from the seeded generator;
//! biases start at zero.

use crate::corpus::NumericTable;
use crate::rng::Rng;

use super::{Classifier, MlError, Standardization};

const LOG_CLAMP: f64 = 1e-12;

/// Raw network parameters, shared between the trainer and the gradient
/// checks (gradients come back in the same shape).
#[derive(Debug, Clone, PartialEq)]
pub struct MlpParams {
    /// hidden x input
    pub w1: Vec<Vec<f64>>,
    pub b1: Vec<f64>,
    /// output weights over hidden units
    pub w2: Vec<f64>,
    pub b2: f64,
}

impl MlpParams {
    pub fn init(n_features: usize, hidden: usize, rng: &mut Rng) -> MlpParams {
        let limit1 = (6.0 / (n_features + hidden) as f64).sqrt();
        let limit2 = (6.0 / (hidden + 1) as f64).sqrt();
        MlpParams {
            w1: (0..hidden)
                .map(|_| (0..n_features).map(|_| rng.range_f64(-limit1, limit1)).collect())
                .collect(),
            b1: vec![0.0; hidden],
            w2: (0..hidden).map(|_| rng.range_f64(-limit2, limit2)).collect(),
            b2: 0.0,
        }
    }

    pub fn forward(&self, x: &[f64]) -> (Vec<f64>, f64) {
        let hidden: Vec<f64> = self
            .w1
            .iter()
            .zip(self.b1.iter())
            .map(|(w, b)| (dot(w, x) + b).tanh())
            .collect();
        let p = sigmoid(dot(&self.w2, &hidden) + self.b2);
        (hidden, p)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sigmoid(z: f64) -> f64 {
    1.0 / (1.0 + (-z).exp())
}

fn bce(p: f64, y: f64) -> f64 {
    let p = p.clamp(LOG_CLAMP, 1.0 - LOG_CLAMP);
    -(y * p.ln() + (1.0 - y) * (1.0 - p).ln())
}

/// Mean binary cross-entropy of the network on (x, y).
pub fn mlp_loss(params: &MlpParams, x: &[Vec<f64>], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(row, &t)| bce(params.forward(row).1, t))
        .sum::<f64>()
        / x.len() as f64
}

/// Mean loss and its gradients, in parameter shape.
pub fn mlp_loss_and_gradients(
    params: &MlpParams,
    x: &[Vec<f64>],
    y: &[f64],
) -> (f64, MlpParams) {
    let n = x.len() as f64;
    let hidden = params.w1.len();
    let mut grads = MlpParams {
        w1: vec![vec![0.0; params.w1[0].len()]; hidden],
        b1: vec![0.0; hidden],
        w2: vec![0.0; hidden],
        b2: 0.0,
    };
    let mut loss = 0.0;
    for (row, &target) in x.iter().zip(y) {
        let (h, p) = params.forward(row);
        loss += bce(p, target);
        let dz2 = (p - target) / n;
        grads.b2 += dz2;
        for j in 0..hidden {
            grads.w2[j] += dz2 * h[j];
            let dz1 = dz2 * params.w2[j] * (1.0 - h[j] * h[j]);
            grads.b1[j] += dz1;
            for (g, &xi) in grads.w1[j].iter_mut().zip(row) {
                *g += dz1 * xi;
            }
        }
    }
    (loss / n, grads)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MlpModel {
    /// input, hidden, output layer sizes
    pub layer_sizes: [usize; 3],
    pub params: MlpParams,
    pub standardization: Standardization,
    /// per-epoch (train accuracy, train loss), measured after the update
    pub curve: Vec<(f64, f64)>,
}

/// Train on the table's features against its binary dependent variable.
/// Features are standardized internally; the stored transform is reapplied
/// at prediction time.
pub fn fit_mlp(
    table: &NumericTable,
    epochs: usize,
    seed: u64,
    learning_rate: f64,
) -> Result<MlpModel, MlError> {
    if epochs == 0 {
        return Err(MlError::ZeroEpochs);
    }
    if table.dv.iter().any(|&y| y != 0.0 && y != 1.0) {
        return Err(MlError::NonBinaryDv);
    }
    let (x, standardization) = super::standardize(&table.features)?;
    let n_features = x[0].len();
    let hidden = (2 * n_features).max(4);
    let mut rng = Rng::new(seed);
    let mut params = MlpParams::init(n_features, hidden, &mut rng);

    let mut curve = Vec::with_capacity(epochs);
    for _ in 0..epochs {
        let (_, grads) = mlp_loss_and_gradients(&params, &x, &table.dv);
        for (w_row, g_row) in params.w1.iter_mut().zip(&grads.w1) {
            for (w, g) in w_row.iter_mut().zip(g_row) {
                *w -= learning_rate * g;
            }
        }
        for (b, g) in params.b1.iter_mut().zip(&grads.b1) {
            *b -= learning_rate * g;
        }
        for (w, g) in params.w2.iter_mut().zip(&grads.w2) {
            *w -= learning_rate * g;
        }
        params.b2 -= learning_rate * grads.b2;

        let mut correct = 0usize;
        let mut loss = 0.0;
        for (row, &target) in x.iter().zip(&table.dv) {
            let p = params.forward(row).1;
            loss += bce(p, target);
            if (p >= 0.5) == (target == 1.0) {
                correct += 1;
            }
        }
        curve.push((correct as f64 / x.len() as f64, loss / x.len() as f64));
    }

    Ok(MlpModel {
        layer_sizes: [n_features, hidden, 1],
        params,
        standardization,
        curve,
    })
}

impl MlpModel {
    pub fn predict_probability(&self, features: &[f64]) -> f64 {
        self.params.forward(&self.standardization.apply_row(features)).1
    }
}

impl Classifier for MlpModel {
    fn n_features(&self) -> usize {
        self.layer_sizes[0]
    }

    fn predict_row(&self, features: &[f64]) -> u8 {
        u8::from(self.predict_probability(features) >= 0.5)
    }
}

#[cfg(test)]
mod tests {
    use super::super::table_from_features;
    use super::*;

    #[test]
    fn constant_labels_reach_full_accuracy() {
        let t = table_from_features(
            (0..8).map(|i| vec![i as f64, (i * i) as f64]).collect(),
            vec![1.0; 8],
        );
        let model = fit_mlp(&t, 100, 42, 0.1).unwrap();
        let (acc, _) = model.curve.last().copied().unwrap();
        assert_eq!(acc, 1.0);
        // loss is non-increasing on this fixture
        for pair in model.curve.windows(2) {
            assert!(pair[1].1 <= pair[0].1 + 1e-12);
        }
    }

    #[test]
    fn curve_has_one_entry_per_epoch() {
        let t = table_from_features(
            (0..6).map(|i| vec![i as f64]).collect(),
            vec![0.0, 0.0, 0.0, 1.0, 1.0, 1.0],
        );
        let model = fit_mlp(&t, 17, 3, 0.1).unwrap();
        assert_eq!(model.curve.len(), 17);
        assert_eq!(model.layer_sizes, [1, 4, 1]);
    }

    #[test]
    fn deterministic_per_seed() {
        let t = table_from_features(
            (0..10).map(|i| vec![i as f64, (10 - i) as f64]).collect(),
            vec![0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0],
        );
        let a = fit_mlp(&t, 50, 42, 0.1).unwrap();
        let b = fit_mlp(&t, 50, 42, 0.1).unwrap();
        assert_eq!(a, b);
        let c = fit_mlp(&t, 50, 43, 0.1).unwrap();
        assert_ne!(a.params, c.params);
    }

    #[test]
    fn rejects_bad_inputs() {
        let t = table_from_features(vec![vec![1.0]], vec![0.5]);
        assert!(matches!(fit_mlp(&t, 5, 1, 0.1), Err(MlError::NonBinaryDv)));
        let t = table_from_features(vec![vec![1.0]], vec![1.0]);
        assert!(matches!(fit_mlp(&t, 0, 1, 0.1), Err(MlError::ZeroEpochs)));
    }

    #[test]
    fn analytic_gradients_match_finite_differences() {
        let x: Vec<Vec<f64>> = vec![
            vec![0.5, -1.2],
            vec![-0.3, 0.8],
            vec![1.5, 0.1],
            vec![-0.9, -0.4],
            vec![0.2, 1.1],
            vec![-1.4, 0.6],
        ];
        let y = vec![1.0, 0.0, 1.0, 0.0, 1.0, 0.0];
        let mut rng = Rng::new(5);
        let params = MlpParams::init(2, 4, &mut rng);
        let (_, analytic) = mlp_loss_and_gradients(&params, &x, &y);

        let h = 1e-5;
        let mut max_rel = 0.0f64;
        let mut check = |analytic_g: f64, perturb: &mut dyn FnMut(&mut MlpParams, f64)| {
            let mut plus = params.clone();
            perturb(&mut plus, h);
            let mut minus = params.clone();
            perturb(&mut minus, -h);
            let numeric = (mlp_loss(&plus, &x, &y) - mlp_loss(&minus, &x, &y)) / (2.0 * h);
            let rel = (analytic_g - numeric).abs() / (analytic_g.abs() + numeric.abs()).max(1e-8);
            max_rel = max_rel.max(rel);
        };
        for j in 0..4 {
            for i in 0..2 {
                check(analytic.w1[j][i], &mut |p, d| p.w1[j][i] += d);
            }
            check(analytic.b1[j], &mut |p, d| p.b1[j] += d);
            check(analytic.w2[j], &mut |p, d| p.w2[j] += d);
        }
        check(analytic.b2, &mut |p, d| p.b2 += d);
        assert!(max_rel < 1e-4, "max relative error {max_rel}");
    }

    #[test]
    fn separable_blobs_train_to_one() {
        for seed in 1..=5 {
            let mut rng = Rng::new(seed);
            let mut features = Vec::new();
            let mut dv = Vec::new();
            for class in 0..2 {
                let center = if class == 0 { 0.0 } else { 5.0 };
                for _ in 0..20 {
                    features.push(vec![
                        center + rng.range_f64(-1.0, 1.0),
                        center + rng.range_f64(-1.0, 1.0),
                    ]);
                    dv.push(class as f64);
                }
            }
            let t = table_from_features(features, dv);
            let model = fit_mlp(&t, 500, seed, 0.1).unwrap();
            let best = model.curve.iter().map(|c| c.0).fold(0.0, f64::max);
            assert_eq!(best, 1.0, "seed {seed} never reached accuracy 1.0");
        }
    }
}
