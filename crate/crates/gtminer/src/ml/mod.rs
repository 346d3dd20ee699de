//! From-scratch numeric ML for triangulation over a NumericTable:
//! standardization, seeded train/test split, minority oversampling, a
//! multilayer perceptron, a linear SVM, k-means, k-nearest neighbours and
//! PCA. Every routine is deterministic given its seed.

mod kmeans;
mod knn;
mod mlp;
mod pca;
mod svm;

pub use kmeans::{kmeans, KMeansResult, DEFAULT_MAX_ITER, DEFAULT_TOL};
pub use knn::knn_neighbors;
pub use mlp::{fit_mlp, mlp_loss, mlp_loss_and_gradients, MlpModel, MlpParams};
pub use pca::{pca, PcaResult};
pub use svm::{fit_linear_svm, hinge_objective, hinge_subgradient, SvmModel};

use crate::corpus::NumericTable;
use crate::rng::Rng;

#[derive(Debug, thiserror::Error)]
pub enum MlError {
    #[error("feature matrix is empty")]
    EmptyMatrix,
    #[error("need at least {min} rows, got {rows}")]
    TooFewRows { rows: usize, min: usize },
    #[error("test fraction must be in (0, 1), got {0}")]
    BadTestFraction(f64),
    #[error("dependent variable must contain only 0 and 1")]
    NonBinaryDv,
    #[error("dependent variable has a single class; both classes are required")]
    SingleClassDv,
    #[error("epochs must be at least 1")]
    ZeroEpochs,
    #[error("cluster count {k} must be between 1 and the row count {rows}")]
    BadClusterCount { k: usize, rows: usize },
    #[error("record index {index} out of range for {rows} rows")]
    BadRecordIndex { index: usize, rows: usize },
    #[error("neighbour count {n} must be between 1 and {max}")]
    BadNeighbourCount { n: usize, max: usize },
    #[error("factor count {n} must be between 1 and {max}")]
    BadFactorCount { n: usize, max: usize },
    #[error("model expects {expected} features, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Per-column location and scale. Zero-variance columns keep scale 1 so
/// they pass through (centered to zero) unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct Standardization {
    pub means: Vec<f64>,
    pub stds: Vec<f64>,
}

impl Standardization {
    pub fn fit(features: &[Vec<f64>]) -> Result<Standardization, MlError> {
        if features.is_empty() || features[0].is_empty() {
            return Err(MlError::EmptyMatrix);
        }
        let rows = features.len() as f64;
        let cols = features[0].len();
        let mut means = vec![0.0; cols];
        for row in features {
            for (j, &x) in row.iter().enumerate() {
                means[j] += x;
            }
        }
        for m in &mut means {
            *m /= rows;
        }
        // population standard deviation
        let mut stds = vec![0.0; cols];
        for row in features {
            for (j, &x) in row.iter().enumerate() {
                let d = x - means[j];
                stds[j] += d * d;
            }
        }
        for s in &mut stds {
            *s = (*s / rows).sqrt();
            if *s == 0.0 {
                *s = 1.0;
            }
        }
        Ok(Standardization { means, stds })
    }

    pub fn apply_row(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .zip(self.means.iter().zip(self.stds.iter()))
            .map(|(&x, (&m, &s))| (x - m) / s)
            .collect()
    }

    pub fn apply(&self, features: &[Vec<f64>]) -> Vec<Vec<f64>> {
        features.iter().map(|r| self.apply_row(r)).collect()
    }

    pub fn invert_row(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .zip(self.means.iter().zip(self.stds.iter()))
            .map(|(&z, (&m, &s))| z * s + m)
            .collect()
    }
}

/// Z-score per column; returns the transform alongside the result.
pub fn standardize(features: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, Standardization), MlError> {
    let st = Standardization::fit(features)?;
    Ok((st.apply(features), st))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    pub test_fraction: f64,
    pub seed: u64,
}

impl Default for SplitSpec {
    fn default() -> Self {
        SplitSpec {
            test_fraction: 0.2,
            seed: 42,
        }
    }
}

/// Seeded uniform shuffle; the last ceil(fraction * N) rows become the test
/// set, clamped so both parts stay non-empty.
pub fn train_test_split(
    table: &NumericTable,
    spec: &SplitSpec,
) -> Result<(NumericTable, NumericTable), MlError> {
    let rows = table.rows();
    if rows < 5 {
        return Err(MlError::TooFewRows { rows, min: 5 });
    }
    if !(spec.test_fraction > 0.0 && spec.test_fraction < 1.0) {
        return Err(MlError::BadTestFraction(spec.test_fraction));
    }
    let mut indices: Vec<usize> = (0..rows).collect();
    Rng::new(spec.seed).shuffle(&mut indices);
    let n_test = ((spec.test_fraction * rows as f64).ceil() as usize).clamp(1, rows - 1);
    let cut = rows - n_test;
    Ok((table.subset(&indices[..cut]), table.subset(&indices[cut..])))
}

fn binary_class_indices(dv: &[f64]) -> Result<(Vec<usize>, Vec<usize>), MlError> {
    let mut zeros = Vec::new();
    let mut ones = Vec::new();
    for (i, &y) in dv.iter().enumerate() {
        if y == 0.0 {
            zeros.push(i);
        } else if y == 1.0 {
            ones.push(i);
        } else {
            return Err(MlError::NonBinaryDv);
        }
    }
    Ok((zeros, ones))
}

/// Duplicate seeded samples of the minority class until both class counts
/// match. Original rows are kept, in order; duplicates are appended in the
/// order they were drawn.
pub fn oversample(table: &NumericTable, seed: u64) -> Result<NumericTable, MlError> {
    let (zeros, ones) = binary_class_indices(&table.dv)?;
    if zeros.is_empty() || ones.is_empty() {
        return Err(MlError::SingleClassDv);
    }
    let (minority, majority) = if zeros.len() < ones.len() {
        (&zeros, &ones)
    } else {
        (&ones, &zeros)
    };
    let mut rows: Vec<usize> = (0..table.rows()).collect();
    let mut rng = Rng::new(seed);
    for _ in 0..majority.len() - minority.len() {
        rows.push(minority[rng.below(minority.len())]);
    }
    Ok(table.subset(&rows))
}

/// Binary confusion counts with positive class 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConfusionMatrix {
    pub true_pos: usize,
    pub false_pos: usize,
    pub false_neg: usize,
    pub true_neg: usize,
}

impl ConfusionMatrix {
    pub fn total(&self) -> usize {
        self.true_pos + self.false_pos + self.false_neg + self.true_neg
    }

    pub fn accuracy(&self) -> f64 {
        (self.true_pos + self.true_neg) as f64 / self.total() as f64
    }
}

/// A fitted binary classifier over raw (unstandardized) feature rows.
pub trait Classifier {
    fn n_features(&self) -> usize;
    fn predict_row(&self, features: &[f64]) -> u8;
}

pub fn evaluate_classifier<C: Classifier>(
    model: &C,
    test: &NumericTable,
) -> Result<(f64, ConfusionMatrix), MlError> {
    if test.rows() == 0 {
        return Err(MlError::TooFewRows { rows: 0, min: 1 });
    }
    if test.n_features() != model.n_features() {
        return Err(MlError::ArityMismatch {
            expected: model.n_features(),
            got: test.n_features(),
        });
    }
    binary_class_indices(&test.dv)?;
    let mut cm = ConfusionMatrix::default();
    for (row, &y) in test.features.iter().zip(test.dv.iter()) {
        let predicted = model.predict_row(row);
        match (predicted, y == 1.0) {
            (1, true) => cm.true_pos += 1,
            (1, false) => cm.false_pos += 1,
            (0, true) => cm.false_neg += 1,
            _ => cm.true_neg += 1,
        }
    }
    Ok((cm.accuracy(), cm))
}

#[cfg(test)]
pub(crate) fn table_from_features(features: Vec<Vec<f64>>, dv: Vec<f64>) -> NumericTable {
    let cols = features.first().map(|r| r.len()).unwrap_or(0);
    NumericTable {
        id_name: "id".into(),
        ids: (1..=features.len()).map(|i| i.to_string()).collect(),
        feature_names: (0..cols).map(|j| format!("f{j}")).collect(),
        features,
        dv_name: "y".into(),
        dv,
    }
}
