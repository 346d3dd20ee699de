//! k-means over z-scored features: k-means++ seeding, Lloyd iterations
//! until the largest centroid shift falls below the tolerance. An emptied
//! cluster is reseeded to the point farthest from its assigned centroid.

use crate::rng::Rng;

use super::MlError;

pub const DEFAULT_MAX_ITER: usize = 300;
pub const DEFAULT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    /// Centroids in standardized feature space, k x F.
    pub centroids: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
    pub inertia: f64,
    pub iterations_run: usize,
    /// Assignment-step inertia per Lloyd iteration plus the final state;
    /// non-increasing.
    pub inertia_trace: Vec<f64>,
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn assign(points: &[Vec<f64>], centroids: &[Vec<f64>]) -> (Vec<usize>, f64) {
    let mut labels = Vec::with_capacity(points.len());
    let mut inertia = 0.0;
    for p in points {
        let mut best = 0;
        let mut best_d = dist2(p, &centroids[0]);
        for (c, centroid) in centroids.iter().enumerate().skip(1) {
            let d = dist2(p, centroid);
            if d < best_d {
                best_d = d;
                best = c;
            }
        }
        labels.push(best);
        inertia += best_d;
    }
    (labels, inertia)
}

fn kmeans_pp(points: &[Vec<f64>], k: usize, rng: &mut Rng) -> Vec<Vec<f64>> {
    let mut chosen: Vec<usize> = vec![rng.below(points.len())];
    let mut d2: Vec<f64> = points.iter().map(|p| dist2(p, &points[chosen[0]])).collect();
    while chosen.len() < k {
        let total: f64 = d2.iter().sum();
        let next = if total > 0.0 {
            let mut u = rng.next_f64() * total;
            let mut pick = points.len() - 1;
            for (i, &w) in d2.iter().enumerate() {
                u -= w;
                if u <= 0.0 {
                    pick = i;
                    break;
                }
            }
            pick
        } else {
            // all remaining points coincide with a centroid
            (0..points.len()).find(|i| !chosen.contains(i)).unwrap_or(0)
        };
        chosen.push(next);
        for (i, p) in points.iter().enumerate() {
            let d = dist2(p, &points[next]);
            if d < d2[i] {
                d2[i] = d;
            }
        }
    }
    chosen.into_iter().map(|i| points[i].clone()).collect()
}

pub fn kmeans(
    features: &[Vec<f64>],
    k: usize,
    seed: u64,
    max_iter: usize,
    tol: f64,
) -> Result<KMeansResult, MlError> {
    if features.is_empty() || features[0].is_empty() {
        return Err(MlError::EmptyMatrix);
    }
    if k == 0 || k > features.len() {
        return Err(MlError::BadClusterCount {
            k,
            rows: features.len(),
        });
    }
    let (points, _) = super::standardize(features)?;
    let cols = points[0].len();
    let mut rng = Rng::new(seed);
    let mut centroids = kmeans_pp(&points, k, &mut rng);

    let mut trace = Vec::new();
    let mut iterations_run = 0;
    for _ in 0..max_iter {
        let (labels, inertia) = assign(&points, &centroids);
        trace.push(inertia);

        let mut sums = vec![vec![0.0; cols]; k];
        let mut counts = vec![0usize; k];
        for (p, &l) in points.iter().zip(&labels) {
            counts[l] += 1;
            for (s, &x) in sums[l].iter_mut().zip(p) {
                *s += x;
            }
        }
        let mut new_centroids: Vec<Vec<f64>> = sums
            .into_iter()
            .zip(&counts)
            .zip(&centroids)
            .map(|((sum, &count), old)| {
                if count == 0 {
                    old.clone() // reseeded below
                } else {
                    sum.into_iter().map(|s| s / count as f64).collect()
                }
            })
            .collect();
        // reseed each empty cluster to the point farthest from its centroid
        let mut taken: Vec<usize> = Vec::new();
        for c in 0..k {
            if counts[c] > 0 {
                continue;
            }
            let farthest = points
                .iter()
                .enumerate()
                .filter(|(i, _)| !taken.contains(i))
                .max_by(|(i, p), (j, q)| {
                    dist2(p, &new_centroids[labels[*i]])
                        .total_cmp(&dist2(q, &new_centroids[labels[*j]]))
                        .then_with(|| j.cmp(i)) // lowest index on ties
                })
                .map(|(i, _)| i);
            if let Some(i) = farthest {
                new_centroids[c] = points[i].clone();
                taken.push(i);
            }
        }

        let shift = centroids
            .iter()
            .zip(&new_centroids)
            .map(|(a, b)| dist2(a, b).sqrt())
            .fold(0.0, f64::max);
        centroids = new_centroids;
        iterations_run += 1;
        if shift < tol {
            break;
        }
    }

    let (labels, inertia) = assign(&points, &centroids);
    trace.push(inertia);
    Ok(KMeansResult {
        centroids,
        labels,
        inertia,
        iterations_run,
        inertia_trace: trace,
    })
}
