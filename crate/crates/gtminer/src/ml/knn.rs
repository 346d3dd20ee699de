//! Exact nearest-neighbour lookup: Euclidean distance over z-scored
//! features, ties broken by row index.

use crate::corpus::NumericTable;

use super::MlError;

/// The `n` rows closest to `record`, as (row index, distance), sorted by
/// distance then index. The query row itself is excluded; the id and
/// dependent-variable columns play no part in the distance.
pub fn knn_neighbors(
    table: &NumericTable,
    record: usize,
    n: usize,
) -> Result<Vec<(usize, f64)>, MlError> {
    let rows = table.rows();
    if record >= rows {
        return Err(MlError::BadRecordIndex {
            index: record,
            rows,
        });
    }
    if n == 0 || n + 1 > rows {
        return Err(MlError::BadNeighbourCount {
            n,
            max: rows.saturating_sub(1),
        });
    }
    let (z, _) = super::standardize(&table.features)?;
    let query = &z[record];
    let mut distances: Vec<(usize, f64)> = z
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != record)
        .map(|(i, row)| {
            let d2: f64 = row.iter().zip(query).map(|(a, b)| (a - b) * (a - b)).sum();
            (i, d2.sqrt())
        })
        .collect();
    distances.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    distances.truncate(n);
    Ok(distances)
}
