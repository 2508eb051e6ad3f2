//! Exact linear fitting of a field against candidate terms.

use crate::fiber::Field;
use crate::linalg::Matrix;
use crate::scalars::GaussianRational as Q;

/// Coefficients `c` with `target = Σ c_i candidates_i`, if they exist.
pub fn fit(target: &Field, candidates: &[Field]) -> Option<Vec<Q>> {
    let mut keys: Vec<u64> = target.terms().iter().map(|t| t.0).collect();
    for c in candidates {
        keys.extend(c.terms().iter().map(|t| t.0));
    }
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<Vec<Q>> = keys
        .iter()
        .map(|&k| candidates.iter().map(|c| c.coefficient(k)).collect())
        .collect();
    let b: Vec<Q> = keys.iter().map(|&k| target.coefficient(k)).collect();
    Matrix::from_rows(rows).solve(&b)
}
