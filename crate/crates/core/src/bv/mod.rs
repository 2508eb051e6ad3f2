//! BV data: the cohomological vector field, its square, and the checks built
//! on them.

pub mod lagrangian;
pub mod q0;
pub mod q0_antifields;
pub mod q_total;
pub mod qq;
pub mod q0sq;

use crate::fiber::Field;
use crate::fields::FieldError;
use crate::scalars::GaussianRational as Q;
use crate::structure::StructureError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BvError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("configuration already uses the shift generator ε")]
    EpsilonCollision,
    #[error("insufficient jet order: need {needed}, have {have}")]
    InsufficientJetOrder { needed: u8, have: u8 },
}

/// Coefficients `a_k` of `Σ a_k t^k` from values at `t = 0, 1, …, n−1`.
pub fn polynomial_coefficients(values: &[Field]) -> Vec<Field> {
    let n = values.len();
    // Newton forward differences, then expand the Newton basis.
    let mut diffs: Vec<Field> = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    for _ in 0..n {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| w[1].sub(&w[0])).collect();
    }
    // Σ_k Δ^k f(0) / k! · t(t−1)…(t−k+1)
    let kind = values[0].kind();
    let mut coeffs = vec![Field::zero(kind).with_order(values[0].order()); n];
    let mut falling = vec![Q::one()];
    let mut fact = Q::one();
    for (k, dk) in newton.iter().enumerate() {
        if k > 0 {
            fact = fact * Q::from_int(k as i64);
            let mut next = vec![Q::zero(); falling.len() + 1];
            for (j, c) in falling.iter().enumerate() {
                next[j + 1] += c;
                next[j] += &(c * &Q::from_int(-(k as i64 - 1)));
            }
            falling = next;
        }
        let inv = fact.inv().expect("factorial is nonzero");
        for (j, c) in falling.iter().enumerate() {
            if !c.is_zero() {
                coeffs[j] = coeffs[j].add(&dk.scale(&(c * &inv)));
            }
        }
    }
    coeffs
}

