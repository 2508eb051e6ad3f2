//! Structural maps on the fiber: wedge with powers of the vielbein, their
//! ranks, inverses, and the spinor splittings.

pub mod ranks;
mod solver;
pub mod splittings;

pub use solver::{apply_slot_matrix, body_of, matrix_of, solve_even, solve_with_inverse, Shape};

use crate::fiber::{Field, SpinKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("incompatible degree: {0}")]
    IncompatibleDegree(String),
    #[error("map is not invertible on bodies: {0}")]
    NotInvertible(String),
    #[error("nilpotent iteration did not terminate")]
    NoConvergence,
}

/// `W_k(X) = (e^k / k!) X`.
pub fn w_map(e_pow_k: &Field, x: &Field) -> Field {
    e_pow_k * x
}

/// Solves `(e^k/k!) X = Y` for `X` of the given shape.
pub fn w_inverse(e: &Field, k: usize, domain: Shape, y: &Field) -> Result<Field, StructureError> {
    let mut ek = Field::one();
    for j in 1..=k {
        ek = (&ek * e).scale(&crate::scalars::GaussianRational::ratio(1, j as i64));
    }
    let ek_body = body_of(&ek);
    let codomain = Shape::new(domain.form + k as u32, domain.multi + k as u32, domain.kind);
    solve_even(|x| &ek * x, |x| &ek_body * x, domain, codomain, y)
}

pub const SCALAR: SpinKind = SpinKind::Scalar;
