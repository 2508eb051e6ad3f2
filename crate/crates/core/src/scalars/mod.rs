//! Exact coefficient arithmetic.

mod gaussian;
mod grassmann;

pub use gaussian::{GaussianRational, ParseGaussianError};
pub use grassmann::{mask_to_list, merge_sign, GrassmannElement, GrassmannError, Parity, EPSILON, MAX_GENERATORS};
