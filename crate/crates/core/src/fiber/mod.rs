//! Graded fiber calculus on jets at a point.

mod calculus;
mod field;
pub mod identities;

pub use calculus::{cov_d, curvature, eta_bracket, lie, rep_action, VectorField};
pub use field::{
    dxmask, gmask, pack, product_kind, slot, spin_index, vmask, x_code_from, x_codes, x_degree, x_exp, xcode, Field,
    SpinKind, EXACT, MAX_JET_ORDER,
};
pub(crate) use field::{accumulate, Accum};
