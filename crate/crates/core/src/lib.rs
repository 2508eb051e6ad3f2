//! Exact-arithmetic verification engine for the BV formulation of first-order
//! N=1, D=4 supergravity.

pub mod clifford;
pub mod fiber;
pub mod linalg;
pub mod scalars;
pub mod fields;
pub mod structure;
pub mod bv;
pub mod diag;
pub mod report;
pub mod suites;
pub mod runner;
