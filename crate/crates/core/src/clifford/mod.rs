pub mod gamma;
pub mod identities;
pub mod spinor;
