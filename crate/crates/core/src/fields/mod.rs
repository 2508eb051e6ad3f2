//! Field content: configurations, sampling, and derived background quantities.

mod background;
mod config;

pub use background::{inverse_vielbein, theta_gamma, vielbein_body, vielbein_component, Background};
pub use config::{masks, random_rational, random_shaped, sample_config, Config, FieldName, GeneratorPools, SamplePlan};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("vielbein is degenerate at the origin")]
    DegenerateVielbein,
    #[error("nilpotent iteration did not terminate: {0}")]
    NoConvergence(&'static str),
    #[error("insufficient jet order: need {needed}, have {have}")]
    InsufficientJetOrder { needed: u8, have: u8 },
}
