//! Verification suites. A suite runs independent cases, each seeded on its
//! own, and every case appends its checks to a [`Recorder`].

mod algebra;
mod bv;
mod dynamics;
mod geometry;

use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bv::q_total::{LCorrection, QOptions};
use crate::bv::qq::PsiVariant;
use crate::bv::BvError;
use crate::fiber::Field;
use crate::fields::{FieldName, GeneratorPools, SamplePlan};
use crate::report::Recorder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    GammaIdentities,
    Flip,
    Fierz,
    FiberIdentities,
    DiagramRanks,
    Splittings,
    Variational,
    Eom,
    DeltaChiOmega,
    Q0Squared,
    Q0Antifields,
    Quadratic,
    Cme,
    NegativeControls,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::GammaIdentities,
        Suite::Flip,
        Suite::Fierz,
        Suite::FiberIdentities,
        Suite::DiagramRanks,
        Suite::Splittings,
        Suite::Variational,
        Suite::Eom,
        Suite::DeltaChiOmega,
        Suite::Q0Squared,
        Suite::Q0Antifields,
        Suite::Quadratic,
        Suite::Cme,
        Suite::NegativeControls,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GammaIdentities => "gamma_identities",
            Suite::Flip => "flip",
            Suite::Fierz => "fierz",
            Suite::FiberIdentities => "fiber_identities",
            Suite::DiagramRanks => "diagram_ranks",
            Suite::Splittings => "splittings",
            Suite::Variational => "variational",
            Suite::Eom => "eom",
            Suite::DeltaChiOmega => "delta_chi_omega",
            Suite::Q0Squared => "q0_squared",
            Suite::Q0Antifields => "q0_antifields",
            Suite::Quadratic => "quadratic",
            Suite::Cme => "cme",
            Suite::NegativeControls => "negative_controls",
        }
    }

    /// Number of cases when the run does not override it.
    pub fn default_cases(self) -> usize {
        match self {
            Suite::GammaIdentities | Suite::NegativeControls => 1,
            Suite::Flip => 50,
            Suite::Fierz => 25,
            Suite::Splittings => 20,
            Suite::DiagramRanks | Suite::Variational | Suite::DeltaChiOmega => 10,
            Suite::Cme => 3,
            _ => 5,
        }
    }

    /// Smallest number of odd generators (including the shift generator).
    pub fn min_odd_generators(self) -> usize {
        match self {
            Suite::GammaIdentities | Suite::DiagramRanks => 1,
            Suite::Flip => 4,
            Suite::Fierz => 5,
            _ => 7,
        }
    }

    pub fn min_jet_order(self) -> u8 {
        match self {
            Suite::GammaIdentities | Suite::Flip | Suite::Fierz | Suite::DiagramRanks | Suite::Splittings => 0,
            Suite::Variational | Suite::Eom | Suite::DeltaChiOmega | Suite::Q0Antifields => 1,
            _ => 2,
        }
    }

    /// Whether cases draw random samples at all.
    pub fn is_random(self) -> bool {
        self != Suite::GammaIdentities
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}` (expected one of: all, {})", names.join(", "))
            })
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters shared by every case of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseParams {
    /// Odd generators of the Grassmann algebra, the shift generator included.
    pub odd_generators: usize,
    pub jet_order: u8,
    pub psi_variant: PsiVariant,
    pub l_correction: LCorrection,
}

impl Default for CaseParams {
    fn default() -> Self {
        CaseParams { odd_generators: 12, jet_order: 2, psi_variant: PsiVariant::default(), l_correction: LCorrection::Full }
    }
}

impl CaseParams {
    /// Generators `1..N` split as evenly as possible over the six odd fields.
    pub fn pools(&self) -> GeneratorPools {
        let free = self.odd_generators.saturating_sub(1);
        GeneratorPools::consecutive(std::array::from_fn(|i| free / 6 + usize::from(i < free % 6)))
    }

    /// Free generators (all but the shift generator).
    pub fn generators(&self) -> Vec<usize> {
        (1..self.odd_generators).collect()
    }

    pub fn plan(&self, active: &[FieldName]) -> SamplePlan {
        SamplePlan { jet_order: self.jet_order, pools: self.pools(), active: active.to_vec() }
    }

    pub fn q_options(&self) -> QOptions {
        QOptions { psi_variant: self.psi_variant, l_correction: self.l_correction, ..Default::default() }
    }
}

/// Runs case `index` of `suite` with the given seed.
pub fn run_case(suite: Suite, params: &CaseParams, index: usize, case_seed: u64) -> Recorder {
    let mut rec = Recorder::new(suite.name(), case_seed);
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
    let outcome = match suite {
        Suite::GammaIdentities => {
            crate::clifford::identities::gamma_suite(&mut rec);
            Ok(())
        }
        Suite::Flip => algebra::flip(&mut rec, &mut rng, params),
        Suite::Fierz => algebra::fierz(&mut rec, &mut rng, params, index),
        Suite::FiberIdentities => algebra::fiber_identities(&mut rec, &mut rng, params, index),
        Suite::DiagramRanks => geometry::diagram_ranks(&mut rec, &mut rng),
        Suite::Splittings => geometry::splittings(&mut rec, &mut rng, params),
        Suite::Variational => dynamics::variational(&mut rec, &mut rng, params),
        Suite::Eom => dynamics::eom(&mut rec, &mut rng, params),
        Suite::DeltaChiOmega => dynamics::delta_chi_omega(&mut rec, &mut rng, params),
        Suite::Q0Squared => dynamics::q0_squared(&mut rec, &mut rng, params),
        Suite::Q0Antifields => dynamics::q0_antifields(&mut rec, &mut rng, params),
        Suite::Quadratic => bv::quadratic(&mut rec, &mut rng, params),
        Suite::Cme => bv::cme(&mut rec, &mut rng, params),
        Suite::NegativeControls => bv::negative_controls(&mut rec, &mut rng, params),
    };
    if let Err(e) = outcome {
        rec.holds("evaluation", "case evaluates without error", false, || e.to_string());
    }
    rec
}

/// `a − b` after truncating both to their common jet order.
pub(crate) fn residual(a: &Field, b: &Field) -> Field {
    let o = a.order().min(b.order());
    a.truncate(o).sub(&b.truncate(o))
}

type CaseResult = Result<(), BvError>;
