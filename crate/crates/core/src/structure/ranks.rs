//! Rank certification of the fiber maps `W_k`, `ρ` and the spinor maps `Θ`,
//! `Θ_γ` on the body of a coframe.

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clifford::gamma::{gamma_field, gamma_power};
use crate::fiber::{eta_bracket, Field, SpinKind, EXACT};
use crate::fields::{random_shaped, vielbein_body, FieldName};
use crate::scalars::GaussianRational as Q;

use super::{body_of, matrix_of, Shape, StructureError};

/// Arrow decoration: hooked (injective), two-headed (surjective) or both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arrow {
    Injective,
    Surjective,
    Bijective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberMap {
    /// `X ↦ e^k X / k!` on `Ω^{(i,j)}`.
    W { k: u32, i: u32, j: u32 },
    /// `X ↦ [e, X]` on `Ω^{(i,j)}`.
    Rho { i: u32, j: u32 },
    /// `ψ ↦ (1/3!) e γ³ ψ` on spinor-valued `Ω^{(1,0)}`.
    Theta,
    /// `ψ ↦ (1/3!) e γ³ γ̲ ψ` on spinor-valued `Ω^{(1,0)}`.
    ThetaGamma,
}

impl FiberMap {
    pub fn domain(&self) -> Shape {
        match *self {
            FiberMap::W { i, j, .. } | FiberMap::Rho { i, j } => Shape::new(i, j, SpinKind::Scalar),
            FiberMap::Theta | FiberMap::ThetaGamma => Shape::new(1, 0, SpinKind::Column),
        }
    }

    pub fn codomain(&self) -> Shape {
        match *self {
            FiberMap::W { k, i, j } => Shape::new(i + k, j + k, SpinKind::Scalar),
            FiberMap::Rho { i, j } => Shape::new(i + 1, j - 1, SpinKind::Scalar),
            FiberMap::Theta => Shape::new(2, 4, SpinKind::Column),
            FiberMap::ThetaGamma => Shape::new(3, 4, SpinKind::Column),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FiberMap::W { k, i, j } => format!("W{k}^({i},{j})"),
            FiberMap::Rho { i, j } => format!("rho^({i},{j})"),
            FiberMap::Theta => "Theta^(1,0)".into(),
            FiberMap::ThetaGamma => "Theta_gamma^(1,0)".into(),
        }
    }

    fn check_degrees(&self) -> Result<(), StructureError> {
        let ok = match *self {
            FiberMap::W { k, i, j } => i + k <= 4 && j + k <= 4,
            FiberMap::Rho { i, j } => j >= 1 && i < 4,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(StructureError::IncompatibleDegree(self.label()))
        }
    }

    /// Applies the map for a coframe `e` (any jet order).
    pub fn apply(&self, e: &Field, x: &Field) -> Field {
        match *self {
            FiberMap::W { k, .. } => &e_power(e, k) * x,
            FiberMap::Rho { .. } => eta_bracket(e, x),
            FiberMap::Theta => (&(e * &gamma_power(3)) * x).scale_ratio(1, 6),
            FiberMap::ThetaGamma => {
                let gbar = eta_bracket(e, gamma_field());
                (&(&(e * &gamma_power(3)) * &gbar) * x).scale_ratio(1, 6)
            }
        }
    }
}

/// `e^k / k!`.
pub fn e_power(e: &Field, k: u32) -> Field {
    let mut out = Field::one();
    for j in 1..=k {
        out = (&out * e).scale(&Q::ratio(1, j as i64));
    }
    out
}

/// The 16 arrows of the bulk diagram for `W_1`.
pub const DIAGRAM: [((u32, u32), Arrow); 16] = [
    ((1, 0), Arrow::Injective),
    ((2, 1), Arrow::Bijective),
    ((3, 2), Arrow::Surjective),
    ((0, 0), Arrow::Injective),
    ((1, 1), Arrow::Injective),
    ((2, 2), Arrow::Surjective),
    ((3, 3), Arrow::Surjective),
    ((0, 1), Arrow::Injective),
    ((1, 2), Arrow::Bijective),
    ((2, 3), Arrow::Surjective),
    ((0, 2), Arrow::Injective),
    ((1, 3), Arrow::Surjective),
    ((0, 3), Arrow::Bijective),
    ((2, 0), Arrow::Injective),
    ((3, 1), Arrow::Surjective),
    ((3, 0), Arrow::Bijective),
];

/// The isomorphisms `W₂^{(0,2)}, W₂^{(2,0)}, W₂^{(1,1)}, W₄^{(0,0)}, ρ^{(0,1)}, ρ^{(3,4)}`.
pub const USEFUL_ISOS: [FiberMap; 6] = [
    FiberMap::W { k: 2, i: 0, j: 2 },
    FiberMap::W { k: 2, i: 2, j: 0 },
    FiberMap::W { k: 2, i: 1, j: 1 },
    FiberMap::W { k: 4, i: 0, j: 0 },
    FiberMap::Rho { i: 0, j: 1 },
    FiberMap::Rho { i: 3, j: 4 },
];

/// Every certified map with its expected arrow type.
pub fn expected_patterns() -> Vec<(FiberMap, Arrow)> {
    let mut out: Vec<(FiberMap, Arrow)> =
        DIAGRAM.iter().map(|&((i, j), a)| (FiberMap::W { k: 1, i, j }, a)).collect();
    out.extend(USEFUL_ISOS.iter().map(|&m| (m, Arrow::Bijective)));
    out.push((FiberMap::Theta, Arrow::Injective));
    out.push((FiberMap::ThetaGamma, Arrow::Bijective));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
}

impl RankCertificate {
    pub fn injective(&self) -> bool {
        self.rank == self.domain_dim
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.codomain_dim
    }

    pub fn matches(&self, arrow: Arrow) -> bool {
        match arrow {
            Arrow::Injective => self.injective(),
            Arrow::Surjective => self.surjective(),
            Arrow::Bijective => self.injective() && self.surjective(),
        }
    }

    /// The strongest arrow type the map has, if any.
    pub fn arrow(&self) -> Option<Arrow> {
        match (self.injective(), self.surjective()) {
            (true, true) => Some(Arrow::Bijective),
            (true, false) => Some(Arrow::Injective),
            (false, true) => Some(Arrow::Surjective),
            (false, false) => None,
        }
    }
}

/// Certifies the rank of `map` on the body of `e` by exact elimination.
pub fn rank_certify(map: FiberMap, e: &Field) -> Result<RankCertificate, StructureError> {
    map.check_degrees()?;
    let eb = body_of(e);
    if vielbein_body(&eb).inverse().is_none() {
        return Err(StructureError::NotInvertible("vielbein body".into()));
    }
    let (dom, cod) = (map.domain(), map.codomain());
    let m = matrix_of(|x| map.apply(&eb, x), dom, cod)?;
    Ok(RankCertificate { domain_dim: dom.dim(), codomain_dim: cod.dim(), rank: m.rank() })
}

/// A random constant coframe with invertible body.
pub fn random_coframe(rng: &mut ChaCha8Rng) -> Field {
    loop {
        let e = random_shaped(rng, FieldName::E.shape(), None, 0).with_order(EXACT);
        if vielbein_body(&e).inverse().is_some() {
            return e;
        }
    }
}
