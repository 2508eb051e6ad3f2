//! Quantities derived from a configuration: inverse vielbein, `γ̲`, `γ̂`, `φ`,
//! and the original antifields recovered from their reparametrizations.

use crate::clifford::gamma::{gamma_field, gamma_power, gamma_upper, ETA};
use crate::clifford::spinor::bar;
use crate::fiber::{eta_bracket, Field, SpinKind, VectorField};
use crate::linalg::Matrix;
use crate::scalars::GaussianRational as Q;

use super::config::Config;
use super::FieldError;

/// Component `e^a_μ` as a slot-free scalar field.
pub fn vielbein_component(e: &Field, a: usize, mu: usize) -> Field {
    e.slot_coefficient(1 << mu, 1 << a, 0)
}

/// Body of `e^a_μ` at the origin (rows `a`, columns `μ`).
pub fn vielbein_body(e: &Field) -> Matrix {
    let rows = (0..4)
        .map(|a| {
            (0..4)
                .map(|mu| vielbein_component(e, a, mu).coefficient(0))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows)
}

/// Inverse vielbein `e^μ_a`, returned as `inv[μ][a]`.
pub fn inverse_vielbein(e: &Field) -> Result<[[Field; 4]; 4], FieldError> {
    let body_inv = vielbein_body(e).inverse().ok_or(FieldError::DegenerateVielbein)?;
    let comp: [[Field; 4]; 4] = std::array::from_fn(|a| std::array::from_fn(|mu| vielbein_component(e, a, mu)));
    let order = e.order();
    let b0: [[Field; 4]; 4] = std::array::from_fn(|mu| {
        std::array::from_fn(|a| Field::constant(body_inv[(mu, a)].clone()))
    });
    let mut inv = b0.clone();
    // B ← B + B0 (I − A B), residual nilpotent
    for _ in 0..64 {
        let resid: [[Field; 4]; 4] = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                let parts: Vec<Field> = (0..4).map(|mu| &comp[a][mu] * &inv[mu][b]).collect();
                let s = Field::sum(SpinKind::Scalar, &parts);
                let id = if a == b { Field::one() } else { Field::zero(SpinKind::Scalar) };
                id.sub(&s).with_order(order)
            })
        });
        if resid.iter().all(|r| r.iter().all(|x| x.is_zero())) {
            return Ok(inv);
        }
        inv = std::array::from_fn(|mu| {
            std::array::from_fn(|b| {
                let parts: Vec<Field> = (0..4).map(|a| &b0[mu][a] * &resid[a][b]).collect();
                inv[mu][b].add(&Field::sum(SpinKind::Scalar, &parts)).with_order(order)
            })
        });
    }
    Err(FieldError::NoConvergence("inverse vielbein"))
}

/// Derived quantities for one configuration.
#[derive(Clone, Debug)]
pub struct Background {
    pub cfg: Config,
    /// `e^μ_a` as `e_inv[μ][a]`.
    pub e_inv: [[Field; 4]; 4],
    /// `γ̲ = [e, γ] = e^a_μ γ_a dx^μ`.
    pub gbar: Field,
    /// `γ̂ = γ^a e^μ_a ∂_μ`.
    pub ghat: VectorField,
    /// Powers `e^k / k!` for `k = 0..=4`.
    pub e_pow: [Field; 5],
    /// `φ^μ = e^μ_a χ̄γ^aχ`.
    pub phi: VectorField,
    pub chi_bar: Field,
    pub psi_bar: Field,
}

impl Background {
    pub fn new(cfg: &Config) -> Result<Self, FieldError> {
        let e_inv = inverse_vielbein(&cfg.e)?;
        let gbar = eta_bracket(&cfg.e, gamma_field());
        let ghat_comps: [Field; 4] = std::array::from_fn(|mu| {
            let parts: Vec<Field> = (0..4).map(|a| Field::matrix(gamma_upper(a)) * &e_inv[mu][a]).collect();
            Field::sum(SpinKind::Matrix, &parts)
        });
        let mut e_pow: [Field; 5] = std::array::from_fn(|_| Field::one());
        for k in 1..5 {
            e_pow[k] = (&e_pow[k - 1] * &cfg.e).scale(&Q::ratio(1, k as i64));
        }
        let chi_bar = bar(&cfg.chi);
        let psi_bar = bar(&cfg.psi);
        let currents: [Field; 4] =
            std::array::from_fn(|a| &(&chi_bar * &Field::matrix(gamma_upper(a))) * &cfg.chi);
        let phi_comps: [Field; 4] = std::array::from_fn(|mu| {
            let parts: Vec<Field> = (0..4).map(|a| &e_inv[mu][a] * &currents[a]).collect();
            Field::sum(SpinKind::Scalar, &parts)
        });
        Ok(Background {
            cfg: cfg.clone(),
            e_inv,
            gbar,
            ghat: VectorField::new(ghat_comps, 0),
            e_pow,
            phi: VectorField::new(phi_comps, 0),
            chi_bar,
            psi_bar,
        })
    }

    /// `⟨e, σ⟩ = v_a η^{ab} e^μ_b ι_{∂_μ} σ`.
    pub fn angle(&self, sigma: &Field) -> Field {
        let contractions: [Field; 4] = std::array::from_fn(|mu| sigma.interior(mu));
        let parts: Vec<Field> = (0..4)
            .map(|a| {
                let inner: Vec<Field> = (0..4).map(|mu| &self.e_inv[mu][a] * &contractions[mu]).collect();
                let inner = Field::sum(sigma.kind(), &inner);
                (Field::v(a) * inner).scale_int(ETA[a])
            })
            .collect();
        Field::sum(sigma.kind(), &parts).with_order(sigma.order().min(self.cfg.e.order()))
    }

    /// `ψ† = (1/3!) e γ³ γ̲ ψ⁰†`.
    pub fn psi_dag(&self) -> Field {
        theta_gamma(self, &self.cfg.psi0_dag)
    }

    /// `χ† = (e⁴/4!) χ⁰†`.
    pub fn chi_dag(&self) -> Field {
        &self.e_pow[4] * &self.cfg.chi0_dag
    }

    /// `ω† = e ǒ`.
    pub fn omega_dag(&self) -> Field {
        &self.cfg.e * &self.cfg.omega_check
    }

    /// `c† = (e²/2) č`.
    pub fn c_dag(&self) -> Field {
        &self.e_pow[2] * &self.cfg.c_check
    }
}

/// `Θ_γ(ψ) = (1/3!) e γ³ γ̲ ψ`.
pub fn theta_gamma(bg: &Background, psi: &Field) -> Field {
    let m = &(&bg.cfg.e * &gamma_power(3)) * &bg.gbar;
    (&m * psi).scale(&Q::ratio(1, 6))
}
