//! Closed forms for `Q₀²` on fields.

use crate::clifford::gamma::{gamma_field, gamma_power};
use crate::fiber::{cov_d, curvature, Field, SpinKind};
use crate::fields::Background;
use crate::scalars::GaussianRational as Q;
use crate::structure::splittings::kappa;
use crate::structure::{w_inverse, Shape};

use super::q0::{delta_chi_omega, QValues};
use super::BvError;

/// `χ̄κ(⟨ē, γ̲ d_ωψ⟩) + ⅛ χ̄ ι_γ̂ ι_γ̂ (γ̲ d_ωψ)`.
pub fn susy_kappa_term(bg: &Background) -> Result<Field, BvError> {
    let cfg = &bg.cfg;
    let gdpsi = &bg.gbar * &cov_d(&cfg.omega, &cfg.psi);
    let k = kappa(bg, &bg.angle(&gdpsi))?;
    let hat2 = bg.ghat.interior(&bg.ghat.interior(&gdpsi));
    Ok((&bg.chi_bar * &k).add(&(&bg.chi_bar * &hat2).scale(&Q::ratio(1, 8))))
}

/// Closed forms of `Q₀²` on `e, ω, ψ, c, ξ, χ`.
pub fn q0_squared_closed(bg: &Background) -> Result<QValues, BvError> {
    let cfg = &bg.cfg;
    let half = Q::ratio(1, 2);
    let phi = &bg.phi;
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let kt = susy_kappa_term(bg)?;
    let psi_g3 = &bg.psi_bar * &gamma_power(3);

    let mut q = QValues::zero();
    let psi_g_psi = &(&bg.psi_bar * gamma_field()) * &cfg.psi;
    q.e = phi.interior(&cov_d(&cfg.omega, &cfg.e).sub(&psi_g_psi.scale(&half))).scale(&half);

    q.psi = phi.interior(&dpsi).scale(&half).sub(&(&kt * &cfg.chi));

    let ef = &cfg.e * &curvature(&cfg.omega);
    let rhs = phi
        .interior(&ef.add(&(&psi_g3 * &dpsi).scale(&Q::ratio(1, 6))))
        .scale(&half)
        .add(&(&psi_g3 * &phi.interior(&dpsi)).scale(&Q::ratio(1, 12)))
        .sub(&(&(&psi_g3 * &cfg.chi) * &kt).scale(&Q::ratio(1, 6)));
    q.omega = w_inverse(&cfg.e, 1, Shape::new(1, 2, SpinKind::Scalar), &rhs)?;

    q.c = phi.interior(&delta_chi_omega(bg)?).scale(&half).add(&cfg.xi.interior(&q.omega));
    q.chi = Field::zero(SpinKind::Column);
    Ok(q)
}
