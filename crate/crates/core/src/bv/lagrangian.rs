//! Lagrangian density, equations of motion and the variational identity.

use crate::clifford::gamma::{gamma5, gamma_field, gamma_power};
use crate::clifford::spinor::bar;
use crate::fiber::{cov_d, curvature, eta_bracket, Field};
use crate::fields::{Background, Config};
use crate::scalars::GaussianRational as Q;

/// `(e²/2) F_ω + (1/3!) e ψ̄γ³ d_ωψ`.
pub fn lagrangian_density(cfg: &Config) -> Field {
    let e2 = (&cfg.e * &cfg.e).scale_ratio(1, 2);
    let grav = &e2 * &curvature(&cfg.omega);
    let psi_bar = bar(&cfg.psi);
    let kin = &(&(&cfg.e * &psi_bar) * &gamma_power(3)) * &cov_d(&cfg.omega, &cfg.psi);
    grav.add(&kin.scale_ratio(1, 6))
}

/// The three equations of motion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eom {
    /// `e F_ω + (1/3!) ψ̄γ³ d_ωψ`.
    pub e: Field,
    /// `e (d_ω e − ½ ψ̄γψ)`.
    pub omega: Field,
    /// `e d_ωψ̄ γ³ + ½ d_ω e ψ̄γ³`, a row spinor.
    pub psi: Field,
}

pub fn psi_gamma_psi(cfg: &Config) -> Field {
    &(&bar(&cfg.psi) * gamma_field()) * &cfg.psi
}

/// `d_ω e − ½ ψ̄γψ`.
pub fn torsion(cfg: &Config) -> Field {
    cov_d(&cfg.omega, &cfg.e).sub(&psi_gamma_psi(cfg).scale_ratio(1, 2))
}

pub fn eom_all(cfg: &Config) -> Eom {
    let g3 = gamma_power(3);
    let psi_bar = bar(&cfg.psi);
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let de = cov_d(&cfg.omega, &cfg.e);
    let e = (&cfg.e * &curvature(&cfg.omega)).add(&(&(&psi_bar * &g3) * &dpsi).scale_ratio(1, 6));
    let omega = &cfg.e * &torsion(cfg);
    let psi = (&(&cfg.e * &bar(&dpsi)) * &g3).add(&(&(&de * &psi_bar) * &g3).scale_ratio(1, 2));
    Eom { e, omega, psi }
}

/// Boundary densities `((e²/2) δω, (1/3!) e ψ̄γ³ δψ)`.
pub fn boundary_densities(cfg: &Config, d_omega: &Field, d_psi: &Field) -> (Field, Field) {
    let e2 = (&cfg.e * &cfg.e).scale_ratio(1, 2);
    let t = &(&(&cfg.e * &bar(&cfg.psi)) * &gamma_power(3)) * d_psi;
    (&e2 * d_omega, t.scale_ratio(1, 6))
}

/// A variation of the classical fields.
#[derive(Clone, Debug)]
pub struct Variation {
    pub e: Field,
    pub omega: Field,
    pub psi: Field,
}

/// Coefficient of `t` in `L(Φ + tδΦ)` by exact interpolation at `t = 0..=4`
/// (the density is quartic in the fields).
pub fn linearized_lagrangian(cfg: &Config, var: &Variation) -> Field {
    let samples: Vec<Field> = (0..5)
        .map(|t| {
            let mut c = cfg.clone();
            c.e = cfg.e.add(&var.e.scale_int(t));
            c.omega = cfg.omega.add(&var.omega.scale_int(t));
            c.psi = cfg.psi.add(&var.psi.scale_int(t));
            lagrangian_density(&c)
        })
        .collect();
    super::polynomial_coefficients(&samples)[1].clone()
}

/// `δL − [EoM_e δe + δω EoM_ω + ⅓ EoM_ψ δψ] − d((e²/2) δω) + d((1/3!) e ψ̄γ³ δψ)`.
///
/// With `d` acting from the left the two boundary densities enter with
/// opposite signs, and the `ω` pairing carries `δω` on the left.
pub fn variational_residual(cfg: &Config, var: &Variation) -> Field {
    let eom = eom_all(cfg);
    let pairing = (&eom.e * &var.e)
        .add(&(&var.omega * &eom.omega))
        .add(&(&eom.psi * &var.psi).scale_ratio(1, 3));
    let (b_omega, b_psi) = boundary_densities(cfg, &var.omega, &var.psi);
    linearized_lagrangian(cfg, var).sub(&pairing).sub(&b_omega.d()).add(&b_psi.d())
}

/// Both sides of the reduced gravitino equation,
/// `(i/3)(eγ³d_ωψ − ½ d_ωe γ³ψ)` and `−⅓ γ⁵(γ̲ d_ωψ − ½[d_ωe, γ]ψ)`, the
/// latter without the volume factor.
pub fn reduced_eom_psi(bg: &Background) -> (Field, Field) {
    let cfg = &bg.cfg;
    let g3 = gamma_power(3);
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let de = cov_d(&cfg.omega, &cfg.e);
    let lhs = (&(&cfg.e * &g3) * &dpsi)
        .sub(&(&(&de * &g3) * &cfg.psi).scale_ratio(1, 2))
        .scale(&(Q::i() * Q::ratio(1, 3)));
    let inner = (&bg.gbar * &dpsi).sub(&(&eta_bracket(&de, gamma_field()) * &cfg.psi).scale_ratio(1, 2));
    let rhs = (&Field::matrix(gamma5()) * &inner).scale_ratio(-1, 3);
    (lhs, rhs)
}

/// `Vol_V` read from `v_a v_b v_c v_d = ε_{abcd} Vol_V`.
pub fn vol_v() -> Field {
    let v = &(&(&Field::v(0) * &Field::v(1)) * &Field::v(2)) * &Field::v(3);
    v.scale_int(crate::clifford::gamma::eps_lower(0, 1, 2, 3))
}
