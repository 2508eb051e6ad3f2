//! The cohomological vector field `Q₀` on fields, and `ε`-shift evaluation.

use crate::clifford::gamma::{gamma_field, gamma_power};
use crate::fiber::{cov_d, curvature, lie, rep_action, Field, SpinKind, VectorField};
use crate::fields::{Background, Config, FieldName};
use crate::scalars::GaussianRational as Q;
use crate::structure::{w_inverse, Shape};

use super::BvError;

/// Values of a vector field on every stored field (zero where not computed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QValues {
    pub e: Field,
    pub omega: Field,
    pub psi: Field,
    pub c: Field,
    pub xi: VectorField,
    pub chi: Field,
    pub e_dag: Field,
    pub omega_check: Field,
    pub psi0_dag: Field,
    pub c_check: Field,
    pub xi_dag: [Field; 4],
    pub chi0_dag: Field,
}

impl QValues {
    pub fn zero() -> Self {
        let z = Field::zero(SpinKind::Scalar);
        let zc = Field::zero(SpinKind::Column);
        QValues {
            e: z.clone(),
            omega: z.clone(),
            psi: zc.clone(),
            c: z.clone(),
            xi: VectorField::zero(0),
            chi: zc.clone(),
            e_dag: z.clone(),
            omega_check: z.clone(),
            psi0_dag: zc.clone(),
            c_check: z.clone(),
            xi_dag: std::array::from_fn(|_| z.clone()),
            chi0_dag: zc,
        }
    }

    /// View as a configuration-shaped record (parities flipped).
    pub fn as_config(&self) -> Config {
        Config {
            e: self.e.clone(),
            omega: self.omega.clone(),
            psi: self.psi.clone(),
            c: self.c.clone(),
            xi: self.xi.clone(),
            chi: self.chi.clone(),
            e_dag: self.e_dag.clone(),
            omega_check: self.omega_check.clone(),
            psi0_dag: self.psi0_dag.clone(),
            c_check: self.c_check.clone(),
            xi_dag: self.xi_dag.clone(),
            chi0_dag: self.chi0_dag.clone(),
        }
    }

    pub fn from_config(c: Config) -> Self {
        QValues {
            e: c.e,
            omega: c.omega,
            psi: c.psi,
            c: c.c,
            xi: c.xi,
            chi: c.chi,
            e_dag: c.e_dag,
            omega_check: c.omega_check,
            psi0_dag: c.psi0_dag,
            c_check: c.c_check,
            xi_dag: c.xi_dag,
            chi0_dag: c.chi0_dag,
        }
    }

    pub fn get(&self, name: FieldName) -> Vec<Field> {
        self.as_config().get(name).into_iter().cloned().collect()
    }

    pub fn add(&self, other: &QValues) -> QValues {
        let a = self.as_config();
        let b = other.as_config();
        let mut out = a.clone();
        for n in FieldName::ALL {
            let vals = a.get(n).iter().zip(b.get(n)).map(|(x, y)| x.add(y)).collect();
            out.set(n, vals);
        }
        let mut q = QValues::from_config(out);
        q.xi.parity = if self.xi.is_zero() { other.xi.parity } else { self.xi.parity };
        q
    }

    pub fn epsilon_linear_part(&self) -> QValues {
        let c = self.as_config().map(|_, f| f.epsilon_linear_part());
        let mut q = QValues::from_config(c);
        q.xi.parity = self.xi.parity ^ 1;
        q
    }
}

/// `χ̄ γ ψ`.
pub fn chi_gamma_psi(bg: &Background) -> Field {
    &(&bg.chi_bar * gamma_field()) * &bg.cfg.psi
}

/// `δ_χω` from `e δ_χω = −(1/3!) χ̄ γ³ d_ω ψ`.
pub fn delta_chi_omega(bg: &Background) -> Result<Field, BvError> {
    let cfg = &bg.cfg;
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let rhs = (&(&bg.chi_bar * &gamma_power(3)) * &dpsi).scale(&Q::ratio(-1, 6));
    Ok(w_inverse(&cfg.e, 1, Shape::new(1, 2, SpinKind::Scalar), &rhs)?)
}

/// `Q₀` on the six fields.
pub fn q0_fields(bg: &Background) -> Result<QValues, BvError> {
    let cfg = &bg.cfg;
    let f = curvature(&cfg.omega);
    let dco = delta_chi_omega(bg)?;
    let xi = &cfg.xi;

    let mut q = QValues::zero();
    q.e = lie(xi, &cfg.omega, &cfg.e)
        .sub(&rep_action(&cfg.c, &cfg.e))
        .add(&chi_gamma_psi(bg));
    q.omega = xi.interior(&f).sub(&cov_d(&cfg.omega, &cfg.c)).add(&dco);
    q.psi = lie(xi, &cfg.omega, &cfg.psi)
        .sub(&rep_action(&cfg.c, &cfg.psi))
        .sub(&cov_d(&cfg.omega, &cfg.chi));
    let half = Q::ratio(1, 2);
    q.xi = xi.bracket(xi).scale(&half).add(&bg.phi.scale(&half));
    q.c = xi
        .interior(&xi.interior(&f))
        .sub(&rep_action(&cfg.c, &cfg.c))
        .scale(&half)
        .add(&xi.interior(&dco));
    q.chi = lie(xi, &cfg.omega, &cfg.chi)
        .sub(&rep_action(&cfg.c, &cfg.chi))
        .sub(&bg.phi.interior(&cfg.psi).scale(&half));
    Ok(q)
}

/// `Φ + ε·QΦ` for every stored field.
pub fn shift(cfg: &Config, q: &QValues) -> Config {
    let eps = Field::theta(0);
    let qc = q.as_config();
    let mut out = cfg.clone();
    for n in FieldName::ALL {
        let vals = cfg.get(n).iter().zip(qc.get(n)).map(|(x, y)| x.add(&(&eps * y))).collect();
        out.set(n, vals);
    }
    out
}

/// Closed form `½χ̄ι_γ̂(γ²d_ωψ) − χ̄γ⟨ē,d_ωψ⟩ + ¼eχ̄ι_γ̂ι_γ̂(γd_ωψ) − ½eχ̄ι_γ̂⟨ē,d_ωψ⟩`.
pub fn delta_chi_omega_closed(bg: &Background) -> Field {
    let cfg = &bg.cfg;
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let cb = &bg.chi_bar;
    let ang = bg.angle(&dpsi);
    let a = cb * &bg.ghat.interior(&(&gamma_power(2) * &dpsi));
    let b = &(cb * gamma_field()) * &ang;
    let c = &cfg.e * &(cb * &bg.ghat.interior(&bg.ghat.interior(&(gamma_field() * &dpsi))));
    let d = &cfg.e * &(cb * &bg.ghat.interior(&ang));
    a.scale_ratio(1, 2).sub(&b).add(&c.scale_ratio(1, 4)).sub(&d.scale_ratio(1, 2))
}
