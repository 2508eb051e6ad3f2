//! Lagrangian, equations of motion, `δ_χω`, `Q₀²` and `Q₀` on antifields.

use rand_chacha::ChaCha8Rng;

use crate::bv::lagrangian::{eom_all, reduced_eom_psi, variational_residual, vol_v, Variation};
use crate::bv::q0::{self, delta_chi_omega_closed};
use crate::bv::q0_antifields::{off_degree, q0_antifields_verbatim};
use crate::bv::q0sq::q0_squared_closed;
use crate::bv::q_total::{q_squared, QOptions};
use crate::clifford::gamma::{gamma_field, gamma_power};
use crate::clifford::spinor::bar;
use crate::fiber::{cov_d, curvature, eta_bracket, rep_action, Field, SpinKind};
use crate::fields::{random_shaped, sample_config, Background, FieldName};
use crate::report::Recorder;
use crate::scalars::GaussianRational as Q;

use super::{residual, CaseParams, CaseResult};

const CLASSICAL: [FieldName; 3] = [FieldName::E, FieldName::Omega, FieldName::Psi];

pub(super) fn variational(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&CLASSICAL));
    let pools = params.pools();
    let k = params.jet_order;
    let var = Variation {
        e: random_shaped(rng, FieldName::E.shape(), None, k),
        omega: random_shaped(rng, FieldName::Omega.shape(), None, k),
        psi: random_shaped(rng, FieldName::Psi.shape(), Some(&pools.c), k),
    };
    rec.zero(
        "variational",
        "dL = EoM_e de + dw EoM_w + 1/3 EoM_psi dpsi + d((e^2/2) dw) - d((1/3!) e psi-bar g3 dpsi)",
        "lagrangian",
        &variational_residual(&cfg, &var),
    );
    Ok(())
}

/// The two gravitino equation presentations.
pub(super) fn eom(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&CLASSICAL));
    let bg = Background::new(&cfg)?;
    let eom = eom_all(&cfg);
    let (lhs, rhs) = reduced_eom_psi(&bg);
    rec.zero(
        "eom:psi:conjugate",
        "bar((i/3)(e g3 d_w psi - 1/2 d_w e g3 psi)) = -(i/3)(e d_w psi-bar g3 + 1/2 d_w e psi-bar g3)",
        "psi",
        &residual(&bar(&lhs), &eom.psi.scale(&(Q::i() * Q::ratio(-1, 3)))),
    );
    rec.zero(
        "eom:psi:reduced",
        "(i/3)(e g3 d_w psi - 1/2 d_w e g3 psi) = -(1/3) g5 (gbar d_w psi - 1/2 [d_w e, g] psi) Vol_V",
        "psi",
        &residual(&lhs, &(&rhs * &vol_v())),
    );
    rec.zero(
        "eom:psi:reduced_rescaled",
        "reduced gravitino equation with v_0 v_1 v_2 v_3 = -(1/6) Vol_V",
        "psi",
        &residual(&lhs, &(&rhs * &vol_v().scale_int(6))),
    );
    Ok(())
}

pub(super) fn delta_chi_omega(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&[FieldName::E, FieldName::Omega, FieldName::Psi, FieldName::Chi]));
    let bg = Background::new(&cfg)?;
    let dco = q0::delta_chi_omega(&bg)?;
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let cb = &bg.chi_bar;
    let solve = (&cfg.e * &dco).add(&(&(cb * &gamma_power(3)) * &dpsi).scale_ratio(1, 6));
    rec.zero("dco:solve", "e dw = -(1/3!) chi-bar g3 d_w psi", "delta_chi_omega", &solve);
    rec.zero(
        "dco:closed",
        "dw = 1/2 chi-bar i_ghat(g^2 d_w psi) - chi-bar g <e, d_w psi> + 1/4 e chi-bar i_ghat i_ghat(g d_w psi) - 1/2 e chi-bar i_ghat <e, d_w psi>",
        "delta_chi_omega",
        &residual(&dco, &delta_chi_omega_closed(&bg)),
    );

    let gd = &bg.gbar * &dpsi;
    let parts = [
        &(cb * gamma_field()) * &dpsi,
        &(cb * gamma_field()) * &bg.ghat.interior(&gd),
        cb * &bg.angle(&gd),
        &cfg.e * &(cb * &bg.ghat.interior(&bg.ghat.interior(&gd))),
    ];
    let combo = |c: [Q; 4]| {
        let v: Vec<Field> = parts.iter().zip(c.iter()).map(|(p, q)| p.scale(q)).collect();
        Field::sum(SpinKind::Scalar, &v)
    };
    let bracket = eta_bracket(&cfg.e, &dco);
    let quarter = Q::ratio(1, 4);
    rec.zero(
        "dco:e_bracket:printed",
        "[e, dw] = 5 chi-bar g d_w psi + chi-bar g i_ghat(gbar d_w psi) + chi-bar <e, gbar d_w psi> + 1/4 e chi-bar i_ghat i_ghat(gbar d_w psi)",
        "e_delta_chi_omega",
        &residual(&bracket, &combo([Q::from_int(5), Q::one(), Q::one(), quarter.clone()])),
    );
    rec.zero(
        "dco:e_bracket",
        "[e, dw] = chi-bar g d_w psi + chi-bar g i_ghat(gbar d_w psi) + chi-bar <e, gbar d_w psi> + 1/4 e chi-bar i_ghat i_ghat(gbar d_w psi)",
        "e_delta_chi_omega",
        &residual(&bracket, &combo([Q::one(), Q::one(), Q::one(), quarter])),
    );
    Ok(())
}

/// `Q₀²` by the shift evaluator against the closed forms.
pub(super) fn q0_squared(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&FieldName::FIELDS));
    let bg = Background::new(&cfg)?;
    let s = q_squared(&cfg, &QOptions::q0_only())?;
    let closed = q0_squared_closed(&bg)?;
    let e = &cfg.e;
    let half = Q::ratio(1, 2);

    for (mu, f) in s.xi.comps.iter().enumerate() {
        rec.zero(&format!("q0sq:xi:{mu}"), "Q0^2 xi = 0", "xi", f);
    }
    rec.zero("q0sq:chi", "Q0^2 chi = 0", "chi", &s.chi);
    rec.zero("q0sq:e", "Q0^2 e = 1/2 i_phi (d_w e - 1/2 psi-bar g psi)", "e", &residual(&s.e, &closed.e));
    rec.zero(
        "q0sq:psi",
        "Q0^2 psi = 1/2 i_phi d_w psi - (chi-bar kappa(<e, gbar d_w psi>) + 1/8 chi-bar i_ghat i_ghat(gbar d_w psi)) chi",
        "psi",
        &residual(&s.psi, &closed.psi),
    );
    rec.zero(
        "q0sq:e_omega",
        "e Q0^2 w = 1/2 i_phi(eF + (1/3!) psi-bar g3 d_w psi) + (1/12) psi-bar g3 i_phi d_w psi - (1/3!) psi-bar g3 chi (kappa term)",
        "e_omega",
        &residual(&(e * &s.omega), &(e * &closed.omega)),
    );
    let dco = q0::delta_chi_omega(&bg)?;
    let c_form = bg.phi.interior(&dco).scale(&half).add(&cfg.xi.interior(&s.omega));
    rec.zero("q0sq:c", "Q0^2 c = 1/2 i_phi dw + i_xi Q0^2 w", "c", &residual(&s.c, &c_form));
    rec.zero("q0sq:c:printed", "Q0^2 c = 1/2 i_phi dw + i_xi (printed Q0^2 w)", "c", &residual(&s.c, &closed.c));

    let phi = &bg.phi;
    let dpsi = cov_d(&cfg.omega, &cfg.psi);
    let bracket = rep_action(&dco, &cfg.chi);
    let psi_form = phi.interior(&dpsi).scale(&half).sub(&bracket);
    rec.zero("q0sq:psi:unexpanded", "Q0^2 psi = 1/2 i_phi d_w psi - [dw, chi]", "psi", &residual(&s.psi, &psi_form));
    let pg3 = &bg.psi_bar * &gamma_power(3);
    let omega_form = Field::sum(
        SpinKind::Scalar,
        &[
            phi.interior(&(e * &curvature(&cfg.omega))).scale(&half),
            phi.interior(&(&pg3 * &dpsi)).scale_ratio(1, 12),
            (&pg3 * &phi.interior(&dpsi)).scale_ratio(1, 12),
            (&pg3 * &bracket).scale_ratio(-1, 6),
        ],
    );
    rec.zero(
        "q0sq:e_omega:unexpanded",
        "e Q0^2 w = 1/2 i_phi(eF) + 1/12 i_phi(psi-bar g3 d_w psi) + 1/12 psi-bar g3 i_phi d_w psi - 1/6 psi-bar g3 [dw, chi]",
        "e_omega",
        &residual(&(e * &s.omega), &omega_form),
    );
    Ok(())
}

/// Bidegree audit of the antifield displays and their equation-of-motion
/// leading terms.
pub(super) fn q0_antifields(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&FieldName::ALL));
    let bg = Background::new(&cfg)?;
    let raw = q0_antifields_verbatim(&bg)?;
    for (name, f, deg) in raw.entries() {
        rec.zero(&format!("q0dag:degree:{name}"), &format!("Q0 {name} has bidegree {deg:?}"), &name, &off_degree(f, deg));
    }

    let cfg = sample_config(rng, &params.plan(&CLASSICAL));
    let bg = Background::new(&cfg)?;
    let raw = q0_antifields_verbatim(&bg)?;
    let eom = eom_all(&cfg);
    let (lhs, _) = reduced_eom_psi(&bg);
    rec.zero("q0dag:eom:e", "Q0 e_dag = EoM_e on classical fields", "e_dag", &residual(&raw.e_dag, &eom.e));
    rec.zero("q0dag:eom:omega", "e Q0 omega_check = EoM_w on classical fields", "omega_check", &residual(&raw.e_omega_check, &eom.omega));
    rec.zero("q0dag:eom:psi", "Q0 psi_dag = -(i/3)(e g3 d_w psi - 1/2 d_w e g3 psi)", "psi_dag", &residual(&raw.psi_dag, &lhs.neg()));
    Ok(())
}
