//! `Q₀` on the antifields, and `Q` on the stored reparametrized antifields.

use crate::clifford::gamma::{gamma_field, gamma_power};
use crate::clifford::spinor::bar;
use crate::fiber::{cov_d, curvature, eta_bracket, lie, rep_action, Field, SpinKind, VectorField};
use crate::fields::{theta_gamma, Background};
use crate::scalars::GaussianRational as Q;
use crate::structure::{body_of, solve_even, w_inverse, Shape};

use super::lagrangian::torsion;
use super::q0::{chi_gamma_psi, delta_chi_omega, QValues};
use super::BvError;

const COL: SpinKind = SpinKind::Column;

/// The displayed right-hand sides: `Q₀e†`, `eQ₀ǒ`, `Q₀ψ†`, `(e²/2)Q₀č`,
/// `Q₀ξ†_μ`, `Q₀χ†`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntifieldQ0 {
    pub e_dag: Field,
    pub e_omega_check: Field,
    pub psi_dag: Field,
    pub e2_c_check: Field,
    pub xi_dag: [Field; 4],
    pub chi_dag: Field,
}

impl AntifieldQ0 {
    /// `(name, value, expected bidegree)` for every entry.
    pub fn entries(&self) -> Vec<(String, &Field, (u32, u32))> {
        let mut out = vec![
            ("e_dag".to_string(), &self.e_dag, (3, 3)),
            ("e_omega_check".to_string(), &self.e_omega_check, (3, 2)),
            ("psi_dag".to_string(), &self.psi_dag, (3, 4)),
            ("e2_c_check".to_string(), &self.e2_c_check, (4, 2)),
        ];
        for (m, f) in self.xi_dag.iter().enumerate() {
            out.push((format!("xi_dag_{m}"), f, (4, 4)));
        }
        out.push(("chi_dag".to_string(), &self.chi_dag, (4, 4)));
        out
    }
}

fn i_ratio(n: i64, d: i64) -> Q {
    Q::i() * Q::ratio(n, d)
}

/// `ι_γ̂ ξ† = Σ_μ γ̂^μ ξ†_μ`.
fn iota_ghat_xi_dag(bg: &Background) -> Field {
    let parts: Vec<Field> = (0..4).map(|mu| &bg.ghat.comps[mu] * &bg.cfg.xi_dag[mu]).collect();
    Field::sum(SpinKind::Matrix, &parts)
}

/// `Σ_{b,μ} η^{bb} [v_b, e^μ_b ξ†_μ]`.
fn v_bracket_xi_dag(bg: &Background) -> Field {
    let mut parts = Vec::new();
    for b in 0..4 {
        for mu in 0..4 {
            let inner = &bg.e_inv[mu][b] * &bg.cfg.xi_dag[mu];
            let eta = crate::clifford::gamma::ETA[b];
            parts.push(eta_bracket(&Field::v(b), &inner).scale_int(eta));
        }
    }
    Field::sum(SpinKind::Scalar, &parts)
}

/// The six displays, verbatim. Products keep the printed order.
pub fn q0_antifields_verbatim(bg: &Background) -> Result<AntifieldQ0, BvError> {
    let cfg = &bg.cfg;
    let (e, w, xi) = (&cfg.e, &cfg.omega, &cfg.xi);
    let f = curvature(w);
    let de = cov_d(w, e);
    let dpsi = cov_d(w, &cfg.psi);
    let g1 = gamma_field();
    let g3 = gamma_power(3);
    let dco = delta_chi_omega(bg)?;
    let cb = &bg.chi_bar;
    let pb = &bg.psi_bar;
    let ocheck = &cfg.omega_check;
    let ccheck = &cfg.c_check;
    let e_dag = &cfg.e_dag;
    let omega_dag = bg.omega_dag();
    let c_dag = bg.c_dag();
    let psi_dag = bg.psi_dag();
    let chi_dag = bg.chi_dag();
    let psi0b = bar(&cfg.psi0_dag);
    let chi0b = bar(&cfg.chi0_dag);
    let gb = &bg.gbar;
    let e2 = e * e;
    let cg3dpsi = &(cb * &g3) * &dpsi;
    let e_g3 = eta_bracket(e, &g3);
    let ixe = xi.interior(e);
    let ixc = xi.interior(ccheck);
    // č ι_ξ e + ½ e ι_ξ č
    let c_shift = (ccheck * &ixe).add(&(e * &ixc).scale_ratio(1, 2));

    let q_e_dag = Field::sum(
        SpinKind::Scalar,
        &[
            e * &f,
            (&(pb * &g3) * &dpsi).scale_ratio(1, 6),
            lie(xi, w, e_dag),
            rep_action(&cfg.c, e_dag).neg(),
            (&bg.phi.interior(&(&(&e2 * e) * pb)) * &cfg.chi0_dag).scale(&i_ratio(-1, 12)),
            bg.phi.interior(&v_bracket_xi_dag(bg)).scale_ratio(1, 2),
            cg3dpsi.scale_ratio(-1, 12),
            xi.interior(&(&cg3dpsi * ccheck)).scale_ratio(1, 6),
            (ocheck * &dco).neg(),
            (&(e * ccheck) * &xi.interior(&dco)).neg(),
        ],
    );

    let cgpsi = chi_gamma_psi(bg);
    let psi0_gb = &psi0b * gb;
    let q_omega_check = Field::sum(
        SpinKind::Scalar,
        &[
            e * &torsion(cfg),
            xi.interior(&eta_bracket(e_dag, e)).neg(),
            cov_d(w, &xi.interior(&omega_dag)).neg(),
            (e * &rep_action(&cfg.c, ocheck)).neg(),
            cov_d(w, &xi.interior(&xi.interior(&c_dag))).scale_ratio(1, 2),
            (ocheck * &lie(xi, w, e)).neg(),
            (&cgpsi * ocheck).scale_ratio(-1, 2),
            (&(cb * &eta_bracket(ocheck, &g3)) * &cfg.psi).scale_ratio(-1, 12),
            (&cgpsi * &c_shift).scale_ratio(-1, 2),
            (&(cb * &eta_bracket(&c_shift, &g3)) * &cfg.psi).scale_ratio(1, 12),
            xi.interior(
                &(&(&(e * &psi0_gb) * g1) * &cfg.psi)
                    .sub(&(&(&psi0_gb * &e_g3) * &cfg.psi).scale_ratio(1, 6)),
            )
            .scale(&i_ratio(1, 2)),
            (&(&(e * &psi0_gb) * g1) * &cfg.chi).scale(&i_ratio(1, 2)),
            (&(&psi0_gb * &e_g3) * &cfg.chi).scale(&i_ratio(-1, 12)),
            xi.interior(&(&(&(&e2 * &chi0b) * &(gb * gb)) * &cfg.chi)).scale(&i_ratio(1, 8)),
        ],
    );

    let q_psi_dag = Field::sum(
        COL,
        &[
            (&(e * &g3) * &dpsi).sub(&(&(&de * &g3) * &cfg.psi).scale_ratio(1, 2)).scale(&i_ratio(-1, 3)),
            (&g3 * &cov_d(w, &(ocheck * &cfg.chi))).scale(&i_ratio(-1, 6)),
            lie(xi, w, &psi_dag),
            rep_action(&cfg.c, &psi_dag).neg(),
            (&(g1 * &cfg.chi) * e_dag).scale(&Q::i()),
            cov_d(
                w,
                &(&(&(ccheck * &ixe) * &g3) * &cfg.chi)
                    .add(&(&(&(e * &ixc) * &g3) * &cfg.chi).scale_ratio(1, 2)),
            )
            .scale(&i_ratio(-1, 6)),
            bg.phi.interior(&chi_dag).scale_ratio(-1, 2),
        ],
    );

    let q_c_check = Field::sum(
        SpinKind::Scalar,
        &[
            cov_d(w, &omega_dag).neg(),
            eta_bracket(e, e_dag).neg(),
            (&(&(&e2 * &chi0b) * &(gb * gb)) * &cfg.chi).scale(&i_ratio(1, 8)),
            (&(&(e * &psi0_gb) * g1) * &cfg.psi).scale(&i_ratio(1, 2)),
            (&(&psi0_gb * &e_g3) * &cfg.psi).scale(&i_ratio(-1, 12)),
            (ccheck * &lie(xi, w, &e2)).scale_ratio(-1, 2),
            (&(ccheck * e) * &cgpsi).neg(),
        ],
    );

    let ic_dag = xi.interior(&c_dag);
    let dpsi_bar = cov_d(w, pb);
    let dchi_bar = cov_d(w, cb);
    let d_psi_dag = cov_d(w, &psi_dag);
    let q_xi_dag: [Field; 4] = std::array::from_fn(|mu| {
        let unit = VectorField::new(
            std::array::from_fn(|nu| if nu == mu { Field::one() } else { Field::zero(SpinKind::Scalar) }),
            0,
        );
        let lie_bracket = unit.bracket(xi);
        Field::sum(
            SpinKind::Scalar,
            &[
                (&e_dag.interior(mu) * &de).neg(),
                (&de * &e_dag.interior(mu)).neg(),
                (&omega_dag.interior(mu) * &f).neg(),
                (&ic_dag.interior(mu) * &f).neg(),
                lie_bracket.interior_components(&cfg.xi_dag),
                (&dpsi_bar * &psi_dag.interior(mu)).scale(&-Q::i()),
                (&pb.interior(mu) * &d_psi_dag).scale(&Q::i()),
                (&dchi_bar.interior(mu) * &chi_dag).scale(&-Q::i()),
                (&(ccheck * &e.interior(mu)) * &cg3dpsi).scale_ratio(1, 6),
                (&(e * &ccheck.interior(mu)) * &cg3dpsi).scale_ratio(1, 12),
            ],
        )
    });

    let q_chi_dag = Field::sum(
        COL,
        &[
            (&g3 * &dpsi).scale(&i_ratio(1, 6)),
            (&(g1 * &cfg.psi) * e_dag).scale(&Q::i()),
            d_psi_dag.neg(),
            (&iota_ghat_xi_dag(bg) * &cfg.chi).neg(),
        ],
    );

    Ok(AntifieldQ0 {
        e_dag: q_e_dag,
        e_omega_check: q_omega_check,
        psi_dag: q_psi_dag,
        e2_c_check: q_c_check,
        xi_dag: q_xi_dag,
        chi_dag: q_chi_dag,
    })
}

/// Terms of `f` outside the bidegree `(i, j)`.
pub fn off_degree(f: &Field, (i, j): (u32, u32)) -> Field {
    f.sub(&f.component(i, j))
}

/// `Θ_γ⁻¹`: solves `(1/3!) e γ³ γ̲ X = y` for `X ∈ Ω^{(1,0)}`.
pub fn theta_gamma_inverse(bg: &Background, y: &Field) -> Result<Field, BvError> {
    let m = (&(&bg.cfg.e * &gamma_power(3)) * &bg.gbar).scale_ratio(1, 6);
    let mb = body_of(&m);
    Ok(solve_even(|x| &m * x, |x| &mb * x, Shape::new(1, 0, COL), Shape::new(3, 4, COL), y)?)
}

/// `Q` on the stored antifields `e†, ǒ, ψ⁰†, č, ξ†, χ⁰†` from the `Q₀`
/// displays, restricted to the bidegree of each display. `q_e` is the total
/// `Qe` entering the reparametrizations `ψ† = Θ_γψ⁰†`, `χ† = (e⁴/4!)χ⁰†`.
pub fn q0_on_stored_antifields(bg: &Background, q_e: &Field) -> Result<QValues, BvError> {
    let cfg = &bg.cfg;
    let raw = q0_antifields_verbatim(bg)?;
    let mut q = QValues::zero();
    q.e_dag = raw.e_dag.component(3, 3);
    q.omega_check = w_inverse(&cfg.e, 1, Shape::new(2, 1, SpinKind::Scalar), &raw.e_omega_check.component(3, 2))?;
    q.c_check = w_inverse(&cfg.e, 2, Shape::new(2, 0, SpinKind::Scalar), &raw.e2_c_check.component(4, 2))?;
    q.xi_dag = std::array::from_fn(|m| raw.xi_dag[m].component(4, 4));

    // Qψ† = lin[Θ_γ(e + εQe) ψ⁰†] + Θ_γ(Qψ⁰†)
    let eps = Field::theta(0);
    let mut shifted = cfg.clone();
    shifted.e = cfg.e.add(&(&eps * q_e));
    let sbg = Background::new(&shifted)?;
    let induced = theta_gamma(&sbg, &cfg.psi0_dag).epsilon_linear_part();
    q.psi0_dag = theta_gamma_inverse(bg, &raw.psi_dag.component(3, 4).sub(&induced))?;

    let induced = (&sbg.e_pow[4] * &cfg.chi0_dag).epsilon_linear_part();
    q.chi0_dag = w_inverse(&cfg.e, 4, Shape::new(0, 0, COL), &raw.chi_dag.component(4, 4).sub(&induced))?;
    Ok(q)
}
