//! Flip relations, Fierz identities and the graded calculus identities.

use rand_chacha::ChaCha8Rng;

use crate::bv::q0::delta_chi_omega;
use crate::clifford::identities::{fierz_completeness, fierz_lemma_residuals, fierz_residuals, flip_residual, majorana_sample};
use crate::clifford::spinor::majorana_residual;
use crate::fiber::identities::*;
use crate::fiber::{cov_d, eta_bracket};
use crate::fields::{sample_config, Background, FieldName};
use crate::report::Recorder;

use super::{residual, CaseParams, CaseResult};

fn parity_label(p: &[bool]) -> String {
    p.iter().map(|&o| if o { 'o' } else { 'e' }).collect()
}

/// One Majorana pair per parity pattern, all four flips each.
pub(super) fn flip(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let gens = params.generators();
    let (first, second) = gens.split_at(gens.len() / 2);
    for psi_odd in [false, true] {
        for chi_odd in [false, true] {
            let pat = parity_label(&[psi_odd, chi_odd]);
            let psi = majorana_sample(rng, psi_odd, first);
            let chi = majorana_sample(rng, chi_odd, second);
            rec.zero(&format!("majorana:{pat}"), "sampled spinors satisfy the Majorana condition", "psi", &majorana_residual(&psi));
            for n in 0..4 {
                rec.zero(
                    &format!("flip:{n}:{pat}"),
                    "chi-bar gamma^N psi = t_N (-1)^(N(|psi|+|chi|)+|psi||chi|) psi-bar gamma^N chi",
                    "flip",
                    &flip_residual(n, &psi, psi_odd, &chi, chi_odd),
                );
            }
        }
    }
    Ok(())
}

/// Both rearrangements over all sixteen parity patterns, and the three
/// quartic identities with `|chi| = 0`, `|psi| = 1`.
pub(super) fn fierz(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams, index: usize) -> CaseResult {
    if index == 0 {
        let t = fierz_completeness();
        rec.holds("fierz:completeness", "sum_a (C gamma^a)_(a(d) (C gamma_a)_(rb)) = 0", t.failed.is_empty(), || {
            format!("{} of {} tuples fail", t.failed.len(), t.checked)
        });
    }
    let gens = params.generators();
    let chunk = (gens.len() / 4).max(1);
    let slices: Vec<&[usize]> = (0..4).map(|k| &gens[(k * chunk).min(gens.len() - 1)..((k + 1) * chunk).min(gens.len())]).collect();
    for pattern in 0..16u32 {
        let p: [bool; 4] = std::array::from_fn(|k| pattern >> (3 - k) & 1 == 1);
        let l: [_; 4] = std::array::from_fn(|k| majorana_sample(rng, p[k], slices[k]));
        let [r1, r2] = fierz_residuals(&l, p);
        let pat = parity_label(&p);
        rec.zero(&format!("fierz:1:{pat}"), "l1-bar g3 l2 l3-bar g l4 = l1-bar g l3 l2-bar g3 l4 + l1-bar g l4 l2-bar g3 l3 (graded)", "fierz", &r1);
        rec.zero(&format!("fierz:2:{pat}"), "l1-bar g3 l2 l3-bar g l4 = -l1-bar g3 l3 l2-bar g l4 - l1-bar g3 l4 l2-bar g l3 (graded)", "fierz", &r2);
    }
    let lambda = majorana_sample(rng, false, &[]);
    let chi = majorana_sample(rng, false, &[]);
    let psi = majorana_sample(rng, true, slices[0]);
    let anchors = [
        "lambda-bar g3 chi chi-bar g psi = 0",
        "chi-bar g chi lambda-bar g3 psi = 0",
        "lambda-bar g chi chi-bar g3 psi = 0",
    ];
    for (k, r) in fierz_lemma_residuals(&lambda, &psi, &chi).iter().enumerate() {
        rec.zero(&format!("fierz:lemma:{}", k + 1), anchors[k], "fierz_lemma", r);
    }
    Ok(())
}

/// Graded calculus identities on a sampled configuration.
pub(super) fn fiber_identities(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams, index: usize) -> CaseResult {
    if index == 0 {
        for a in 0..4 {
            for n in 1..=4 {
                rec.zero(
                    &format!("v_gamma:{a}:{n}"),
                    "[v_a, g^N] = N [v_a, g] g^(N-1) + N(N-1) v_a g^(N-2)",
                    "gamma",
                    &v_gamma_power_residual(a, n),
                );
            }
        }
    }
    let cfg = sample_config(rng, &params.plan(&FieldName::ALL));
    let bg = Background::new(&cfg)?;
    let (e, w, xi) = (&cfg.e, &cfg.omega, &cfg.xi);

    for (label, a, b) in [("e_omega", e, w), ("e_c", e, &cfg.c), ("c_c", &cfg.c, &cfg.c), ("check_dag", &cfg.omega_check, &cfg.e_dag)] {
        rec.zero(&format!("koszul:{label}"), "a b = (-1)^(|a||b|) b a", label, &koszul_residual(a, b));
    }
    let dco = delta_chi_omega(&bg)?;
    let ixi_dco = xi.interior(&dco);
    for (label, chi, psi, alpha) in [
        ("chi_psi_dw", &cfg.chi, &cfg.psi, &dco),
        ("chi_psi0_dw", &cfg.chi, &cfg.psi0_dag, &dco),
        ("chi0_chi_ixi_dw", &cfg.chi0_dag, &cfg.chi, &ixi_dco),
        ("chi0_psi_ixi_dw", &cfg.chi0_dag, &cfg.psi, &ixi_dco),
    ] {
        rec.zero(
            &format!("omega_action:{label}"),
            "chi-bar g3 [a, psi] = 3 chi-bar g psi a + 1/2 chi-bar [a, g3]_V psi for even a",
            label,
            &omega_action_residual(chi, psi, alpha),
        );
    }
    rec.zero(
        "psi_bar_gamma",
        "-(1/3!) e psi-bar g3 [dw, psi] = -1/2 e psi-bar g psi dw",
        "delta_chi_omega",
        &psi_bar_gamma_residual(&bg, &dco),
    );
    rec.zero("bianchi:e", "d_w d_w X = [F_w, X]", "e", &bianchi_residual(w, e));
    rec.zero("bianchi:psi", "d_w d_w X = [F_w, X]", "psi", &bianchi_residual(w, &cfg.psi));
    rec.zero("cartan:e", "[L_xi, d_w] X = [i_xi F_w, X]", "e", &cartan_residual(xi, w, e));
    rec.zero("cartan:psi", "[L_xi, d_w] X = [i_xi F_w, X]", "psi", &cartan_residual(xi, w, &cfg.psi));
    rec.zero("xi_bracket:e", "1/2 i_[xi,xi] = -1/2 i_xi i_xi d_w + i_xi d_w i_xi - 1/2 d_w i_xi i_xi", "e", &xi_bracket_residual(xi, w, e));
    let dpsi = cov_d(w, &cfg.psi);
    rec.zero("e_pair", "[e, <e, sigma>] = 2 sigma", "d_omega_psi", &e_pair_residual(&bg, &dpsi));
    rec.zero("phi", "i_phi e = chi-bar g chi", "phi", &phi_residual(&bg));
    rec.zero("omega_gamma", "[w, g] = 0", "omega", &omega_gamma(w));
    rec.zero(
        "iota_gamma_hat",
        "i_ghat = sum gamma^a e^mu_a i_mu",
        "d_omega_psi",
        &residual(&iota_gamma_hat(&bg, &dpsi), &iota_gamma_hat_oracle(&bg, &dpsi)),
    );
    rec.zero("bracket:c_e", "[c, e] by eta contraction", "c", &residual(&eta_bracket(&cfg.c, e), &bracket_oracle(&cfg.c, e)));
    Ok(())
}
