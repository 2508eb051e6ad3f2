//! The quadratic sector, the master equation and its negative controls.

use rand_chacha::ChaCha8Rng;

use crate::bv::q0::{shift, QValues};
use crate::bv::q0_antifields::off_degree;
use crate::bv::q_total::{q_fields, q_squared, q_squared_sectors, q_total, LCorrection, QOptions};
use crate::bv::qq::{e_l_display, l_correction, qq_apply, s2_density};
use crate::fiber::Field;
use crate::fields::{sample_config, Background, Config, FieldName};
use crate::report::Recorder;
use crate::scalars::GaussianRational as Q;

use super::{residual, CaseParams, CaseResult};

/// The rank-2 part `𝕢 = Q − Q₀` on fields and on `ǒ`, `č`.
fn qq_values(cfg: &Config, opts: &QOptions) -> Result<QValues, crate::bv::BvError> {
    let full = q_total(cfg, opts)?;
    let base = q_total(cfg, &QOptions::q0_only())?;
    let mut q = QValues::zero();
    q.e = full.e.sub(&base.e);
    q.omega = full.omega.sub(&base.omega);
    q.psi = full.psi.sub(&base.psi);
    q.c = full.c.sub(&base.c);
    q.xi = full.xi.add(&base.xi.scale(&-Q::one()));
    q.chi = full.chi.sub(&base.chi);
    q.omega_check = full.omega_check.sub(&base.omega_check);
    q.c_check = full.c_check.sub(&base.c_check);
    Ok(q)
}

/// Field values of `Q²` in the form they are checked: `ω` and `c` through
/// their `e`- and `(e²/2)`-projections.
fn projected(bg: &Background, q: &QValues) -> Vec<(String, Field)> {
    let mut out = vec![
        ("e".to_string(), q.e.clone()),
        ("psi".to_string(), q.psi.clone()),
        ("e_omega".to_string(), &bg.cfg.e * &q.omega),
        ("e2_c".to_string(), &bg.e_pow[2] * &q.c),
    ];
    out.extend(q.xi.comps.iter().enumerate().map(|(mu, f)| (format!("xi_{mu}"), f.clone())));
    out.push(("chi".to_string(), q.chi.clone()));
    out
}

fn first_nonzero(values: &[(String, Field)]) -> (String, Field) {
    values
        .iter()
        .find(|(_, f)| !f.is_zero())
        .cloned()
        .unwrap_or_else(|| ("none".to_string(), values[0].1.clone()))
}

pub(super) fn quadratic(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&FieldName::ALL));
    let bg = Background::new(&cfg)?;
    let opts = params.q_options();
    let qq = qq_values(&cfg, &opts)?;
    rec.zero("qq:chi", "qq chi = 0", "chi", &qq.chi);
    for (mu, f) in qq.xi.comps.iter().enumerate() {
        rec.zero(&format!("qq:xi:{mu}"), "qq xi = 0", "xi", f);
    }

    let shifted = shift(&cfg, &qq);
    let sbg = Background::new(&shifted)?;
    for (mu, f) in sbg.phi.comps.iter().enumerate() {
        rec.zero(&format!("qq:phi:{mu}"), "qq(phi) = 0", "phi", &f.epsilon_linear_part());
    }
    let qq_e = qq_apply(&sbg, opts.psi_variant, None)?.e;
    rec.zero("qq:square_e", "qq^2 e = 0", "e", &qq_e.epsilon_linear_part());

    let s2 = s2_density(&bg)?;
    rec.zero("s2:bidegree", "s2 has bidegree (4,4)", "s2", &off_degree(&s2, (4, 4)));
    let s2_chi = s2_density(&Background::new(&cfg.without(&[FieldName::Chi]))?)?;
    rec.zero("s2:chi_zero", "s2 vanishes at chi = 0", "s2", &s2_chi);
    let s2_zero = s2_density(&Background::new(&cfg.scale_antifields(&Q::zero()))?)?;
    rec.zero("s2:antifields_zero", "s2 vanishes at zero antifields", "s2", &s2_zero);
    let s2_two = s2_density(&Background::new(&cfg.scale_antifields(&Q::from_int(2)))?)?;
    rec.zero("s2:quadratic", "s2 is quadratic in the antifields", "s2", &residual(&s2_two, &s2.scale_int(4)));

    let l = l_correction(&bg)?;
    rec.zero("l:solve", "e l equals its display", "l", &residual(&(&cfg.e * &l), &e_l_display(&bg)?));
    let l_c = l_correction(&Background::new(&cfg.without(&[FieldName::CCheck]))?)?;
    rec.zero("l:c_check_zero", "l vanishes at c_check = 0", "l", &l_c);
    let l_xi = l_correction(&Background::new(&cfg.without(&[FieldName::Xi]))?)?;
    rec.zero("l:xi_zero", "l vanishes at xi = 0", "l", &l_xi);
    Ok(())
}

fn record_sector(rec: &mut Recorder, bg: &Background, k: usize, q: &QValues) {
    for (name, f) in projected(bg, q) {
        let id = format!("cme:t{k}:{name}");
        let anchor = format!("Q^2 {name} = 0 at antifield degree {k}");
        let covered = k != 2 || !matches!(name.as_str(), "psi" | "e_omega" | "e2_c");
        if covered {
            rec.zero(&id, &anchor, &name, &f);
        } else {
            rec.skipped(&id, &anchor);
        }
    }
}

/// `Q² = 0` on the fields, split by antifield degree.
pub(super) fn cme(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&FieldName::ALL));
    let bg = Background::new(&cfg)?;
    let opts = params.q_options();
    for (k, q) in q_squared_sectors(&cfg, &opts, 4)?.iter().enumerate() {
        record_sector(rec, &bg, k, q);
    }

    let pure = cfg.without(&[FieldName::Psi, FieldName::Chi]);
    let pbg = Background::new(&pure)?;
    for (name, f) in projected(&pbg, &q_squared(&pure, &opts)?) {
        rec.zero(&format!("cme:pure_gravity:{name}"), &format!("Q_PC^2 {name} = 0"), &name, &f);
    }

    let with = |l| QOptions { l_correction: l, ..opts };
    let on = q_fields(&bg, &with(LCorrection::Full))?;
    let off = q_fields(&bg, &with(LCorrection::Off))?;
    let il = cfg.xi.interior(&l_correction(&bg)?);
    rec.zero("cme:l_term", "Q_c(with l) - Q_c(without l) = i_xi l", "c", &residual(&on.c.sub(&off.c), &il));
    Ok(())
}

/// Removing the `𝕝` correction or any single line of `s₂` must leave a
/// nonzero `Q²`, and must change it.
pub(super) fn negative_controls(rec: &mut Recorder, rng: &mut ChaCha8Rng, params: &CaseParams) -> CaseResult {
    let cfg = sample_config(rng, &params.plan(&FieldName::ALL));
    let bg = Background::new(&cfg)?;
    let reference = QOptions { l_correction: LCorrection::Full, ..params.q_options() };
    let base = projected(&bg, &q_squared(&cfg, &reference)?);
    let mut variants = vec![("l_off".to_string(), QOptions { l_correction: LCorrection::Off, ..reference })];
    variants.extend((1..=7).map(|k| (format!("line{k}"), QOptions { drop_line: Some(k), ..reference })));
    for (label, opts) in variants {
        let q = projected(&bg, &q_squared(&cfg, &opts)?);
        let (field, w) = first_nonzero(&q);
        rec.nonzero(&format!("negctl:{label}:witness"), &format!("Q^2 != 0 with {label}"), &field, &w);
        let diff: Vec<(String, Field)> = q.iter().zip(&base).map(|((n, a), (_, b))| (n.clone(), residual(a, b))).collect();
        let (field, d) = first_nonzero(&diff);
        rec.nonzero(&format!("negctl:{label}:changes"), &format!("Q^2 with {label} differs from Q^2"), &field, &d);
    }
    Ok(())
}
