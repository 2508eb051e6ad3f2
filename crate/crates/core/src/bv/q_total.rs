//! The full vector field `Q = Q₀ + 𝕢` (with the `𝕝` correction on `c`) and
//! the `ε`-shift evaluation of `Q²`.

use serde::{Deserialize, Serialize};

use crate::fiber::{Field, SpinKind, VectorField};
use crate::fields::{Background, Config, FieldName};
use crate::scalars::GaussianRational as Q;
use crate::structure::{w_inverse, Shape};

use super::q0::{q0_fields, shift, QValues};
use super::q0_antifields::q0_on_stored_antifields;
use super::qq::{qq_from_terms, qq_terms, PsiVariant};
use super::{polynomial_coefficients, BvError};

/// Coefficient of `ι_ξ𝕝` in `Q_c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LCorrection {
    Off,
    Half,
    #[default]
    Full,
}

impl LCorrection {
    pub fn coefficient(self) -> Q {
        match self {
            LCorrection::Off => Q::zero(),
            LCorrection::Half => Q::ratio(1, 2),
            LCorrection::Full => Q::one(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QOptions {
    pub psi_variant: PsiVariant,
    pub l_correction: LCorrection,
    /// Line of `s₂` (1–7) whose terms are removed from `𝕢`.
    pub drop_line: Option<u8>,
    /// Drops `𝕢` altogether, leaving `Q₀`.
    pub without_qq: bool,
}

impl QOptions {
    pub fn q0_only() -> Self {
        QOptions { without_qq: true, l_correction: LCorrection::Off, ..Default::default() }
    }
}

/// `Q` on the six fields.
pub fn q_fields(bg: &Background, opts: &QOptions) -> Result<QValues, BvError> {
    Ok(q_fields_and_qq_e(bg, opts)?.0)
}

fn q_fields_and_qq_e(bg: &Background, opts: &QOptions) -> Result<(QValues, Field), BvError> {
    let mut q = q0_fields(bg)?;
    if opts.without_qq {
        return Ok((q, Field::zero(SpinKind::Scalar)));
    }
    let terms = qq_terms(bg, opts.psi_variant)?;
    let qq = qq_from_terms(bg, &terms, opts.drop_line)?;
    q.e = q.e.add(&qq.e);
    q.omega = q.omega.add(&qq.omega);
    q.psi = q.psi.add(&qq.psi);
    q.c = q.c.add(&qq.c);
    let lc = opts.l_correction.coefficient();
    if !lc.is_zero() {
        let l = w_inverse(&bg.cfg.e, 1, Shape::new(1, 2, SpinKind::Scalar), &terms.e_l)?;
        q.c = q.c.add(&bg.cfg.xi.interior(&l).scale(&lc));
    }
    Ok((q, qq.e))
}

/// `Q` on fields and stored antifields. On the antifields only the `Q₀` part
/// and `𝕢` on `ǒ`, `č` (from `𝕢(eǒ) = 𝕢((e²/2)č) = 0`) are known.
pub fn q_total(cfg: &Config, opts: &QOptions) -> Result<QValues, BvError> {
    let bg = Background::new(cfg)?;
    let (fields, qq_e) = q_fields_and_qq_e(&bg, opts)?;
    let mut anti = q0_on_stored_antifields(&bg, &fields.e)?;
    if !opts.without_qq {
        let rhs = (&qq_e * &cfg.omega_check).neg();
        let qo = w_inverse(&cfg.e, 1, Shape::new(2, 1, SpinKind::Scalar), &rhs)?;
        anti.omega_check = anti.omega_check.add(&qo);
        let rhs = (&(&cfg.e * &qq_e) * &cfg.c_check).neg();
        let qc = w_inverse(&cfg.e, 2, Shape::new(2, 0, SpinKind::Scalar), &rhs)?;
        anti.c_check = anti.c_check.add(&qc);
    }
    let mut q = fields;
    q.e_dag = anti.e_dag;
    q.omega_check = anti.omega_check;
    q.psi0_dag = anti.psi0_dag;
    q.c_check = anti.c_check;
    q.xi_dag = anti.xi_dag;
    q.chi0_dag = anti.chi0_dag;
    Ok(q)
}

fn uses_epsilon(cfg: &Config) -> bool {
    cfg.parts().iter().any(|(_, f)| f.terms().iter().any(|(k, _)| k & 1 == 1))
}

/// `Q²` on the fields: the `ε`-linear part of `Q_Φ(config + ε Q(config))`.
pub fn q_squared(cfg: &Config, opts: &QOptions) -> Result<QValues, BvError> {
    if uses_epsilon(cfg) {
        return Err(BvError::EpsilonCollision);
    }
    if cfg.jet_order() < 2 {
        return Err(BvError::InsufficientJetOrder { needed: 2, have: cfg.jet_order() });
    }
    let q = q_total(cfg, opts)?;
    let shifted = shift(cfg, &q);
    let sbg = Background::new(&shifted)?;
    let mut out = q_fields(&sbg, opts)?.epsilon_linear_part();
    out.xi.parity = q.xi.parity ^ 1;
    Ok(out)
}

/// Interpolates every field entry of values sampled at `t = 0, 1, …`.
fn interpolate(values: &[QValues]) -> Vec<QValues> {
    let configs: Vec<Config> = values.iter().map(|v| v.as_config()).collect();
    let mut out = vec![configs[0].clone(); values.len()];
    for name in FieldName::ALL {
        let n = configs[0].get(name).len();
        let coeffs: Vec<Vec<Field>> = (0..n)
            .map(|j| {
                let column: Vec<Field> = configs.iter().map(|c| c.get(name)[j].clone()).collect();
                polynomial_coefficients(&column)
            })
            .collect();
        for (k, o) in out.iter_mut().enumerate() {
            o.set(name, coeffs.iter().map(|c| c[k].clone()).collect());
        }
    }
    out.into_iter()
        .map(|c| {
            let mut q = QValues::from_config(c);
            q.xi = VectorField::new(q.xi.comps, values[0].xi.parity);
            q
        })
        .collect()
}

/// `Q²` on the fields split by antifield degree: entry `k` is the coefficient
/// of `t^k` when every antifield is scaled by `t`, from `points` samples.
pub fn q_squared_sectors(cfg: &Config, opts: &QOptions, points: usize) -> Result<Vec<QValues>, BvError> {
    let samples = (0..points)
        .map(|t| q_squared(&cfg.scale_antifields(&Q::from_int(t as i64)), opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(interpolate(&samples))
}
