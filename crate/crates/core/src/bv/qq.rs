//! The quadratic part `s₂` of the action, its Hamiltonian vector field `𝕢` on
//! the fields, and the correction `𝕝`.
//!
//! Every term of `𝕢` is tagged with the line of `s₂` it descends from, so that
//! single lines can be removed.

use serde::{Deserialize, Serialize};

use crate::clifford::gamma::{gamma_field, gamma_power};
use crate::clifford::spinor::bar;
use crate::fiber::{eta_bracket, Field, SpinKind};
use crate::fields::Background;
use crate::scalars::GaussianRational as Q;
use crate::structure::splittings::{alpha, alpha_any, kappa};
use crate::structure::{w_inverse, Shape};

use super::BvError;

/// Reading of the bracket in the `κ` and `ι_γ̂ι_γ̂` terms of `𝕢_ψ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiVariant {
    /// `[ǒ − ½ι_ξč e − ι_ξe č, γ]ψ`.
    #[default]
    Section4,
    /// `[ǒ − (i/2)ι_ξč e + ι_ξe č, γ]ψ`.
    #[serde(alias = "appendixB")]
    AppendixB,
}

impl std::str::FromStr for PsiVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "section4" => Ok(PsiVariant::Section4),
            "appendixB" | "appendix_b" => Ok(PsiVariant::AppendixB),
            _ => Err(format!("unknown q_psi variant `{s}` (expected section4 or appendixB)")),
        }
    }
}

/// `𝕢` on the fields. `ω` and `c` are stored solved and projected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qq {
    pub e: Field,
    pub omega: Field,
    pub e_omega: Field,
    pub psi: Field,
    pub c: Field,
    pub e2_c: Field,
}

/// Terms tagged with their `s₂` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lines {
    pub kind: SpinKind,
    pub terms: Vec<(u8, Field)>,
}

impl Lines {
    fn new(kind: SpinKind) -> Self {
        Lines { kind, terms: Vec::new() }
    }

    fn add(&mut self, line: u8, f: Field) {
        self.terms.push((line, f));
    }

    /// Sum of all terms not on line `drop`.
    pub fn total(&self, drop: Option<u8>) -> Field {
        let parts = self.terms.iter().filter(|(l, _)| Some(*l) != drop).map(|(_, f)| f);
        Field::sum(self.kind, parts)
    }
}

/// Tagged terms of `𝕢_e`, `e𝕢_ω`, `𝕢_ψ`, `(e²/2)𝕢_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QqTerms {
    pub e: Lines,
    pub e_omega: Lines,
    pub psi: Lines,
    pub e2_c: Lines,
    /// `e𝕝`, not part of any line.
    pub e_l: Field,
}

fn iq(n: i64, d: i64) -> Q {
    Q::i() * Q::ratio(n, d)
}

/// `χ̄ κ(⟨e, X⟩)`.
fn kt(bg: &Background, x: &Field) -> Result<Field, BvError> {
    Ok(&bg.chi_bar * &kappa(bg, &bg.angle(x))?)
}

/// `χ̄ ι_γ̂ ι_γ̂ X`.
fn hh(bg: &Background, x: &Field) -> Field {
    let g = &bg.ghat;
    &bg.chi_bar * &g.interior(&g.interior(x))
}

/// Shared building blocks of `s₂`, `𝕢` and `𝕝`.
struct Blocks<'a> {
    bg: &'a Background,
    g3: Field,
    ixe: Field,
    ixc: Field,
    /// `ψ̄γ³χ`.
    pgc: Field,
    /// `γ̲²ψ⁰†`.
    x_psi0: Field,
    /// `[ǒ, γ]ψ`.
    x_o: Field,
    alpha_o: Field,
    alpha_c: Field,
    kt_psi0: Field,
    kt_o: Field,
    kt_xc: Field,
    hh_psi0: Field,
    hh_o: Field,
    hh_xc: Field,
}

impl<'a> Blocks<'a> {
    fn new(bg: &'a Background) -> Result<Self, BvError> {
        let cfg = &bg.cfg;
        let g3 = gamma_power(3);
        let ixe = cfg.xi.interior(&cfg.e);
        let ixc = cfg.xi.interior(&cfg.c_check);
        let pgc = &(&bg.psi_bar * &g3) * &cfg.chi;
        let x_psi0 = &(&bg.gbar * &bg.gbar) * &cfg.psi0_dag;
        let x_o = &eta_bracket(&cfg.omega_check, gamma_field()) * &cfg.psi;
        let x_c1 = &(&bg.gbar * &ixc) * &cfg.psi;
        let x_c2 = &(&cfg.xi.interior(&bg.gbar) * &cfg.c_check) * &cfg.psi;
        let alpha_o = alpha(bg, &(&cfg.omega_check * &cfg.psi))?;
        let alpha_c = alpha(bg, &(&(&cfg.c_check * &ixe) * &cfg.psi))?;
        // ½γ̲ι_ξčψ + ι_ξγ̲ čψ
        let xc = x_c1.scale_ratio(1, 2).add(&x_c2);
        let kt_psi0 = kt(bg, &x_psi0)?;
        let kt_o = kt(bg, &x_o)?;
        let kt_xc = kt(bg, &xc)?;
        let hh_psi0 = hh(bg, &x_psi0);
        let hh_o = hh(bg, &x_o);
        let hh_xc = hh(bg, &xc);
        Ok(Blocks {
            bg,
            g3,
            ixe,
            ixc,
            pgc,
            x_psi0,
            x_o,
            alpha_o,
            alpha_c,
            kt_psi0,
            kt_o,
            kt_xc,
            hh_psi0,
            hh_o,
            hh_xc,
        })
    }

    /// `[A, γ]ψ` for the `č`-dependent part `A` of the `𝕢_ψ` bracket.
    fn x_c_psi(&self, variant: PsiVariant) -> Field {
        let cfg = &self.bg.cfg;
        let ce = &self.ixc * &cfg.e;
        let ec = &self.ixe * &cfg.c_check;
        let a = match variant {
            PsiVariant::Section4 => ce.scale_ratio(-1, 2).sub(&ec),
            PsiVariant::AppendixB => ce.scale(&iq(-1, 2)).add(&ec),
        };
        &eta_bracket(&a, gamma_field()) * &cfg.psi
    }
}

/// `𝕢_e = ½ι_φǒ − ½ι_φč ι_ξe − ¼ι_φ(e ι_ξč)`.
fn qq_e(b: &Blocks) -> Lines {
    let cfg = &b.bg.cfg;
    let phi = &b.bg.phi;
    let mut l = Lines::new(SpinKind::Scalar);
    l.add(1, phi.interior(&cfg.omega_check).scale_ratio(1, 2));
    l.add(1, (&phi.interior(&cfg.c_check) * &b.ixe).scale_ratio(-1, 2));
    l.add(1, phi.interior(&(&cfg.e * &b.ixc)).scale_ratio(-1, 4));
    l
}

/// `e𝕢_ω` as displayed.
fn qq_e_omega(b: &Blocks) -> Result<Lines, BvError> {
    let bg = b.bg;
    let cfg = &bg.cfg;
    let phi = &bg.phi;
    let pg3 = &bg.psi_bar * &b.g3;
    let mut l = Lines::new(SpinKind::Scalar);
    l.add(1, phi.interior(&cfg.e_dag).scale_ratio(1, 2));
    let psi0_gb = &bar(&cfg.psi0_dag) * &bg.gbar;
    l.add(2, (&(&phi.interior(&psi0_gb) * &b.g3) * &cfg.psi).scale(&iq(1, 24)));
    l.add(3, (&pg3 * &phi.interior(&(&bg.gbar * &b.alpha_o))).scale(&iq(1, 24)));
    l.add(3, (&phi.interior(&cfg.c_check) * &(&(&bg.chi_bar * &b.g3) * &cfg.psi)).scale_ratio(-1, 48));
    l.add(3, (&b.ixc * &(&pg3 * &phi.interior(&cfg.psi))).scale_ratio(-1, 48));
    l.add(3, (&pg3 * &phi.interior(&(&bg.gbar * &b.alpha_c))).scale(&iq(-1, 24)));

    let k = Q::ratio(1, 12);
    l.add(5, (&b.pgc * &b.kt_psi0).scale(&(iq(-1, 2) * k.clone())));
    l.add(4, (&b.pgc * &b.kt_o).scale(&-k.clone()));
    l.add(4, (&b.pgc * &b.kt_xc).scale(&-k));

    let h = Q::ratio(1, 96);
    l.add(7, (&b.pgc * &b.hh_psi0).scale(&(iq(-1, 2) * h.clone())));
    l.add(6, (&b.pgc * &b.hh_o).scale(&-h.clone()));
    l.add(6, (&b.pgc * &b.hh_xc).scale(&-h));
    Ok(l)
}

/// `𝕢_ψ` as displayed, with the bracket read through `variant`.
fn qq_psi(b: &Blocks, variant: PsiVariant) -> Result<Lines, BvError> {
    let bg = b.bg;
    let cfg = &bg.cfg;
    let phi = &bg.phi;
    let mut l = Lines::new(SpinKind::Column);
    l.add(2, phi.interior(&(&bg.gbar * &cfg.psi0_dag)).scale(&iq(1, 4)));
    l.add(2, phi.interior(&(&bg.gbar * &b.alpha_o)).scale(&iq(-1, 4)));
    l.add(2, phi.interior(&(&bg.gbar * &b.alpha_c)).scale(&iq(-1, 4)));
    l.add(2, (&phi.interior(&cfg.c_check) * &cfg.chi).scale_ratio(1, 8));
    l.add(2, phi.interior(&(&b.ixc * &cfg.psi)).scale_ratio(-1, 8));

    let xc = b.x_c_psi(variant);
    let k = iq(1, 4);
    l.add(5, (&cfg.chi * &b.kt_psi0).scale(&k));
    l.add(4, (&cfg.chi * &b.kt_o).scale(&(k.clone() * Q::i())));
    l.add(4, (&cfg.chi * &kt(bg, &xc)?).scale(&(k * Q::i())));

    let h = Q::ratio(1, 16);
    l.add(7, (&cfg.chi * &b.hh_psi0).scale(&h));
    l.add(6, (&cfg.chi * &b.hh_o).scale(&(h.clone() * Q::i())));
    l.add(6, (&cfg.chi * &hh(bg, &xc)).scale(&(h * Q::i())));
    Ok(l)
}

/// `(e²/2)𝕢_c` as displayed.
fn qq_e2_c(b: &Blocks) -> Result<Lines, BvError> {
    let bg = b.bg;
    let cfg = &bg.cfg;
    let phi = &bg.phi;
    let xi = &cfg.xi;
    let psi_dag = bg.psi_dag();
    let ip_psi_dag = phi.interior(&psi_dag);
    let ip_e_dag = phi.interior(&cfg.e_dag);
    let g3_ixe_psi = &(&b.g3 * &b.ixe) * &cfg.psi;
    let mut l = Lines::new(SpinKind::Scalar);
    l.add(2, (&bg.chi_bar * &ip_psi_dag).scale(&iq(-1, 8)));
    l.add(3, phi.interior(&(&(&(&cfg.omega_check * &bg.chi_bar) * &b.g3) * &cfg.psi)).scale(&iq(-1, 48)));
    l.add(1, (&b.ixe * &ip_e_dag).scale_ratio(-1, 2));
    l.add(1, xi.interior(&(&cfg.e * &ip_e_dag)).scale_ratio(1, 4));
    let psi0_gb = &bar(&cfg.psi0_dag) * &bg.gbar;
    l.add(2, (&phi.interior(&psi0_gb) * &g3_ixe_psi).scale(&iq(-1, 24)));
    let alpha_row = alpha_any(bg, &(&cfg.omega_check * &bg.psi_bar))?;
    l.add(3, (&phi.interior(&(&alpha_row * &bg.gbar)) * &g3_ixe_psi).scale(&iq(1, 24)));
    l.add(2, xi.interior(&(&bg.psi_bar * &ip_psi_dag)).scale(&iq(-1, 8)));
    l.add(3, xi.interior(&(&(&(&cfg.omega_check * &bg.psi_bar) * &b.g3) * &phi.interior(&cfg.psi))).scale_ratio(-1, 48));

    // X = [ǒ,γ]ψ + iγ̲²ψ⁰†, split by line.
    let i = Q::i();
    for (line, x, k) in [(4u8, b.x_o.clone(), b.kt_o.clone()), (5u8, b.x_psi0.scale(&i), b.kt_psi0.scale(&i))] {
        let ang = bg.angle(&(&bg.chi_bar * &x));
        l.add(line, xi.interior(&(&b.pgc * &ang)).scale_ratio(1, 24));
        l.add(line, (&(&b.ixe * &b.pgc) * &k).scale_ratio(-1, 12));
    }
    for (line, h) in [(6u8, b.hh_o.clone()), (7u8, b.hh_psi0.scale(&i))] {
        let ph = &b.pgc * &h;
        l.add(line, (&b.ixe * &ph).scale_ratio(1, 192));
        l.add(line, (&cfg.e * &xi.interior(&ph)).scale_ratio(-1, 192));
    }
    Ok(l)
}

/// All displayed terms of `𝕢`, tagged by line.
pub fn qq_terms(bg: &Background, variant: PsiVariant) -> Result<QqTerms, BvError> {
    let b = Blocks::new(bg)?;
    Ok(QqTerms {
        e: qq_e(&b),
        e_omega: qq_e_omega(&b)?,
        psi: qq_psi(&b, variant)?,
        e2_c: qq_e2_c(&b)?,
        e_l: e_l_from(&b),
    })
}

/// `𝕢` on the six fields (`𝕢_χ = 𝕢_ξ = 0`), with line `drop` of `s₂` removed.
pub fn qq_apply(bg: &Background, variant: PsiVariant, drop: Option<u8>) -> Result<Qq, BvError> {
    qq_from_terms(bg, &qq_terms(bg, variant)?, drop)
}

/// Sums tagged terms into `𝕢`, solving for `ω` and `c`.
pub fn qq_from_terms(bg: &Background, t: &QqTerms, drop: Option<u8>) -> Result<Qq, BvError> {
    let e = &bg.cfg.e;
    let e_omega = t.e_omega.total(drop);
    let e2_c = t.e2_c.total(drop);
    Ok(Qq {
        e: t.e.total(drop),
        omega: w_inverse(e, 1, Shape::new(1, 2, SpinKind::Scalar), &e_omega)?,
        e_omega,
        psi: t.psi.total(drop),
        c: w_inverse(e, 2, Shape::new(0, 2, SpinKind::Scalar), &e2_c)?,
        e2_c,
    })
}

/// `e𝕝(č, ξ, χ, ψ)` as displayed with the theorem.
pub fn e_l_display(bg: &Background) -> Result<Field, BvError> {
    Ok(e_l_from(&Blocks::new(bg)?))
}

fn e_l_from(b: &Blocks) -> Field {
    let bg = b.bg;
    let cfg = &bg.cfg;
    let phi = &bg.phi;
    let pg3 = &bg.psi_bar * &b.g3;
    Field::sum(
        SpinKind::Scalar,
        &[
            (&b.ixc * &(&pg3 * &phi.interior(&cfg.psi))).scale_ratio(-1, 48),
            (&pg3 * &phi.interior(&(&bg.gbar * &b.alpha_c))).scale(&iq(-1, 24)),
            (&b.pgc * &b.kt_xc).scale_ratio(-1, 12),
            (&b.pgc * &b.hh_xc).scale_ratio(-1, 96),
        ],
    )
}

/// `𝕝`, solved from its `e`-projection.
pub fn l_correction(bg: &Background) -> Result<Field, BvError> {
    Ok(w_inverse(&bg.cfg.e, 1, Shape::new(1, 2, SpinKind::Scalar), &e_l_display(bg)?)?)
}

/// The seven lines of the `s₂` integrand.
pub fn s2_lines(bg: &Background) -> Result<[Field; 7], BvError> {
    let b = Blocks::new(bg)?;
    let cfg = &bg.cfg;
    let phi = &bg.phi;
    let gb = &bg.gbar;
    let (ocheck, ccheck) = (&cfg.omega_check, &cfg.c_check);
    let psi0_gb = &bar(&cfg.psi0_dag) * gb;
    let a_o_row = &alpha_any(bg, &(ocheck * &bg.psi_bar))? * gb;
    let a_c_row = &alpha_any(bg, &(&(ccheck * &b.ixe) * &bg.psi_bar))? * gb;
    let ic_pb = &b.ixc * &bg.psi_bar;
    let c_cb = ccheck * &bg.chi_bar;
    let row = |parts: &[(Q, &Field)]| {
        let v: Vec<Field> = parts.iter().map(|(q, f)| f.scale(q)).collect();
        Field::sum(SpinKind::Row, &v)
    };
    let (one, half, quarter) = (Q::one(), Q::ratio(1, 2), Q::ratio(1, 4));
    let mi2 = iq(-1, 2);

    let l1 = (&(ocheck.sub(&(&cfg.e * &b.ixc).scale_ratio(1, 2)).sub(&(ccheck * &b.ixe)))
        * &phi.interior(&cfg.e_dag))
        .scale_ratio(1, 2);

    let p2 = row(&[(half.clone(), &psi0_gb), (one.clone(), &a_o_row), (mi2.clone(), &ic_pb), (-one.clone(), &a_c_row), (mi2.clone(), &c_cb)]);
    let l2 = (&p2 * &phi.interior(&bg.psi_dag())).scale(&quarter);

    let p3 = row(&[(half.clone(), &a_o_row), (mi2.clone(), &ic_pb), (-one.clone(), &a_c_row), (mi2.clone(), &c_cb)]);
    let l3 = (&(&p3 * &b.g3) * &phi.interior(&(ocheck * &cfg.psi))).scale(&iq(1, 24));

    let p4 = row(&[(half.clone(), &psi0_gb), (half.clone(), &a_o_row), (mi2.clone(), &ic_pb), (-one.clone(), &a_c_row)]);
    let l4 = (&(&(&p4 * &b.g3) * &cfg.chi) * &bg.angle(&(&bg.chi_bar * &b.x_o))).scale(&iq(-1, 12));

    let p5 = row(&[(quarter, &psi0_gb), (mi2, &ic_pb), (-one, &a_c_row)]);
    let l5 = (&(&(&p5 * &b.g3) * &cfg.chi) * &bg.angle(&(&bg.chi_bar * &b.x_psi0))).scale_ratio(1, 12);

    let psid_chi = (&bar(&bg.psi_dag()) * &cfg.chi).scale(&Q::i());
    let ce = &cfg.e * &b.ixc;
    let ec = (ccheck * &b.ixe).scale_int(2);
    let f6 = psid_chi.add(&(&ocheck.sub(&ce).sub(&ec) * &b.pgc).scale_ratio(1, 6));
    let l6 = (&f6 * &b.hh_o).scale_ratio(-1, 32);
    let f7 = psid_chi.add(&(&ce.add(&ec) * &b.pgc).scale_ratio(1, 6));
    let l7 = (&f7 * &b.hh_psi0).scale(&iq(-1, 32));
    Ok([l1, l2, l3, l4, l5, l6, l7])
}

/// The `s₂` integrand.
pub fn s2_density(bg: &Background) -> Result<Field, BvError> {
    Ok(Field::sum(SpinKind::Scalar, &s2_lines(bg)?))
}
