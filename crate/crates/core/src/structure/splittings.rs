//! Spinor splittings `θ = i e γ̲ α(θ) + β(θ)` on `Ω^{(3,1)}` and
//! `θ = e κ(θ) + ϰ(θ)` on `Ω^{(2,1)}`.

use crate::clifford::gamma::gamma_power;
use crate::clifford::spinor::{bar, unbar};
use crate::fiber::{Field, SpinKind};
use crate::fields::Background;
use crate::scalars::GaussianRational as Q;

use super::{body_of, solve_even, Shape, StructureError};

const COL: SpinKind = SpinKind::Column;

/// `α(θ) = (iγ³eγ̲)⁻¹(γ³θ)` for a column spinor `θ ∈ Ω^{(3,1)}`.
pub fn alpha(bg: &Background, theta: &Field) -> Result<Field, StructureError> {
    let g3 = gamma_power(3);
    let m = (&(&g3 * &bg.cfg.e) * &bg.gbar).scale(&Q::i());
    let mb = body_of(&m);
    let rhs = &g3 * theta;
    solve_even(|x| &m * x, |x| &mb * x, Shape::new(1, 0, COL), Shape::new(3, 4, COL), &rhs)
}

/// `β(θ) = θ − i e γ̲ α(θ)`.
pub fn beta(bg: &Background, theta: &Field) -> Result<Field, StructureError> {
    let a = alpha(bg, theta)?;
    Ok(theta.sub(&(&(&bg.cfg.e * &bg.gbar) * &a).scale(&Q::i())))
}

/// `κ(θ) = (γ̲γ³e)⁻¹(γ̲γ³θ)` for a column spinor `θ ∈ Ω^{(2,1)}`.
pub fn kappa(bg: &Background, theta: &Field) -> Result<Field, StructureError> {
    let gg = &bg.gbar * &gamma_power(3);
    let m = &gg * &bg.cfg.e;
    let mb = body_of(&m);
    let rhs = &gg * theta;
    solve_even(|x| &m * x, |x| &mb * x, Shape::new(1, 0, COL), Shape::new(3, 4, COL), &rhs)
}

/// `ϰ(θ) = θ − e κ(θ)`.
pub fn varkappa(bg: &Background, theta: &Field) -> Result<Field, StructureError> {
    let k = kappa(bg, theta)?;
    Ok(theta.sub(&(&bg.cfg.e * &k)))
}

/// Applies a column-spinor map to a row spinor through conjugation.
pub fn on_row(
    f: impl Fn(&Background, &Field) -> Result<Field, StructureError>,
    bg: &Background,
    row: &Field,
) -> Result<Field, StructureError> {
    Ok(bar(&f(bg, &unbar(row))?))
}

/// Dispatches on the spin kind: columns directly, rows through conjugation.
pub fn alpha_any(bg: &Background, theta: &Field) -> Result<Field, StructureError> {
    match theta.kind() {
        SpinKind::Row => on_row(alpha, bg, theta),
        _ => alpha(bg, theta),
    }
}

pub fn kappa_any(bg: &Background, theta: &Field) -> Result<Field, StructureError> {
    match theta.kind() {
        SpinKind::Row => on_row(kappa, bg, theta),
        _ => kappa(bg, theta),
    }
}

/// Dimension count certifying uniqueness of a splitting on the body fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitDimensions {
    pub fiber: usize,
    /// Rank of the embedding of the `(1,0)` part.
    pub image: usize,
    /// Dimension of the kernel of the defining condition.
    pub kernel: usize,
    /// Rank of the condition restricted to the image.
    pub restricted: usize,
}

impl SplitDimensions {
    /// Image and kernel span the fiber and meet only in zero.
    pub fn unique(&self) -> bool {
        self.image == 16 && self.image + self.kernel == self.fiber && self.restricted == self.image
    }
}

fn split_dimensions(
    embed: impl Fn(&Field) -> Field,
    cond: impl Fn(&Field) -> Field,
    fiber: Shape,
) -> Result<SplitDimensions, StructureError> {
    let src = Shape::new(1, 0, COL);
    let target = Shape::new(3, 4, COL);
    let e_m = super::matrix_of(&embed, src, fiber)?;
    let c_m = super::matrix_of(&cond, fiber, target)?;
    let r_m = super::matrix_of(|x| cond(&embed(x)), src, target)?;
    Ok(SplitDimensions {
        fiber: fiber.dim(),
        image: e_m.rank(),
        kernel: fiber.dim() - c_m.rank(),
        restricted: r_m.rank(),
    })
}

/// Dimensions for `θ = i e γ̲ α + β`, `γ³β = 0` on `Ω^{(3,1)}`.
pub fn alpha_beta_dimensions(bg: &Background) -> Result<SplitDimensions, StructureError> {
    let eg = body_of(&(&bg.cfg.e * &bg.gbar).scale(&Q::i()));
    let g3 = gamma_power(3);
    split_dimensions(|x| &eg * x, |x| &g3 * x, Shape::new(3, 1, COL))
}

/// Dimensions for `θ = e κ + ϰ`, `γ̲γ³ϰ = 0` on `Ω^{(2,1)}`.
pub fn kappa_dimensions(bg: &Background) -> Result<SplitDimensions, StructureError> {
    let e = body_of(&bg.cfg.e);
    let gg = body_of(&(&bg.gbar * &gamma_power(3)));
    split_dimensions(|x| &e * x, |x| &gg * x, Shape::new(2, 1, COL))
}
