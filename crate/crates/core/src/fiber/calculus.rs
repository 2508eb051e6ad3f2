//! Differential operators, interior products and the Lorentz action.

use super::field::{
    dxmask, gmask, pack, spin_index, vmask, x_degree, x_exp, xcode, Accum, Field, SpinKind, EXACT,
};
use crate::clifford::gamma::{gamma_upper, mat_mul, ETA};
use crate::scalars::GaussianRational as Q;

#[inline]
fn bits_below(mask: u8, i: usize) -> u32 {
    (mask & ((1u8 << i) - 1)).count_ones()
}

#[inline]
fn bits_above(mask: u8, i: usize) -> u32 {
    (mask >> (i + 1)).count_ones()
}

fn lowered(order: u8) -> u8 {
    match order {
        EXACT => EXACT,
        0 => panic!("insufficient jet order for a derivative"),
        k => k - 1,
    }
}

impl Field {
    /// Exterior derivative, an odd derivation acting from the left.
    pub fn d(&self) -> Field {
        let order = lowered(self.order());
        let mut acc = Accum::default();
        for (k, c) in self.terms() {
            let x = xcode(*k);
            if x == 0 {
                continue;
            }
            let dx = dxmask(*k);
            let odd_coeff = gmask(*k).count_ones() & 1 == 1;
            for mu in 0..4 {
                let e = x_exp(x, mu);
                if e == 0 || dx >> mu & 1 == 1 {
                    continue;
                }
                let neg = odd_coeff ^ (bits_below(dx, mu) & 1 == 1);
                let x2 = x - (1 << (2 * mu));
                if order != EXACT && x_degree(x2) > order {
                    continue;
                }
                let key = pack(gmask(*k), x2, dx | 1 << mu, vmask(*k), spin_index(*k));
                let v = c * &Q::from_int(e as i64);
                super::field::accumulate(&mut acc, key, if neg { -v } else { v });
            }
        }
        Field::from_accum(self.kind(), order, acc)
    }

    /// Contraction with the coordinate vector field `∂_mu` (odd, from the left).
    pub fn interior(&self, mu: usize) -> Field {
        let terms = self.terms().iter().filter_map(|(k, c)| {
            let dx = dxmask(*k);
            if dx >> mu & 1 == 0 {
                return None;
            }
            let neg = (gmask(*k).count_ones() + bits_below(dx, mu)) & 1 == 1;
            let key = pack(gmask(*k), xcode(*k), dx & !(1 << mu), vmask(*k), spin_index(*k));
            Some((key, if neg { -c } else { c.clone() }))
        });
        Field::from_terms(self.kind(), self.order(), terms)
    }

    /// Left derivative `∂⃗/∂v_a`.
    pub fn v_left(&self, a: usize) -> Field {
        let terms = self.terms().iter().filter_map(|(k, c)| {
            let v = vmask(*k);
            if v >> a & 1 == 0 {
                return None;
            }
            let dx = dxmask(*k);
            let neg = (gmask(*k).count_ones() + dx.count_ones() + bits_below(v, a)) & 1 == 1;
            let key = pack(gmask(*k), xcode(*k), dx, v & !(1 << a), spin_index(*k));
            Some((key, if neg { -c } else { c.clone() }))
        });
        Field::from_terms(self.kind(), self.order(), terms)
    }

    /// Right derivative `∂⃖/∂v_a`.
    pub fn v_right(&self, a: usize) -> Field {
        let terms = self.terms().iter().filter_map(|(k, c)| {
            let v = vmask(*k);
            if v >> a & 1 == 0 {
                return None;
            }
            let neg = bits_above(v, a) & 1 == 1;
            let key = pack(gmask(*k), xcode(*k), dxmask(*k), v & !(1 << a), spin_index(*k));
            Some((key, if neg { -c } else { c.clone() }))
        });
        Field::from_terms(self.kind(), self.order(), terms)
    }

    /// Metric contraction `ι_{v_a}` with `ι_{v_a} v_b = η_ab`.
    pub fn v_contract(&self, a: usize) -> Field {
        self.v_left(a).scale_int(ETA[a])
    }

    /// Coordinate derivative of every coefficient (even operator).
    pub fn partials(&self) -> [Field; 4] {
        std::array::from_fn(|mu| self.partial(mu))
    }
}

/// Bracket on multivector content induced by `η`, extended as a graded
/// biderivation: `[A, B] = Σ_a η_aa (A ∂⃖_a)(∂⃗_a B)`.
pub fn eta_bracket(a: &Field, b: &Field) -> Field {
    let parts: Vec<Field> = (0..4)
        .map(|i| a.v_right(i).mul(&b.v_left(i)).scale_int(ETA[i]))
        .filter(|f| !f.is_zero())
        .collect();
    if parts.is_empty() {
        return Field::zero(super::field::product_kind(a.kind(), b.kind())).with_order(a.order().min(b.order()));
    }
    Field::sum(parts[0].kind(), &parts).with_order(a.order().min(b.order()))
}

/// Spin part of the action of a `Λ²V`-valued field on a spinorial object.
fn spin_action(alpha: &Field, x: &Field) -> Field {
    if x.kind() == SpinKind::Scalar {
        return Field::zero(SpinKind::Scalar).with_order(alpha.order().min(x.order()));
    }
    let mut parts = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let g = alpha.v_contract(b).v_contract(a);
            if g.is_zero() {
                continue;
            }
            let m = Field::matrix(&mat_mul(gamma_upper(a), gamma_upper(b)));
            let rho = match x.kind() {
                SpinKind::Column => &m * x,
                SpinKind::Row => -(x * &m),
                SpinKind::Matrix => &(&m * x) - &(x * &m),
                SpinKind::Scalar => unreachable!(),
            };
            // ¼ Σ_{a,b} G_ab ρ(γ^{ab}) = ½ Σ_{a<b} G_ab ρ(γ^a γ^b)
            parts.push((&g * &rho).scale_ratio(1, 2));
        }
    }
    Field::sum(x.kind(), &parts).with_order(alpha.order().min(x.order()))
}

/// Lorentz action `[α, X]` of a `Λ²V`-valued `α`: bracket on the multivector
/// content plus the spin representation on spinor indices.
pub fn rep_action(alpha: &Field, x: &Field) -> Field {
    assert!(
        alpha.bidegrees().iter().all(|&(_, j)| j == 2),
        "representation action requires a Λ²V-valued field"
    );
    let v = eta_bracket(alpha, x);
    let s = spin_action(alpha, x);
    v.add(&s)
}

/// Covariant exterior derivative `d_ω X = dX + [ω, X]`.
pub fn cov_d(omega: &Field, x: &Field) -> Field {
    x.d().add(&rep_action(omega, x))
}

/// Curvature `F = dω + ½[ω, ω]`.
pub fn curvature(omega: &Field) -> Field {
    omega.d().add(&eta_bracket(omega, omega).scale_ratio(1, 2))
}

/// Vector field `X^μ ∂_μ` with algebra-valued (possibly matrix-valued) components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub comps: [Field; 4],
    /// Parity of the components.
    pub parity: u32,
}

impl VectorField {
    pub fn new(comps: [Field; 4], parity: u32) -> Self {
        Self { comps, parity }
    }

    pub fn zero(parity: u32) -> Self {
        Self { comps: std::array::from_fn(|_| Field::zero(SpinKind::Scalar)), parity }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.parity, other.parity, "adding vector fields of different parity");
        Self { comps: std::array::from_fn(|m| self.comps[m].add(&other.comps[m])), parity: self.parity }
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self { comps: std::array::from_fn(|m| self.comps[m].scale(s)), parity: self.parity }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn epsilon_linear_part(&self) -> Self {
        Self { comps: std::array::from_fn(|m| self.comps[m].epsilon_linear_part()), parity: self.parity ^ 1 }
    }

    /// Interior product `ι_X σ = Σ_μ X^μ ι_{∂_μ} σ`.
    pub fn interior(&self, sigma: &Field) -> Field {
        let parts: Vec<Field> = (0..4)
            .filter(|&m| !self.comps[m].is_zero())
            .map(|m| &self.comps[m] * &sigma.interior(m))
            .collect();
        let kind = super::field::product_kind(self.comps[0].kind(), sigma.kind());
        let order = self.comps.iter().map(|c| c.order()).min().unwrap().min(sigma.order());
        Field::sum(kind, &parts).with_order(order)
    }

    /// `Σ_ν X^ν A_ν` for a covector-valued `A`.
    pub fn interior_components(&self, a: &[Field; 4]) -> Field {
        let parts: Vec<Field> = (0..4).map(|m| &self.comps[m] * &a[m]).collect();
        Field::sum(super::field::product_kind(self.comps[0].kind(), a[0].kind()), &parts)
    }

    /// Directional derivative `X^ν ∂_ν f`.
    pub fn apply(&self, f: &Field) -> Field {
        let parts: Vec<Field> = (0..4)
            .filter(|&m| !self.comps[m].is_zero())
            .map(|m| &self.comps[m] * &f.partial(m))
            .collect();
        let order = self.comps.iter().map(|c| c.order()).min().unwrap().min(lowered(f.order()));
        Field::sum(super::field::product_kind(self.comps[0].kind(), f.kind()), &parts).with_order(order)
    }

    /// Graded Lie bracket `[X, Y]^μ = X^ν∂_νY^μ − (−1)^{|X||Y|} Y^ν∂_νX^μ`.
    pub fn bracket(&self, other: &Self) -> Self {
        let sign = if self.parity & other.parity == 1 { Q::one() } else { -Q::one() };
        let comps = std::array::from_fn(|mu| {
            let a = self.apply(&other.comps[mu]);
            let b = other.apply(&self.comps[mu]);
            a.add(&b.scale(&sign))
        });
        Self { comps, parity: self.parity ^ other.parity }
    }
}

/// Covariant Lie derivative `L^ω_X = [ι_X, d_ω]` (graded commutator).
pub fn lie(x: &VectorField, omega: &Field, sigma: &Field) -> Field {
    let a = x.interior(&cov_d(omega, sigma));
    let b = cov_d(omega, &x.interior(sigma));
    // ι_X has parity |X| + 1
    if x.parity == 1 {
        a.sub(&b)
    } else {
        a.add(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::gamma::gamma_field;

    #[test]
    fn d_squares_to_zero() {
        let x = Field::coordinate(0).with_order(3);
        let y = Field::coordinate(2).with_order(3);
        let f = &(&(&x * &y) * &Field::theta(1)) * &Field::v(1);
        assert!(!f.d().is_zero());
        assert!(f.d().d().is_zero());
    }

    #[test]
    fn interior_of_dx() {
        assert_eq!(Field::dx(2).interior(2), Field::one());
        let w = Field::dx(1) * Field::dx(2);
        assert_eq!(w.interior(2), -Field::dx(1));
    }

    #[test]
    fn bracket_of_basis_vectors_is_metric() {
        for a in 0..4 {
            for b in 0..4 {
                let expected = if a == b { Field::constant(Q::from_int(ETA[a])) } else { Field::zero(SpinKind::Scalar) };
                assert_eq!(eta_bracket(&Field::v(a), &Field::v(b)), expected);
            }
        }
    }

    #[test]
    fn lorentz_action_preserves_gamma() {
        let alpha = Field::v(0) * Field::v(1) + Field::v(2) * Field::v(3).scale_int(3) + Field::v(1) * Field::v(3);
        assert!(rep_action(&alpha, gamma_field()).is_zero());
    }
}
