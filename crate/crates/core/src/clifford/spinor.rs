//! Spinor conjugation and the Majorana condition.

use crate::fiber::{Field, SpinKind};

use super::gamma::{charge_conjugation, charge_conjugation_inverse, majorana_b};

/// Majorana conjugate `λ̄ = λᵗ C`, applied to the spin index only.
pub fn bar(x: &Field) -> Field {
    assert!(
        x.kind() == SpinKind::Column || x.is_zero(),
        "bar expects a column spinor, got {:?}",
        x.kind()
    );
    if x.is_zero() {
        return Field::zero(SpinKind::Row).with_order(x.order());
    }
    &x.transpose() * &Field::matrix(charge_conjugation())
}

/// Inverse of [`bar`].
pub fn unbar(x: &Field) -> Field {
    assert!(x.kind() == SpinKind::Row || x.is_zero(), "unbar expects a row spinor");
    if x.is_zero() {
        return Field::zero(SpinKind::Column).with_order(x.order());
    }
    (x * &Field::matrix(charge_conjugation_inverse())).transpose()
}

/// Residual of `λ* = Bλ` on every component, where `*` is the superalgebra
/// star (reverse generator order, conjugate `i`).
pub fn majorana_residual(x: &Field) -> Field {
    let starred = x.map_coefficients(|k, c| {
        let deg = crate::fiber::gmask(k).count_ones();
        let c = c.conj();
        if (deg * deg.saturating_sub(1) / 2) % 2 == 1 {
            -c
        } else {
            c
        }
    });
    starred.sub(&(&Field::matrix(&majorana_b()) * x))
}

pub fn is_majorana(x: &Field) -> bool {
    majorana_residual(x).is_zero()
}
