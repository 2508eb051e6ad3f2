//! Linear maps between bidegree components and their exact inversion over
//! the jet–Grassmann coefficient ring.

use crate::fiber::{dxmask, pack, slot, spin_index, vmask, Accum, Field, SpinKind, EXACT};
use crate::fields::masks;
use crate::linalg::Matrix;
use crate::scalars::GaussianRational as Q;

use super::StructureError;

/// A bidegree component `Ω^{(form, multi)}` with a spin kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub form: u32,
    pub multi: u32,
    pub kind: SpinKind,
}

impl Shape {
    pub const fn new(form: u32, multi: u32, kind: SpinKind) -> Self {
        Self { form, multi, kind }
    }

    /// Basis slots `(dx mask, v mask, spin index)` in lexicographic order.
    pub fn slots(&self) -> Vec<(u8, u8, u8)> {
        let spins: Vec<u8> = match self.kind {
            SpinKind::Scalar => vec![0],
            SpinKind::Column | SpinKind::Row => (0..4).collect(),
            SpinKind::Matrix => (0..16).collect(),
        };
        let mut out = Vec::new();
        for dx in masks(4, self.form) {
            for v in masks(4, self.multi) {
                for &s in &spins {
                    out.push((dx, v, s));
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.slots().len()
    }

    pub fn unit(&self, (dx, v, s): (u8, u8, u8)) -> Field {
        Field::from_terms(self.kind, EXACT, [(pack(0, 0, dx, v, s), Q::one())])
    }

    pub fn contains(&self, f: &Field) -> bool {
        (f.is_zero() || f.kind() == self.kind)
            && f.terms().iter().all(|(k, _)| {
                dxmask(*k).count_ones() == self.form && vmask(*k).count_ones() == self.multi
            })
    }
}

/// Matrix of a map applied to the unit basis of `domain`, read in `codomain`.
pub fn matrix_of(map: impl Fn(&Field) -> Field, domain: Shape, codomain: Shape) -> Result<Matrix, StructureError> {
    let cod_slots = codomain.slots();
    let mut cols = Vec::new();
    for sl in domain.slots() {
        let img = map(&domain.unit(sl));
        if !codomain.contains(&img) {
            return Err(StructureError::IncompatibleDegree(format!(
                "image of {:?} leaves {:?}",
                sl, codomain
            )));
        }
        let col = cod_slots
            .iter()
            .map(|&(dx, v, s)| img.coefficient(pack(0, 0, dx, v, s)))
            .collect();
        cols.push(col);
    }
    Ok(Matrix::from_columns(&cols))
}

/// Applies a constant slot matrix (rows: `to` slots, columns: `from` slots)
/// coefficientwise.
pub fn apply_slot_matrix(m: &Matrix, from: Shape, to: Shape, y: &Field) -> Result<Field, StructureError> {
    let from_slots = from.slots();
    let to_slots = to.slots();
    let index = |s: u16| -> Option<usize> {
        let key = ((s & 0xf) as u8, ((s >> 4) & 0xf) as u8, (s >> 8) as u8);
        from_slots.binary_search(&key).ok().or_else(|| from_slots.iter().position(|x| *x == key))
    };
    let mut acc = Accum::default();
    for (k, c) in y.terms() {
        let Some(j) = index(slot(*k)) else {
            return Err(StructureError::IncompatibleDegree(format!(
                "term outside {:?}: dx={:04b} v={:04b} s={}",
                from,
                dxmask(*k),
                vmask(*k),
                spin_index(*k)
            )));
        };
        let rest = k & 0xff_ffff_ffff;
        for (i, &(dx, v, s)) in to_slots.iter().enumerate() {
            let a = &m[(i, j)];
            if a.is_zero() {
                continue;
            }
            crate::fiber::accumulate(&mut acc, rest | pack(0, 0, dx, v, s), a * c);
        }
    }
    Ok(Field::from_accum(to.kind, y.order(), acc))
}

/// Solves `L(X) = Y` for an even map `L` that is an isomorphism on bodies,
/// by `X ← X + L₀⁻¹(Y − L(X))`. The iteration terminates because the
/// residual lives in the nilpotent ideal (positive x-degree or Grassmann soul).
pub fn solve_even(
    full: impl Fn(&Field) -> Field,
    body: impl Fn(&Field) -> Field,
    domain: Shape,
    codomain: Shape,
    y: &Field,
) -> Result<Field, StructureError> {
    let m0 = matrix_of(&body, domain, codomain)?;
    let inv = m0.inverse().ok_or(StructureError::NotInvertible(format!("{:?} -> {:?}", domain, codomain)))?;
    solve_with_inverse(&inv, full, domain, codomain, y)
}

pub fn solve_with_inverse(
    inv: &Matrix,
    full: impl Fn(&Field) -> Field,
    domain: Shape,
    codomain: Shape,
    y: &Field,
) -> Result<Field, StructureError> {
    if !codomain.contains(y) {
        return Err(StructureError::IncompatibleDegree(format!("right-hand side not in {:?}", codomain)));
    }
    let mut x = apply_slot_matrix(inv, codomain, domain, y)?;
    for _ in 0..64 {
        let r = y.sub(&full(&x)).with_order(y.order());
        if r.is_zero() {
            return Ok(x.with_order(y.order()));
        }
        x = x.add(&apply_slot_matrix(inv, codomain, domain, &r)?);
    }
    Err(StructureError::NoConvergence)
}

/// The body part of a field: x-degree zero and no Grassmann generators, as an
/// exact constant.
pub fn body_of(f: &Field) -> Field {
    f.filter(|k| k & 0xff_ffff_ffff == 0).with_order(EXACT)
}
