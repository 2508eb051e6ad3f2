//! Form–multivector–spinor valued jets.
//!
//! A [`Field`] is a finite sum of terms `c · x^m θ_G · dx^I · v^A · S`, where `x^m`
//! is a Taylor monomial at the origin, `θ_G` a Grassmann monomial, `dx^I` and
//! `v^A` sorted wedge monomials and `S` a spin entry (scalar, column, row or
//! matrix component). Everything lives in one supercommutative algebra graded by
//! total parity `|G| + |I| + |A|`; spin entries are even.
//!
//! Term keys pack into a `u64`:
//! bits 0..32 Grassmann mask, 32..40 x-exponents (2 bits per coordinate),
//! 40..44 form mask, 44..48 multivector mask, 48..52 spin index.

use std::collections::hash_map::Entry;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::scalars::{mask_to_list, merge_sign, GaussianRational as Q, Parity};

pub const EXACT: u8 = u8::MAX;
pub const MAX_JET_ORDER: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinKind {
    Scalar,
    Column,
    Row,
    Matrix,
}

#[inline]
pub fn gmask(k: u64) -> u32 {
    k as u32
}
#[inline]
pub fn xcode(k: u64) -> u8 {
    (k >> 32) as u8
}
#[inline]
pub fn dxmask(k: u64) -> u8 {
    ((k >> 40) & 0xf) as u8
}
#[inline]
pub fn vmask(k: u64) -> u8 {
    ((k >> 44) & 0xf) as u8
}
#[inline]
pub fn spin_index(k: u64) -> u8 {
    ((k >> 48) & 0xf) as u8
}
#[inline]
pub fn slot(k: u64) -> u16 {
    (k >> 40) as u16
}
#[inline]
pub fn pack(g: u32, x: u8, dx: u8, v: u8, s: u8) -> u64 {
    g as u64 | (x as u64) << 32 | (dx as u64) << 40 | (v as u64) << 44 | (s as u64) << 48
}
#[inline]
fn with_slot(k: u64, slot: u16) -> u64 {
    (k & 0xff_ffff_ffff) | (slot as u64) << 40
}

/// Exponent of coordinate `mu` in an x-code.
#[inline]
pub fn x_exp(code: u8, mu: usize) -> u8 {
    (code >> (2 * mu)) & 3
}

#[inline]
pub fn x_degree(code: u8) -> u8 {
    (0..4).map(|mu| x_exp(code, mu)).sum()
}

/// All x-codes of total degree `<= order`, in increasing code order.
pub fn x_codes(order: u8) -> Vec<u8> {
    (0u16..256).map(|c| c as u8).filter(|&c| x_degree(c) <= order).collect()
}

pub fn x_code_from(exps: [u8; 4]) -> u8 {
    exps.iter().enumerate().map(|(mu, &e)| e << (2 * mu)).sum()
}

#[inline]
fn parity_bit(k: u64) -> u32 {
    (gmask(k).count_ones() + dxmask(k).count_ones() + vmask(k).count_ones()) & 1
}

/// Sparse field value. Terms are sorted by key and carry no zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    kind: SpinKind,
    order: u8,
    terms: Vec<(u64, Q)>,
}

pub(crate) type Accum = FxHashMap<u64, Q>;

#[inline]
pub(crate) fn accumulate(acc: &mut Accum, key: u64, c: Q) {
    match acc.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl Field {
    pub fn zero(kind: SpinKind) -> Self {
        Self { kind, order: EXACT, terms: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_terms(SpinKind::Scalar, EXACT, [(0u64, c)])
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn dx(mu: usize) -> Self {
        Self::from_terms(SpinKind::Scalar, EXACT, [(pack(0, 0, 1 << mu, 0, 0), Q::one())])
    }

    pub fn v(a: usize) -> Self {
        Self::from_terms(SpinKind::Scalar, EXACT, [(pack(0, 0, 0, 1 << a, 0), Q::one())])
    }

    /// Odd Grassmann generator as a scalar field.
    pub fn theta(i: usize) -> Self {
        Self::from_terms(SpinKind::Scalar, EXACT, [(1u64 << i, Q::one())])
    }

    /// Coordinate function `x^mu` (exact, degree one).
    pub fn coordinate(mu: usize) -> Self {
        let mut e = [0u8; 4];
        e[mu] = 1;
        Self::from_terms(SpinKind::Scalar, EXACT, [(pack(0, x_code_from(e), 0, 0, 0), Q::one())])
    }

    /// Constant 4×4 matrix.
    pub fn matrix(m: &[[Q; 4]; 4]) -> Self {
        let mut t = Vec::new();
        for (a, row) in m.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                t.push((pack(0, 0, 0, 0, (4 * a + b) as u8), c.clone()));
            }
        }
        Self::from_terms(SpinKind::Matrix, EXACT, t)
    }

    pub fn identity_matrix() -> Self {
        Self::from_terms(
            SpinKind::Matrix,
            EXACT,
            (0..4).map(|a| (pack(0, 0, 0, 0, (5 * a) as u8), Q::one())),
        )
    }

    /// Unit column/row basis vector.
    pub fn spin_unit(kind: SpinKind, alpha: usize) -> Self {
        Self::from_terms(kind, EXACT, [(pack(0, 0, 0, 0, alpha as u8), Q::one())])
    }

    pub fn from_terms(kind: SpinKind, order: u8, terms: impl IntoIterator<Item = (u64, Q)>) -> Self {
        let mut acc: Accum = FxHashMap::default();
        for (k, c) in terms {
            if order != EXACT && x_degree(xcode(k)) > order {
                continue;
            }
            accumulate(&mut acc, k, c);
        }
        Self::from_accum(kind, order, acc)
    }

    pub(crate) fn from_accum(kind: SpinKind, order: u8, acc: Accum) -> Self {
        let mut terms: Vec<(u64, Q)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Self { kind, order, terms }
    }

    /// Builds from already sorted, zero-free terms.
    pub(crate) fn from_sorted(kind: SpinKind, order: u8, terms: Vec<(u64, Q)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        Self { kind, order, terms }
    }

    pub fn kind(&self) -> SpinKind {
        self.kind
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn terms(&self) -> &[(u64, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reinterprets the jet order; terms above it are dropped.
    pub fn with_order(mut self, order: u8) -> Self {
        if order < self.order {
            self.order = order;
            self.terms.retain(|t| x_degree(xcode(t.0)) <= order);
        } else {
            self.order = order;
        }
        self
    }

    pub fn truncate(&self, order: u8) -> Self {
        self.clone().with_order(order.min(self.order))
    }

    /// Value at the origin (jet order 0).
    pub fn at_origin(&self) -> Self {
        self.truncate(0)
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for (k, _) in &self.terms {
            if parity_bit(*k) == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Total parity as a bit; panics on mixed parity.
    pub fn parity_bit(&self) -> u32 {
        match self.parity() {
            Parity::Even => 0,
            Parity::Odd => 1,
            Parity::Mixed => panic!("field of mixed parity where a homogeneous one was expected"),
        }
    }

    /// Set of `(form degree, multivector degree)` bidegrees present.
    pub fn bidegrees(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .terms
            .iter()
            .map(|(k, _)| (dxmask(*k).count_ones(), vmask(*k).count_ones()))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Projection on the `(i, j)` bidegree component.
    pub fn component(&self, i: u32, j: u32) -> Self {
        self.filter(|k| dxmask(k).count_ones() == i && vmask(k).count_ones() == j)
    }

    pub fn filter(&self, pred: impl Fn(u64) -> bool) -> Self {
        Self {
            kind: self.kind,
            order: self.order,
            terms: self.terms.iter().filter(|t| pred(t.0)).cloned().collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(u64, &Q) -> Q) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, f(*k, c)))
            .filter(|t| !t.1.is_zero())
            .collect();
        Self { kind: self.kind, order: self.order, terms }
    }

    /// Coefficient of an exact key.
    pub fn coefficient(&self, key: u64) -> Q {
        match self.terms.binary_search_by_key(&key, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    /// The part of this field sitting at a given slot, as a scalar-kind field
    /// whose keys have the slot bits cleared.
    pub fn slot_coefficient(&self, dx: u8, v: u8, s: u8) -> Self {
        let sl = (dx as u16) | (v as u16) << 4 | (s as u16) << 8;
        let terms = self
            .terms
            .iter()
            .filter(|t| slot(t.0) == sl)
            .map(|(k, c)| (with_slot(*k, 0), c.clone()))
            .collect();
        Self::from_sorted(SpinKind::Scalar, self.order, terms)
    }

    /// Places a scalar-kind, slot-free field at the given slot.
    pub fn place(coeff: &Field, kind: SpinKind, dx: u8, v: u8, s: u8) -> Self {
        debug_assert_eq!(coeff.kind, SpinKind::Scalar);
        let sl = (dx as u16) | (v as u16) << 4 | (s as u16) << 8;
        let terms: Vec<(u64, Q)> = coeff
            .terms
            .iter()
            .map(|(k, c)| {
                debug_assert_eq!(slot(*k), 0);
                (with_slot(*k, sl), c.clone())
            })
            .collect();
        Self::from_sorted(kind, coeff.order, terms)
    }

    fn unify_kind(&self, other: &Self) -> SpinKind {
        if self.terms.is_empty() {
            other.kind
        } else if other.terms.is_empty() || self.kind == other.kind {
            self.kind
        } else {
            panic!("adding fields of spin kinds {:?} and {:?}", self.kind, other.kind)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let kind = self.unify_kind(other);
        let order = self.order.min(other.order);
        let keep = |k: u64| order == EXACT || x_degree(xcode(k)) <= order;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                if keep(a[i].0) {
                    out.push(a[i].clone());
                }
                i += 1;
            } else if take_b {
                if keep(b[j].0) {
                    out.push(b[j].clone());
                }
                j += 1;
            } else {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() && keep(a[i].0) {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { kind, order, terms: out }
    }

    pub fn neg(&self) -> Self {
        Self { kind: self.kind, order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self { kind: self.kind, order: self.order, terms: Vec::new() };
        }
        Self { kind: self.kind, order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Q::from_int(n))
    }

    pub fn scale_ratio(&self, n: i64, d: i64) -> Self {
        self.scale(&Q::ratio(n, d))
    }

    /// Sum of a sequence of fields of the same kind.
    pub fn sum<'a>(kind: SpinKind, items: impl IntoIterator<Item = &'a Field>) -> Self {
        let mut order = EXACT;
        let mut acc: Accum = FxHashMap::default();
        let mut kind_seen = kind;
        for f in items {
            if !f.terms.is_empty() {
                kind_seen = f.kind;
            }
            order = order.min(f.order);
            for (k, c) in &f.terms {
                accumulate(&mut acc, *k, c.clone());
            }
        }
        if order != EXACT {
            acc.retain(|k, _| x_degree(xcode(*k)) <= order);
        }
        Self::from_accum(kind_seen, order, acc)
    }

    /// Parity automorphism: negates terms of odd total parity.
    pub fn twist(&self) -> Self {
        self.map_coefficients(|k, c| if parity_bit(k) == 1 { -c } else { c.clone() })
    }

    /// Supercommutative product with spin-index contraction.
    pub fn mul(&self, other: &Self) -> Self {
        let kind = product_kind(self.kind, other.kind);
        let order = self.order.min(other.order);
        let mut acc: Accum = FxHashMap::default();
        let ra = runs(&self.terms);
        let rb = runs(&other.terms);
        for &(sa, a0, a1) in &ra {
            for &(sb, b0, b1) in &rb {
                let Some((out_slot, slot_neg)) = combine_slots(self.kind, sa, other.kind, sb) else {
                    continue;
                };
                // coefficient of b passes dx^I v^A of a
                let twist = ((sa & 0xf).count_ones() + ((sa >> 4) & 0xf).count_ones()) & 1 == 1;
                for (ka, ca) in &self.terms[a0..a1] {
                    let ga = gmask(*ka);
                    let xa = xcode(*ka);
                    let da = x_degree(xa);
                    for (kb, cb) in &other.terms[b0..b1] {
                        let gb = gmask(*kb);
                        let Some(gneg) = merge_sign(ga, gb) else { continue };
                        let xb = xcode(*kb);
                        if order != EXACT && da + x_degree(xb) > order {
                            continue;
                        }
                        let neg = slot_neg ^ gneg ^ (twist && gb.count_ones() & 1 == 1);
                        let c = ca * cb;
                        let key = pack(ga | gb, xa + xb, 0, 0, 0) | (out_slot as u64) << 40;
                        accumulate(&mut acc, key, if neg { -c } else { c });
                    }
                }
            }
        }
        Self::from_accum(kind, order, acc)
    }

    /// Spin transpose: column ↔ row, matrix transposed. Algebra content unchanged.
    pub fn transpose(&self) -> Self {
        let kind = match self.kind {
            SpinKind::Column => SpinKind::Row,
            SpinKind::Row => SpinKind::Column,
            k => k,
        };
        let terms = self.terms.iter().map(|(k, c)| {
            let s = spin_index(*k);
            let s2 = if self.kind == SpinKind::Matrix { (s % 4) * 4 + s / 4 } else { s };
            ((k & !(0xf << 48)) | (s2 as u64) << 48, c.clone())
        });
        Self::from_terms(kind, self.order, terms)
    }

    /// Complex conjugation of coefficients (Grassmann generators untouched).
    pub fn conj_coefficients(&self) -> Self {
        self.map_coefficients(|_, c| c.conj())
    }

    /// Removes `ε` (generator 0) from terms that contain it; drops the rest.
    pub fn epsilon_linear_part(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0 & 1 == 1)
            .map(|(k, c)| (k & !1, c.clone()))
            .collect();
        Self::from_sorted(self.kind, self.order, terms)
    }

    /// Terms not containing `ε`.
    pub fn epsilon_free_part(&self) -> Self {
        self.filter(|k| k & 1 == 0)
    }

    /// Coordinate derivative `∂_mu` (even; acts on Taylor coefficients only).
    pub fn partial(&self, mu: usize) -> Self {
        assert!(self.order > 0, "insufficient jet order for a derivative");
        let order = if self.order == EXACT { EXACT } else { self.order - 1 };
        let mut terms = Vec::new();
        for (k, c) in &self.terms {
            let x = xcode(*k);
            let e = x_exp(x, mu);
            if e == 0 {
                continue;
            }
            let x2 = x - (1 << (2 * mu));
            let key = (k & !(0xffu64 << 32)) | (x2 as u64) << 32;
            terms.push((key, c * &Q::from_int(e as i64)));
        }
        Self::from_terms(self.kind, order, terms)
    }

    /// Highest Grassmann generator used plus one.
    pub fn generator_span(&self) -> usize {
        self.terms.iter().map(|t| 32 - gmask(t.0).leading_zeros() as usize).max().unwrap_or(0)
    }

    /// Bitwise union of all Grassmann masks.
    pub fn generator_support(&self) -> u32 {
        self.terms.iter().fold(0, |m, t| m | gmask(t.0))
    }

    /// Largest Grassmann degree among terms.
    pub fn max_grassmann_degree(&self) -> u32 {
        self.terms.iter().map(|t| gmask(t.0).count_ones()).max().unwrap_or(0)
    }
}

fn runs(terms: &[(u64, Q)]) -> Vec<(u16, usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=terms.len() {
        if i == terms.len() || slot(terms[i].0) != slot(terms[start].0) {
            if start < terms.len() {
                out.push((slot(terms[start].0), start, i));
            }
            start = i;
        }
    }
    out
}

pub fn product_kind(a: SpinKind, b: SpinKind) -> SpinKind {
    use SpinKind::*;
    match (a, b) {
        (Scalar, k) | (k, Scalar) => k,
        (Row, Column) => Scalar,
        (Matrix, Column) => Column,
        (Row, Matrix) => Row,
        (Matrix, Matrix) => Matrix,
        (Column, Row) => Matrix,
        _ => panic!("spin index mismatch in product {:?} × {:?}", a, b),
    }
}

/// Output slot and sign for multiplying the basis parts of two terms.
#[inline]
fn combine_slots(ka: SpinKind, sa: u16, kb: SpinKind, sb: u16) -> Option<(u16, bool)> {
    use SpinKind::*;
    let (ia, aa, pa) = ((sa & 0xf) as u32, ((sa >> 4) & 0xf) as u32, (sa >> 8) as u32);
    let (ib, ab, pb) = ((sb & 0xf) as u32, ((sb >> 4) & 0xf) as u32, (sb >> 8) as u32);
    let ineg = merge_sign(ia, ib)?;
    let aneg = merge_sign(aa, ab)?;
    // v^A dx^J = (-1)^{|A||J|} dx^J v^A
    let cross = (aa.count_ones() * ib.count_ones()) & 1 == 1;
    let p = match (ka, kb) {
        (Scalar, _) => pb,
        (_, Scalar) => pa,
        (Row, Column) => {
            if pa != pb {
                return None;
            }
            0
        }
        (Matrix, Column) => {
            if pa % 4 != pb {
                return None;
            }
            pa / 4
        }
        (Row, Matrix) => {
            if pa != pb / 4 {
                return None;
            }
            pb % 4
        }
        (Matrix, Matrix) => {
            if pa % 4 != pb / 4 {
                return None;
            }
            (pa / 4) * 4 + pb % 4
        }
        (Column, Row) => pa * 4 + pb,
        _ => unreachable!(),
    };
    Some(((ia | ib) as u16 | ((aa | ab) as u16) << 4 | (p as u16) << 8, ineg ^ aneg ^ cross))
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text rendering, one term per `+`-separated chunk.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            let g = gmask(*k);
            if g != 0 {
                write!(f, "θ{}", mask_to_list(g))?;
            }
            let x = xcode(*k);
            for mu in 0..4 {
                match x_exp(x, mu) {
                    0 => {}
                    1 => write!(f, "x{}", mu)?,
                    e => write!(f, "x{}^{}", mu, e)?,
                }
            }
            for mu in 0..4 {
                if dxmask(*k) >> mu & 1 == 1 {
                    write!(f, "dx{}", mu)?;
                }
            }
            for a in 0..4 {
                if vmask(*k) >> a & 1 == 1 {
                    write!(f, "v{}", a)?;
                }
            }
            let s = spin_index(*k);
            match self.kind {
                SpinKind::Scalar => {}
                SpinKind::Column | SpinKind::Row => write!(f, "[{}]", s)?,
                SpinKind::Matrix => write!(f, "[{}{}]", s / 4, s % 4)?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&Field> for &Field {
            type Output = Field;
            fn $m(self, rhs: &Field) -> Field {
                self.$f(rhs)
            }
        }
        impl std::ops::$tr<Field> for Field {
            type Output = Field;
            fn $m(self, rhs: Field) -> Field {
                (&self).$f(&rhs)
            }
        }
        impl std::ops::$tr<&Field> for Field {
            type Output = Field;
            fn $m(self, rhs: &Field) -> Field {
                (&self).$f(rhs)
            }
        }
        impl std::ops::$tr<Field> for &Field {
            type Output = Field;
            fn $m(self, rhs: Field) -> Field {
                self.$f(&rhs)
            }
        }
    };
}
binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl std::ops::Neg for &Field {
    type Output = Field;
    fn neg(self) -> Field {
        Field::neg(self)
    }
}

impl std::ops::Neg for Field {
    type Output = Field;
    fn neg(self) -> Field {
        Field::neg(&self)
    }
}

impl std::ops::Mul<&Field> for &Q {
    type Output = Field;
    fn mul(self, rhs: &Field) -> Field {
        rhs.scale(self)
    }
}

impl std::ops::Mul<Field> for Q {
    type Output = Field;
    fn mul(self, rhs: Field) -> Field {
        rhs.scale(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_generators_anticommute() {
        let a = Field::dx(1);
        let b = Field::v(2);
        let t = Field::theta(3);
        assert_eq!(&a * &b, -(&b * &a));
        assert_eq!(&a * &t, -(&t * &a));
        assert!((&a * &a).is_zero());
        assert_eq!(&t * &Field::theta(4), -(&Field::theta(4) * &t));
    }

    #[test]
    fn matrix_products_contract() {
        let e = Field::identity_matrix();
        let col = Field::spin_unit(SpinKind::Column, 2);
        assert_eq!(&e * &col, col);
        let row = Field::spin_unit(SpinKind::Row, 2);
        assert_eq!(&row * &col, Field::one());
        assert_eq!((&col * &row).kind(), SpinKind::Matrix);
    }

    #[test]
    fn truncation_and_derivatives() {
        let x = Field::coordinate(0).with_order(2);
        let x3 = &(&x * &x) * &x;
        assert!(x3.is_zero());
        let x2 = &x * &x;
        assert_eq!(x2.partial(0), x.scale_int(2).with_order(1));
    }
}
