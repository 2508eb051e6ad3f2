//! Finite Grassmann algebra over `Q(i)`.
//!
//! Generators are indexed `0..n` and stored as bits of a `u32` mask, so at most
//! 32 generators are supported. Generator 0 is reserved as the odd shift
//! parameter `ε` used by the nilpotency evaluator.

use std::fmt;

use super::GaussianRational as Q;

pub const MAX_GENERATORS: usize = 32;
pub const EPSILON: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrassmannError {
    #[error("element is not invertible (zero body or odd part present)")]
    NonInvertible,
}

/// Sign of the reordering `θ_A θ_B → θ_{A∪B}` (both monomials sorted ascending).
/// Returns `None` when the monomials share a generator.
#[inline]
pub fn merge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(swaps & 1 == 1)
}

/// Sparse element `Σ c_A θ_A`, terms sorted by mask, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GrassmannElement {
    terms: Vec<(u32, Q)>,
}

impl GrassmannElement {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn scalar(c: Q) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(0, c)] }
        }
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    /// The single generator `θ_i`.
    pub fn generator(i: usize) -> Self {
        assert!(i < MAX_GENERATORS, "generator index out of range");
        Self { terms: vec![(1u32 << i, Q::one())] }
    }

    /// `c · θ_{i1} θ_{i2} ...` in the given (not necessarily sorted) order.
    pub fn monomial(c: Q, gens: &[usize]) -> Self {
        let mut acc = Self::scalar(c);
        for &g in gens {
            acc = acc.mul(&Self::generator(g));
        }
        acc
    }

    /// Builds from raw `(mask, coefficient)` pairs, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Q)>) -> Self {
        let mut v: Vec<(u32, Q)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(u32, Q)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(u32, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn body(&self) -> Q {
        match self.terms.first() {
            Some((0, c)) => c.clone(),
            _ => Q::zero(),
        }
    }

    pub fn soul(&self) -> Self {
        Self { terms: self.terms.iter().filter(|t| t.0 != 0).cloned().collect() }
    }

    pub fn coefficient(&self, mask: u32) -> Q {
        match self.terms.binary_search_by_key(&mask, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for (m, _) in &self.terms {
            if m.count_ones() % 2 == 0 {
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

    /// Highest generator index used plus one.
    pub fn generator_span(&self) -> usize {
        self.terms.iter().map(|t| 32 - t.0.leading_zeros() as usize).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { terms: out }
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(neg) = merge_sign(*ma, *mb) {
                    let c = ca * cb;
                    raw.push((ma | mb, if neg { -c } else { c }));
                }
            }
        }
        Self::from_terms(raw)
    }

    /// Parity automorphism: negates odd monomials.
    pub fn twist(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.count_ones() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Inverse of an even element with nonzero body.
    pub fn inverse(&self) -> Result<Self, GrassmannError> {
        if self.parity() != Parity::Even {
            return Err(GrassmannError::NonInvertible);
        }
        let b = self.body();
        let binv = b.inv().ok_or(GrassmannError::NonInvertible)?;
        // x = b(1 + n), n nilpotent
        let n = self.soul().scale(&binv);
        let neg_n = n.neg();
        let mut acc = Self::one();
        let mut power = Self::one();
        loop {
            power = power.mul(&neg_n);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&binv))
    }

    /// Coefficient of `ε` after moving it to the front, with `ε` removed.
    pub fn epsilon_linear_part(&self) -> Self {
        // ε is generator 0, already leftmost in ascending order
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m & EPSILON != 0)
                .map(|(m, c)| (m & !EPSILON, c.clone()))
                .collect(),
        }
    }

    pub fn contains_epsilon(&self) -> bool {
        self.terms.iter().any(|(m, _)| m & EPSILON != 0)
    }

    /// Superalgebra star: conjugates `i` and reverses generator order.
    pub fn star(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let k = m.count_ones();
                    let c = c.conj();
                    (*m, if (k * (k.saturating_sub(1)) / 2) % 2 == 1 { -c } else { c })
                })
                .collect(),
        }
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial as a sorted generator list, e.g. `[1,3]`.
pub fn mask_to_list(mask: u32) -> String {
    let gens: Vec<String> = (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i.to_string()).collect();
    format!("[{}]", gens.join(","))
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *m == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({}){}", c, mask_to_list(*m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize) -> GrassmannElement {
        GrassmannElement::generator(i)
    }

    #[test]
    fn anticommutation_and_nilpotency() {
        assert_eq!(t(1).mul(&t(2)), t(2).mul(&t(1)).neg());
        assert!(t(1).mul(&t(1)).is_zero());
    }

    #[test]
    fn square_of_one_plus_bilinear() {
        let x = GrassmannElement::one().add(&t(1).mul(&t(2)));
        let expected = GrassmannElement::one().add(&t(1).mul(&t(2)).scale(&Q::from_int(2)));
        assert_eq!(x.mul(&x), expected);
    }

    #[test]
    fn inverses() {
        let two = GrassmannElement::scalar(Q::from_int(2));
        assert_eq!(two.inverse().unwrap(), GrassmannElement::scalar(Q::ratio(1, 2)));
        let x = GrassmannElement::one().add(&t(1).mul(&t(2)));
        assert_eq!(x.inverse().unwrap(), GrassmannElement::one().sub(&t(1).mul(&t(2))));
        assert_eq!(t(1).inverse(), Err(GrassmannError::NonInvertible));
    }

    #[test]
    fn epsilon_extraction() {
        assert_eq!(t(0).mul(&t(1)).epsilon_linear_part(), t(1));
        assert_eq!(t(1).mul(&t(0)).epsilon_linear_part(), t(1).neg());
        let x = GrassmannElement::scalar(Q::from_int(3))
            .add(&GrassmannElement::monomial(Q::from_int(5), &[0, 2, 3]));
        assert_eq!(x.epsilon_linear_part(), GrassmannElement::monomial(Q::from_int(5), &[2, 3]));
    }

    #[test]
    fn star_reverses_products() {
        let a = GrassmannElement::monomial(Q::I, &[1]);
        let b = t(2).add(&t(3));
        assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
    }
}
