//! Exact Gaussian rationals `(re + i·im) / den`.
//!
//! Values are kept normalized (`den > 0`, `gcd(re, im, den) = 1`). Small values
//! live in machine integers; anything that would overflow is promoted to
//! `BigInt` and demoted again when it fits.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { re: i64, im: i64, den: i64 },
    Big(Box<BigRepr>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BigRepr {
    re: BigInt,
    im: BigInt,
    den: BigInt,
}

/// An element of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl GaussianRational {
    pub const ZERO: GaussianRational = GaussianRational(Repr::Small { re: 0, im: 0, den: 1 });
    pub const ONE: GaussianRational = GaussianRational(Repr::Small { re: 1, im: 0, den: 1 });
    pub const I: GaussianRational = GaussianRational(Repr::Small { re: 0, im: 1, den: 1 });

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn i() -> Self {
        Self::I
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational(Repr::Small { re: n, im: 0, den: 1 })
    }

    /// `num / den` as a real rational. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, 0, den as i128)
    }

    /// `(re + i·im) / den`.
    pub fn new(re: i64, im: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(re as i128, im as i128, den as i128)
    }

    /// Builds from rational real and imaginary parts.
    pub fn from_parts(re: &GaussianRational, im: &GaussianRational) -> Self {
        debug_assert!(re.is_real() && im.is_real());
        re.clone() + im.clone() * Self::I
    }

    fn from_i128(mut re: i128, mut im: i128, mut den: i128) -> Self {
        if den < 0 {
            re = -re;
            im = -im;
            den = -den;
        }
        if re == 0 && im == 0 {
            return Self::ZERO;
        }
        let g = gcd_i128(gcd_i128(re, im), den);
        if g > 1 {
            re /= g;
            im /= g;
            den /= g;
        }
        match (i64::try_from(re), i64::try_from(im), i64::try_from(den)) {
            (Ok(re), Ok(im), Ok(den)) => GaussianRational(Repr::Small { re, im, den }),
            _ => GaussianRational(Repr::Big(Box::new(BigRepr {
                re: BigInt::from(re),
                im: BigInt::from(im),
                den: BigInt::from(den),
            }))),
        }
    }

    fn from_big(mut re: BigInt, mut im: BigInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            re = -re;
            im = -im;
            den = -den;
        }
        if re.is_zero() && im.is_zero() {
            return Self::ZERO;
        }
        let g = re.gcd(&im).gcd(&den);
        if !g.is_one() {
            re /= &g;
            im /= &g;
            den /= &g;
        }
        match (re.to_i64(), im.to_i64(), den.to_i64()) {
            (Some(re), Some(im), Some(den)) => GaussianRational(Repr::Small { re, im, den }),
            _ => GaussianRational(Repr::Big(Box::new(BigRepr { re, im, den }))),
        }
    }

    fn to_big(&self) -> (BigInt, BigInt, BigInt) {
        match &self.0 {
            Repr::Small { re, im, den } => (BigInt::from(*re), BigInt::from(*im), BigInt::from(*den)),
            Repr::Big(b) => (b.re.clone(), b.im.clone(), b.den.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { re: 0, im: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { re: 1, im: 0, den: 1 })
    }

    pub fn is_real(&self) -> bool {
        match &self.0 {
            Repr::Small { im, .. } => *im == 0,
            Repr::Big(b) => b.im.is_zero(),
        }
    }

    /// Real part.
    pub fn re(&self) -> GaussianRational {
        let (re, _, den) = self.to_big();
        Self::from_big(re, BigInt::zero(), den)
    }

    /// Imaginary part (as a real rational).
    pub fn im(&self) -> GaussianRational {
        let (_, im, den) = self.to_big();
        Self::from_big(im, BigInt::zero(), den)
    }

    pub fn conj(&self) -> GaussianRational {
        match &self.0 {
            Repr::Small { re, im, den } => GaussianRational(Repr::Small { re: *re, im: -*im, den: *den }),
            Repr::Big(b) => Self::from_big(b.re.clone(), -b.im.clone(), b.den.clone()),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return None;
        }
        if let Repr::Small { re, im, den } = self.0 {
            let (re, im, den) = (re as i128, im as i128, den as i128);
            if let Some(norm) = re.checked_mul(re).and_then(|a| im.checked_mul(im).and_then(|b| a.checked_add(b))) {
                if let (Some(nr), Some(ni)) = (den.checked_mul(re), den.checked_mul(-im)) {
                    return Some(Self::from_i128(nr, ni, norm));
                }
            }
        }
        let (re, im, den) = self.to_big();
        let norm = &re * &re + &im * &im;
        Some(Self::from_big(&den * &re, -(&den * &im), norm))
    }

    pub fn pow(&self, n: u32) -> GaussianRational {
        let mut acc = Self::ONE;
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Numerator/denominator strings of the real and imaginary parts.
    fn part_string(num: &BigInt, den: &BigInt) -> String {
        if num.is_zero() {
            return "0".to_string();
        }
        let g = num.gcd(den);
        let (n, d) = (num / &g, den / &g);
        if d.is_one() {
            n.to_string()
        } else {
            format!("{}/{}", n, d)
        }
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if let (Repr::Small { re: a, im: b, den: d1 }, Repr::Small { re: c, im: d, den: d2 }) = (&self.0, &rhs.0) {
            let (a, b, d1, c, d, d2) = (*a as i128, *b as i128, *d1 as i128, *c as i128, *d as i128, *d2 as i128);
            if d1 == d2 {
                return GaussianRational::from_i128(a + c, b + d, d1);
            }
            let re = a * d2 + c * d1;
            let im = b * d2 + d * d1;
            return GaussianRational::from_i128(re, im, d1 * d2);
        }
        let (a, b, d1) = self.to_big();
        let (c, d, d2) = rhs.to_big();
        GaussianRational::from_big(&a * &d2 + &c * &d1, &b * &d2 + &d * &d1, d1 * d2)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self = &*self + &rhs;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        match &self.0 {
            Repr::Small { re, im, den } => match (re.checked_neg(), im.checked_neg()) {
                (Some(re), Some(im)) => GaussianRational(Repr::Small { re, im, den: *den }),
                _ => GaussianRational::from_i128(-(*re as i128), -(*im as i128), *den as i128),
            },
            Repr::Big(b) => GaussianRational::from_big(-b.re.clone(), -b.im.clone(), b.den.clone()),
        }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self + &(-&rhs)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        self + &(-rhs)
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if let (Repr::Small { re: a, im: b, den: d1 }, Repr::Small { re: c, im: d, den: d2 }) = (&self.0, &rhs.0) {
            let (a, b, d1, c, d, d2) = (*a as i128, *b as i128, *d1 as i128, *c as i128, *d as i128, *d2 as i128);
            if b == 0 && d == 0 {
                return GaussianRational::from_i128(a * c, 0, d1 * d2);
            }
            let re = (a * c).checked_sub(b * d);
            let im = (a * d).checked_add(b * c);
            if let (Some(re), Some(im)) = (re, im) {
                return GaussianRational::from_i128(re, im, d1 * d2);
            }
        }
        let (a, b, d1) = self.to_big();
        let (c, d, d2) = rhs.to_big();
        GaussianRational::from_big(&a * &c - &b * &d, &a * &d + &b * &c, d1 * d2)
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        self * rhs.inv().expect("division by zero")
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical text form: `p/q` for reals, `p/q+r/s*i` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im, den) = self.to_big();
        if im.is_zero() {
            return write!(f, "{}", Self::part_string(&re, &den));
        }
        let im_abs = im.abs();
        let im_str = Self::part_string(&im_abs, &den);
        let sign = if im.is_negative() { "-" } else { "+" };
        if re.is_zero() {
            let lead = if im.is_negative() { "-" } else { "" };
            write!(f, "{}{}*i", lead, im_str)
        } else {
            write!(f, "{}{}{}*i", Self::part_string(&re, &den), sign, im_str)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed Gaussian rational literal `{0}`")]
pub struct ParseGaussianError(pub String);

fn parse_rational(s: &str) -> Option<(BigInt, BigInt)> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some((n, d))
    } else {
        Some((BigInt::from_str(s).ok()?, BigInt::one()))
    }
}

impl FromStr for GaussianRational {
    type Err = ParseGaussianError;

    /// Parses the output of `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGaussianError(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix("*i") else {
            let (n, d) = parse_rational(t).ok_or_else(err)?;
            return Ok(Self::from_big(n, BigInt::zero(), d));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let (rn, rd) = parse_rational(re_part).ok_or_else(err)?;
        let im_part = im_part.strip_prefix('+').unwrap_or(im_part);
        let (inum, id) = parse_rational(im_part).ok_or_else(err)?;
        let re = Self::from_big(rn, BigInt::zero(), rd);
        let im = Self::from_big(BigInt::zero(), inum, id);
        Ok(re + im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::I;
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn normalization() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-3, -6), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert!(q(0, 5).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = GaussianRational::new(3, -4, 7);
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert!(GaussianRational::ZERO.inv().is_none());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = GaussianRational::from_int(i64::MAX);
        let sq = &big * &big;
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        let sum = &big + &big;
        assert_eq!(&sum - &big, big);
    }

    #[test]
    fn display_parse_roundtrip() {
        for z in [
            q(3, 4),
            GaussianRational::new(1, -2, 3),
            GaussianRational::new(0, 5, 2),
            GaussianRational::new(0, -1, 1),
            q(-7, 1),
            GaussianRational::ZERO,
            &GaussianRational::from_int(i64::MAX) * &GaussianRational::from_int(9),
        ] {
            let s = z.to_string();
            assert_eq!(s.parse::<GaussianRational>().unwrap(), z, "{s}");
        }
    }

    #[test]
    fn field_axioms_on_samples() {
        let xs = [q(1, 3), GaussianRational::new(2, 5, 7), GaussianRational::new(-4, 1, 9)];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    assert_eq!(a + b, b + a);
                }
            }
        }
    }
}
