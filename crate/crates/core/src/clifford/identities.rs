//! Identity suites for gamma matrices, Majorana flips and Fierz rearrangements.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::fiber::{pack, Field, SpinKind};
use crate::fields::random_rational;
use crate::report::Recorder;
use crate::scalars::GaussianRational as Q;

use super::gamma::*;
use super::spinor::bar;

/// Number of index tuples on which each of the two sides differ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TupleTally {
    pub checked: usize,
    pub failed: Vec<[usize; 4]>,
}

impl TupleTally {
    fn record(&mut self, idx: [usize; 4], lhs: &Mat4, rhs: &Mat4) {
        self.checked += 1;
        if lhs != rhs {
            self.failed.push(idx);
        }
    }
}

fn eta(a: usize, b: usize) -> Q {
    if a == b {
        Q::from_int(ETA[a])
    } else {
        Q::zero()
    }
}

fn tuples() -> impl Iterator<Item = [usize; 4]> {
    (0..256).map(|n| [n >> 6 & 3, n >> 4 & 3, n >> 2 & 3, n & 3])
}

/// `γ^a γ^b γ^c γ^d γ_a = 2 γ^d γ^c γ^b`.
pub fn gamma_identity_1() -> TupleTally {
    let mut t = TupleTally::default();
    for idx @ [_, b, c, d] in tuples() {
        let mut lhs = zero4();
        for a in 0..4 {
            let m = mat_mul(&gamma_product(&[a, b, c, d], true), gamma_lower(a));
            lhs = mat_add(&lhs, &m);
        }
        let rhs = mat_scale(&gamma_product(&[d, c, b], true), &Q::from_int(2));
        t.record(idx, &lhs, &rhs);
    }
    t
}

/// `γ^aγ^bγ^c = −η^{ab}γ^c − η^{bc}γ^a + η^{ac}γ^b + i ε^{dabc} γ_d γ⁵`.
pub fn gamma_identity_2() -> TupleTally {
    let mut t = TupleTally::default();
    for idx @ [a, b, c, _] in tuples() {
        let lhs = gamma_product(&[a, b, c], true);
        let mut rhs = mat_scale(gamma_upper(c), &-eta(a, b));
        rhs = mat_sub(&rhs, &mat_scale(gamma_upper(a), &eta(b, c)));
        rhs = mat_add(&rhs, &mat_scale(gamma_upper(b), &eta(a, c)));
        for d in 0..4 {
            let e = eps_upper(d, a, b, c);
            if e != 0 {
                rhs = mat_add(&rhs, &mat_scale(&mat_mul(gamma_lower(d), gamma5()), &(Q::i() * Q::from_int(e))));
            }
        }
        t.record(idx, &lhs, &rhs);
    }
    t
}

/// `γ⁵ γ^{[c}γ^{d]} = −(i/2) ε^{abcd} γ_{ab}`.
pub fn gamma_identity_3() -> TupleTally {
    let mut t = TupleTally::default();
    for idx @ [_, _, c, d] in tuples() {
        let lhs = mat_mul(gamma5(), &gamma_antisym(&[c, d], true));
        let mut rhs = zero4();
        for a in 0..4 {
            for b in 0..4 {
                let e = eps_upper(a, b, c, d);
                if e != 0 {
                    rhs = mat_add(&rhs, &mat_scale(&gamma_antisym(&[a, b], false), &(Q::i() * Q::ratio(-e, 2))));
                }
            }
        }
        t.record(idx, &lhs, &rhs);
    }
    t
}

/// `γ⁵ γ^d = (i/6) ε^{abcd} γ_{abc}`, reading the unrepeated index as free.
pub fn gamma_identity_4() -> TupleTally {
    let mut t = TupleTally::default();
    for idx @ [_, _, _, d] in tuples() {
        let lhs = mat_mul(gamma5(), gamma_upper(d));
        let mut rhs = zero4();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let e = eps_upper(a, b, c, d);
                    if e != 0 {
                        rhs = mat_add(&rhs, &mat_scale(&gamma_antisym(&[a, b, c], false), &(Q::i() * Q::ratio(e, 6))));
                    }
                }
            }
        }
        t.record(idx, &lhs, &rhs);
    }
    t
}

/// `t_N` read off from `(Cγ^{(N)})ᵗ = −t_N Cγ^{(N)}` over all antisymmetric
/// index sets of length `N`. `None` if the sign is not uniform.
pub fn recover_t(n: usize) -> Option<i64> {
    let c = charge_conjugation();
    let mut found = None;
    for mask in 0u8..16 {
        if mask.count_ones() as usize != n {
            continue;
        }
        let idx: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        let m = mat_mul(c, &gamma_antisym(&idx, true));
        let mt = mat_transpose(&m);
        let t = if mt == mat_scale(&m, &Q::from_int(-1)) {
            1
        } else if mt == m {
            -1
        } else {
            return None;
        };
        if *found.get_or_insert(t) != t {
            return None;
        }
    }
    found
}

/// Runs the gamma-matrix identity suite.
pub fn gamma_suite(rec: &mut Recorder) {
    let tally = |rec: &mut Recorder, id: &str, anchor: &str, t: TupleTally| {
        rec.holds(id, anchor, t.failed.is_empty(), || {
            format!("{} of {} tuples fail, first {:?}", t.failed.len(), t.checked, t.failed[0])
        });
    };
    tally(rec, "gamma:1", "gamma^a gamma^b gamma^c gamma^d gamma_a = 2 gamma^d gamma^c gamma^b", gamma_identity_1());
    tally(rec, "gamma:2", "gamma^a gamma^b gamma^c expansion", gamma_identity_2());
    tally(rec, "gamma:3", "gamma5 gamma^[c gamma^d] = -(i/2) eps^abcd gamma_ab", gamma_identity_3());
    tally(rec, "gamma:4", "gamma5 gamma^d = (i/6) eps^abcd gamma_abc", gamma_identity_4());
    for n in 0..4 {
        let t = recover_t(n);
        rec.holds(&format!("t:{n}"), "(C gamma^(N))^t = -t_N C gamma^(N)", t == Some(T_N[n]), || {
            format!("t_{n} recovered as {t:?}, expected {}", T_N[n])
        });
    }
    let g5sq = mat_mul(gamma5(), gamma5());
    rec.holds("gamma5:square", "(gamma5)^2 = 1", g5sq == identity4(), || "gamma5 squares to -1".into());
    let prod = gamma_product(&[0, 1, 2, 3], true);
    rec.holds("gamma5:product", "gamma^0123 = -i gamma5", prod == mat_scale(gamma5(), &-Q::i()), || {
        "gamma^0 gamma^1 gamma^2 gamma^3 differs from -i gamma5".into()
    });
    rec.holds("gamma:clifford", "{gamma_a, gamma_b} = -2 eta_ab", clifford_holds(), || "anticommutator".into());
}

fn clifford_holds() -> bool {
    (0..4).all(|a| {
        (0..4).all(|b| {
            let ac = mat_add(&mat_mul(gamma_lower(a), gamma_lower(b)), &mat_mul(gamma_lower(b), gamma_lower(a)));
            ac == mat_scale(&identity4(), &(eta(a, b) * Q::from_int(-2)))
        })
    })
}

/// A random Majorana column spinor (0-form) whose coefficients have the given
/// parity, built from the generators in `gens`. Odd samples carry degree-1 and
/// degree-3 monomials, even samples degree-0 and degree-2 ones.
pub fn majorana_sample(rng: &mut ChaCha8Rng, odd: bool, gens: &[usize]) -> Field {
    let degrees: &[usize] = if odd { &[1, 3] } else { &[0, 2] };
    let mut terms = Vec::new();
    for s in 0..4u8 {
        for &deg in degrees {
            if deg > gens.len() {
                continue;
            }
            for _ in 0..2 {
                let mut mask = 0u32;
                while (mask.count_ones() as usize) < deg {
                    mask |= 1 << gens[rng.gen_range(0..gens.len())];
                }
                // Real for degrees 0, 1 mod 4 and imaginary for 2, 3 mod 4,
                // so that the star-conjugate equals the spinor itself.
                let c = random_rational(rng);
                let c = if deg % 4 >= 2 { c * Q::i() } else { c };
                terms.push((pack(mask, 0, 0, 0, s), c));
            }
        }
    }
    Field::from_terms(SpinKind::Column, crate::fiber::EXACT, terms)
}

/// `χ̄γ^Nψ + t_N (−1)^{N(|ψ|+|χ|)+|ψ||χ|} ψ̄γ^Nχ`.
pub fn flip_residual(n: usize, psi: &Field, psi_odd: bool, chi: &Field, chi_odd: bool) -> Field {
    let g = gamma_power(n);
    let lhs = &(&bar(chi) * &g) * psi;
    let rhs = &(&bar(psi) * &g) * chi;
    let (p, c) = (psi_odd as i64, chi_odd as i64);
    let sign = if (n as i64 * (p + c) + p * c) % 2 == 0 { 1 } else { -1 };
    lhs.add(&rhs.scale_int(T_N[n] * sign))
}

fn bil(a: &Field, m: &Field, b: &Field) -> Field {
    &(&bar(a) * m) * b
}

fn sgn(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Residuals of the two Fierz rearrangements for spinors `l` with parities `p`.
pub fn fierz_residuals(l: &[Field; 4], p: [bool; 4]) -> [Field; 2] {
    let g1 = gamma_field();
    let g3 = gamma_power(3);
    let [p2, p3, p4] = [p[1] as i64, p[2] as i64, p[3] as i64];
    let s1 = sgn(p2 * p3);
    let s2 = sgn(p4 * (p2 + p3 + 1) + p3);
    let lhs = &bil(&l[0], &g3, &l[1]) * &bil(&l[2], g1, &l[3]);
    let f1 = (&bil(&l[0], g1, &l[2]) * &bil(&l[1], &g3, &l[3]))
        .scale_int(s1)
        .add(&(&bil(&l[0], g1, &l[3]) * &bil(&l[1], &g3, &l[2])).scale_int(s2));
    let f2 = (&bil(&l[0], &g3, &l[2]) * &bil(&l[1], g1, &l[3]))
        .scale_int(-s1)
        .sub(&(&bil(&l[0], &g3, &l[3]) * &bil(&l[1], g1, &l[2])).scale_int(s2));
    [lhs.sub(&f1), lhs.sub(&f2)]
}

/// The three quartic identities for `|χ| = 0`, `|ψ| = 1`.
pub fn fierz_lemma_residuals(lambda: &Field, psi: &Field, chi: &Field) -> [Field; 3] {
    let g1 = gamma_field();
    let g3 = gamma_power(3);
    [
        &bil(lambda, &g3, chi) * &bil(chi, g1, psi),
        &bil(chi, g1, chi) * &bil(lambda, &g3, psi),
        &bil(lambda, g1, chi) * &bil(chi, &g3, psi),
    ]
}

/// `Σ_a (Cγ^a)_{α(δ} (Cγ_a)_{ρβ)}` for all index tuples; returns failing tuples.
pub fn fierz_completeness() -> TupleTally {
    let c = charge_conjugation();
    let up: Vec<Mat4> = (0..4).map(|a| mat_mul(c, gamma_upper(a))).collect();
    let low: Vec<Mat4> = (0..4).map(|a| mat_mul(c, gamma_lower(a))).collect();
    let mut t = TupleTally::default();
    for idx @ [al, de, rh, be] in tuples() {
        let mut acc = Q::zero();
        for [x, y, z] in [[de, rh, be], [de, be, rh], [rh, de, be], [rh, be, de], [be, de, rh], [be, rh, de]] {
            for a in 0..4 {
                acc += &up[a][al][x] * &low[a][y][z];
            }
        }
        t.checked += 1;
        if !acc.is_zero() {
            t.failed.push(idx);
        }
    }
    t
}
