//! Gamma matrices, charge conjugation and the Levi-Civita symbol.
//!
//! Signature `η = diag(-1, 1, 1, 1)` with `{γ_a, γ_b} = -2 η_ab`. The
//! representation is purely imaginary, so Majorana spinors have real components
//! once `C` is normalized.

use std::sync::OnceLock;

use crate::fiber::Field;
use crate::linalg::Matrix;
use crate::scalars::GaussianRational as Q;

pub type Mat4 = [[Q; 4]; 4];

pub const ETA: [i64; 4] = [-1, 1, 1, 1];

/// `ε^{0123}`. The opposite sign is available for diagnostics.
pub const EPS_UPPER_0123: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("charge conjugation null space has dimension {0}, expected 1")]
    RepresentationSearchFailed(usize),
    #[error("Majorana matrix B is not proportional to a phase times the identity")]
    MajoranaNormalization,
}

pub fn zero4() -> Mat4 {
    std::array::from_fn(|_| std::array::from_fn(|_| Q::zero()))
}

pub fn identity4() -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Q::one() } else { Q::zero() }))
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Q::zero();
            for k in 0..4 {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    acc += &a[i][k] * &b[k][j];
                }
            }
            acc
        })
    })
}

pub fn mat_add(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j]))
}

pub fn mat_sub(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] - &b[i][j]))
}

pub fn mat_scale(a: &Mat4, s: &Q) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] * s))
}

pub fn mat_transpose(a: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

pub fn mat_conj(a: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].conj()))
}

pub fn mat_is_zero(a: &Mat4) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

pub fn mat_inverse(a: &Mat4) -> Option<Mat4> {
    let m = Matrix::from_rows(a.iter().map(|r| r.to_vec()).collect());
    let inv = m.inverse()?;
    Some(std::array::from_fn(|i| std::array::from_fn(|j| inv[(i, j)].clone())))
}

fn from_ints(re: [[i64; 4]; 4], im: [[i64; 4]; 4]) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| Q::new(re[i][j], im[i][j], 1)))
}

fn kron(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i / 2][j / 2] * b[i % 2][j % 2]))
}

struct Tables {
    lower: [Mat4; 4],
    upper: [Mat4; 4],
    gamma5: Mat4,
    charge: Mat4,
    charge_inv: Mat4,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let one = [[1, 0], [0, 1]];
        let s1 = [[0, 1], [1, 0]];
        let s3 = [[1, 0], [0, -1]];
        let eps = [[0, 1], [-1, 0]];
        let z = [[0i64; 4]; 4];
        let lower = [
            from_ints(z, kron(eps, s1)),
            from_ints(z, kron(s1, one)),
            from_ints(z, kron(s3, one)),
            from_ints(z, kron(eps, eps)),
        ];
        let upper: [Mat4; 4] = std::array::from_fn(|a| mat_scale(&lower[a], &Q::from_int(ETA[a])));
        let g0123 = mat_mul(&mat_mul(&upper[0], &upper[1]), &mat_mul(&upper[2], &upper[3]));
        let gamma5 = mat_scale(&g0123, &Q::i());
        let charge = solve_charge_conjugation(&lower).expect("charge conjugation for the built-in representation");
        let charge_inv = mat_inverse(&charge).expect("C invertible");
        Tables { lower, upper, gamma5, charge, charge_inv }
    })
}

/// Solves `Cᵗ = -C`, `(Cγ_a)ᵗ = Cγ_a` by exact null space and normalizes `C` so
/// that the Majorana matrix `B = ((γ_0)ᵗ)⁻¹ Cᵗ` is the identity.
pub fn solve_charge_conjugation(lower: &[Mat4; 4]) -> Result<Mat4, CliffordError> {
    // unknowns c_{ij} at index 4i+j
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let mut r = vec![Q::zero(); 16];
            r[4 * i + j] += Q::one();
            r[4 * j + i] += Q::one();
            rows.push(r);
        }
    }
    for g in lower {
        // (Cγ)_{ij} - (Cγ)_{ji} = Σ_k c_ik g_kj - c_jk g_ki
        for i in 0..4 {
            for j in 0..4 {
                let mut r = vec![Q::zero(); 16];
                for k in 0..4 {
                    r[4 * i + k] += g[k][j].clone();
                    r[4 * j + k] -= &g[k][i];
                }
                rows.push(r);
            }
        }
    }
    let ns = Matrix::from_rows(rows).nullspace();
    if ns.len() != 1 {
        return Err(CliffordError::RepresentationSearchFailed(ns.len()));
    }
    let c: Mat4 = std::array::from_fn(|i| std::array::from_fn(|j| ns[0][4 * i + j].clone()));
    let g0t_inv = mat_inverse(&mat_transpose(&lower[0])).ok_or(CliffordError::MajoranaNormalization)?;
    let b = mat_mul(&g0t_inv, &mat_transpose(&c));
    let beta = b[0][0].clone();
    if beta.is_zero() || !mat_is_zero(&mat_sub(&b, &mat_scale(&identity4(), &beta))) {
        return Err(CliffordError::MajoranaNormalization);
    }
    Ok(mat_scale(&c, &beta.inv().expect("nonzero")))
}

pub fn gamma_lower(a: usize) -> &'static Mat4 {
    &tables().lower[a]
}

pub fn gamma_upper(a: usize) -> &'static Mat4 {
    &tables().upper[a]
}

pub fn gamma5() -> &'static Mat4 {
    &tables().gamma5
}

pub fn charge_conjugation() -> &'static Mat4 {
    &tables().charge
}

pub fn charge_conjugation_inverse() -> &'static Mat4 {
    &tables().charge_inv
}

/// Majorana matrix `B` with `λ* = Bλ`.
pub fn majorana_b() -> Mat4 {
    let g0t_inv = mat_inverse(&mat_transpose(gamma_lower(0))).expect("γ_0 invertible");
    mat_mul(&g0t_inv, &mat_transpose(charge_conjugation()))
}

/// Ordered product of gammas with the given index placement.
pub fn gamma_product(indices: &[usize], upper: bool) -> Mat4 {
    indices.iter().fold(identity4(), |acc, &a| {
        mat_mul(&acc, if upper { gamma_upper(a) } else { gamma_lower(a) })
    })
}

fn permutations(items: &[usize]) -> Vec<(Vec<usize>, bool)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), false)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for (mut p, s) in permutations(&rest) {
            p.insert(0, first);
            out.push((p, s ^ (i % 2 == 1)));
        }
    }
    out
}

/// Unit-weight antisymmetrized product `γ_{[a_1} ⋯ γ_{a_n]}`.
pub fn gamma_antisym(indices: &[usize], upper: bool) -> Mat4 {
    let perms = permutations(indices);
    let n = perms.len() as i64;
    let mut acc = zero4();
    for (p, neg) in perms {
        let g = gamma_product(&p, upper);
        acc = if neg { mat_sub(&acc, &g) } else { mat_add(&acc, &g) };
    }
    mat_scale(&acc, &Q::ratio(1, n))
}

/// Sign of a permutation of distinct indices, 0 when indices repeat.
pub fn permutation_sign(idx: &[usize]) -> i64 {
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if idx[i] == idx[j] {
                return 0;
            }
        }
    }
    let mut inversions = 0;
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if idx[i] > idx[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn eps_upper(a: usize, b: usize, c: usize, d: usize) -> i64 {
    EPS_UPPER_0123 * permutation_sign(&[a, b, c, d])
}

/// `ε_{abcd}`; lowering all four indices flips the sign since `det η = -1`.
pub fn eps_lower(a: usize, b: usize, c: usize, d: usize) -> i64 {
    -eps_upper(a, b, c, d)
}

/// `t_N` in `(Cγ^{(N)})ᵗ = -t_N Cγ^{(N)}`.
pub const T_N: [i64; 4] = [1, -1, -1, 1];

/// The constant multivector-valued matrix `γ = γ^a v_a`.
pub fn gamma_field() -> &'static Field {
    static G: OnceLock<Field> = OnceLock::new();
    G.get_or_init(|| {
        let parts: Vec<Field> = (0..4).map(|a| Field::matrix(gamma_upper(a)) * Field::v(a)).collect();
        Field::sum(crate::fiber::SpinKind::Matrix, &parts)
    })
}

/// `γ^N` as an algebra power (automatically antisymmetrized).
pub fn gamma_power(n: usize) -> Field {
    let mut acc = Field::identity_matrix();
    for _ in 0..n {
        acc = &acc * gamma_field();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relation() {
        for a in 0..4 {
            for b in 0..4 {
                let ac = mat_add(&mat_mul(gamma_lower(a), gamma_lower(b)), &mat_mul(gamma_lower(b), gamma_lower(a)));
                let expected = if a == b { mat_scale(&identity4(), &Q::from_int(-2 * ETA[a])) } else { zero4() };
                assert_eq!(ac, expected, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn charge_conjugation_is_gamma0() {
        assert_eq!(charge_conjugation(), gamma_lower(0));
        assert_eq!(majorana_b(), identity4());
    }
}
