//! Field configurations and their sampling.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::fiber::{pack, x_codes, Field, SpinKind, VectorField};
use crate::scalars::GaussianRational as Q;

/// Fields and antifields of the theory. Antifields `ω†`, `c†`, `ψ†`, `χ†` are
/// carried in their reparametrized form `ǒ`, `č`, `ψ⁰†`, `χ⁰†`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum FieldName {
    E,
    Omega,
    Psi,
    C,
    Xi,
    Chi,
    EDag,
    OmegaCheck,
    Psi0Dag,
    CCheck,
    XiDag,
    Chi0Dag,
}

impl FieldName {
    pub const ALL: [FieldName; 12] = [
        FieldName::E,
        FieldName::Omega,
        FieldName::Psi,
        FieldName::C,
        FieldName::Xi,
        FieldName::Chi,
        FieldName::EDag,
        FieldName::OmegaCheck,
        FieldName::Psi0Dag,
        FieldName::CCheck,
        FieldName::XiDag,
        FieldName::Chi0Dag,
    ];
    pub const FIELDS: [FieldName; 6] =
        [FieldName::E, FieldName::Omega, FieldName::Psi, FieldName::C, FieldName::Xi, FieldName::Chi];
    pub const ANTIFIELDS: [FieldName; 6] = [
        FieldName::EDag,
        FieldName::OmegaCheck,
        FieldName::Psi0Dag,
        FieldName::CCheck,
        FieldName::XiDag,
        FieldName::Chi0Dag,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FieldName::E => "e",
            FieldName::Omega => "omega",
            FieldName::Psi => "psi",
            FieldName::C => "c",
            FieldName::Xi => "xi",
            FieldName::Chi => "chi",
            FieldName::EDag => "e_dag",
            FieldName::OmegaCheck => "omega_check",
            FieldName::Psi0Dag => "psi0_dag",
            FieldName::CCheck => "c_check",
            FieldName::XiDag => "xi_dag",
            FieldName::Chi0Dag => "chi0_dag",
        }
    }

    /// `(form degree, multivector degree, spin kind)` of the stored value. For
    /// `ξ` and `ξ†` this describes a single component.
    pub fn shape(self) -> (u32, u32, SpinKind) {
        use SpinKind::*;
        match self {
            FieldName::E => (1, 1, Scalar),
            FieldName::Omega => (1, 2, Scalar),
            FieldName::Psi => (1, 0, Column),
            FieldName::C => (0, 2, Scalar),
            FieldName::Xi => (0, 0, Scalar),
            FieldName::Chi => (0, 0, Column),
            FieldName::EDag => (3, 3, Scalar),
            FieldName::OmegaCheck => (2, 1, Scalar),
            FieldName::Psi0Dag => (1, 0, Column),
            FieldName::CCheck => (2, 0, Scalar),
            FieldName::XiDag => (4, 4, Scalar),
            FieldName::Chi0Dag => (0, 0, Column),
        }
    }

    /// Parity of the coefficient functions (ghost number plus fermion number).
    pub fn coefficient_parity(self) -> u32 {
        match self {
            FieldName::Psi | FieldName::C | FieldName::Xi | FieldName::EDag | FieldName::OmegaCheck | FieldName::Chi0Dag => 1,
            _ => 0,
        }
    }

    pub fn is_spinor(self) -> bool {
        matches!(self, FieldName::Psi | FieldName::Chi | FieldName::Psi0Dag | FieldName::Chi0Dag)
    }
}

/// A point in the space of fields and reparametrized antifields, as jets at the
/// origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub e: Field,
    pub omega: Field,
    pub psi: Field,
    pub c: Field,
    pub xi: VectorField,
    pub chi: Field,
    pub e_dag: Field,
    pub omega_check: Field,
    pub psi0_dag: Field,
    pub c_check: Field,
    pub xi_dag: [Field; 4],
    pub chi0_dag: Field,
}

impl Config {
    /// All fields and antifields zero except the vielbein.
    pub fn with_vielbein(e: Field) -> Self {
        let z = Field::zero(SpinKind::Scalar);
        let zc = Field::zero(SpinKind::Column);
        Config {
            e,
            omega: z.clone(),
            psi: zc.clone(),
            c: z.clone(),
            xi: VectorField::zero(1),
            chi: zc.clone(),
            e_dag: z.clone(),
            omega_check: z.clone(),
            psi0_dag: zc.clone(),
            c_check: z.clone(),
            xi_dag: std::array::from_fn(|_| z.clone()),
            chi0_dag: zc,
        }
    }

    /// Flattened field list (vector components expanded) in a fixed order.
    pub fn parts(&self) -> Vec<(String, &Field)> {
        let mut out: Vec<(String, &Field)> = vec![
            ("e".into(), &self.e),
            ("omega".into(), &self.omega),
            ("psi".into(), &self.psi),
            ("c".into(), &self.c),
        ];
        for (m, f) in self.xi.comps.iter().enumerate() {
            out.push((format!("xi^{m}"), f));
        }
        out.push(("chi".into(), &self.chi));
        out.push(("e_dag".into(), &self.e_dag));
        out.push(("omega_check".into(), &self.omega_check));
        out.push(("psi0_dag".into(), &self.psi0_dag));
        out.push(("c_check".into(), &self.c_check));
        for (m, f) in self.xi_dag.iter().enumerate() {
            out.push((format!("xi_dag_{m}"), f));
        }
        out.push(("chi0_dag".into(), &self.chi0_dag));
        out
    }

    pub fn get(&self, name: FieldName) -> Vec<&Field> {
        match name {
            FieldName::E => vec![&self.e],
            FieldName::Omega => vec![&self.omega],
            FieldName::Psi => vec![&self.psi],
            FieldName::C => vec![&self.c],
            FieldName::Xi => self.xi.comps.iter().collect(),
            FieldName::Chi => vec![&self.chi],
            FieldName::EDag => vec![&self.e_dag],
            FieldName::OmegaCheck => vec![&self.omega_check],
            FieldName::Psi0Dag => vec![&self.psi0_dag],
            FieldName::CCheck => vec![&self.c_check],
            FieldName::XiDag => self.xi_dag.iter().collect(),
            FieldName::Chi0Dag => vec![&self.chi0_dag],
        }
    }

    pub fn set(&mut self, name: FieldName, values: Vec<Field>) {
        let one = |mut v: Vec<Field>| {
            assert_eq!(v.len(), 1);
            v.pop().unwrap()
        };
        match name {
            FieldName::E => self.e = one(values),
            FieldName::Omega => self.omega = one(values),
            FieldName::Psi => self.psi = one(values),
            FieldName::C => self.c = one(values),
            FieldName::Xi => self.xi.comps = values.try_into().expect("four components"),
            FieldName::Chi => self.chi = one(values),
            FieldName::EDag => self.e_dag = one(values),
            FieldName::OmegaCheck => self.omega_check = one(values),
            FieldName::Psi0Dag => self.psi0_dag = one(values),
            FieldName::CCheck => self.c_check = one(values),
            FieldName::XiDag => self.xi_dag = values.try_into().expect("four components"),
            FieldName::Chi0Dag => self.chi0_dag = one(values),
        }
    }

    /// Applies `f` to every stored field.
    pub fn map(&self, f: impl Fn(FieldName, &Field) -> Field) -> Config {
        let mut out = self.clone();
        for name in FieldName::ALL {
            let vals = self.get(name).into_iter().map(|x| f(name, x)).collect();
            out.set(name, vals);
        }
        out
    }

    /// Scales all antifields by `t`.
    pub fn scale_antifields(&self, t: &Q) -> Config {
        self.map(|n, f| if FieldName::ANTIFIELDS.contains(&n) { f.scale(t) } else { f.clone() })
    }

    /// Zeroes the listed fields.
    pub fn without(&self, names: &[FieldName]) -> Config {
        self.map(|n, f| if names.contains(&n) { Field::zero(f.kind()).with_order(f.order()) } else { f.clone() })
    }

    pub fn jet_order(&self) -> u8 {
        self.parts().iter().map(|p| p.1.order()).min().unwrap_or(crate::fiber::EXACT)
    }
}

/// Odd Grassmann generators reserved for each odd field.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GeneratorPools {
    pub psi: Vec<usize>,
    pub c: Vec<usize>,
    pub xi: Vec<usize>,
    pub e_dag: Vec<usize>,
    pub omega_check: Vec<usize>,
    pub chi0_dag: Vec<usize>,
}

impl GeneratorPools {
    /// Consecutive pools starting at generator 1 (generator 0 is `ε`).
    pub fn consecutive(sizes: [usize; 6]) -> Self {
        let mut next = 1;
        let mut take = |n: usize| {
            let v: Vec<usize> = (next..next + n).collect();
            next += n;
            v
        };
        GeneratorPools {
            psi: take(sizes[0]),
            c: take(sizes[1]),
            xi: take(sizes[2]),
            e_dag: take(sizes[3]),
            omega_check: take(sizes[4]),
            chi0_dag: take(sizes[5]),
        }
    }

    pub fn total(&self) -> usize {
        1 + self.psi.len() + self.c.len() + self.xi.len() + self.e_dag.len() + self.omega_check.len() + self.chi0_dag.len()
    }

    pub fn pool(&self, name: FieldName) -> &[usize] {
        match name {
            FieldName::Psi => &self.psi,
            FieldName::C => &self.c,
            FieldName::Xi => &self.xi,
            FieldName::EDag => &self.e_dag,
            FieldName::OmegaCheck => &self.omega_check,
            FieldName::Chi0Dag => &self.chi0_dag,
            _ => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePlan {
    pub jet_order: u8,
    pub pools: GeneratorPools,
    /// Fields sampled nonzero; all others are zero.
    pub active: Vec<FieldName>,
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let n = rng.gen_range(-9i64..=9);
        if n != 0 {
            let d = rng.gen_range(1i64..=3);
            return Q::ratio(n, d);
        }
    }
}

/// Sorted masks of `n` bits with `k` set.
pub fn masks(n: u32, k: u32) -> Vec<u8> {
    (0u8..(1 << n)).filter(|m| m.count_ones() == k).collect()
}

/// Random jet of the given shape. Odd coefficients are linear in the pool.
pub fn random_shaped(
    rng: &mut ChaCha8Rng,
    shape: (u32, u32, SpinKind),
    odd_pool: Option<&[usize]>,
    jet_order: u8,
) -> Field {
    let (i, j, kind) = shape;
    let spins: Vec<u8> = match kind {
        SpinKind::Scalar => vec![0],
        SpinKind::Column | SpinKind::Row => (0..4).collect(),
        SpinKind::Matrix => (0..16).collect(),
    };
    let mut terms = Vec::new();
    for dx in masks(4, i) {
        for v in masks(4, j) {
            for &s in &spins {
                for x in x_codes(jet_order) {
                    match odd_pool {
                        Some(pool) => {
                            for &g in pool {
                                terms.push((pack(1 << g, x, dx, v, s), random_rational(rng)));
                            }
                        }
                        None => terms.push((pack(0, x, dx, v, s), random_rational(rng))),
                    }
                }
            }
        }
    }
    Field::from_terms(kind, jet_order, terms)
}

/// Random configuration. The vielbein body at the origin is redrawn until it is
/// invertible.
pub fn sample_config(rng: &mut ChaCha8Rng, plan: &SamplePlan) -> Config {
    let k = plan.jet_order;
    let e = loop {
        let e = random_shaped(rng, FieldName::E.shape(), None, k);
        if super::vielbein_body(&e).inverse().is_some() {
            break e;
        }
    };
    let mut cfg = Config::with_vielbein(e);
    for name in FieldName::ALL.into_iter().filter(|&n| n != FieldName::E) {
        let vals = cfg.get(name).iter().map(|f| Field::zero(f.kind()).with_order(k)).collect();
        cfg.set(name, vals);
    }
    for &name in &plan.active {
        if name == FieldName::E {
            continue;
        }
        let pool = if name.coefficient_parity() == 1 { Some(plan.pools.pool(name)) } else { None };
        let count = if matches!(name, FieldName::Xi | FieldName::XiDag) { 4 } else { 1 };
        let vals = (0..count).map(|_| random_shaped(rng, name.shape(), pool, k)).collect();
        cfg.set(name, vals);
    }
    cfg
}
