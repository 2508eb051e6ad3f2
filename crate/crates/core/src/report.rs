//! Residual reports: one entry per checked identity.

use serde::{Deserialize, Serialize};

use crate::fiber::{dxmask, gmask, spin_index, vmask, x_exp, xcode, Field};

/// A concrete nonzero term of a residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub field: String,
    pub component: String,
    pub derivative_index: [u8; 4],
    pub monomial: Vec<u32>,
    pub coefficient: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    ExactZero,
    Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub case_seed: u64,
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub expect: Expect,
    /// Number of nonzero terms in the residual.
    pub residual_terms: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ExactZero,
    Witness,
    Skipped,
}

impl Check {
    pub fn passed(&self) -> bool {
        match (self.status, self.expect) {
            (Status::ExactZero, Expect::ExactZero) | (Status::Witness, Expect::Witness) => true,
            (Status::Skipped, _) => true,
            _ => false,
        }
    }
}

/// Builds checks for one suite case.
#[derive(Clone, Debug)]
pub struct Recorder {
    pub suite: String,
    pub case_seed: u64,
    pub checks: Vec<Check>,
}

impl Recorder {
    pub fn new(suite: &str, case_seed: u64) -> Self {
        Recorder { suite: suite.to_string(), case_seed, checks: Vec::new() }
    }

    fn push(&mut self, id: &str, anchor: &str, witness: Option<Witness>, terms: usize, expect: Expect) {
        let status = if witness.is_some() { Status::Witness } else { Status::ExactZero };
        self.checks.push(Check {
            suite: self.suite.clone(),
            case_seed: self.case_seed,
            check_id: id.to_string(),
            anchor: anchor.to_string(),
            status,
            witness,
            expect,
            residual_terms: terms,
        });
    }

    /// Records that `residual` must vanish.
    pub fn zero(&mut self, id: &str, anchor: &str, field: &str, residual: &Field) {
        self.push(id, anchor, field_witness(field, residual), residual.len(), Expect::ExactZero);
    }

    /// Records that `residual` must be nonzero.
    pub fn nonzero(&mut self, id: &str, anchor: &str, field: &str, residual: &Field) {
        self.push(id, anchor, field_witness(field, residual), residual.len(), Expect::Witness);
    }

    /// Records a boolean fact; a failure carries the message as witness.
    pub fn holds(&mut self, id: &str, anchor: &str, ok: bool, detail: impl FnOnce() -> String) {
        let w = (!ok).then(|| Witness {
            field: detail(),
            component: String::new(),
            derivative_index: [0; 4],
            monomial: Vec::new(),
            coefficient: String::new(),
        });
        self.push(id, anchor, w, usize::from(!ok), Expect::ExactZero);
    }

    pub fn skipped(&mut self, id: &str, anchor: &str) {
        self.checks.push(Check {
            suite: self.suite.clone(),
            case_seed: self.case_seed,
            check_id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Skipped,
            witness: None,
            expect: Expect::ExactZero,
            residual_terms: 0,
        });
    }

    pub fn extend(&mut self, other: Recorder) {
        self.checks.extend(other.checks);
    }
}

/// The first term of a nonzero field as a witness.
pub fn field_witness(field: &str, f: &Field) -> Option<Witness> {
    let (k, c) = f.terms().first()?;
    let x = xcode(*k);
    let component = format!(
        "dx={} v={} spin={}",
        digits(dxmask(*k) as u32),
        digits(vmask(*k) as u32),
        spin_index(*k)
    );
    Some(Witness {
        field: field.to_string(),
        component,
        derivative_index: std::array::from_fn(|mu| x_exp(x, mu)),
        monomial: bits(gmask(*k)),
        coefficient: c.to_string(),
    })
}

fn bits(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn digits(mask: u32) -> String {
    bits(mask).iter().map(|i| i.to_string()).collect()
}
