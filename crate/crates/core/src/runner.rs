//! Batch runs: suite selection, seeding, validation and report rendering.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bv::q_total::LCorrection;
use crate::bv::qq::PsiVariant;
use crate::fiber::MAX_JET_ORDER;
use crate::report::{Check, Status};
use crate::suites::{run_case, CaseParams, Suite};

/// Largest number of odd generators a Grassmann monomial mask can hold.
pub const MAX_ODD_GENERATORS: usize = 32;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format `{s}` (expected json or text)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    /// Suite names, or `all`.
    pub suites: Vec<String>,
    pub seed: u64,
    /// Cases per suite; each suite has its own default when unset.
    pub cases: Option<usize>,
    pub odd_generators: usize,
    pub jet_order: u8,
    pub format: Format,
    pub fail_fast: bool,
    pub q_psi_variant: PsiVariant,
    pub disable_l_correction: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: vec!["all".to_string()],
            seed: 0,
            cases: None,
            odd_generators: 12,
            jet_order: 2,
            format: Format::Json,
            fail_fast: false,
            q_psi_variant: PsiVariant::default(),
            disable_l_correction: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("{0}")]
    UnknownSuite(String),
    #[error("no suites selected")]
    NoSuites,
    #[error("--cases must be at least 1")]
    NoCases,
    #[error("suite `{suite}` needs at least {need} odd generators, got {have}; raise --odd-generators")]
    TooFewGenerators { suite: Suite, need: usize, have: usize },
    #[error("at most {MAX_ODD_GENERATORS} odd generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("suite `{suite}` needs jet order at least {need}, got {have}; raise --jet-order")]
    JetOrderTooLow { suite: Suite, need: u8, have: u8 },
    #[error("jet order at most {MAX_JET_ORDER} is supported, got {0}")]
    JetOrderTooHigh(u8),
}

impl RunConfig {
    /// The selected suites in canonical order, without duplicates.
    pub fn selected(&self) -> Result<Vec<Suite>, ConfigError> {
        let mut out = Vec::new();
        for name in &self.suites {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse::<Suite>().map_err(ConfigError::UnknownSuite)?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        Ok(out)
    }

    /// Checks the algebra and jet budget against every selected suite.
    pub fn validate(&self) -> Result<Vec<Suite>, ConfigError> {
        let suites = self.selected()?;
        if self.cases == Some(0) {
            return Err(ConfigError::NoCases);
        }
        if self.odd_generators > MAX_ODD_GENERATORS {
            return Err(ConfigError::TooManyGenerators(self.odd_generators));
        }
        if self.jet_order > MAX_JET_ORDER {
            return Err(ConfigError::JetOrderTooHigh(self.jet_order));
        }
        for &suite in &suites {
            let need = suite.min_odd_generators();
            if self.odd_generators < need {
                return Err(ConfigError::TooFewGenerators { suite, need, have: self.odd_generators });
            }
            let need = suite.min_jet_order();
            if self.jet_order < need {
                return Err(ConfigError::JetOrderTooLow { suite, need, have: self.jet_order });
            }
        }
        Ok(suites)
    }

    pub fn params(&self) -> CaseParams {
        CaseParams {
            odd_generators: self.odd_generators,
            jet_order: self.jet_order,
            psi_variant: self.q_psi_variant,
            l_correction: if self.disable_l_correction { LCorrection::Off } else { LCorrection::Full },
        }
    }

    pub fn cases_for(&self, suite: Suite) -> usize {
        if !suite.is_random() {
            return 1;
        }
        self.cases.unwrap_or_else(|| suite.default_cases())
    }
}

/// Seeds of the cases of `suite`: one ChaCha8 stream per suite, so a suite's
/// cases do not depend on which other suites run.
pub fn case_seeds(seed: u64, suite: Suite, n: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite as u64);
    (0..n).map(|_| rng.next_u64()).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json_lines(),
            Format::Text => self.to_table(),
        }
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("checks serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:<18} {:>20}  {:<34} {:<10} {:>7}  {}\n", "suite", "case_seed", "check", "status", "terms", "result");
        for c in &self.checks {
            let status = match c.status {
                Status::ExactZero => "zero",
                Status::Witness => "witness",
                Status::Skipped => "skipped",
            };
            let verdict = if c.passed() { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "{:<18} {:>20}  {:<34} {:<10} {:>7}  {}\n",
                c.suite, c.case_seed, c.check_id, status, c.residual_terms, verdict
            ));
        }
        let mut suites: Vec<&str> = self.checks.iter().map(|c| c.suite.as_str()).collect();
        suites.dedup();
        out.push('\n');
        for s in suites {
            let all: Vec<&Check> = self.checks.iter().filter(|c| c.suite == s).collect();
            let failed = all.iter().filter(|c| !c.passed()).count();
            let skipped = all.iter().filter(|c| c.status == Status::Skipped).count();
            out.push_str(&format!("{s}: {} checks, {failed} failed, {skipped} skipped\n", all.len()));
        }
        out
    }
}

/// Runs every selected suite. Cases run in parallel; the report is assembled
/// in suite and case order. With `fail_fast`, cases run in order and the run
/// stops after the first case with a failing check.
pub fn run(config: &RunConfig) -> Result<RunReport, ConfigError> {
    let suites = config.validate()?;
    let params = config.params();
    let mut report = RunReport::default();
    for suite in suites {
        let seeds = case_seeds(config.seed, suite, config.cases_for(suite));
        if config.fail_fast {
            for (i, &s) in seeds.iter().enumerate() {
                let rec = run_case(suite, &params, i, s);
                let failed = rec.checks.iter().any(|c| !c.passed());
                report.checks.extend(rec.checks);
                if failed {
                    return Ok(report);
                }
            }
        } else {
            let recs: Vec<_> = seeds.par_iter().enumerate().map(|(i, &s)| run_case(suite, &params, i, s)).collect();
            report.checks.extend(recs.into_iter().flat_map(|r| r.checks));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_a_config_error() {
        let cfg = RunConfig { suites: vec!["nope".into()], ..Default::default() };
        assert!(matches!(cfg.validate(), Err(ConfigError::UnknownSuite(_))));
    }

    #[test]
    fn budget_is_validated() {
        let cfg = RunConfig { suites: vec!["cme".into()], jet_order: 1, ..Default::default() };
        assert!(matches!(cfg.validate(), Err(ConfigError::JetOrderTooLow { .. })));
        let cfg = RunConfig { suites: vec!["cme".into()], odd_generators: 3, ..Default::default() };
        assert!(matches!(cfg.validate(), Err(ConfigError::TooFewGenerators { .. })));
        let cfg = RunConfig { odd_generators: 40, ..Default::default() };
        assert!(matches!(cfg.validate(), Err(ConfigError::TooManyGenerators(40))));
    }

    #[test]
    fn seeds_are_per_suite() {
        let a = case_seeds(7, Suite::Flip, 3);
        assert_eq!(a, case_seeds(7, Suite::Flip, 5)[..3]);
        assert_ne!(a, case_seeds(7, Suite::Fierz, 3));
    }

    #[test]
    fn all_expands_in_order() {
        let cfg = RunConfig { suites: vec!["flip".into(), "all".into()], ..Default::default() };
        assert_eq!(cfg.selected().unwrap(), Suite::ALL.to_vec());
    }
}
