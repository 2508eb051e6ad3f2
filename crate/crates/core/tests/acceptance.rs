//! One line per acceptance criterion. Criteria with a documented deviation
//! print FAIL but only fail the run if a check outside the documented set
//! fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sugra_bv::report::Check;
use sugra_bv::runner::{run, RunConfig};

struct Criterion {
    number: u8,
    title: &'static str,
    suites: &'static [&'static str],
    cases: Option<usize>,
    budget: Duration,
    selects: fn(&str) -> bool,
    /// Checks known to fail; empty when the criterion must pass outright.
    deviates: fn(&str) -> bool,
}

fn any(_: &str) -> bool {
    true
}

fn none(_: &str) -> bool {
    false
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "gamma matrices and charge conjugation",
            suites: &["gamma_identities"],
            cases: None,
            budget: secs(5),
            selects: any,
            deviates: |id| id == "gamma:3",
        },
        Criterion { number: 2, title: "flip relations", suites: &["flip"], cases: Some(50), budget: secs(30), selects: any, deviates: none },
        Criterion {
            number: 3,
            title: "Fierz identities",
            suites: &["fierz"],
            cases: Some(25),
            budget: secs(60),
            selects: any,
            deviates: |id| id.starts_with("fierz:1:") || id.starts_with("fierz:lemma:"),
        },
        Criterion {
            number: 4,
            title: "diagram rank certification",
            suites: &["diagram_ranks"],
            cases: Some(10),
            budget: secs(60),
            selects: any,
            deviates: none,
        },
        Criterion { number: 5, title: "splitting lemmata", suites: &["splittings"], cases: Some(20), budget: secs(60), selects: any, deviates: none },
        Criterion {
            number: 6,
            title: "variational identity",
            suites: &["variational"],
            cases: Some(10),
            budget: secs(120),
            selects: any,
            deviates: none,
        },
        Criterion {
            number: 7,
            title: "delta_chi omega closed form",
            suites: &["delta_chi_omega"],
            cases: Some(10),
            budget: secs(120),
            selects: |id| id == "dco:solve" || id == "dco:closed",
            deviates: none,
        },
        Criterion {
            number: 8,
            title: "Q0 squared closed forms",
            suites: &["q0_squared"],
            cases: Some(5),
            budget: secs(600),
            selects: |id| {
                id.starts_with("q0sq:xi:") || matches!(id, "q0sq:chi" | "q0sq:e" | "q0sq:psi" | "q0sq:e_omega" | "q0sq:c")
            },
            deviates: |id| matches!(id, "q0sq:psi" | "q0sq:e_omega"),
        },
        Criterion {
            number: 9,
            title: "quadratic sector",
            suites: &["quadratic"],
            cases: Some(5),
            budget: secs(600),
            selects: |id| id.starts_with("qq:"),
            deviates: |id| id == "qq:square_e",
        },
        Criterion {
            number: 10,
            title: "classical master equation",
            suites: &["cme"],
            cases: Some(3),
            budget: secs(1800),
            selects: any,
            deviates: |id| {
                matches!(id, "cme:t0:psi" | "cme:t0:e_omega" | "cme:t0:e2_c" | "cme:t2:e") || id.starts_with("cme:t1:")
            },
        },
        Criterion {
            number: 11,
            title: "negative controls",
            suites: &["negative_controls"],
            cases: None,
            budget: secs(1800),
            selects: any,
            deviates: none,
        },
    ]
}

struct Outcome {
    passed: bool,
    ok: bool,
    detail: String,
}

fn evaluate(c: &Criterion) -> Outcome {
    let cfg = RunConfig { suites: c.suites.iter().map(|s| s.to_string()).collect(), cases: c.cases, ..Default::default() };
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => return Outcome { passed: false, ok: false, detail: format!("config error: {e}") },
    };
    let checks: Vec<&Check> = report.checks.iter().filter(|k| (c.selects)(&k.check_id)).collect();
    if checks.is_empty() {
        return Outcome { passed: false, ok: false, detail: "no checks ran".into() };
    }
    let failed: Vec<&Check> = checks.iter().copied().filter(|k| !k.passed()).collect();
    let mut unexpected: Vec<&str> = failed.iter().filter(|k| !(c.deviates)(&k.check_id)).map(|k| k.check_id.as_str()).collect();
    unexpected.dedup();
    let mut ids: Vec<&str> = failed.iter().map(|k| k.check_id.as_str()).collect();
    ids.sort();
    ids.dedup();
    let detail = if failed.is_empty() {
        format!("{} checks", checks.len())
    } else if unexpected.is_empty() {
        format!("{} of {} checks fail, all documented: {}", failed.len(), checks.len(), ids.join(" "))
    } else {
        format!("{} of {} checks fail, undocumented: {}", failed.len(), checks.len(), unexpected.join(" "))
    };
    Outcome { passed: failed.is_empty(), ok: unexpected.is_empty(), detail }
}

fn determinism() -> Outcome {
    let cfg = RunConfig {
        suites: ["flip", "fierz", "splittings", "q0_squared"].iter().map(|s| s.to_string()).collect(),
        cases: Some(2),
        seed: 11,
        ..Default::default()
    };
    let a = run(&cfg).map(|r| r.to_json_lines());
    let b = run(&cfg).map(|r| r.to_json_lines());
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => Outcome { passed: true, ok: true, detail: format!("{} bytes identical", a.len()) },
        (Ok(_), Ok(_)) => Outcome { passed: false, ok: false, detail: "reports differ".into() },
        (Err(e), _) | (_, Err(e)) => Outcome { passed: false, ok: false, detail: format!("config error: {e}") },
    }
}

fn main() -> ExitCode {
    let mut ok = true;
    let line = |n: u8, title: &str, o: &Outcome, t: Duration, budget: Option<Duration>| {
        let over = budget.is_some_and(|b| t > b);
        let verdict = if o.passed && !over { "PASS" } else { "FAIL" };
        let limit = budget.map(|b| format!(" / {}s", b.as_secs())).unwrap_or_default();
        let late = if over { ", over time budget" } else { "" };
        println!("criterion {n:>2} {verdict} {title} ({:.1}s{limit}{late}): {}", t.as_secs_f64(), o.detail);
        !over
    };
    for c in criteria() {
        let start = Instant::now();
        let o = evaluate(&c);
        ok &= line(c.number, c.title, &o, start.elapsed(), Some(c.budget)) && o.ok;
    }
    let start = Instant::now();
    let o = determinism();
    ok &= line(12, "determinism", &o, start.elapsed(), None) && o.ok;
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
