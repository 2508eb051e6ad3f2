use std::process::ExitCode;

use clap::Parser;
use sugra_bv::bv::qq::PsiVariant;
use sugra_bv::runner::{run, Format, RunConfig};

/// Exact residual checks for the BV formulation of N=1, D=4 supergravity.
#[derive(Parser, Debug)]
#[command(name = "sugra-bv", version)]
struct Args {
    /// Suite to run, or `all`. May be repeated.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cases per suite (default: a per-suite count).
    #[arg(long)]
    cases: Option<usize>,
    /// Odd Grassmann generators, the shift generator included.
    #[arg(long, default_value_t = 12)]
    odd_generators: usize,
    #[arg(long, default_value_t = 2)]
    jet_order: u8,
    #[arg(long, default_value = "json")]
    format: Format,
    #[arg(long)]
    fail_fast: bool,
    /// Bracket reading in the kappa terms of the gravitino correction.
    #[arg(long, default_value = "section4")]
    q_psi_variant: PsiVariant,
    /// Drops the l correction from Q_c (negative control).
    #[arg(long)]
    disable_l_correction: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        suites: args.suites,
        seed: args.seed,
        cases: args.cases,
        odd_generators: args.odd_generators,
        jet_order: args.jet_order,
        format: args.format,
        fail_fast: args.fail_fast,
        q_psi_variant: args.q_psi_variant,
        disable_l_correction: args.disable_l_correction,
    };
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render(config.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("configuration error: {e}");
            ExitCode::from(2)
        }
    }
}
