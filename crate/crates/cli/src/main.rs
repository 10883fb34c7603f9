//! `lqt`: homology tables, isotypic decompositions and verification sweeps.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure (the
//! witness goes to stderr), 2 on unusable input.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use lqt_core::tables::ComplexKind;
use lqt_core::verify::{Report, RunOptions, VerifyKind, DEFAULT_MAX_BASIS};

use error::InputError;

#[derive(Parser, Debug)]
#[command(name = "lqt", version, about = "Exact Lie algebra homology of matrices and the Loday-Quillen-Tsygan maps")]
struct Cli {
    /// Refuse jobs whose largest basis exceeds this many elements.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BASIS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_basis: u64,
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "LQT_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Omit timing fields so reruns are byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology dimensions and representatives of a complex.
    Homology {
        /// ce, cyclic or bar.
        #[arg(long, value_parser = |s: &str| s.parse::<ComplexKind>().map_err(|e| e.to_string()))]
        complex: ComplexKind,
        /// Structure-constant JSON file, or a corpus name (k, uv, zero1, zero2, dual, nil3).
        #[arg(long)]
        algebra: PathBuf,
        /// Matrix size for the Chevalley-Eilenberg complex.
        #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isotypic decomposition of the chains of gl_n A under gl_n k.
    Decompose {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        /// CSV table instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification sweep and print its report.
    Verify {
        #[arg(value_parser = parse_kind)]
        kind: VerifyKind,
        #[arg(long)]
        config: PathBuf,
        /// CSV dimension table instead of the JSON report.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide pro-H-unitality of a pro-algebra degree by degree.
    Hunital {
        #[arg(long)]
        pro: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rmax: u64,
    },
}

fn parse_kind(s: &str) -> Result<VerifyKind, String> {
    VerifyKind::parse(s).ok_or_else(|| {
        let names: Vec<&str> = VerifyKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn report_failures(report: &Report) {
    for c in &report.checks {
        if let Some(w) = &c.witness {
            let verdict = if c.ok { "witness" } else { "FAIL" };
            eprintln!("{verdict} {} {}: {}", c.name, serde_json::to_string(&c.cell).unwrap_or_default(), w);
        } else if !c.ok {
            eprintln!("FAIL {} {}", c.name, serde_json::to_string(&c.cell).unwrap_or_default());
        }
    }
}

fn execute(cli: Cli) -> Result<bool, InputError> {
    let limit = cli.max_basis as u128;
    match cli.command {
        Command::Homology { complex, algebra, n, max_degree, out } => {
            let t = commands::homology(complex, &algebra, n as usize, max_degree as usize, limit)?;
            commands::emit(&pretty(&t), out.as_ref())?;
            Ok(true)
        }
        Command::Decompose { algebra, n, max_degree, csv } => {
            let t = commands::decompose(&algebra, n as usize, max_degree as usize, limit)?;
            let text = if csv { t.to_csv() } else { pretty(&t) };
            commands::emit(&text, None)?;
            Ok(true)
        }
        Command::Verify { kind, config, csv, out } => {
            let opts = RunOptions { jobs: cli.jobs.unwrap_or(0) as usize, max_basis: limit };
            let mut report = commands::verify(kind, &config, opts)?;
            if cli.deterministic {
                report = report.deterministic();
            }
            let text = if csv { report.to_csv() } else { pretty(&report) };
            commands::emit(&text, out.as_ref())?;
            report_failures(&report);
            Ok(report.passed)
        }
        Command::Hunital { pro, rmax } => {
            let r = commands::hunital(&pro, rmax as usize, limit)?;
            commands::emit(&pretty(&r), None)?;
            Ok(r.h_unital())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
