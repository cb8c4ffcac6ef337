//! `sympbranch`: queries, enumeration, straightening, degeneration and
//! verification for the symplectic branching algebra.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sympbranch::verify::Suite;

#[derive(Parser)]
#[command(name = "sympbranch", version, about = "Exact branching algebra computations for (Sp_2n, Sp_2n-2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Branching multiplicity of the component F/D.
    Mult {
        /// Inner diagram D, comma separated ("" for empty).
        d: String,
        /// Outer diagram F, comma separated ("" for empty).
        f: String,
        #[arg(long)]
        n: usize,
        /// Also list every middle diagram E.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Standard monomial basis of the component F/D.
    Basis {
        d: String,
        f: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Straighten a polynomial such as "[I1,K0] - 2*[J1,J'0]".
    Straighten {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        n: usize,
        /// Use the one-term Hibi rule instead.
        #[arg(long)]
        hibi: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run seeded exact verification suites; prints a JSON report.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "SYMPBRANCH_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Restrict the independence suite to F/D (needs --f as well).
        #[arg(long, requires = "f")]
        d: Option<String>,
        #[arg(long, requires = "d")]
        f: Option<String>,
        /// Part bound for sampled shapes and the independence sweep.
        #[arg(long, default_value_t = 2)]
        max_part: u32,
    },
    /// Order-preserving patterns of the basis of F/D.
    Degenerate {
        d: String,
        f: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Invariance,
    Torus,
    Independence,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Relations => vec![Suite::Relations],
            SuiteArg::Invariance => vec![Suite::Invariance],
            SuiteArg::Torus => vec![Suite::Torus],
            SuiteArg::Independence => vec![Suite::Independence],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Mult { d, f, n, list, json } => commands::mult(&d, &f, n, list, json),
        Command::Basis { d, f, n, json } => commands::basis(&d, &f, n, json),
        Command::Straighten { expr, n, hibi, json } => commands::straighten(&expr, n, hibi, json),
        Command::Verify { suite, n, seed, trials, d, f, max_part } => {
            let shape = d.zip(f);
            commands::verify(&suite.suites(), n, seed, trials, shape.as_ref().map(|(d, f)| (d.as_str(), f.as_str())), max_part)
        }
        Command::Degenerate { d, f, n, json } => commands::degenerate(&d, &f, n, json),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
