use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use bicross_core::{Error, Field};
use clap::{Parser, Subcommand};

mod commands;
mod specs;

use commands::Outcome;
use specs::{Ctx, ALGEBRA_HELP, PAIR_HELP};

/// A user mistake: bad specifier, flag or file.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Exact computations with Hopf algebras, matched pairs and bicrossed
/// products.
///
/// Exit status: 0 when every check passes, 1 when a mathematical check
/// fails, 2 on bad input or usage.
#[derive(Parser)]
#[command(name = "bicross", version)]
struct Cli {
    /// Base field: `Q` or `Fp:<p>` with p an odd prime.
    #[arg(long, global = true, default_value = "Q")]
    field: String,

    /// Shorthand for `--field Fp:<p>`.
    #[arg(long, global = true)]
    prime: Option<u64>,

    /// λ for `h16` and `canonical` specifiers without an inline value.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,

    /// Print the JSON document instead of the summary.
    #[arg(long, global = true)]
    json: bool,

    /// Write the JSON document to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms.
    Verify {
        #[arg(help = ALGEBRA_HELP)]
        algebra: String,
    },
    /// Group-likes, skew-primitives, integrals and semisimplicity.
    Probe {
        #[arg(help = ALGEBRA_HELP)]
        algebra: String,
    },
    /// Matched pairs.
    Mp {
        #[command(subcommand)]
        command: MpCommand,
    },
    /// Build the bicrossed product of a matched pair.
    Bicross {
        #[arg(help = PAIR_HELP)]
        pair: String,
    },
    /// Decide whether two bicrossed products are isomorphic (finite fields).
    Iso {
        #[arg(help = PAIR_HELP)]
        source: String,
        #[arg(help = PAIR_HELP)]
        target: String,
    },
    /// Automorphism group of a bicrossed product (finite fields).
    Aut {
        #[arg(help = PAIR_HELP)]
        pair: String,
    },
    /// Drinfel'd double of an algebra.
    Double {
        #[arg(help = ALGEBRA_HELP, default_value = "h4")]
        algebra: String,
        /// Also test whether the double is isomorphic to this pair's product.
        #[arg(long)]
        against: Option<String>,
    },
    /// Run the full pipeline for (H4, H4) over F_p and emit one report.
    Reproduce,
}

#[derive(Subcommand)]
enum MpCommand {
    /// Check the matched pair axioms.
    Check {
        #[arg(help = PAIR_HELP)]
        pair: String,
    },
    /// The canonical pair for `--lambda`.
    Canonical,
    /// Enumerate all matched pairs on (H4, H4) over F_p.
    Census,
}

impl Cli {
    fn field(&self) -> Result<Field> {
        let parsed = self.field.parse::<Field>().map_err(|e| UsageError(e.to_string()))?;
        match self.prime {
            None => Ok(parsed),
            Some(p) => {
                let f = Field::prime(p).map_err(|e| UsageError(e.to_string()))?;
                if self.field != "Q" && parsed != f {
                    return Err(UsageError(format!("--field {} conflicts with --prime {p}", self.field)).into());
                }
                Ok(f)
            }
        }
    }

    fn prime(&self) -> Result<u64> {
        match self.field()? {
            Field::Prime(p) => Ok(p),
            Field::Rational => Err(UsageError("this command needs --prime <p> or --field Fp:<p>".into()).into()),
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let ctx = Ctx { field: cli.field()?, lambda: cli.lambda.clone() };
    match &cli.command {
        Command::Verify { algebra } => commands::verify(&ctx, algebra),
        Command::Probe { algebra } => commands::probe(&ctx, algebra),
        Command::Mp { command } => match command {
            MpCommand::Check { pair } => commands::mp_check(&ctx, pair),
            MpCommand::Canonical => commands::mp_canonical(&ctx),
            MpCommand::Census => commands::mp_census(cli.prime()?),
        },
        Command::Bicross { pair } => commands::bicross(&ctx, pair),
        Command::Iso { source, target } => commands::iso(&ctx, source, target),
        Command::Aut { pair } => commands::aut(&ctx, pair),
        Command::Double { algebra, against } => commands::double(&ctx, algebra, against.as_deref()),
        Command::Reproduce => commands::reproduce(cli.prime()?),
    }
}

/// 1 for a failed mathematical check, 2 for everything the user can fix.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::AxiomsFailed(_) | Error::PairCheckFailed(_) | Error::Internal(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{}\n", outcome.json)) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        println!("{}", outcome.json);
    } else {
        print!("{}", outcome.text);
    }
    ExitCode::from(if outcome.passed { 0 } else { 1 })
}
