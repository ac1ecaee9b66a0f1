mod args;
mod commands;
mod input;
mod sweep;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Outcome;

fn dispatch(command: &Command) -> anyhow::Result<Outcome> {
    if let Command::Sweep(args) = command {
        return sweep::run(&sweep::SweepSpec::from_args(args)?);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = match command {
        Command::Enumerate(family) => commands::enumerate(&mut out, family),
        Command::Promote { input, power } => commands::promote_cmd(&mut out, input, *power),
        Command::Orbit { input, step } => commands::orbit_cmd(&mut out, input, *step),
        Command::Cocharge { word, input } => commands::cocharge_cmd(&mut out, word.as_deref(), input),
        Command::Kostka { family, modified } => commands::kostka_cmd(&mut out, family, *modified),
        Command::Phi { input } => commands::phi_cmd(&mut out, input),
        Command::PhiInverse { family, multiset } => commands::phi_inverse_cmd(&mut out, family, multiset),
        Command::CspVerify { family, format } => commands::csp_verify_cmd(&mut out, family, *format),
        Command::SeedExamples => commands::seed_examples(&mut out),
        Command::Sweep(_) => unreachable!("handled above"),
    };
    out.flush()?;
    outcome
}

/// Internal inconsistencies are failed checks; everything else is a violated precondition.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<hookcsp::Error>() {
        Some(hookcsp::Error::Inconsistency(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
