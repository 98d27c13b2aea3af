use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use intnum_cli::{exit, run, JobRequest, Subcommand};
use intnum_core::bkk::OracleConfig;

/// Exact mixed volumes, BKK counts, flag degrees and intersection algebras.
#[derive(Parser, Debug)]
#[command(name = "intnum", version)]
struct Args {
    #[arg(value_enum)]
    command: Subcommand,

    /// Input document: a path, `-` for stdin, or inline JSON starting with `{`.
    #[arg(long, short, default_value = "-")]
    input: String,

    /// Report destination: a path or `-` for stdout.
    #[arg(long, short, default_value = "-")]
    output: String,

    /// Seed for the root-count oracles (verify-bkk).
    #[arg(long, default_value_t = OracleConfig::default().seed)]
    seed: u64,

    /// Oracle trials; the modal root count is reported.
    #[arg(long, default_value_t = OracleConfig::default().trials)]
    trials: usize,

    /// Oracle coefficients are drawn from [-bound, bound] without 0.
    #[arg(long, default_value_t = OracleConfig::default().coeff_bound)]
    coeff_bound: i64,

    /// Indent the JSON report.
    #[arg(long)]
    pretty: bool,
}

fn read_input(source: &str) -> io::Result<String> {
    if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if source.trim_start().starts_with('{') {
        Ok(source.to_string())
    } else {
        fs::read_to_string(PathBuf::from(source))
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input = match read_input(&args.input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("intnum: cannot read {}: {e}", args.input);
            return ExitCode::from(exit::MALFORMED as u8);
        }
    };
    let req = JobRequest {
        command: args.command,
        input,
        seed: args.seed,
        trials: args.trials,
        coeff_bound: args.coeff_bound,
        pretty: args.pretty,
    };
    let outcome = run(&req);
    let written = if args.output == "-" {
        io::stdout().write_all(outcome.report.as_bytes())
    } else {
        fs::write(&args.output, &outcome.report)
    };
    if let Err(e) = written {
        eprintln!("intnum: cannot write {}: {e}", args.output);
        return ExitCode::from(exit::IO as u8);
    }
    if let Some(msg) = &outcome.error {
        eprintln!("intnum {}: {msg}", req.command);
    }
    ExitCode::from(outcome.exit_code as u8)
}
