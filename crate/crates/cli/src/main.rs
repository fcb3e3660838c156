use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use semistar_cli::exec::DEFAULT_SEED;
use semistar_cli::{execute, parse_session, succeeded, ExecConfig};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Runs a session file (or standard input) of ring, ideal and closure
/// declarations and commands.
#[derive(Parser, Debug)]
#[command(name = "semistar", version)]
struct Args {
    /// Session file; standard input when absent or `-`.
    input: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Seed of every sampling check.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Degree bound of sampled test elements.
    #[arg(long)]
    degree_bound: Option<u32>,
    /// Stop at the first command that errors or fails.
    #[arg(long)]
    fail_fast: bool,
    /// Comma-separated regular elements added to the witness pool.
    #[arg(long, value_delimiter = ',')]
    witnesses: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match args.input.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut s) {
                eprintln!("error: cannot read standard input: {e}");
                return ExitCode::from(2);
            }
            s
        }
        Some(path) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {path}: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(d) => {
            eprintln!("error: {d}");
            return ExitCode::from(2);
        }
    };
    let cfg = ExecConfig {
        seed: args.seed,
        degree_bound: args.degree_bound,
        fail_fast: args.fail_fast,
        witnesses: args.witnesses,
    };
    let records = execute(&session, &cfg);
    for r in &records {
        match args.format {
            Format::Text => print!("{}", r.to_text()),
            Format::Json => println!("{}", r.to_json()),
        }
    }
    if succeeded(&records) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
