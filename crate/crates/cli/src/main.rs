use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hopfchrom_cli::{run, CliError, Command, RunOptions};

/// Chromatic quasisymmetric class functions, coloring complexes and their
/// certificates, computed exactly from a JSON job file.
#[derive(Parser, Debug)]
#[command(name = "hopfchrom", version)]
struct Args {
    command: Command,
    /// Job file; `-` reads standard input.
    #[arg(long, short)]
    input: PathBuf,
    /// Write the JSON result here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Ground-set cap; values above the default need --allow-large.
    #[arg(long)]
    max_ground: Option<usize>,
    /// Acknowledge a raised ground-set cap.
    #[arg(long)]
    allow_large: bool,
    /// Colors for the brute-force oracle (default: number of labels).
    #[arg(long)]
    colors: Option<usize>,
    /// `certify` only this pair; requires --beta.
    #[arg(long, requires = "beta")]
    alpha: Option<String>,
    #[arg(long, requires = "alpha")]
    beta: Option<String>,
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn emit(value: &serde_json::Value, output: &Option<PathBuf>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = RunOptions {
        workers: args.workers,
        max_ground: args.max_ground,
        allow_large: args.allow_large,
        colors: args.colors,
        pair: args.alpha.zip(args.beta),
    };
    let result = read_input(&args.input).and_then(|text| run(args.command, &text, &opts));
    let outcome = match result {
        Ok(v) => emit(&v, &args.output),
        Err(CliError::Verification(v)) => emit(&v, &args.output).and(Err(CliError::Verification(serde_json::Value::Null))),
        Err(e) => Err(e),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verification(_)) {
                eprintln!("hopfchrom: {e}");
            } else {
                eprintln!("hopfchrom: verification failed");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
