use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use cycloper_cli::{parse_instantiation, parse_problem, run, CliError, Command};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Text,
    Json,
}

/// Exact computations with cyclotomic opers.
#[derive(Parser, Debug)]
#[command(name = "cycloper", version)]
struct Args {
    /// Problem file (JSON).
    #[arg(long)]
    problem: PathBuf,
    #[arg(long, value_enum)]
    command: Command,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
    /// Parameter bindings, `name=value,...`.
    #[arg(long, default_value = "")]
    instantiate: String,
}

fn execute(args: &Args) -> Result<String, CliError> {
    let bindings = parse_instantiation(&args.instantiate)?;
    let problem = parse_problem(&args.problem, &bindings)?;
    let report = run(&problem, args.command)?;
    Ok(match args.output {
        Output::Text => report.to_text(),
        Output::Json => report.to_json(),
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
