mod args;
mod commands;
mod request;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use request::{CliResult, RequestDocument};

fn run(cli: Cli) -> CliResult<()> {
    let doc = if cli.stdin {
        RequestDocument::from_reader(io::stdin().lock())?
    } else {
        RequestDocument::default()
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::CheckLocc(a) => commands::check_locc(a, doc, &mut out),
        Command::Analyze(a) => commands::analyze_pair(a, doc, &mut out),
        Command::Validate(a) => commands::validate(a, doc, &mut out),
        Command::Sweep(a) => commands::sweep_grid(a, doc, &mut out),
        Command::Construct(a) => commands::construct(a, doc, &mut out),
        Command::Lorenz(a) => commands::lorenz(a, doc, &mut out),
    };
    let _ = out.flush();
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("entcat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
