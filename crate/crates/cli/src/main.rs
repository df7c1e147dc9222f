mod args;
mod commands;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind as ClapErrorKind;
use clap::Parser;

use args::{Cli, Command};
use output::{error_json, Failure};

fn run(cli: &Cli) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Coeffs(a) => commands::coeffs(a, &mut out)?,
        Command::Bounds(a) => commands::bounds(a, &mut out)?,
        Command::Verify(a) => commands::verify(a, &mut out)?,
        Command::Table(a) => commands::table(a, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let failure = Failure::usage(message.join(" ").trim_start_matches("error: "));
            eprintln!("{}", error_json(&failure));
            return ExitCode::from(failure.kind.exit_code());
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{}", error_json(&failure));
            ExitCode::from(failure.kind.exit_code())
        }
    }
}
