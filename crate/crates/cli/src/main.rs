use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use fockcanon_cli::args::Cli;
use fockcanon_cli::commands;
use fockcanon_cli::formats::emit;
use fockcanon_cli::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.to_string().trim_end().to_owned())),
    };
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    if let Err(e) = emit(cli.global.output.as_deref(), &outcome.text) {
        return fail(&e);
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprint!("{}", e.to_json());
    ExitCode::from(e.exit_code() as u8)
}
