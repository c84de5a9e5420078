use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;

use omega_lie_cli::{execute, Cli, CliError, EXIT_OK};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        // The reader went away (e.g. `| head`); nothing left to report.
        Err(CliError::Output(e)) if e.kind() == ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            if cli.command.wants_json() {
                let text = serde_json::to_string_pretty(&e.report()).expect("error reports serialize");
                let _ = writeln!(out, "{text}");
            }
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
