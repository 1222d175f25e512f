use std::process::ExitCode;

use clap::Parser;
use fulton::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match execute(&cli).and_then(|report| {
        report.write(cli.common.format, cli.common.out.as_deref())?;
        eprintln!(
            "{}: {} checks, {} failures, {} ms",
            report.command,
            report.checks.len(),
            report.failures(),
            report.wall_time_ms
        );
        Ok(report.exit_code())
    }) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fulton: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
