use std::process::ExitCode;

use clap::Parser;
use stonework_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, report) = run(&cli.command);
    let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
    if code >= 2 {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
