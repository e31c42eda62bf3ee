use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = gluck_cli::Cli::parse();
    let out = gluck_cli::run(&cli);
    if !out.stdout.is_empty() {
        print!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        eprint!("{}", out.stderr);
    }
    ExitCode::from(out.code)
}
