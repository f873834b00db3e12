use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tourney_codes_cli::{configure_threads, run, Cli, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads(std::env::var("TOURNEY_CODES_THREADS").ok().as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(Status::from(&e).code() as u8);
    }
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let out = run(&cli, &echo);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status.code() as u8)
}
