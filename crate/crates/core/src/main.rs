use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use circulant_chi::cli::{self, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let report = match cli::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(cli::status_for(&e) as u8);
        }
    };
    eprint!("{}", report.diagnostics);
    let written = match &cfg.out {
        Some(path) => fs::write(path, &report.output),
        None => std::io::stdout().write_all(report.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(cli::EXIT_INTERNAL as u8);
    }
    ExitCode::from(report.status as u8)
}
