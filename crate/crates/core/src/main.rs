use std::process::ExitCode;

use clap::Parser;
use griesskit::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = run(&config);
    for line in &outcome.diagnostics {
        eprintln!("{line}");
    }
    if !outcome.output.is_empty() {
        match &config.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &outcome.output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            None => print!("{}", outcome.output),
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
