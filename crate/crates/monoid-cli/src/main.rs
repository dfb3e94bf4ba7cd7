//! Exit codes: 0 success, 1 usage, 2 domain error (error name on stderr).

mod args;
mod commands;
mod drivers;
mod output;

use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::Cli;

/// Die silently on a closed pipe (`monoid ... | head`) instead of
/// panicking in println.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Some(n) = cli.threads {
        // fails only if a pool exists already, which is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let start = Instant::now();
    match commands::run(&cli.command) {
        Ok(outcome) => output::emit(cli.json, cli.stable, outcome, start.elapsed()),
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            std::process::exit(2);
        }
    }
}
