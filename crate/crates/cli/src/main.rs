//! `socnet` — structural statistics, node metrics, and sampling robustness
//! for network edge lists.
//!
//! Exit codes: 0 success, 2 usage, 3 input parse error, 4 I/O error,
//! 5 computation error (empty graph, unreachable pairs, exhausted sampler,
//! degenerate distribution, ...).

mod args;
mod commands;
mod manifest;

use clap::Parser;
use socnet_core::Error;

fn main() {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::NoEdges => 3,
        Error::Io(_) => 4,
        Error::InSample { source, .. } => exit_code(source),
        _ => 5,
    }
}
