//! Command-line front end: quandle validation, presentation emission,
//! coloring counts, plat invariants, family tables, and slide moves.

mod cli;

use std::process::ExitCode;

fn main() -> ExitCode {
    cli::run()
}
