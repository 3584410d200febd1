use std::process::ExitCode;

use clap::Parser;
use resonance::args::Cli;

fn main() -> ExitCode {
    resonance::app::main_with(Cli::parse())
}
