use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use resonance_core::{QuotientMode, WaveKind};

#[derive(Debug, Parser)]
#[command(name = "resonance", version, about = "Exact enumeration of resonant wave-vector tuples")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Re-check every record of a solutions file independently.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Wave type: gravity4 or planetary3.
    #[arg(long, value_parser = parse_wave)]
    pub wave: Option<WaveKind>,

    /// Domain half-width D; vectors satisfy |m|, |n| <= D.
    #[arg(long)]
    pub domain: Option<u32>,

    /// Write solutions as JSON lines.
    #[arg(long, value_name = "PATH")]
    pub solutions: Option<PathBuf>,

    /// Write run statistics as metric,value CSV.
    #[arg(long, value_name = "PATH")]
    pub stats: Option<PathBuf>,

    /// Write cumulative per-band counts (plot data) as CSV.
    #[arg(long, value_name = "PATH")]
    pub growth: Option<PathBuf>,

    /// Write the decomposition-count distribution of multiplicity-1 classes.
    #[arg(long, value_name = "PATH")]
    pub dec_distribution: Option<PathBuf>,

    /// Counting convention for emitted tuples.
    #[arg(long, value_parser = parse_quotient, default_value = "none")]
    pub quotient: QuotientMode,

    /// Compare the pipeline against the brute-force oracle (small D only).
    #[arg(long)]
    pub verify_oracle: bool,

    /// Class-list cache file; created if missing, reused if it matches.
    #[arg(long, value_name = "PATH")]
    pub classes_cache: Option<PathBuf>,

    /// Worker threads; 1 runs sequentially.
    #[arg(long, env = "RESONANCE_THREADS")]
    pub threads: Option<usize>,

    /// Also enumerate two-class gravity tuples (|k1L| = |k1R|, |k2L| = |k2R|).
    #[arg(long)]
    pub emit_case2: bool,

    /// Write two-class gravity tuples as JSON lines (needs --emit-case2).
    #[arg(long, value_name = "PATH", requires = "emit_case2")]
    pub pairings: Option<PathBuf>,

    /// Search lean classes too; they only hold antipodal tuples.
    #[arg(long)]
    pub search_lean: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Solutions file written by a previous run.
    #[arg(value_name = "PATH")]
    pub solutions: PathBuf,

    /// Domain the records must fit into.
    #[arg(long)]
    pub domain: u32,
}

fn parse_wave(s: &str) -> Result<WaveKind, String> {
    s.parse().map_err(|e: resonance_core::Error| e.to_string())
}

fn parse_quotient(s: &str) -> Result<QuotientMode, String> {
    s.parse().map_err(|e: resonance_core::Error| e.to_string())
}
