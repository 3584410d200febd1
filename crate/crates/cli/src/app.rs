//! Command dispatch and exit codes.

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use resonance_core::oracle::{GRAVITY_CEILING, PLANETARY_CEILING};
use resonance_core::{ClassSolutions, Error as CoreError, Pipeline, RunConfig, RunOutput, WaveKind};

use crate::args::{Cli, Command, RunArgs, VerifyArgs};
use crate::io::{self, PairingRecord, SolutionRecord};
use crate::{cache, parallel, report, verify};

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum AppError {
    Config(anyhow::Error),
    Verification(anyhow::Error),
    Resource(anyhow::Error),
}

impl AppError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Config(_) => 2,
            AppError::Verification(_) => 3,
            AppError::Resource(_) => 4,
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Config(e) => write!(f, "configuration error: {e:#}"),
            AppError::Verification(e) => write!(f, "verification failed: {e:#}"),
            AppError::Resource(e) => write!(f, "resource error: {e:#}"),
        }
    }
}

fn core_error(e: CoreError) -> AppError {
    match e {
        CoreError::InvalidConfig(_) | CoreError::OracleCeiling { .. } | CoreError::OutOfRange { .. } => {
            AppError::Config(e.into())
        }
        CoreError::Resource { .. } => AppError::Resource(e.into()),
        CoreError::Inconsistent(_) => AppError::Verification(e.into()),
    }
}

fn resource(e: anyhow::Error) -> AppError {
    match e.downcast::<CoreError>() {
        Ok(core) => core_error(core),
        Err(e) => AppError::Resource(e),
    }
}

pub fn main_with(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Some(Command::Verify(args)) => verify_file(&args),
        None => run(&cli.run).map(|_| ()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("resonance: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Validated configuration derived from the command line.
pub fn config_from(args: &RunArgs) -> Result<RunConfig, AppError> {
    let kind = args.wave.ok_or_else(|| AppError::Config(anyhow!("--wave is required")))?;
    let domain = args.domain.ok_or_else(|| AppError::Config(anyhow!("--domain is required")))?;
    if args.emit_case2 && kind != WaveKind::Gravity4 {
        return Err(AppError::Config(anyhow!("--emit-case2 applies to gravity4 only")));
    }
    if args.verify_oracle {
        let ceiling = match kind {
            WaveKind::Gravity4 => GRAVITY_CEILING,
            WaveKind::Planetary3 => PLANETARY_CEILING,
        };
        if domain > ceiling {
            return Err(AppError::Config(anyhow!("--verify-oracle supports {kind} domains up to {ceiling}")));
        }
    }
    if args.threads == Some(0) {
        return Err(AppError::Config(anyhow!("--threads must be at least 1")));
    }
    let cfg = RunConfig::new(kind, domain).map_err(core_error)?;
    Ok(cfg.with_quotient(args.quotient).with_case2(args.emit_case2).with_lean_search(args.search_lean))
}

fn pipeline_for(cfg: RunConfig, cache_path: Option<&Path>) -> Result<Pipeline, AppError> {
    let Some(path) = cache_path else {
        return Pipeline::new(cfg).map_err(core_error);
    };
    if path.exists() {
        let classes = cache::read(path, &cfg).map_err(AppError::Config)?;
        return Pipeline::with_classes(cfg, classes).map_err(core_error);
    }
    let pipeline = Pipeline::new(cfg).map_err(core_error)?;
    cache::write(path, &cfg, pipeline.classes()).map_err(resource)?;
    Ok(pipeline)
}

pub fn solution_records(out: &RunOutput) -> anyhow::Result<Vec<SolutionRecord>> {
    match &out.solutions {
        ClassSolutions::Gravity(v) => v.iter().map(SolutionRecord::from_quad).collect(),
        ClassSolutions::Planetary(v) => v.iter().map(SolutionRecord::from_triad).collect(),
    }
}

/// Runs the pipeline and writes every requested output.
pub fn run(args: &RunArgs) -> Result<RunOutput, AppError> {
    let cfg = config_from(args)?;
    let threads = args.threads.unwrap_or(1);
    let started = Instant::now();
    let pipeline = pipeline_for(cfg, args.classes_cache.as_deref())?;
    let mut out = parallel::run(&pipeline, threads).map_err(resource)?;
    out.stats.wall_time = Some(started.elapsed());

    if let Some(path) = &args.solutions {
        let records = solution_records(&out).map_err(AppError::Verification)?;
        io::write_jsonl(io::create(path).map_err(resource)?, &records).map_err(resource)?;
    }
    if let (Some(path), Some(pairings)) = (&args.pairings, &out.pairings) {
        let records = pairings.iter().map(PairingRecord::from);
        io::write_jsonl(io::create(path).map_err(resource)?, records).map_err(resource)?;
    }
    if let Some(path) = &args.stats {
        io::write_stats_csv(io::create(path).map_err(resource)?, &out.stats).map_err(resource)?;
    }
    if let Some(path) = &args.growth {
        io::write_growth_csv(io::create(path).map_err(resource)?, &out.stats).map_err(resource)?;
    }
    if let Some(path) = &args.dec_distribution {
        io::write_dec_distribution_csv(io::create(path).map_err(resource)?, &out.stats).map_err(resource)?;
    }
    eprint!("{}", report::summary(&out.stats));

    if args.verify_oracle {
        let cmp = verify::compare_with_oracle(&pipeline, &out).map_err(resource)?;
        if !cmp.is_clean() {
            let show = |v: &[String]| v.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
            return Err(AppError::Verification(anyhow!(
                "{} missing, {} extra, {} lean-rule violations (first missing: {}; first extra: {})",
                cmp.missing.len(),
                cmp.extra.len(),
                cmp.lean_violations.len(),
                show(&cmp.missing),
                show(&cmp.extra)
            )));
        }
        eprintln!("oracle agrees on {} tuples", cmp.compared);
    }
    Ok(out)
}

fn verify_file(args: &VerifyArgs) -> Result<(), AppError> {
    let records = io::read_solutions(&args.solutions)
        .with_context(|| format!("reading {}", args.solutions.display()))
        .map_err(AppError::Config)?;
    let mut failures = 0usize;
    for (i, rec) in records.iter().enumerate() {
        if let Err(why) = verify::check_record(rec, args.domain) {
            failures += 1;
            if failures <= 10 {
                eprintln!("record {}: {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        return Err(AppError::Verification(anyhow!("{failures} of {} records failed", records.len())));
    }
    eprintln!("{} records verified", records.len());
    Ok(())
}
