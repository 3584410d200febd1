//! Parallel class evaluation with an order-preserving merge.

use anyhow::{Context, Result};
use rayon::prelude::*;
use resonance_core::{Pipeline, RunOutput};

/// Evaluates every class on `threads` workers. `collect` on an indexed
/// parallel iterator keeps the class order, so the merge sees exactly the
/// sequence a single-threaded run produces.
pub fn run(pipeline: &Pipeline, threads: usize) -> Result<RunOutput> {
    if threads <= 1 {
        return Ok(pipeline.run()?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building the worker pool")?;
    let outcomes = pool.install(|| {
        pipeline.classes().par_iter().map(|&q| pipeline.evaluate(q)).collect::<Result<Vec<_>, _>>()
    })?;
    Ok(pipeline.merge(outcomes)?)
}
