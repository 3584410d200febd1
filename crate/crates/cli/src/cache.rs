//! Class-list cache: a header line naming `(kind, D, count)`, then one class
//! index per line in ascending order.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use resonance_core::{ClassIndex, RunConfig};

fn header(cfg: &RunConfig, count: usize) -> String {
    format!("# resonance classes kind={} domain={} count={count}", cfg.kind(), cfg.domain())
}

pub fn write(path: &Path, cfg: &RunConfig, classes: &[ClassIndex]) -> Result<()> {
    let mut out = crate::io::create(path)?;
    writeln!(out, "{}", header(cfg, classes.len()))?;
    for q in classes {
        writeln!(out, "{q}")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a cache written for exactly `cfg`'s kind and domain.
pub fn read(path: &Path, cfg: &RunConfig) -> Result<Vec<ClassIndex>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines();
    let head = lines.next().unwrap_or_default();
    let classes = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.trim().parse::<u64>().map(ClassIndex))
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("parsing {}", path.display()))?;
    if head != header(cfg, classes.len()) {
        bail!("class cache {} does not match {} D={} (header {head:?})", path.display(), cfg.kind(), cfg.domain());
    }
    Ok(classes)
}
