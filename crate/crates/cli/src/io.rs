//! Text encodings: JSON lines for tuples, CSV for statistics and plot data.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use resonance_core::{
    ClassIndex, ResonanceQuad, ResonanceTriad, RunStats, TrivialPairing, WaveKind, WaveVector, WeightQuad,
    WeightTriad,
};
use serde::{Deserialize, Serialize};

use crate::report;

/// One resonant tuple as written to disk.
///
/// `vectors` are `[k1L, k2L, k1R, k2R]` for gravity quads and `[k1, k2, k3]`
/// for planetary triads; `weights[i]` is the weight of `vectors[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub kind: String,
    pub q: u64,
    pub weights: Vec<u32>,
    pub vectors: Vec<[i32; 2]>,
    pub asymmetric: bool,
}

fn pair(v: WaveVector) -> [i32; 2] {
    [v.m, v.n]
}

fn vector(p: [i32; 2]) -> WaveVector {
    WaveVector::new(p[0], p[1])
}

impl SolutionRecord {
    pub fn from_quad(s: &ResonanceQuad) -> Result<Self> {
        let weights = s.vector_weights().context("tuple norm outside its class")?;
        Ok(SolutionRecord {
            kind: WaveKind::Gravity4.name().to_owned(),
            q: s.q.get(),
            weights: weights.to_vec(),
            vectors: s.vectors().iter().copied().map(pair).collect(),
            asymmetric: s.weights.is_asymmetric(),
        })
    }

    pub fn from_triad(s: &ResonanceTriad) -> Result<Self> {
        let weights = s.vector_weights().context("tuple norm outside its class")?;
        Ok(SolutionRecord {
            kind: WaveKind::Planetary3.name().to_owned(),
            q: s.q.get(),
            weights: weights.to_vec(),
            vectors: s.vectors().iter().copied().map(pair).collect(),
            asymmetric: s.is_asymmetric(),
        })
    }

    pub fn wave_kind(&self) -> Result<WaveKind> {
        self.kind.parse().map_err(|e| anyhow::anyhow!("record kind {:?}: {e}", self.kind))
    }

    pub fn to_quad(&self) -> Result<ResonanceQuad> {
        let (Ok(v), Ok(w)) = (<[[i32; 2]; 4]>::try_from(self.vectors.as_slice()), <[u32; 4]>::try_from(self.weights.as_slice())) else {
            bail!("gravity record needs four vectors and four weights");
        };
        let weights = WeightQuad::from_pairs((w[0], w[1]), (w[2], w[3])).context("weight sums differ")?;
        Ok(ResonanceQuad::canonical(
            ClassIndex(self.q),
            weights,
            [vector(v[0]), vector(v[1])],
            [vector(v[2]), vector(v[3])],
        ))
    }

    pub fn to_triad(&self) -> Result<ResonanceTriad> {
        let (Ok(v), Ok(w)) = (<[[i32; 2]; 3]>::try_from(self.vectors.as_slice()), <[u32; 3]>::try_from(self.weights.as_slice())) else {
            bail!("planetary record needs three vectors and three weights");
        };
        let (g1, g2) = (w[0].min(w[1]), w[0].max(w[1]));
        let weights = WeightTriad { g1, g2, g3: w[2] };
        Ok(ResonanceTriad::canonical(ClassIndex(self.q), weights, vector(v[0]), vector(v[1]), vector(v[2])))
    }
}

/// A two-class gravity tuple as written to disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingRecord {
    pub classes: [u64; 2],
    pub vectors: Vec<[i32; 2]>,
}

impl From<&TrivialPairing> for PairingRecord {
    fn from(p: &TrivialPairing) -> Self {
        PairingRecord { classes: [p.classes.0.get(), p.classes.1.get()], vectors: p.vectors().iter().copied().map(pair).collect() }
    }
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

pub fn write_jsonl<W: Write, T: Serialize>(mut out: W, records: impl IntoIterator<Item = T>) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, &r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_jsonl<R: BufRead, T: for<'de> Deserialize<'de>>(input: R) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).with_context(|| format!("line {}", i + 1))?);
    }
    Ok(out)
}

pub fn read_solutions(path: &Path) -> Result<Vec<SolutionRecord>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_jsonl(BufReader::new(file))
}

/// Statistics as two-column `metric,value` CSV.
pub fn write_stats_csv<W: Write>(out: W, stats: &RunStats) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["metric", "value"])?;
    for (k, v) in report::stats_rows(stats) {
        w.write_record([k, v])?;
    }
    w.flush()?;
    Ok(())
}

/// Cumulative counts per partial domain, one row per band edge.
pub fn write_growth_csv<W: Write>(out: W, stats: &RunStats) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["domain", "total", "asymmetric", "multi_weight_total", "sign_orbits_total", "sign_orbits_asymmetric"])?;
    let series = [
        RunStats::cumulative(&stats.band_totals),
        RunStats::cumulative(&stats.band_asymmetric),
        RunStats::cumulative(&stats.band_multi_weight_totals),
        RunStats::cumulative(&stats.band_orbit_totals),
        RunStats::cumulative(&stats.band_orbit_asymmetric),
    ];
    for (i, edge) in stats.band_edges.iter().enumerate() {
        let mut row = vec![edge.to_string()];
        row.extend(series.iter().map(|s| s[i].to_string()));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_dec_distribution_csv<W: Write>(out: W, stats: &RunStats) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["dec", "classes"])?;
    for (dec, n) in stats.dec_distribution() {
        w.write_record([dec.to_string(), n.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
