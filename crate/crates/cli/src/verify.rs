//! Independent checks: record re-verification and oracle comparison.

use std::collections::BTreeSet;

use anyhow::Result;
use resonance_core::oracle::{brute_force_gravity, brute_force_planetary, radical_key, RadicalClassKey};
use resonance_core::search::is_lean_class;
use resonance_core::{is_class_index, Pipeline, QuotientMode, RunOutput, WaveKind};

use crate::io::SolutionRecord;

/// Re-checks one record from its raw numbers: class index, norms against
/// weights, the weight equation, momentum, distinctness and domain bounds.
/// Weights and classes are recomputed by trial division, not taken from
/// the search.
pub fn check_record(rec: &SolutionRecord, domain: u32) -> Result<(), String> {
    check_record_with(rec, domain, &mut radical_key, &mut is_class_index)
}

/// [`check_record`] with the trial-division primitives supplied by the
/// caller, so bulk checks can memoize them.
pub fn check_record_with<K, C>(rec: &SolutionRecord, domain: u32, key_of: &mut K, is_class: &mut C) -> Result<(), String>
where
    K: FnMut(u64, u32) -> RadicalClassKey,
    C: FnMut(u64, WaveKind) -> bool,
{
    let kind = rec.wave_kind().map_err(|e| e.to_string())?;
    let arity = match kind {
        WaveKind::Gravity4 => 4,
        WaveKind::Planetary3 => 3,
    };
    if rec.vectors.len() != arity || rec.weights.len() != arity {
        return Err(format!("expected {arity} vectors and weights"));
    }
    if !is_class(rec.q, kind) {
        return Err(format!("{} is not a {kind} class index", rec.q));
    }
    let d = domain as i64;
    for (i, &[m, n]) in rec.vectors.iter().enumerate() {
        let (m, n) = (m as i64, n as i64);
        if (m, n) == (0, 0) || m.abs() > d || n.abs() > d {
            return Err(format!("vector {i} outside the domain"));
        }
        let key = key_of((m * m + n * n) as u64, kind.weight_power());
        if key.q != rec.q || key.gamma != rec.weights[i] as u64 {
            return Err(format!("vector {i} has class {} weight {}", key.q, key.gamma));
        }
    }
    for i in 0..arity {
        for j in i + 1..arity {
            if rec.vectors[i] == rec.vectors[j] {
                return Err(format!("vectors {i} and {j} coincide"));
            }
        }
    }
    let v = &rec.vectors;
    let w: Vec<u64> = rec.weights.iter().map(|&g| g as u64).collect();
    let asymmetric = match kind {
        WaveKind::Gravity4 => {
            if v[0][0] + v[1][0] != v[2][0] + v[3][0] || v[0][1] + v[1][1] != v[2][1] + v[3][1] {
                return Err("momentum not conserved".into());
            }
            if w[0] + w[1] != w[2] + w[3] {
                return Err("frequency sums differ".into());
            }
            let set: BTreeSet<u64> = w.iter().copied().collect();
            set.len() == 4
        }
        WaveKind::Planetary3 => {
            if v[0][0] + v[1][0] != v[2][0] {
                return Err("m-momentum not conserved".into());
            }
            if w[2] * (w[0] + w[1]) != w[0] * w[1] {
                return Err("harmonic weight condition fails".into());
            }
            w[0] != w[1]
        }
    };
    if asymmetric != rec.asymmetric {
        return Err("asymmetric flag is wrong".into());
    }
    Ok(())
}

/// Outcome of comparing a pipeline run against the brute-force oracle.
#[derive(Debug, Default)]
pub struct OracleComparison {
    /// Tuples the oracle found that the pipeline should have emitted but did not.
    pub missing: Vec<String>,
    /// Tuples the pipeline emitted that the oracle does not know.
    pub extra: Vec<String>,
    /// Oracle tuples in skipped lean classes that are not antipodal; any
    /// entry contradicts the lean-class rule.
    pub lean_violations: Vec<String>,
    pub compared: usize,
}

impl OracleComparison {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.lean_violations.is_empty()
    }
}

fn diff<T: Ord + std::fmt::Display + Clone>(expected: &[T], got: &[T], cmp: &mut OracleComparison) {
    let e: BTreeSet<&T> = expected.iter().collect();
    let g: BTreeSet<&T> = got.iter().collect();
    cmp.missing.extend(e.difference(&g).map(|t| t.to_string()));
    cmp.extra.extend(g.difference(&e).map(|t| t.to_string()));
    cmp.compared += expected.len();
}

/// Compares `out` (produced by `pipeline`) with the oracle at the same D.
///
/// Oracle tuples lying in lean classes are expected only when the run
/// searched lean classes; otherwise they must all be antipodal.
pub fn compare_with_oracle(pipeline: &Pipeline, out: &RunOutput) -> Result<OracleComparison> {
    let cfg = *pipeline.config();
    let mut lean = std::collections::BTreeMap::new();
    let mut is_lean = |q| -> Result<bool> {
        if let Some(&l) = lean.get(&q) {
            return Ok(l);
        }
        let l = is_lean_class(&pipeline.record(q)?, cfg.kind());
        lean.insert(q, l);
        Ok(l)
    };
    let keep = |rep: bool| cfg.quotient == QuotientMode::None || rep;
    let mut cmp = OracleComparison::default();
    match cfg.kind() {
        WaveKind::Gravity4 => {
            let oracle = brute_force_gravity(cfg.domain())?;
            let mut expected = Vec::new();
            for t in oracle.single_class {
                if !cfg.search_lean && is_lean(t.q)? {
                    if !t.is_antipodal() {
                        cmp.lean_violations.push(t.to_string());
                    }
                    continue;
                }
                if keep(t.is_orbit_representative()) {
                    expected.push(t);
                }
            }
            diff(&expected, out.solutions.gravity().unwrap_or_default(), &mut cmp);
            if let Some(pairings) = &out.pairings {
                let e: BTreeSet<_> = oracle.two_class.iter().collect();
                let g: BTreeSet<_> = pairings.iter().collect();
                cmp.missing.extend(e.difference(&g).map(|p| format!("two-class {:?}", p.vectors())));
                cmp.extra.extend(g.difference(&e).map(|p| format!("two-class {:?}", p.vectors())));
            }
        }
        WaveKind::Planetary3 => {
            let oracle = brute_force_planetary(cfg.domain())?;
            let mut expected = Vec::new();
            for t in oracle {
                if !cfg.search_lean && is_lean(t.q)? {
                    cmp.lean_violations.push(t.to_string());
                    continue;
                }
                if keep(t.is_orbit_representative()) {
                    expected.push(t);
                }
            }
            diff(&expected, out.solutions.planetary().unwrap_or_default(), &mut cmp);
        }
    }
    Ok(cmp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> SolutionRecord {
        SolutionRecord {
            kind: "gravity4".into(),
            q: 2,
            weights: vec![2, 7, 3, 6],
            vectors: vec![[-4, -4], [49, 49], [9, 9], [36, 36]],
            asymmetric: true,
        }
    }

    #[test]
    fn accepts_valid_and_rejects_tampered() {
        assert_eq!(check_record(&record(), 50), Ok(()));
        assert!(check_record(&record(), 48).is_err());
        let mut bad = record();
        bad.vectors[3] = [36, 35];
        assert!(check_record(&bad, 50).is_err());
        let mut bad = record();
        bad.asymmetric = false;
        assert!(check_record(&bad, 50).is_err());
        let mut bad = record();
        bad.weights = vec![2, 7, 4, 5];
        assert!(check_record(&bad, 50).is_err());
    }
}
