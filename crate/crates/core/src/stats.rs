//! Run counters: class census, decomposition distribution, degeneracy
//! tallies and solution counts per partial domain.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::time::Duration;

use crate::config::{QuotientMode, RunConfig, WaveKind};
use crate::error::{Error, Result};
use crate::pipeline::{ClassOutcome, ClassSolutions};
use crate::weights::Degeneracy;

/// Default partial-domain edges: multiples of 200 below `domain`, then
/// `domain` itself.
pub fn default_band_edges(domain: u32) -> Vec<u32> {
    let mut edges: Vec<u32> = (1..).map(|i| 200 * i).take_while(|&e| e < domain).collect();
    edges.push(domain);
    edges
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub kind: WaveKind,
    pub domain: u32,
    pub quotient: QuotientMode,
    pub class_count: u64,
    /// Classes with multiplicity 1, split into skipped (lean) and checked.
    pub mult1_count: u64,
    pub mult1_skipped: u64,
    pub mult1_checked: u64,
    /// All lean classes, whatever their multiplicity.
    pub lean_count: u64,
    /// Classes that were searched.
    pub checked_classes: u64,
    /// Multiplicity-1 classes keyed by `Dec(q)`.
    pub dec_distribution: BTreeMap<u32, u64>,
    /// Weight quads of each degeneracy case summed over searched classes.
    pub weight_quads_per_case: [u64; 4],
    /// The same restricted to classes of multiplicity at least 2.
    pub weight_quads_per_case_multi: [u64; 4],
    /// Searched classes holding at least one solution of each case.
    pub classes_per_case: [u64; 4],
    pub solutions_per_case: [u64; 4],
    pub solutions_total: u64,
    /// Solutions found in lean classes (only when they are searched).
    pub lean_solutions: u64,
    pub solutions_asymmetric: u64,
    /// Emitted tuples that are the smallest member of their sign orbit.
    pub orbit_representatives: u64,
    pub orbit_representatives_asymmetric: u64,
    pub band_edges: Vec<u32>,
    /// Per-band (not cumulative) solution counts; a tuple falls in the first
    /// band whose edge is at least its largest coordinate.
    pub band_totals: Vec<u64>,
    pub band_asymmetric: Vec<u64>,
    pub band_orbit_totals: Vec<u64>,
    pub band_orbit_asymmetric: Vec<u64>,
    /// Solutions in classes of multiplicity at least 2, in total and per band.
    pub multi_weight_solutions: u64,
    pub band_multi_weight_totals: Vec<u64>,
    pub pairings: Option<u64>,
    pub wall_time: Option<Duration>,
}

impl RunStats {
    pub fn new(cfg: &RunConfig) -> Self {
        Self::with_band_edges(cfg, default_band_edges(cfg.domain()))
    }

    pub fn with_band_edges(cfg: &RunConfig, band_edges: Vec<u32>) -> Self {
        let bands = band_edges.len();
        RunStats {
            kind: cfg.kind(),
            domain: cfg.domain(),
            quotient: cfg.quotient,
            class_count: 0,
            mult1_count: 0,
            mult1_skipped: 0,
            mult1_checked: 0,
            lean_count: 0,
            checked_classes: 0,
            dec_distribution: BTreeMap::new(),
            weight_quads_per_case: [0; 4],
            weight_quads_per_case_multi: [0; 4],
            classes_per_case: [0; 4],
            solutions_per_case: [0; 4],
            solutions_total: 0,
            lean_solutions: 0,
            solutions_asymmetric: 0,
            orbit_representatives: 0,
            orbit_representatives_asymmetric: 0,
            band_edges,
            band_totals: alloc::vec![0; bands],
            band_asymmetric: alloc::vec![0; bands],
            band_orbit_totals: alloc::vec![0; bands],
            band_orbit_asymmetric: alloc::vec![0; bands],
            multi_weight_solutions: 0,
            band_multi_weight_totals: alloc::vec![0; bands],
            pairings: None,
            wall_time: None,
        }
    }

    /// Band index of a tuple whose largest coordinate is `extent`.
    pub fn band_of(&self, extent: u32) -> Option<usize> {
        self.band_edges.iter().position(|&e| extent <= e)
    }

    fn count_solution(&mut self, extent: u32, asymmetric: bool, representative: bool, multi: bool) -> Result<()> {
        let band = self.band_of(extent).ok_or(Error::Inconsistent("tuple outside every band"))?;
        self.solutions_total += 1;
        self.band_totals[band] += 1;
        if multi {
            self.multi_weight_solutions += 1;
            self.band_multi_weight_totals[band] += 1;
        }
        if asymmetric {
            self.solutions_asymmetric += 1;
            self.band_asymmetric[band] += 1;
        }
        if representative {
            self.orbit_representatives += 1;
            self.band_orbit_totals[band] += 1;
            if asymmetric {
                self.orbit_representatives_asymmetric += 1;
                self.band_orbit_asymmetric[band] += 1;
            }
        }
        Ok(())
    }

    /// Folds one class outcome into the counters.
    pub fn absorb(&mut self, outcome: &ClassOutcome) -> Result<()> {
        self.class_count += 1;
        if outcome.mul == 1 {
            self.mult1_count += 1;
            *self.dec_distribution.entry(outcome.dec_count).or_insert(0) += 1;
            if outcome.lean {
                self.mult1_skipped += 1;
            } else {
                self.mult1_checked += 1;
            }
        }
        if outcome.lean {
            self.lean_count += 1;
            self.lean_solutions += outcome.solutions.len() as u64;
        } else {
            self.checked_classes += 1;
            for (acc, n) in self.weight_quads_per_case.iter_mut().zip(outcome.weight_cases) {
                *acc += n;
            }
            if outcome.mul > 1 {
                for (acc, n) in self.weight_quads_per_case_multi.iter_mut().zip(outcome.weight_cases) {
                    *acc += n;
                }
            }
        }
        let multi = outcome.mul > 1;
        match &outcome.solutions {
            ClassSolutions::Gravity(sols) => {
                let mut seen = [false; 4];
                for s in sols {
                    let case = s.weights.case().case_number() - 1;
                    seen[case] = true;
                    self.solutions_per_case[case] += 1;
                    self.count_solution(s.extent(), s.weights.is_asymmetric(), s.is_orbit_representative(), multi)?;
                }
                for (acc, hit) in self.classes_per_case.iter_mut().zip(seen) {
                    *acc += hit as u64;
                }
            }
            ClassSolutions::Planetary(sols) => {
                for s in sols {
                    self.count_solution(s.extent(), s.is_asymmetric(), s.is_orbit_representative(), multi)?;
                }
            }
        }
        Ok(())
    }

    /// Running sums of a per-band series.
    pub fn cumulative(series: &[u64]) -> Vec<u64> {
        series
            .iter()
            .scan(0u64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// `(Dec(q), class count)` rows over multiplicity-1 classes.
    pub fn dec_distribution(&self) -> Vec<(u32, u64)> {
        self.dec_distribution.iter().map(|(&d, &n)| (d, n)).collect()
    }

    pub fn check_consistency(&self) -> Result<()> {
        let ok = |c: bool, what| if c { Ok(()) } else { Err(Error::Inconsistent(what)) };
        ok(self.mult1_skipped + self.mult1_checked == self.mult1_count, "mult-1 split")?;
        ok(self.lean_count + self.checked_classes == self.class_count, "lean split")?;
        ok(self.dec_distribution.values().sum::<u64>() == self.mult1_count, "decomposition histogram")?;
        ok(self.band_totals.iter().sum::<u64>() == self.solutions_total, "band totals")?;
        ok(self.band_asymmetric.iter().sum::<u64>() == self.solutions_asymmetric, "band asymmetric")?;
        ok(self.band_orbit_totals.iter().sum::<u64>() == self.orbit_representatives, "band orbits")?;
        ok(
            self.band_orbit_asymmetric.iter().sum::<u64>() == self.orbit_representatives_asymmetric,
            "band asymmetric orbits",
        )?;
        ok(self.band_multi_weight_totals.iter().sum::<u64>() == self.multi_weight_solutions, "band multi-weight")?;
        ok(self.solutions_asymmetric <= self.solutions_total, "asymmetric exceeds total")?;
        if self.kind == WaveKind::Gravity4 {
            ok(self.solutions_per_case.iter().sum::<u64>() == self.solutions_total, "case split")?;
            ok(self.solutions_per_case[Degeneracy::NoDegeneration as usize] == self.solutions_asymmetric, "case 1")?;
        }
        if self.quotient == QuotientMode::SignOrbits {
            ok(self.orbit_representatives == self.solutions_total, "quotient mode emitted a non-representative")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn band_edges() {
        assert_eq!(default_band_edges(1000), vec![200, 400, 600, 800, 1000]);
        assert_eq!(default_band_edges(950), vec![200, 400, 600, 800, 950]);
        assert_eq!(default_band_edges(50), vec![50]);
        assert_eq!(default_band_edges(200), vec![200]);
        assert_eq!(RunStats::cumulative(&[1, 2, 3]), vec![1, 3, 6]);
    }
}
