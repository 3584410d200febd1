//! Class-by-class orchestration.
//!
//! [`Pipeline::evaluate`] is a pure function of one class index, so classes
//! can be evaluated in any order or in parallel; [`Pipeline::merge`] takes
//! the outcomes in ascending class order and produces the same result as a
//! sequential [`Pipeline::run`].

use alloc::vec::Vec;

use crate::class_sieve::{is_class_index, sieve_classes, split_norm, ClassIndex, ClassRecord};
use crate::config::{RunConfig, WaveKind};
use crate::error::{Error, Result};
use crate::search::{
    is_lean_class, search_class_gravity, search_class_planetary, search_two_class_pairings, ResonanceQuad,
    ResonanceTriad, TrivialPairing,
};
use crate::stats::RunStats;
use crate::two_squares::TwoSquares;
use crate::weights::{solve_additive_weights, solve_harmonic_weights, subset_for_class, WeightTriad};

/// Solutions of one class, or of a whole run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSolutions {
    Gravity(Vec<ResonanceQuad>),
    Planetary(Vec<ResonanceTriad>),
}

impl ClassSolutions {
    pub fn empty(kind: WaveKind) -> Self {
        match kind {
            WaveKind::Gravity4 => ClassSolutions::Gravity(Vec::new()),
            WaveKind::Planetary3 => ClassSolutions::Planetary(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ClassSolutions::Gravity(v) => v.len(),
            ClassSolutions::Planetary(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn gravity(&self) -> Option<&[ResonanceQuad]> {
        match self {
            ClassSolutions::Gravity(v) => Some(v),
            ClassSolutions::Planetary(_) => None,
        }
    }

    pub fn planetary(&self) -> Option<&[ResonanceTriad]> {
        match self {
            ClassSolutions::Planetary(v) => Some(v),
            ClassSolutions::Gravity(_) => None,
        }
    }

    fn is_strictly_sorted(&self) -> bool {
        match self {
            ClassSolutions::Gravity(v) => v.windows(2).all(|w| w[0] < w[1]),
            ClassSolutions::Planetary(v) => v.windows(2).all(|w| w[0] < w[1]),
        }
    }

    fn append(&mut self, other: ClassSolutions) -> Result<()> {
        match (self, other) {
            (ClassSolutions::Gravity(a), ClassSolutions::Gravity(mut b)) => a.append(&mut b),
            (ClassSolutions::Planetary(a), ClassSolutions::Planetary(mut b)) => a.append(&mut b),
            _ => return Err(Error::Inconsistent("mixed wave kinds in one run")),
        }
        Ok(())
    }
}

/// Everything learned about one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassOutcome {
    pub q: ClassIndex,
    pub mul: u32,
    /// `Dec(q)`: ordered in-domain decompositions of `q` itself.
    pub dec_count: u32,
    pub lean: bool,
    /// Weight quads of each degeneracy case (gravity, searched classes only).
    pub weight_cases: [u64; 4],
    pub solutions: ClassSolutions,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stats: RunStats,
    /// All solutions, sorted by class then canonical tuple.
    pub solutions: ClassSolutions,
    /// Two-class gravity tuples, present when requested in the config.
    pub pairings: Option<Vec<TrivialPairing>>,
}

/// Immutable per-run state shared by all class evaluations.
#[derive(Debug, Clone)]
pub struct Pipeline {
    cfg: RunConfig,
    classes: Vec<ClassIndex>,
    squares: TwoSquares,
    triads: Vec<WeightTriad>,
}

impl Pipeline {
    /// Sieves the class list and builds the factor table for `1..=2D²`.
    pub fn new(cfg: RunConfig) -> Result<Self> {
        let classes = sieve_classes(&cfg)?;
        Self::assemble(cfg, classes)
    }

    /// Uses a precomputed class list (for example a cache file). The list
    /// must be ascending and contain only admissible indices within the
    /// norm bound; completeness is the caller's responsibility.
    pub fn with_classes(cfg: RunConfig, classes: Vec<ClassIndex>) -> Result<Self> {
        if !classes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidConfig("class list is not strictly ascending"));
        }
        if classes.iter().any(|q| q.0 > cfg.norm_bound() || !is_class_index(q.0, cfg.kind())) {
            return Err(Error::InvalidConfig("class list holds an inadmissible index"));
        }
        Self::assemble(cfg, classes)
    }

    fn assemble(cfg: RunConfig, classes: Vec<ClassIndex>) -> Result<Self> {
        let squares = TwoSquares::new(cfg.norm_bound())?;
        let triads = match cfg.kind() {
            WaveKind::Planetary3 => {
                let top = classes.first().map_or(0, |&q| crate::class_sieve::multiplicity(q, &cfg));
                solve_harmonic_weights(top)
            }
            WaveKind::Gravity4 => Vec::new(),
        };
        Ok(Pipeline { cfg, classes, squares, triads })
    }

    pub fn config(&self) -> &RunConfig {
        &self.cfg
    }

    pub fn classes(&self) -> &[ClassIndex] {
        &self.classes
    }

    pub fn squares(&self) -> &TwoSquares {
        &self.squares
    }

    /// Harmonic triads for the largest multiplicity (planetary runs).
    pub fn triads(&self) -> &[WeightTriad] {
        &self.triads
    }

    pub fn record(&self, q: ClassIndex) -> Result<ClassRecord> {
        ClassRecord::build(q, &self.cfg, &self.squares)
    }

    /// Searches a class whether or not it is lean.
    pub fn search_record(&self, rec: &ClassRecord) -> Result<ClassSolutions> {
        Ok(match self.cfg.kind() {
            WaveKind::Gravity4 => {
                let quads = solve_additive_weights(rec.mul);
                ClassSolutions::Gravity(search_class_gravity(rec, &quads, &self.cfg)?)
            }
            WaveKind::Planetary3 => {
                let triads = subset_for_class(&self.triads, rec.mul);
                ClassSolutions::Planetary(search_class_planetary(rec, &triads, &self.cfg)?)
            }
        })
    }

    pub fn evaluate(&self, q: ClassIndex) -> Result<ClassOutcome> {
        let kind = self.cfg.kind();
        let rec = self.record(q)?;
        let lean = is_lean_class(&rec, kind);
        let mut outcome = ClassOutcome {
            q,
            mul: rec.mul,
            dec_count: rec.ordered_count(1),
            lean,
            weight_cases: [0; 4],
            solutions: ClassSolutions::empty(kind),
        };
        if lean && !self.cfg.search_lean {
            return Ok(outcome);
        }
        match kind {
            WaveKind::Gravity4 => {
                let quads = solve_additive_weights(rec.mul);
                for w in &quads {
                    outcome.weight_cases[w.case().case_number() - 1] += 1;
                }
                outcome.solutions = ClassSolutions::Gravity(search_class_gravity(&rec, &quads, &self.cfg)?);
            }
            WaveKind::Planetary3 => outcome.solutions = self.search_record(&rec)?,
        }
        Ok(outcome)
    }

    /// Two-class gravity tuples of the whole domain.
    pub fn two_class_pairings(&self) -> Result<Vec<TrivialPairing>> {
        let kind = self.cfg.kind();
        search_two_class_pairings(&self.cfg, |t| Ok(split_norm(&self.squares.factorize(t)?, kind).1))
    }

    /// Folds outcomes, which must cover the class list in ascending order.
    pub fn merge<I>(&self, outcomes: I) -> Result<RunOutput>
    where
        I: IntoIterator<Item = ClassOutcome>,
    {
        let mut stats = RunStats::new(&self.cfg);
        let mut solutions = ClassSolutions::empty(self.cfg.kind());
        let mut expected = self.classes.iter();
        for outcome in outcomes {
            if expected.next() != Some(&outcome.q) {
                return Err(Error::Inconsistent("class outcomes out of order"));
            }
            stats.absorb(&outcome)?;
            solutions.append(outcome.solutions)?;
        }
        if expected.next().is_some() {
            return Err(Error::Inconsistent("class outcomes missing"));
        }
        if !solutions.is_strictly_sorted() {
            return Err(Error::Inconsistent("merged solutions not strictly increasing"));
        }
        let pairings = if self.cfg.emit_case2 && self.cfg.kind() == WaveKind::Gravity4 {
            let p = self.two_class_pairings()?;
            stats.pairings = Some(p.len() as u64);
            Some(p)
        } else {
            None
        };
        stats.check_consistency()?;
        Ok(RunOutput { stats, solutions, pairings })
    }

    /// Sequential run over every class.
    pub fn run(&self) -> Result<RunOutput> {
        let outcomes = self.classes.iter().map(|&q| self.evaluate(q)).collect::<Result<Vec<_>>>()?;
        self.merge(outcomes)
    }
}
