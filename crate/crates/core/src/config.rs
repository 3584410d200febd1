use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// The two dispersion laws handled by the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WaveKind {
    /// Four-wave gravity waves, `ω = (m² + n²)^(1/4)`; class degree `c = 4`.
    Gravity4,
    /// Three-wave planetary waves, `ω = (m² + n²)^(-1/2)`; class degree `c = -2`.
    Planetary3,
}

impl WaveKind {
    /// The signed class degree `c`.
    pub const fn degree(self) -> i32 {
        match self {
            WaveKind::Gravity4 => 4,
            WaveKind::Planetary3 => -2,
        }
    }

    /// `|c|`: the power of the weight inside a norm, `t = γ^|c| · q`.
    pub const fn weight_power(self) -> u32 {
        self.degree().unsigned_abs()
    }

    pub const fn name(self) -> &'static str {
        match self {
            WaveKind::Gravity4 => "gravity4",
            WaveKind::Planetary3 => "planetary3",
        }
    }
}

impl fmt::Display for WaveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WaveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gravity4" => Ok(WaveKind::Gravity4),
            "planetary3" => Ok(WaveKind::Planetary3),
            _ => Err(Error::InvalidConfig("wave kind must be gravity4 or planetary3")),
        }
    }
}

/// Which representatives of a solution orbit are emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum QuotientMode {
    /// Every canonical tuple is emitted.
    #[default]
    None,
    /// One representative per orbit of the sign group
    /// `{id, m ↦ -m, n ↦ -n, both}` applied to all vectors at once.
    SignOrbits,
}

impl QuotientMode {
    pub const fn name(self) -> &'static str {
        match self {
            QuotientMode::None => "none",
            QuotientMode::SignOrbits => "sign-orbits",
        }
    }
}

impl fmt::Display for QuotientMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuotientMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(QuotientMode::None),
            "sign-orbits" => Ok(QuotientMode::SignOrbits),
            _ => Err(Error::InvalidConfig("quotient must be none or sign-orbits")),
        }
    }
}

/// Largest supported domain half-width: `2·D²` must fit in a `u32`.
pub const MAX_DOMAIN: u32 = 46_340;

/// A validated run configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    kind: WaveKind,
    domain: u32,
    pub quotient: QuotientMode,
    /// Also enumerate gravity tuples spanning two classes
    /// (`|k₁| = |k₃|`, `|k₂| = |k₄|`). Ignored for planetary waves.
    pub emit_case2: bool,
    /// Search lean classes as well instead of skipping them. They hold no
    /// tuples except antipodal ones (`k₁ = -k₂`, `k₃ = -k₄`).
    pub search_lean: bool,
}

impl RunConfig {
    pub fn new(kind: WaveKind, domain: u32) -> Result<Self> {
        if domain == 0 {
            return Err(Error::InvalidConfig("domain must be at least 1"));
        }
        if domain > MAX_DOMAIN {
            return Err(Error::InvalidConfig("domain exceeds 46340"));
        }
        Ok(RunConfig { kind, domain, quotient: QuotientMode::None, emit_case2: false, search_lean: false })
    }

    pub fn with_quotient(mut self, quotient: QuotientMode) -> Self {
        self.quotient = quotient;
        self
    }

    pub fn with_case2(mut self, emit: bool) -> Self {
        self.emit_case2 = emit;
        self
    }

    pub fn with_lean_search(mut self, search: bool) -> Self {
        self.search_lean = search;
        self
    }

    pub fn kind(&self) -> WaveKind {
        self.kind
    }

    /// Half-width `D` of the square `[-D, D]²`.
    pub fn domain(&self) -> u32 {
        self.domain
    }

    /// `2·D²`, the largest `m² + n²` inside the domain.
    pub fn norm_bound(&self) -> u64 {
        2 * (self.domain as u64) * (self.domain as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_bound_is_twice_square() {
        let cfg = RunConfig::new(WaveKind::Gravity4, 1000).unwrap();
        assert_eq!(cfg.norm_bound(), 2_000_000);
        assert_eq!(RunConfig::new(WaveKind::Planetary3, 1).unwrap().norm_bound(), 2);
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(RunConfig::new(WaveKind::Gravity4, 0).is_err());
        assert!(RunConfig::new(WaveKind::Gravity4, MAX_DOMAIN + 1).is_err());
        assert!(RunConfig::new(WaveKind::Gravity4, MAX_DOMAIN).is_ok());
    }

    #[test]
    fn parse_names() {
        assert_eq!("gravity4".parse::<WaveKind>().unwrap(), WaveKind::Gravity4);
        assert_eq!("sign-orbits".parse::<QuotientMode>().unwrap(), QuotientMode::SignOrbits);
        assert!("gravity".parse::<WaveKind>().is_err());
        assert_eq!(WaveKind::Planetary3.weight_power(), 2);
    }
}
