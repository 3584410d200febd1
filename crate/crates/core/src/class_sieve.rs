//! Class indices, multiplicities and per-class decomposition records.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::kth_root_floor;
use crate::config::{RunConfig, WaveKind};
use crate::error::{try_zeroed, Result};
use crate::factor::Factorization;
use crate::two_squares::{TwoSquareDecomposition, TwoSquares};

/// An admissible class index `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassIndex(pub u64);

impl ClassIndex {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Decides admissibility of `q` by trial division.
///
/// * gravity: `q` is fourth-power free and every prime `p ≡ 3 (mod 4)`
///   divides it exactly twice;
/// * planetary: `q` is square free with no prime `p ≡ 3 (mod 4)`.
///
/// `q = 1` is admissible for both.
pub fn is_class_index(q: u64, kind: WaveKind) -> bool {
    if q == 0 {
        return false;
    }
    let mut rest = q;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 && !exponent_allowed(p, e, kind) {
            return false;
        }
        p += 1;
    }
    rest == 1 || exponent_allowed(rest, 1, kind)
}

fn exponent_allowed(p: u64, e: u32, kind: WaveKind) -> bool {
    match kind {
        WaveKind::Gravity4 => e < 4 && (p % 4 != 3 || e == 2),
        WaveKind::Planetary3 => e == 1 && p % 4 != 3,
    }
}

/// Splits a factored norm `t` into `(γ, q)` with `t = γ^|c| · q`.
pub fn split_norm(f: &Factorization, kind: WaveKind) -> (u64, ClassIndex) {
    let k = kind.weight_power();
    let (mut gamma, mut q) = (1u64, 1u64);
    for &(p, e) in f.pairs() {
        gamma *= p.pow(e / k);
        q *= p.pow(e % k);
    }
    (gamma, ClassIndex(q))
}

/// One bit per integer in `0..=len`.
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn filled(len: usize) -> Result<Self> {
        let mut words: Vec<u64> = try_zeroed(len / 64 + 1, "class sieve bitset")?;
        words.iter_mut().for_each(|w| *w = u64::MAX);
        Ok(BitSet { words })
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
}

/// Primes up to `n`, plain Eratosthenes on a bitset.
fn primes_up_to(n: usize) -> Result<Vec<usize>> {
    let mut composite = BitSet::filled(n)?;
    let mut out = Vec::new();
    for i in 2..=n {
        if composite.get(i) {
            out.push(i);
            let mut j = i.saturating_mul(i);
            while j <= n {
                composite.clear(j);
                j += i;
            }
        }
    }
    Ok(out)
}

/// All class indices `q <= 2·D²`, ascending.
///
/// Sieve over a bitset of `1..=2D²`: the first pass clears multiples of
/// `p^|c|` (fourth powers for gravity, squares for planetary waves), the
/// second clears every number in which a prime `p ≡ 3 (mod 4)` has a
/// forbidden exponent.
pub fn sieve_classes(cfg: &RunConfig) -> Result<Vec<ClassIndex>> {
    let n = cfg.norm_bound() as usize;
    let kind = cfg.kind();
    let mut alive = BitSet::filled(n)?;
    alive.clear(0);
    let primes = primes_up_to(n)?;
    let power = kind.weight_power();
    for &p in &primes {
        let Some(pk) = p.checked_pow(power).filter(|&pk| pk <= n) else { break };
        let mut j = pk;
        while j <= n {
            alive.clear(j);
            j += pk;
        }
    }
    for &p in primes.iter().filter(|&&p| p % 4 == 3) {
        match kind {
            WaveKind::Gravity4 => {
                // clear ap unless v_p(ap) == 2, i.e. keep a ≡ 0 (mod p), a ≢ 0 (mod p²)
                let p2 = p * p;
                for a in 1..=n / p {
                    if a % p != 0 || a % p2 == 0 {
                        alive.clear(a * p);
                    }
                }
            }
            WaveKind::Planetary3 => {
                let mut j = p;
                while j <= n {
                    alive.clear(j);
                    j += p;
                }
            }
        }
    }
    Ok((1..=n).filter(|&i| alive.get(i)).map(|i| ClassIndex(i as u64)).collect())
}

/// `Mul(q)`: the largest `γ` with `γ^|c| · q <= 2D²`.
pub fn multiplicity(q: ClassIndex, cfg: &RunConfig) -> u32 {
    kth_root_floor(cfg.norm_bound() / q.0, cfg.kind().weight_power()) as u32
}

/// Everything the search needs to know about one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub q: ClassIndex,
    pub kind: WaveKind,
    pub domain: u32,
    pub mul: u32,
    /// `decs[γ - 1]`: all decompositions of `γ^|c| · q`, descending `x`.
    pub decs: Vec<Vec<TwoSquareDecomposition>>,
}

impl ClassRecord {
    pub fn build(q: ClassIndex, cfg: &RunConfig, squares: &TwoSquares) -> Result<Self> {
        let mul = multiplicity(q, cfg);
        Self::build_up_to(q, cfg, squares, mul)
    }

    /// Record restricted to weights `1..=max_weight`.
    pub fn build_up_to(
        q: ClassIndex,
        cfg: &RunConfig,
        squares: &TwoSquares,
        max_weight: u32,
    ) -> Result<Self> {
        let power = cfg.kind().weight_power();
        let mut decs = Vec::with_capacity(max_weight as usize);
        for gamma in 1..=max_weight as u64 {
            decs.push(squares.decompositions(gamma.pow(power) * q.0)?);
        }
        Ok(ClassRecord { q, kind: cfg.kind(), domain: cfg.domain(), mul: max_weight, decs })
    }

    /// `t_γ = γ^|c| · q`.
    pub fn norm_of(&self, gamma: u32) -> u64 {
        (gamma as u64).pow(self.kind.weight_power()) * self.q.0
    }

    pub fn decompositions(&self, gamma: u32) -> &[TwoSquareDecomposition] {
        &self.decs[gamma as usize - 1]
    }

    /// Decompositions of `t_γ` whose coordinates fit the domain.
    pub fn in_domain(&self, gamma: u32) -> impl Iterator<Item = &TwoSquareDecomposition> {
        let d = self.domain;
        self.decompositions(gamma).iter().filter(move |dec| dec.x <= d)
    }

    /// Number of ordered non-negative pairs `(a, b)` with `a² + b² = t_γ`
    /// and `a, b <= D`.
    pub fn ordered_count(&self, gamma: u32) -> u32 {
        self.in_domain(gamma).map(|d| d.ordered_count()).sum()
    }
}
