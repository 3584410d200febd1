//! Brute-force enumerator for small domains.
//!
//! Works directly on the lattice: every vector gets its radical key by
//! trial division, pairs are grouped by momentum, and two pairs resonate
//! when their frequency sums are equal as formal sums over the basis
//! `q^(1/c)`. Nothing here uses the sieve, the two-squares code or the
//! per-class search; only the canonical tuple types are shared.

use alloc::vec::Vec;

use crate::arith::isqrt;
use crate::class_sieve::ClassIndex;
use crate::error::{Error, Result};
use crate::search::{ResonanceQuad, ResonanceTriad, TrivialPairing, WaveVector};
use crate::weights::{WeightQuad, WeightTriad};

/// Default largest domain accepted by [`brute_force_gravity`].
pub const GRAVITY_CEILING: u32 = 40;
/// Default largest domain accepted by [`brute_force_planetary`].
pub const PLANETARY_CEILING: u32 = 60;

/// `t = gamma^c · q` with `q` free of `c`-th powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalClassKey {
    pub gamma: u64,
    pub q: u64,
}

/// Trial-division split of `t >= 1` into weight and class kernel.
pub fn radical_key(t: u64, c_abs: u32) -> RadicalClassKey {
    assert!(t >= 1 && c_abs >= 1);
    let (mut gamma, mut q, mut rest) = (1u64, 1u64, t);
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        gamma *= p.pow(e / c_abs);
        q *= p.pow(e % c_abs);
        p += 1;
    }
    if rest > 1 {
        if c_abs == 1 {
            gamma *= rest;
        } else {
            q *= rest;
        }
    }
    RadicalClassKey { gamma, q }
}

fn all_vectors(domain: u32) -> Vec<WaveVector> {
    let d = domain as i32;
    let mut out = Vec::new();
    for m in -d..=d {
        for n in -d..=d {
            if m != 0 || n != 0 {
                out.push(WaveVector::new(m, n));
            }
        }
    }
    out
}

fn check_ceiling(domain: u32, ceiling: u32) -> Result<()> {
    if domain == 0 {
        return Err(Error::InvalidConfig("domain must be at least 1"));
    }
    if domain > ceiling {
        return Err(Error::OracleCeiling { domain, ceiling });
    }
    Ok(())
}

/// Complete gravity solution set of a small domain.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GravityOracle {
    /// Tuples whose four norms share one class, canonical and sorted.
    pub single_class: Vec<ResonanceQuad>,
    /// Tuples spanning two classes, canonical and sorted.
    pub two_class: Vec<TrivialPairing>,
}

/// Frequency of a vector pair as a formal sum `Σ coeff · q^(1/4)`, terms
/// ordered by `q`; a single term is padded with `(0, 0)`.
type FrequencyKey = [(u64, u64); 2];

fn pair_frequency(a: RadicalClassKey, b: RadicalClassKey) -> FrequencyKey {
    if a.q == b.q {
        [(a.q, a.gamma + b.gamma), (0, 0)]
    } else if a.q < b.q {
        [(a.q, a.gamma), (b.q, b.gamma)]
    } else {
        [(b.q, b.gamma), (a.q, a.gamma)]
    }
}

/// Every resonant gravity quadruple in `[-D, D]²` with `D <= 40`.
pub fn brute_force_gravity(domain: u32) -> Result<GravityOracle> {
    brute_force_gravity_with_ceiling(domain, GRAVITY_CEILING)
}

pub fn brute_force_gravity_with_ceiling(domain: u32, ceiling: u32) -> Result<GravityOracle> {
    check_ceiling(domain, ceiling)?;
    let d = domain as i32;
    let side = 2 * d + 1;
    let index = |k: WaveVector| ((k.m + d) * side + (k.n + d)) as usize;
    let mut keys = alloc::vec![RadicalClassKey { gamma: 0, q: 0 }; (side * side) as usize];
    for k in all_vectors(domain) {
        keys[index(k)] = radical_key(k.norm_sq(), 4);
    }

    let mut out = GravityOracle::default();
    let mut group: Vec<(FrequencyKey, WaveVector, WaveVector)> = Vec::new();
    for sm in -2 * d..=2 * d {
        for sn in -2 * d..=2 * d {
            group.clear();
            // k1 < k2 with k1 + k2 = s, both nonzero and inside the box
            for m1 in (sm - d).max(-d)..=(sm + d).min(d) {
                for n1 in (sn - d).max(-d)..=(sn + d).min(d) {
                    let k1 = WaveVector::new(m1, n1);
                    let k2 = WaveVector::new(sm - m1, sn - n1);
                    if k1.is_zero() || k2.is_zero() || k1 >= k2 {
                        continue;
                    }
                    group.push((pair_frequency(keys[index(k1)], keys[index(k2)]), k1, k2));
                }
            }
            group.sort_unstable();
            let mut start = 0;
            while start < group.len() {
                let freq = group[start].0;
                let len = group[start..].iter().take_while(|g| g.0 == freq).count();
                let run = &group[start..start + len];
                start += len;
                for (i, &(_, a1, a2)) in run.iter().enumerate() {
                    for &(_, b1, b2) in &run[i + 1..] {
                        emit_gravity(&mut out, &keys, index, [a1, a2], [b1, b2]);
                    }
                }
            }
        }
    }
    out.single_class.sort_unstable();
    out.single_class.dedup();
    out.two_class.sort_unstable();
    out.two_class.dedup();
    Ok(out)
}

fn emit_gravity(
    out: &mut GravityOracle,
    keys: &[RadicalClassKey],
    index: impl Fn(WaveVector) -> usize,
    a: [WaveVector; 2],
    b: [WaveVector; 2],
) {
    let ka = [keys[index(a[0])], keys[index(a[1])]];
    let kb = [keys[index(b[0])], keys[index(b[1])]];
    let sides = |l: [WaveVector; 2], r: [WaveVector; 2]| {
        let l = if l[0] <= l[1] { l } else { [l[1], l[0]] };
        let r = if r[0] <= r[1] { r } else { [r[1], r[0]] };
        if l <= r {
            (l, r)
        } else {
            (r, l)
        }
    };
    if ka.iter().chain(&kb).all(|k| k.q == ka[0].q) {
        let w = |k: RadicalClassKey| k.gamma as u32;
        let weights = WeightQuad::from_pairs((w(ka[0]), w(ka[1])), (w(kb[0]), w(kb[1])))
            .expect("equal frequency keys imply equal weight sums");
        let (left, right) = sides(a, b);
        out.single_class.push(ResonanceQuad { q: ClassIndex(ka[0].q), left, right, weights });
    } else {
        let (qa, qb) = (ka[0].q.min(ka[1].q), ka[0].q.max(ka[1].q));
        let (left, right) = sides(a, b);
        out.two_class.push(TrivialPairing { classes: (ClassIndex(qa), ClassIndex(qb)), left, right });
    }
}

/// Every planetary triad in `[-D, D]²` with `D <= 60`.
pub fn brute_force_planetary(domain: u32) -> Result<Vec<ResonanceTriad>> {
    brute_force_planetary_with_ceiling(domain, PLANETARY_CEILING)
}

pub fn brute_force_planetary_with_ceiling(domain: u32, ceiling: u32) -> Result<Vec<ResonanceTriad>> {
    check_ceiling(domain, ceiling)?;
    let d = domain as i64;
    let mut keyed: Vec<(RadicalClassKey, WaveVector)> =
        all_vectors(domain).into_iter().map(|k| (radical_key(k.norm_sq(), 2), k)).collect();
    keyed.sort_unstable_by_key(|&(key, k)| (key.q, key.gamma, k));

    let mut out = Vec::new();
    let mut start = 0;
    while start < keyed.len() {
        let q = keyed[start].0.q;
        let len = keyed[start..].iter().take_while(|e| e.0.q == q).count();
        let class = &keyed[start..start + len];
        start += len;
        for (i, &(a, k1)) in class.iter().enumerate() {
            for &(b, k2) in &class[i + 1..] {
                let (g1, g2) = (a.gamma, b.gamma);
                if (g1 * g2) % (g1 + g2) != 0 {
                    continue;
                }
                let g3 = g1 * g2 / (g1 + g2);
                let m3 = k1.m as i64 + k2.m as i64;
                let rest = (g3 * g3 * q) as i64 - m3 * m3;
                if m3.abs() > d || rest < 0 {
                    continue;
                }
                let n3 = isqrt(rest as u64) as i64;
                if n3 * n3 != rest || n3 > d {
                    continue;
                }
                let (lo, hi) = if g1 <= g2 { (g1, g2) } else { (g2, g1) };
                let weights = WeightTriad { g1: lo as u32, g2: hi as u32, g3: g3 as u32 };
                let pair = if k1 <= k2 { [k1, k2] } else { [k2, k1] };
                for n in if n3 == 0 { [0, 0] } else { [n3, -n3] } {
                    let k3 = WaveVector::new(m3 as i32, n as i32);
                    if k3.is_zero() || k3 == k1 || k3 == k2 {
                        continue;
                    }
                    out.push(ResonanceTriad { q: ClassIndex(q), pair, sum: k3, weights });
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
