//! Per-class resonance search: lean-class filter, sign expansion and the
//! momentum join that turns weight solutions into wave-vector tuples.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::exact_root;
use crate::class_sieve::{ClassIndex, ClassRecord};
use crate::config::{QuotientMode, RunConfig, WaveKind};
use crate::error::{Error, Result};
use crate::two_squares::TwoSquareDecomposition;
use crate::weights::{WeightQuad, WeightTriad};

/// A lattice wave vector `(m, n)`; ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WaveVector {
    pub m: i32,
    pub n: i32,
}

impl WaveVector {
    pub const fn new(m: i32, n: i32) -> Self {
        WaveVector { m, n }
    }

    pub fn norm_sq(&self) -> u64 {
        let (m, n) = (self.m as i64, self.n as i64);
        (m * m + n * n) as u64
    }

    /// `max(|m|, |n|)`: the smallest domain containing the vector.
    pub fn extent(&self) -> u32 {
        self.m.unsigned_abs().max(self.n.unsigned_abs())
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.n == 0
    }

    pub fn in_domain(&self, domain: u32) -> bool {
        !self.is_zero() && self.extent() <= domain
    }

    fn signed(self, sm: i32, sn: i32) -> Self {
        WaveVector { m: sm * self.m, n: sn * self.n }
    }

    fn plus(self, other: Self) -> Self {
        WaveVector { m: self.m + other.m, n: self.n + other.n }
    }

    fn minus(self, other: Self) -> Self {
        WaveVector { m: self.m - other.m, n: self.n - other.n }
    }
}

impl fmt::Display for WaveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// The sign group acting on all vectors of a tuple at once.
const SIGN_GROUP: [(i32, i32); 4] = [(1, 1), (-1, 1), (1, -1), (-1, -1)];

fn sorted_pair(a: WaveVector, b: WaveVector) -> [WaveVector; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

/// Resonant gravity quadruple `k1L + k2L = k1R + k2R` inside one class.
///
/// Canonical form: each side sorted, lexicographically smaller side on the
/// left. `weights` is the canonical weight quad of the tuple; its `L`/`R`
/// labels follow the weight ordering, not the vector sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResonanceQuad {
    pub q: ClassIndex,
    pub left: [WaveVector; 2],
    pub right: [WaveVector; 2],
    pub weights: WeightQuad,
}

impl ResonanceQuad {
    pub fn canonical(
        q: ClassIndex,
        weights: WeightQuad,
        left: [WaveVector; 2],
        right: [WaveVector; 2],
    ) -> Self {
        let l = sorted_pair(left[0], left[1]);
        let r = sorted_pair(right[0], right[1]);
        let (left, right) = if l <= r { (l, r) } else { (r, l) };
        ResonanceQuad { q, left, right, weights }
    }

    pub fn vectors(&self) -> [WaveVector; 4] {
        [self.left[0], self.left[1], self.right[0], self.right[1]]
    }

    /// Smallest domain half-width containing the tuple.
    pub fn extent(&self) -> u32 {
        self.vectors().iter().map(WaveVector::extent).max().unwrap_or(0)
    }

    pub fn sign_image(&self, sm: i32, sn: i32) -> Self {
        let f = |v: WaveVector| v.signed(sm, sn);
        Self::canonical(
            self.q,
            self.weights,
            [f(self.left[0]), f(self.left[1])],
            [f(self.right[0]), f(self.right[1])],
        )
    }

    /// True if this tuple is the smallest member of its sign orbit.
    pub fn is_orbit_representative(&self) -> bool {
        SIGN_GROUP.iter().all(|&(sm, sn)| *self <= self.sign_image(sm, sn))
    }

    /// Both sides are antipodal pairs `{k, -k}`, so the momentum is zero.
    pub fn is_antipodal(&self) -> bool {
        let opposite = |p: [WaveVector; 2]| p[0].m == -p[1].m && p[0].n == -p[1].n;
        opposite(self.left) && opposite(self.right)
    }

    /// Weight of each vector in [`Self::vectors`] order, from its norm.
    pub fn vector_weights(&self) -> Option<[u32; 4]> {
        let mut out = [0; 4];
        for (w, v) in out.iter_mut().zip(self.vectors()) {
            *w = weight_of(v.norm_sq(), self.q, 4)?;
        }
        Some(out)
    }
}

impl fmt::Display for ResonanceQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} => {}{}  q={}",
            self.left[0], self.left[1], self.right[0], self.right[1], self.q
        )
    }
}

/// Resonant planetary triad: `1/|k1| + 1/|k2| = 1/|k3|`, `m1 + m2 = m3`.
///
/// `pair` holds `k1, k2` in lexicographic order, `sum` is `k3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResonanceTriad {
    pub q: ClassIndex,
    pub pair: [WaveVector; 2],
    pub sum: WaveVector,
    pub weights: WeightTriad,
}

impl ResonanceTriad {
    pub fn canonical(q: ClassIndex, weights: WeightTriad, k1: WaveVector, k2: WaveVector, k3: WaveVector) -> Self {
        ResonanceTriad { q, pair: sorted_pair(k1, k2), sum: k3, weights }
    }

    pub fn vectors(&self) -> [WaveVector; 3] {
        [self.pair[0], self.pair[1], self.sum]
    }

    pub fn extent(&self) -> u32 {
        self.vectors().iter().map(WaveVector::extent).max().unwrap_or(0)
    }

    pub fn sign_image(&self, sm: i32, sn: i32) -> Self {
        let f = |v: WaveVector| v.signed(sm, sn);
        Self::canonical(self.q, self.weights, f(self.pair[0]), f(self.pair[1]), f(self.sum))
    }

    pub fn is_orbit_representative(&self) -> bool {
        SIGN_GROUP.iter().all(|&(sm, sn)| *self <= self.sign_image(sm, sn))
    }

    /// Planetary analogue of an asymmetric tuple: `g1 ≠ g2` (then all three
    /// weights differ).
    pub fn is_asymmetric(&self) -> bool {
        self.weights.g1 != self.weights.g2
    }

    pub fn vector_weights(&self) -> Option<[u32; 3]> {
        let mut out = [0; 3];
        for (w, v) in out.iter_mut().zip(self.vectors()) {
            *w = weight_of(v.norm_sq(), self.q, 2)?;
        }
        Some(out)
    }
}

impl fmt::Display for ResonanceTriad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} => {}  q={}", self.pair[0], self.pair[1], self.sum, self.q)
    }
}

/// Gravity quadruple whose vectors span two classes: `|k1L| = |k1R|` and
/// `|k2L| = |k2R|` with the two norms in different classes. Stored in the
/// same canonical vector order as [`ResonanceQuad`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrivialPairing {
    pub classes: (ClassIndex, ClassIndex),
    pub left: [WaveVector; 2],
    pub right: [WaveVector; 2],
}

impl TrivialPairing {
    pub fn vectors(&self) -> [WaveVector; 4] {
        [self.left[0], self.left[1], self.right[0], self.right[1]]
    }

    pub fn extent(&self) -> u32 {
        self.vectors().iter().map(WaveVector::extent).max().unwrap_or(0)
    }
}

/// `γ` with `γ^power · q = norm`, if it exists.
fn weight_of(norm: u64, q: ClassIndex, power: u32) -> Option<u32> {
    if q.0 == 0 || norm % q.0 != 0 {
        return None;
    }
    exact_root(norm / q.0, power).and_then(|g| u32::try_from(g).ok())
}

/// Classes that cannot host a nontrivial tuple and are skipped unsearched.
///
/// Gravity: multiplicity 1 and at most 4 ordered in-domain decompositions of
/// `q`. Planetary: multiplicity 1, since `1/γ₁ + 1/γ₂ = 1/γ₃` has no
/// solution with all weights equal to 1.
pub fn is_lean_class(rec: &ClassRecord, kind: WaveKind) -> bool {
    match kind {
        WaveKind::Gravity4 => rec.mul == 1 && rec.ordered_count(1) <= 4,
        WaveKind::Planetary3 => rec.mul == 1,
    }
}

/// Every distinct vector obtained from `(x, y)` by swapping coordinates and
/// flipping signs; ascending.
pub fn expand_signed_variants(d: &TwoSquareDecomposition) -> Vec<WaveVector> {
    let (x, y) = (d.x as i32, d.y as i32);
    let mut out = Vec::with_capacity(8);
    for (a, b) in [(x, y), (y, x)] {
        for (sa, sb) in SIGN_GROUP {
            out.push(WaveVector::new(sa * a, sb * b));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Vectors of norm `t_γ` inside the domain, ascending.
fn class_vectors(rec: &ClassRecord, gamma: u32) -> Vec<WaveVector> {
    let mut out: Vec<WaveVector> = rec.in_domain(gamma).flat_map(expand_signed_variants).collect();
    out.sort_unstable();
    out
}

/// A vector pair on one side of a gravity tuple, keyed by its momentum.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct SideEntry {
    momentum: WaveVector,
    vectors: [WaveVector; 2],
    weights: (u32, u32),
}

fn check(cond: bool, what: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistent(what))
    }
}

/// All single-class gravity tuples of class `rec.q` built from `quads`.
///
/// For each weight sum, every vector pair whose weights occur on a side of
/// some quad is keyed by its momentum; pairs sharing a momentum and forming
/// a quad from `quads` are resonant. Two distinct unordered pairs with equal
/// sum cannot share a vector, so the four vectors are pairwise distinct.
pub fn search_class_gravity(
    rec: &ClassRecord,
    quads: &[WeightQuad],
    cfg: &RunConfig,
) -> Result<Vec<ResonanceQuad>> {
    check(rec.kind == WaveKind::Gravity4, "gravity search on a planetary record")?;
    let vectors: Vec<Vec<WaveVector>> = (1..=rec.mul).map(|g| class_vectors(rec, g)).collect();
    let of = |g: u32| vectors[g as usize - 1].as_slice();

    let mut out = Vec::new();
    let mut start = 0;
    while start < quads.len() {
        let sum = quads[start].sum();
        let end = start + quads[start..].iter().take_while(|w| w.sum() == sum).count();
        let batch = &quads[start..end];
        start = end;

        let mut allowed: Vec<WeightQuad> =
            batch.iter().copied().filter(|w| w.max_weight() <= rec.mul).collect();
        allowed.sort_unstable();
        let mut sides: Vec<(u32, u32)> =
            allowed.iter().flat_map(|w| [(w.g1l, w.g2l), (w.g1r, w.g2r)]).collect();
        sides.sort_unstable();
        sides.dedup();

        let mut entries = Vec::new();
        for &(a, b) in &sides {
            for (i, &k1) in of(a).iter().enumerate() {
                let partners = if a == b { &of(b)[i + 1..] } else { of(b) };
                for &k2 in partners {
                    entries.push(SideEntry { momentum: k1.plus(k2), vectors: [k1, k2], weights: (a, b) });
                }
            }
        }
        entries.sort_unstable();

        let batch_start = out.len();
        let mut run = 0;
        while run < entries.len() {
            let momentum = entries[run].momentum;
            let len = entries[run..].iter().take_while(|e| e.momentum == momentum).count();
            let group = &entries[run..run + len];
            run += len;
            for (i, x) in group.iter().enumerate() {
                for y in &group[i + 1..] {
                    let Some(weights) = WeightQuad::from_pairs(x.weights, y.weights) else {
                        continue;
                    };
                    if allowed.binary_search(&weights).is_err() {
                        continue;
                    }
                    let tuple = ResonanceQuad::canonical(rec.q, weights, x.vectors, y.vectors);
                    verify_gravity_emission(&tuple, rec, cfg)?;
                    if cfg.quotient == QuotientMode::SignOrbits && !tuple.is_orbit_representative() {
                        continue;
                    }
                    out.push(tuple);
                }
            }
        }
        out[batch_start..].sort_unstable();
        let mut batch_out = out.split_off(batch_start);
        batch_out.dedup();
        out.extend(batch_out);
    }
    out.sort_unstable();
    Ok(out)
}

fn verify_gravity_emission(t: &ResonanceQuad, rec: &ClassRecord, cfg: &RunConfig) -> Result<()> {
    let v = t.vectors();
    check(v.iter().all(|k| k.in_domain(cfg.domain())), "vector outside domain")?;
    check(
        t.left[0].plus(t.left[1]) == t.right[0].plus(t.right[1]),
        "momentum not conserved",
    )?;
    for i in 0..4 {
        for j in i + 1..4 {
            check(v[i] != v[j], "repeated vector")?;
        }
    }
    let w = t.vector_weights().ok_or(Error::Inconsistent("norm outside class"))?;
    check(w.iter().all(|&g| g >= 1 && g <= rec.mul), "weight above multiplicity")?;
    check(w[0] + w[1] == w[2] + w[3], "weight sums differ")?;
    Ok(())
}

/// All planetary triads of class `rec.q` for the given weight triads.
///
/// `k2` is determined by `m2 = m3 - m1` up to the sign of `n2`, so for each
/// `(k1, k3)` the candidates are found by binary search on the sorted `k2`
/// vectors.
pub fn search_class_planetary(
    rec: &ClassRecord,
    triads: &[WeightTriad],
    cfg: &RunConfig,
) -> Result<Vec<ResonanceTriad>> {
    check(rec.kind == WaveKind::Planetary3, "planetary search on a gravity record")?;
    let vectors: Vec<Vec<WaveVector>> = (1..=rec.mul).map(|g| class_vectors(rec, g)).collect();
    let of = |g: u32| vectors[g as usize - 1].as_slice();

    let mut out = Vec::new();
    for triad in triads.iter().filter(|t| t.max_weight() <= rec.mul) {
        let (v1, v2, v3) = (of(triad.g1), of(triad.g2), of(triad.g3));
        for &k3 in v3 {
            for &k1 in v1 {
                let m2 = k3.m - k1.m;
                let lo = v2.partition_point(|k| k.m < m2);
                for &k2 in v2[lo..].iter().take_while(|k| k.m == m2) {
                    if triad.g1 == triad.g2 && k2 <= k1 {
                        continue;
                    }
                    let tuple = ResonanceTriad::canonical(rec.q, *triad, k1, k2, k3);
                    verify_planetary_emission(&tuple, rec, cfg)?;
                    if cfg.quotient == QuotientMode::SignOrbits && !tuple.is_orbit_representative() {
                        continue;
                    }
                    out.push(tuple);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn verify_planetary_emission(t: &ResonanceTriad, rec: &ClassRecord, cfg: &RunConfig) -> Result<()> {
    let v = t.vectors();
    check(v.iter().all(|k| k.in_domain(cfg.domain())), "vector outside domain")?;
    check(t.pair[0].m + t.pair[1].m == t.sum.m, "m-momentum not conserved")?;
    check(v[0] != v[1] && v[0] != v[2] && v[1] != v[2], "repeated vector")?;
    let w = t.vector_weights().ok_or(Error::Inconsistent("norm outside class"))?;
    check(w.iter().all(|&g| g >= 1 && g <= rec.mul), "weight above multiplicity")?;
    let (a, b, c) = (w[0] as u64, w[1] as u64, w[2] as u64);
    check(c * (a + b) == a * b, "harmonic weight condition fails")?;
    Ok(())
}

/// True iff all four weights are pairwise distinct.
pub fn classify_asymmetric(sol: &ResonanceQuad) -> bool {
    sol.weights.is_asymmetric()
}

/// Gravity tuples spanning two classes, `|k1L| = |k1R|`, `|k2L| = |k2R|`.
///
/// For a difference `d = k1L - k1R = k2R - k2L`, the vectors `k` with
/// `|k| = |k - d|` lie on the line `2 k·d = |d|²`; any two points `a < b` of
/// that line give the tuple `{a, b - d} = {a - d, b}`. `class_of` maps a
/// norm to its class index; tuples whose two norms share a class are
/// single-class tuples and are skipped here.
pub fn search_two_class_pairings<F>(cfg: &RunConfig, mut class_of: F) -> Result<Vec<TrivialPairing>>
where
    F: FnMut(u64) -> Result<ClassIndex>,
{
    check(cfg.kind() == WaveKind::Gravity4, "two-class pairings are a gravity notion")?;
    let dom = cfg.domain() as i64;
    let mut out = Vec::new();
    let mut line: Vec<WaveVector> = Vec::new();
    for dx in 0..=2 * dom {
        let dy_start = if dx == 0 { 1 } else { -2 * dom };
        for dy in dy_start..=2 * dom {
            if (dx + dy) % 2 != 0 {
                continue;
            }
            line.clear();
            points_on_bisector(dx, dy, dom, &mut line);
            let d = WaveVector::new(dx as i32, dy as i32);
            for (i, &a) in line.iter().enumerate() {
                let qa = class_of(a.norm_sq())?;
                for &b in &line[i + 1..] {
                    let qb = class_of(b.norm_sq())?;
                    if qa == qb {
                        continue;
                    }
                    let (k2, k3) = (b.minus(d), a.minus(d));
                    let l = sorted_pair(a, k2);
                    let r = sorted_pair(k3, b);
                    let (left, right, classes) = if l <= r {
                        (l, r, (qa.min(qb), qa.max(qb)))
                    } else {
                        (r, l, (qa.min(qb), qa.max(qb)))
                    };
                    out.push(TrivialPairing { classes, left, right });
                }
            }
        }
    }
    out.sort_unstable_by(pairing_order);
    out.dedup();
    Ok(out)
}

fn pairing_order(x: &TrivialPairing, y: &TrivialPairing) -> Ordering {
    (x.classes, x.left, x.right).cmp(&(y.classes, y.left, y.right))
}

/// Lattice points `k` with `2 k·d = |d|²`, `k` and `k - d` nonzero and in
/// `[-dom, dom]²`, in ascending order.
fn points_on_bisector(dx: i64, dy: i64, dom: i64, out: &mut Vec<WaveVector>) {
    let c = (dx * dx + dy * dy) / 2;
    // box for k: intersection of [-dom, dom] and [-dom + d, dom + d]
    let (mlo, mhi) = ((-dom).max(-dom + dx), dom.min(dom + dx));
    let (nlo, nhi) = ((-dom).max(-dom + dy), dom.min(dom + dy));
    if mlo > mhi || nlo > nhi {
        return;
    }
    let mut push = |m: i64, n: i64| {
        let k = WaveVector::new(m as i32, n as i32);
        if !(m == 0 && n == 0) && !(m == dx && n == dy) {
            out.push(k);
        }
    };
    if dy == 0 {
        if c % dx == 0 {
            let m = c / dx;
            if (mlo..=mhi).contains(&m) {
                (nlo..=nhi).for_each(|n| push(m, n));
            }
        }
        return;
    }
    if dx == 0 {
        if c % dy == 0 {
            let n = c / dy;
            if (nlo..=nhi).contains(&n) {
                (mlo..=mhi).for_each(|m| push(m, n));
            }
        }
        return;
    }
    // dx·m + dy·n = c
    let (g, s, _) = ext_gcd(dx, dy.abs());
    if c % g != 0 {
        return;
    }
    let by = dy / g;
    // m ≡ m0 (mod |by|) solves ax·m ≡ c/g (mod |by|)
    let modulus = by.abs();
    let m0 = ((c / g) % modulus * (s % modulus)).rem_euclid(modulus);
    let first = mlo + (m0 - mlo).rem_euclid(modulus);
    let mut m = first;
    while m <= mhi {
        let n = (c - dx * m) / dy;
        if (nlo..=nhi).contains(&n) {
            push(m, n);
        }
        m += modulus;
    }
}

/// `(g, s, t)` with `a·s + b·t = g = gcd(a, b)`, for `a, b > 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}
