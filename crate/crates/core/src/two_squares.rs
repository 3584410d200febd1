//! Representations `m = x² + y²`.
//!
//! Primitive representations (`gcd(x, y) = 1`) correspond one-to-one to the
//! square roots `t` of `-1 (mod m)` with `0 < t < m/2`; each root is turned
//! into a representation by the Euclidean remainder sequence of `(m, t)`.
//! Imprimitive ones are primitive representations of `m / d²` scaled by `d`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{exact_sqrt, gcd, inv_mod, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::factor::{Factorization, SpfTable};

/// `x² + y²` with `x >= y >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSquareDecomposition {
    pub x: u32,
    pub y: u32,
}

impl TwoSquareDecomposition {
    pub fn new(a: u32, b: u32) -> Self {
        if a >= b {
            TwoSquareDecomposition { x: a, y: b }
        } else {
            TwoSquareDecomposition { x: b, y: a }
        }
    }

    pub fn value(&self) -> u64 {
        let (x, y) = (self.x as u64, self.y as u64);
        x * x + y * y
    }

    /// Number of ordered pairs `(a, b)`, `a, b >= 0`, this decomposition
    /// stands for: 1 on the diagonal, 2 otherwise.
    pub fn ordered_count(&self) -> u32 {
        if self.x == self.y {
            1
        } else {
            2
        }
    }
}

/// A square root of `-1` modulo the prime `p ≡ 1 (mod 4)`.
fn sqrt_minus_one_mod_prime(p: u64) -> u64 {
    debug_assert_eq!(p % 4, 1);
    // c^((p-1)/4) for a quadratic non-residue c squares to c^((p-1)/2) = -1.
    let mut c = 2;
    while pow_mod(c, (p - 1) / 2, p) != p - 1 {
        c += 1;
    }
    pow_mod(c, (p - 1) / 4, p)
}

/// Lifts a root of `x² + 1 ≡ 0 (mod p)` to a root modulo `p^e`.
fn hensel_lift(root: u64, p: u64, e: u32) -> u64 {
    let mut r = root;
    let mut modulus = p;
    for _ in 1..e {
        modulus *= p;
        // r ← r - (r² + 1)/(2r); 2r is invertible since p is odd and p ∤ r.
        let f = (mul_mod(r, r, modulus) + 1) % modulus;
        let inv = inv_mod(2 * r % modulus, modulus).expect("2r is a unit modulo an odd prime power");
        r = (r + modulus - mul_mod(f, inv, modulus)) % modulus;
    }
    r
}

/// All `t` in `(0, m/2)` with `t² ≡ -1 (mod m)`, ascending, for the
/// integer `m >= 2` with factorization `f`.
///
/// Empty when `4 | m` or a prime `p ≡ 3 (mod 4)` divides `m`.
pub fn sqrt_minus_one_roots(f: &Factorization) -> Vec<u64> {
    let m = f.value();
    if m < 2 {
        return Vec::new();
    }
    // Residues modulo the running product of prime powers.
    let mut roots: Vec<u64> = vec![0];
    let mut modulus = 1u64;
    for &(p, e) in f.pairs() {
        let (local, pe): (Vec<u64>, u64) = match (p % 4, e) {
            (2, 1) => (vec![1], 2),
            (2, _) | (3, _) => return Vec::new(),
            _ => {
                let pe = p.pow(e);
                let r = hensel_lift(sqrt_minus_one_mod_prime(p), p, e);
                (vec![r, pe - r], pe)
            }
        };
        // CRT: x ≡ a (mod modulus), x ≡ b (mod pe)
        let inv = inv_mod(modulus % pe, pe).unwrap_or(0);
        let combined = modulus * pe;
        let mut next = Vec::with_capacity(roots.len() * local.len());
        for &a in &roots {
            for &b in &local {
                let diff = (b + pe - a % pe) % pe;
                let k = mul_mod(diff, inv, pe);
                next.push((a + modulus * k) % combined);
            }
        }
        roots = next;
        modulus = combined;
    }
    let mut out: Vec<u64> = roots.into_iter().filter(|&t| t > 0 && 2 * t < m).collect();
    out.sort_unstable();
    out
}

/// Primitive representation of `m` from a root `t` of `-1 (mod m)`,
/// `0 < t < m/2`: run the remainder sequence `m, t, ...` down to the first
/// remainder whose square is below `m`; it and its successor are `x, y`.
pub fn cornacchia_primitive(m: u64, t: u64) -> Result<TwoSquareDecomposition> {
    if t == 0 || 2 * t >= m {
        return Err(Error::Inconsistent("root of -1 must lie in (0, m/2)"));
    }
    let (mut a, mut b) = (m, t);
    while (b as u128) * (b as u128) >= m as u128 {
        (a, b) = (b, a % b);
    }
    let x = b;
    let y = a % b;
    if x as u128 * x as u128 + y as u128 * y as u128 != m as u128 {
        return Err(Error::Inconsistent("remainder sequence did not yield x² + y² = m"));
    }
    let to_u32 = |v: u64| u32::try_from(v).map_err(|_| Error::Inconsistent("coordinate overflow"));
    Ok(TwoSquareDecomposition::new(to_u32(x)?, to_u32(y)?))
}

/// Primitive representations of the number with factorization `f`.
fn primitive_representations(f: &Factorization) -> Result<Vec<TwoSquareDecomposition>> {
    match f.value() {
        1 => Ok(vec![TwoSquareDecomposition::new(1, 0)]),
        2 => Ok(vec![TwoSquareDecomposition::new(1, 1)]),
        m => sqrt_minus_one_roots(f)
            .into_iter()
            .map(|t| cornacchia_primitive(m, t))
            .collect(),
    }
}

/// Every decomposition `m = x² + y²`, `x >= y >= 0`, sorted by descending
/// `x`, given the factorization of `m`.
pub fn all_two_square_decompositions(f: &Factorization) -> Result<Vec<TwoSquareDecomposition>> {
    let pairs = f.pairs();
    // Representations exist only if every p ≡ 3 (mod 4) has an even exponent.
    if pairs.iter().any(|&(p, e)| p % 4 == 3 && e % 2 == 1) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // Walk all square divisors d² | m via a mixed-radix counter over ⌊e/2⌋.
    let mut halves: Vec<u32> = vec![0; pairs.len()];
    loop {
        let mut d = 1u64;
        let mut reduced = Vec::with_capacity(pairs.len());
        for (&(p, e), &h) in pairs.iter().zip(&halves) {
            d *= p.pow(h);
            if e > 2 * h {
                reduced.push((p, e - 2 * h));
            }
        }
        for rep in primitive_representations(&Factorization::from_pairs(reduced))? {
            let scale = |v: u32| {
                u32::try_from(v as u64 * d).map_err(|_| Error::Inconsistent("coordinate overflow"))
            };
            out.push(TwoSquareDecomposition::new(scale(rep.x)?, scale(rep.y)?));
        }
        let mut i = 0;
        loop {
            if i == pairs.len() {
                out.sort_unstable_by(|a, b| b.cmp(a));
                out.dedup();
                return Ok(out);
            }
            if halves[i] < pairs[i].1 / 2 {
                halves[i] += 1;
                break;
            }
            halves[i] = 0;
            i += 1;
        }
    }
}

/// Euler's count: `δ = Π_{p≡1 (4)} (s_p + 1) · Π_{p≡3 (4)} ((-1)^{t_p} + 1)/2`.
///
/// `δ` counts representations `(x, y)` with `x > 0, y >= 0`. The canonical
/// decompositions returned by [`all_two_square_decompositions`] number
/// `⌊δ/2⌋ + [m is a square] + [m is twice a square]`: `⌊δ/2⌋` of them have
/// `x > y > 0`, and the axis and diagonal cases are counted separately.
pub fn euler_delta(f: &Factorization) -> u64 {
    f.pairs().iter().fold(1u64, |acc, &(p, e)| match p % 4 {
        1 => acc * (e as u64 + 1),
        3 if e % 2 == 1 => 0,
        _ => acc,
    })
}

/// Number of canonical decompositions predicted by [`euler_delta`].
pub fn decomposition_count(f: &Factorization) -> u64 {
    let m = f.value();
    let square = exact_sqrt(m).is_some() as u64;
    let twice_square = (m % 2 == 0 && exact_sqrt(m / 2).is_some()) as u64;
    euler_delta(f) / 2 + square + twice_square
}

/// Two-square routines backed by a shared factor table.
#[derive(Debug, Clone)]
pub struct TwoSquares {
    table: SpfTable,
}

impl TwoSquares {
    pub fn new(limit: u64) -> Result<Self> {
        Ok(TwoSquares { table: SpfTable::new(limit)? })
    }

    pub fn from_table(table: SpfTable) -> Self {
        TwoSquares { table }
    }

    pub fn table(&self) -> &SpfTable {
        &self.table
    }

    pub fn factorize(&self, m: u64) -> Result<Factorization> {
        self.table.factorize(m)
    }

    pub fn sqrt_minus_one_roots(&self, m: u64) -> Result<Vec<u64>> {
        Ok(sqrt_minus_one_roots(&self.table.factorize(m)?))
    }

    pub fn decompositions(&self, m: u64) -> Result<Vec<TwoSquareDecomposition>> {
        all_two_square_decompositions(&self.table.factorize(m)?)
    }
}

/// Checks that every decomposition has coprime parts; used by tests and
/// the acceptance suite on [`cornacchia_primitive`] output.
pub fn is_primitive(d: &TwoSquareDecomposition) -> bool {
    gcd(d.x as u64, d.y as u64) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn brute(m: u64) -> Vec<TwoSquareDecomposition> {
        let mut out = Vec::new();
        let mut x = 0u64;
        while x * x <= m {
            if let Some(y) = exact_sqrt(m - x * x) {
                if x >= y {
                    out.push(TwoSquareDecomposition::new(x as u32, y as u32));
                }
            }
            x += 1;
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn roots_brute(m: u64) -> Vec<u64> {
        (1..m).filter(|&t| 2 * t < m && (t * t + 1) % m == 0).collect()
    }

    #[test]
    fn documented_roots() {
        let ts = TwoSquares::new(1000).unwrap();
        assert_eq!(ts.sqrt_minus_one_roots(13).unwrap(), vec![5]);
        assert_eq!(ts.sqrt_minus_one_roots(2).unwrap(), Vec::<u64>::new());
        assert_eq!(ts.sqrt_minus_one_roots(25).unwrap(), vec![7]);
        assert!(ts.sqrt_minus_one_roots(20).unwrap().is_empty());
        assert!(ts.sqrt_minus_one_roots(21).unwrap().is_empty());
    }

    #[test]
    fn roots_match_exhaustive_scan() {
        let ts = TwoSquares::new(5000).unwrap();
        for m in 2..5000 {
            assert_eq!(ts.sqrt_minus_one_roots(m).unwrap(), roots_brute(m), "m = {m}");
        }
    }

    #[test]
    fn documented_cornacchia() {
        assert_eq!(cornacchia_primitive(13, 5).unwrap(), TwoSquareDecomposition::new(3, 2));
        assert_eq!(cornacchia_primitive(5, 2).unwrap(), TwoSquareDecomposition::new(2, 1));
        assert_eq!(cornacchia_primitive(25, 7).unwrap(), TwoSquareDecomposition::new(4, 3));
    }

    #[test]
    fn cornacchia_rejects_bad_root() {
        // 4² = 16 ≢ -1 (mod 13)
        assert!(matches!(cornacchia_primitive(13, 4), Err(Error::Inconsistent(_))));
        assert!(cornacchia_primitive(13, 0).is_err());
        assert!(cornacchia_primitive(13, 7).is_err());
    }

    #[test]
    fn documented_decompositions() {
        let ts = TwoSquares::new(100_000).unwrap();
        let d = |x, y| TwoSquareDecomposition::new(x, y);
        assert_eq!(ts.decompositions(25).unwrap(), vec![d(5, 0), d(4, 3)]);
        assert_eq!(ts.decompositions(2).unwrap(), vec![d(1, 1)]);
        assert!(ts.decompositions(21).unwrap().is_empty());
        assert!(ts.decompositions(23125).unwrap().contains(&d(150, 25)));
        assert_eq!(ts.decompositions(1).unwrap(), vec![d(1, 0)]);
    }

    #[test]
    fn decompositions_match_brute_force() {
        let ts = TwoSquares::new(30_000).unwrap();
        for m in 1..=30_000 {
            let got = ts.decompositions(m).unwrap();
            assert_eq!(got, brute(m), "m = {m}");
            let f = ts.factorize(m).unwrap();
            assert_eq!(decomposition_count(&f), got.len() as u64, "m = {m}");
        }
    }

    #[test]
    fn primitive_outputs_are_coprime() {
        let ts = TwoSquares::new(50_000).unwrap();
        for m in 3..50_000 {
            for t in ts.sqrt_minus_one_roots(m).unwrap() {
                let d = cornacchia_primitive(m, t).unwrap();
                assert!(is_primitive(&d), "m = {m}, t = {t}");
                assert_eq!(d.value(), m);
            }
        }
    }

    #[test]
    fn distinct_roots_give_distinct_representations() {
        let ts = TwoSquares::new(100_000).unwrap();
        // 5·13·17·29 has 8 roots in (0, m/2)
        let m = 5 * 13 * 17 * 29;
        let roots = ts.sqrt_minus_one_roots(m).unwrap();
        assert_eq!(roots.len(), 8);
        let reps: BTreeSet<_> =
            roots.iter().map(|&t| cornacchia_primitive(m, t).unwrap()).collect();
        assert_eq!(reps.len(), 8);
    }

    #[test]
    fn documented_euler_delta() {
        let ts = TwoSquares::new(100).unwrap();
        assert_eq!(euler_delta(&ts.factorize(5).unwrap()), 2);
        assert_eq!(euler_delta(&ts.factorize(21).unwrap()), 0);
        assert_eq!(euler_delta(&ts.factorize(25).unwrap()), 3);
    }
}
