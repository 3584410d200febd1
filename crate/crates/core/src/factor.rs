//! Smallest-prime-factor table and exact factorizations.

use alloc::vec::Vec;

use crate::error::{try_zeroed, Error, Result};

/// Prime factorization as `(prime, exponent)` pairs, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from pairs; callers guarantee primality and
    /// ascending order (checked in debug builds).
    pub fn from_pairs(factors: Vec<(u64, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        Factorization { factors }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> u64 {
        self.factors.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }
}

/// Smallest prime factor of every integer in `2..=limit`.
#[derive(Debug, Clone)]
pub struct SpfTable {
    spf: Vec<u32>,
}

impl SpfTable {
    /// Linear sieve over `0..=limit`. `limit` must fit in a `u32`.
    pub fn new(limit: u64) -> Result<Self> {
        let limit = u32::try_from(limit)
            .map_err(|_| Error::InvalidConfig("factor table limit exceeds u32"))?
            as usize;
        let mut spf: Vec<u32> = try_zeroed(limit + 1, "smallest-prime-factor table")?;
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                if p > si || i * p as usize > limit {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        Ok(SpfTable { spf })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit() && self.spf[n as usize] as u64 == n
    }

    /// Exact factorization of `1 <= m <= limit`.
    pub fn factorize(&self, m: u64) -> Result<Factorization> {
        if m == 0 || m > self.limit() {
            return Err(Error::OutOfRange { value: m, limit: self.limit() });
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut rest = m as usize;
        while rest > 1 {
            let p = self.spf[rest] as usize;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        Ok(Factorization { factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(mut m: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= m {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if m > 1 {
            out.push((m, 1));
        }
        out
    }

    #[test]
    fn documented_factorizations() {
        let t = SpfTable::new(100_000).unwrap();
        assert_eq!(t.factorize(81920).unwrap().pairs(), &[(2, 14), (5, 1)]);
        assert_eq!(t.factorize(1).unwrap().pairs(), &[]);
        assert_eq!(t.factorize(23125).unwrap().pairs(), &[(5, 4), (37, 1)]);
    }

    #[test]
    fn matches_trial_division() {
        let t = SpfTable::new(20_000).unwrap();
        for m in 1..=20_000 {
            let f = t.factorize(m).unwrap();
            assert_eq!(f.pairs(), trial(m).as_slice(), "m = {m}");
            assert_eq!(f.value(), m);
        }
    }

    #[test]
    fn out_of_range_rejected() {
        let t = SpfTable::new(100).unwrap();
        assert_eq!(t.factorize(0), Err(Error::OutOfRange { value: 0, limit: 100 }));
        assert!(t.factorize(101).is_err());
        assert!(t.factorize(100).is_ok());
        assert!(t.is_prime(97) && !t.is_prime(91));
    }
}
