//! Per-class weight equations.
//!
//! Inside one class the frequency condition reduces to an equation on the
//! integer weights alone: `γ₁ + γ₂ = γ₃ + γ₄` for gravity waves and
//! `1/γ₁ + 1/γ₂ = 1/γ₃` for planetary waves.

use alloc::vec::Vec;

/// Equality pattern of a [`WeightQuad`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degeneracy {
    /// `g1L < g1R < g2R < g2L`
    NoDegeneration,
    /// `g1L = g1R < g2R = g2L`
    LeftRight,
    /// `g1L < g1R = g2R < g2L`
    Right,
    /// all four equal
    Total,
}

impl Degeneracy {
    pub const ALL: [Degeneracy; 4] =
        [Degeneracy::NoDegeneration, Degeneracy::LeftRight, Degeneracy::Right, Degeneracy::Total];

    /// Case number 1..=4.
    pub fn case_number(self) -> usize {
        self as usize + 1
    }
}

/// Solution of `g1L + g2L = g1R + g2R` with `g1L <= g1R <= g2R <= g2L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightQuad {
    pub g1l: u32,
    pub g2l: u32,
    pub g1r: u32,
    pub g2r: u32,
}

impl WeightQuad {
    /// Orders two weight pairs of equal sum into the canonical quad. Returns
    /// `None` if the sums differ.
    pub fn from_pairs(a: (u32, u32), b: (u32, u32)) -> Option<Self> {
        let a = (a.0.min(a.1), a.0.max(a.1));
        let b = (b.0.min(b.1), b.0.max(b.1));
        if a.0 + a.1 != b.0 + b.1 {
            return None;
        }
        let (l, r) = if a.0 <= b.0 { (a, b) } else { (b, a) };
        Some(WeightQuad { g1l: l.0, g2l: l.1, g1r: r.0, g2r: r.1 })
    }

    pub fn sum(&self) -> u32 {
        self.g1l + self.g2l
    }

    pub fn case(&self) -> Degeneracy {
        match (self.g1l == self.g1r, self.g1r == self.g2r) {
            (true, true) => Degeneracy::Total,
            (true, false) => Degeneracy::LeftRight,
            (false, true) => Degeneracy::Right,
            (false, false) => Degeneracy::NoDegeneration,
        }
    }

    /// All four weights pairwise distinct.
    pub fn is_asymmetric(&self) -> bool {
        self.case() == Degeneracy::NoDegeneration
    }

    pub fn is_valid(&self) -> bool {
        self.g1l >= 1
            && self.g1l <= self.g1r
            && self.g1r <= self.g2r
            && self.g2r <= self.g2l
            && self.g1l + self.g2l == self.g1r + self.g2r
    }

    pub fn max_weight(&self) -> u32 {
        self.g2l
    }
}

/// All canonical weight quads with every weight in `1..=mul`, ordered by
/// `(sum, g1L, g1R)`.
///
/// For a sum `S`, `g1L` runs from `max(1, S - mul)` to `⌊S/2⌋` and `g1R`
/// from `g1L` to `⌊S/2⌋`; `S` itself ranges over `2..=2·mul`.
pub fn solve_additive_weights(mul: u32) -> Vec<WeightQuad> {
    let mut out = Vec::new();
    for s in 2..=2 * mul {
        let low = if s <= mul + 1 { 1 } else { s - mul };
        for g1l in low..=s / 2 {
            for g1r in g1l..=s / 2 {
                let quad = WeightQuad { g1l, g2l: s - g1l, g1r, g2r: s - g1r };
                debug_assert!(quad.is_valid() && quad.g2l <= mul);
                out.push(quad);
            }
        }
    }
    out
}

/// Solution of `1/g1 + 1/g2 = 1/g3`, stored with `g1 <= g2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightTriad {
    pub g1: u32,
    pub g2: u32,
    pub g3: u32,
}

impl WeightTriad {
    pub fn is_valid(&self) -> bool {
        self.g1 >= 1
            && self.g1 <= self.g2
            && self.g3 as u64 * (self.g1 as u64 + self.g2 as u64) == self.g1 as u64 * self.g2 as u64
    }

    pub fn max_weight(&self) -> u32 {
        self.g2
    }

    /// Ordered solutions `(g1, g2, g3)` this triad stands for: 2 unless `g1 = g2`.
    pub fn ordered_count(&self) -> u64 {
        if self.g1 == self.g2 {
            1
        } else {
            2
        }
    }
}

/// All triads with weights in `1..=mul`, ordered by `(g1, g2)`.
pub fn solve_harmonic_weights(mul: u32) -> Vec<WeightTriad> {
    let mut out = Vec::new();
    for g1 in 1..=mul as u64 {
        for g2 in g1..=mul as u64 {
            let (num, den) = (g1 * g2, g1 + g2);
            if num % den == 0 {
                let t = WeightTriad { g1: g1 as u32, g2: g2 as u32, g3: (num / den) as u32 };
                debug_assert!(t.is_valid());
                out.push(t);
            }
        }
    }
    out
}

/// Triads of `precomputed` whose weights all fit `1..=mul`; preserves order.
pub fn subset_for_class(precomputed: &[WeightTriad], mul: u32) -> Vec<WeightTriad> {
    precomputed.iter().copied().filter(|t| t.max_weight() <= mul).collect()
}

/// Number of ordered integer solutions `(g1, g2, g3)` in a canonical list.
pub fn ordered_solution_count(triads: &[WeightTriad]) -> u64 {
    triads.iter().map(WeightTriad::ordered_count).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn brute_quads(mul: u32) -> BTreeSet<WeightQuad> {
        let mut out = BTreeSet::new();
        for a in 1..=mul {
            for b in 1..=mul {
                for c in 1..=mul {
                    for d in 1..=mul {
                        if a + b == c + d {
                            out.insert(WeightQuad::from_pairs((a, b), (c, d)).unwrap());
                        }
                    }
                }
            }
        }
        out
    }

    fn brute_triads(mul: u32) -> Vec<WeightTriad> {
        let mut out = Vec::new();
        for g1 in 1..=mul {
            for g2 in g1..=mul {
                for g3 in 1..=mul {
                    if g3 * (g1 + g2) == g1 * g2 {
                        out.push(WeightTriad { g1, g2, g3 });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn documented_additive() {
        let q = |g1l, g2l, g1r, g2r| WeightQuad { g1l, g2l, g1r, g2r };
        assert_eq!(solve_additive_weights(1), vec![q(1, 1, 1, 1)]);
        let two = solve_additive_weights(2);
        assert_eq!(two, vec![q(1, 1, 1, 1), q(1, 2, 1, 2), q(2, 2, 2, 2)]);
        assert_eq!(two[1].case(), Degeneracy::LeftRight);
        assert_eq!(two[2].case(), Degeneracy::Total);
        let big = solve_additive_weights(37);
        let named = q(5, 15, 7, 13);
        assert!(big.contains(&named));
        assert_eq!(named.case(), Degeneracy::NoDegeneration);
        // the upper half of the sum range is needed, e.g. S = 40
        assert!(big.contains(&q(20, 20, 20, 20)));
    }

    #[test]
    fn additive_matches_brute_force() {
        for mul in 1..=60 {
            let got = solve_additive_weights(mul);
            let set: BTreeSet<_> = got.iter().copied().collect();
            assert_eq!(set.len(), got.len(), "duplicates at mul = {mul}");
            assert_eq!(set, brute_quads(mul), "mul = {mul}");
            for w in got.windows(2) {
                let key = |q: &WeightQuad| (q.sum(), q.g1l, q.g1r);
                assert!(key(&w[0]) < key(&w[1]));
            }
            for quad in &got {
                assert!(quad.is_valid());
                let case = quad.case();
                let cases = [
                    quad.g1l < quad.g1r && quad.g1r < quad.g2r && quad.g2r < quad.g2l,
                    quad.g1l == quad.g1r && quad.g1r < quad.g2r && quad.g2r == quad.g2l,
                    quad.g1l < quad.g1r && quad.g1r == quad.g2r && quad.g2r < quad.g2l,
                    quad.g1l == quad.g2l,
                ];
                assert_eq!(cases.iter().filter(|&&c| c).count(), 1);
                assert!(cases[case.case_number() - 1]);
            }
        }
    }

    #[test]
    fn additive_monotone_in_mul() {
        for mul in 1..40 {
            let small: BTreeSet<_> = solve_additive_weights(mul).into_iter().collect();
            let large: BTreeSet<_> = solve_additive_weights(mul + 1).into_iter().collect();
            assert!(small.is_subset(&large));
        }
    }

    #[test]
    fn documented_harmonic() {
        assert!(solve_harmonic_weights(1).is_empty());
        let t = |g1, g2, g3| WeightTriad { g1, g2, g3 };
        assert_eq!(solve_harmonic_weights(6), vec![t(2, 2, 1), t(3, 6, 2), t(4, 4, 2), t(6, 6, 3)]);
    }

    #[test]
    fn harmonic_count_for_class_one() {
        let all = solve_harmonic_weights(1414);
        assert_eq!(ordered_solution_count(&all), 3945);
        assert_eq!(all.len(), 2326);
    }

    #[test]
    fn harmonic_matches_brute_force_and_subsets() {
        let full = solve_harmonic_weights(60);
        for mul in 1..=60 {
            let direct = solve_harmonic_weights(mul);
            assert_eq!(direct, brute_triads(mul), "mul = {mul}");
            assert_eq!(subset_for_class(&full, mul), direct);
            assert!(direct.iter().all(WeightTriad::is_valid));
        }
        assert!(subset_for_class(&full, 1).is_empty());
        assert_eq!(subset_for_class(&full, 6).len(), 4);
    }
}
