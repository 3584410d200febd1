//! Invariants of the sieve, the two-squares code and the search.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resonance_core::class_sieve::split_norm;
use resonance_core::oracle::radical_key;
use resonance_core::search::is_lean_class;
use resonance_core::two_squares::{
    all_two_square_decompositions, cornacchia_primitive, decomposition_count, is_primitive,
    sqrt_minus_one_roots,
};
use resonance_core::{
    is_class_index, multiplicity, sieve_classes, ClassIndex, Pipeline, RunConfig, SpfTable,
    TwoSquareDecomposition, WaveKind,
};

const SIEVE_D: u32 = 1000;

fn gravity_classes() -> &'static BTreeSet<u64> {
    static CELL: OnceLock<BTreeSet<u64>> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = RunConfig::new(WaveKind::Gravity4, SIEVE_D).unwrap();
        sieve_classes(&cfg).unwrap().into_iter().map(ClassIndex::get).collect()
    })
}

fn planetary_classes() -> &'static BTreeSet<u64> {
    static CELL: OnceLock<BTreeSet<u64>> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = RunConfig::new(WaveKind::Planetary3, SIEVE_D).unwrap();
        sieve_classes(&cfg).unwrap().into_iter().map(ClassIndex::get).collect()
    })
}

fn table() -> &'static SpfTable {
    static CELL: OnceLock<SpfTable> = OnceLock::new();
    CELL.get_or_init(|| SpfTable::new(2_000_000).unwrap())
}

fn brute_decompositions(m: u64) -> Vec<TwoSquareDecomposition> {
    let mut out = Vec::new();
    let mut y = 0u64;
    while 2 * y * y <= m {
        let rest = m - y * y;
        let x = (rest as f64).sqrt() as u64;
        for x in x.saturating_sub(1)..=x + 1 {
            if x * x == rest {
                out.push(TwoSquareDecomposition::new(x as u32, y as u32));
            }
        }
        y += 1;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn sieve_agrees_with_trial_division(q in 1u64..=2 * (SIEVE_D as u64).pow(2)) {
        prop_assert_eq!(gravity_classes().contains(&q), is_class_index(q, WaveKind::Gravity4));
        prop_assert_eq!(planetary_classes().contains(&q), is_class_index(q, WaveKind::Planetary3));
    }

    #[test]
    fn radical_key_roundtrip(t in 1u64..=1_000_000) {
        for kind in [WaveKind::Gravity4, WaveKind::Planetary3] {
            let c = kind.weight_power();
            let key = radical_key(t, c);
            prop_assert_eq!(key.gamma.pow(c) * key.q, t);
            let (gamma, q) = split_norm(&table().factorize(t).unwrap(), kind);
            prop_assert_eq!((gamma, q.get()), (key.gamma, key.q));
            // the kernel has no c-th power factor left
            for p in 2..=(key.q as f64).powf(1.0 / c as f64) as u64 + 1 {
                prop_assert!(key.q % p.pow(c) != 0);
            }
        }
    }

    #[test]
    fn norms_land_in_admissible_classes(m in -3000i64..=3000, n in -3000i64..=3000) {
        prop_assume!(m != 0 || n != 0);
        let t = (m * m + n * n) as u64;
        for kind in [WaveKind::Gravity4, WaveKind::Planetary3] {
            prop_assert!(is_class_index(radical_key(t, kind.weight_power()).q, kind));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn multiplicity_is_the_largest_admissible_weight(i in 0usize..384_145) {
        let cfg = RunConfig::new(WaveKind::Gravity4, SIEVE_D).unwrap();
        let q = *gravity_classes().iter().nth(i % gravity_classes().len()).unwrap();
        let mul = multiplicity(ClassIndex(q), &cfg) as u64;
        prop_assert!(mul >= 1);
        prop_assert!(mul.pow(4) * q <= cfg.norm_bound());
        prop_assert!((mul + 1).pow(4) * q > cfg.norm_bound());
    }

    #[test]
    fn cornacchia_outputs_are_primitive(m in 2u64..=2_000_000) {
        let f = table().factorize(m).unwrap();
        for t in sqrt_minus_one_roots(&f) {
            prop_assert_eq!((t * t + 1) % m, 0);
            let d = cornacchia_primitive(m, t).unwrap();
            prop_assert_eq!(d.value(), m);
            prop_assert!(is_primitive(&d));
        }
    }
}

#[test]
fn two_squares_exhaustive_small() {
    for m in 1..=200_000u64 {
        let f = table().factorize(m).unwrap();
        let got = all_two_square_decompositions(&f).unwrap();
        assert_eq!(got, brute_decompositions(m), "m = {m}");
        assert_eq!(decomposition_count(&f), got.len() as u64, "m = {m}");
    }
}

#[test]
fn two_squares_random_large() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100_000 {
        let m = rng.gen_range(1..=2_000_000u64);
        let f = table().factorize(m).unwrap();
        let got = all_two_square_decompositions(&f).unwrap();
        assert_eq!(got, brute_decompositions(m), "m = {m}");
        assert_eq!(decomposition_count(&f), got.len() as u64, "m = {m}");
    }
}

#[test]
fn multiplicity_one_starts_above_the_quarter_bound() {
    let cfg = RunConfig::new(WaveKind::Gravity4, SIEVE_D).unwrap();
    let first = gravity_classes().iter().find(|&&q| multiplicity(ClassIndex(q), &cfg) == 1).unwrap();
    assert_eq!(*first, 125_002);
}

fn check_closure(d: u32) {
    let cfg = RunConfig::new(WaveKind::Gravity4, d).unwrap().with_lean_search(true);
    let out = Pipeline::new(cfg).unwrap().run().unwrap();
    let sols = out.solutions.gravity().unwrap();
    let set: BTreeSet<_> = sols.iter().copied().collect();
    assert_eq!(set.len(), sols.len(), "duplicates at D = {d}");
    assert!(sols.windows(2).all(|w| w[0] < w[1]));
    for s in sols {
        for (sm, sn) in [(-1, 1), (1, -1), (-1, -1)] {
            assert!(set.contains(&s.sign_image(sm, sn)), "{s} lacks its ({sm},{sn}) image");
        }
        let w = s.vector_weights().unwrap();
        for (v, g) in s.vectors().iter().zip(w) {
            assert!(v.in_domain(d));
            assert_eq!(radical_key(v.norm_sq(), 4).q, s.q.get());
            assert_eq!(radical_key(v.norm_sq(), 4).gamma, g as u64);
        }
    }
}

#[test]
fn gravity_solutions_are_sign_closed_and_unique() {
    for d in [60, 120, 200] {
        check_closure(d);
    }
}

#[test]
fn planetary_solutions_are_sign_closed_and_unique() {
    let cfg = RunConfig::new(WaveKind::Planetary3, 300).unwrap();
    let out = Pipeline::new(cfg).unwrap().run().unwrap();
    let sols = out.solutions.planetary().unwrap();
    let set: BTreeSet<_> = sols.iter().copied().collect();
    assert_eq!(set.len(), sols.len());
    for s in sols {
        for (sm, sn) in [(-1, 1), (1, -1), (-1, -1)] {
            assert!(set.contains(&s.sign_image(sm, sn)));
        }
        let [k1, k2, k3] = s.vectors();
        assert_eq!(k1.m + k2.m, k3.m);
        for v in s.vectors() {
            assert_eq!(radical_key(v.norm_sq(), 2).q, s.q.get());
        }
    }
}

#[test]
fn lean_classes_yield_only_antipodal_tuples() {
    for d in [50, 120, 200] {
        let cfg = RunConfig::new(WaveKind::Gravity4, d).unwrap().with_lean_search(true);
        let p = Pipeline::new(cfg).unwrap();
        let mut lean_seen = 0usize;
        for &q in p.classes() {
            let rec = p.record(q).unwrap();
            if !is_lean_class(&rec, WaveKind::Gravity4) {
                continue;
            }
            for s in p.search_record(&rec).unwrap().gravity().unwrap() {
                lean_seen += 1;
                assert!(s.is_antipodal(), "D = {d}: {s}");
            }
        }
        assert!(lean_seen > 0);
    }
    for d in [50, 200] {
        let p = Pipeline::new(RunConfig::new(WaveKind::Planetary3, d).unwrap()).unwrap();
        for &q in p.classes() {
            let rec = p.record(q).unwrap();
            if is_lean_class(&rec, WaveKind::Planetary3) {
                assert!(p.search_record(&rec).unwrap().is_empty(), "D = {d}, q = {q}");
            }
        }
    }
}
