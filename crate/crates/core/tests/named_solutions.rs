use resonance_core::{ClassIndex, Pipeline, RunConfig, WaveKind, WaveVector, WeightQuad};
use resonance_core::search::ResonanceQuad;

#[test]
fn first_asymmetric_group_at_fifty() {
    let out = Pipeline::new(RunConfig::new(WaveKind::Gravity4, 50).unwrap()).unwrap().run().unwrap();
    let asym: Vec<_> = out.solutions.gravity().unwrap().iter().filter(|s| s.weights.is_asymmetric()).collect();
    assert_eq!(asym.len(), 8);
    let v = WaveVector::new;
    let named = ResonanceQuad::canonical(
        ClassIndex(2),
        WeightQuad::from_pairs((2, 7), (3, 6)).unwrap(),
        [v(-4, -4), v(49, 49)],
        [v(9, 9), v(36, 36)],
    );
    assert!(asym.contains(&&named), "{named} not in {asym:?}");
    // four sign images on the axes (q = 1), four on the diagonals (q = 2)
    assert_eq!(asym.iter().filter(|s| s.q == ClassIndex(1)).count(), 4);
    assert_eq!(asym.iter().filter(|s| s.q == ClassIndex(2)).count(), 4);

    let before = Pipeline::new(RunConfig::new(WaveKind::Gravity4, 48).unwrap()).unwrap().run().unwrap();
    assert_eq!(before.stats.solutions_asymmetric, 0);
}
