//! Human-readable summaries and the rows behind the CSV outputs.

use std::fmt::Write;

use resonance_core::RunStats;

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub fn stats_rows(s: &RunStats) -> Vec<(String, String)> {
    let mut rows: Vec<(String, String)> = vec![
        ("kind".into(), s.kind.to_string()),
        ("domain".into(), s.domain.to_string()),
        ("quotient".into(), s.quotient.to_string()),
        ("class_count".into(), s.class_count.to_string()),
        ("mult1_count".into(), s.mult1_count.to_string()),
        ("mult1_skipped".into(), s.mult1_skipped.to_string()),
        ("mult1_checked".into(), s.mult1_checked.to_string()),
        ("lean_count".into(), s.lean_count.to_string()),
        ("checked_classes".into(), s.checked_classes.to_string()),
        ("solutions_total".into(), s.solutions_total.to_string()),
        ("solutions_asymmetric".into(), s.solutions_asymmetric.to_string()),
        ("lean_solutions".into(), s.lean_solutions.to_string()),
        ("multi_weight_solutions".into(), s.multi_weight_solutions.to_string()),
        ("sign_orbits_total".into(), s.orbit_representatives.to_string()),
        ("sign_orbits_asymmetric".into(), s.orbit_representatives_asymmetric.to_string()),
    ];
    for (name, tally) in [
        ("weight_quads", &s.weight_quads_per_case),
        ("weight_quads_multi_weight", &s.weight_quads_per_case_multi),
        ("classes_with_solutions", &s.classes_per_case),
        ("solutions", &s.solutions_per_case),
    ] {
        for (i, n) in tally.iter().enumerate() {
            rows.push((format!("case{}_{name}", i + 1), n.to_string()));
        }
    }
    for (i, edge) in s.band_edges.iter().enumerate() {
        rows.push((format!("band_{edge}_total"), s.band_totals[i].to_string()));
        rows.push((format!("band_{edge}_asymmetric"), s.band_asymmetric[i].to_string()));
        rows.push((format!("band_{edge}_multi_weight"), s.band_multi_weight_totals[i].to_string()));
    }
    if let Some(p) = s.pairings {
        rows.push(("two_class_pairings".into(), p.to_string()));
    }
    if let Some(t) = s.wall_time {
        rows.push(("wall_time_ms".into(), t.as_millis().to_string()));
    }
    rows
}

/// Multi-line run summary for the terminal.
pub fn summary(s: &RunStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} D={} quotient={}", s.kind, s.domain, s.quotient);
    let _ = writeln!(
        out,
        "classes {}  lean {}  searched {}  (multiplicity 1: {}, skipped {}, checked {})",
        s.class_count, s.lean_count, s.checked_classes, s.mult1_count, s.mult1_skipped, s.mult1_checked
    );
    let _ = writeln!(out, "solutions {}  asymmetric {}", s.solutions_total, s.solutions_asymmetric);
    if s.lean_solutions > 0 {
        let _ = writeln!(out, "  of which in lean classes {}", s.lean_solutions);
    }
    let _ = writeln!(out, "band edges             {:?}", s.band_edges);
    let _ = writeln!(out, "cumulative total       [{}]", join(&RunStats::cumulative(&s.band_totals)));
    let _ = writeln!(out, "cumulative asymmetric  [{}]", join(&RunStats::cumulative(&s.band_asymmetric)));
    let _ = writeln!(out, "multiplicity >= 2      [{}]", join(&RunStats::cumulative(&s.band_multi_weight_totals)));
    let _ = writeln!(out, "sign orbits total      [{}]", join(&RunStats::cumulative(&s.band_orbit_totals)));
    let _ = writeln!(out, "sign orbits asymmetric [{}]", join(&RunStats::cumulative(&s.band_orbit_asymmetric)));
    if s.kind == resonance_core::WaveKind::Gravity4 {
        let _ = writeln!(out, "per case: weight quads [{}]", join(&s.weight_quads_per_case));
        let _ = writeln!(out, "  (multiplicity >= 2)  [{}]", join(&s.weight_quads_per_case_multi));
        let _ = writeln!(out, "          classes      [{}]", join(&s.classes_per_case));
        let _ = writeln!(out, "          solutions    [{}]", join(&s.solutions_per_case));
    }
    if let Some(p) = s.pairings {
        let _ = writeln!(out, "two-class pairings {p}");
    }
    if let Some(t) = s.wall_time {
        let _ = writeln!(out, "wall time {:.3?}", t);
    }
    out
}

/// One row of a convention comparison: a label, the observed cumulative
/// series and the reference series.
pub struct ConventionRow {
    pub label: String,
    pub observed: Vec<u64>,
}

/// Tabulates every convention against a reference series and marks exact
/// matches; differences are signed `observed - reference`.
pub fn convention_report(title: &str, reference: &[u64], rows: &[ConventionRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title}: reference [{}]", join(reference));
    for r in rows {
        let delta: Vec<String> = r
            .observed
            .iter()
            .zip(reference)
            .map(|(&o, &p)| format!("{:+}", o as i64 - p as i64))
            .collect();
        let tag = if r.observed == reference { "match" } else { "differs" };
        let _ = writeln!(
            out,
            "  {:<36} [{}]  delta [{}]  {tag}",
            r.label,
            join(&r.observed),
            delta.join(",")
        );
    }
    out
}
