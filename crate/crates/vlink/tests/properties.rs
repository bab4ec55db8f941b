//! Cross-module invariants: the flip bound, degree formulas, span
//! inequalities, and agreement with the independent oracle.

mod common;

use common::{corpus, classical_corpus, oracle_bracket, oracle_component_count, state_from_mask};
use vlink::adequacy::{adequacy_report, euler_characteristic, is_admissible};
use vlink::bracket::{
    bracket, kmt_bound, max_degree_weight, min_degree_weight, span_bracket, state_weight,
};
use vlink::diagram::{Diagram, RealizeChoice, Splice};
use vlink::generators;

fn components(d: &Diagram, s: &vlink::State) -> usize {
    d.splice(s).unwrap().component_count()
}

fn for_all_states(d: &Diagram, mut f: impl FnMut(&vlink::State)) {
    let c = d.real_crossing_count();
    assert!(c <= 16);
    for mask in 0u64..(1 << c) {
        f(&state_from_mask(d, mask));
    }
}

#[test]
fn bracket_agrees_with_oracle() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 12 {
            continue;
        }
        let got: Vec<(i64, i64)> = bracket(&d).unwrap().terms().collect();
        assert_eq!(got, oracle_bracket(&d), "{name}");
    }
}

#[test]
fn splice_agrees_with_union_find_oracle() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        for_all_states(&d, |s| {
            assert_eq!(
                components(&d, s),
                oracle_component_count(&d, s),
                "{name}, state {s:?}"
            );
        });
    }
}

#[test]
fn flip_changes_count_by_at_most_one() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        for_all_states(&d, |s| {
            let base = components(&d, s);
            for &p in d.real_crossing_ids() {
                let flipped = components(&d, &s.flip(p).unwrap());
                assert!(
                    base.abs_diff(flipped) <= 1,
                    "{name}: flip at {p} jumped {base} -> {flipped}"
                );
            }
        });
    }
}

#[test]
fn classical_flips_never_preserve_count() {
    for (name, d) in classical_corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        for_all_states(&d, |s| {
            let base = components(&d, s);
            for &p in d.real_crossing_ids() {
                let flipped = components(&d, &s.flip(p).unwrap());
                assert_eq!(base.abs_diff(flipped), 1, "{name}: flip at {p}");
            }
        });
    }
}

#[test]
fn splice_counts_ignore_over_under_data() {
    // Virtualize, re-realize with either orientation, and splice with the
    // correspondingly swapped state value: the count must come back.
    for (name, d) in corpus() {
        if d.real_crossing_count() == 0 || d.real_crossing_count() > 8 {
            continue;
        }
        let p = d.real_crossing_ids()[0];
        let virtualized = d.virtualize(p).unwrap();
        let kept = virtualized.realize(p, RealizeChoice::Strand02Under).unwrap();
        let rotated = virtualized.realize(p, RealizeChoice::Strand13Under).unwrap();
        for_all_states(&d, |s| {
            let expected = components(&d, s);
            assert_eq!(components(&kept, s), expected, "{name} kept");
            let swapped = s.flip(p).unwrap();
            assert_eq!(components(&rotated, &swapped), expected, "{name} rotated");
        });
    }
}

#[test]
fn connecting_arc_ids_match_flip_delta() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 8 {
            continue;
        }
        for_all_states(&d, |s| {
            let base = components(&d, s);
            for &p in d.real_crossing_ids() {
                let (x, y) = d.connecting_arc_components(s, p).unwrap();
                let flipped = components(&d, &s.flip(p).unwrap());
                if x == y {
                    assert!(
                        flipped == base || flipped == base + 1,
                        "{name}: same-curve arc at {p} gave {base} -> {flipped}"
                    );
                } else {
                    assert_eq!(flipped, base - 1, "{name}: merging arc at {p}");
                }
            }
        });
    }
}

#[test]
fn distinct_arc_endpoints_are_admissible() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 8 {
            continue;
        }
        for_all_states(&d, |s| {
            for &p in d.real_crossing_ids() {
                let (x, y) = d.connecting_arc_components(s, p).unwrap();
                if x != y {
                    assert!(is_admissible(&d, s, p).unwrap(), "{name} at {p}");
                }
            }
        });
    }
}

#[test]
fn weight_degrees_match_formulas() {
    // extreme degrees of ⟨D/s⟩ equal
    // (α-β) ± 2(♯D(s)-1), checked against the actual polynomial
    for (name, d) in corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        for_all_states(&d, |s| {
            let w = state_weight(&d, s).unwrap();
            assert_eq!(
                w.weight.max_degree().unwrap(),
                max_degree_weight(&d, s).unwrap(),
                "{name} top"
            );
            assert_eq!(
                w.weight.min_degree().unwrap(),
                min_degree_weight(&d, s).unwrap(),
                "{name} bottom"
            );
        });
    }
}

#[test]
fn span_bounded_by_extreme_state_degrees() {
    // span⟨D⟩ ≤ odeg⟨D/s_A⟩ - udeg⟨D/s_B⟩
    for (name, d) in corpus() {
        if d.real_crossing_count() > 12 {
            continue;
        }
        let top = max_degree_weight(&d, &d.state_all_a()).unwrap();
        let bottom = min_degree_weight(&d, &d.state_all_b()).unwrap();
        assert!(
            span_bracket(&d).unwrap() as i64 <= top - bottom,
            "{name}"
        );
    }
}

#[test]
fn refined_kmt_inequality_on_corpus_and_random() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 12 {
            continue;
        }
        assert!(
            span_bracket(&d).unwrap() as i64 <= kmt_bound(&d),
            "{name}"
        );
    }
    for seed in 1000..1200u64 {
        let d = generators::random_diagram(seed, 1 + (seed % 12) as u32, (seed % 5) as u32).unwrap();
        assert!(span_bracket(&d).unwrap() as i64 <= kmt_bound(&d), "seed {seed}");
    }
}

#[test]
fn component_growth_under_flips_is_linear() {
    // j flips away from a constant state grow the count by at most j:
    // ♯D(s) ≤ ♯D(s_A) + β(s) and ♯D(s) ≤ ♯D(s_B) + α(s)
    for (name, d) in corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        let base_a = components(&d, &d.state_all_a());
        let base_b = components(&d, &d.state_all_b());
        for_all_states(&d, |s| {
            let count = components(&d, s);
            let j_from_a = s.beta();
            let j_from_b = s.alpha();
            assert!(count <= base_a + j_from_a, "{name} from s_A");
            assert!(count <= base_b + j_from_b, "{name} from s_B");
        });
    }
}

#[test]
fn pseudo_adequate_diagrams_reach_the_bound() {
    for (name, d) in corpus() {
        if d.real_crossing_count() > 12 {
            continue;
        }
        if adequacy_report(&d).pseudo_adequate {
            assert_eq!(
                span_bracket(&d).unwrap() as i64,
                kmt_bound(&d),
                "{name} is pseudo-adequate but misses the bound"
            );
        }
    }
}

#[test]
fn pseudo_adequate_degree_gaps() {
    // away from s_A the top degree drops by at least 2, and
    // symmetrically at the bottom away from s_B
    for (name, d) in corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        if !adequacy_report(&d).pseudo_adequate {
            continue;
        }
        let sa = d.state_all_a();
        let sb = d.state_all_b();
        let top = max_degree_weight(&d, &sa).unwrap();
        let bottom = min_degree_weight(&d, &sb).unwrap();
        for_all_states(&d, |s| {
            if s != &sa {
                assert!(
                    max_degree_weight(&d, s).unwrap() <= top - 2,
                    "{name}: top gap at {s:?}"
                );
            }
            if s != &sb {
                assert!(
                    min_degree_weight(&d, s).unwrap() >= bottom + 2,
                    "{name}: bottom gap at {s:?}"
                );
            }
        });
    }
}

#[test]
fn adequate_implies_pseudo_adequate() {
    for (name, d) in corpus() {
        let r = adequacy_report(&d);
        assert!(!r.adequate || r.pseudo_adequate, "{name}");
        assert_eq!(r.adequate, r.a_adequate && r.b_adequate, "{name}");
    }
}

#[test]
fn virtualizing_classical_adequate_shifts_span_by_six() {
    for (name, d) in classical_corpus() {
        if d.real_crossing_count() > 8 || !adequacy_report(&d).adequate {
            continue;
        }
        let classical_span = span_bracket(&d).unwrap() as i64;
        for &p in d.real_crossing_ids() {
            let dv = d.virtualize(p).unwrap();
            let virtual_span = span_bracket(&dv).unwrap() as i64;
            assert_eq!(
                classical_span - virtual_span,
                6,
                "{name} at {p}: classical span must exceed the virtualized one by 6"
            );
            assert_eq!(virtual_span.rem_euclid(4), 2, "{name} at {p}");
        }
    }
}

#[test]
fn euler_characteristic_identity_and_classical_value() {
    for (name, d) in corpus() {
        let a = components(&d, &d.state_all_a());
        let b = components(&d, &d.state_all_b());
        assert_eq!(
            euler_characteristic(&d),
            (a + b) as i64 - d.real_crossing_count() as i64,
            "{name}"
        );
    }
    // connected classical generators sit on the sphere
    for (name, d) in [
        ("kink+", generators::kink(generators::Handedness::Positive)),
        ("hopf", generators::hopf()),
        ("trefoil", generators::trefoil()),
        ("figure8", generators::figure_eight()),
        ("torus7", generators::torus_2n(7).unwrap()),
    ] {
        assert_eq!(euler_characteristic(&d), 2, "{name}");
    }
}

#[test]
fn bracket_state_iteration_counts_all_states() {
    // α + β = c on every state weight, and the all-A / all-B states have the
    // advertised alpha/beta split
    for (name, d) in corpus() {
        if d.real_crossing_count() > 10 {
            continue;
        }
        for_all_states(&d, |s| {
            let w = state_weight(&d, s).unwrap();
            assert_eq!(w.alpha + w.beta, d.real_crossing_count(), "{name}");
            assert_eq!(w.alpha, s.alpha(), "{name}");
        });
        let sa = d.state_all_a();
        assert!(sa.choices().all(|(_, s)| s == Splice::A), "{name}");
    }
}
