mod common;

use common::{demazure_quotient_word, el, rs};
use schubert_core::charring::{adjoint_character, borel_character};
use schubert_core::cohomology::{
    kernel_char, remark_b2_fixture, ss_nonempty, tangent_dimension_drops, tangent_h0_char,
    verify_cor37, verify_lemma26, verify_lemma61, verify_thm_a, verify_thm_b_criterion,
    SweepConfig,
};
use schubert_core::coxeter::{
    analyze, verify_cor52_53_58, verify_lemma54_55_56, verify_prop51, verify_thm_c_type_a,
};
use schubert_core::{Character, Error, Report, Word};

#[test]
fn kernel_is_borel_part_and_vanishes_with_semistability() {
    for t in ["A2", "A3", "D4"] {
        let r = rs(t);
        for tau in r.enumerate_group(1000).unwrap() {
            let k = kernel_char(&r, &tau).unwrap();
            assert!(k.leq(&borel_character(&r)));
            assert_eq!(
                k.is_zero(),
                ss_nonempty(&r, &r.inverse(&tau)),
                "{t} {}",
                tau.word()
            );
        }
    }
}

#[test]
fn tangent_dimension_drops_are_reported_not_fatal() {
    for t in ["A2", "A3"] {
        let r = rs(t);
        let drops = tangent_dimension_drops(&r, &SweepConfig::default()).unwrap();
        for (u, w) in &drops {
            let du = tangent_h0_char(&r, u).unwrap().dimension();
            let dw = tangent_h0_char(&r, w).unwrap().dimension();
            assert!(dw < du);
        }
    }
}

#[test]
fn single_threaded_and_parallel_reports_agree() {
    let r = rs("A3");
    let a = verify_thm_a(&r, &SweepConfig::single_threaded()).unwrap();
    let b = verify_thm_a(
        &r,
        &SweepConfig {
            workers: 4,
            ..SweepConfig::default()
        },
    )
    .unwrap();
    assert_eq!(a.counterexamples, b.counterexamples);
    assert_eq!(a.findings, b.findings);
    assert!(a.passed);
}

#[test]
fn guard_is_enforced_by_sweeps() {
    let cfg = SweepConfig {
        guard: 100,
        workers: 1,
    };
    assert!(matches!(
        verify_thm_a(&rs("D4"), &cfg),
        Err(Error::GuardExceeded {
            order: 192,
            guard: 100
        })
    ));
}

#[test]
fn cor37_in_d4() {
    assert!(
        verify_cor37(&rs("D4"), &SweepConfig::default())
            .unwrap()
            .passed
    );
}

#[test]
fn b2_fixture_matches_quotient_oracle() {
    let r = rs("B2");
    let chi = demazure_quotient_word(&r, &Word::new(vec![1, 2, 1]), &borel_character(&r));
    assert_eq!(chi, remark_b2_fixture());
    let h0cand = &chi + &Character::monomial(r.from_root_coords(&[-1, -1]).unwrap());
    assert!(h0cand.is_nonnegative() && h0cand.leq(&borel_character(&r)));
}

#[test]
fn thm_b_engine_is_consistent_in_rank_two_and_three() {
    for t in ["B2", "G2", "B3", "C3"] {
        let rep = verify_thm_b_criterion(&rs(t), &SweepConfig::default()).unwrap();
        assert!(rep.passed, "{}", rep.render_table());
    }
}

#[test]
fn b2_euler_sums_match_independent_evaluation() {
    // Σ_{β>0} χ(τ, e^β) dimensions from divided differences
    let r = rs("B2");
    let expect = [
        (vec![], 4),
        (vec![1], 6),
        (vec![2], 6),
        (vec![1, 2], 9),
        (vec![2, 1], 10),
        (vec![1, 2, 1], 10),
        (vec![2, 1, 2], 11),
        (vec![1, 2, 1, 2], 10),
    ];
    for (w, dim) in expect {
        let word = Word::new(w);
        let e: Character = r
            .positive_roots()
            .map(|b| demazure_quotient_word(&r, &word, &Character::monomial(b.weight.clone())))
            .sum();
        assert_eq!(e.dimension(), dim, "{word}");
        let tau = r.from_word(&word).unwrap();
        let engine: Character = r
            .positive_roots()
            .map(|b| {
                schubert_core::cohomology::euler_char(
                    &r,
                    &tau,
                    &Character::monomial(b.weight.clone()),
                )
                .unwrap()
            })
            .sum();
        assert_eq!(engine, e);
    }
    let e = r
        .positive_roots()
        .map(|b| {
            demazure_quotient_word(
                &r,
                &Word::new(vec![1, 2, 1]),
                &Character::monomial(b.weight.clone()),
            )
        })
        .sum::<Character>();
    assert_eq!(e, adjoint_character(&r));
}

#[test]
fn coxeter_number_is_constant() {
    for (t, h) in [
        ("A1", 2),
        ("A2", 3),
        ("A3", 4),
        ("A4", 5),
        ("B2", 4),
        ("B3", 6),
        ("C3", 6),
        ("D4", 6),
        ("G2", 6),
        ("F4", 12),
    ] {
        let r = rs(t);
        for (c, _) in r.coxeter_elements() {
            assert_eq!(r.order(&c), h, "{t}");
        }
    }
}

#[test]
fn d4_factorizations_are_length_additive() {
    let r = rs("D4");
    for o in r.coxeter_orderings() {
        let an = analyze(&r, &o).unwrap();
        assert_eq!(an.phi.length() + an.tau.length(), 4, "{o}");
        assert_eq!(r.multiply(&an.tau, &an.phi), an.c);
        for w in an.phi_factors.values() {
            assert_eq!(r.from_word(w).unwrap().length(), w.len());
        }
    }
}

#[test]
fn coxeter_reports_pass_in_small_types() {
    let cfg = SweepConfig::default();
    for t in ["A3", "A4", "D4"] {
        let r = rs(t);
        assert!(verify_lemma54_55_56(&r, &cfg).unwrap().passed, "{t}");
        assert!(verify_prop51(&r, &cfg).unwrap().passed, "{t}");
        assert!(verify_cor52_53_58(&r, &cfg).unwrap().passed, "{t}");
    }
    for t in ["B2", "B3", "G2", "C3"] {
        assert!(verify_prop51(&rs(t), &cfg).unwrap().passed, "{t}");
    }
}

#[test]
fn rotation_formula_up_to_a5() {
    for n in 1..=5 {
        let r = rs(&format!("A{n}"));
        let rep = verify_thm_c_type_a(&r).unwrap();
        assert!(rep.passed, "{}", rep.render_table());
    }
}

#[test]
fn a3_mixed_coxeter_element_reaches_adjoint() {
    let r = rs("A3");
    let rep = verify_cor52_53_58(&r, &SweepConfig::default()).unwrap();
    let rows = rep
        .findings
        .iter()
        .find(|f| f.subject == "rows")
        .unwrap()
        .detail
        .as_array()
        .unwrap()
        .clone();
    let c = el(&r, &[2, 1, 3]);
    let row = rows
        .iter()
        .find(|x| {
            r.from_word(&x["ordering"].as_str().unwrap().parse().unwrap())
                .unwrap()
                == c
        })
        .unwrap();
    let j = row["min_j"].as_u64().unwrap();
    assert!((1..=4).contains(&j));
    assert_eq!(row["extremal"], false);
}

#[test]
fn lemma_reports() {
    assert!(verify_lemma26(&rs("E6")).unwrap().passed);
    assert!(matches!(
        verify_lemma26(&rs("B3")),
        Err(Error::NotApplicable(_))
    ));
    for t in ["B2", "B3", "C3", "F4", "G2"] {
        assert!(verify_lemma61(&rs(t)).unwrap().passed, "{t}");
    }
}

#[test]
fn report_json_round_trips() {
    let r = rs("A3");
    let rep = verify_cor52_53_58(&r, &SweepConfig::default()).unwrap();
    let text = rep.to_json();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_json(), text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in [
        "check",
        "type",
        "universe",
        "passed",
        "counterexamples",
        "elapsed_ms",
        "engine_version",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["type"], "A3");
    assert_eq!(v["labeling"]["convention"], "Bourbaki");
}
