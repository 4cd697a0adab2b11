//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. All comparisons are exact (integer or dyadic arithmetic); there are
//! no tolerances. Run with `cargo test --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::time::Instant;
use thompson_core::classification::{
    build_iso, cocf_check, cor28_decide, prop24_search, CocfOutcome, Verdict,
};
use thompson_core::coeff::{
    cyclic, cyclic_inversion, cyclic_scaling, fixture, kernel_union_reduce, GroupMap, Triple,
    DEFAULT_MAX_GROUP,
};
use thompson_core::suites::{self, SuiteOutcome};

const SEED: u64 = 20240915;

fn report(criterion: &str, outcome: &SuiteOutcome, started: Instant) {
    let status = if outcome.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({} cases, {} failures, {:.2?})",
        outcome.cases,
        outcome.failures.len(),
        started.elapsed()
    );
    for f in outcome.failures.iter().take(5) {
        println!("    {f}");
    }
    assert!(outcome.passed(), "criterion {criterion} failed");
}

fn fixtures() -> Vec<(&'static str, Triple)> {
    vec![
        ("z2", fixture("z2").unwrap()),
        ("z3inv", fixture("z3inv").unwrap()),
        ("z4inv", fixture("z4inv").unwrap()),
        ("s3", fixture("s3").unwrap()),
    ]
}

#[test]
fn criterion_01_group_axioms() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for (name, t) in fixtures() {
        let r = suites::group_axioms(&t, SEED, 1000).unwrap();
        assert!(r.cases >= 1000, "fixture {name} ran too few cases");
        out.merge(r);
    }
    report("1 (group axioms, 1000 cases x 4 fixtures)", &out, started);
    assert!(
        started.elapsed().as_secs() < 10,
        "criterion 1 exceeded 10 s"
    );
}

#[test]
fn criterion_02_jones_action_laws() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for (_, t) in fixtures() {
        out.merge(suites::action_laws(&t, SEED ^ 2, 500).unwrap());
    }
    report(
        "2 (Jones action laws, 500 cases x 4 fixtures)",
        &out,
        started,
    );
}

#[test]
fn criterion_03_tau_laws() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for (_, t) in fixtures() {
        out.merge(suites::tau_laws(&t, SEED ^ 3, 500).unwrap());
    }
    report(
        "3 (tau refinement independence and composition, 500 x 4)",
        &out,
        started,
    );
}

#[test]
fn criterion_04_centralizers_and_center() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for name in ["z2", "z4inv"] {
        let t = fixture(name).unwrap();
        out.merge(suites::centralizer_suite(&t, 3).unwrap());
        let center = suites::center_suite(&t, 3).unwrap();
        assert!(
            center.notes.iter().any(|n| n == "|Z(G)| = 2"),
            "{name}: center size note missing, got {:?}",
            center.notes
        );
        out.merge(center);
    }
    report(
        "4 (centralizer/center descriptions, exhaustive at depth 3)",
        &out,
        started,
    );
    assert!(
        started.elapsed().as_secs() < 60,
        "criterion 4 exceeded 60 s"
    );
}

#[test]
fn criterion_05_derived_commutators() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for (_, t) in fixtures() {
        out.merge(suites::derived_commutators(&t).unwrap());
    }
    report(
        "5 (commutator realization of alpha-fixed indicators)",
        &out,
        started,
    );
}

#[test]
fn criterion_06_cocycle_suites() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for (_, t) in fixtures() {
        out.merge(suites::cocycle_suite(&t, SEED ^ 6, 300).unwrap());
    }
    report(
        "6 (cocycle identities and the twisting map, 300 x 4)",
        &out,
        started,
    );
}

#[test]
fn criterion_07_theorem33_relations() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    for name in ["s3", "z2"] {
        let t = fixture(name).unwrap();
        out.merge(suites::theorem33_suite(&t, SEED ^ 7, 200).unwrap());
    }
    report(
        "7 (automorphism conjugation relations and kernel)",
        &out,
        started,
    );
}

#[test]
fn criterion_08_gamma_phi() {
    let started = Instant::now();
    let out = suites::gamma_phi_suite(SEED ^ 8, 100).unwrap();
    report(
        "8 (gamma_phi independence and difference law, 100 cases)",
        &out,
        started,
    );
}

#[test]
fn criterion_09_slope_prime_word() {
    let started = Instant::now();
    let out = suites::slope_prime_word_suite(SEED ^ 9, 100).unwrap();
    report(
        "9 (slope/prime-word identity and divisibility, 100 cases)",
        &out,
        started,
    );
}

#[test]
fn criterion_10_spatial_support() {
    let started = Instant::now();
    let out = suites::spatial_support_suite(SEED ^ 10, 300).unwrap();
    report(
        "10 (spatial support of constructed maps, 300 cases)",
        &out,
        started,
    );
}

#[test]
fn criterion_11_cocf_consistency() {
    let started = Instant::now();
    let t = fixture("z3inv").unwrap();
    let out = suites::cocf_suite(&t, SEED ^ 11, 500).unwrap();
    report(
        "11 (coCF twist exponent consistency, 500 cases)",
        &out,
        started,
    );
}

#[test]
fn criterion_12_zeta_example() {
    let started = Instant::now();
    let out = suites::zeta_example_suite(SEED ^ 12, 300).unwrap();
    report(
        "12 (Z[1/2]^2 morphism into the center, 300 cases)",
        &out,
        started,
    );
}

#[test]
fn criterion_13_wreath_containments() {
    let started = Instant::now();
    let out = suites::wreath_containment_suite(SEED ^ 13, 400).unwrap();
    report(
        "13 (wreath/loop centralizer containments, 400 cases)",
        &out,
        started,
    );
}

#[test]
fn criterion_14_classification_fixtures() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    let mut check = |name: &str, ok: bool| {
        out.cases += 1;
        if !ok {
            out.failures.push(name.to_string());
        }
    };

    // swap witness for (Z/3, id, inv) vs (Z/3, inv, id)
    let g3 = cyclic(3);
    let t1 = Triple::new(g3.clone(), GroupMap::identity(&g3), cyclic_inversion(3)).unwrap();
    let t2 = Triple::new(g3.clone(), cyclic_inversion(3), GroupMap::identity(&g3)).unwrap();
    let witness = prop24_search(&t1, &t2, DEFAULT_MAX_GROUP).unwrap();
    check(
        "prop24 swap witness found",
        witness.as_ref().map(|w| w.swap) == Some(true),
    );
    let iso = build_iso(&t1, &t2, witness.unwrap()).unwrap();
    check(
        "prop24 witness validates",
        iso.witness().validate(&t1, &t2).is_ok(),
    );

    // cor28 verdicts
    let g4 = cyclic(4);
    let u1 = Triple::untwisted(g4.clone());
    let u2 = Triple::new(g4.clone(), GroupMap::identity(&g4), cyclic_inversion(4)).unwrap();
    check(
        "cor28 rejects the inversion twist on Z/4",
        cor28_decide(&u1, &u2, DEFAULT_MAX_GROUP).unwrap() == Verdict::NotIsomorphic,
    );
    let s3 = thompson_core::coeff::symmetric_3();
    let s3_inner = Triple::new(s3.clone(), s3.ad(1), s3.ad(4)).unwrap();
    let s3_plain = Triple::untwisted(s3.clone());
    check(
        "cor28 accepts inner-twisted S3",
        cor28_decide(&s3_inner, &s3_plain, DEFAULT_MAX_GROUP).unwrap() == Verdict::Isomorphic,
    );

    // cocf necessary condition on Z/5 with generators of orders 4 vs 2
    let g5 = cyclic(5);
    let c2 = Triple::new(g5.clone(), GroupMap::identity(&g5), cyclic_scaling(5, 2)).unwrap();
    let c4 = Triple::new(g5.clone(), GroupMap::identity(&g5), cyclic_scaling(5, 4)).unwrap();
    let c3 = Triple::new(g5.clone(), GroupMap::identity(&g5), cyclic_scaling(5, 3)).unwrap();
    check(
        "cocf fails for orders 4 vs 2",
        matches!(
            cocf_check(&c2, &c4, DEFAULT_MAX_GROUP).unwrap(),
            CocfOutcome::Fails(_)
        ),
    );
    check(
        "cocf holds for equal subgroups",
        cocf_check(&c2, &c3, DEFAULT_MAX_GROUP).unwrap() == CocfOutcome::Holds,
    );

    report("14 (classification fixtures)", &out, started);
    assert!(
        started.elapsed().as_secs() < 30,
        "criterion 14 exceeded 30 s"
    );
}

#[test]
fn criterion_15_kernel_union_reduction() {
    let started = Instant::now();
    let mut out = SuiteOutcome::default();
    let mut check = |name: String, ok: bool| {
        out.cases += 1;
        if !ok {
            out.failures.push(name);
        }
    };

    // trivial endomorphisms yield the trivial group
    let g = cyclic(6);
    let trivial = Triple::new(g.clone(), GroupMap::trivial(&g), GroupMap::trivial(&g)).unwrap();
    let (reduced, _) = kernel_union_reduce(&trivial).unwrap();
    check(
        "trivial input reduces to order 1".into(),
        reduced.group.order() == 1,
    );

    // a spread of mixed inputs: joint map always injective afterwards
    let inputs: Vec<Triple> = vec![
        trivial,
        Triple::new(g.clone(), cyclic_scaling(6, 2), cyclic_scaling(6, 3)).unwrap(),
        Triple::new(g.clone(), cyclic_scaling(6, 3), GroupMap::trivial(&g)).unwrap(),
        {
            let z8 = cyclic(8);
            Triple::new(z8.clone(), cyclic_scaling(8, 2), cyclic_scaling(8, 4)).unwrap()
        },
        {
            let z4 = cyclic(4);
            Triple::new(z4.clone(), cyclic_scaling(4, 2), GroupMap::trivial(&z4)).unwrap()
        },
        fixture("z3inv").unwrap(),
        fixture("s3").unwrap(),
    ];
    for (i, t) in inputs.iter().enumerate() {
        let (reduced, quotient) = kernel_union_reduce(t).unwrap();
        let injective = reduced
            .group
            .elements()
            .skip(1)
            .all(|h| reduced.a0.apply(h) != 0 || reduced.a1.apply(h) != 0);
        check(format!("joint map injective on input {i}"), injective);
        check(format!("quotient map {i} is onto the reduced group"), {
            let mut seen = vec![false; reduced.group.order()];
            for a in t.group.elements() {
                seen[quotient.apply(a)] = true;
            }
            seen.into_iter().all(|b| b)
        });
        check(
            format!("kernel chain stabilises within the order on input {i}"),
            t.kernel_stabilization_depth() <= t.group.order(),
        );
    }
    report("15 (kernel-union reduction)", &out, started);
}
