mod common;

use skewclean::ring::ring_from_spec;
use skewclean::theorems::{
    run_suite, verify_corollaries, verify_t2_criterion, verify_t2_very_clean, verify_t3_necessity,
    verify_t3_sufficiency, ClaimReport, MatrixCheck, Status, Suite, SweepMode, VerifyConfig, Witness,
};
use skewclean::{Elem, Endomorphism, Error};

use common::sigma;

fn find<'a>(reports: &'a [ClaimReport], id: &str) -> &'a ClaimReport {
    reports.iter().find(|r| r.claim_id == id).unwrap_or_else(|| panic!("no report {id}"))
}

fn without_timing(mut reports: Vec<ClaimReport>) -> Vec<ClaimReport> {
    for r in &mut reports {
        r.elapsed_ms = 0;
    }
    reports
}

#[test]
fn t2_criterion_on_zmod4_counts_maps_and_matrices() {
    let reports = verify_t2_criterion(&sigma("zmod:4", "id"), VerifyConfig::default()).unwrap();
    let ids: Vec<_> = reports.iter().map(|r| r.claim_id.as_str()).collect();
    assert_eq!(
        ids,
        ["thm2.1", "thm2.1-condition", "thm2.1-constructive", "thm2.1-necessity", "thm2.1-strongly-clean"]
    );
    assert!(reports.iter().all(ClaimReport::holds));
    assert_eq!(find(&reports, "thm2.1-condition").checked, 4);
    assert_eq!(find(&reports, "thm2.1-strongly-clean").checked, 64);
    assert_eq!(find(&reports, "thm2.1-strongly-clean").mode, Some(SweepMode::Exhaustive));
    assert_eq!(find(&reports, "thm2.1-necessity").checked, 2 * 2 * 4);
}

#[test]
fn t2_criterion_on_dual_ring_and_field() {
    for (ring, s) in [("dual:zmod:4", "negx"), ("zmod:2", "id")] {
        let reports = verify_t2_criterion(&sigma(ring, s), VerifyConfig::default()).unwrap();
        assert!(reports.iter().all(ClaimReport::holds), "{ring}: {reports:?}");
    }
}

#[test]
fn t3_sufficiency_sweeps() {
    let reports = verify_t3_sufficiency(&sigma("zmod:4", "id"), VerifyConfig::default()).unwrap();
    let main = find(&reports, "thm3.1");
    assert!(main.holds());
    assert_eq!((main.checked, main.mode, main.seed), (4096, Some(SweepMode::Exhaustive), None));
    assert_eq!(find(&reports, "thm3.1-hypothesis").checked, 3 * 2 * 2);
    let case5 = find(&reports, "thm3.1-case5");
    assert!(case5.holds());
    assert!(case5.reason.as_deref().unwrap().contains("of 512"));

    let config = VerifyConfig { seed: 11, ..VerifyConfig::default() };
    let reports = verify_t3_sufficiency(&sigma("groupring:zmod:4;C2", "aug"), config).unwrap();
    let main = find(&reports, "thm3.1");
    assert!(main.holds());
    assert_eq!((main.checked, main.mode, main.seed), (10_000, Some(SweepMode::Sampled), Some(11)));
}

#[test]
fn t3_necessity_on_zmod4_and_group_ring() {
    for (ring, s) in [("zmod:4", "id"), ("groupring:zmod:4;C2", "aug")] {
        let reports = verify_t3_necessity(&sigma(ring, s), VerifyConfig::default()).unwrap();
        assert!(reports.iter().all(ClaimReport::holds), "{ring}: {reports:?}");
    }
}

#[test]
fn zero_radical_makes_necessity_checks_trivial() {
    let reports = verify_t3_necessity(&sigma("zmod:5", "id"), VerifyConfig::default()).unwrap();
    // only b = 0, a = 1: one map per family, five replayed matrices
    assert_eq!(find(&reports, "thm4.1").checked, 3);
    assert_eq!(find(&reports, "thm4.1-replay").checked, 5);
    assert!(reports.iter().all(ClaimReport::holds));
}

#[test]
fn very_clean_equivalence_branches() {
    for (ring, count, reason) in [
        ("zmod:5", 125, "2 is a unit"),
        ("zmod:4", 64, "2 is in the radical; T_2 is strongly clean"),
        ("zmod:2", 8, "2 is in the radical; T_2 is strongly clean"),
    ] {
        let r = verify_t2_very_clean(&sigma(ring, "id"), VerifyConfig::default()).unwrap();
        assert!(r.holds(), "{ring}");
        assert_eq!(r.checked, count);
        assert_eq!(r.reason.as_deref(), Some(reason));
    }
}

#[test]
fn corollary_hypotheses_select_claims() {
    let z4g = verify_corollaries(&sigma("groupring:zmod:4;C2", "aug"), VerifyConfig::default()).unwrap();
    assert!(z4g.iter().all(ClaimReport::holds), "{z4g:?}");

    let z4 = verify_corollaries(&sigma("zmod:4", "id"), VerifyConfig::default()).unwrap();
    assert!(find(&z4, "cor2.3").holds() && find(&z4, "cor3.2").holds());

    let z5 = verify_corollaries(&sigma("zmod:5", "id"), VerifyConfig::default()).unwrap();
    let cor42 = find(&z5, "cor4.2");
    assert_eq!(cor42.status, Status::Skipped);
    assert_eq!(cor42.reason.as_deref(), Some("1 is a sum of two units"));

    let dual = verify_corollaries(&sigma("dual:zmod:4", "negx"), VerifyConfig::default()).unwrap();
    assert_eq!(find(&dual, "cor4.3").reason.as_deref(), Some("σ² ≠ σ"));
}

#[test]
fn suites_are_deterministic_and_sorted() {
    let s = sigma("dual:zmod:4", "negx");
    let first = without_timing(run_suite(&s, VerifyConfig::default(), Suite::All).unwrap());
    let second = without_timing(run_suite(&s, VerifyConfig::default(), Suite::All).unwrap());
    assert_eq!(first, second);
    assert_eq!(first.len(), 18);
    assert!(first.windows(2).all(|w| w[0].claim_id < w[1].claim_id));
    assert!(first.iter().all(|r| r.status != Status::Fails));
}

#[test]
fn reports_round_trip_through_json() {
    let reports = run_suite(&sigma("zmod:4", "id"), VerifyConfig::default(), Suite::All).unwrap();
    let json = serde_json::to_string(&reports).unwrap();
    let back: Vec<ClaimReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(reports, back);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for field in ["claim_id", "ring", "sigma", "status", "checked", "witness", "elapsed_ms", "seed"] {
        assert!(value[0].get(field).is_some(), "missing {field}");
    }
}

#[test]
fn small_budget_skips_brute_force_claims() {
    let config = VerifyConfig { budget: 100, sample_size: 50, ..VerifyConfig::default() };
    let reports = run_suite(&sigma("zmod:4", "id"), config, Suite::All).unwrap();
    let antecedent = find(&reports, "thm4.1-antecedent");
    assert_eq!(antecedent.status, Status::Skipped);
    assert!(antecedent.reason.as_deref().unwrap().contains("4096"));
    assert_eq!(find(&reports, "thm4.1").status, Status::Skipped);
    // the constructive sweep needs no idempotents, it just samples
    let t3 = find(&reports, "thm3.1");
    assert_eq!((t3.status, t3.mode, t3.checked), (Status::Holds, Some(SweepMode::Sampled), 50));
    assert!(find(&reports, "thm2.1").holds());
}

#[test]
fn non_local_rings_are_rejected() {
    let err = run_suite(&sigma("zmod:6", "id"), VerifyConfig::default(), Suite::All).unwrap_err();
    assert_eq!(err, Error::NotLocal("zmod:6".into()));
}

#[test]
fn witnesses_recheck_against_the_ring() {
    let s = sigma("zmod:4", "id");
    let budget = VerifyConfig::default().budget;

    let genuine = Witness::NotSurjective {
        family: "l_a - r_σ(b)".into(),
        a: Elem(2),
        b: Elem(0),
        left: Elem(2),
        right: Elem(0),
        missed: Elem(1),
    };
    assert!(genuine.recheck(&s, budget).unwrap());
    let bogus = Witness::NotSurjective {
        family: "l_a - r_σ(b)".into(),
        a: Elem(3),
        b: Elem(0),
        left: Elem(3),
        right: Elem(0),
        missed: Elem(1),
    };
    assert!(!bogus.recheck(&s, budget).unwrap());

    let matrix = |check| Witness::Matrix { n: 2, matrix: "[3,1;2]".into(), check, detail: String::new() };
    for check in [
        MatrixCheck::StronglyClean,
        MatrixCheck::VeryClean,
        MatrixCheck::Constructive,
    ] {
        assert!(!matrix(check).recheck(&s, budget).unwrap(), "{check:?}");
    }
    // [[1, −1], [0, 2]] is the necessity matrix for a = 1, b = 2, v = 1
    let necessity = Witness::Matrix { n: 2, matrix: "[1,3;2]".into(), check: MatrixCheck::NecessityShape, detail: String::new() };
    assert!(!necessity.recheck(&s, budget).unwrap());
    let corner = Witness::Matrix { n: 3, matrix: "[2,0,1;2,0;3]".into(), check: MatrixCheck::CornerShape, detail: String::new() };
    assert!(!corner.recheck(&s, budget).unwrap());

    assert!(Witness::SeriesSolution { a: Elem(2), b: Elem(2), v: Elem(1) }.recheck(&s, budget).unwrap());
    assert!(!Witness::SeriesSolution { a: Elem(3), b: Elem(2), v: Elem(1) }.recheck(&s, budget).unwrap());
    assert!(!Witness::UnitOutsideOnePlusRadical { u: Elem(3) }.recheck(&s, budget).unwrap());

    let z5 = sigma("zmod:5", "id");
    assert!(Witness::UnitOutsideOnePlusRadical { u: Elem(3) }.recheck(&z5, budget).unwrap());

    let mismatch = Witness::Mismatch { detail: String::new(), inner: Box::new(genuine) };
    assert!(mismatch.recheck(&s, budget).unwrap());
}

#[test]
fn constructive_failure_on_non_local_ring_is_a_genuine_witness() {
    let s = sigma("zmod:6", "id");
    let w = Witness::Matrix { n: 2, matrix: "[2,1;3]".into(), check: MatrixCheck::Constructive, detail: String::new() };
    assert!(w.recheck(&s, 1 << 24).unwrap());
}

#[test]
fn endomorphism_from_other_ring_is_rejected() {
    let r = std::sync::Arc::new(ring_from_spec("zmod:4").unwrap());
    assert!(matches!(Endomorphism::from_spec(&r, "aug"), Err(Error::IncompatibleEndomorphism { .. })));
}
