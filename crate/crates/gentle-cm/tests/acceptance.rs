//! Acceptance suite: one test per headline criterion, each printing a
//! pass/fail line (visible with `--nocapture`) and asserting its runtime
//! budget where one is set.

use gentle_cm::reproduce;

fn check(report: reproduce::CriterionReport) {
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_1_example_reproduction() {
    check(reproduce::example_reproduction());
}

#[test]
fn criterion_2_closed_form_sweep() {
    check(reproduce::closed_form_sweep());
}

#[test]
fn criterion_3_hereditary_anchors() {
    check(reproduce::hereditary_anchors());
}

#[test]
fn criterion_4_split_identity() {
    check(reproduce::split_identity());
}

#[test]
fn criterion_5_transfer_theorems() {
    check(reproduce::transfer_theorems());
}

#[test]
fn criterion_6_derived_equivalence_corpus() {
    check(reproduce::derived_equivalence_corpus());
}

#[test]
fn criterion_7_table_one_conformance() {
    check(reproduce::table_one_conformance());
}

#[test]
fn criterion_8_hall_suite() {
    check(reproduce::hall_suite());
}

#[test]
fn criterion_9_structural_counts() {
    check(reproduce::structural_counts());
}
