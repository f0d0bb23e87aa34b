//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line (visible with `cargo test -p cli-harness --test acceptance --
//! --nocapture`).

use cli_harness::acceptance::*;

fn check(result: CriterionResult) {
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn criterion_01_operator_identities_holds() {
    check(criterion_01_operator_identities());
}

#[test]
fn criterion_02_eigenmode_growth_holds() {
    check(criterion_02_eigenmode_growth());
}

#[test]
fn criterion_03_one_sided_bounds_hold() {
    check(criterion_03_one_sided_bounds());
}

#[test]
fn criterion_04_h1_conservation_holds() {
    check(criterion_04_h1_conservation());
}

#[test]
fn criterion_05_w1inf_rate_holds() {
    check(criterion_05_w1inf_rate());
}

#[test]
fn criterion_06_point_residuals_hold() {
    check(criterion_06_point_residuals());
}

#[test]
fn criterion_07_resolvent_bound_holds() {
    check(criterion_07_resolvent_bound());
}

#[test]
fn criterion_08_eigencloud_strip_holds() {
    check(criterion_08_eigencloud_strip());
}

#[test]
fn criterion_09_classifier_golden_holds() {
    check(criterion_09_classifier_golden());
}

#[test]
fn criterion_10_hardy_holds() {
    check(criterion_10_hardy());
}

#[test]
fn criterion_11_linearization_holds() {
    check(criterion_11_linearization());
}

#[test]
fn criterion_12_orbit_robustness_holds() {
    check(criterion_12_orbit_robustness());
}
