//! The named verification suites, run as integration tests at the same
//! bounds the CLI uses by default.

use bds_core::decomp::DEFAULT_GUARD;
use bds_core::verify::run_suite;

fn assert_suite(name: &str) {
    let rep = run_suite(name, 8, DEFAULT_GUARD).unwrap();
    let fails: Vec<_> = rep
        .checks
        .iter()
        .filter(|(_, pass, _)| !pass)
        .map(|(name, _, detail)| format!("{name}: {detail:?}"))
        .collect();
    assert!(
        fails.is_empty(),
        "suite {name}: {} of {} checks failed:\n{}",
        fails.len(),
        rep.checks.len(),
        fails.join("\n")
    );
    println!("suite {name}: {} checks passed", rep.checks.len());
}

#[test]
fn suite_rootsys() {
    assert_suite("rootsys");
}

#[test]
fn suite_bds() {
    assert_suite("bds");
}

#[test]
fn suite_cascade() {
    assert_suite("cascade");
}

#[test]
fn suite_schmid() {
    assert_suite("schmid");
}

#[test]
fn suite_lspath() {
    assert_suite("lspath");
}

#[test]
fn suite_series() {
    assert_suite("series");
}
