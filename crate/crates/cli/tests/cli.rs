//! End-to-end checks of the command-line surface: subcommands, exit codes
//! and the JSON shapes.

use std::process::{Command, Output};

fn bds() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bds"))
}

fn run(args: &[&str]) -> Output {
    bds().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn classify_quaternionic_has_ten_families() {
    let out = run(&["classify", "--quaternionic", "--rank-max", "8"]);
    assert!(out.status.success());
    let rows = stdout_json(&out);
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 10);
    for want in [
        "g2;A1,A1",
        "f4;A1,C3",
        "e6;A1,A5,2",
        "e7;A1,D6,1",
        "e8;A1,E7",
    ] {
        assert!(
            rows.iter().any(|r| r["g0"] == want),
            "missing quaternionic row {want}"
        );
    }
    assert!(rows.iter().all(|r| r["tube_type"] == true));
}

#[test]
fn classify_single_case_and_tube_filter() {
    let out = run(&["classify", "--case", "so(8,1)"]);
    assert!(out.status.success());
    let rows = stdout_json(&out);
    assert_eq!(rows[0]["g0"], "so(8,1)");
    assert_eq!(rows[0]["invariant_algebra"], "C");
    assert_eq!(rows[0]["tube_type"], true); // l = 4 even

    let out = run(&["classify", "--tube-only", "--rank-max", "6"]);
    assert!(out.status.success());
    let rows = stdout_json(&out);
    assert!(rows
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["tube_type"] == true));

    // CSV mode.
    let out = run(&["classify", "--case", "g2;A1,A1", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().count() == 2);
    assert!(text.contains("\"g2;A1,A1\""));
}

#[test]
fn datum_reports_the_worked_example() {
    let out = run(&["datum", "--case", "sp(2,1)"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["c"], 3);
    assert_eq!(v["s"], 3);
    assert_eq!(v["eps"], serde_json::json!(["0", "2", "1"]));
    assert_eq!(v["spin_structure"], false);
}

#[test]
fn datum_by_type_rank_nu() {
    let out = run(&["datum", "--type", "B", "--rank", "2", "--nu", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["case"]["g0"], "so(4,1)");
    assert_eq!(v["d"], 2);
}

#[test]
fn cascade_standalone_pair() {
    let out = run(&["cascade", "--pair", "E:7:7"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["tube_type"], true);
    assert_eq!(v["sum_is_minus_two_eps_star"], true);
    assert_eq!(v["partial_orthogonality"], true);
}

#[test]
fn schmid_dimensions() {
    let out = run(&["schmid", "--case", "sp(2,1)", "--m", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["total_dim"], "6");
    assert_eq!(v["expected_dim"], "6");
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn branch_small_shape() {
    let out = run(&["branch", "--case", "sp(2,1)", "--m", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["distinct_types"].as_u64().unwrap() >= 1);
}

#[test]
fn series_common_empty_for_so41() {
    let out = run(&["series", "common", "--case", "so(4,1)", "--t", "-4"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["common_types"].as_array().unwrap().len(), 0);
    assert_eq!(v["hypotheses"]["quaternionic"], true);
}

#[test]
fn series_negativity_violation_exits_three() {
    let out = run(&["series", "common", "--case", "so(4,1)", "--t", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("violates sufficient negativity"), "{err}");
    assert!(err.contains("need t <"), "{err}");
}

#[test]
fn series_guard_violation_exits_four() {
    let out = run(&[
        "series", "ktypes", "--case", "sp(2,1)", "--t", "-6", "--m-max", "40", "--guard", "50",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn series_tube_common_sp22() {
    let out = run(&[
        "series", "common", "--case", "sp(2,2)", "--t", "-7", "--a-max", "1", "--m-max", "6",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = stdout_json(&out);
    assert_eq!(v["hypotheses"]["tube"], true);
    assert_eq!(v["hypotheses"]["relative_invariant_degree"], 2);
    assert_eq!(v["hypotheses"]["relative_invariant_q"], "-1");
    let rows = v["common_types"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        // q odd and c odd: certifying j are odd.
        for j in row["certified_j"].as_array().unwrap() {
            assert_eq!(j.as_u64().unwrap() % 2, 1);
        }
    }
}

#[test]
fn series_tube_rejected_on_non_tube_case() {
    let out = run(&["series", "common", "--case", "so(6,4)", "--t", "-12"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn series_admissibility_sides() {
    let out = run(&[
        "series",
        "admissibility",
        "--case",
        "so(4,1)",
        "--t",
        "-4",
        "--m-max",
        "12",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["stabilized"], true);

    let out = run(&[
        "series",
        "admissibility",
        "--case",
        "sp(2,1)",
        "--t",
        "-6",
        "--side",
        "holo",
        "--r-max",
        "12",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["monotone_growth"], true);
}

#[test]
fn byte_stable_output() {
    let a = run(&["classify", "--rank-max", "5"]);
    let b = run(&["classify", "--rank-max", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&[
        "series", "ltypes", "--case", "sp(2,1)", "--t", "-6", "--r-max", "4",
    ]);
    let b = run(&[
        "series", "ltypes", "--case", "sp(2,1)", "--t", "-6", "--r-max", "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["classify", "--case", "so(2,5)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["datum"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    // clap's own parse failures also use 2.
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_runs_clean() {
    let out = run(&["verify", "rootsys", "--rank-max", "5"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() > 0);
}

#[test]
fn env_guard_is_honored() {
    let out = bds()
        .args([
            "series", "ktypes", "--case", "sp(2,1)", "--t", "-6", "--m-max", "40",
        ])
        .env("BDS_GUARD", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
