use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tunnelcalc"))
        .args(args)
        .env_remove("TUNNELCALC_SEARCH_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn stderr_of_failure(args: &[&str]) -> String {
    let out = run(args);
    assert!(!out.status.success(), "{args:?} unexpectedly succeeded");
    String::from_utf8(out.stderr).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<serde_json::Value> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    stdout(&full)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is a JSON record"))
        .collect()
}

#[test]
fn middle_reports_matrix_and_slopes() {
    let text = stdout(&["middle", "3", "-4"]);
    assert!(text.contains("associated matrix: (1 -1; 2 -3)"));
    assert!(text.contains("continued fraction: -[0,1,3]"));
    assert!(text
        .trim_end()
        .ends_with("slopes [2/3], -5; binary (empty); depth 1; semisimple"));
    assert!(stdout(&["middle", "4", "3"]).contains("slopes [1/3], 5;"));
    assert!(stdout(&["middle", "2", "1"]).contains("trivial knot: no nontrivial cablings"));
}

#[test]
fn split_reproduces_known_tunnels() {
    let regular = stdout(&["split", "3", "-4", "lift-lambda", "-1"]);
    assert!(regular.contains("slopes [2/3], -5, -19; binary 1; depth 2; regular"));
    assert!(regular.contains("band sum of T(2,-3) (upper) and T(3,-4) (lower)"));
    assert!(stdout(&["split", "4", "3", "drop-rho", "1"]).contains("slopes [1/3], 5, 19;"));
}

#[test]
fn zero_twist_is_rejected() {
    let err = stderr_of_failure(&["split", "4", "3", "drop-rho", "0"]);
    assert!(
        err.contains("n = 0") && err.contains("gamma_0 = rho"),
        "{err}"
    );
}

#[test]
fn classify_verdicts() {
    assert!(
        stdout(&["classify", "3", "2", "lift-lambda", "5", "lift-rho", "5"])
            .starts_with("SAME: case (c)(i)")
    );
    assert!(stdout(&[
        "classify",
        "4",
        "3",
        "drop-lambda",
        "1",
        "lift-lambda",
        "-1"
    ])
    .starts_with("SAME: case (a)"));
    assert_eq!(
        stdout(&["classify", "4", "3", "drop-lambda", "1", "drop-rho", "1"]).trim(),
        "DISTINCT"
    );
    let err = stderr_of_failure(&["classify", "3", "4", "drop-lambda", "1", "drop-rho", "1"]);
    assert!(err.contains("normalize"), "{err}");
}

#[test]
fn braid_words() {
    assert_eq!(
        stdout(&["braid", "4", "3", "drop-rho", "1"]).trim(),
        "l -1 m 1 l -1 m 1 l -2 m 1 s 1 l -1 m 1 l -2 m 1"
    );
    assert_eq!(
        stdout(&["braid", "4", "3", "drop-rho", "-1"]).trim(),
        "l -1 m 1 l -1 m 1 l -2 m 1 s -1 l -1 m 1 l -2 m 1"
    );
    assert_eq!(
        stdout(&["braid", "4", "3", "drop-rho", "0", "--formula"]).trim(),
        "l -1 m 1 l -1 m 1 l -2 m 1 s 0 m -1 l 2 m -1 l 1"
    );
    assert_eq!(stdout(&["braid", "3", "2"]).trim(), "l -1 m 1 l -2 m 1");
    let out = run(&["braid", "5", "3", "lift-rho", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("drop-rho"));
    stderr_of_failure(&["braid", "2", "3"]);
}

#[test]
fn identify_uses_bound_from_flag_or_env() {
    assert_eq!(
        stdout(&["identify", "[1/3], 5"]).trim(),
        "middle tunnel of T(4,3)"
    );
    assert_eq!(
        stdout(&["identify", "[1/3]", "7"]).trim(),
        "middle tunnel of T(5,3)"
    );
    assert!(stdout(&["identify", "--bound", "4", "[1/3], 7"]).starts_with("no torus knot"));
    let out = Command::new(env!("CARGO_BIN_EXE_tunnelcalc"))
        .args(["identify", "[1/3], 7"])
        .env("TUNNELCALC_SEARCH_BOUND", "4")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("no torus knot"));
    stderr_of_failure(&["identify", "1/3, 5"]);
}

#[test]
fn normalize_reports_moves() {
    let text = stdout(&["normalize", "3", "-4"]);
    assert!(text.starts_with("T(4,3)") && text.contains("swapped") && text.contains("mirror"));
    assert!(stdout(&["normalize", "4", "3"]).contains("already normalized"));
}

#[test]
fn invalid_parameters_name_the_offender() {
    let err = stderr_of_failure(&["middle", "4", "6"]);
    assert!(
        err.contains("a = 4, b = 6") && err.contains("coprime"),
        "{err}"
    );
    stderr_of_failure(&["split", "4", "3", "sideways", "1"]);
    stderr_of_failure(&["middle", "4"]);
}

#[test]
fn json_records_carry_the_text_numbers() {
    let records = json_lines(&["split", "3", "-4", "lift-lambda", "-1"]);
    assert_eq!(records.len(), 1);
    let d = &records[0]["descriptor"];
    assert_eq!(
        d["invariants"]["slopes"],
        serde_json::json!(["[2/3]", "-5", "-19"])
    );
    assert_eq!(d["invariants"]["binary"], "1");
    assert_eq!(d["invariants"]["depth"], 2);
    assert_eq!(d["classification"], "regular");
    assert_eq!(d["sigma_slope"], "-18");

    let verdict = &json_lines(&[
        "classify",
        "4",
        "3",
        "drop-lambda",
        "1",
        "lift-lambda",
        "-1",
    ])[0];
    assert_eq!(verdict["same"], true);
    assert_eq!(verdict["result"]["case"], "(a)");

    let braid = &json_lines(&["braid", "4", "3", "drop-rho", "1"])[0];
    assert_eq!(
        braid["input"],
        "l -1 m 1 l -1 m 1 l -2 m 1 s 1 l -1 m 1 l -2 m 1"
    );
}

#[test]
fn atlas_lists_families_per_base() {
    let records = json_lines(&["atlas", "--max-a", "7"]);
    let on = |a: i64, b: i64| {
        records
            .iter()
            .filter(|r| r["base"]["a"] == a && r["base"]["b"] == b)
            .count()
    };
    assert_eq!(on(3, 2), 6);
    assert_eq!(on(4, 3), 2);
    assert_eq!(on(7, 2), 6);
    assert_eq!(on(7, 5), 2);
    let triples = records
        .iter()
        .filter(|r| r["family"]["kind"] == "torus_triple")
        .count();
    assert_eq!(triples, 2 * 3);
}
