//! End-to-end checks of the binary: exit codes, output shapes and the JSON
//! report schema.

use std::process::Command;

fn balkan(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_balkan"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn compute_exact_values() {
    let (code, stdout, _) = balkan(&["compute", "5", "1", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("= 3"), "{stdout}");

    let (code, stdout, _) = balkan(&["compute", "1", "1", "3"]);
    assert_eq!(code, 0);
    // canonical form of -288/(31 - 90G)
    assert!(stdout.contains("288/(-31 + 90*G)"), "{stdout}");

    let (code, stdout, _) = balkan(&["compute", "3", "2", "3", "decimal", "--digits", "30"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("6.5112599177491385694019520007"), "{stdout}");
}

#[test]
fn usage_errors_exit_2() {
    // even j is outside the closed forms
    let (code, _, stderr) = balkan(&["compute", "4", "1", "1"]);
    assert_eq!(code, 2, "{stderr}");
    // malformed database
    let dir = std::env::temp_dir().join("balkan-bad-db-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "1 2 three 4\n").unwrap();
    let (code, _, _) = balkan(&["decimate", "affine", "--db", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    // unknown subargument
    let (code, _, _) = balkan(&["table", "7"]);
    assert_eq!(code, 2);
    let (code, _, _) = balkan(&["series", "everything"]);
    assert_eq!(code, 2);
}

#[test]
fn verification_failure_exits_1() {
    // seed derivation at starved precision cannot validate a relation: the
    // report carries the failing check and the process exits 1
    let (code, stdout, _) = balkan(&["derive", "seeds", "13", "--digits", "21"]);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("FAIL"), "{stdout}");

    // and the pass path stays 0
    let (code, stdout, _) = balkan(&["verify", "bosnia", "--box", "5..5,*,1..2"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("OK: 4/4"), "{stdout}");
}

#[test]
fn json_schema_is_stable() {
    let (code, stdout, _) = balkan(&[
        "verify",
        "kosovo",
        "--box",
        "3..3,1..2,1..1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let obj = v.as_object().expect("object");
    for key in ["command", "parameters", "checks", "depthsUsed", "wallTime"] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    let checks = obj["checks"].as_array().expect("checks array");
    assert_eq!(checks.len(), 2);
    for c in checks {
        for key in ["name", "expected", "actual", "mode", "pass"] {
            assert!(c.as_object().unwrap().contains_key(key), "missing check.{key}");
        }
        let mode = c["mode"].as_str().unwrap();
        assert!(
            mode == "exact" || mode == "upToSign" || mode.starts_with("digits:"),
            "bad mode {mode}"
        );
        assert_eq!(c["pass"], serde_json::Value::Bool(true));
    }
    assert!(obj["wallTime"].as_f64().is_some());
    assert!(obj["depthsUsed"].as_array().is_some());
}

#[test]
fn decimate_counts_and_dump() {
    let (code, stdout, _) = balkan(&["decimate", "affine", "--box", "-3..3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("332 of 2401"), "{stdout}");

    let dir = std::env::temp_dir().join("balkan-dump-db-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dump = dir.join("db.txt");
    let (code, _, _) = balkan(&[
        "decimate",
        "affine",
        "--box",
        "-1..1",
        "--dump-db",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&dump).unwrap();
    assert!(text.lines().count() == 8 && text.starts_with("11 6 40 "), "{text}");
}

#[test]
fn derive_matches_chain() {
    let (code, stdout, _) = balkan(&["derive", "alphabeta", "3", "2", "--digits", "300"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("OK: 1/1"), "{stdout}");
}

#[test]
fn starved_depth_cap_fails_cleanly() {
    let (code, stdout, _) = balkan(&[
        "verify",
        "montenegro",
        "--box",
        "*,1..1,1..1",
        "--depth-cap",
        "64",
    ]);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("no convergence up to depth 64"), "{stdout}");
}

#[test]
fn series_limits_pass() {
    let (code, stdout, _) = balkan(&["series", "limits"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("OK: 6/6"), "{stdout}");
}
