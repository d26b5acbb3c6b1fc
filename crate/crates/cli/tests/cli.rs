//! The `catbf` binary: exit codes, documented examples, precedence and determinism.

use std::process::{Command, Output};

const VARS: [&str; 7] =
    ["CATBF_MAX_DEGREE", "CATBF_CHARGE_WINDOW", "CATBF_INDEX_WINDOW", "CATBF_CACHE_DIR", "CATBF_NO_CACHE", "CATBF_JSON", "CATBF_JOBS"];

fn catbf(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_catbf"));
    for v in VARS {
        c.env_remove(v);
    }
    c.env("CATBF_NO_CACHE", "true");
    for (k, v) in env {
        c.env(k, v);
    }
    c.args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn schur_examples() {
    let o = catbf(&["schur", "3,1"], &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("computed s[3,1]"));
    let o = catbf(&["schur", "0"], &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("computed 1\n"), "{}", stdout(&o));
    assert_eq!(code(&catbf(&["schur", "1,2"], &[])), 2);
    assert_eq!(code(&catbf(&["schur", "a"], &[])), 2);
    assert_eq!(code(&catbf(&["schur", "5,4", "--max-degree", "8"], &[])), 3);
}

#[test]
fn cat_examples() {
    for args in [
        &["cat", "specht", "2,1"][..],
        &["cat", "sigma", "--module", "trivial:0"],
        &["cat", "bb", "--a", "1", "--b", "1", "--module", "S:1"],
        &["cat", "bb", "--a", "-1", "--b", "-1", "--module", "S:2", "--star"],
        &["cat", "bbstar", "--a", "1", "--b", "1", "--module", "S:1"],
        &["cat", "specht", "2,1,1", "--dual"],
        &["cat", "fermion", "--i", "-1", "--charge", "1", "--module", "S:2"],
    ] {
        let o = catbf(args, &[]);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
    }
    assert_eq!(code(&catbf(&["cat", "specht", "4,3"], &[("CATBF_MAX_DEGREE", "6")])), 3);
    assert_eq!(code(&catbf(&["cat", "sigma", "--module", "reg:10"], &[])), 3);
    assert_eq!(code(&catbf(&["cat", "sigma", "--module", "bogus:1"], &[])), 2);
}

#[test]
fn clifford_windows() {
    let o = catbf(&["clifford", "--max-degree", "4", "--json"], &[]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 3);
    assert_eq!(v["pass"], true);

    let o = catbf(&["clifford", "--charge-window", "empty", "--json"], &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(v["records"].as_array().unwrap().len(), 0);
    assert_eq!(v["checked"], 0);

    assert_eq!(code(&catbf(&["clifford", "--max-degree", "2", "--mutate"], &[])), 1);
    let help = stdout(&catbf(&["clifford", "--help"], &[]));
    assert!(!help.contains("mutate"));
}

#[test]
fn flags_override_environment() {
    assert_eq!(code(&catbf(&["schur", "3,1"], &[("CATBF_MAX_DEGREE", "3")])), 3);
    assert_eq!(code(&catbf(&["schur", "3,1", "--max-degree", "4"], &[("CATBF_MAX_DEGREE", "3")])), 0);
    let o = catbf(&["schur", "2"], &[("CATBF_JSON", "true")]);
    assert!(stdout(&o).trim_start().starts_with('{'));
    let o = catbf(&["clifford", "--max-degree", "1", "--index-window", "0"], &[("CATBF_INDEX_WINDOW", "3")]);
    assert!(stdout(&o).contains("i=0..0"), "{}", stdout(&o));
    assert_eq!(code(&catbf(&["schur", "2"], &[("CATBF_JOBS", "0")])), 2);
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let a = catbf(&["suite", "--json", "--jobs", "1"], &[]);
    let b = catbf(&["suite", "--json", "--jobs", "4"], &[]);
    let c = catbf(&["--cache-dir", d, "suite", "--json", "--jobs", "3"], &[("CATBF_NO_CACHE", "false")]);
    let e = catbf(&["--cache-dir", d, "suite", "--json", "--jobs", "2"], &[("CATBF_NO_CACHE", "false")]);
    for o in [&a, &b, &c, &e] {
        assert_eq!(code(o), 0);
    }
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(a.stdout, e.stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}
