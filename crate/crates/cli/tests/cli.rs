use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const S3: &str = "# symmetric group on three points\ndegree: 3\ngen: (1 2 3)\ngen: (1 2)\n";

fn fitfunc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitfunc"))
        .args(args)
        .env_remove("FITFUNC_GROUP")
        .env_remove("FITFUNC_FUNCTORIAL")
        .env_remove("FITFUNC_SUITE")
        .env_remove("FITFUNC_OUT")
        .env_remove("FITFUNC_MAX_ORDER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_s3(dir: &Path) -> String {
    let path = dir.join("s3.grp");
    fs::write(&path, S3).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn compute_f_star_of_s3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_s3(dir.path());
    let o = fitfunc(&["compute", "--group", &path, "--radical", "Fstar"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("order: 3"), "{out}");
    assert!(out.contains("generators: (1 2 3)"), "{out}");
}

#[test]
fn compute_json() {
    let o = fitfunc(&[
        "compute",
        "--name",
        "S4",
        "--functorial",
        "Phi_pi{2}*Fstar",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group_order"], 24);
    assert_eq!(v["value"]["order"], 4);
}

#[test]
fn innerisers_witness_lines() {
    let o = fitfunc(&["compute", "--name", "S4", "--radical", "Fstar_innerisers"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("inneriser order"));
}

#[test]
fn height_of_s3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_s3(dir.path());
    let o = fitfunc(&["height", "--group", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");

    let o = fitfunc(&["height", "--name", "S4", "--functorial", "F", "--series"]);
    assert_eq!(stdout(&o), "3\nseries orders: 1 < 4 < 12 < 24\n");
}

#[test]
fn group_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_s3(dir.path());
    let o = Command::new(env!("CARGO_BIN_EXE_fitfunc"))
        .args(["height"])
        .env("FITFUNC_GROUP", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn verify_small_selection() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = fitfunc(&[
        "verify",
        "--suite",
        "radicals-agreement,axioms",
        "--only",
        "S3,D8,A4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["groups"].as_array().unwrap().len(), 3);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for i in 0..2 {
        let out = dir.path().join(format!("r{i}.json"));
        let o = fitfunc(&[
            "verify",
            "--only",
            "S4,Q8xC3",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("generated_at");
        for g in v["groups"].as_array_mut().unwrap() {
            g.as_object_mut().unwrap().remove("elapsed_ms");
        }
        docs.push(v);
    }
    assert_eq!(docs[0], docs[1]);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grp");
    fs::write(&bad, "degree: 3\ngen: (1 2 2)\n").unwrap();
    let o = fitfunc(&[
        "compute",
        "--group",
        bad.to_str().unwrap(),
        "--radical",
        "F",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = fitfunc(&["compute", "--name", "S3", "--functorial", "Fbogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fitfunc(&["compute", "--name", "S3", "--radical", "Nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fitfunc(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fitfunc(&["verify", "--only", "S99"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cap_errors_exit_3() {
    let o = fitfunc(&["compute", "--name", "A6", "--radical", "Ftilde"]);
    assert_eq!(o.status.code(), Some(3));
    let o = fitfunc(&[
        "--max-order",
        "20",
        "compute",
        "--name",
        "S4",
        "--radical",
        "Phi",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn catalog_list() {
    let o = fitfunc(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().count() >= 40);
    assert!(out
        .lines()
        .any(|l| l.split_whitespace().eq(["SL(2,3)", "24"])));
}

#[test]
fn parse_check_round_trip() {
    let o = fitfunc(&[
        "parse-check",
        "--functorial",
        "(Fstar & Ftilde) | Phi_pi{3,2} o F^inf",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let printed = stdout(&o).trim().to_string();
    let again = fitfunc(&["parse-check", "--functorial", &printed]);
    assert_eq!(stdout(&again).trim(), printed);

    let dir = tempfile::tempdir().unwrap();
    let path = write_s3(dir.path());
    let o = fitfunc(&["parse-check", "--group", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# order 6"));
}
