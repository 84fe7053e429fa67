use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn scene(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenes")
        .join(name)
}

fn distab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = distab(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (v, out.status.code().unwrap())
}

fn write_scene(dir: &tempfile::TempDir, body: &str) -> PathBuf {
    let p = dir.path().join("scene.toml");
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn analyze_dihedral() {
    let (r, code) = json(&["analyze", scene("dihedral10.toml").to_str().unwrap()]);
    assert_eq!(code, 0);
    let a = &r["analysis"];
    assert_eq!(a["radical_series"], serde_json::json!([10, 8, 6, 4, 2, 0]));
    assert_eq!(a["dim_top"], 2);
    assert_eq!(a["symmetric"]["kind"], "symmetric");
    assert_eq!(a["modules"]["u"], 2);
}

#[test]
fn analyze_dual_numbers_and_qci() {
    let (r, _) = json(&["analyze", scene("dual-numbers.toml").to_str().unwrap()]);
    assert_eq!(
        r["analysis"]["radical_series"],
        serde_json::json!([2, 1, 0])
    );
    assert_eq!(r["analysis"]["symmetric"]["kind"], "symmetric");
    let (r, _) = json(&["analyze", scene("qci.toml").to_str().unwrap()]);
    assert_eq!(r["analysis"]["dim"], 49);
    let soc = r["analysis"]["socle_series"].as_array().unwrap();
    assert_eq!((soc[0].as_u64(), soc[1].as_u64()), (Some(1), Some(3)));
    assert_eq!(r["analysis"]["ideals"]["ann_z"], 40);
}

#[test]
fn certify_verdicts() {
    let (r, code) = json(&["certify", scene("qci.toml").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["certificates"][0]["theorem_tag"], "quotient-embedding");
    assert_eq!(r["certificates"][0]["verdict"], "positive");
    assert_eq!(r["certificates"][1]["conditions"]["dim_quotient"], 9);
    let (r, code) = json(&["certify", scene("cyclic6.toml").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["certificates"][0]["verdict"], "negative");
}

#[test]
fn report_fields_follow_the_schema() {
    let (r, _) = json(&["certify", scene("klein.toml").to_str().unwrap()]);
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
    for k in [
        "format",
        "tool",
        "version",
        "command",
        "seed",
        "input_digest",
        "scene",
        "certificates",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert!(!keys.contains(&"timing_ms"));
    assert_eq!(r["format"], 1);
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
    for c in r["certificates"].as_array().unwrap() {
        let mut ck: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        ck.sort();
        assert_eq!(
            ck,
            [
                "claim",
                "conditions",
                "cross_checks",
                "inputs",
                "theorem_tag",
                "verdict"
            ]
        );
    }
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "enumerate",
        scene("dihedral10.toml").to_str().unwrap().to_owned().leak(),
        "--seed",
        "7",
        "--json",
        "-",
    ];
    let a = distab(&args);
    let b = distab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let threaded = Command::new(env!("CARGO_BIN_EXE_distab"))
        .args(args)
        .env("DISTAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, threaded.stdout);
}

#[test]
fn malformed_generators_exit_2_with_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_scene(
        &dir,
        r#"
format = 1
modulus = 2
[algebra]
builder = "truncated"
n = 3
[ideals]
bad = { kind = "generated", generators = [[1, 0, 0], [1, 0]] }
[[certify]]
kind = "quotient-embedding"
ideal = "bad"
"#,
    );
    let out = distab(&["certify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("ideals.bad.generators[1]"), "{err}");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for (body, needle) in [
        ("format = 2\nmodulus = 2\n[algebra]\nbuilder = \"matrix\"\nn = 2\n", "format"),
        ("format = 1\nmodulus = 6\n[algebra]\nbuilder = \"matrix\"\nn = 2\n", "modulus"),
        ("format = 1\nmodulus = 2\n[algebra]\nbuilder = \"group\"\n", "[group]"),
        ("format = 1\nmodulus = 2\n[algebra]\nbuilder = \"cube\"\n", "line"),
        (
            "format = 1\nmodulus = 2\n[algebra]\nbuilder = \"table\"\ndim = 3\nunit = [1, 0, 0]\nstructure = [[0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1], [1, 0, 1, 1], [2, 0, 2, 1], [1, 2, 1, 1]]\n",
            "associativity",
        ),
        (
            "format = 1\nmodulus = 2\n[algebra]\nbuilder = \"truncated\"\nn = 2\n[ideals]\na = { kind = \"right-annihilator\", ideal = \"b\" }\nb = { kind = \"left-annihilator\", ideal = \"a\" }\n",
            "cycle",
        ),
    ] {
        let p = write_scene(&dir, body);
        let out = distab(&["analyze", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{body}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{err}");
    }
    let out = distab(&["certify", "/nonexistent/scene.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_klein_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let out = distab(&[
        "enumerate",
        scene("klein.toml").to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(csv).unwrap();
    assert_eq!(
        text,
        "dim,ideals,positives,improper\n0,1,0,true\n1,1,0,false\n2,3,3,false\n3,1,1,false\n4,1,0,true\n"
    );
}

#[test]
fn enumerate_budget_marks_partial() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_scene(
        &dir,
        "format = 1\nmodulus = 3\n[algebra]\nbuilder = \"truncated\"\nn = 6\n",
    );
    let (r, code) = json(&["enumerate", p.to_str().unwrap(), "--budget", "10"]);
    assert_eq!(code, 0);
    assert_eq!(r["enumeration"]["partial"], true);
    assert_eq!(r["enumeration"]["exhaustive"], false);
}

#[test]
fn enumerate_simple_algebra_has_only_improper_rows() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_scene(
        &dir,
        "format = 1\nmodulus = 2\n[algebra]\nbuilder = \"matrix\"\nn = 2\n",
    );
    let (r, _) = json(&["enumerate", p.to_str().unwrap()]);
    let rows = r["enumeration"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|row| row["improper"] == true));
}

#[test]
fn certify_without_entries_is_an_input_error() {
    let out = distab(&["certify", scene("semisimple.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("certify"));
}

#[test]
fn verify_suite_selected_and_fault() {
    let (r, code) = json(&["verify-suite", "--criterion", "10"]);
    assert_eq!(code, 0);
    assert_eq!(r["suite"][0]["passed"], true);
    assert_eq!(r["input_digest"], Value::Null);
    let out = distab(&["verify-suite", "--criterion", "10", "--inject-fault", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("FAIL 10") && text.contains("injected fault"),
        "{text}"
    );
}

#[test]
fn timing_is_opt_in() {
    let (r, _) = json(&[
        "analyze",
        scene("dual-numbers.toml").to_str().unwrap(),
        "--timing",
    ]);
    assert!(r["timing_ms"].is_u64());
}
