use std::process::{Command, Output};

use tight_sfs::ClassificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tight-sfs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_json_is_a_report() {
    let o = run(&["classify", "-1/2,-1/2,-1/2,-3/5", "--json", "--enumerate"]);
    assert_eq!(o.status.code(), Some(0));
    let r: ClassificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.count_zero_torsion, 6);
    assert_eq!(r.realization_vectors.len(), 6);
    assert_eq!(r.upper_bound_breakdown.solid_torus_counts, [1, 1, 1, 2]);
    assert!(r.explanation.is_none());
}

#[test]
fn classify_explain() {
    let o = run(&["classify", "-1/2,-1/2,-1/2,-1/2", "--explain"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("xi_E'"));
    assert!(out.contains("shirt audit at s = 0: 3 candidates, 3 sign matched, 3 classes"));
    let o = run(&["classify", "-1/2,-1/2,-1/2,-1/2", "--explain", "--json"]);
    let r: ClassificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.explanation.unwrap().census.classes.len(), 3);
}

#[test]
fn positive_coefficients_are_normalized() {
    // -5/2 + 3 * (-1/2) + ... : floors sum to -6 either way.
    let a = run(&["count", "-5/2,-1/2,-1/2,1/2"]);
    let b = run(&["count", "-3/2,-1/2,-1/2,-1/2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["classify", "-1/2,-1/2,-1/2,1/2"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["classify", "-1/2,-1/2,-1/2"]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", "-1/2,-1/2,-1/2,-2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "-1/2,-1/2,-1/2,-1/0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["cf", "-1/3", "--strict"]).status.code(), Some(2));
    assert_eq!(run(&["cf", "1/3"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn cf_and_h1() {
    assert_eq!(stdout(&run(&["cf", "-1/3"])).trim(), "[-1, -2, -2]");
    assert_eq!(
        stdout(&run(&["cf", "-7/3", "--strict"])).trim(),
        "[-3, -2, -2]"
    );
    let o = run(&["h1", "-1/2,-1/2,-1/2,-1/2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 32);
    assert_eq!(v["closed_form"], 32);
}

#[test]
fn diagram_json_ends_integral() {
    let o = run(&["diagram", "-1/2,-1/2,-1/2,-3/5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let last = &v.as_array().unwrap().last().unwrap()["diagram"];
    assert_eq!(last["central"], -4);
    assert_eq!(
        last["chains"],
        serde_json::json!([[-2], [-2], [-2], [-3, -2]])
    );
    assert_eq!(v[0]["diagram"]["chains"][3][0], "5/3");
}

#[test]
fn verify_small() {
    let o = run(&["verify", "--max-p", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cases"], v["passed"]);
    assert_eq!(v["failures"], serde_json::json!([]));
}
