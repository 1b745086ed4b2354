use std::path::Path;
use std::process::{Command, Output};

fn hwv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hwv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn coeff_methods_agree() {
    for method in ["sf", "tensor", "rank"] {
        let o = hwv(&["coeff", "--lambda", "2,2", "--d", "2", "--n", "2", "--method", method]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "1");
    }
}

#[test]
fn eval_row_tableau_on_power_sum() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "row22.json", r#"{"shape":[2,2],"d":2,"n":2,"rows":[[1,1],[2,2]]}"#);
    let p = write(dir.path(), "ps.json", r#"[{"exp":{"1":2},"coef":"1"},{"exp":{"2":2},"coef":"1"}]"#);
    let o = hwv(&["eval", "--tableau", &t, "--point", &p]);
    assert_eq!(stdout(&o), "2");
}

#[test]
fn certify_verify_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let cert = cert.to_str().unwrap();
    let o = hwv(&["certify", "--lambda", "14,2", "--n", "8", "--d", "2", "--m", "2", "--out", cert]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = hwv(&["verify", "--cert", cert]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid"));

    let mut json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(cert).unwrap()).unwrap();
    json["blocks"][0]["value"] = "0".into();
    let bad = write(dir.path(), "bad.json", &json.to_string());
    let o = hwv(&["verify", "--cert", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("zeroValue"));
}

#[test]
fn certify_is_deterministic() {
    let args = ["certify", "--lambda", "126,2", "--n", "16", "--d", "8", "--seed", "5"];
    let a = hwv(&args);
    let b = hwv(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn refusal_and_dry_run() {
    let lambda = format!("{},513,511", 1536 * 512 - 1024);
    let base = ["--lambda", lambda.as_str(), "--n", "1536", "--d", "512", "--m", "2"];
    let o = hwv(&[&["certify"], &base[..]].concat());
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["refusal"], true);
    assert!(report["reason"].as_str().unwrap().contains("desk scale"));
    let o = hwv(&[&["certify", "--mode", "structural"], &base[..]].concat());
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["branch"], "splitting");
    assert!(report["plan"].as_array().unwrap().iter().any(|b| b["kind"] == "hook"));
}

#[test]
fn split_and_filter() {
    let o = hwv(&["split", "--lambda", "20,4,4,2", "--n", "10", "--d", "3", "--m", "2", "--mode", "structural"]);
    assert_eq!(o.status.code(), Some(0));
    let split: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(split["c"]["1"], 16);
    let o = hwv(&["split", "--lambda", "20,4,4,2", "--n", "10", "--d", "3", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m¹⁰"));
    let o = hwv(&["kl-filter", "--lambda", "5,3", "--n", "8", "--d", "1", "--m", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail(body)"));
}

#[test]
fn lift_and_enumerate() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.json", r#"{"shape":[2,2],"d":2,"n":2,"rows":[[1,1],[2,2]]}"#);
    let o = hwv(&["lift", "--tableau", &t, "--n", "3", "--d", "3"]);
    let lifted: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(lifted["shape"], serde_json::json!([7, 2]));
    let o = hwv(&["enumerate", "--lambda", "2,2", "--d", "2", "--n", "2"]);
    let classes: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(classes.as_array().unwrap().len(), 1);
}

#[test]
fn usage_errors_exit_2() {
    let o = hwv(&["coeff", "--lambda", "2,2", "--d", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hwv(&["coeff", "--lambda", "2,3", "--d", "1", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hwv(&["--cost-cap", "0", "selftest"]);
    assert_eq!(o.status.code(), Some(2));
}
