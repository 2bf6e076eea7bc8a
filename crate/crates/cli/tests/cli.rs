use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logkernel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_main_13_passes() {
    let o = run(&["verify", "--ids", "main-13", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["verdict"] == "pass" && r["identity_id"] == "main-13"));
    let fields = [
        "identity_id", "params", "lhs", "lhs_err", "rhs", "rhs_err", "abs_diff", "rel_diff", "tol", "verdict",
        "mode_notes", "elapsed_ms",
    ];
    let obj = rows[0].as_object().unwrap();
    assert_eq!(obj.len(), fields.len());
    for f in fields {
        assert!(obj.contains_key(f), "{f}");
    }
}

#[test]
fn verify_main_range_exits_zero() {
    let o = run(&["verify", "--ids", "main-01..main-19", "--a", "0.5,1,3.141592653589793", "--tol", "1e-9", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: std::collections::BTreeSet<&str> = rows.iter().map(|r| r["identity_id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), 19);
}

#[test]
fn failing_verdict_exits_two() {
    let o = run(&["verify", "--ids", "lemma-kummer-trig"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("fail"));
}

#[test]
fn unknown_names_exit_one() {
    for args in [
        vec!["verify", "--ids", "no-such-id"],
        vec!["eval", "--fn", "gamma", "--x", "1"],
        vec!["sum", "--series", "nope", "--mode", "direct"],
        vec!["sum", "--series", "si_kpi", "--mode", "nope"],
        vec!["verify", "--format", "xml"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["verify", "--ids", "no-such-id"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("main-13"));
}

#[test]
fn empty_match_is_success() {
    let o = run(&["verify", "--ids", "zzz*", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn eval_digamma_and_ci() {
    let o = run(&["eval", "--fn", "digamma", "--x", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gamma = 0.577_215_664_901_532_9;
    assert!((v["value"].as_f64().unwrap() + gamma).abs() < 1e-12);
    let o = run(&["eval", "--fn", "Ci", "--x", "3.141592653589793"]);
    assert!(stdout(&o).starts_with("Ci(3.141592653589793) = 0.0736679120464"));
}

#[test]
fn sum_cesaro() {
    let o = run(&["sum", "--series", "k_si_kpi", "--mode", "cesaro_c1", "--terms", "100000", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let x = v["value"].as_f64().unwrap() / std::f64::consts::PI;
    assert!((x - 1.0 / 24.0).abs() < 1e-4);
    let o = run(&["sum", "--series", "si_kpi", "--mode", "cesaro_c1", "--terms", "100000"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn csv_columns_fixed() {
    let o = run(&["verify", "--ids", "main-05", "--format", "csv"]);
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["identity_id", "params", "lhs", "lhs_err", "rhs", "rhs_err", "abs_diff", "rel_diff", "tol", "verdict", "mode_notes", "elapsed_ms"]
    );
    assert_eq!(rdr.records().count(), 7);
}

#[test]
fn output_is_reproducible_and_out_file_matches() {
    let a = run(&["verify", "--ids", "main-*,remark-n", "--format", "json"]);
    let b = run(&["verify", "--ids", "main-*,remark-n", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = std::env::temp_dir().join(format!("logkernel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let c = run(&["verify", "--ids", "main-*,remark-n", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hunt_both_reports_every_entry() {
    let o = run(&["hunt", "--convention", "both", "--format", "json"]);
    // the table contains wrong entries, so some verdicts fail
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 17);
    let e3 = &entries[2];
    assert_eq!(e3["entry"], 3);
    let checks = e3["points"][0]["checks"].as_array().unwrap();
    let convs: Vec<&str> = checks.iter().map(|c| c["convention"].as_str().unwrap()).collect();
    assert_eq!(convs, ["modern", "archaic"]);
}

#[test]
fn registry_json_lists_ids() {
    let o = run(&["registry", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.iter().any(|e| e["id"] == "main-13"));
    assert!(v.iter().all(|e| !e["citation"].as_str().unwrap().is_empty()));
}

#[test]
fn remark_constant_in_table() {
    let o = run(&["verify", "--ids", "remark-n"]);
    assert!(stdout(&o).contains("c = 2.0000000000"));
}
