use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radford")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (out.status.code().unwrap(), v)
}

#[test]
fn simples_table() {
    let (code, v) = json(&["simples"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 16);
    let dims: Vec<u64> = v["simples"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert!(dims.iter().all(|d| *d == 1 || *d == 2));
    let (_, v) = json(&["--m", "3", "simples"]);
    assert_eq!(v["count"], 36);
    let (_, v) = json(&["--n", "3", "--m", "2", "simples"]);
    let mut seen: Vec<u64> = v["simples"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen, vec![1, 2, 3]);
}

#[test]
fn module_graph_and_projectives() {
    let dir = std::env::temp_dir().join(format!("radford-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("v31.dot");
    let out = run(&["module", "3", "1", "--dot", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count(), 2);
    assert!(dot.contains("action=\"x\"") && dot.contains("action=\"X\""));

    let (code, v) = json(&["module", "1", "2", "--projective", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["module"]["dim"], 4);
    assert_eq!(v["series"]["factors"].as_array().unwrap().len(), 4);
    assert_eq!(v["socle"], serde_json::json!([1, 2]));

    assert_eq!(run(&["module", "3", "1", "--projective"]).status.code(), Some(3));
}

#[test]
fn transport_output() {
    let (code, v) = json(&["transport", "1", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["braiding"], serde_json::json!([["-1"]]));
    assert_eq!(v["braid_equation"], true);

    let (code, v) = json(&["--m", "3", "transport", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["table_row"]["row"], "(4,1|2)");
    assert_eq!(v["braid_equation"], true);
}

#[test]
fn graded_dims() {
    let (code, v) = json(&["dims", "2", "1", "--max-degree", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 2, 2, 1, 0, 0, 0, 0]));
    assert_eq!(v["total"], 8);
    // the tower needs more than two coordinates at degree two
    assert_eq!(run(&["dims", "2", "1", "--budget", "2"]).status.code(), Some(4));
}

#[test]
fn classification_and_reproduction() {
    let (code, v) = json(&["classify"]);
    assert_eq!(code, 0);
    assert_eq!(v["finite_count"], 6);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 16);
    let out = run(&["reproduce", "thm22"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.ends_with(" verified")).count(), 6);
    assert!(text.contains("6 of 16 pairs finite"));
    let (code, v) = json(&["reproduce", "thm23"]);
    assert_eq!(code, 0);
    assert_eq!(v["finite_count"], 15);
}

#[test]
fn json_is_deterministic() {
    let a = run(&["--json", "--m", "3", "classify", "--quick"]).stdout;
    let b = run(&["--json", "--m", "3", "classify", "--quick"]).stdout;
    assert_eq!(a, b);
    let a = run(&["--json", "--seed", "7", "double", "--check", "--samples", "20"]).stdout;
    let b = run(&["--json", "--seed", "7", "double", "--check", "--samples", "20"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn double_checklist() {
    let (code, v) = json(&["--m", "3", "double", "--check", "--samples", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 144);
    assert_eq!(v["passed"], true);
}

#[test]
fn preconditions() {
    assert_eq!(run(&["--n", "1", "simples"]).status.code(), Some(3));
    assert_eq!(run(&["--n", "3", "classify"]).status.code(), Some(3));
    assert_eq!(run(&["transport", "9", "0"]).status.code(), Some(3));
    assert_eq!(run(&["classify", "1"]).status.code(), Some(3));
    assert_eq!(run(&["nonsense"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
