use std::process::{Command, Output};

use serde_json::Value;

fn gengraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gengraph"))
        .args(args)
        .env_remove("GENGRAPH_CAPS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = gengraph(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json document")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn analyze_examples() {
    let s4 = json(&["analyze", "--group", "Sym(4)"]);
    assert_eq!(s4["vertices"], 20);
    assert_eq!(s4["isolated"], 4);
    assert_eq!(s4["t"], 3);
    let sl = json(&["analyze", "--group", "SL2(4)"]);
    assert_eq!(sl["diameter"], 2);
    assert_eq!(sl["connected"], true);
    let one = json(&["analyze", "--group", "Cyc(1)"]);
    assert_eq!(one["order"], 1);
    assert_eq!(one["vertices"], 0);
    assert_eq!(one["diameter"], Value::Null);
}

#[test]
fn text_is_a_rendering_of_the_json() {
    let out = gengraph(&["analyze", "--group", "Sym(3)", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = json(&["analyze", "--group", "Sym(3)"]);
    let keys: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
    let expected: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, expected);
    assert!(text.contains("vertices: 5\n"));
    let csv = gengraph(&["analyze", "--group", "Sym(3)", "--format", "csv"]);
    let csv = String::from_utf8(csv.stdout).unwrap();
    assert!(csv.starts_with("group,order,vertices"));
}

#[test]
fn verify_suites_exit_codes() {
    let out = gengraph(&["verify", "--suite", "swap", "--group", "Sym(4)"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["suite"], "swap");
    assert_eq!(doc["passed"], true);
    let out = gengraph(&["verify", "--suite", "diam3", "--corpus", "builtin-soluble"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["counts"]["fail"], 0);
    assert!(doc["cases"].as_array().unwrap().iter().all(|c| c["case"] != "Alt(5)"));
    let out = gengraph(&["verify", "--suite", "diam9", "--group", "Sym(4)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: usage:"));
    let out = gengraph(&["verify", "--suite", "tanti"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_prodo_on_the_builtin_corpus() {
    let doc = json(&["verify", "--suite", "prodo", "--corpus", "builtin", "--format", "json"]);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["counts"]["pass"], 48);
}

#[test]
fn corpus_files() {
    let dir = std::env::temp_dir().join(format!("gengraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "# small groups\nSym(3)\nDih(4)  # dihedral of order 8\n\nCyc(6)\n").unwrap();
    let doc = json(&["verify", "--suite", "tanti", "--corpus", path.to_str().unwrap()]);
    let cases: Vec<&str> = doc["cases"].as_array().unwrap().iter().map(|c| c["case"].as_str().unwrap()).collect();
    assert_eq!(cases, ["Sym(3)", "Dih(4)", "Cyc(6)"]);
    let out_path = dir.join("report.csv");
    let out = gengraph(&[
        "verify",
        "--suite",
        "gaschutz",
        "--corpus",
        path.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&out_path).unwrap();
    assert!(csv.starts_with("suite,case,status,detail,counterexamples\n"));
    assert_eq!(csv.lines().count(), 4);
    let missing = gengraph(&["verify", "--suite", "tanti", "--corpus", "/nonexistent/corpus"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn tower_commands() {
    let doc = json(&["tower", "--family", "klein-cp3", "--primes", "3,5"]);
    let levels = doc["report"]["levels"].as_array().unwrap();
    assert_eq!(levels[0]["predicted_density"], "1/2");
    assert_eq!(levels[1]["predicted_density"], "2/5");
    assert_eq!(levels[1]["v_characterization"], 5400);
    let growth = doc["degree_growth"]["rows"].as_array().unwrap();
    assert_eq!(growth[0]["t"], 5);
    assert_eq!(growth[1]["bound"], 64);

    let doc = json(&["tower", "--family", "sl2-products", "--levels", "1"]);
    assert_eq!(doc["report"]["levels"][0]["deltas"], serde_json::json!([19]));

    let out = gengraph(&["tower", "--family", "klein-cp3", "--primes", "3", "--check", "v-consistency"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["v_consistency"][0]["characterization_agrees"], true);
    assert_eq!(doc["v_consistency"][0]["violations"], serde_json::json!([]));

    let csv = gengraph(&["tower", "--family", "klein-cp3", "--primes", "3", "--format", "csv"]);
    assert!(String::from_utf8(csv.stdout).unwrap().starts_with("level,label,order"));

    let doc = json(&["tower", "--family", "custom", "--group", "Sym(3)", "--group", "Dir(Sym(3),Cyc(2))"]);
    assert_eq!(doc["report"]["levels"][1]["order"], "12");

    let out = gengraph(&["tower", "--family", "klein-cp3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gengraph(&["tower", "--family", "klein-cp3", "--primes", "3,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gengraph(&["tower", "--family", "p-adic", "--levels", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_exports() {
    let doc = json(&["graph", "--group", "Sym(4)"]);
    assert_eq!(doc["group"], "Sym(4)");
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 20);
    assert_eq!(doc["isolated"].as_array().unwrap().len(), 4);
    let edges = doc["edges"].as_array().unwrap();
    assert!(edges.iter().all(|e| e[0].as_u64() < e[1].as_u64()));
    let sl = json(&["export", "--group", "SL2(4)"]);
    assert_eq!(sl["edges"].as_array().unwrap().len(), 1140);
    let dot = gengraph(&["graph", "--group", "Sym(4)", "--format", "dot"]);
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 20);
    assert!(dot.contains(" -- "));
    let out = gengraph(&["graph", "--group", "Sym(4)", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inspect_document() {
    let doc = json(&["inspect", "--group", "Sym(4)"]);
    assert_eq!(doc["spec"], "Sym(4)");
    assert_eq!(doc["order"], 24);
    assert_eq!(doc["element_labels"].as_array().unwrap().len(), 24);
    assert_eq!(doc["element_labels"][0], "()");
    assert_eq!(doc["maximal_subgroup_orders"].as_array().unwrap().len(), 8);
    assert_eq!(doc["frattini_order"], 1);
}

#[test]
fn caps_and_usage_errors() {
    let out = gengraph(&["analyze", "--group", "Sym(8)"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr(&out).lines().count(), 1);
    assert!(stderr(&out).starts_with("error: cap:"));
    let out = gengraph(&["analyze", "--group", "Sym(4)", "--cap-order", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_gengraph"))
        .args(["analyze", "--group", "Sym(4)"])
        .env("GENGRAPH_CAPS", "order=12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_gengraph"))
        .args(["analyze", "--group", "Sym(4)"])
        .env("GENGRAPH_CAPS", "colour=12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = gengraph(&["inspect", "--group", "Sym(7)", "--cap-subgroups", "100"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["maximal_subgroup_orders"], Value::Null);
    assert_eq!(gengraph(&["analyze", "--group", "Sym(4", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(gengraph(&["analyze", "--group", "Sym(4)", "--colour"]).status.code(), Some(2));
    assert_eq!(gengraph(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_independent_of_workers() {
    for suite in ["tanti", "gaschutz", "coco"] {
        let run = |w: &str| gengraph(&["verify", "--suite", suite, "--corpus", "builtin-soluble", "--workers", w, "--seed", "7"]).stdout;
        let (a, b) = (run("1"), run("8"));
        assert!(!a.is_empty());
        assert_eq!(a, b, "suite {suite}");
    }
}
