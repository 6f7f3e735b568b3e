use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cwkit_core::io::parse_graph6;
use cwkit_harness::SweepResult;
use serde_json::Value;

fn cwkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn without_timestamp(path: &Path) -> Value {
    let mut v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("generated_at_unix").expect("timestamp field present");
    v
}

#[test]
fn compute_k5_and_single_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = dir.path().join("k5.txt");
    let mut text = String::from("5\n");
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    fs::write(&k5, text).unwrap();
    let o = cwkit(&["compute", p(&k5)]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("degeneracy: 4"), "{out}");
    assert!(out.contains("cutwidth: 6 (exact-dp)"), "{out}");

    let one = dir.path().join("one.txt");
    fs::write(&one, "1\n").unwrap();
    let o = cwkit(&["compute", p(&one), "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["m"], 0);
    assert_eq!(v["degeneracy"], 0);
    assert_eq!(v["cutwidth"]["value"], 0);
    assert_eq!(v["circular"]["value"], 0);
}

#[test]
fn exact_on_large_graph_is_a_capacity_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g30.g6");
    assert!(cwkit(&["generate", "gnp", "--n", "30", "--p", "0.2", "--seed", "1", "--out", p(&g)]).status.success());
    let o = cwkit(&["compute", p(&g), "--exact"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--heuristic"));
    let o = cwkit(&["compute", p(&g), "--heuristic", "--iterations", "200"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(heuristic) (upper bound)"));
}

#[test]
fn parse_errors_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "D~\n").unwrap();
    assert_eq!(cwkit(&["compute", p(&bad)]).status.code(), Some(2));
    assert_eq!(cwkit(&["compute", p(&dir.path().join("missing"))]).status.code(), Some(2));
}

#[test]
fn generate_examples() {
    let dir = tempfile::tempdir().unwrap();
    let tur = dir.path().join("tur.g6");
    assert!(cwkit(&["generate", "turan", "--n", "12", "--k", "3", "--out", p(&tur)]).status.success());
    assert_eq!(parse_graph6(fs::read_to_string(&tur).unwrap().trim()).unwrap().m(), 48);

    let (a, b) = (dir.path().join("a.g6"), dir.path().join("b.g6"));
    for out in [&a, &b] {
        assert!(cwkit(&["generate", "tree", "--n", "8", "--seed", "7", "--out", p(out)]).status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let empty = dir.path().join("empty.g6");
    assert!(cwkit(&["generate", "gnp", "--n", "9", "--p", "0", "--seed", "4", "--out", p(&empty)]).status.success());
    assert_eq!(parse_graph6(fs::read_to_string(&empty).unwrap().trim()).unwrap().m(), 0);

    assert_eq!(cwkit(&["generate", "tree", "--n", "8", "--out", p(&a)]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_and_reparseable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let args = [
        "verify", "--family", "gnp", "--n", "5..8", "--p", "0.2,0.5,0.8", "--seeds", "1..6", "--checks",
        "cutwidth,circular,sparsity,bounds,coloring,tree-theorem", "--certificate-scope", "core", "--output",
        p(&out),
    ];
    let first = cwkit(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let a = without_timestamp(&out);
    let second = cwkit(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(a, without_timestamp(&out));
    assert_eq!(a["schema"], 1);
    assert_eq!(a["summary"]["graphs_processed"], 72);

    let csv_path = dir.path().join("r.csv");
    assert!(cwkit(&["report", p(&out), "--csv", p(&csv_path)]).status.success());
    let text = fs::read_to_string(&csv_path).unwrap();
    assert_eq!(text.lines().count(), 73);
    let result = SweepResult::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(result.graphs.len(), 72);
}

#[test]
fn verify_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let out = dir.path().join("tur.json");
    fs::write(
        &cfg,
        format!(
            r#"{{"family": "turan", "n": "4..14", "k": "2..4", "checks": ["bounds"], "output": {:?}}}"#,
            p(&out)
        ),
    )
    .unwrap();
    let o = cwkit(&["verify", "--config", p(&cfg)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let result = SweepResult::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(result.graphs.len(), 33);
    for rec in &result.graphs {
        let kinds: Vec<_> = rec.report.entries.iter().map(|e| e.kind.label()).collect();
        assert!(kinds.contains(&"turan-lower") && kinds.contains(&"turan-upper"), "{}", rec.report.id);
    }

    fs::write(&cfg, r#"{"family": "gnp", "n": 5, "p": [0.5]}"#).unwrap();
    assert_eq!(cwkit(&["verify", "--config", p(&cfg)]).status.code(), Some(2));
}

#[test]
fn tree_theorem_sweep() {
    let o = cwkit(&["verify", "--family", "tree", "--n", "2..8", "--seeds", "1..50", "--checks", "tree-theorem"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graphs processed: 350"));
}

#[test]
fn violations_exit_one_with_reproducers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ex.json");
    let o = cwkit(&["verify", "--family", "exhaustive", "--n", "4", "--keep", "violations", "--output", p(&out)]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("reproducers:"), "{text}");
    let result = SweepResult::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!result.summary.violations.is_empty());
    for v in &result.summary.violations {
        let path = v.reproducer.as_ref().unwrap();
        let saved: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
        let g = parse_graph6(saved["graph6"].as_str().unwrap()).unwrap();
        let order: Vec<usize> = serde_json::from_value(saved["witness"]["ordering"].clone()).unwrap();
        // the witness ordering reproduces the cutwidth that sits below the bound
        let width = cwkit_core::cutwidth::cut_profile(&g, &order).unwrap().width();
        assert_eq!(width, 1, "{}", v.detail);
    }
    assert!(result.graphs.iter().all(|g| g.failed()));
}

#[test]
fn empty_report_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = cwkit(&["verify", "--family", "complete", "--n", "3", "--output", p(&out)]);
    assert!(o.status.success());
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    v["graphs"] = Value::Array(vec![]);
    fs::write(&out, serde_json::to_string(&v).unwrap()).unwrap();
    let o = cwkit(&["report", p(&out)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);

    fs::write(&out, "{}").unwrap();
    assert_eq!(cwkit(&["report", p(&out)]).status.code(), Some(2));
}
