use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflexive"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_reflexive"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&run(&["check", "delzant", "catalog:square"])), 0);
    let oct = run(&["check", "delzant", "catalog:octahedron"]);
    assert_eq!(code(&oct), 1);
    assert_eq!(json(&oct)["pass"], false);
    let bad = run_stdin(&["check", "delzant"], "{\"dim\": 2, \"vertices\": [[0,0],[1");
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("parse error"));
    assert_eq!(code(&run(&["check", "reflexive", "catalog:unit-square"])), 1);
    assert_eq!(code(&run(&["check", "reflexive", "catalog:diamond"])), 0);
    assert_eq!(code(&run(&["check", "gkm", "catalog:b2-full-flag"])), 0);
    assert_eq!(code(&run(&["check", "delzant", "catalog:no-such-entry"])), 2);
    assert_eq!(code(&run(&["check", "bogus", "catalog:square"])), 2);
}

#[test]
fn verify_examples() {
    let cube = json(&run(&["verify", "main", "catalog:cube"]));
    assert_eq!(cube["pass"], true);
    assert_eq!(cube["lhs"], 24);
    assert!(cube["rhs"].as_array().unwrap().iter().all(|r| r == 24));

    let gr = json(&run(&["verify", "graph-corollary", "catalog:gr24-graph"]));
    assert_eq!((gr["lhs"].clone(), gr["rhs"][0].clone()), (48.into(), 48.into()));

    let sq = json(&run(&["verify", "12-24", "catalog:square"]));
    assert_eq!(sq["lhs"], 12);
    assert!(sq["per_item"][0]["detail"].as_str().unwrap().contains('8'));
    assert!(sq["per_item"][1]["detail"].as_str().unwrap().contains('4'));

    assert_eq!(code(&run(&["verify", "main", "catalog:octahedron"])), 1);
    assert_eq!(code(&run(&["verify", "main", "catalog:rect-1x2"])), 1);
    assert_eq!(code(&run(&["verify", "combinatorics2", "catalog:rect-1x2"])), 0);
    assert_eq!(code(&run(&["verify", "gorenstein:2", "catalog:unit-square"])), 0);
    assert_eq!(code(&run(&["verify", "gorenstein:3", "catalog:unit-square"])), 1);
    assert_eq!(code(&run(&["verify", "nonsense", "catalog:square"])), 2);
}

#[test]
fn oracle_flag_adds_items() {
    let plain = json(&run(&["verify", "main", "catalog:cube"]));
    let checked = json(&run(&["--with-oracle", "verify", "main", "catalog:cube"]));
    let n = |v: &Value| v["per_item"].as_array().unwrap().len();
    assert!(n(&checked) > n(&plain));
    assert_eq!(checked["pass"], true);
    let f = json(&run(&["fvector", "catalog:tesseract", "--with-oracle"]));
    assert_eq!(f["f_vector"], serde_json::json!([16, 32, 24, 8, 1]));
    assert_eq!(f["oracle"]["pass"], true);
}

#[test]
fn gkm_build_examples() {
    let cases: [(&[&str], usize, i64); 3] = [
        (&["gkm", "build", "A", "2"], 6, 24),
        (&["gkm", "build", "A", "3", "-I", "0,2"], 6, 48),
        (&["gkm", "build", "B", "2"], 8, 56),
    ];
    for (args, vertices, sum) in cases {
        let out = run(args);
        assert_eq!(code(&out), 0, "{args:?}");
        let v = json(&out);
        assert_eq!(v["vertices"].as_array().unwrap().len(), vertices);
        assert_eq!(v["sum_lengths"], sum);
        assert_eq!(v["report"]["pass"], true);
        assert!(v["edges"][0]["weight"].is_array());
    }
    let req = run_stdin(&["gkm", "build", "--request", "-"], r#"{"type": "A", "rank": 3, "I": [0, 2]}"#);
    assert_eq!(json(&req)["h_vector"], serde_json::json!([1, 1, 2, 1, 1]));
    assert_eq!(code(&run(&["gkm", "build", "E", "6"])), 2);
    assert_eq!(code(&run(&["gkm", "build", "A", "9"])), 2);
}

#[test]
fn gkm_check_gorenstein_graphs() {
    for name in ["octahedron-skeleton", "b2-gorenstein-r3", "gr24-graph"] {
        let out = run(&["gkm", "check", &format!("catalog:{name}")]);
        assert_eq!(code(&out), 0, "{name}");
    }
    let g = json(&run(&["check", "gorenstein", "catalog:octahedron-skeleton"]));
    assert_eq!(g["lhs"], 4);
}

#[test]
fn bounds_commands() {
    let t = run(&["bounds", "table", "2", "5"]);
    assert_eq!(code(&t), 0);
    let cells = json(&t);
    assert_eq!(cells.as_array().unwrap().len(), 18);
    assert_eq!(run(&["bounds", "table", "2", "5"]).stdout, t.stdout);

    let e = json(&run(&["bounds", "enumerate", "4", "3"]));
    assert_eq!(e["vectors"], serde_json::json!([[1, 2], [2, 3], [3, 1], [4, 2], [6, 1]]));
    let u = json(&run(&["bounds", "enumerate", "4", "3", "--unimodal"]));
    assert_eq!(u["vectors"], serde_json::json!([[1, 2], [2, 3]]));

    let unbounded = run(&["bounds", "enumerate", "6", "1"]);
    assert_eq!(code(&unbounded), 2);
    assert!(String::from_utf8_lossy(&unbounded.stderr).contains("cap"));
    let capped = json(&run(&["bounds", "enumerate", "6", "1", "--cap", "2"]));
    assert_eq!(capped["complete"], false);
}

#[test]
fn catalog_and_round_trip() {
    let list = json(&run(&["catalog", "list"]));
    assert_eq!(list.as_array().unwrap().len(), 28);
    let dir = std::env::temp_dir().join(format!("reflexive-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["hexagon", "cp3-simplex", "b2-i0"] {
        let shown = run(&["catalog", "show", name]);
        assert_eq!(code(&shown), 0);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &shown.stdout).unwrap();
        let identity = if name == "b2-i0" { "graph-corollary" } else { "main" };
        let from_file = run(&["verify", identity, path.to_str().unwrap()]);
        let from_catalog = run(&["verify", identity, &format!("catalog:{name}")]);
        assert_eq!(from_file.stdout, from_catalog.stdout, "{name}");
        assert_eq!(code(&from_file), 0);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn text_output_and_misc() {
    let t = run(&["--text", "verify", "main", "catalog:tesseract"]);
    let s = String::from_utf8_lossy(&t.stdout);
    assert!(s.starts_with("PASS  main  lhs = 64"));
    let d = json(&run(&["dual", "catalog:cp2-triangle"]));
    assert_eq!(d["vertices"].as_array().unwrap().len(), 3);
    let h = json(&run(&["hvector", "catalog:cube", "--xi", "1,3,-7"]));
    assert_eq!(h["agree"], true);
    assert_eq!(code(&run(&["hvector", "catalog:cube", "--xi", "0,0,1"])), 2);
    let l = json(&run(&["lengths", "catalog:cp2-triangle"]));
    assert_eq!(l["sum_lengths"], 9);
    assert_eq!(code(&run(&["dual", "catalog:unit-square"])), 1);
}
