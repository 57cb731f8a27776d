use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use iasi::graph::is_isomorphic;
use iasi::transfer::transfer_contract;
use iasi::{classify, ClassReport, EdgeId, Graph, Labeling};

const P2: &str = r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#;
const P2_ISO: &str = r#"{"a":[0,1,2],"b":[0,1,2,3]}"#;
const K3: &str = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"],["b","c"]]}"#;
const C4: &str = "# square\na b\nb c\nc d\nd a\n";
const C4_IDENTICAL: &str = r#"{"a":[0,1,2],"b":[0,2,4],"c":[0,1,2,3],"d":[0,2,4,6]}"#;

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn iasi(args: &[&str]) -> Output {
    iasi_env(args, None)
}

fn iasi_env(args: &[&str], bounds: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_iasi"));
    cmd.args(args).env_remove("IASI_BOUNDS");
    if let Some(b) = bounds {
        cmd.env("IASI_BOUNDS", b);
    }
    cmd.output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_code(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn classify_reports_the_verdict() {
    let dir = Dir::new();
    let g = dir.file("p2.json", P2);
    let l = dir.file("iso.json", P2_ISO);
    let v = stdout_json(&iasi(&["classify", "-g", s(&g), "-l", s(&l)]));
    assert_eq!(v["verdict"], "isoarithmetic");
    assert_eq!(v["per_edge"][0]["edge"], "a~b");
}

#[test]
fn transform_line_of_a_star_is_a_triangle_and_round_trips() {
    let dir = Dir::new();
    let g = dir.file("k13.txt", "c x\nc y\nc z\n");
    let out = iasi(&["transform", "--op", "line", "-g", s(&g)]);
    let text = String::from_utf8(out.stdout).unwrap();
    let line: Graph = serde_json::from_str(&text).unwrap();
    assert!(is_isomorphic(&line, &Graph::complete(3)));
    assert_eq!(line.vertices().collect::<Vec<_>>(), ["c~x", "c~y", "c~z"]);
    assert_eq!(iasi::cli::to_json(&line), text);

    let again = dir.file("line.json", &text);
    let out = iasi(&["transform", "--op", "total", "-g", s(&again)]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), iasi::cli::to_json(&line.total_graph().unwrap()));
}

#[test]
fn transform_contract_and_reduce() {
    let dir = Dir::new();
    let g = dir.file("c4.txt", C4);
    let c = stdout_json(&iasi(&["transform", "--op", "contract", "--edge", "a~b", "--name", "m", "-g", s(&g)]));
    assert_eq!(c["vertices"], serde_json::json!(["c", "d", "m"]));
    let r = stdout_json(&iasi(&["transform", "--op", "reduce", "--vertex", "a", "-g", s(&g)]));
    assert_eq!(r["edges"], serde_json::json!([["b", "c"], ["b", "d"], ["c", "d"]]));
    let bad = iasi(&["transform", "--op", "reduce", "--vertex", "a", "-g", s(&dir.file("k3.json", K3))]);
    assert_eq!(error_code(&bad), "reduction-not-applicable");
}

#[test]
fn search_reports_exhaustion() {
    let dir = Dir::new();
    let g = dir.file("k3.json", K3);
    let v = stdout_json(&iasi(&[
        "search", "-g", s(&g), "--class", "identical-biarithmetic", "--a-max", "6", "--d-max", "8", "--n-max", "4",
    ]));
    assert_eq!(v["found"], false);
    assert_eq!(v["exhausted"], true);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn bounds_come_from_the_environment_unless_overridden() {
    let dir = Dir::new();
    let g = dir.file("p2.json", P2);
    let args = ["search", "-g", s(&g), "--class", "isoarithmetic"];
    let v = stdout_json(&iasi_env(&args, Some("a=1,d=1,nmin=3,nmax=3")));
    // Two vertices, (a, d, n) in {0,1} x {1} x {3}.
    assert_eq!(v["space_size"], 4);
    let mut more = args.to_vec();
    more.extend(["--a-max", "2"]);
    let v = stdout_json(&iasi_env(&more, Some("a=1,d=1,nmin=3,nmax=3")));
    assert_eq!(v["space_size"], 9);
    let out = iasi_env(&args, Some("nmin=2"));
    assert_eq!(error_code(&out), "invalid-bounds");
}

#[test]
fn transfer_files_reclassify_identically() {
    let dir = Dir::new();
    let g = dir.file("c4.txt", C4);
    let l = dir.file("c4.json", C4_IDENTICAL);
    let (go, lo) = (dir.path("out-graph.json"), dir.path("out-labels.json"));
    let v = stdout_json(&iasi(&[
        "transfer", "--op", "contract", "--edge", "b~c", "-g", s(&g), "-l", s(&l),
        "--graph-out", s(&go), "--labels-out", s(&lo),
    ]));
    let reclassified = stdout_json(&iasi(&["classify", "-g", s(&go), "-l", s(&lo)]));
    assert_eq!(v["report"], reclassified);

    let graph = Graph::parse_edge_list(C4).unwrap();
    let f: Labeling = serde_json::from_str(C4_IDENTICAL).unwrap();
    let t = transfer_contract(&graph, &f, &EdgeId::new("b", "c").unwrap()).unwrap();
    let report: ClassReport = serde_json::from_value(reclassified).unwrap();
    assert_eq!(report, t.report);
    assert_eq!(report, classify(&t.graph, &t.labeling).unwrap());
    assert!(!report.verdict.is_biarithmetic());
}

#[test]
fn construct_emits_a_classified_labeling() {
    let dir = Dir::new();
    let g = dir.file("p3.txt", "a b\nb c\n");
    let v = stdout_json(&iasi(&["construct", "--kind", "bi-path", "-k", "2", "--sizes", "4,3,3", "-g", s(&g)]));
    assert_eq!(v["report"]["verdict"], "identical-biarithmetic");
    assert_eq!(v["labeling"]["a"].as_array().unwrap().len(), 4);
    let out = iasi(&["construct", "--kind", "bi-bipartite", "-g", s(&dir.file("k3.json", K3))]);
    assert_eq!(error_code(&out), "not-applicable");
}

#[test]
fn verify_theorem_runs_on_fixtures() {
    let v = stdout_json(&iasi(&["verify-theorem", "line-bi-iff-path", "--instances", "P2;P3;P4;K1,3;C4"]));
    assert_eq!(v["passed"], true);
    let statuses: Vec<&str> = v["instances"].as_array().unwrap().iter().map(|i| i["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["skipped", "pass", "pass", "pass", "pass"]);
    assert_eq!(error_code(&iasi(&["verify-theorem", "no-such-claim"])), "unknown-theorem");
}

#[test]
fn output_flag_writes_a_file() {
    let dir = Dir::new();
    let g = dir.file("p2.json", P2);
    let target = dir.path("out.json");
    let out = iasi(&["transform", "--op", "total", "-g", s(&g), "-o", s(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let t: Graph = serde_json::from_str(&fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
}

#[test]
fn domain_errors_have_distinct_codes() {
    let dir = Dir::new();
    let g = dir.file("p2.json", P2);
    let cases = [
        (dir.file("extra.json", r#"{"a":[0,1,2],"b":[1,2,3],"z":[5]}"#), "unknown-labeled-vertex"),
        (dir.file("partial.json", r#"{"a":[0,1,2]}"#), "partial-labeling"),
        (dir.file("broken.json", r#"{"a":[0,1,"#), "parse-error"),
        (dir.file("negative.json", r#"{"a":[-1],"b":[2]}"#), "parse-error"),
        (dir.path("missing.json"), "io-error"),
    ];
    for (labels, code) in &cases {
        assert_eq!(error_code(&iasi(&["classify", "-g", s(&g), "-l", s(labels)])), *code, "{labels:?}");
    }
    let loops = dir.file("loop.txt", "a a\n");
    assert_eq!(error_code(&iasi(&["transform", "--op", "line", "-g", s(&loops)])), "invalid-graph");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(iasi(&[]).status.code(), Some(2));
    assert_eq!(iasi(&["classify", "-g", "x.json"]).status.code(), Some(2));
    assert_eq!(iasi(&["transfer", "--op", "contract", "-g", "a", "-l", "b"]).status.code(), Some(2));
    assert_eq!(iasi(&["search", "-g", "x", "--a-max", "many"]).status.code(), Some(2));
    assert_eq!(iasi(&["--help"]).status.code(), Some(0));
}
