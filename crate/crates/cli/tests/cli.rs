use std::process::{Command, Output};

fn qpb(args: &[&str]) -> Output {
    let cache = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_qpb")).args(args).env("QPB_CACHE_DIR", cache.path()).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn classical_table_csv() {
    let o = qpb(&["table", "--family", "classical_negk", "--max-n", "5", "--max-k", "5", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n\\k,0,1,2,3,4,5");
    assert_eq!(lines[3], "2,1,4,14,46,146,454");
    assert_eq!(lines[6], "5,1,32,454,4718,41506,329462");
}

#[test]
fn single_cell_table() {
    let o = qpb(&["table", "--family", "classical_negk", "--max-n", "0", "--max-k", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n\\k,0\n0,1\n");
}

#[test]
fn vesztergombi_table_json() {
    let o = qpb(&["table", "--family", "vesztergombi_q", "--max-n", "3", "--max-k", "3", "--format", "json"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["family"], "vesztergombi_q");
    let cells = doc["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 16);
    let c22 = cells.iter().find(|c| c["n"] == 2 && c["k"] == 2).unwrap();
    assert_eq!(c22["value"]["carrier"], "poly");
    assert_eq!(c22["value"]["value"]["coeffs"], serde_json::json!(["1", "3", "5", "4", "1"]));
}

#[test]
fn latex_table() {
    let o = qpb(&["table", "--family", "ordered_q", "--max-n", "3", "--max-k", "1", "--format", "latex"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("\\begin{tabular}"));
    assert!(text.contains("3 & $1$ & $4 + 3q + q^{2}$ \\\\"), "{text}");
}

#[test]
fn eval_text_and_sample() {
    let o = qpb(&["eval", "--family", "vesztergombi_q", "--n", "2", "--k", "2"]);
    assert_eq!(stdout(&o), "1 + 3q + 5q^2 + 4q^3 + q^4\n");
    let o = qpb(&["eval", "--family", "vesztergombi_q", "--n", "2", "--k", "2", "--q", "1"]);
    assert_eq!(stdout(&o), "14\n");
    let o = qpb(&["eval", "--family", "classical_anyk", "--n", "2", "--k", "1"]);
    assert_eq!(stdout(&o), "1/6\n");
}

#[test]
fn conjecture_reports() {
    let o = qpb(&["conjecture", "--max-n", "8"]);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 7);
    let n3 = lines.iter().find(|r| r["parameters"]["n"] == 3).unwrap();
    assert_eq!(n3["status"], "pass");
    assert!(lines.iter().all(|r| r["status"] == "pass" || r["status"] == "fail"));
}

#[test]
fn verify_suite_is_deterministic_and_reported_does_not_fail() {
    let args = ["verify", "--suite", "cenkci-comb", "--max-n", "4", "--max-k", "4"];
    let a = qpb(&args);
    assert!(a.status.success());
    let lines = json_lines(&a);
    assert_eq!(lines.len(), 25);
    assert!(lines.iter().all(|r| r["status"] == "reported"));
    assert_eq!(a.stdout, qpb(&args).stdout);
}

#[test]
fn verify_all_small() {
    let o = qpb(&["verify", "--suite", "all", "--max-n", "3", "--max-k", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(json_lines(&o).iter().all(|r| r["status"] != "fail"));
}

#[test]
fn oeis_offline() {
    let o = qpb(&["oeis", "--id", "A099594", "--offline"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["parameters"]["n"], 21);
}

#[test]
fn oeis_row_reader_fails_with_nonzero_exit() {
    let o = qpb(&["oeis", "--id", "A099594", "--offline", "--reader", "row"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_lines(&o)[0]["status"], "fail");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| qpb(args).status.code();
    assert_eq!(code(&["table", "--family", "nope"]), Some(2));
    assert_eq!(code(&["table", "--family", "classical_negk", "--format", "xml"]), Some(2));
    assert_eq!(code(&["oeis", "--id", "X1", "--offline"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "bogus"]), Some(2));
    assert_eq!(code(&["eval", "--family", "lonesum_q", "--n", "2", "--k", "-1"]), Some(2));
    assert_eq!(code(&["conjecture", "--max-n", "1"]), Some(2));
    assert_eq!(code(&["table", "--family", "classical_negk", "--max-n", "31"]), Some(3));
    assert_eq!(code(&["table", "--family", "permmatrix_q", "--max-n", "7", "--max-k", "7"]), Some(3));
    assert_eq!(code(&["conjecture", "--max-n", "11"]), Some(3));
    assert_eq!(code(&["verify", "--max-n", "9"]), Some(3));
}

#[test]
fn help_documents_conventions() {
    for sub in ["table", "eval", "verify", "conjecture", "oeis"] {
        let text = stdout(&qpb(&[sub, "--help"]));
        assert!(text.contains("1-based"), "{sub}");
        assert!(text.contains("k-sign"), "{sub}");
    }
}
