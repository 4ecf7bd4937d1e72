use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn lexshell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexshell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 4], [1, 3, 5], [1, 6, 7], [2, 3, 6], [2, 5, 7], [3, 4, 7], [4, 5, 6]];

fn fano_json(dir: &Path) -> String {
    let mut bases = Vec::new();
    for a in 1..=7 {
        for b in a + 1..=7 {
            for c in b + 1..=7 {
                if !FANO_LINES.contains(&[a, b, c]) {
                    bases.push(vec![a, b, c]);
                }
            }
        }
    }
    let path = dir.join("fano.json");
    fs::write(&path, serde_json::json!({"n": 7, "bases": bases}).to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_on_fano_passes_with_the_worked_table() {
    let dir = TempDir::new().unwrap();
    let out = lexshell(&["check", &fano_json(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("I "));
    assert!(text.contains("{4,5}"));
    assert!(text.contains("x4*x5, x4^2*x5, x4*x5^2"));
    assert!(text.contains("all checks passed"));
}

#[test]
fn validate_reports_the_exchange_triple() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"n": 4, "bases": [[1, 2], [3, 4]]}"#);
    let out = lexshell(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("B = {1,2}, B' = {3,4}, x = 1"));

    let good = write(dir.path(), "good.txt", "4 2 111000\n");
    assert_eq!(lexshell(&["validate", &good]).status.code(), Some(0));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    assert_eq!(lexshell(&["frobnicate"]).status.code(), Some(1));
    let garbage = write(dir.path(), "g.json", "{ not json");
    let out = lexshell(&["hvector", &garbage]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    assert_eq!(lexshell(&["hvector", "/definitely/missing"]).status.code(), Some(1));
    let fano = fano_json(dir.path());
    // {1,2,4} is a line, not a basis.
    assert_eq!(lexshell(&["construct", &fano, "--base", "1,2,4"]).status.code(), Some(1));
}

#[test]
fn hvector_and_shell() {
    let dir = TempDir::new().unwrap();
    let fano = fano_json(dir.path());
    let text = stdout(&lexshell(&["hvector", &fano]));
    assert!(text.contains("f = (1,7,21,28)"));
    assert!(text.contains("h = (1,4,10,13)"));

    let rec = write(dir.path(), "u23.txt", "3 2 111\n");
    let text = stdout(&lexshell(&["shell", &rec, "--base", "1,3", "--order", "2"]));
    assert!(text.contains("vertex order: [1, 3, 2]"));
    assert!(text.contains("h = (1,1,1)"));
}

#[test]
fn construct_json_on_fano() {
    let dir = TempDir::new().unwrap();
    let out = lexshell(&["construct", &fano_json(dir.path()), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["monomials"].as_array().unwrap().len(), 28);
    assert_eq!(v["f_vector"], serde_json::json!([1, 4, 10, 13]));
    assert_eq!(v["f_vector"], v["h_vector"]);
    assert_eq!(v["base"], serde_json::json!([1, 2, 3]));
}

#[test]
fn gammas_lists_every_independent_set() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&lexshell(&["gammas", &fano_json(dir.path())]));
    // 1 + 4 + 6 + 4 independent sets off {1,2,3}, all of {4,5,6,7} minus the dependent {4,5,6}
    assert_eq!(text.lines().count(), 1 + 1 + 4 + 6 + 3);
}

#[test]
fn enumerate_writes_corpus_files() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("corpus");
    let out = lexshell(&["enumerate", "--rank", "3", "--max-n", "6", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n = 6: 38"));
    assert!(text.contains("classes: 56"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(out_dir.join("matroids.json")).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 56);
    let db = out_dir.join("revlex.txt");
    assert_eq!(fs::read_to_string(&db).unwrap().lines().count(), 56);
    let sigs = fs::read_to_string(out_dir.join("signatures.tsv")).unwrap();
    let line = sigs.lines().next().unwrap();
    let (hash, descriptor) = line.split_once('\t').unwrap();
    assert_eq!(hash.len(), 64);
    assert!(serde_json::from_str::<serde_json::Value>(descriptor).unwrap()["signature"].is_object());

    let parsed = lexshell(&["parse-db", db.to_str().unwrap()]);
    assert_eq!(parsed.status.code(), Some(0));
    assert!(stdout(&parsed).contains("records: 56"));
}

#[test]
fn parse_db_flags_invalid_records() {
    let dir = TempDir::new().unwrap();
    let db = write(dir.path(), "db.txt", "# two records\n4 2 111000\n4 2 100001\n");
    let out = lexshell(&["parse-db", &db]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("invalid: 1"));
    let broken = write(dir.path(), "broken.txt", "4 two 111000\n");
    assert_eq!(lexshell(&["parse-db", &broken]).status.code(), Some(1));
}

#[test]
fn verify_all_rank3_is_clean_and_rank5_is_refused() {
    let out = lexshell(&["verify-all", "--rank", "3", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("classes: 56"));
    assert!(text.contains("signatures: 237"));
    assert!(text.contains("failures: 0"));

    let out = lexshell(&["verify-all", "--rank", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank 5"));
}
