use std::io::Write;
use std::process::{Command, Output};

const PETERSEN: &str = "IheA@GUAo";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tough-cycles"))
        .args(args)
        .env_remove("TOUGH_CYCLES_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout_json_lines(o: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn verify_petersen_is_the_exception() {
    let o = run(&["verify", PETERSEN, "--theorem", "T1"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = stdout_json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["status"], "exception_petersen");
    assert_eq!(lines[0]["bound_observed"], 9);
}

#[test]
fn verify_all_theorems_by_default() {
    let o = run(&["verify", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    let statuses: Vec<String> = stdout_json_lines(&o).iter().map(|v| v["status"].as_str().unwrap().to_string()).collect();
    assert_eq!(statuses, vec!["holds", "holds", "holds"]);
}

#[test]
fn invariants_of_petersen() {
    let o = run(&["invariants", PETERSEN]);
    assert_eq!(o.status.code(), Some(0));
    let r = &stdout_json_lines(&o)[0];
    assert_eq!((r["n"].as_u64(), r["delta"].as_u64(), r["kappa"].as_u64(), r["circumference"].as_u64()), (Some(10), Some(3), Some(3), Some(9)));
    assert_eq!((r["toughness"]["num"].as_u64(), r["toughness"]["den"].as_u64()), (Some(4), Some(3)));
}

#[test]
fn invariants_from_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "C~\n\n@").unwrap();
    let o = run(&["invariants", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json_lines(&o).len(), 2);

    let mut e = tempfile::NamedTempFile::new().unwrap();
    writeln!(e, "0 1\n1 2\n2 0").unwrap();
    let o = run(&["invariants", e.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json_lines(&o)[0]["circumference"], 3);
}

#[test]
fn malformed_input_exits_with_two() {
    let o = run(&["invariants", "not-a-graph"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["verify", PETERSEN, "--theorem", "Z"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--max-n", "10"]).status.code(), Some(2));
}

#[test]
fn sweep_small_range_has_no_violations() {
    let o = run(&["sweep", "--max-n", "7", "--theorems", "T1"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
    assert_eq!(report["exceptions"].as_array().unwrap().len(), 0);
    assert_eq!(report["processed"], 1 + 1 + 2 + 6 + 21 + 112 + 853);
}

#[test]
fn sweep_cubic_ten_writes_report_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let csv = dir.path().join("summary.csv");
    let o = run(&[
        "sweep", "--min-n", "10", "--max-n", "10", "--regular", "3", "--theorems", "T1", "--out",
        report.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout).to_string();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "theorem,n,seen,vacuous,holds,exceptions,violations");
    let cells: Vec<&str> = rows[1].split(',').collect();
    assert_eq!((cells[0], cells[1], cells[2], cells[5], cells[6]), ("T1", "10", "19", "1", "0"));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["exceptions"].as_array().unwrap().len(), 1);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), String::from_utf8_lossy(&o.stdout));
}

#[test]
fn sweep_stream_counts_rejects() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "C~\n!!\nD?\n{PETERSEN}\nzz").unwrap();
    let o = run(&["sweep", "--from-file", f.path().to_str().unwrap(), "--theorems", "T1"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["processed"], 2);
    assert_eq!(r["rejected"].as_array().unwrap().len(), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("rejected line 2"));
}

#[test]
fn workers_env_overrides_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_tough-cycles"))
        .args(["sweep", "--max-n", "5", "--workers", "1"])
        .env("TOUGH_CYCLES_WORKERS", "3")
        .output()
        .unwrap();
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["config"]["workers"], 3);
    let bad = Command::new(env!("CARGO_BIN_EXE_tough-cycles"))
        .args(["sweep", "--max-n", "5"])
        .env("TOUGH_CYCLES_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn extend_reaches_nine_on_petersen() {
    let o = run(&["extend", PETERSEN, "--budget", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &stdout_json_lines(&o)[0];
    assert_eq!(r["cycle"].as_array().unwrap().len(), 9);
    let o = run(&["extend", PETERSEN, "--start", "0,1,2,3,4"]);
    assert_eq!(stdout_json_lines(&o)[0]["lengths"][0], 5);
    assert_eq!(run(&["extend", "Bg"]).status.code(), Some(2));
}

#[test]
fn analyze_prints_decomposition_and_verdicts() {
    let o = run(&["analyze", PETERSEN]);
    assert_eq!(o.status.code(), Some(0));
    let lines = stdout_json_lines(&o);
    assert!(lines[0].get("decomposition").is_some());
    let tight = lines.iter().filter(|l| l["lemma"] == "edge_count_sum").count();
    assert_eq!(tight, 60);
    assert!(lines[1..].iter().all(|l| l["holds"] == true));
}
