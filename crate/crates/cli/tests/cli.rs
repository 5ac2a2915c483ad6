use std::collections::BTreeMap;
use std::fs;
use std::process::{Command, Output};

use monogen_cli::report::{ReportDoc, ThueDoc};
use monogen_cli::CorpusSummary;

fn monogen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monogen")).args(args).output().expect("binary runs")
}

fn quick(args: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    v.extend(["--cubic-height", "500", "--quartic-height", "200"].map(String::from));
    v
}

fn run(args: &[String]) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    monogen(&refs)
}

fn report(out: &Output) -> ReportDoc {
    serde_json::from_slice(&out.stdout).expect("report json")
}

#[test]
fn analyze_cyclotomic() {
    let out = run(&quick(&["analyze", "--coeffs", "1,1,1,1"]));
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(doc.discriminant, "125");
    assert_eq!(doc.generator.coeffs, vec!["1", "1", "1", "1"]);
    let classes: Vec<(String, String, String)> =
        doc.classes.iter().map(|c| (c.x.clone(), c.y.clone(), c.z.clone())).collect();
    for t in [("1", "0", "0"), ("0", "1", "0"), ("0", "0", "1"), ("1", "1", "1")] {
        assert!(classes.contains(&(t.0.into(), t.1.into(), t.2.into())), "{t:?}");
    }
    assert!(doc.bounds.pass);
    assert_eq!(doc.bounds.total_max, "2760");
}

#[test]
fn analyze_t4_minus_t_minus_1() {
    let out = run(&quick(&["analyze", "--coeffs", "0,0,-1,-1"]));
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(doc.discriminant, "-283");
    assert_eq!(doc.resolvent.coeffs, vec!["1", "0", "4", "-1"]);
    assert_eq!(doc.resolvent.disc, "-283");
    let per_branch: Vec<&str> = doc.counts.per_branch.iter().map(String::as_str).collect();
    assert_eq!(doc.counts.cubic, "3");
    assert_eq!(per_branch.len(), 3);
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        vec!["analyze", "--coeffs", "0,0,0,0"],
        vec!["analyze", "--coeffs", "1,2,3"],
        vec!["analyze", "--coeffs", "1,x,3,4"],
        vec!["analyze", "--coeffs", "1,1,1,1", "--format", "xml"],
        vec!["analyze", "--coeffs", "1,1,1,1", "--quartic-height", "0"],
        vec!["analyze"],
        vec!["frobnicate"],
        vec!["thue", "--form", "1,0,-2"],
        vec!["thue", "--form", "1,0,0,0,0,1"],
        vec!["corpus", "/nonexistent/corpus.txt"],
    ] {
        assert_eq!(monogen(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(monogen(&["--help"]).status.code(), Some(0));
}

#[test]
fn thue_examples() {
    let out = monogen(&["thue", "--form", "1,0,4,-1", "--rhs", "1,-1", "--height", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: ThueDoc = serde_json::from_slice(&out.stdout).unwrap();
    let sols: Vec<(&str, &str)> = doc.solutions.iter().map(|p| (p.u.as_str(), p.v.as_str())).collect();
    assert!(sols.contains(&("1", "0")) && sols.contains(&("0", "1")));
    assert_eq!(doc.scope, "solutions with |v| <= 1000");

    let out = monogen(&["thue", "--form", "1,0,0,-2", "--rhs", "1", "--height", "1000", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(1, 0)") && text.contains("(-1, -1)"), "{text}");

    let out = monogen(&["thue", "--form", "1,2,-3,0,5", "--rhs", "1", "--height", "50"]);
    let doc: ThueDoc = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc.solutions.iter().any(|p| p.u == "1" && p.v == "0"));
}

#[test]
fn oracle_check_agrees_on_corpus_members() {
    for coeffs in ["1,1,1,1", "0,0,-1,-1"] {
        let out = monogen(&["oracle-check", "--coeffs", coeffs, "--oracle-box", "12", "--format", "text"]);
        let text = String::from_utf8_lossy(&out.stdout);
        assert_eq!(out.status.code(), Some(0), "{coeffs}: {text}");
        assert!(text.contains("missing from pipeline   none"));
    }
}

#[test]
fn forced_incompleteness_is_reported() {
    // Quartic height 1 cuts off (p, q) = (1, -2), (4, -7) and (2, -3).
    let out = monogen(&["oracle-check", "--coeffs", "0,0,-1,-1", "--quartic-height", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let missing: Vec<(String, String, String)> = doc["missing_from_pipeline"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let f = |k: &str| t[k].as_str().unwrap().to_string();
            (f("x"), f("y"), f("z"))
        })
        .collect();
    assert_eq!(
        missing,
        vec![
            ("0".into(), "2".into(), "-1".into()),
            ("1".into(), "2".into(), "0".into()),
            ("6".into(), "5".into(), "4".into())
        ]
    );
    assert_eq!(doc["agrees"], serde_json::Value::Bool(false));
}

#[test]
fn analyze_with_oracle_attached() {
    let out = run(&quick(&["analyze", "--coeffs", "0,0,0,-2", "--oracle", "--oracle-box", "10"]));
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    let oracle = doc.oracle.unwrap();
    assert!(oracle.agrees);
    assert_eq!(oracle.oracle_classes.len(), 3);
}

#[test]
fn json_and_csv_carry_the_same_numbers() {
    let json = run(&quick(&["analyze", "--coeffs", "0,-4,0,2", "--literal"]));
    let csv = run(&quick(&["analyze", "--coeffs", "0,-4,0,2", "--literal", "--format", "csv"]));
    assert_eq!(csv.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let mut from_json = BTreeMap::new();
    collect(&value, String::new(), &mut from_json);
    let text = String::from_utf8(csv.stdout).unwrap();
    let mut reader = csv_rows(&text);
    let header = reader.remove(0);
    assert_eq!(header, ("path".to_string(), "value".to_string()));
    let from_csv: BTreeMap<String, String> = reader.into_iter().collect();
    let numeric = |m: &BTreeMap<String, String>| -> BTreeMap<String, String> {
        m.iter().filter(|(_, v)| v.parse::<i128>().is_ok()).map(|(k, v)| (k.clone(), v.clone())).collect()
    };
    assert!(!numeric(&from_json).is_empty());
    assert_eq!(numeric(&from_json), numeric(&from_csv));
}

fn collect(v: &serde_json::Value, path: String, out: &mut BTreeMap<String, String>) {
    use serde_json::Value;
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| collect(x, join(k), out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| collect(x, join(&i.to_string()), out)),
        Value::String(s) => {
            out.insert(path, s.clone());
        }
        Value::Null => {}
        other => {
            out.insert(path, other.to_string());
        }
    }
}

/// Minimal reader for the two-column output; quoted fields only occur for
/// text containing commas.
fn csv_rows(text: &str) -> Vec<(String, String)> {
    text.lines()
        .map(|l| {
            let (k, v) = l.split_once(',').unwrap();
            (k.to_string(), v.trim_matches('"').to_string())
        })
        .collect()
}

#[test]
fn report_written_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let mut args = quick(&["analyze", "--coeffs", "0,0,0,1"]);
    args.extend(["--out".to_string(), path.to_string_lossy().into_owned()]);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let doc: ReportDoc = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = quick(&["analyze", "--coeffs", "1,1,1,1"]);
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let one = Command::new(env!("CARGO_BIN_EXE_monogen")).args(&refs).env("MONOGEN_THREADS", "1").output().unwrap();
    let three = Command::new(env!("CARGO_BIN_EXE_monogen")).args(&refs).env("MONOGEN_THREADS", "3").output().unwrap();
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn corpus_of_fixed_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("corpus.txt");
    fs::write(
        &file,
        "# label a1 a2 a3 a4\n\
         t4-t-1 0 0 -1 -1\n\
         cyclo5 1 1 1 1\n\
         t4-2   0 0 0 -2\n\
         t4+1   0 0 0 1\n",
    )
    .unwrap();
    let out_dir = dir.path().join("reports");
    let mut args = quick(&["corpus", file.to_str().unwrap(), "--out-dir", out_dir.to_str().unwrap()]);
    args.extend(["--format".into(), "json".into()]);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let summary: CorpusSummary = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary.processed, "4");
    assert_eq!(summary.rejected, "0");
    assert_eq!(summary.max_classes, "13");
    let mut files: Vec<String> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    files.sort();
    assert_eq!(files, vec!["000-t4-t-1.json", "001-cyclo5.json", "002-t4-2.json", "003-t4_1.json", "summary.json"]);
    let cyclo: ReportDoc = serde_json::from_str(&fs::read_to_string(out_dir.join("001-cyclo5.json")).unwrap()).unwrap();
    assert_eq!(cyclo.discriminant, "125");
}

#[test]
fn corpus_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let out = run(&quick(&["corpus", empty.to_str().unwrap()]));
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["summary"]["processed"], "0");

    let mixed = dir.path().join("mixed.txt");
    fs::write(&mixed, "short 0 0 -1\ncyclo 1 1 1 1\nreducible 0 -5 0 4\n").unwrap();
    let out = run(&quick(&["corpus", mixed.to_str().unwrap(), "--format", "text"]));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("processed 1  rejected 2"), "{text}");
    assert!(text.contains("expected a label and 4 coefficients"));
}
