use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::json;
use strong_cliques_cli::record::{parse_records, Format};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_strong-cliques"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn family(name: &str) -> String {
    let r = run(&["gen", "family", name], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

#[test]
fn analyze_path_finds_partition() {
    let r = run(&["analyze", "--input", "-"], &family("path:4"));
    assert_eq!(r.code, 0);
    let records = parse_records(&r.stdout, Format::Tsv).unwrap();
    let part = records
        .iter()
        .find(|r| r.problem == "partition-existence")
        .unwrap();
    assert_eq!(part.answer, Some(true));
    assert_eq!(
        part.certificate,
        json!({"kind": "partition", "value": [[0, 1], [2, 3]]})
    );
    let middle = records
        .iter()
        .find(|r| r.query.as_deref() == Some("1,2"))
        .unwrap();
    assert_eq!(middle.answer, Some(false));
    assert_eq!(middle.method, "c4free");
    assert!(records
        .iter()
        .any(|r| r.problem == "partition" && r.is_skipped()));
}

#[test]
fn records_round_trip_in_both_formats() {
    let g = family("cycle:5");
    for format in ["tsv", "jsonl"] {
        let r = run(
            &[
                "analyze",
                "--input",
                "-",
                "--format",
                format,
                "--partition",
                "0,1|2,3|4",
            ],
            &g,
        );
        let records = parse_records(&r.stdout, format.parse().unwrap()).unwrap();
        assert_eq!(records.len(), 5 + 5);
        let text: String = records
            .iter()
            .map(|rec| rec.to_line(format.parse().unwrap()) + "\n")
            .collect();
        let again = parse_records(&text, format.parse().unwrap()).unwrap();
        assert_eq!(again, records);
        let part = records.iter().find(|r| r.problem == "partition").unwrap();
        assert_eq!(part.answer, Some(false));
    }
}

#[test]
fn classify_cubic_reports_family_tag() {
    let r = run(
        &["classify-cubic", "--input", "-", "--format", "jsonl"],
        &family("F_n:3"),
    );
    assert_eq!(r.code, 0);
    let rec = &parse_records(&r.stdout, Format::Jsonl).unwrap()[0];
    assert_eq!(rec.certificate["tag"], "Fn(3)");
    let r = run(&["classify-cubic", "--input", "-"], &family("petersen"));
    assert_eq!(r.code, 1);
    let r = run(&["classify-cubic", "--input", "-"], &family("path:4"));
    assert_eq!(r.code, 2);
}

#[test]
fn exit_codes_follow_answers() {
    let p4 = family("path:4");
    assert_eq!(
        run(&["check-strong", "--input", "-", "--clique", "0,1"], &p4).code,
        0
    );
    assert_eq!(
        run(&["check-strong", "--input", "-", "--clique", "1,2"], &p4).code,
        1
    );
    assert_eq!(
        run(&["check-strong", "--input", "-", "--clique", "0,2"], &p4).code,
        2
    );
    assert_eq!(
        run(&["extend", "--input", "-", "--clique", "1"], &p4).code,
        0
    );
    assert_eq!(
        run(&["localizable", "--input", "-"], &family("cycle:5")).code,
        1
    );
    assert_eq!(run(&["localizable", "--input", "-"], &p4).code, 0);
    let bad = run(&["analyze", "--input", "-"], "3 1\n0 7\n");
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.starts_with("error:"));
}

#[test]
fn exact_fallback_respects_cap() {
    let k = family("complete:5");
    let r = run(
        &[
            "oracle",
            "--input",
            "-",
            "--problem",
            "existence",
            "--oracle-cap",
            "3",
        ],
        &k,
    );
    assert_eq!(r.code, 2);
    assert!(r.stdout.contains("skipped: cap"));
    assert_eq!(
        run(&["oracle", "--input", "-", "--problem", "existence"], &k).code,
        0
    );
}

#[test]
fn recognize_line_graph_prints_root_or_obstruction() {
    let r = run(
        &["recognize-line", "--input", "-", "--format", "jsonl"],
        &family("cycle:5"),
    );
    assert_eq!(r.code, 0);
    let rec = &parse_records(&r.stdout, Format::Jsonl).unwrap()[0];
    assert_eq!(rec.certificate["root_n"], 5);
    let r = run(
        &["recognize-line", "--input", "-", "--format", "jsonl"],
        &family("complete_bipartite:1,3"),
    );
    assert_eq!(r.code, 1);
    let rec = &parse_records(&r.stdout, Format::Jsonl).unwrap()[0];
    assert_eq!(rec.certificate["obstruction"].as_array().unwrap().len(), 4);
}

#[test]
fn reduce_sat_checks_assumptions() {
    let cnf = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n";
    let r = run(&["reduce-sat", "--input", "-", "--variant", "gprime"], cnf);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("assumption (iii)"), "{}", r.stderr);
    let r = run(&["reduce-sat", "--input", "-"], cnf);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("8 "));
    let r = run(
        &["check-strong", "--input", "-", "--clique", "0,1"],
        &r.stdout,
    );
    assert_eq!(
        r.code, 1,
        "a satisfiable formula leaves the clause clique weak"
    );
}

#[test]
fn generated_cnf_feeds_reduction() {
    let cnf = run(
        &[
            "gen",
            "cnf",
            "--vars",
            "4",
            "--clauses",
            "8",
            "--assumptions",
            "all",
            "--seed",
            "3",
        ],
        "",
    );
    assert_eq!(cnf.code, 0, "{}", cnf.stderr);
    let dir = std::env::temp_dir().join(format!("strong-cliques-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let labels = dir.join("labels.txt");
    let r = run(
        &[
            "reduce-sat",
            "--input",
            "-",
            "--variant",
            "gprime",
            "--labels",
            labels.to_str().unwrap(),
        ],
        &cnf.stdout,
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    let text = std::fs::read_to_string(&labels).unwrap();
    assert_eq!(text.lines().count(), 8 + 6 * 4);
    assert!(text.lines().any(|l| l.ends_with("auxiliary ~v4")), "{text}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn campaign_summary_and_exit_code() {
    let r = run(
        &["verify-campaign", "cubic-families", "--samples", "10"],
        "",
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stderr.contains("0 failures"), "{}", r.stderr);
    assert!(r.stderr.contains("cubic_classification="), "{}", r.stderr);
}
