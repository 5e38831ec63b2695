//! Command-surface tests: output formats carry identical data, JSON
//! re-parses to the library's enumeration order, and exit codes follow the
//! 0/1/2 contract.

use exseq::algebra::{Algebra, Rank};
use exseq::exceptional::enumerate_complete;
use exseq_cli::{run, EnumerationOutput};

fn run_captured(args: &[&str]) -> (i32, String) {
    let mut full = vec!["exseq"];
    full.extend_from_slice(args);
    let mut out = Vec::new();
    let code = run(full, &mut out);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

#[test]
fn json_output_reparses_to_the_enumeration() {
    for n in 1..=6 {
        let (code, stdout) = run_captured(&["enumerate", "--rank", &n.to_string(), "--format", "json"]);
        assert_eq!(code, 0);
        let parsed: EnumerationOutput = serde_json::from_str(&stdout).unwrap();
        assert_eq!(parsed.rank, n);
        let expected: Vec<Vec<String>> =
            enumerate_complete(Algebra::new(Rank::new(n).unwrap()))
                .iter()
                .map(|e| e.items().iter().map(ToString::to_string).collect())
                .collect();
        let got: Vec<Vec<String>> = parsed.sequences.iter().map(|r| r.modules.clone()).collect();
        assert_eq!(got, expected, "order-sensitive equality at rank {n}");
    }
}

#[test]
fn all_formats_carry_identical_data() {
    for n in [2usize, 4] {
        let rank = n.to_string();
        let (_, text) = run_captured(&["enumerate", "--rank", &rank, "--format", "text"]);
        let (_, json) = run_captured(&["enumerate", "--rank", &rank, "--format", "json"]);
        let (_, csv_text) = run_captured(&["enumerate", "--rank", &rank, "--format", "csv"]);

        let from_text: Vec<(String, String, String)> = text
            .lines()
            .map(|line| {
                let mut parts = line.split('\t');
                (
                    parts.next().unwrap().to_owned(),
                    parts.next().unwrap().to_owned(),
                    parts.next().unwrap().to_owned(),
                )
            })
            .collect();

        let parsed: EnumerationOutput = serde_json::from_str(&json).unwrap();
        let from_json: Vec<(String, String, String)> = parsed
            .sequences
            .iter()
            .map(|r| (r.sequence_text(), r.phi_text(), r.shape_text()))
            .collect();

        let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
        assert_eq!(
            reader.headers().unwrap(),
            &csv::StringRecord::from(vec!["sequence", "phi", "shape"])
        );
        let from_csv: Vec<(String, String, String)> = reader
            .records()
            .map(|record| {
                let record = record.unwrap();
                (
                    record[0].to_owned(),
                    record[1].to_owned(),
                    record[2].to_owned(),
                )
            })
            .collect();

        assert_eq!(from_text, from_json, "text vs json at rank {n}");
        assert_eq!(from_text, from_csv, "text vs csv at rank {n}");
    }
}

#[test]
fn gamma_prints_the_worked_example() {
    let (code, stdout) = run_captured(&["gamma", "--function", "7,2,2,4,4,7,7"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "[[6,7],[2],[1,2],[4],[3,4],[5,6],[5]]");
}

#[test]
fn phi_prints_the_tuple() {
    let (code, stdout) = run_captured(&["phi", "--sequence", "[[2,3],[1],[2]]"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "3,2,3");
}

#[test]
fn count_methods_agree() {
    for n in 1..=6 {
        let rank = n.to_string();
        let (_, formula) = run_captured(&["count", "--rank", &rank, "--method", "formula"]);
        let (_, enumerated) = run_captured(&["count", "--rank", &rank, "--method", "enumerate"]);
        assert_eq!(formula, enumerated, "rank {n}");
    }
}

#[test]
fn forests_report_lines() {
    let (code, stdout) = run_captured(&["forests", "--rank", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(
        lines,
        [
            "1,1\troots: {1}; edges: 2->1\t1",
            "1,2\troots: {1,2}; edges:\t0,0",
            "2,2\troots: {2}; edges: 1->2\t1",
        ]
    );

    let (code, stdout) = run_captured(&["forests", "--rank", "4", "--shapes"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(
        lines,
        ["3\t4", "2,0\t12", "1,1\t12", "1,0,0\t12", "0,0,0,0\t1"]
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["phi", "--sequence", "[[2,3],[1]"][..],
        &["phi", "--sequence", "[[1],[1]]"][..],
        &["gamma", "--function", "2,1"][..],
        &["gamma", "--function", "0"][..],
        &["count", "--rank", "0"][..],
        &["enumerate", "--rank", "12"][..],
        &["no-such-command"][..],
    ] {
        let (code, _) = run_captured(args);
        assert_eq!(code, 2, "{args:?}");
    }
}

#[test]
fn max_rank_is_configurable_in_both_directions() {
    // lowering the limit rejects an otherwise fine rank
    let (code, _) = run_captured(&["enumerate", "--rank", "5", "--max-rank", "4"]);
    assert_eq!(code, 2);

    // raising it admits rank 10; shapes are the partitions of 10
    let (code, stdout) = run_captured(&["forests", "--rank", "10", "--max-rank", "10", "--shapes"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 42);
}

#[test]
fn verify_without_golden_runs_structural_checks() {
    let (code, stdout) = run_captured(&["verify", "--rank", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("no golden table for rank 5"));
    assert!(stdout.contains("verify: rank 5 passed"));
}

#[test]
fn verify_reports_each_golden_rank() {
    for n in [2, 3, 4] {
        let (code, stdout) = run_captured(&["verify", "--rank", &n.to_string()]);
        assert_eq!(code, 0, "rank {n}");
        assert!(stdout.contains("golden sequences equal the enumeration as a set"));
    }
}
