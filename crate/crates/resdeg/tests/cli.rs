use std::io::Write;
use std::process::{Command, Output};

fn resdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resdeg")).args(args).output().expect("binary runs")
}

fn csv_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn bundled_table_matches_golden() {
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/real_plus_table.tsv");
    let out = resdeg(&["table", "--check", golden]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn bundled_examples_match_golden() {
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/examples.tsv");
    let out = resdeg(&["examples", "--check", golden]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn table_from_user_records() {
    let input = csv_file("ell,h\n1373,3\n1093,5\n");
    let out = resdeg(&["table", "--input", input.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "ell\th\tphi(h)\tR\n1093\t5\t4\t3, 7, 13, 21, 39, 91, 273\n1373\t3\t2\t7, 49, 343\n");
}

#[test]
fn malformed_records_exit_with_data_error() {
    for body in ["ell,h\n1093,five\n", "ell,h\n1092,5\n", "ell,h,factors\n1093,6,2x2\n", "ell,h\n1093,5\n1093,5\n"] {
        let input = csv_file(body);
        let out = resdeg(&["table", "--input", input.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "input {body:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn golden_mismatch_exits_three() {
    let wrong = csv_file("ell\th\tphi(h)\tR\n");
    let out = resdeg(&["table", "--check", wrong.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(resdeg(&["table", "--bogus"]).status.code(), Some(1));
    assert_eq!(resdeg(&[]).status.code(), Some(1));
}

fn certify(args: &[&str]) -> (Option<i32>, Vec<serde_json::Value>) {
    let out = resdeg(&[&["certify"], args].concat());
    let lines = String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).expect("json lines")).collect();
    (out.status.code(), lines)
}

#[test]
fn certify_exit_codes() {
    // Aut(Z/7) has an element of order 3, so no degree-3 field is forced.
    let (code, lines) = certify(&["--n", "3", "--h", "7", "--f", "3"]);
    assert_eq!(code, Some(4));
    assert!(lines.iter().all(|v| v["conclusion"].as_array().unwrap().is_empty()));

    let (code, lines) = certify(&["--n", "3", "--h", "2", "--f", "3"]);
    assert_eq!(code, Some(0));
    let main = lines.iter().find(|v| v["theorem"] == "Main").unwrap();
    assert_eq!(main["conclusion"], serde_json::json!([1, 3]));
}
