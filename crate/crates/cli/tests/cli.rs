use std::io::Write;
use std::process::{Command, Output, Stdio};

fn surfkit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_surfkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const S3_PAIR: &str = r#"{"degree":3,"factors":[{"degree":3,"cycles":[[1,2]]},{"degree":3,"cycles":[[2,3]]}]}"#;

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(surfkit(&["--help"], None).status.code(), Some(0));
    assert_eq!(surfkit(&["--version"], None).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(surfkit(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(
        surfkit(&["orbifold", "classify", "2", "3"], None).status.code(),
        Some(1)
    );
    assert_eq!(
        surfkit(&["orbifold", "classify", "2", "3", "x"], None).status.code(),
        Some(1)
    );
    let o = surfkit(&["hurwitz", "orbit", "--file", "/nonexistent/f.json"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot read"));
}

#[test]
fn domain_errors_exit_two_with_name() {
    let o = surfkit(&["orbifold", "classify", "1", "3", "7"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: InvalidOrder:"));

    let o = surfkit(&["dynkin", "rdp", "Q3"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("UnknownLabel"));

    let o = surfkit(&["hurwitz", "move", "--i", "5"], Some(S3_PAIR));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("IndexOutOfRange"));

    let o = surfkit(&["hurwitz", "orbit"], Some("{not json"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("InvalidInput"));

    let o = surfkit(&["perm", "info", "(1,1)"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("RepeatedPoint"));
}

#[test]
fn orbit_from_stdin() {
    let o = surfkit(&["hurwitz", "orbit", "--format", "json"], Some(S3_PAIR));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["size"], 3);
    assert_eq!(v["exhausted"], true);
    assert_eq!(v["representatives"].as_array().unwrap().len(), 3);
}

#[test]
fn auroux_record_replays() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    // The product is the identity, so every factor commutes with it.
    std::fs::write(
        &f,
        r#"{"degree":3,"factors":[{"degree":3,"cycles":[[1,2]]},{"degree":3,"cycles":[[1,2]]},{"degree":3,"cycles":[[1,3,2]]},{"degree":3,"cycles":[[1,2,3]]}]}"#,
    )
    .unwrap();
    let o = surfkit(
        &[
            "hurwitz",
            "auroux",
            "--file",
            f.to_str().unwrap(),
            "--h",
            "3",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let record = stdout(&o);
    let r = surfkit(&["hurwitz", "replay"], Some(&record));
    assert_eq!(r.status.code(), Some(0), "{}", stderr(&r));
    assert!(stdout(&r).starts_with("replay ok"));

    // Tampering with the endpoint must be caught.
    let mut v: serde_json::Value = serde_json::from_str(&record).unwrap();
    v["end"]["factors"][0]["cycles"] = serde_json::json!([[2, 3]]);
    let r = surfkit(&["hurwitz", "replay"], Some(&v.to_string()));
    assert_eq!(r.status.code(), Some(2));
    assert!(stderr(&r).contains("ReplayFailed"));
}

#[test]
fn auroux_rejects_non_central_product() {
    let o = surfkit(&["hurwitz", "auroux", "--h", "1"], Some(S3_PAIR));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotCentral"));
}

#[test]
fn equivalence_reports_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let other = dir.path().join("g.json");
    std::fs::write(
        &other,
        r#"{"degree":3,"factors":[{"degree":3,"cycles":[[1,3]]},{"degree":3,"cycles":[[1,2]]}]}"#,
    )
    .unwrap();
    let o = surfkit(
        &[
            "hurwitz",
            "equiv",
            "--other",
            other.to_str().unwrap(),
            "--format",
            "json",
        ],
        Some(S3_PAIR),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "Yes");
    assert_eq!(v["path"].as_array().unwrap().len(), 1);
}

#[test]
fn text_outputs() {
    assert_eq!(
        stdout(&surfkit(&["orbifold", "classify", "2", "3", "5"], None)),
        "Elliptic, order 60\n"
    );
    assert_eq!(
        stdout(&surfkit(&["orbifold", "classify", "2", "3", "6"], None)),
        "Parabolic\n"
    );
    assert_eq!(
        stdout(&surfkit(&["orbifold", "genus", "(0; 5,5,5)", "--order", "25"], None)),
        "genus 6\n"
    );
    assert_eq!(
        stdout(&surfkit(&["perm", "compose", "(1,2)", "(2,3)"], None)),
        "(1,2,3)\n"
    );
    assert_eq!(
        stdout(&surfkit(&["braid", "perm", "--strands", "3", "s1"], None)),
        "(1,2)\n"
    );
    assert_eq!(
        stdout(&surfkit(
            &["beauville", "orders", "--a", "(5,4,1)(2,6)", "--c", "(1,2,3)(4,5,6,7)"],
            None
        ))
        .lines()
        .next(),
        Some("(6, 3, 12)")
    );
    let rdp = stdout(&surfkit(&["dynkin", "rdp", "E7"], None));
    assert!(rdp.contains("z^2 = x(x^2 + y^3)"));
}

#[test]
fn abc_csv_is_one_row() {
    let o = surfkit(&["inv", "abc", "2", "3", "2", "--format", "csv"], None);
    let text = stdout(&o);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let header = rows.headers().unwrap().clone();
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 1);
    let get = |k: &str| records[0][header.iter().position(|h| h == k).unwrap()].to_string();
    assert_eq!(get("chi"), "20");
    assert_eq!(get("k2"), "64");
}

#[test]
fn dynkin_from_file_and_label_agree() {
    let e6 = r#"{"count":6,"edges":[[1,2,1],[1,3,1],[3,4,1],[1,5,1],[5,6,1]]}"#;
    let a = surfkit(&["dynkin", "classify", "--format", "json"], Some(e6));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["label"], "E6");
    assert_eq!(v["rdp"]["milnor_number"], 6);
    let b = surfkit(&["dynkin", "classify", "--label", "e6", "--format", "json"], None);
    let w: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(w["label"], "E6");
    assert_eq!(w["extended"]["label"], "~E6");
}

#[test]
fn beauville_check_in_s8() {
    let o = surfkit(
        &[
            "beauville",
            "check",
            "--group",
            "s8",
            "--a",
            "(5,4,1)(2,6)",
            "--c",
            "(1,2,3)(4,5,6,7,8)",
            "--a2",
            "(1,8,7,6,5,4,3,2)",
            "--c2",
            "(1,3,5,7,2,4,6,8)",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group_order"], 40320);
}
