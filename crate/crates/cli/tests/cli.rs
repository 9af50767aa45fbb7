use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn robcol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_robcol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn first_line(out: &Output) -> String {
    stdout(out).lines().next().unwrap_or_default().to_string()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

const PETERSEN: &str = "c petersen graph\np edge 10 15\n\
e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n\
e 1 6\ne 2 7\ne 3 8\ne 4 9\ne 5 10\n\
e 6 8\ne 8 10\ne 10 7\ne 7 9\ne 9 6\n";

#[test]
fn multipartite_formula() {
    let out = robcol(&[
        "compute",
        "--family",
        "multipartite",
        "--sizes",
        "3,3,3",
        "--param",
        "chi1",
        "--method",
        "formula",
    ]);
    assert!(out.status.success());
    assert_eq!(first_line(&out), "chi1 3");
}

#[test]
fn petersen_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "petersen.col");
    fs::write(&g, PETERSEN).unwrap();
    let cert = path(dir.path(), "petersen.cert");
    let out = robcol(&[
        "compute", "--graph", &g, "--param", "chi1", "--method", "oracle", "--cert", &cert,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(first_line(&out), "chi1 2");
    let out = robcol(&["verify", "--graph", &g, "--cert", &cert]);
    assert!(out.status.success());
    assert!(first_line(&out).starts_with("OK"));
}

#[test]
fn tower_omega1() {
    let out = robcol(&[
        "compute", "--family", "rtower", "--k", "3", "--param", "omega1", "--method", "oracle",
    ]);
    assert!(out.status.success());
    assert_eq!(first_line(&out), "omega1 2");
}

#[test]
fn printed_and_validated_modes_differ_on_one_one_two() {
    let args = [
        "compute",
        "--family",
        "multipartite",
        "--sizes",
        "1,1,2",
        "--param",
        "chi1",
        "--method",
        "formula",
        "--mode",
    ];
    let printed = robcol(&[&args[..], &["as-printed"]].concat());
    let validated = robcol(&[&args[..], &["oracle-validated"]].concat());
    assert_eq!(first_line(&printed), "chi1 1");
    assert_eq!(first_line(&validated), "chi1 2");
    assert!(stdout(&validated).contains("printed=1"));
}

#[test]
fn verify_reports_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = path(dir.path(), "th");
    let out = robcol(&[
        "construct",
        "--family",
        "threshold",
        "--seq",
        "diddddd",
        "--target",
        "chi1",
        "--out",
        &prefix,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let g = format!("{prefix}.col");
    let cert = format!("{prefix}.cert");
    assert!(first_line(&robcol(&["verify", "--graph", &g, "--cert", &cert])).starts_with("OK"));

    // Put every vertex in block 1: some kept edge becomes monochromatic.
    let text = fs::read_to_string(&cert).unwrap();
    let tampered: String = text
        .lines()
        .map(|l| match l.strip_prefix("col ") {
            Some(rest) => format!("col {} 1\n", rest.split(' ').next().unwrap()),
            None => format!("{l}\n"),
        })
        .collect();
    fs::write(&cert, tampered).unwrap();
    let out = robcol(&["verify", "--graph", &g, "--cert", &cert]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        first_line(&out).starts_with("FAIL monochromatic-edge"),
        "{}",
        first_line(&out)
    );
}

#[test]
fn verify_reports_non_incident_selection() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "p3.col");
    fs::write(&g, "p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
    let cert = path(dir.path(), "bad.cert");
    fs::write(
        &cert,
        "robust-coloring 3\ns 1 3\ncol 1 1\ncol 2 1\ncol 3 1\n",
    )
    .unwrap();
    let out = robcol(&["verify", "--graph", &g, "--cert", &cert]);
    assert_eq!(out.status.code(), Some(1));
    assert!(first_line(&out).starts_with("FAIL invalid-selection"));
}

#[test]
fn parse_errors_are_distinct_from_failures() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "bad.col");
    fs::write(&g, "p edge 3 1\ne 1 1\n").unwrap();
    let cert = path(dir.path(), "any.cert");
    fs::write(&cert, "robust-coloring 3\n").unwrap();
    let out = robcol(&["verify", "--graph", &g, "--cert", &cert]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn size_limits_give_nonzero_exit() {
    let out = robcol(&[
        "compute", "--family", "kneser", "--n", "9", "--k", "2", "--param", "chi1", "--method",
        "oracle",
    ]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn construct_alpha1_on_kneser() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = path(dir.path(), "kg");
    let out = robcol(&[
        "construct",
        "--family",
        "kneser",
        "--n",
        "8",
        "--k",
        "2",
        "--target",
        "alpha1",
        "--out",
        &prefix,
    ]);
    assert!(out.status.success());
    assert!(first_line(&out).starts_with("alpha1 8 "));
    let out = robcol(&[
        "verify",
        "--graph",
        &format!("{prefix}.col"),
        "--cert",
        &format!("{prefix}.cert"),
    ]);
    assert_eq!(first_line(&out), "OK size=8");
}

#[test]
fn generate_writes_annotation() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = path(dir.path(), "sp");
    let out = robcol(&[
        "generate",
        "--family",
        "splittight",
        "--t",
        "3",
        "--out",
        &prefix,
    ]);
    assert!(out.status.success());
    let graph = fs::read_to_string(format!("{prefix}.col")).unwrap();
    assert!(graph.contains("p edge 6 "));
    let ann = fs::read_to_string(format!("{prefix}.ann")).unwrap();
    assert_eq!(ann.lines().count(), 6);
    assert!(ann.lines().all(|l| l.starts_with("a ")));
}

#[test]
fn crosscheck_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.txt");
    let b = path(dir.path(), "b.txt");
    for out in [&a, &b] {
        let o = robcol(&[
            "crosscheck",
            "--suite",
            "bipartite",
            "--limit-n",
            "7",
            "--samples",
            "40",
            "--seed",
            "3",
            "--out",
            out,
        ]);
        assert!(o.status.success());
    }
    let (a, b) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.lines().any(|l| l.starts_with("row tree:n7:")));
    assert!(!text.contains("summary bipartite mismatch"));
}

#[test]
fn crosscheck_multipartite_reports_printed_mismatches() {
    let out = robcol(&[
        "crosscheck",
        "--suite",
        "multipartite",
        "--limit-n",
        "6",
        "--mode",
        "as-printed",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text
        .lines()
        .find(|l| l.starts_with("row multipartite:1,1,2 "))
        .unwrap();
    assert!(row.contains("oracle=2 formula=1/as_printed"), "{row}");
    assert!(row.contains("flags=mismatch"), "{row}");
}

#[test]
fn crosscheck_removable_lemma_is_clean() {
    let out = robcol(&["crosscheck", "--suite", "removable-lemma", "--limit-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("summary removable-lemma rows=76"));
    assert!(!text.contains("mismatch"));
}

#[test]
fn unknown_suite_is_an_error() {
    let out = robcol(&["crosscheck", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
