use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use kdinv::catalogue::default_corpus;
use kdinv_cli::{parse_graph_file, render_graph};

fn kdinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdinv"))
        .args(args)
        .env_remove("KDINV_BUDGET_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn compute_cycle_chromatic() {
    let o = kdinv(&[
        "compute",
        "--family",
        "cycle",
        "--n",
        "16",
        "--k",
        "4",
        "--d",
        "6",
        "--invariants",
        "chi",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("chi=3 (closed-form)"), "{}", stdout(&o));
    let o = kdinv(&[
        "compute",
        "--family",
        "cycle",
        "--n",
        "16",
        "--k",
        "4",
        "--d",
        "6",
        "--invariants",
        "chi",
        "--brute",
    ]);
    assert!(stdout(&o).contains("chi=3 (solver)"), "{}", stdout(&o));
}

#[test]
fn compute_path_alpha_closed_form() {
    let o = kdinv(&[
        "compute",
        "--family",
        "path",
        "--n",
        "23",
        "--k",
        "4",
        "--d",
        "7",
        "--invariants",
        "alpha",
        "--closed-form",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("alpha=9 (closed-form)"), "{out}");
    assert!(
        out.contains("independent-set: 1 2 3 9 10 11 17 18 19"),
        "{out}"
    );
}

#[test]
fn compute_fixture_power_json() {
    let f = fixture("fixture8.txt");
    let o = kdinv(&[
        "compute",
        "--graph",
        f.to_str().unwrap(),
        "--k",
        "3",
        "--d",
        "2",
        "--power",
        "2",
        "--invariants",
        "chi",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["invariants"][0]["name"], "chi");
    assert_eq!(v["invariants"][0]["value"], 3);
    assert_eq!(v["invariants"][0]["witness"]["kind"], "coloring");
    let o = kdinv(&[
        "compute",
        "--graph",
        f.to_str().unwrap(),
        "--k",
        "4",
        "--d",
        "4",
        "--invariants",
        "chi",
    ]);
    assert!(stdout(&o).contains("chi=2 (solver)"), "{}", stdout(&o));
}

#[test]
fn path_power_family() {
    let o = kdinv(&[
        "compute",
        "--family",
        "path-power",
        "--n",
        "23",
        "--ell",
        "3",
        "--k",
        "3",
        "--d",
        "2",
        "--invariants",
        "alpha,chi",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let closed = stdout(&o);
    let o = kdinv(&[
        "compute",
        "--family",
        "path-power",
        "--n",
        "23",
        "--ell",
        "3",
        "--k",
        "3",
        "--d",
        "2",
        "--invariants",
        "alpha,chi",
        "--brute",
    ]);
    let brute = stdout(&o);
    for name in ["alpha", "chi"] {
        let pick = |s: &str| {
            s.lines()
                .find(|l| l.starts_with(name))
                .unwrap()
                .split(' ')
                .next()
                .unwrap()
                .to_string()
        };
        assert_eq!(pick(&closed), pick(&brute), "{closed}\n{brute}");
    }
    let o = kdinv(&[
        "compute",
        "--family",
        "path-power",
        "--n",
        "5",
        "--k",
        "3",
        "--d",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--ell"));
}

#[test]
fn fallback_notice_for_missing_formula() {
    let o = kdinv(&[
        "compute",
        "--family",
        "cycle",
        "--n",
        "9",
        "--k",
        "3",
        "--d",
        "2",
        "--invariants",
        "gamma",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("notice: gamma"), "{}", stderr(&o));
    assert!(stdout(&o).contains("gamma=5 (solver)"), "{}", stdout(&o));
    let o = kdinv(&[
        "compute",
        "--family",
        "cycle",
        "--n",
        "9",
        "--k",
        "3",
        "--d",
        "2",
        "--invariants",
        "gamma",
        "--closed-form",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_formats() {
    let base = [
        "compute",
        "--family",
        "path",
        "--n",
        "6",
        "--k",
        "3",
        "--d",
        "2",
        "--invariants",
        "alpha,omega",
    ];
    let csv = stdout(&kdinv(&[&base[..], &["--format", "csv"]].concat()));
    assert_eq!(csv.lines().next(), Some("invariant,value,source,witness"));
    assert!(csv.contains("alpha,4,closed-form,1 2 4 5"), "{csv}");
    let md = stdout(&kdinv(&[&base[..], &["--format", "markdown"]].concat()));
    assert!(md.contains("| omega | 3 | closed-form | 1 2 3 |"), "{md}");
    let json = stdout(&kdinv(
        &[&base[..], &["--format", "json", "--bounds"]].concat(),
    ));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for field in [
        "chi_lower_counting",
        "chi_upper_partition",
        "chi_lower_clique",
        "chi_upper_hypergraph_greedy",
        "chi_upper_metric_greedy",
        "omega_upper_domination",
    ] {
        assert!(v["bounds"].get(field).is_some(), "missing {field}");
    }
}

#[test]
fn hypergraph_exports() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(&dir, "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let o = kdinv(&["hypergraph", "--graph", &star, "--k", "3", "--d", "2"]);
    assert_eq!(stdout(&o), "4 3 3\n0 1 2\n0 1 3\n0 2 3\n");

    let k4 = write(&dir, "k4.txt", "# K_4\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = dir.path().join("h.txt");
    let o = kdinv(&[
        "hypergraph",
        "--graph",
        &k4,
        "--k",
        "3",
        "--d",
        "2",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "4 3 0\n");

    let o = kdinv(&[
        "hypergraph",
        "--family",
        "path",
        "--n",
        "4",
        "--k",
        "2",
        "--d",
        "1",
    ]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("4 2 3"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn parse_errors_exit_one_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    for (text, needle) in [
        ("2 1\n0 2\n", "line 2: vertex 2 out of range"),
        ("# c\nfour 1\n0 1\n", "line 2: malformed header"),
        ("3 2\n0 1\n1 2 extra\n", "line 3: bad edge line"),
        ("3 2\n0 1\n", "header declares 2 edges, found 1"),
    ] {
        let f = write(&dir, "g.txt", text);
        let o = kdinv(&["compute", "--graph", &f, "--k", "2", "--d", "1"]);
        assert_eq!(o.status.code(), Some(1), "{text:?}");
        assert!(stderr(&o).contains(needle), "{text:?}: {}", stderr(&o));
    }
    let o = kdinv(&[
        "compute",
        "--graph",
        "/nonexistent/graph.txt",
        "--k",
        "2",
        "--d",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = kdinv(&[
        "compute", "--family", "path", "--n", "5", "--k", "1", "--d", "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn budget_exit_code_and_env_override() {
    let args = [
        "compute",
        "--family",
        "cycle",
        "--n",
        "12",
        "--k",
        "3",
        "--d",
        "2",
        "--brute",
        "--invariants",
        "alpha",
    ];
    assert_eq!(kdinv(&args).status.code(), Some(0));
    let o = kdinv(&[&args[..], &["--budget-n", "8"]].concat());
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_kdinv"))
        .args(args)
        .env("KDINV_BUDGET_N", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn perfect_and_table() {
    let o = kdinv(&[
        "perfect", "--family", "cycle", "--n", "12", "--k", "2", "--d", "3",
    ]);
    assert!(stdout(&o).contains("perfect=true"), "{}", stdout(&o));
    let o = kdinv(&[
        "perfect", "--family", "cycle", "--n", "7", "--k", "3", "--d", "3", "--brute", "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["perfect"], false);
    assert_eq!(v["counterexample"]["chi"], 3);
    let o = kdinv(&["table", "--d-max", "6", "--n-max", "20"]);
    assert!(
        stdout(&o).contains("| 6 | {7, 10, 11, 13, 17} |"),
        "{}",
        stdout(&o)
    );
    let o = kdinv(&[
        "table", "--d-min", "2", "--d-max", "2", "--n-max", "5", "--format", "csv",
    ]);
    assert_eq!(stdout(&o), "d,n,perfect\n2,3,true\n2,4,true\n2,5,true\n");
}

#[test]
fn verify_cross_checks_pass() {
    let o = kdinv(&["verify", "--families", "paths,cycles", "--n-max", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verify: pass"));
    let o = kdinv(&["verify", "--powers", "--n-max", "12", "--ell-max", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = kdinv(&["verify", "--corpus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

/// The embedded table disagrees with the classifier on small cycles for d >= 3;
/// `verify` must report each such entry and fail.
#[test]
fn verify_table_reports_mismatches() {
    let o = kdinv(&[
        "verify", "--table", "three-d", "--d-max", "10", "--n-max", "49",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(
        out.contains("FAIL table three-d d=3 C_7: expected perfect, got not perfect"),
        "{out}"
    );
    assert!(
        out.contains("verify: fail (423 checks, 45 failed)"),
        "{out}"
    );
    let o = kdinv(&[
        "verify", "--table", "three-d", "--d-max", "2", "--n-max", "49",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_fault_injection() {
    let dir = tempfile::tempdir().unwrap();
    let honest = write(&dir, "honest.txt", "2 all\n");
    let o = kdinv(&[
        "verify", "--table", "three-d", "--d-max", "2", "--n-max", "30", "--golden", &honest,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let corrupted = write(&dir, "bad.txt", "2 except 19\n");
    let o = kdinv(&[
        "verify", "--table", "three-d", "--d-max", "2", "--n-max", "30", "--golden", &corrupted,
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(
        out.contains("FAIL table three-d d=2 C_19: expected not perfect, got perfect"),
        "{out}"
    );
    assert!(out.contains("verify: fail (28 checks, 1 failed)"), "{out}");
}

#[test]
fn corpus_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (i, g) in default_corpus().iter().enumerate() {
        let p = dir.path().join(format!("g{i}.txt"));
        std::fs::write(&p, render_graph(g)).unwrap();
        assert_eq!(&parse_graph_file(&p).unwrap(), g, "graph {i}");
    }
    let g = parse_graph_file(&fixture("fixture8.txt")).unwrap();
    assert_eq!(g, kdinv::catalogue::fixture8());
}
