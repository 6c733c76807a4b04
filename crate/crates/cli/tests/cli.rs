use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linforest"))
        .args(args)
        .env_remove("LINF_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn linforest");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn h_10_5_3() -> String {
    let o = run(
        &[
            "construct",
            "--family",
            "H",
            "--n",
            "10",
            "--k",
            "5",
            "--m",
            "3",
        ],
        "",
    );
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn lf_lines() {
    let o = run(&["lf"], "Bw\n?\n");
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert!(lines[0].starts_with("lf=2 witness="));
    assert_eq!(lines[1], "lf=0 witness=");

    let o = run(&["lf"], &h_10_5_3());
    assert!(stdout(&o).starts_with("lf=4 "));
}

#[test]
fn lf_reports_bad_lines_and_continues() {
    let o = run(&["lf"], "A_\nA!\nBw\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn lf_cap_exceeded() {
    let o = run(&["lf", "--cap", "4"], "D??\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn count_and_formula() {
    let o = run(&["count", "clique-star", "1", "2"], &h_10_5_3());
    assert_eq!(stdout(&o).trim(), "80");
    let o = run(&["count", "clique", "2"], &h_10_5_3());
    assert_eq!(stdout(&o).trim(), "17");
    let o = run(&["formula", "ex-cliques-linforest", "100", "5", "3"], "");
    assert_eq!(stdout(&o).trim(), "98");
    let o = run(&["formula", "ex-cliques-linforest", "3", "5", "3"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["formula", "no-such-formula", "1"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn biclique_count_needs_parts() {
    let g = run(
        &[
            "construct",
            "--family",
            "gstar",
            "--n",
            "4",
            "--kceil",
            "2",
            "--x",
            "1",
        ],
        "",
    );
    let line = stdout(&g);
    let g6 = line.split_whitespace().next().unwrap().to_string();
    let o = run(&["count", "biclique", "1", "1", "--parts", "4"], &g6);
    assert_eq!(stdout(&o).trim(), "7");
    let o = run(&["count", "biclique", "1", "1"], &g6);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["count", "biclique", "1", "1", "--parts", "3"], &g6);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn shift_once_and_to_fixpoint() {
    // {2,3} on three vertices
    let o = run(&["shift", "--i", "1", "--j", "2", "--edges"], "BG\n");
    assert_eq!(stdout(&o).trim(), "BO edges=1-3");
    // star centred at 5
    let star = "D?{\n";
    let o = run(&["shift", "--fixpoint", "--edges"], star);
    assert!(
        stdout(&o).trim().ends_with("edges=1-2,1-3,1-4,1-5"),
        "{}",
        stdout(&o)
    );
    let o = run(&["shift", "--i", "2", "--j", "2"], "BG\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_check() {
    let o = run(
        &[
            "construct",
            "--family",
            "H",
            "--n",
            "10",
            "--k",
            "5",
            "--m",
            "3",
            "--check",
        ],
        "",
    );
    let out = stdout(&o);
    assert!(out.contains("lf=4"));
    assert!(out.contains("K_2=17 closed-form=17 equal=true"));
    let o = run(
        &["construct", "--family", "clique", "--n", "6", "--k", "3"],
        "",
    );
    assert_eq!(stdout(&o).trim(), "Ew??");
    let o = run(
        &[
            "construct",
            "--family",
            "gstar",
            "--n",
            "4",
            "--kceil",
            "2",
            "--x",
            "1",
            "--check",
        ],
        "",
    );
    assert!(stdout(&o).contains("edges=7 closed-form=7 equal=true"));
    let o = run(
        &[
            "construct",
            "--family",
            "H",
            "--n",
            "10",
            "--k",
            "5",
            "--m",
            "2",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["construct", "--family", "H", "--n", "10", "--k", "5"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_edges_passes() {
    let dir = std::env::temp_dir().join(format!("linforest-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("edges.csv");
    let o = run(
        &[
            "verify",
            "edges",
            "--n-max",
            "6",
            "--out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = text.lines().filter(|l| l.starts_with("edges,")).count();
    assert_eq!(rows, 15);
    let rep = linforest::report::VerificationReport::from_csv(&text).unwrap();
    assert!(rep.passed());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "cliques", "--n-max", "6", "--s", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = run(
        &["verify", "edges", "--n-max", "6", "--k-range", "1..8"],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(
        &[
            "verify",
            "edges",
            "--n-max",
            "8",
            "--n-min",
            "8",
            "--k-range",
            "1..1",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(3));
    let o = run(
        &[
            "verify",
            "bipartite",
            "--n-max",
            "3",
            "--s",
            "1",
            "--t",
            "1",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    let o = run(
        &[
            "verify",
            "bipartite",
            "--n-max",
            "3",
            "--mode",
            "shifted-only",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "nonsense", "--n-max", "3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extremal_single_tuple() {
    let o = run(
        &[
            "extremal",
            "--n",
            "5",
            "--k",
            "3",
            "--pattern",
            "clique",
            "--s",
            "2",
        ],
        "",
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle=4 formula=4 match=true"));
    let o = run(
        &[
            "extremal",
            "--n",
            "6",
            "--k",
            "3",
            "--pattern",
            "clique",
            "--s",
            "3",
            "--mode",
            "shifted-only",
        ],
        "",
    );
    assert!(stdout(&o).contains("oracle=1"));
    let o = run(
        &[
            "extremal",
            "--n",
            "5",
            "--k",
            "2",
            "--pattern",
            "clique",
            "--s",
            "2",
            "--matching",
        ],
        "",
    );
    assert!(stdout(&o).contains("oracle=10 formula=10"));
}

#[test]
fn thread_flag_and_env() {
    let o = run(
        &[
            "--threads",
            "2",
            "extremal",
            "--n",
            "5",
            "--k",
            "3",
            "--pattern",
            "clique",
            "--s",
            "2",
        ],
        "",
    );
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_linforest"))
        .args(["formula", "ex-edges-linforest", "5", "3"])
        .env("LINF_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = run(
        &["--threads", "0", "formula", "ex-edges-linforest", "5", "3"],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
}
