use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_paintability"))
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
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_examples() {
    let o = run(
        &[
            "solve",
            "--family",
            "cycle:5",
            "--f",
            "uniform:2",
            "--variant",
            "exact:5",
        ],
        "",
    );
    assert_eq!(
        (o.status.code(), stdout(&o).trim()),
        (Some(0), r#"{"verdict":"ListerWins"}"#)
    );
    let o = run(
        &[
            "solve",
            "--family",
            "k2n:4",
            "--f",
            "uniform:2",
            "--compute",
            "M",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), r#"{"M":7}"#);
    let o = run(
        &[
            "solve",
            "--family",
            "path:3",
            "--f",
            "fdoubleprime",
            "--compute",
            "q",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), r#"{"q":2}"#);
    let o = run(
        &[
            "solve",
            "--family",
            "theta:2,2,4",
            "--compute",
            "m",
            "--output",
            "text",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), "m = 3");
}

#[test]
fn graphs_from_stdin_and_files() {
    let o = run(&["solve", "--graph6", "-", "--compute", "q"], "Bw\n\nCr\n");
    assert_eq!(
        stdout(&o).lines().collect::<Vec<_>>(),
        [
            r#"{"graph6":"Bw","q":3}"#,
            r#"{"graph6":"Cr","q":"Survives"}"#
        ]
    );
    let dir = std::env::temp_dir().join(format!("paintability-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("k4.txt");
    std::fs::write(&edges, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let o = run(
        &["solve", "--file", edges.to_str().unwrap(), "--compute", "M"],
        "",
    );
    assert_eq!(stdout(&o).trim(), r#"{"M":5}"#);
    let budget = dir.join("f.txt");
    std::fs::write(&budget, "0 1\n1 1\n").unwrap();
    let o = run(
        &[
            "solve",
            "--family",
            "path:2",
            "--f",
            budget.to_str().unwrap(),
            "--compute",
            "q",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), r#"{"q":1}"#);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve"], "").status.code(), Some(64));
    assert_eq!(
        run(&["solve", "--family", "cycle:5", "--variant", "weird"], "")
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run(&["solve", "--family", "cycle:5", "--compute", "x"], "")
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run(&["verify", "no-such-suite"], "").status.code(),
        Some(64)
    );
    assert_eq!(
        run(&["solve", "--family", "cycle:2"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["solve", "--family", "cycle:11"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["solve", "--family", "cycle:5", "--max-n", "20"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["scan", "--nmax", "7"], "").status.code(), Some(2));
    let big = run(
        &[
            "solve",
            "--family",
            "cycle:11",
            "--max-n",
            "11",
            "--i-know-this-is-big",
        ],
        "",
    );
    assert_eq!(big.status.code(), Some(0));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn verify_reports_json_lines() {
    let o = run(&["verify", "cycle-theorem"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 27);
    for l in &lines {
        for key in ["graph6", "n", "classifier", "solver", "match"] {
            assert!(l.get(key).is_some(), "{l}");
        }
        assert_eq!(l["match"], true);
    }
    let o = run(
        &["verify", "m-theorem", "--nmax", "5", "--output", "text"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 mismatches"));
}

#[test]
fn scan_rows() {
    let o = run(&["scan", "--nmax", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 1 + 1 + 2 + 6 + 21);
    assert!(rows.iter().all(|r| r["contiguous"] == true));
    let o = run(
        &[
            "scan",
            "--nmax",
            "4",
            "--family-only",
            "theta",
            "--output",
            "text",
        ],
        "",
    );
    assert!(stdout(&o).contains("lister_wins=[2, 3, 4, 5]"));
    assert!(stdout(&o).contains("all contiguous up to n = 4"));
}

#[test]
fn play_as_painter_on_c4() {
    let o = run(
        &[
            "play",
            "--graph6",
            "Cr",
            "--variant",
            "exact:2",
            "--role",
            "painter",
        ],
        "0 1\n1 2\n0 3\n",
    );
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("illegal: response is not independent"));
    assert!(text.contains("verdict=PainterWins"));
}

#[test]
fn play_as_lister_and_abort() {
    let o = run(
        &[
            "play",
            "--family",
            "cycle:3",
            "--variant",
            "exact:3",
            "--role",
            "lister",
        ],
        "0 1 2\n",
    );
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("session aborted"));
    assert!(text.contains("1 | V=0,1,2"));
    assert!(text.contains("verdict=aborted"));
}
