use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    bin(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(bin(args).stdout).unwrap()
}

#[test]
fn formula() {
    assert_eq!(
        stdout(&["formula", "--pattern", "2P4", "--n", "8"]).trim(),
        "16 (kp4-spanning, proven)"
    );
    assert_eq!(code(&["formula", "--pattern", "3P2", "--n", "6"]), 0);
    assert_eq!(code(&["formula", "--pattern", "P4+P2", "--n", "4"]), 4);
    assert_eq!(code(&["formula", "--pattern", "K4+2P2", "--n", "9"]), 4);
    let out = stdout(&[
        "formula",
        "--pattern",
        "3P2",
        "--n",
        "6",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["value"], 6);
    assert_eq!(v["result"]["status"], "proven");
}

#[test]
fn usage_errors() {
    assert_eq!(
        code(&["formula", "--pattern", "P4", "--n", "5", "--frobnicate"]),
        2
    );
    assert_eq!(code(&["nonsense"]), 2);
    let out = bin(&["formula", "--pattern", "P1", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("P1"));
    assert_eq!(code(&["formula", "--pattern", "2X", "--n", "5"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn construct_and_detect() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.txt");
    let f = file.to_str().unwrap();
    assert_eq!(
        code(&["construct", "--pattern", "2P4", "--n", "8", "--out", f]),
        0
    );
    assert_eq!(code(&["detect", "--coloring", f, "--pattern", "2P4"]), 3);
    let out = bin(&["detect", "--coloring", f, "--pattern", "P4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("rainbow P4: "));
    assert_eq!(
        code(&[
            "detect",
            "--coloring",
            f,
            "--pattern",
            "2P4",
            "--budget",
            "3"
        ]),
        7
    );
    assert_eq!(
        code(&["construct", "--pattern", "K5", "--n", "9", "--out", f]),
        5
    );
    assert_eq!(
        code(&["construct", "--pattern", "7P2", "--n", "14", "--out", f]),
        5
    );
    let flag = [
        "construct",
        "--pattern",
        "7P2",
        "--n",
        "14",
        "--out",
        f,
        "--spanning-two-colors",
    ];
    assert_eq!(code(&flag), 7);
    assert_eq!(code(&[&flag[..], &["--verify-bound", "14"]].concat()), 0);
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        code(&[
            "detect",
            "--coloring",
            missing.to_str().unwrap(),
            "--pattern",
            "P4"
        ]),
        1
    );
    std::fs::write(&file, "antiramsey-coloring v1\nn 3 colors 1\n0 1 0\n").unwrap();
    assert_eq!(code(&["detect", "--coloring", f, "--pattern", "P3"]), 2);
}

#[test]
fn search() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.txt");
    let f = file.to_str().unwrap();
    let out = stdout(&["search", "--pattern", "3P2", "--n", "6", "--out", f]);
    assert!(out.starts_with("AR(6, 3P2) = 6 (exhausted)"), "{out}");
    let w = antiramsey::cli::read_coloring(&file).unwrap();
    assert_eq!(w.color_count(), 6);
    assert_eq!(
        code(&["search", "--pattern", "P4", "--n", "4", "--at-least", "4"]),
        0
    );
    assert!(
        stdout(&["search", "--pattern", "P4", "--n", "4", "--at-least", "4"]).contains("refuted")
    );
    assert_eq!(
        code(&["search", "--pattern", "3P2", "--n", "7", "--budget", "5"]),
        7
    );
    assert_eq!(
        code(&[
            "search",
            "--pattern",
            "3P2",
            "--n",
            "7",
            "--at-least",
            "8",
            "--budget",
            "5"
        ]),
        7
    );
    assert_eq!(code(&["search", "--pattern", "P4", "--n", "11"]), 2);
    let out = stdout(&[
        "search",
        "--pattern",
        "P4",
        "--n",
        "5",
        "--tasks",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["value"], 2);
    assert_eq!(v["result"]["exhausted"], true);
}

#[test]
fn verify() {
    assert_eq!(
        stdout(&["verify", "--pattern", "P4", "--n", "4"]).trim(),
        "agree: formula 3, search 3, construction 3"
    );
    let out = bin(&["verify", "--pattern", "C3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(8));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("mismatch: formula 4, search 3"), "{text}");
    assert_eq!(
        code(&[
            "verify",
            "--pattern",
            "C3",
            "--n",
            "4",
            "--cycle-mode",
            "oracle-corrected"
        ]),
        0
    );
    assert_eq!(code(&["verify", "--pattern", "3P2", "--n", "7"]), 0);
    assert_eq!(
        code(&["verify", "--pattern", "3P2", "--n", "7", "--budget", "5"]),
        7
    );
}

#[test]
fn table() {
    let out = stdout(&["table", "--family", "kp4tp2", "--max-n", "8"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tpattern\tvalue\tstatus\tprovenance");
    assert!(lines.contains(&"8\t2P4\t16\tproven\tkp4-spanning"));
    assert!(lines.contains(&"6\tP4+P2\t6\tproven\tp4-reduction"));
    for family in ["matching", "kp3tp2", "p5tp2"] {
        assert_eq!(code(&["table", "--family", family, "--max-n", "12"]), 0);
    }
    assert_eq!(code(&["table", "--family", "stars", "--max-n", "12"]), 2);
}
