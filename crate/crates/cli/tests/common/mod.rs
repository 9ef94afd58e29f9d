#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};

pub const DOUBLE_STAR: &str = "tree 6\nedge 1 2\nedge 1 3\nedge 1 4\nedge 2 5\nedge 2 6\n";
pub const PATH5: &str = "tree 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\n";
pub const PATH4: &str = "tree 4\nedge 1 2\nedge 2 3\nedge 3 4\n";
/// An edge with two legs of two edges each at vertex 1.
pub const LEGS: &str = "tree 6\nedge 1 2\nedge 1 3\nedge 3 4\nedge 1 5\nedge 5 6\n";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Run {
    pub fn text(&self) -> String {
        String::from_utf8(self.stdout.clone()).expect("utf-8 output")
    }
}

pub fn treegf(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treegf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// One end-to-end expectation: arguments, standard input, exit status and
/// a fragment that must appear on stdout (exit 0 or 3) or stderr (exit 2).
pub struct Case {
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub code: i32,
    pub needle: &'static str,
}

const fn case(args: &'static [&'static str], stdin: &'static str, code: i32, needle: &'static str) -> Case {
    Case { args, stdin, code, needle }
}

pub fn matrix() -> Vec<Case> {
    vec![
        case(&["count"], PATH5, 0, r#"{"count":"15"}"#),
        case(&["count", "--format", "text"], DOUBLE_STAR, 0, "28\n"),
        case(&["count"], "tree 2\nedge 1 2 x\nvertex 1 3\n", 0, r#"{"count":"7"}"#),
        case(&["gf", "--vars", "edge", "--format", "text"], DOUBLE_STAR, 0, "x^5 + 4x^4 + 6x^3 + 6x^2 + 5x + 6"),
        case(
            &["gf", "--vars", "edge"],
            DOUBLE_STAR,
            0,
            r#"{"terms":[{"x":0,"y":0,"c":"6"},{"x":1,"y":0,"c":"5"},{"x":2,"y":0,"c":"6"},{"x":3,"y":0,"c":"6"},{"x":4,"y":0,"c":"4"},{"x":5,"y":0,"c":"1"}]}"#,
        ),
        case(&["gf", "--vars", "vertex", "--format", "text"], DOUBLE_STAR, 0, "y^6 + 4y^5 + 6y^4 + 6y^3 + 5y^2 + 6y"),
        case(&["gf", "--vars", "none"], PATH5, 0, r#"{"terms":[{"x":0,"y":0,"c":"15"}]}"#),
        case(&["gf"], "tree 1\n", 0, r#"{"terms":[{"x":0,"y":1,"c":"1"}]}"#),
        case(&["rooted", "--vertex", "1", "--vars", "edge", "--format", "text"], DOUBLE_STAR, 0, "x^5 + 4x^4 + 6x^3 + 5x^2 + 3x + 1"),
        case(&["rooted", "--vertex", "7"], DOUBLE_STAR, 2, "out of range"),
        case(&["pair", "--u", "3", "--v", "2", "--vars", "edge", "--format", "text"], DOUBLE_STAR, 0, "x^5 + 3x^4 + 3x^3 + x^2"),
        case(&["pair", "--u", "1", "--v", "1"], DOUBLE_STAR, 2, "vertices must be distinct"),
        case(&["profile"], DOUBLE_STAR, 0, r#"{"a":["6","5","6","6","4","1"],"b":["0","6","5","6","6","4","1"]}"#),
        case(&["profile", "--vertex", "1", "--format", "text"], DOUBLE_STAR, 0, "3\t6\t5\n"),
        case(&["profile", "--u", "3", "--v", "2"], DOUBLE_STAR, 0, r#""a":["0","0","1","3","3","1"]"#),
        case(&["count"], "", 2, "line 1: missing `tree <n>` line"),
        case(&["count"], "tree 3\nedge 1 2\nedge 1 2\n", 2, "line 3: not a tree: duplicate edge"),
        case(&["count"], "tree 3\nedge 1 2\nedge 2 9\n", 2, "line 3: vertex 9 is out of range"),
        case(&["count"], "tree 2\nedge 1 2 q\n", 2, "line 2: weight must be"),
        case(&["count", "/nonexistent/file.tree"], "", 2, "cannot read"),
        case(&["count", "--format", "xml"], PATH5, 2, "invalid value"),
        case(&["bogus"], "", 2, "unrecognized subcommand"),
        case(&["family", "--kind", "path", "--n", "1"], "", 0, "tree 1\n"),
        case(&["family", "--kind", "star", "--n", "4"], "", 0, "tree 4\nedge 1 2\nedge 1 3\nedge 1 4\n"),
        case(&["family", "--kind", "broom", "--n", "6", "--delta", "3"], "", 0, "tree 6\n"),
        case(&["family", "--kind", "caterpillar", "--d", "3", "--i", "1", "--ks", "1,0,2"], "", 0, "tree 7\n"),
        case(&["family", "--kind", "spider", "--n", "7", "--s", "2", "--t", "3"], "", 0, "tree 7\n"),
        case(&["family", "--kind", "bnd", "--n", "7", "--d", "3"], "", 2, "B(n,d) needs"),
        case(&["family", "--kind", "tnd", "--n", "8"], "", 2, "needs --d"),
        case(&["transform", "--phi", "1", "--u", "2", "--branch", "3"], PATH4, 0, r#""chi_before":"10","chi_after":"11","relation":"STRICT_LT""#),
        case(&["transform", "--phi", "2", "--u", "1", "--branch", "2"], DOUBLE_STAR, 0, r#""relation":"STRICT_GT""#),
        case(&["transform", "--phi", "2", "--u", "1", "--branch", "2,3"], DOUBLE_STAR, 0, "tree 6\n"),
        case(&["transform", "--phi", "3", "--d", "3", "--i", "1", "--ks", "1,1,0"], "", 0, r#""relation":"STRICT_LT""#),
        case(&["transform", "--phi", "3", "--d", "3", "--i", "3", "--ks", "1"], "", 2, "i <= (d+1)/2"),
        case(&["transform", "--phi", "4", "--u", "1", "--leg1", "4", "--leg2", "6"], LEGS, 0, r#""relation":"STRICT_GT""#),
        case(&["transform", "--phi", "4", "--u", "1", "--leg1", "2", "--leg2", "6"], LEGS, 2, "at least 2"),
        case(&["transform", "--phi", "1", "--u", "2", "--branch", "4"], PATH4, 2, "not a neighbor"),
        case(&["transform", "--phi", "1", "--u", "2"], PATH4, 2, "needs --branch"),
        case(&["transform", "--phi", "5"], PATH4, 2, "invalid value"),
        case(&["verify", "--check", "theorem11", "--n", "7"], "", 0, r#""trees_examined":11,"result":"pass""#),
        case(&["verify", "--check", "cor39", "--n", "8"], "", 0, r#""count":"135"},{"role":"T(n,3)""#),
        case(&["verify", "--check", "theorem36", "--n", "8", "--delta", "3"], "", 0, r#""result":"pass""#),
        case(&["verify", "--check", "theorem37", "--n", "8", "--d", "4"], "", 0, r#""count":"81""#),
        case(&["verify", "--check", "theorem37", "--n", "8", "--d", "4", "--attach", "1"], "", 3, r#""result":"fail""#),
        case(&["verify", "--check", "oracle", "--n", "6"], "", 0, r#""result":"pass""#),
        case(&["verify", "--check", "closedforms", "--n", "20"], "", 0, r#""result":"pass""#),
        case(&["verify", "--check", "confluence", "--n", "6", "--seed", "3"], "", 0, r#""result":"pass""#),
        case(&["verify", "--check", "oracle", "--n", "12"], "", 2, "capped at n = 9"),
        case(&["verify", "--check", "theorem11", "--n", "11"], "", 2, "capped"),
        case(&["verify", "--check", "cor39", "--n", "7"], "", 2, "n >= 8"),
        case(&["verify", "--check", "theorem36", "--n", "8", "--delta", "2"], "", 2, "3..=7"),
        case(&["verify", "--check", "theorem11"], "", 2, "--n"),
    ]
}

/// Runs every case twice; returns a description of each violation.
pub fn check_matrix() -> Vec<String> {
    let mut problems = Vec::new();
    for c in matrix() {
        let first = treegf(c.args, c.stdin);
        let second = treegf(c.args, c.stdin);
        let label = c.args.join(" ");
        if first.code != c.code {
            problems.push(format!("{label}: exit {} (want {}), stderr {:?}", first.code, c.code, first.stderr));
            continue;
        }
        let haystack = if c.code == 2 { first.stderr.clone() } else { first.text() };
        if !haystack.contains(c.needle) {
            problems.push(format!("{label}: {:?} not found in {haystack:?}", c.needle));
        }
        if c.code == 2 && !first.stdout.is_empty() {
            problems.push(format!("{label}: wrote to stdout on error"));
        }
        if first != second {
            problems.push(format!("{label}: reruns differ"));
        }
    }
    problems
}
