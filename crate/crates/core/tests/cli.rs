use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn tracederiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tracederiv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn alphabet_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn derive_along_bb_under_t1() {
    let ab = alphabet_file("letters: a b\nindep: a b\n");
    let o = tracederiv(&[
        "derive", "--alphabet", path(&ab), "--expr", "(aa+ab+b)*", "--word", "bb", "--engine", "brzozowski-reorder",
        "--normalize", "t1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(aa)*(a+1)(aa)*(a+1)(aa+ab+b)*");
}

#[test]
fn member_and_parts() {
    let o = tracederiv(&["member", "--expr", "(ab)*", "--word", "ba", "--engine", "refined", "--bound", "3"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = tracederiv(&["parts", "--expr", "aa+ab+b", "--letter", "b", "--engine", "antimirov-reorder"]);
    assert_eq!(stdout(&o).trim(), "a1, 1");
}

#[test]
fn member_engines_agree_with_and_without_independence() {
    let ab = alphabet_file("letters: a b\nindep: a b\n");
    let dep = alphabet_file("letters: a b\nindep:\n");
    for engine in ["brzozowski-reorder", "antimirov-reorder", "refined", "oracle"] {
        let o = tracederiv(&["member", "--alphabet", path(&ab), "--expr", "(ab)*", "--word", "baab", "--engine", engine]);
        assert_eq!(stdout(&o).trim(), "true", "{engine}");
        let o = tracederiv(&["member", "--alphabet", path(&dep), "--expr", "(ab)*", "--word", "baab", "--engine", engine]);
        assert_eq!(stdout(&o).trim(), "false", "{engine}");
    }
    for engine in ["brzozowski", "antimirov"] {
        let o = tracederiv(&["member", "--alphabet", path(&ab), "--expr", "(ab)*", "--word", "baab", "--engine", engine]);
        assert_eq!(stdout(&o).trim(), "false", "{engine}");
    }
}

#[test]
fn every_subcommand_speaks_json() {
    let ab = alphabet_file("letters: a b\nindep: a b\n");
    let al = path(&ab);
    for engine in ["brzozowski", "antimirov", "brzozowski-reorder", "antimirov-reorder", "refined", "oracle"] {
        let v = json(&tracederiv(&["derive", "--alphabet", al, "--expr", "(ab)*", "--word", "b", "--engine", engine, "--json"]));
        assert_eq!(v["expr"], "(ab)*");
        assert_eq!(v["word"], "b");
        assert!(v["results"].is_array(), "{engine}");
        let v = json(&tracederiv(&["parts", "--alphabet", al, "--expr", "(ab)*", "--letter", "a", "--engine", engine, "--json"]));
        assert!(v["results"].is_array(), "{engine}");
        let v = json(&tracederiv(&["member", "--alphabet", al, "--expr", "(ab)*", "--word", "ba", "--engine", engine, "--json"]));
        assert!(v["member"].is_boolean(), "{engine}");
        let v = json(&tracederiv(&["build", "--alphabet", al, "--expr", "(ab)*", "--engine", engine, "--normalize", "t1", "--json"]));
        assert!(v["states"].as_array().is_some_and(|s| !s.is_empty()), "{engine}");
        assert!(v["transitions"].is_array(), "{engine}");
    }

    let v = json(&tracederiv(&["refine", "--alphabet", al, "--expr", "(aa+ab+b)*", "--letter", "b", "--json"]));
    assert!(!v["splits"].as_array().unwrap().is_empty());
    assert!(v["splits"][0]["left"].is_string());
    let v = json(&tracederiv(&["refine", "--alphabet", al, "--expr", "(aa+ab+b)*", "--word", "bb", "--bound", "2", "--json"]));
    assert!(!v["results"].as_array().unwrap().is_empty());

    let v = json(&tracederiv(&["analyze", "--alphabet", al, "--expr", "a*b*", "--json"]));
    assert_eq!(v["star_connected"], true);
    assert_eq!(v["language_connected"], false);

    let v = json(&tracederiv(&["rank", "--alphabet", al, "--expr", "(ab)*(a*+b*)", "--bound", "3", "--json"]));
    assert_eq!(v["outcome"], "refuted");
    assert!(v["counterexample"]["word"].is_string());

    let v = json(&tracederiv(&["oracle", "--alphabet", al, "--expr", "ab", "--max-len", "3", "--json"]));
    assert_eq!(v["language"], serde_json::json!(["ab"]));
    assert_eq!(v["closure"], serde_json::json!(["ab", "ba"]));
}

#[test]
fn refined_lists_along_bb() {
    let ab = alphabet_file("letters: a b\nindep: a b\n");
    let o = tracederiv(&["refine", "--alphabet", path(&ab), "--expr", "(aa+ab+b)*", "--word", "bb", "--bound", "2"]);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "[(aa+a0+0)*(a1), 1((aa+a0+0)*(a1)), 1(aa+ab+b)*]"), "{out}");
}

#[test]
fn dot_export_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("m.dot");
    let o = tracederiv(&[
        "build", "--expr", "a*b*", "--engine", "antimirov-reorder", "--normalize", "t1", "--dot",
        target.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("complete: true"));
    let dot = std::fs::read_to_string(&target).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("doublecircle"));
}

#[test]
fn exit_codes() {
    // negative results only matter under --strict
    let o = tracederiv(&["member", "--expr", "(ab)*", "--word", "aab"]);
    assert_eq!(o.status.code(), Some(0));
    let o = tracederiv(&["member", "--expr", "(ab)*", "--word", "aab", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
    let o = tracederiv(&["member", "--expr", "(ab)*", "--word", "abab", "--strict"]);
    assert_eq!(o.status.code(), Some(0));
    let o = tracederiv(&["analyze", "--expr", "(aa+ab+ba+bb)*", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
    let o = tracederiv(&["build", "--expr", "(ab)*", "--engine", "brzozowski-reorder", "--normalize", "t1", "--budget", "5", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_name_the_flag() {
    let ab = alphabet_file("letters: a b\nindep: a b\n");
    let cases: [(&[&str], &str); 6] = [
        (&["member", "--expr", "(ab", "--word", "a"], "--expr"),
        (&["member", "--alphabet", path(&ab), "--expr", "ac", "--word", "a"], "--expr"),
        (&["member", "--alphabet", path(&ab), "--expr", "ab", "--word", "ca"], "--word"),
        (&["derive", "--expr", "a", "--engine", "antimirov", "--bound", "2"], "--bound"),
        (&["parts", "--expr", "ab", "--letter", "ab"], "--letter"),
        (&["oracle", "--expr", "ab", "--max-len", "40"], "--max-len"),
    ];
    for (args, flag) in cases {
        let o = tracederiv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(flag), "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty());
    }

    let missing = tracederiv(&["member", "--alphabet", "/nonexistent/alphabet", "--expr", "a"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("--alphabet"));
    let bad = alphabet_file("letters: a b\nindep: a a\n");
    let o = tracederiv(&["member", "--alphabet", path(&bad), "--expr", "a"]);
    assert_eq!(o.status.code(), Some(2));

    let o = tracederiv(&["derive", "--expr", "a", "--engine", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tracederiv(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}
