//! End-to-end subcommand behavior through the compiled binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const SIX_POINT_PREORDER: &str = "\
points: p1 p2 p3 p4 p5 p6
p4 <= p6
p4 <= p3
p6 <= p5
p3 <= p1
p1 <= p2
p5 <= p2
";

const SIX_POINT_TOPOLOGY: &str = "\
topology over: p1 p2 p3 p4 p5 p6
0
p4
p3 p4
p4 p6
p1 p3 p4
p3 p4 p6
p4 p5 p6
p1 p3 p4 p6
p3 p4 p5 p6
p1 p3 p4 p5 p6
p1 p2 p3 p4 p5 p6
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pointtopo"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin handle")
        .write_all(input.as_bytes())
        .expect("stdin write");
    child.wait_with_output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn write_file(dir: &TempDir, name: &str, content: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, content).expect("write test file");
    path.to_str().expect("utf-8 path").to_owned()
}

#[test]
fn from_preorder_builds_the_six_point_topology() {
    let dir = TempDir::new().unwrap();
    let pre = write_file(&dir, "example.pre", SIX_POINT_PREORDER);
    let output = run(&["from-preorder", &pre]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), SIX_POINT_TOPOLOGY);
}

#[test]
fn check_reports_each_requested_property() {
    let dir = TempDir::new().unwrap();
    let topo = write_file(&dir, "example.topo", SIX_POINT_TOPOLOGY);
    let output = run(&["check", "--t0", &topo]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "T0: true\n");
    let output = run(&["check", "--t1", "--connected", &topo]);
    assert_eq!(code(&output), 1);
    assert_eq!(stdout(&output), "T1: false\nconnected: true\n");
    let output = run(&["check", "--t0", "--t1", "--discrete", "--connected", &topo]);
    assert_eq!(code(&output), 1);
    assert_eq!(
        stdout(&output),
        "T0: true\nT1: false\ndiscrete: false\nconnected: true\n"
    );
}

#[test]
fn minimal_opens_lists_points_in_label_order() {
    let dir = TempDir::new().unwrap();
    let topo = write_file(&dir, "example.topo", SIX_POINT_TOPOLOGY);
    let output = run(&["minimal-opens", &topo]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "\
p1: {p1,p3,p4}
p2: {p1,p2,p3,p4,p5,p6}
p3: {p3,p4}
p4: {p4}
p5: {p4,p5,p6}
p6: {p4,p6}
"
    );
}

#[test]
fn basis_prints_canonical_elements() {
    let dir = TempDir::new().unwrap();
    let topo = write_file(&dir, "example.topo", SIX_POINT_TOPOLOGY);
    let output = run(&["basis", &topo]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "\
0
{p4}
{p3,p4}
{p4,p6}
{p1,p3,p4}
{p4,p5,p6}
{p1,p2,p3,p4,p5,p6}
"
    );
}

#[test]
fn hasse_prints_covering_edges() {
    let dir = TempDir::new().unwrap();
    let topo = write_file(&dir, "example.topo", SIX_POINT_TOPOLOGY);
    let output = run(&["hasse", &topo]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "\
classes: p1 p2 p3 p4 p5 p6
p1 < p2
p3 < p1
p4 < p3
p4 < p6
p5 < p2
p6 < p5
"
    );
    let output = run(&["hasse", "--dot", &topo]);
    assert_eq!(code(&output), 0);
    let dot = stdout(&output);
    assert!(dot.starts_with("digraph hasse {\n  rankdir=BT;\n"), "{dot}");
    assert!(dot.ends_with("}\n"), "{dot}");
    assert_eq!(dot.matches(" -> ").count(), 6, "{dot}");
    assert!(dot.contains("\"p4\" -> \"p3\";"), "{dot}");
}

#[test]
fn to_preorder_emits_the_closed_relation() {
    let dir = TempDir::new().unwrap();
    let topo = write_file(&dir, "example.topo", SIX_POINT_TOPOLOGY);
    let output = run(&["to-preorder", &topo]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "\
points: p1 p2 p3 p4 p5 p6
p1 <= p1
p1 <= p2
p2 <= p2
p3 <= p1
p3 <= p2
p3 <= p3
p4 <= p1
p4 <= p2
p4 <= p3
p4 <= p4
p4 <= p5
p4 <= p6
p5 <= p2
p5 <= p5
p6 <= p2
p6 <= p5
p6 <= p6
"
    );
}

#[test]
fn preorder_roundtrip_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let pre = write_file(&dir, "example.pre", SIX_POINT_PREORDER);
    let topo_text = stdout(&run(&["from-preorder", &pre]));
    let closed = stdout(&run_with_stdin(&["to-preorder", "-"], &topo_text));
    let topo_again = stdout(&run_with_stdin(&["from-preorder", "-"], &closed));
    assert_eq!(topo_again, topo_text);
    let closed_again = stdout(&run_with_stdin(&["to-preorder", "-"], &topo_again));
    assert_eq!(closed_again, closed);
}

#[test]
fn strict_mode_rejects_unclosed_files() {
    let dir = TempDir::new().unwrap();
    let pre = write_file(&dir, "example.pre", SIX_POINT_PREORDER);
    let output = run(&["from-preorder", "--strict", &pre]);
    assert_eq!(code(&output), 2);
    assert!(stderr(&output).contains("reflexive"), "{}", stderr(&output));
}

#[test]
fn validate_reports_axioms() {
    let dir = TempDir::new().unwrap();
    let good = write_file(&dir, "good.topo", SIX_POINT_TOPOLOGY);
    let output = run(&["validate", &good]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "empty part: present\nfull part: present\nunion closure: ok\nintersection closure: ok\n"
    );
    let bad = write_file(&dir, "bad.topo", "topology over: a b\n0\na\nb\n");
    let output = run(&["validate", &bad]);
    assert_eq!(code(&output), 1);
    let report = stdout(&output);
    assert!(report.contains("full part: missing"), "{report}");
    assert!(
        report.contains("union closure: missing union of {a} and {b}"),
        "{report}"
    );
}

#[test]
fn enumerate_counts_and_lists() {
    let output = run(&["enumerate", "-n", "3", "--count-only"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "29\n");
    let output = run(&["enumerate", "-n", "3", "--t0-only", "--count-only"]);
    assert_eq!(stdout(&output), "19\n");
    let output = run(&["enumerate", "-n", "2"]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "\
topology over: p1 p2
0
p1 p2

topology over: p1 p2
0
p1
p1 p2

topology over: p1 p2
0
p2
p1 p2

topology over: p1 p2
0
p1
p2
p1 p2
"
    );
}

#[test]
fn from_graph_notes_self_loops() {
    let dir = TempDir::new().unwrap();
    let graph = write_file(&dir, "loop.graph", "points: a b\na -> a\nb -> a\n");
    let output = run(&["from-graph", &graph]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "topology over: a b\n0\na\na b\n");
    assert!(stderr(&output).contains("self-loop"), "{}", stderr(&output));
}

#[test]
fn from_derivation_builds_the_fan() {
    let output = run_with_stdin(
        &["from-derivation", "-"],
        "points: a b c\nstep 1: grow a -> b c\n",
    );
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "topology over: a b c\n0\na\na b\na c\na b c\n"
    );
}

#[test]
fn from_matrix_builds_and_rejects() {
    let output = run_with_stdin(&["from-matrix", "-"], "basis: b1 b2\n1 1\n0 1\n");
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "topology over: b1 b2\n0\nb1\nb1 b2\n");
    let output = run_with_stdin(&["from-matrix", "-"], "basis: b1 b2\n1 1\n1 1\n");
    assert_eq!(code(&output), 2);
    let diagnostic = stderr(&output);
    assert!(diagnostic.contains("antisymmetric"), "{diagnostic}");
    assert!(
        diagnostic.contains("b1") && diagnostic.contains("b2"),
        "{diagnostic}"
    );
}

#[test]
fn continuity_verdicts() {
    let dir = TempDir::new().unwrap();
    let src = write_file(&dir, "src.topo", "topology over: a b\n0\na\na b\n");
    let dst = write_file(&dir, "dst.topo", "topology over: x y\n0\nx\nx y\n");
    let order_preserving = write_file(&dir, "map1.txt", "a => x\nb => y\n");
    let output = run(&["continuity", &order_preserving, &src, &dst]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "continuous: true\n");
    let order_breaking = write_file(&dir, "map2.txt", "a => y\nb => x\n");
    let output = run(&["continuity", &order_breaking, &src, &dst]);
    assert_eq!(code(&output), 1);
    assert_eq!(stdout(&output), "continuous: false\n");
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let output = run(&["validate", "/definitely/not/here.topo"]);
    assert_eq!(code(&output), 2);
    let garbled = write_file(&dir, "garbled.topo", "open sets: a b\n");
    let output = run(&["check", "--t0", &garbled]);
    assert_eq!(code(&output), 2);
    assert!(stderr(&output).contains("line 1"), "{}", stderr(&output));
    let output = run(&["enumerate", "-n", "6", "--count-only"]);
    assert_eq!(code(&output), 2);
    assert!(stderr(&output).contains("1..=5"), "{}", stderr(&output));
    let output = run(&["check", &garbled]);
    assert_eq!(code(&output), 2);
    let output = run(&["no-such-command"]);
    assert_eq!(code(&output), 2);
}
