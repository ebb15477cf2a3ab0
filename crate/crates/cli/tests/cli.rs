use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use stabgraph::oracle::{states_equal_up_to_global_phase, statevector_from_graph};
use stabgraph_cli::parse_graph;
use tempfile::TempDir;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabgraph"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stabgraph"))
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

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bell_matrix_converts_to_the_expected_graph() {
    let out = run_stdin(
        &["convert", "--from", "matrix", "--to", "graph"],
        "+XX\n+ZZ\n",
    );
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "nodes 2\nnode 0 solid\nnode 1 hollow\nedge 0 1\n"
    );
}

#[test]
fn ghz_conversions_match_golden_files() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("matrix", "ghz.matrix", "graph", "ghz.graph"),
        ("graph", "ghz.graph", "dot", "ghz.dot"),
        ("graph", "ghz.graph", "circuit", "ghz.circuit"),
        ("circuit", "ghz.circuit", "graph", "ghz.graph"),
        ("graph", "messy.graph", "dot", "messy.dot"),
    ];
    for (from, input, to, expected) in cases {
        let output = dir.path().join(expected);
        let out = run(&[
            "convert",
            "--from",
            from,
            "--to",
            to,
            "-i",
            path(&golden(input)),
            "-o",
            path(&output),
        ]);
        assert_eq!(code(&out), 0, "{input} -> {to}");
        assert_eq!(
            fs::read_to_string(&output).unwrap(),
            fs::read_to_string(golden(expected)).unwrap(),
            "{input} -> {to}"
        );
    }
}

#[test]
fn dot_has_one_line_per_edge_and_loop() {
    let g = parse_graph(&fs::read_to_string(golden("messy.graph")).unwrap()).unwrap();
    let dot = fs::read_to_string(golden("messy.dot")).unwrap();
    let loops = (0..g.n()).filter(|&j| g.has_loop(j)).count();
    assert_eq!(dot.matches(" -- ").count(), g.edge_count() + loops);
    assert!(dot.starts_with("graph stabilizer {") && dot.trim_end().ends_with('}'));
    assert!(dot.contains("label=\"1\u{2212}\""));
}

#[test]
fn circuit_round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("c.graph");
    let back = dir.path().join("c.circuit");
    let input = "qubits 4\nCZ 0 1\nCZ 1 2\nCZ 2 3\nZ 0\nZ 3\nS 1\nS 3\nH 0\nH 2\n";
    let src = dir.path().join("in.circuit");
    fs::write(&src, input).unwrap();
    assert_eq!(
        code(&run(&[
            "convert",
            "--from",
            "circuit",
            "--to",
            "graph",
            "-i",
            path(&src),
            "-o",
            path(&graph)
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "convert",
            "--from",
            "graph",
            "--to",
            "circuit",
            "-i",
            path(&graph),
            "-o",
            path(&back)
        ])),
        0
    );
    assert_eq!(fs::read_to_string(back).unwrap(), input);
}

#[test]
fn reduce_matches_golden_and_preserves_the_state() {
    let out = run(&["reduce", "-i", path(&golden("messy.graph"))]);
    assert_eq!(code(&out), 0);
    let expected = fs::read_to_string(golden("messy.reduced.graph")).unwrap();
    assert_eq!(stdout(&out), expected);
    let before = parse_graph(&fs::read_to_string(golden("messy.graph")).unwrap()).unwrap();
    let after = parse_graph(&expected).unwrap();
    assert!(after.is_reduced());
    let (v, w) = (
        statevector_from_graph(&before).unwrap(),
        statevector_from_graph(&after).unwrap(),
    );
    assert!(states_equal_up_to_global_phase(&v, &w, 1e-9).unwrap());
    let eq = run(&[
        "equiv",
        path(&golden("messy.graph")),
        path(&golden("messy.reduced.graph")),
    ]);
    assert_eq!(code(&eq), 0);
}

#[test]
fn apply_examples() {
    let solid = "nodes 2\nnode 0 solid\nnode 1 solid\n";
    let out = run_stdin(&["apply", "--script", "Z:0"], solid);
    assert_eq!(stdout(&out), "nodes 2\nnode 0 solid neg\nnode 1 solid\n");
    let out = run_stdin(&["apply", "--script", "S:0 S:0"], solid);
    assert_eq!(stdout(&out), "nodes 2\nnode 0 solid neg\nnode 1 solid\n");
    let out = run_stdin(&["apply", "--reduced", "--script", "CZ:0,1"], solid);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "nodes 2\nnode 0 solid\nnode 1 solid\nedge 0 1\n"
    );
}

#[test]
fn reduced_apply_rejects_unreduced_input() {
    let out = run(&[
        "apply",
        "--reduced",
        "--script",
        "H:3",
        "-i",
        path(&golden("messy.graph")),
    ]);
    assert_eq!(code(&out), 3);
    let out = run(&[
        "apply",
        "--reduced",
        "--script",
        "H:3",
        "-i",
        path(&golden("messy.reduced.graph")),
    ]);
    assert_eq!(code(&out), 0);
    assert!(parse_graph(&stdout(&out)).unwrap().is_reduced());
}

#[test]
fn equiv_exit_codes() {
    let dir = TempDir::new().unwrap();
    let plus = dir.path().join("plus.graph");
    let zero = dir.path().join("zero.graph");
    fs::write(&plus, "nodes 1\nnode 0 solid\n").unwrap();
    fs::write(&zero, "nodes 1\nnode 0 hollow\n").unwrap();
    assert_eq!(code(&run(&["equiv", path(&plus), path(&plus)])), 0);
    let out = run(&["equiv", path(&plus), path(&zero)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "not equivalent\n");
    assert_eq!(
        code(&run(&["equiv", path(&plus), path(&golden("ghz.graph"))])),
        1
    );
}

#[test]
fn error_exit_codes() {
    let parse = run_stdin(
        &["convert", "--from", "graph", "--to", "dot"],
        "nodes 2\nedge 0 5\n",
    );
    assert_eq!(code(&parse), 2);
    let stderr = String::from_utf8(parse.stderr).unwrap();
    assert!(stderr.contains("line 2, column 8"), "{stderr}");

    let invariant = run_stdin(
        &["convert", "--from", "matrix", "--to", "graph"],
        "+XX\n+XX\n",
    );
    assert_eq!(code(&invariant), 3);

    let script = run_stdin(&["apply", "--script", "CZ:0"], "nodes 2\n");
    assert_eq!(code(&script), 4);

    let missing = run(&["reduce", "-i", "/nonexistent/graph"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn verify_prints_a_passing_table() {
    let out = run(&["verify", "--n", "5", "--cases", "200", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    let table = stdout(&out);
    assert_eq!(
        table.lines().filter(|l| l.ends_with("PASS")).count(),
        20,
        "{table}"
    );
    assert!(!table.contains("FAIL"));
}
