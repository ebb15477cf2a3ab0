use std::collections::BTreeSet;
use std::fmt::Write;

use stabgraph::{Fill, GeneratorMatrix, GraphFormCircuit, PauliString, StabilizerGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    /// `line` and `column` are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invariant(#[from] stabgraph::Error),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A whitespace-separated word with its 1-based column.
struct Word<'a> {
    text: &'a str,
    column: usize,
}

fn words(line: &str) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Word {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Non-blank lines with `#` comments stripped, numbered from 1.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((i + 1, line))
    })
}

fn index(word: &Word<'_>, line: usize, n: usize) -> Result<usize, FormatError> {
    let value: usize = word.text.parse().map_err(|_| {
        parse_err(
            line,
            word.column,
            format!("expected a qubit index, found {:?}", word.text),
        )
    })?;
    if value >= n {
        return Err(parse_err(
            line,
            word.column,
            format!("index {value} out of range for {n} qubits"),
        ));
    }
    Ok(value)
}

fn expect_arity(
    words: &[Word<'_>],
    arity: usize,
    line: usize,
    usage: &str,
) -> Result<(), FormatError> {
    if words.len() == arity {
        return Ok(());
    }
    let column = words.get(arity).map_or_else(
        || {
            words
                .last()
                .map_or(1, |w| w.column + w.text.chars().count())
        },
        |w| w.column,
    );
    Err(parse_err(line, column, format!("expected `{usage}`")))
}

/// Reads the header line `<keyword> <n>` and returns `n` with the remaining
/// lines.
fn header<'a>(
    input: &'a str,
    keyword: &str,
) -> Result<(usize, impl Iterator<Item = (usize, &'a str)>), FormatError> {
    let mut lines = content_lines(input);
    let Some((line, text)) = lines.next() else {
        return Err(parse_err(1, 1, format!("missing `{keyword} <n>` header")));
    };
    let ws = words(text);
    if ws[0].text != keyword {
        return Err(parse_err(
            line,
            ws[0].column,
            format!("expected `{keyword} <n>` header"),
        ));
    }
    expect_arity(&ws, 2, line, &format!("{keyword} <n>"))?;
    let n = ws[1]
        .text
        .parse()
        .map_err(|_| parse_err(line, ws[1].column, "expected a qubit count"))?;
    Ok((n, lines))
}

/// One signed Pauli string per line, e.g. `+XXZ` or `-IYY`.
pub fn parse_matrix(input: &str) -> Result<GeneratorMatrix, FormatError> {
    let mut rows: Vec<PauliString> = Vec::new();
    for (line, text) in content_lines(input) {
        let ws = words(text);
        expect_arity(&ws, 1, line, "<sign><paulis>")?;
        let word = &ws[0];
        let row: PauliString =
            word.text
                .parse()
                .map_err(|e: stabgraph::pauli::ParsePauliError| {
                    let message = match e.found {
                        Some(c) => format!("unexpected character {c:?}, expected one of I X Y Z"),
                        None => "empty row".to_string(),
                    };
                    parse_err(line, word.column + e.position, message)
                })?;
        if let Some(first) = rows.first() {
            if first.n() != row.n() {
                return Err(parse_err(
                    line,
                    word.column,
                    format!(
                        "row has {} qubits, earlier rows have {}",
                        row.n(),
                        first.n()
                    ),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(1, 1, "no generator rows"));
    }
    Ok(GeneratorMatrix::new(rows)?)
}

/// Prints rows in qubit order, undoing any column permutation.
pub fn print_matrix(m: &GeneratorMatrix) -> String {
    let mut out = String::new();
    for row in m.rows_by_qubit() {
        writeln!(out, "{row}").unwrap();
    }
    out
}

/// ```text
/// nodes 3
/// node 0 solid
/// node 1 hollow loop neg
/// edge 0 1
/// ```
/// Node lines may be omitted (the node is then solid and undecorated) but not
/// repeated; edges are written `edge i j` with `i < j`.
pub fn parse_graph(input: &str) -> Result<StabilizerGraph, FormatError> {
    let (n, lines) = header(input, "nodes")?;
    let mut g = StabilizerGraph::new(n);
    let mut seen = BTreeSet::new();
    for (line, text) in lines {
        let ws = words(text);
        match ws[0].text {
            "node" => {
                if ws.len() < 3 {
                    expect_arity(&ws, 3, line, "node <id> <solid|hollow> [loop] [neg]")?;
                }
                let j = index(&ws[1], line, n)?;
                if !seen.insert(j) {
                    return Err(parse_err(
                        line,
                        ws[1].column,
                        format!("node {j} declared twice"),
                    ));
                }
                let fill = match ws[2].text {
                    "solid" => Fill::Solid,
                    "hollow" => Fill::Hollow,
                    other => {
                        return Err(parse_err(
                            line,
                            ws[2].column,
                            format!("expected `solid` or `hollow`, found {other:?}"),
                        ))
                    }
                };
                g.set_fill(j, fill)?;
                let mut flags = BTreeSet::new();
                for w in &ws[3..] {
                    if !matches!(w.text, "loop" | "neg") {
                        return Err(parse_err(
                            line,
                            w.column,
                            format!("expected `loop` or `neg`, found {:?}", w.text),
                        ));
                    }
                    if !flags.insert(w.text) {
                        return Err(parse_err(
                            line,
                            w.column,
                            format!("repeated flag {:?}", w.text),
                        ));
                    }
                }
                g.set_loop(j, flags.contains("loop"))?;
                g.set_negative(j, flags.contains("neg"))?;
            }
            "edge" => {
                expect_arity(&ws, 3, line, "edge <i> <j>")?;
                let i = index(&ws[1], line, n)?;
                let j = index(&ws[2], line, n)?;
                if i >= j {
                    return Err(parse_err(
                        line,
                        ws[2].column,
                        "edge endpoints must satisfy i < j",
                    ));
                }
                if g.has_edge(i, j) {
                    return Err(parse_err(
                        line,
                        ws[1].column,
                        format!("edge {i} {j} listed twice"),
                    ));
                }
                g.set_edge(i, j, true)?;
            }
            other => {
                return Err(parse_err(
                    line,
                    ws[0].column,
                    format!("expected `node` or `edge`, found {other:?}"),
                ))
            }
        }
    }
    Ok(g)
}

pub fn print_graph(g: &StabilizerGraph) -> String {
    let mut out = format!("nodes {}\n", g.n());
    for j in 0..g.n() {
        let fill = if g.is_hollow(j) { "hollow" } else { "solid" };
        write!(out, "node {j} {fill}").unwrap();
        if g.has_loop(j) {
            out.push_str(" loop");
        }
        if g.is_negative(j) {
            out.push_str(" neg");
        }
        out.push('\n');
    }
    for (i, j) in g.edges() {
        writeln!(out, "edge {i} {j}").unwrap();
    }
    out
}

/// ```text
/// qubits 2
/// CZ 0 1
/// H 1
/// ```
/// The leading layer of Hadamards is implicit. Lines may come in any order;
/// repeating a gate is an error.
pub fn parse_circuit(input: &str) -> Result<GraphFormCircuit, FormatError> {
    let (n, lines) = header(input, "qubits")?;
    let mut c = GraphFormCircuit::new(n);
    for (line, text) in lines {
        let ws = words(text);
        let fresh = match ws[0].text {
            "CZ" => {
                expect_arity(&ws, 3, line, "CZ <i> <j>")?;
                let a = index(&ws[1], line, n)?;
                let b = index(&ws[2], line, n)?;
                if a == b {
                    return Err(parse_err(
                        line,
                        ws[2].column,
                        "CZ needs two distinct qubits",
                    ));
                }
                c.add_cz(a, b)?
            }
            gate @ ("Z" | "S" | "H") => {
                expect_arity(&ws, 2, line, &format!("{gate} <i>"))?;
                let q = index(&ws[1], line, n)?;
                match gate {
                    "Z" => c.add_z(q)?,
                    "S" => c.add_s(q)?,
                    _ => c.add_h(q)?,
                }
            }
            other => {
                return Err(parse_err(
                    line,
                    ws[0].column,
                    format!("expected one of CZ, Z, S, H, found {other:?}"),
                ))
            }
        };
        if !fresh {
            return Err(parse_err(line, ws[0].column, "duplicate gate"));
        }
    }
    Ok(c)
}

pub fn print_circuit(c: &GraphFormCircuit) -> String {
    let mut out = format!("qubits {}\n", c.n());
    for (a, b) in c.cz() {
        writeln!(out, "CZ {a} {b}").unwrap();
    }
    for (name, set) in [("Z", c.z_set()), ("S", c.s_set()), ("H", c.h_set())] {
        for q in set {
            writeln!(out, "{name} {q}").unwrap();
        }
    }
    out
}
