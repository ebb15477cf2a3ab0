//! Graphviz export. Solid nodes are filled, hollow nodes are outlined, a loop
//! is drawn as a self-edge and a negative sign appends `−` to the label.

use std::fmt::Write;

use stabgraph::StabilizerGraph;

pub fn to_dot(g: &StabilizerGraph) -> String {
    let mut out = String::from("graph stabilizer {\n    node [shape=circle];\n");
    for j in 0..g.n() {
        let sign = if g.is_negative(j) { "\u{2212}" } else { "" };
        let style = if g.is_hollow(j) {
            "style=solid"
        } else {
            "style=filled, fillcolor=black, fontcolor=white"
        };
        writeln!(out, "    {j} [label=\"{j}{sign}\", {style}];").unwrap();
    }
    for j in (0..g.n()).filter(|&j| g.has_loop(j)) {
        writeln!(out, "    {j} -- {j};").unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "    {i} -- {j};").unwrap();
    }
    out.push_str("}\n");
    out
}
