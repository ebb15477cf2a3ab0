//! Generator matrix ↔ stabilizer graph conversion.
//!
//! Matrix to graph goes through the canonical form. Hadamards on the columns
//! beyond the left rank, then S on columns with a diagonal `B` entry, bring
//! the rows to signed graph-state generators `±X_c Π Z`. The graph is read off
//! that form: edges from the adjacency block, hollow nodes where H was used,
//! loops where S was used. Undoing S leaves S† = S·Z in the terminal layer, so
//! the terminal Z set is the rows that came out negative, toggled on every
//! looped column.

use alloc::vec::Vec;

use crate::circuit::{circuit_from_graph, generators_from_circuit};
use crate::gate::Gate;
use crate::graph::{Fill, StabilizerGraph};
use crate::pauli::{GeneratorMatrix, Pauli};

/// The reduced stabilizer graph of the state stabilized by `m`, signs
/// included. Nodes are labeled by qubit, not by canonical column.
pub fn graph_from_generator_matrix(m: &GeneratorMatrix) -> StabilizerGraph {
    let (canonical, rank) = m.to_canonical_form();
    let n = canonical.n();
    let mut rows: Vec<_> = canonical.rows().to_vec();

    let mut looped = Vec::new();
    for c in 0..n {
        if c >= rank {
            for row in &mut rows {
                row.conjugate_in_place(Gate::h(c)).expect("column in range");
            }
        } else if rows[c].get(c) == Pauli::Y {
            looped.push(c);
            for row in &mut rows {
                row.conjugate_in_place(Gate::s(c)).expect("column in range");
            }
        }
    }

    let qubit = canonical.qubit_of_column();
    let mut g = StabilizerGraph::new(n);
    for (c, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.get(c), Pauli::X);
        for d in row.z().ones().filter(|&d| d > c) {
            g.set_edge(qubit[c], qubit[d], true)
                .expect("distinct columns");
        }
        let q = qubit[c];
        if c >= rank {
            g.set_fill(q, Fill::Hollow).expect("qubit in range");
        }
        g.set_negative(q, row.is_negative())
            .expect("qubit in range");
    }
    for c in looped {
        let q = qubit[c];
        g.set_loop(q, true).expect("qubit in range");
        g.flip_sign_mut(q);
    }
    g
}

/// Signed generators of the state a graph denotes.
pub fn generator_matrix_from_graph(g: &StabilizerGraph) -> GeneratorMatrix {
    GeneratorMatrix::new(generators_from_circuit(&circuit_from_graph(g)))
        .expect("graph-form generators are independent and commute")
}
