use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{circuit_from_graph, generators_from_circuit, GraphFormCircuit};
use crate::graph::{Fill, StabilizerGraph};
use crate::pauli::GeneratorMatrix;

/// Uniform fill, loop and sign per node; each edge present with probability
/// one half.
pub fn random_graph_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> StabilizerGraph {
    let mut g = StabilizerGraph::new(n);
    for j in 0..n {
        let fill = if rng.random() {
            Fill::Hollow
        } else {
            Fill::Solid
        };
        g.set_fill(j, fill).expect("in range");
        g.set_loop(j, rng.random()).expect("in range");
        g.set_negative(j, rng.random()).expect("in range");
    }
    for j in 0..n {
        for k in j + 1..n {
            if rng.random() {
                g.set_edge(j, k, true).expect("distinct nodes");
            }
        }
    }
    g
}

pub fn random_graph(n: usize, seed: u64) -> StabilizerGraph {
    random_graph_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

/// Drops loops from hollow nodes and edges between hollow nodes.
pub fn repair_reduced(g: &StabilizerGraph) -> StabilizerGraph {
    let mut out = g.clone();
    let hollow: Vec<usize> = g.hollow_nodes().ones().collect();
    for (i, &j) in hollow.iter().enumerate() {
        out.set_loop(j, false).expect("in range");
        for &k in &hollow[i + 1..] {
            out.set_edge(j, k, false).expect("distinct nodes");
        }
    }
    out
}

pub fn random_reduced_graph_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> StabilizerGraph {
    repair_reduced(&random_graph_with(rng, n))
}

pub fn random_reduced_graph(n: usize, seed: u64) -> StabilizerGraph {
    random_reduced_graph_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

pub fn random_circuit(n: usize, seed: u64) -> GraphFormCircuit {
    circuit_from_graph(&random_graph(n, seed))
}

/// Generators of a random stabilizer state, scrambled by random row products
/// and row order so they are far from graph form.
pub fn random_stabilizer_matrix(n: usize, seed: u64) -> GeneratorMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_graph_with(&mut rng, n);
    let mut rows = generators_from_circuit(&circuit_from_graph(&g));
    if n > 1 {
        for _ in 0..4 * n {
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            if i != j {
                rows[i] = rows[i].multiply(&rows[j]).expect("stabilizer rows commute");
            }
        }
        for i in (1..n).rev() {
            rows.swap(i, rng.random_range(0..=i));
        }
    }
    GeneratorMatrix::new(rows).expect("row operations keep a valid generator set")
}
