//! Graph-form circuits: `H` on every qubit, a layer of CZ gates, then
//! terminal `Z`, `S` and `H` gates, in that order, on chosen qubits.
//!
//! Graph-form circuits and stabilizer graphs are in bijection: CZ pairs are
//! edges, and the terminal `Z`, `S` and `H` sets are the negative, looped and
//! hollow nodes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{check_index, check_pair, Result};
use crate::gate::Gate;
use crate::graph::{Fill, StabilizerGraph};
use crate::pauli::{Pauli, PauliString};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GraphFormCircuit {
    n: usize,
    cz: BTreeSet<(usize, usize)>,
    z_set: BTreeSet<usize>,
    s_set: BTreeSet<usize>,
    h_set: BTreeSet<usize>,
}

impl GraphFormCircuit {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// CZ pairs, each stored as `(low, high)`.
    pub fn cz(&self) -> &BTreeSet<(usize, usize)> {
        &self.cz
    }

    pub fn z_set(&self) -> &BTreeSet<usize> {
        &self.z_set
    }

    pub fn s_set(&self) -> &BTreeSet<usize> {
        &self.s_set
    }

    pub fn h_set(&self) -> &BTreeSet<usize> {
        &self.h_set
    }

    /// Adds a CZ between `a` and `b`. Returns `false` if it was already there.
    pub fn add_cz(&mut self, a: usize, b: usize) -> Result<bool> {
        check_pair(a, b, self.n)?;
        Ok(self.cz.insert((a.min(b), a.max(b))))
    }

    pub fn add_z(&mut self, q: usize) -> Result<bool> {
        check_index(q, self.n)?;
        Ok(self.z_set.insert(q))
    }

    pub fn add_s(&mut self, q: usize) -> Result<bool> {
        check_index(q, self.n)?;
        Ok(self.s_set.insert(q))
    }

    pub fn add_h(&mut self, q: usize) -> Result<bool> {
        check_index(q, self.n)?;
        Ok(self.h_set.insert(q))
    }

    pub fn toggle_z(&mut self, q: usize) -> Result<()> {
        check_index(q, self.n)?;
        if !self.z_set.remove(&q) {
            self.z_set.insert(q);
        }
        Ok(())
    }

    /// The full gate list in application order, excluding the implicit
    /// leading Hadamard layer.
    pub fn gates(&self) -> Vec<Gate> {
        let mut gates: Vec<Gate> = self.cz.iter().map(|&(a, b)| Gate::cz(a, b)).collect();
        for q in 0..self.n {
            if self.z_set.contains(&q) {
                gates.push(Gate::z(q));
            }
            if self.s_set.contains(&q) {
                gates.push(Gate::s(q));
            }
            if self.h_set.contains(&q) {
                gates.push(Gate::h(q));
            }
        }
        gates
    }

    /// Neighbors of `q` through CZ pairs.
    fn neighbors(&self, q: usize) -> impl Iterator<Item = usize> + '_ {
        self.cz.iter().filter_map(move |&(a, b)| {
            if a == q {
                Some(b)
            } else if b == q {
                Some(a)
            } else {
                None
            }
        })
    }
}

pub fn graph_from_circuit(c: &GraphFormCircuit) -> StabilizerGraph {
    let mut g = StabilizerGraph::new(c.n);
    for &(a, b) in &c.cz {
        g.toggle_edge_mut(a, b);
    }
    for &q in &c.z_set {
        g.flip_sign_mut(q);
    }
    for &q in &c.s_set {
        g.set_loop(q, true).expect("circuit indices are in range");
    }
    for &q in &c.h_set {
        g.set_fill(q, Fill::Hollow)
            .expect("circuit indices are in range");
    }
    g
}

pub fn circuit_from_graph(g: &StabilizerGraph) -> GraphFormCircuit {
    let n = g.n();
    GraphFormCircuit {
        n,
        cz: g.edges().collect(),
        z_set: (0..n).filter(|&j| g.is_negative(j)).collect(),
        s_set: (0..n).filter(|&j| g.has_loop(j)).collect(),
        h_set: (0..n).filter(|&j| g.is_hollow(j)).collect(),
    }
}

/// Signed stabilizer generators of the circuit's output state, one per qubit,
/// from the closed form
///
/// ```text
/// g_j = (-1)^(a_j + b_j c_j) · X_j^((b_j+1)(c_j+1)) Y_j^(b_j) Z_j^((b_j+1) c_j)
///       · Π_{k ∈ N(j)} Z_k^(c_k+1) X_k^(c_k)
/// ```
///
/// where `a`, `b`, `c` indicate membership of the Z, S and H sets.
pub fn generators_from_circuit(c: &GraphFormCircuit) -> Vec<PauliString> {
    let n = c.n;
    (0..n)
        .map(|j| {
            let a = c.z_set.contains(&j);
            let b = c.s_set.contains(&j);
            let h = c.h_set.contains(&j);
            let own = match (b, h) {
                (false, false) => Pauli::X,
                (false, true) => Pauli::Z,
                (true, _) => Pauli::Y,
            };
            let mut g = PauliString::single(n, j, own);
            for k in c.neighbors(j) {
                let p = if c.h_set.contains(&k) {
                    Pauli::X
                } else {
                    Pauli::Z
                };
                g.set(k, p);
            }
            g.set_negative(a ^ (b && h));
            g
        })
        .collect()
}

/// The same generators as [`generators_from_circuit`], obtained by conjugating
/// the graph-state generators `X_j Π_{k∈N(j)} Z_k` through the terminal layer.
pub fn generators_by_conjugation(c: &GraphFormCircuit) -> Vec<PauliString> {
    let n = c.n;
    let terminal: Vec<Gate> = c
        .gates()
        .into_iter()
        .filter(|g| !matches!(g, Gate::Cz(..)))
        .collect();
    (0..n)
        .map(|j| {
            let mut g = PauliString::single(n, j, Pauli::X);
            for k in c.neighbors(j) {
                g.set(k, Pauli::Z);
            }
            for &gate in &terminal {
                g.conjugate_in_place(gate)
                    .expect("circuit indices are in range");
            }
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn strs(gens: &[PauliString]) -> Vec<String> {
        gens.iter().map(ToString::to_string).collect()
    }

    fn bell() -> GraphFormCircuit {
        let mut c = GraphFormCircuit::new(2);
        c.add_cz(0, 1).unwrap();
        c.add_h(1).unwrap();
        c
    }

    #[test]
    fn graph_examples() {
        let plus = graph_from_circuit(&GraphFormCircuit::new(1));
        assert_eq!(plus, StabilizerGraph::new(1));

        let mut zero = GraphFormCircuit::new(1);
        zero.add_h(0).unwrap();
        let g = graph_from_circuit(&zero);
        assert!(g.is_hollow(0) && !g.has_loop(0) && !g.is_negative(0));

        let g = graph_from_circuit(&bell());
        assert!(!g.is_hollow(0) && g.is_hollow(1) && g.has_edge(0, 1));
        assert_eq!(circuit_from_graph(&g), bell());
    }

    #[test]
    fn generator_examples() {
        assert_eq!(
            strs(&generators_from_circuit(&GraphFormCircuit::new(1))),
            ["+X"]
        );
        let mut zero = GraphFormCircuit::new(1);
        zero.add_h(0).unwrap();
        assert_eq!(strs(&generators_from_circuit(&zero)), ["+Z"]);
        assert_eq!(strs(&generators_from_circuit(&bell())), ["+XX", "+ZZ"]);
        assert_eq!(strs(&generators_by_conjugation(&bell())), ["+XX", "+ZZ"]);
    }

    #[test]
    fn looped_hollow_generator_is_negative_y() {
        let mut c = GraphFormCircuit::new(1);
        c.add_s(0).unwrap();
        c.add_h(0).unwrap();
        assert_eq!(strs(&generators_from_circuit(&c)), ["-Y"]);
        assert_eq!(strs(&generators_by_conjugation(&c)), ["-Y"]);
    }

    #[test]
    fn duplicate_and_invalid_gates() {
        let mut c = GraphFormCircuit::new(2);
        assert!(c.add_cz(1, 0).unwrap());
        assert!(!c.add_cz(0, 1).unwrap());
        assert!(c.add_cz(0, 0).is_err());
        assert!(c.add_z(2).is_err());
        assert!(c.add_s(1).unwrap());
        assert!(!c.add_s(1).unwrap());
    }

    #[test]
    fn terminal_z_flips_one_generator_sign() {
        let mut c = bell();
        let before = generators_from_circuit(&c);
        c.toggle_z(1).unwrap();
        let after = generators_from_circuit(&c);
        assert_eq!(after[0], before[0]);
        assert_ne!(after[1].is_negative(), before[1].is_negative());
        assert_eq!(after[1].x(), before[1].x());
    }
}
