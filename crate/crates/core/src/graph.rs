//! Decorated stabilizer graphs and the primitive moves on them.
//!
//! Loops are kept as a per-node bit, never on the adjacency diagonal, so
//! "neighbor" always means a distinct node joined by an edge.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitRow;
use crate::error::{check_index, check_pair, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fill {
    Solid,
    Hollow,
}

/// A labeled graph whose nodes carry fill, loop and sign decorations.
///
/// Node `j` stands for qubit `j`. Equality is label-sensitive and bit-exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerGraph {
    hollow: BitRow,
    loops: BitRow,
    negative: BitRow,
    adj: Vec<BitRow>,
}

impl StabilizerGraph {
    /// `n` solid, unlooped, positive nodes and no edges: the state `|+⟩^⊗n`.
    pub fn new(n: usize) -> Self {
        Self {
            hollow: BitRow::zeros(n),
            loops: BitRow::zeros(n),
            negative: BitRow::zeros(n),
            adj: (0..n).map(|_| BitRow::zeros(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.hollow.len()
    }

    pub fn fill(&self, j: usize) -> Fill {
        if self.hollow.get(j) {
            Fill::Hollow
        } else {
            Fill::Solid
        }
    }

    pub fn is_hollow(&self, j: usize) -> bool {
        self.hollow.get(j)
    }

    pub fn has_loop(&self, j: usize) -> bool {
        self.loops.get(j)
    }

    pub fn is_negative(&self, j: usize) -> bool {
        self.negative.get(j)
    }

    pub fn has_edge(&self, j: usize, k: usize) -> bool {
        self.adj[j].get(k)
    }

    pub fn hollow_nodes(&self) -> &BitRow {
        &self.hollow
    }

    pub fn hollow_count(&self) -> usize {
        self.hollow.count_ones()
    }

    /// Adjacency row of `j`; bit `j` is always clear.
    pub fn neighborhood(&self, j: usize) -> &BitRow {
        &self.adj[j]
    }

    /// Neighbors of `j` in ascending order. A loop is not an edge.
    pub fn neighbors(&self, j: usize) -> Result<Vec<usize>> {
        check_index(j, self.n())?;
        Ok(self.adj[j].ones().collect())
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn set_fill(&mut self, j: usize, fill: Fill) -> Result<()> {
        check_index(j, self.n())?;
        self.hollow.set(j, fill == Fill::Hollow);
        Ok(())
    }

    pub fn set_loop(&mut self, j: usize, present: bool) -> Result<()> {
        check_index(j, self.n())?;
        self.loops.set(j, present);
        Ok(())
    }

    pub fn set_negative(&mut self, j: usize, negative: bool) -> Result<()> {
        check_index(j, self.n())?;
        self.negative.set(j, negative);
        Ok(())
    }

    pub fn set_edge(&mut self, j: usize, k: usize, present: bool) -> Result<()> {
        check_pair(j, k, self.n())?;
        self.adj[j].set(k, present);
        self.adj[k].set(j, present);
        Ok(())
    }

    /// Builder form of [`set_edge`](Self::set_edge) for a list of edges.
    pub fn with_edges<I: IntoIterator<Item = (usize, usize)>>(mut self, edges: I) -> Result<Self> {
        for (j, k) in edges {
            self.set_edge(j, k, true)?;
        }
        Ok(self)
    }

    /// Hollow nodes carry no loops and no two hollow nodes are adjacent.
    pub fn is_reduced(&self) -> bool {
        let mut hollow_loops = self.hollow.clone();
        hollow_loops.and_assign(&self.loops);
        if hollow_loops.any() {
            return false;
        }
        self.hollow.ones().all(|j| {
            let mut hh = self.adj[j].clone();
            hh.and_assign(&self.hollow);
            !hh.any()
        })
    }

    pub fn local_complement(&self, j: usize) -> Result<Self> {
        check_index(j, self.n())?;
        let mut g = self.clone();
        g.local_complement_mut(j);
        Ok(g)
    }

    pub fn local_complement_edge(&self, j: usize, k: usize) -> Result<Self> {
        check_pair(j, k, self.n())?;
        let mut g = self.clone();
        g.local_complement_edge_mut(j, k);
        Ok(g)
    }

    /// Only the third step of local complementation along `(j, k)`: an edge
    /// between two non-decision nodes is complemented when their decision
    /// neighborhoods are non-empty and different. Nothing else changes.
    pub fn local_complement_edge_step3(&self, j: usize, k: usize) -> Result<Self> {
        check_pair(j, k, self.n())?;
        let mut g = self.clone();
        g.local_complement_edge_step3_mut(j, k);
        Ok(g)
    }

    pub fn advance_loop(&self, j: usize) -> Result<Self> {
        check_index(j, self.n())?;
        let mut g = self.clone();
        g.advance_loop_mut(j);
        Ok(g)
    }

    pub fn flip_fill(&self, j: usize) -> Result<Self> {
        check_index(j, self.n())?;
        let mut g = self.clone();
        g.flip_fill_mut(j);
        Ok(g)
    }

    pub fn flip_sign(&self, j: usize) -> Result<Self> {
        check_index(j, self.n())?;
        let mut g = self.clone();
        g.flip_sign_mut(j);
        Ok(g)
    }

    /// Moves node `a`'s decorations and connections to label `b` and vice
    /// versa; this is a SWAP of the two qubits.
    pub fn swap_labels(&self, a: usize, b: usize) -> Result<Self> {
        check_index(a, self.n())?;
        check_index(b, self.n())?;
        let mut g = self.clone();
        g.hollow.swap(a, b);
        g.loops.swap(a, b);
        g.negative.swap(a, b);
        g.adj.swap(a, b);
        for row in &mut g.adj {
            row.swap(a, b);
        }
        Ok(g)
    }

    // In-place moves used by the rewrite rules. Indices are checked by the
    // callers.

    pub(crate) fn toggle_edge_mut(&mut self, j: usize, k: usize) {
        debug_assert_ne!(j, k);
        self.adj[j].toggle(k);
        self.adj[k].toggle(j);
    }

    pub(crate) fn local_complement_mut(&mut self, j: usize) {
        let nbrs: Vec<usize> = self.adj[j].ones().collect();
        for (i, &l) in nbrs.iter().enumerate() {
            for &m in &nbrs[i + 1..] {
                self.toggle_edge_mut(l, m);
            }
        }
    }

    pub(crate) fn local_complement_edge_mut(&mut self, j: usize, k: usize) {
        let n = self.n();
        let old = self.adj.clone();
        // Γ'_lm = Γ_lm + (Γ_jl + δ_jl)(Γ_km + δ_km) + (Γ_jm + δ_jm)(Γ_kl + δ_kl)
        let term = |a: usize, b: usize| old[a].get(b) || a == b;
        for l in 0..n {
            for m in l + 1..n {
                let flip = (term(j, l) && term(k, m)) ^ (term(j, m) && term(k, l));
                if flip {
                    self.toggle_edge_mut(l, m);
                }
            }
        }
    }

    pub(crate) fn local_complement_edge_step3_mut(&mut self, j: usize, k: usize) {
        let n = self.n();
        let decision = |g: &Self, l: usize| (g.adj[l].get(j), g.adj[l].get(k));
        let others: Vec<(usize, (bool, bool))> = (0..n)
            .filter(|&l| l != j && l != k)
            .map(|l| (l, decision(self, l)))
            .filter(|&(_, d)| d != (false, false))
            .collect();
        for (i, &(l, dl)) in others.iter().enumerate() {
            for &(m, dm) in &others[i + 1..] {
                if dl != dm {
                    self.toggle_edge_mut(l, m);
                }
            }
        }
    }

    pub(crate) fn advance_loop_mut(&mut self, j: usize) {
        if self.loops.get(j) {
            self.loops.set(j, false);
            self.negative.toggle(j);
        } else {
            self.loops.set(j, true);
        }
    }

    pub(crate) fn flip_fill_mut(&mut self, j: usize) {
        self.hollow.toggle(j);
    }

    pub(crate) fn flip_sign_mut(&mut self, j: usize) {
        self.negative.toggle(j);
    }

    pub(crate) fn remove_loop_mut(&mut self, j: usize) {
        self.loops.set(j, false);
    }

    pub(crate) fn advance_neighbor_loops_mut(&mut self, j: usize) {
        let nbrs: Vec<usize> = self.adj[j].ones().collect();
        for l in nbrs {
            self.advance_loop_mut(l);
        }
    }

    pub(crate) fn flip_neighbor_signs_mut(&mut self, j: usize) {
        let nbrs = self.adj[j].clone();
        self.negative.xor_assign(&nbrs);
    }

    pub(crate) fn flip_signs_mut(&mut self, nodes: &BitRow) {
        self.negative.xor_assign(nodes);
    }

    /// Nodes adjacent to both `j` and `k`.
    pub(crate) fn common_neighbors(&self, j: usize, k: usize) -> BitRow {
        let mut both = self.adj[j].clone();
        both.and_assign(&self.adj[k]);
        both
    }
}

impl fmt::Debug for StabilizerGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StabilizerGraph {{ ")?;
        for j in 0..self.n() {
            write!(
                f,
                "{j}{}{}{} ",
                if self.is_hollow(j) { "o" } else { "*" },
                if self.has_loop(j) { "@" } else { "" },
                if self.is_negative(j) { "-" } else { "" },
            )?;
        }
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, " }}")
    }
}
