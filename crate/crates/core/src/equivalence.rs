//! State-preserving rewrites and the equivalence test for stabilizer graphs.
//!
//! Two graphs are compared by first reducing both, then applying E(i)/E(ii)
//! until no node that is hollow only in the first graph is adjacent (in either
//! graph) to a node hollow only in the second. At that point the graphs
//! denote the same state exactly when they are identical.

use crate::bits::BitRow;
use crate::error::{check_pair, check_size, Error, Result};
use crate::graph::StabilizerGraph;
use crate::transforms::{edge_pivot_signs, looped_pivot};

/// E1 on a looped node `j`: flip its fill, local complement on it, advance
/// its neighbors' loops, flip its sign and, if it is now negative, its
/// neighbors' signs. The loop on `j` stays.
pub fn apply_e1(g: &StabilizerGraph, j: usize) -> Result<StabilizerGraph> {
    crate::error::check_index(j, g.n())?;
    if !g.has_loop(j) {
        return Err(Error::Precondition("E1 needs a node with a loop"));
    }
    let mut out = g.clone();
    e1_mut(&mut out, j);
    Ok(out)
}

fn e1_mut(g: &mut StabilizerGraph, j: usize) {
    g.flip_fill_mut(j);
    g.local_complement_mut(j);
    g.advance_neighbor_loops_mut(j);
    g.flip_sign_mut(j);
    if g.is_negative(j) {
        g.flip_neighbor_signs_mut(j);
    }
}

/// E2 on adjacent loop-free nodes `j`, `k`: flip both fills and local
/// complement along their edge, then fix signs.
pub fn apply_e2(g: &StabilizerGraph, j: usize, k: usize) -> Result<StabilizerGraph> {
    check_pair(j, k, g.n())?;
    if !g.has_edge(j, k) || g.has_loop(j) || g.has_loop(k) {
        return Err(Error::Precondition(
            "E2 needs two adjacent nodes without loops",
        ));
    }
    let mut out = g.clone();
    e2_mut(&mut out, j, k);
    Ok(out)
}

fn e2_mut(g: &mut StabilizerGraph, j: usize, k: usize) {
    let before = g.clone();
    g.flip_fill_mut(j);
    g.flip_fill_mut(k);
    edge_pivot_signs(g, &before, j, k);
}

fn check_reduced_pair(g: &StabilizerGraph, hollow: usize, solid: usize) -> Result<()> {
    check_pair(hollow, solid, g.n())?;
    if !g.is_reduced() {
        return Err(Error::NotReduced);
    }
    if !g.is_hollow(hollow) || g.is_hollow(solid) || !g.has_edge(hollow, solid) {
        return Err(Error::Precondition(
            "needs a hollow node adjacent to a solid node",
        ));
    }
    Ok(())
}

/// E(i) on a reduced graph: hollow `hollow` adjacent to solid looped `solid`.
pub fn apply_ei(g: &StabilizerGraph, hollow: usize, solid: usize) -> Result<StabilizerGraph> {
    check_reduced_pair(g, hollow, solid)?;
    if !g.has_loop(solid) {
        return Err(Error::Precondition(
            "E(i) needs the solid node to have a loop",
        ));
    }
    let mut out = g.clone();
    ei_mut(&mut out, hollow, solid);
    Ok(out)
}

fn ei_mut(g: &mut StabilizerGraph, hollow: usize, solid: usize) {
    let before = g.clone();
    looped_pivot(g, &before, solid, hollow);
    g.flip_fill_mut(solid);
}

/// E(ii) on a reduced graph: hollow `hollow` adjacent to solid unlooped
/// `solid`.
pub fn apply_eii(g: &StabilizerGraph, hollow: usize, solid: usize) -> Result<StabilizerGraph> {
    check_reduced_pair(g, hollow, solid)?;
    if g.has_loop(solid) {
        return Err(Error::Precondition(
            "E(ii) needs the solid node to have no loop",
        ));
    }
    let mut out = g.clone();
    eii_mut(&mut out, hollow, solid);
    Ok(out)
}

fn eii_mut(g: &mut StabilizerGraph, hollow: usize, solid: usize) {
    e2_mut(g, hollow, solid);
}

/// E(i) or E(ii), whichever applies to the pair.
fn pair_rule_mut(g: &mut StabilizerGraph, hollow: usize, solid: usize) {
    if g.has_loop(solid) {
        ei_mut(g, hollow, solid);
    } else {
        eii_mut(g, hollow, solid);
    }
}

/// An equivalent reduced graph.
///
/// E1 fills looped hollow nodes (lowest index first), then E2 fills adjacent
/// hollow pairs (lexicographically first edge). The hollow count never grows.
pub fn to_reduced(g: &StabilizerGraph) -> StabilizerGraph {
    let mut out = g.clone();
    let n = out.n();
    while let Some(j) = (0..n).find(|&j| out.is_hollow(j) && out.has_loop(j)) {
        e1_mut(&mut out, j);
    }
    loop {
        let hollow_edge = out
            .edges()
            .find(|&(j, k)| out.is_hollow(j) && out.is_hollow(k));
        let Some((j, k)) = hollow_edge else { break };
        e2_mut(&mut out, j, k);
    }
    debug_assert!(out.is_reduced());
    out
}

/// Offending pair `(a, b)`: `a` hollow only in `g1`, `b` hollow only in `g2`,
/// adjacent in at least one of them. Lexicographically smallest first.
fn offending_pair(g1: &StabilizerGraph, g2: &StabilizerGraph) -> Option<(usize, usize)> {
    let only = |x: &BitRow, y: &BitRow| {
        let mut out = y.clone();
        out.xor_assign(x);
        out.and_assign(x);
        out
    };
    let first_only = only(g1.hollow_nodes(), g2.hollow_nodes());
    let second_only = only(g2.hollow_nodes(), g1.hollow_nodes());
    let found = first_only.ones().find_map(|a| {
        second_only
            .ones()
            .find(|&b| g1.has_edge(a, b) || g2.has_edge(a, b))
            .map(|b| (a, b))
    });
    found
}

/// Rewrites two reduced graphs with E(i)/E(ii) until no node hollow only in
/// one is adjacent to a node hollow only in the other. Each step pairs up one
/// hollow node, so there are at most as many steps as hollow nodes.
pub fn simplify_pair(
    g1: &StabilizerGraph,
    g2: &StabilizerGraph,
) -> Result<(StabilizerGraph, StabilizerGraph)> {
    check_size(g1.n(), g2.n())?;
    if !g1.is_reduced() || !g2.is_reduced() {
        return Err(Error::NotReduced);
    }
    let (mut g1, mut g2) = (g1.clone(), g2.clone());
    while let Some((a, b)) = offending_pair(&g1, &g2) {
        if g1.has_edge(a, b) {
            // hollow a, solid b in g1
            pair_rule_mut(&mut g1, a, b);
        } else {
            // hollow b, solid a in g2
            pair_rule_mut(&mut g2, b, a);
        }
    }
    Ok((g1, g2))
}

/// Whether two graphs denote the same state up to global phase.
pub fn graphs_equivalent(g1: &StabilizerGraph, g2: &StabilizerGraph) -> Result<bool> {
    check_size(g1.n(), g2.n())?;
    let (a, b) = simplify_pair(&to_reduced(g1), &to_reduced(g2))?;
    Ok(a == b)
}
