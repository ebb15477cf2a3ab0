//! Clifford gates as graph rewrites.
//!
//! Two rule families cover the local gates. The general rules accept any
//! stabilizer graph, while the reduced rules take a reduced graph to a
//! reduced graph. CZ is only given for reduced graphs; on other graphs it
//! first reduces via the equivalence rules.
//!
//! Each rule mutates the graph in the order its description lists the steps.
//! Signs read "initially" or "originally" refer to the graph before the rule
//! started; "current neighbors" are read at the point the step runs.

use alloc::vec::Vec;

use crate::equivalence;
use crate::error::{check_index, check_pair, Error, Result};
use crate::gate::{Gate, LocalGate};
use crate::graph::StabilizerGraph;
use crate::rule::Rule;

/// Which of T1–T6 applies `gate` at node `j` of an arbitrary graph.
pub fn local_rule(g: &StabilizerGraph, gate: LocalGate, j: usize) -> Result<Rule> {
    check_index(j, g.n())?;
    Ok(match (gate, g.is_hollow(j), g.has_loop(j)) {
        (LocalGate::H, _, _) => Rule::T1,
        (LocalGate::S, false, _) => Rule::T2,
        (LocalGate::S, true, false) => Rule::T3,
        (LocalGate::S, true, true) => Rule::T4,
        (LocalGate::Z, false, _) => Rule::T5,
        (LocalGate::Z, true, _) => Rule::T6,
    })
}

/// Applies a local gate to any stabilizer graph with rules T1–T6.
pub fn apply_local(g: &StabilizerGraph, gate: LocalGate, j: usize) -> Result<StabilizerGraph> {
    let rule = local_rule(g, gate, j)?;
    let mut out = g.clone();
    match rule {
        Rule::T1 => out.flip_fill_mut(j),
        Rule::T2 => out.advance_loop_mut(j),
        Rule::T3 => {
            out.local_complement_mut(j);
            out.advance_neighbor_loops_mut(j);
            if out.is_negative(j) {
                out.flip_neighbor_signs_mut(j);
            }
        }
        Rule::T4 => {
            out.flip_fill_mut(j);
            out.remove_loop_mut(j);
            out.local_complement_mut(j);
            out.advance_neighbor_loops_mut(j);
            if !out.is_negative(j) {
                out.flip_neighbor_signs_mut(j);
            }
        }
        Rule::T5 => out.flip_sign_mut(j),
        Rule::T6 => {
            out.flip_neighbor_signs_mut(j);
            if out.has_loop(j) {
                out.flip_sign_mut(j);
            }
        }
        _ => unreachable!("local_rule only yields T1-T6"),
    }
    Ok(out)
}

fn lowest_hollow_neighbor(g: &StabilizerGraph, j: usize) -> Option<usize> {
    g.neighborhood(j).ones().find(|&k| g.is_hollow(k))
}

fn require_reduced(g: &StabilizerGraph) -> Result<()> {
    if g.is_reduced() {
        Ok(())
    } else {
        Err(Error::NotReduced)
    }
}

/// Which of T(i)–T(vii), T5 or T6 applies `gate` at node `j` of a reduced
/// graph.
pub fn reduced_local_rule(g: &StabilizerGraph, gate: LocalGate, j: usize) -> Result<Rule> {
    check_index(j, g.n())?;
    require_reduced(g)?;
    let hollow = g.is_hollow(j);
    Ok(match gate {
        LocalGate::H if hollow => Rule::Tv,
        LocalGate::H => match (g.has_loop(j), lowest_hollow_neighbor(g, j).is_some()) {
            (false, false) => Rule::Ti,
            (true, false) => Rule::Tii,
            (false, true) => Rule::Tiii,
            (true, true) => Rule::Tiv,
        },
        LocalGate::S if hollow => Rule::Tvii,
        LocalGate::S => Rule::Tvi,
        LocalGate::Z if hollow => Rule::T6,
        LocalGate::Z => Rule::T5,
    })
}

/// Applies a local gate to a reduced graph, producing a reduced graph.
///
/// When `H` hits a solid node with several hollow neighbors, the rule pivots
/// on the lowest-index one.
pub fn apply_local_reduced(
    g: &StabilizerGraph,
    gate: LocalGate,
    j: usize,
) -> Result<StabilizerGraph> {
    let rule = reduced_local_rule(g, gate, j)?;
    let mut out = g.clone();
    match rule {
        Rule::Ti | Rule::Tv => out.flip_fill_mut(j),
        Rule::Tii => {
            out.local_complement_mut(j);
            out.advance_neighbor_loops_mut(j);
            out.flip_sign_mut(j);
            if out.is_negative(j) {
                out.flip_neighbor_signs_mut(j);
            }
        }
        Rule::Tiii => {
            let k = lowest_hollow_neighbor(g, j).expect("T(iii) has a hollow neighbor");
            out.flip_fill_mut(k);
            edge_pivot_signs(&mut out, g, j, k);
        }
        Rule::Tiv => {
            let k = lowest_hollow_neighbor(g, j).expect("T(iv) has a hollow neighbor");
            looped_pivot(&mut out, g, j, k);
        }
        Rule::Tvi => out.advance_loop_mut(j),
        Rule::Tvii | Rule::T5 | Rule::T6 => {
            let general = match rule {
                Rule::Tvii => LocalGate::S,
                _ => LocalGate::Z,
            };
            return apply_local(g, general, j);
        }
        _ => unreachable!("reduced_local_rule yields T(i)-T(vii), T5, T6"),
    }
    Ok(out)
}

/// Local complementation along the edge `(j, k)` followed by the sign
/// sequence shared by T(iii), E2 and E(ii). Fills are left to the caller.
/// `before` is the graph as it was when the rule started.
pub(crate) fn edge_pivot_signs(
    g: &mut StabilizerGraph,
    before: &StabilizerGraph,
    j: usize,
    k: usize,
) {
    let common = before.common_neighbors(j, k);
    g.local_complement_edge_mut(j, k);
    g.flip_signs_mut(&common);
    for d in [j, k] {
        if before.is_negative(d) {
            g.flip_sign_mut(d);
            g.flip_neighbor_signs_mut(d);
        }
    }
}

/// The T(iv) sequence for solid looped `solid` joined to hollow `hollow`:
/// local complement on both, drop the solid node's loop, advance its current
/// neighbors' loops, fill the hollow node, then fix signs. E(i) is this
/// followed by hollowing `solid`.
pub(crate) fn looped_pivot(
    g: &mut StabilizerGraph,
    before: &StabilizerGraph,
    solid: usize,
    hollow: usize,
) {
    let common = before.common_neighbors(solid, hollow);
    g.local_complement_mut(solid);
    g.local_complement_mut(hollow);
    g.remove_loop_mut(solid);
    g.advance_neighbor_loops_mut(solid);
    g.flip_fill_mut(hollow);
    g.flip_signs_mut(&common);
    if before.is_negative(solid) {
        g.flip_sign_mut(solid);
        g.flip_neighbor_signs_mut(solid);
    }
    if before.is_negative(hollow) {
        g.flip_neighbor_signs_mut(hollow);
    }
}

/// Which of T(viii)–T(x) applies CZ between `j` and `k` of a reduced graph.
pub fn cz_rule(g: &StabilizerGraph, j: usize, k: usize) -> Result<Rule> {
    check_pair(j, k, g.n())?;
    require_reduced(g)?;
    Ok(match (g.is_hollow(j), g.is_hollow(k)) {
        (false, false) => Rule::Tviii,
        (true, true) => Rule::Tx,
        _ => Rule::Tix,
    })
}

/// Applies CZ between `j` and `k` of a reduced graph.
pub fn apply_cz_reduced(g: &StabilizerGraph, j: usize, k: usize) -> Result<StabilizerGraph> {
    let rule = cz_rule(g, j, k)?;
    let mut out = g.clone();
    match rule {
        Rule::Tviii => out.toggle_edge_mut(j, k),
        Rule::Tix => {
            let (hollow, solid) = if g.is_hollow(j) { (j, k) } else { (k, j) };
            for m in g.neighborhood(hollow).ones().filter(|&m| m != solid) {
                out.toggle_edge_mut(solid, m);
            }
            if g.has_edge(j, k) ^ g.is_negative(hollow) {
                out.flip_sign_mut(solid);
            }
        }
        Rule::Tx => {
            out.local_complement_edge_step3_mut(j, k);
            out.flip_signs_mut(&g.common_neighbors(j, k));
            if g.is_negative(j) {
                out.flip_signs_mut(g.neighborhood(k));
            }
            if g.is_negative(k) {
                out.flip_signs_mut(g.neighborhood(j));
            }
        }
        _ => unreachable!("cz_rule yields T(viii)-T(x)"),
    }
    Ok(out)
}

/// Applies CZ to any graph: reduce first, then use T(viii)–T(x).
pub fn apply_cz(g: &StabilizerGraph, j: usize, k: usize) -> Result<StabilizerGraph> {
    check_pair(j, k, g.n())?;
    apply_cz_reduced(&equivalence::to_reduced(g), j, k)
}

/// Applies a gate with the general rules; CZ goes through reduction.
pub fn apply_gate(g: &StabilizerGraph, gate: Gate) -> Result<StabilizerGraph> {
    match gate {
        Gate::Local(l, j) => apply_local(g, l, j),
        Gate::Cz(j, k) => apply_cz(g, j, k),
    }
}

/// Applies a gate to a reduced graph with the reduced rules.
pub fn apply_gate_reduced(g: &StabilizerGraph, gate: Gate) -> Result<StabilizerGraph> {
    match gate {
        Gate::Local(l, j) => apply_local_reduced(g, l, j),
        Gate::Cz(j, k) => apply_cz_reduced(g, j, k),
    }
}

/// The rule a gate triggers, for either rule family.
pub fn rule_for(g: &StabilizerGraph, gate: Gate, reduced: bool) -> Result<Rule> {
    match (gate, reduced) {
        (Gate::Local(l, j), false) => local_rule(g, l, j),
        (Gate::Local(l, j), true) => reduced_local_rule(g, l, j),
        (Gate::Cz(j, k), _) => {
            if reduced {
                cz_rule(g, j, k)
            } else {
                check_pair(j, k, g.n())?;
                cz_rule(&equivalence::to_reduced(g), j, k)
            }
        }
    }
}

/// Left-to-right fold of [`apply_gate`].
pub fn apply_sequence(g: &StabilizerGraph, gates: &[Gate]) -> Result<StabilizerGraph> {
    gates
        .iter()
        .try_fold(g.clone(), |acc, &gate| apply_gate(&acc, gate))
}

/// Left-to-right fold of [`apply_gate_reduced`]; the input must be reduced.
pub fn apply_sequence_reduced(g: &StabilizerGraph, gates: &[Gate]) -> Result<StabilizerGraph> {
    require_reduced(g)?;
    gates
        .iter()
        .try_fold(g.clone(), |acc, &gate| apply_gate_reduced(&acc, gate))
}

/// Expands S†, X and Y into the generating set.
pub fn expand(gates: &[ExtendedGate]) -> Vec<Gate> {
    gates
        .iter()
        .flat_map(|&g| match g {
            ExtendedGate::Basic(b) => alloc::vec![b],
            ExtendedGate::SDagger(q) => Gate::s_dagger(q).to_vec(),
            ExtendedGate::X(q) => Gate::pauli_x(q).to_vec(),
            ExtendedGate::Y(q) => Gate::pauli_y(q).to_vec(),
        })
        .collect()
}

/// Gates outside {H, S, Z, CZ} that are composed from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedGate {
    Basic(Gate),
    SDagger(usize),
    X(usize),
    Y(usize),
}
