//! Randomized rule-versus-oracle checks, one suite per rule.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    apply_gate_dense, random_graph_with, random_reduced_graph_with, repair_reduced,
    states_equal_up_to_global_phase, statevector_from_graph, DEFAULT_TOLERANCE,
};
use crate::equivalence::{apply_e1, apply_e2, apply_ei, apply_eii};
use crate::error::Result;
use crate::gate::Gate;
use crate::graph::{Fill, StabilizerGraph};
use crate::rule::Rule;
use crate::transforms::{apply_gate, apply_gate_reduced, rule_for};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleReport {
    pub rule: Rule,
    pub cases: usize,
    pub failures: usize,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn targets_needed(rule: Rule) -> usize {
    match rule {
        Rule::Tiii
        | Rule::Tiv
        | Rule::Tviii
        | Rule::Tix
        | Rule::Tx
        | Rule::E2
        | Rule::Ei
        | Rule::Eii => 2,
        _ => 1,
    }
}

fn gate_for(rule: Rule, targets: &[usize]) -> Option<Gate> {
    let j = targets[0];
    Some(match rule {
        Rule::T1 | Rule::Ti | Rule::Tii | Rule::Tiii | Rule::Tiv | Rule::Tv => Gate::h(j),
        Rule::T2 | Rule::T3 | Rule::T4 | Rule::Tvi | Rule::Tvii => Gate::s(j),
        Rule::T5 | Rule::T6 => Gate::z(j),
        Rule::Tviii | Rule::Tix | Rule::Tx => Gate::cz(j, targets[1]),
        Rule::E1 | Rule::E2 | Rule::Ei | Rule::Eii => return None,
    })
}

fn set(g: &mut StabilizerGraph, j: usize, hollow: bool, looped: bool) {
    let fill = if hollow { Fill::Hollow } else { Fill::Solid };
    g.set_fill(j, fill).expect("in range");
    g.set_loop(j, looped).expect("in range");
}

fn make_neighbors_solid(g: &mut StabilizerGraph, j: usize) {
    for k in g.neighbors(j).expect("in range") {
        g.set_fill(k, Fill::Solid).expect("in range");
    }
}

/// A random graph on `n` nodes on which `rule` applies, with its targets.
///
/// For T(iii), T(iv) and the CZ rules the first target is the node the gate
/// names; for E(i) and E(ii) the targets are `(hollow, solid)`.
pub fn rule_instance<R: Rng + ?Sized>(
    rule: Rule,
    n: usize,
    rng: &mut R,
) -> Option<(StabilizerGraph, Vec<usize>)> {
    if n < targets_needed(rule) {
        return None;
    }
    let j = rng.random_range(0..n);
    let k = loop {
        if n == 1 {
            break j;
        }
        let k = rng.random_range(0..n);
        if k != j {
            break k;
        }
    };
    let mut g = if rule.is_reduced_rule() {
        random_reduced_graph_with(rng, n)
    } else {
        random_graph_with(rng, n)
    };
    let looped = rng.random();
    let targets = match rule {
        Rule::T1 | Rule::T5 => {
            g.set_fill(
                j,
                if rule == Rule::T5 {
                    Fill::Solid
                } else {
                    g.fill(j)
                },
            )
            .expect("in range");
            vec![j]
        }
        Rule::T2 => {
            set(&mut g, j, false, looped);
            vec![j]
        }
        Rule::T3 | Rule::T4 => {
            set(&mut g, j, true, rule == Rule::T4);
            vec![j]
        }
        Rule::T6 => {
            set(&mut g, j, true, looped);
            vec![j]
        }
        Rule::Ti | Rule::Tii => {
            set(&mut g, j, false, rule == Rule::Tii);
            make_neighbors_solid(&mut g, j);
            vec![j]
        }
        Rule::Tiii | Rule::Tiv => {
            set(&mut g, j, false, rule == Rule::Tiv);
            g.set_edge(j, k, true).expect("distinct");
            set(&mut g, k, true, false);
            g = repair_reduced(&g);
            vec![j, k]
        }
        Rule::Tv | Rule::Tvii => {
            set(&mut g, j, true, false);
            g = repair_reduced(&g);
            vec![j]
        }
        Rule::Tvi => {
            set(&mut g, j, false, looped);
            vec![j]
        }
        Rule::Tviii => {
            set(&mut g, j, false, looped);
            set(&mut g, k, false, rng.random());
            vec![j, k]
        }
        Rule::Tix => {
            set(&mut g, j, true, false);
            set(&mut g, k, false, looped);
            g = repair_reduced(&g);
            if rng.random() {
                vec![j, k]
            } else {
                vec![k, j]
            }
        }
        Rule::Tx => {
            set(&mut g, j, true, false);
            set(&mut g, k, true, false);
            g = repair_reduced(&g);
            vec![j, k]
        }
        Rule::E1 => {
            g.set_loop(j, true).expect("in range");
            vec![j]
        }
        Rule::E2 => {
            g.set_loop(j, false).expect("in range");
            g.set_loop(k, false).expect("in range");
            g.set_edge(j, k, true).expect("distinct");
            vec![j, k]
        }
        Rule::Ei | Rule::Eii => {
            set(&mut g, j, true, false);
            set(&mut g, k, false, rule == Rule::Ei);
            g.set_edge(j, k, true).expect("distinct");
            g = repair_reduced(&g);
            vec![j, k]
        }
    };
    Some((g, targets))
}

/// Applies `rule` at `targets` and compares with the oracle: a gate rule must
/// match the gate applied to the dense state, an equivalence rule must leave
/// the state unchanged. Reduced rules must also yield a reduced graph, and
/// E(i)/E(ii) must keep the hollow count. A dispatcher picking a different
/// rule counts as a failure.
pub fn check_rule(rule: Rule, g: &StabilizerGraph, targets: &[usize]) -> Result<bool> {
    let before = statevector_from_graph(g)?;
    let (after, expected) = match gate_for(rule, targets) {
        Some(gate) => {
            let reduced = rule.is_reduced_rule();
            if rule_for(g, gate, reduced)? != rule {
                return Ok(false);
            }
            let out = if reduced {
                apply_gate_reduced(g, gate)?
            } else {
                apply_gate(g, gate)?
            };
            if reduced && !out.is_reduced() {
                return Ok(false);
            }
            (out, apply_gate_dense(&before, gate)?)
        }
        None => {
            let out = match rule {
                Rule::E1 => apply_e1(g, targets[0])?,
                Rule::E2 => apply_e2(g, targets[0], targets[1])?,
                Rule::Ei => apply_ei(g, targets[0], targets[1])?,
                _ => apply_eii(g, targets[0], targets[1])?,
            };
            if matches!(rule, Rule::Ei | Rule::Eii)
                && (!out.is_reduced() || out.hollow_count() != g.hollow_count())
            {
                return Ok(false);
            }
            (out, before)
        }
    };
    states_equal_up_to_global_phase(
        &statevector_from_graph(&after)?,
        &expected,
        DEFAULT_TOLERANCE,
    )
}

/// Runs `cases` random instances of every rule on graphs of 1 to `n_max`
/// nodes (2 to `n_max` for two-node rules).
pub fn verify_rules(n_max: usize, seed: u64, cases: usize) -> Vec<RuleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Rule::ALL
        .iter()
        .map(|&rule| {
            let min_n = targets_needed(rule);
            let mut report = RuleReport {
                rule,
                cases: 0,
                failures: 0,
            };
            if n_max < min_n {
                return report;
            }
            for _ in 0..cases {
                let n = rng.random_range(min_n..=n_max);
                let (g, targets) = rule_instance(rule, n, &mut rng).expect("n is large enough");
                report.cases += 1;
                if !check_rule(rule, &g, &targets).unwrap_or(false) {
                    report.failures += 1;
                }
            }
            report
        })
        .collect()
}
