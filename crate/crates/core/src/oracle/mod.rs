//! Brute-force verification: dense statevector simulation and stabilizer
//! checks, independent of the graph rules.
//!
//! Qubit 0 is the most significant bit of an amplitude index.

mod random;
mod verify;

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::circuit::{circuit_from_graph, GraphFormCircuit};
use crate::error::{check_index, check_pair, check_size, Error, Result};
use crate::gate::{Gate, LocalGate};
use crate::graph::StabilizerGraph;
use crate::pauli::PauliString;

pub use random::{
    random_circuit, random_graph, random_graph_with, random_reduced_graph,
    random_reduced_graph_with, random_stabilizer_matrix, repair_reduced,
};
pub use verify::{check_rule, rule_instance, verify_rules, RuleReport};

/// Largest register simulated by default (4096 amplitudes).
pub const DEFAULT_QUBIT_CAP: usize = 12;

/// Default overlap tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// `|0…0⟩` on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        Self::check_cap(n, DEFAULT_QUBIT_CAP)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amplitudes })
    }

    /// Wraps raw amplitudes. The length must be a power of two and the
    /// squared norm within [`DEFAULT_TOLERANCE`] of one.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Option<Self> {
        let len = amplitudes.len();
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !len.is_power_of_two() || (norm - 1.0).abs() > DEFAULT_TOLERANCE {
            return None;
        }
        Some(Self {
            n: len.trailing_zeros() as usize,
            amplitudes,
        })
    }

    fn check_cap(n: usize, cap: usize) -> Result<()> {
        if n > cap {
            Err(Error::QubitCapExceeded { n, cap })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    fn mask(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Statevector) -> Result<Complex64> {
        check_size(self.n, other.n)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn apply_gate(&mut self, gate: Gate) -> Result<()> {
        match gate {
            Gate::Local(g, q) => {
                check_index(q, self.n)?;
                let m = self.mask(q);
                match g {
                    LocalGate::H => {
                        for i in (0..self.amplitudes.len()).filter(|i| i & m == 0) {
                            let (a, b) = (self.amplitudes[i], self.amplitudes[i | m]);
                            self.amplitudes[i] = (a + b) * FRAC_1_SQRT_2;
                            self.amplitudes[i | m] = (a - b) * FRAC_1_SQRT_2;
                        }
                    }
                    LocalGate::S => self.scale_where(|i| i & m != 0, Complex64::i()),
                    LocalGate::Z => self.scale_where(|i| i & m != 0, Complex64::new(-1.0, 0.0)),
                }
            }
            Gate::Cz(a, b) => {
                check_pair(a, b, self.n)?;
                let both = self.mask(a) | self.mask(b);
                self.scale_where(|i| i & both == both, Complex64::new(-1.0, 0.0));
            }
        }
        Ok(())
    }

    fn scale_where(&mut self, pred: impl Fn(usize) -> bool, factor: Complex64) {
        for (i, amp) in self.amplitudes.iter_mut().enumerate() {
            if pred(i) {
                *amp *= factor;
            }
        }
    }

    /// `p · self` for a signed Pauli string.
    pub fn apply_pauli(&self, p: &PauliString) -> Result<Statevector> {
        check_size(self.n, p.n())?;
        let mut xmask = 0;
        let mut zmask = 0;
        let mut y_count = 0;
        for q in 0..self.n {
            let (x, z) = (p.x().get(q), p.z().get(q));
            if x {
                xmask |= self.mask(q);
            }
            if z {
                zmask |= self.mask(q);
            }
            y_count += usize::from(x && z);
        }
        // Y = iXZ on each qubit
        let mut global = Complex64::i().powu(y_count as u32);
        if p.is_negative() {
            global = -global;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for (i, &amp) in self.amplitudes.iter().enumerate() {
            let parity = (i & zmask).count_ones() % 2 == 1;
            let phase = if parity { -global } else { global };
            out[i ^ xmask] += phase * amp;
        }
        Ok(Statevector {
            n: self.n,
            amplitudes: out,
        })
    }
}

/// Runs the full graph-form circuit on `|0…0⟩`: H on every qubit, the CZ
/// layer, then terminal Z, S, H.
pub fn statevector_from_circuit(c: &GraphFormCircuit) -> Result<Statevector> {
    statevector_from_circuit_capped(c, DEFAULT_QUBIT_CAP)
}

pub fn statevector_from_circuit_capped(c: &GraphFormCircuit, cap: usize) -> Result<Statevector> {
    Statevector::check_cap(c.n(), cap)?;
    let mut v = Statevector::zero(c.n())?;
    for q in 0..c.n() {
        v.apply_gate(Gate::h(q))?;
    }
    for gate in c.gates() {
        v.apply_gate(gate)?;
    }
    Ok(v)
}

/// The state a stabilizer graph denotes.
pub fn statevector_from_graph(g: &StabilizerGraph) -> Result<Statevector> {
    statevector_from_circuit(&circuit_from_graph(g))
}

pub fn apply_gate_dense(v: &Statevector, gate: Gate) -> Result<Statevector> {
    let mut out = v.clone();
    out.apply_gate(gate)?;
    Ok(out)
}

/// `|⟨v1|v2⟩| ≥ 1 − tol`.
pub fn states_equal_up_to_global_phase(
    v1: &Statevector,
    v2: &Statevector,
    tol: f64,
) -> Result<bool> {
    let overlap = v1.inner(v2)?.norm_sqr();
    let bound = 1.0 - tol;
    Ok(overlap >= bound * bound)
}

/// Whether `v` is a +1 eigenvector of every signed generator, within `tol` in
/// squared distance.
pub fn stabilizer_check(v: &Statevector, generators: &[PauliString], tol: f64) -> Result<bool> {
    for g in generators {
        let gv = v.apply_pauli(g)?;
        let dist: f64 = gv
            .amplitudes
            .iter()
            .zip(&v.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        if dist > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: f64 = FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(v: &Statevector, expected: &[Complex64]) -> bool {
        v.amplitudes()
            .iter()
            .zip(expected)
            .all(|(a, b)| (a - b).norm_sqr() < 1e-20)
    }

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn circuit_examples() {
        let plus = statevector_from_circuit(&GraphFormCircuit::new(1)).unwrap();
        assert!(close(&plus, &[c(H, 0.0), c(H, 0.0)]));

        let mut zero = GraphFormCircuit::new(1);
        zero.add_h(0).unwrap();
        let v = statevector_from_circuit(&zero).unwrap();
        assert!(close(&v, &[c(1.0, 0.0), c(0.0, 0.0)]));

        let mut bell = GraphFormCircuit::new(2);
        bell.add_cz(0, 1).unwrap();
        bell.add_h(1).unwrap();
        let v = statevector_from_circuit(&bell).unwrap();
        let z = c(0.0, 0.0);
        assert!(close(&v, &[c(H, 0.0), z, z, c(H, 0.0)]));
    }

    #[test]
    fn cap_is_enforced() {
        let big = GraphFormCircuit::new(13);
        assert_eq!(
            statevector_from_circuit(&big),
            Err(Error::QubitCapExceeded { n: 13, cap: 12 })
        );
        assert!(statevector_from_circuit_capped(&GraphFormCircuit::new(3), 2).is_err());
    }

    #[test]
    fn dense_gate_examples() {
        let zero = Statevector::zero(1).unwrap();
        let plus = apply_gate_dense(&zero, Gate::h(0)).unwrap();
        assert!(close(&plus, &[c(H, 0.0), c(H, 0.0)]));
        let s_plus = apply_gate_dense(&plus, Gate::s(0)).unwrap();
        assert!(close(&s_plus, &[c(H, 0.0), c(0.0, H)]));

        let z = c(0.0, 0.0);
        let one_one = Statevector::from_amplitudes(vec![z, z, z, c(1.0, 0.0)]).unwrap();
        let out = apply_gate_dense(&one_one, Gate::cz(0, 1)).unwrap();
        assert!(close(&out, &[z, z, z, c(-1.0, 0.0)]));
        assert!(apply_gate_dense(&one_one, Gate::h(2)).is_err());
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let v = Statevector::zero(2).unwrap();
        let flipped = v.apply_pauli(&p("XI")).unwrap();
        assert!(close(
            &flipped,
            &[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]
        ));
        let y = v.apply_pauli(&p("-IY")).unwrap();
        assert!(close(
            &y,
            &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)]
        ));
    }

    #[test]
    fn global_phase_examples() {
        let v = statevector_from_circuit(&GraphFormCircuit::new(2)).unwrap();
        assert!(states_equal_up_to_global_phase(&v, &v, DEFAULT_TOLERANCE).unwrap());
        let phase = Complex64::new(H, H);
        let rotated =
            Statevector::from_amplitudes(v.amplitudes().iter().map(|a| a * phase).collect())
                .unwrap();
        assert!(states_equal_up_to_global_phase(&v, &rotated, DEFAULT_TOLERANCE).unwrap());

        let zero = Statevector::zero(1).unwrap();
        let one = apply_gate_dense(
            &apply_gate_dense(&apply_gate_dense(&zero, Gate::h(0)).unwrap(), Gate::z(0)).unwrap(),
            Gate::h(0),
        )
        .unwrap();
        assert!(!states_equal_up_to_global_phase(&zero, &one, DEFAULT_TOLERANCE).unwrap());
        assert!(states_equal_up_to_global_phase(&zero, &v, DEFAULT_TOLERANCE).is_err());
    }

    #[test]
    fn stabilizer_check_examples() {
        let zero = Statevector::zero(1).unwrap();
        assert!(stabilizer_check(&zero, &[p("+Z")], DEFAULT_TOLERANCE).unwrap());
        assert!(!stabilizer_check(&zero, &[p("-Z")], DEFAULT_TOLERANCE).unwrap());

        let mut bell = GraphFormCircuit::new(2);
        bell.add_cz(0, 1).unwrap();
        bell.add_h(1).unwrap();
        let v = statevector_from_circuit(&bell).unwrap();
        assert!(stabilizer_check(&v, &[p("+XX"), p("+ZZ")], DEFAULT_TOLERANCE).unwrap());
        assert!(!stabilizer_check(&v, &[p("+XX"), p("-ZZ")], DEFAULT_TOLERANCE).unwrap());
        assert!(stabilizer_check(&v, &[p("+Z")], DEFAULT_TOLERANCE).is_err());
    }
}
