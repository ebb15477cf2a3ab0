//! Binary symplectic representation of the Pauli group.
//!
//! A Pauli string on `n` qubits is stored as two bit rows `x` and `z` plus a
//! sign; qubit `q` carries `I`, `X`, `Z` or `Y` for `(x, z)` equal to
//! `(0, 0)`, `(1, 0)`, `(0, 1)` or `(1, 1)`. Only Hermitian strings are
//! represented, so the sign is always real.

mod matrix;
mod string;

pub use matrix::GeneratorMatrix;
pub use string::{ParsePauliError, Pauli, PauliString};
