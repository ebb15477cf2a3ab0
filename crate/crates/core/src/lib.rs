//! Stabilizer states as decorated graphs.
//!
//! A stabilizer graph is a labeled simple graph whose nodes carry three
//! decorations: fill (solid or hollow), a loop, and a sign. It denotes the
//! output of a graph-form circuit: Hadamards on every qubit, a layer of CZ
//! gates along the edges, then terminal Z, S and H gates selected by the
//! sign, loop and hollow decorations.
//!
//! The crate provides
//!
//! - binary symplectic Pauli algebra with sign tracking and the canonical
//!   form of generator matrices ([`pauli`]),
//! - the decorated graph and its primitive moves ([`graph`]),
//! - graph-form circuits and their signed generators ([`circuit`]),
//! - generator matrix to graph conversion ([`convert`]),
//! - Clifford gates as graph rewrites ([`transforms`]),
//! - equivalence rules and a decision procedure for state equality
//!   ([`equivalence`]),
//! - a dense statevector oracle used to cross-check all of the above
//!   ([`oracle`]).
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use stabgraph::equivalence::graphs_equivalent;
//! use stabgraph::transforms::apply_sequence;
//! use stabgraph::{Gate, StabilizerGraph};
//!
//! let plus = StabilizerGraph::new(2);
//! let bell = apply_sequence(&plus, &[Gate::cz(0, 1), Gate::h(1)])?;
//! let other = apply_sequence(&plus, &[Gate::cz(0, 1), Gate::h(0)])?;
//! assert!(graphs_equivalent(&bell, &other)?);
//! # Ok::<(), stabgraph::Error>(())
//! ```

#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod circuit;
pub mod convert;
pub mod equivalence;
mod error;
pub mod gate;
pub mod graph;
pub mod oracle;
pub mod pauli;
mod rule;
pub mod transforms;

pub use circuit::GraphFormCircuit;
pub use error::{Error, Result};
pub use gate::{Gate, LocalGate};
pub use graph::{Fill, StabilizerGraph};
pub use pauli::{GeneratorMatrix, PauliString};
pub use rule::Rule;
