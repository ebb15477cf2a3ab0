//! The gate vocabulary shared by the Pauli algebra, the rewrite rules and the
//! oracle.

use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalGate {
    H,
    S,
    Z,
}

/// A gate from the generating set {H, S, Z, CZ} together with its targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Local(LocalGate, usize),
    Cz(usize, usize),
}

impl Gate {
    pub fn h(q: usize) -> Self {
        Gate::Local(LocalGate::H, q)
    }

    pub fn s(q: usize) -> Self {
        Gate::Local(LocalGate::S, q)
    }

    pub fn z(q: usize) -> Self {
        Gate::Local(LocalGate::Z, q)
    }

    pub fn cz(a: usize, b: usize) -> Self {
        Gate::Cz(a, b)
    }

    /// S† written in the generating set: S·S·S.
    pub fn s_dagger(q: usize) -> [Gate; 3] {
        [Gate::s(q); 3]
    }

    /// Pauli X written in the generating set: H·Z·H.
    pub fn pauli_x(q: usize) -> [Gate; 3] {
        [Gate::h(q), Gate::z(q), Gate::h(q)]
    }

    /// Pauli Y up to global phase: Z followed by X.
    pub fn pauli_y(q: usize) -> [Gate; 4] {
        [Gate::z(q), Gate::h(q), Gate::z(q), Gate::h(q)]
    }

    /// Largest qubit index the gate touches.
    pub fn max_qubit(&self) -> usize {
        match *self {
            Gate::Local(_, q) => q,
            Gate::Cz(a, b) => a.max(b),
        }
    }
}

impl fmt::Display for LocalGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocalGate::H => "H",
            LocalGate::S => "S",
            LocalGate::Z => "Z",
        })
    }
}

/// Formats as a script token, `H:3` or `CZ:0,2`.
impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Local(g, q) => write!(f, "{g}:{q}"),
            Gate::Cz(a, b) => write!(f, "CZ:{a},{b}"),
        }
    }
}
