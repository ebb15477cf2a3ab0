use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected} qubits, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of bounds for {n} qubits")]
    IndexOutOfBounds { index: usize, n: usize },

    #[error("a two-qubit operation needs distinct qubits, got {0} twice")]
    SameQubit(usize),

    #[error("product of anticommuting Pauli operators has an imaginary phase")]
    ImaginaryPhase,

    #[error("generator rows {0} and {1} anticommute")]
    NonCommuting(usize, usize),

    #[error("generator rows are linearly dependent")]
    DependentRows,

    #[error("expected {expected} generator rows, found {found}")]
    RowCount { expected: usize, found: usize },

    #[error("qubit-of-column map is not a permutation of 0..{0}")]
    BadPermutation(usize),

    #[error("graph is not reduced")]
    NotReduced,

    #[error("rule precondition violated: {0}")]
    Precondition(&'static str),

    #[error("{n} qubits exceeds the statevector cap of {cap}")]
    QubitCapExceeded { n: usize, cap: usize },
}

pub(crate) fn check_index(index: usize, n: usize) -> Result<()> {
    if index < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfBounds { index, n })
    }
}

pub(crate) fn check_pair(a: usize, b: usize, n: usize) -> Result<()> {
    check_index(a, n)?;
    check_index(b, n)?;
    if a == b {
        return Err(Error::SameQubit(a));
    }
    Ok(())
}

pub(crate) fn check_size(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::SizeMismatch { expected, found })
    }
}
