//! Gate scripts: whitespace-separated tokens such as `H:0 S:2 CZ:0,1`.
//!
//! Besides the generating gates `H`, `S`, `Z` and `CZ`, the tokens `SDG`, `X`
//! and `Y` expand into their decompositions over those gates.

use stabgraph::transforms::{expand, ExtendedGate};
use stabgraph::Gate;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("gate token {position} ({token:?}): {message}")]
pub struct ScriptError {
    /// 1-based token position within the script.
    pub position: usize,
    pub token: String,
    pub message: String,
}

/// Parses a script for an `n`-qubit register into basic gates.
pub fn parse_script(script: &str, n: usize) -> Result<Vec<Gate>, ScriptError> {
    let mut gates = Vec::new();
    for (i, token) in script.split_whitespace().enumerate() {
        let fail = |message: String| ScriptError {
            position: i + 1,
            token: token.to_string(),
            message,
        };
        let (name, args) = token
            .split_once(':')
            .ok_or_else(|| fail("expected NAME:qubit".to_string()))?;
        let qubits = args
            .split(',')
            .map(|a| {
                let q: usize = a
                    .parse()
                    .map_err(|_| fail(format!("{a:?} is not a qubit index")))?;
                if q >= n {
                    return Err(fail(format!("qubit {q} out of range for {n} qubits")));
                }
                Ok(q)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arity = if name.eq_ignore_ascii_case("CZ") {
            2
        } else {
            1
        };
        if qubits.len() != arity {
            return Err(fail(format!("{name} takes {arity} qubit(s)")));
        }
        let q = qubits[0];
        let gate = match name.to_ascii_uppercase().as_str() {
            "H" => ExtendedGate::Basic(Gate::h(q)),
            "S" => ExtendedGate::Basic(Gate::s(q)),
            "Z" => ExtendedGate::Basic(Gate::z(q)),
            "SDG" => ExtendedGate::SDagger(q),
            "X" => ExtendedGate::X(q),
            "Y" => ExtendedGate::Y(q),
            "CZ" if q == qubits[1] => return Err(fail("CZ needs two distinct qubits".to_string())),
            "CZ" => ExtendedGate::Basic(Gate::cz(q, qubits[1])),
            _ => return Err(fail(format!("unknown gate {name:?}"))),
        };
        gates.extend(expand(&[gate]));
    }
    Ok(gates)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_tokens() {
        assert_eq!(
            parse_script("H:0  s:1\nCZ:1,0 Z:1", 2).unwrap(),
            vec![Gate::h(0), Gate::s(1), Gate::cz(1, 0), Gate::z(1)]
        );
    }

    #[test]
    fn expands_derived_tokens() {
        assert_eq!(
            parse_script("SDG:0", 1).unwrap(),
            Gate::s_dagger(0).to_vec()
        );
        assert_eq!(parse_script("Y:0", 1).unwrap(), Gate::pauli_y(0).to_vec());
    }

    #[test]
    fn rejects_malformed_tokens() {
        for (script, position) in [
            ("H0", 1),
            ("H:0 T:1", 2),
            ("CZ:0", 1),
            ("CZ:1,1", 1),
            ("H:5", 1),
            ("S:x", 1),
        ] {
            assert_eq!(
                parse_script(script, 2).unwrap_err().position,
                position,
                "{script}"
            );
        }
    }
}
