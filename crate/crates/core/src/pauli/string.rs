use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bits::BitRow;
use crate::error::{check_index, check_pair, check_size, Error, Result};
use crate::gate::{Gate, LocalGate};

/// Single-qubit Pauli matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// A signed Hermitian Pauli operator in binary (x|z) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitRow,
    z: BitRow,
    negative: bool,
}

/// Power of `i` picked up by the single-qubit product `P(x1,z1)·P(x2,z2)`.
fn phase_exponent(x1: bool, z1: bool, x2: bool, z2: bool) -> i32 {
    let (x2, z2) = (x2 as i32, z2 as i32);
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2 - x2,
        (true, false) => z2 * (2 * x2 - 1),
        (false, true) => x2 * (1 - 2 * z2),
    }
}

impl PauliString {
    /// The identity on `n` qubits with a `+` sign.
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitRow::zeros(n),
            z: BitRow::zeros(n),
            negative: false,
        }
    }

    pub fn from_bits(x: BitRow, z: BitRow, negative: bool) -> Result<Self> {
        check_size(x.len(), z.len())?;
        Ok(Self { x, z, negative })
    }

    pub fn from_paulis<I: IntoIterator<Item = Pauli>>(negative: bool, paulis: I) -> Self {
        let (x, z): (Vec<bool>, Vec<bool>) = paulis.into_iter().map(Pauli::bits).unzip();
        Self {
            x: BitRow::from_bools(x),
            z: BitRow::from_bools(z),
            negative,
        }
    }

    /// `±P` acting on a single qubit `q` of `n`.
    pub fn single(n: usize, q: usize, pauli: Pauli) -> Self {
        let mut p = Self::identity(n);
        p.set(q, pauli);
        p
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitRow {
        &self.x
    }

    pub fn z(&self) -> &BitRow {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn set_negative(&mut self, negative: bool) {
        self.negative = negative;
    }

    pub fn negate(&mut self) {
        self.negative = !self.negative;
    }

    pub fn get(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set(&mut self, q: usize, pauli: Pauli) {
        let (x, z) = pauli.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn paulis(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.n()).map(|q| self.get(q))
    }

    pub fn is_identity(&self) -> bool {
        !self.x.any() && !self.z.any()
    }

    /// Symplectic product: `true` iff the two strings anticommute.
    pub fn skew_product(&self, other: &PauliString) -> Result<bool> {
        check_size(self.n(), other.n())?;
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    pub fn commutes_with(&self, other: &PauliString) -> Result<bool> {
        self.skew_product(other).map(|anti| !anti)
    }

    /// Operator product `self · other`.
    ///
    /// Fails with [`Error::ImaginaryPhase`] when the product is not Hermitian,
    /// which happens exactly when the operands anticommute.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        check_size(self.n(), other.n())?;
        let exponent: i32 = (0..self.n())
            .map(|q| phase_exponent(self.x.get(q), self.z.get(q), other.x.get(q), other.z.get(q)))
            .sum();
        let exponent = exponent.rem_euclid(4);
        if exponent % 2 == 1 {
            return Err(Error::ImaginaryPhase);
        }
        let mut x = self.x.clone();
        x.xor_assign(&other.x);
        let mut z = self.z.clone();
        z.xor_assign(&other.z);
        Ok(PauliString {
            x,
            z,
            negative: self.negative ^ other.negative ^ (exponent == 2),
        })
    }

    /// `U · self · U†` for a gate `U` from the generating set.
    pub fn conjugate(&self, gate: Gate) -> Result<PauliString> {
        let mut out = self.clone();
        out.conjugate_in_place(gate)?;
        Ok(out)
    }

    pub fn conjugate_in_place(&mut self, gate: Gate) -> Result<()> {
        let n = self.n();
        match gate {
            Gate::Local(g, q) => {
                check_index(q, n)?;
                let (x, z) = (self.x.get(q), self.z.get(q));
                match g {
                    LocalGate::H => {
                        self.negative ^= x && z;
                        self.x.set(q, z);
                        self.z.set(q, x);
                    }
                    LocalGate::S => {
                        self.negative ^= x && z;
                        self.z.set(q, z ^ x);
                    }
                    LocalGate::Z => self.negative ^= x,
                }
            }
            Gate::Cz(a, b) => {
                check_pair(a, b, n)?;
                let (xa, za, xb, zb) = (self.x.get(a), self.z.get(a), self.x.get(b), self.z.get(b));
                self.negative ^= xa && xb && (za ^ zb);
                self.z.set(a, za ^ xb);
                self.z.set(b, zb ^ xa);
            }
        }
        Ok(())
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        let letters: String = self.paulis().map(Pauli::letter).collect();
        f.write_str(&letters)
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to read a `±PPP` string; `position` counts characters from 0.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unexpected character {found:?} at position {position}")]
pub struct ParsePauliError {
    pub position: usize,
    pub found: Option<char>,
}

/// Parses `+XXZ`, `-IY` or `XZ` (sign optional, defaults to `+`). Both the
/// ASCII hyphen and U+2212 are accepted for minus.
impl FromStr for PauliString {
    type Err = ParsePauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars().peekable();
        let negative = match chars.peek() {
            Some('+') => {
                chars.next();
                false
            }
            Some('-' | '\u{2212}') => {
                chars.next();
                true
            }
            Some(_) => false,
            None => {
                return Err(ParsePauliError {
                    position: 0,
                    found: None,
                })
            }
        };
        let offset = usize::from(s.starts_with(['+', '-', '\u{2212}']));
        let paulis = chars
            .enumerate()
            .map(|(i, c)| {
                Pauli::from_letter(c).ok_or(ParsePauliError {
                    position: i + offset,
                    found: Some(c),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PauliString::from_paulis(negative, paulis))
    }
}
