use alloc::vec::Vec;
use core::fmt;

use super::PauliString;
use crate::bits::{self, BitRow};
use crate::error::{check_size, Error, Result};

/// `n` independent, pairwise commuting signed Pauli strings on `n` qubits.
///
/// Column `c` of every row acts on qubit `qubit_of_column[c]`. Matrices built
/// with [`GeneratorMatrix::new`] use the identity map; the canonical form
/// records its qubit swaps there.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: Vec<PauliString>,
    qubit_of_column: Vec<usize>,
}

impl GeneratorMatrix {
    pub fn new(rows: Vec<PauliString>) -> Result<Self> {
        let n = rows.len();
        Self::with_columns(rows, (0..n).collect())
    }

    pub fn with_columns(rows: Vec<PauliString>, qubit_of_column: Vec<usize>) -> Result<Self> {
        let m = Self {
            rows,
            qubit_of_column,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.qubit_of_column.len();
        if self.rows.len() != n {
            return Err(Error::RowCount {
                expected: n,
                found: self.rows.len(),
            });
        }
        for row in &self.rows {
            check_size(n, row.n())?;
        }
        let mut seen = BitRow::zeros(n);
        for &q in &self.qubit_of_column {
            if q >= n || seen.get(q) {
                return Err(Error::BadPermutation(n));
            }
            seen.set(q, true);
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.rows[i].skew_product(&self.rows[j])? {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        if bits::rank(&self.symplectic_rows()) != n {
            return Err(Error::DependentRows);
        }
        Ok(())
    }

    /// Rows as `2n`-bit vectors `(x | z)`.
    fn symplectic_rows(&self) -> Vec<BitRow> {
        self.rows
            .iter()
            .map(|r| BitRow::from_bools(r.x().iter().chain(r.z().iter())))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.qubit_of_column.len()
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    pub fn qubit_of_column(&self) -> &[usize] {
        &self.qubit_of_column
    }

    /// Rows re-expressed with column `q` acting on qubit `q`.
    pub fn rows_by_qubit(&self) -> Vec<PauliString> {
        let n = self.n();
        self.rows
            .iter()
            .map(|row| {
                let mut out = PauliString::identity(n);
                for (c, &q) in self.qubit_of_column.iter().enumerate() {
                    out.set(q, row.get(c));
                }
                out.set_negative(row.is_negative());
                out
            })
            .collect()
    }

    pub fn into_rows(self) -> Vec<PauliString> {
        self.rows
    }

    /// GF(2) rank of the X half.
    pub fn left_rank(&self) -> usize {
        let xs: Vec<BitRow> = self.rows.iter().map(|r| r.x().clone()).collect();
        bits::rank(&xs)
    }

    /// Row `target` becomes `row[target] · row[source]`.
    fn add_row(&mut self, target: usize, source: usize) {
        let product = self.rows[target]
            .multiply(&self.rows[source])
            .expect("rows of a generator matrix commute");
        self.rows[target] = product;
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.rows {
            let (pa, pb) = (row.get(a), row.get(b));
            row.set(a, pb);
            row.set(b, pa);
        }
        self.qubit_of_column.swap(a, b);
    }

    /// Eliminates bit `col` of the X (`in_z == false`) or Z half from every row
    /// except `pivot`.
    fn clear_column(&mut self, pivot: usize, col: usize, in_z: bool) {
        for r in 0..self.rows.len() {
            let bit = if in_z {
                self.rows[r].z().get(col)
            } else {
                self.rows[r].x().get(col)
            };
            if r != pivot && bit {
                self.add_row(r, pivot);
            }
        }
    }

    /// Finds a pivot for `(row_start, col)` among rows `row_start..`, swapping
    /// in the lowest later column that has one if `col` itself has none.
    fn find_pivot(&mut self, row_start: usize, col: usize, in_z: bool) -> Option<usize> {
        let n = self.n();
        let has = |m: &Self, r: usize, c: usize| {
            if in_z {
                m.rows[r].z().get(c)
            } else {
                m.rows[r].x().get(c)
            }
        };
        let column = (col..n).find(|&c| (row_start..n).any(|r| has(self, r, c)))?;
        self.swap_columns(col, column);
        (row_start..n).find(|&r| has(self, r, col))
    }

    /// Row reduction with qubit swaps into the block shape
    ///
    /// ```text
    /// [ I A | B 0   ]
    /// [ 0 0 | Aᵀ I  ]
    /// ```
    ///
    /// with `B` symmetric. Returns the reduced matrix and its left rank `r`,
    /// the size of the upper-left identity. Row operations keep signs exact.
    pub fn to_canonical_form(&self) -> (GeneratorMatrix, usize) {
        let mut m = self.clone();
        let n = m.n();

        let mut rank = 0;
        while rank < n {
            let Some(pivot) = m.find_pivot(rank, rank, false) else {
                break;
            };
            m.rows.swap(rank, pivot);
            m.clear_column(rank, rank, false);
            rank += 1;
        }

        // Rows rank.. now have an empty X half; their Z half restricted to
        // columns rank.. has full rank.
        for row in rank..n {
            let pivot = m
                .find_pivot(row, row, true)
                .expect("independent commuting rows have a Z pivot");
            m.rows.swap(row, pivot);
            m.clear_column(row, row, true);
        }

        (m, rank)
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorMatrix")
            .field("rows", &self.rows)
            .field("qubit_of_column", &self.qubit_of_column)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn matrix(rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::new(rows.iter().map(|r| r.parse().unwrap()).collect()).unwrap()
    }

    fn strs(m: &GeneratorMatrix) -> Vec<alloc::string::String> {
        use alloc::string::ToString;
        m.rows().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn single_zero_state_is_already_canonical() {
        let m = matrix(&["+Z"]);
        let (c, r) = m.to_canonical_form();
        assert_eq!(r, 0);
        assert_eq!(strs(&c), ["+Z"]);
        assert_eq!(c.qubit_of_column(), [0]);
        assert_eq!(m.left_rank(), 0);
    }

    #[test]
    fn bell_canonical_form() {
        let (c, r) = matrix(&["+XX", "+ZZ"]).to_canonical_form();
        assert_eq!(r, 1);
        assert_eq!(strs(&c), ["+XX", "+ZZ"]);
        assert_eq!(c.left_rank(), 1);
    }

    #[test]
    fn ghz_canonical_form() {
        let (c, r) = matrix(&["+XXX", "+ZZI", "+IZZ"]).to_canonical_form();
        assert_eq!(r, 1);
        assert_eq!(strs(&c), ["+XXX", "+ZZI", "+ZIZ"]);
        assert_eq!(c.qubit_of_column(), [0, 1, 2]);
    }

    #[test]
    fn missing_x_pivot_swaps_qubits() {
        // Qubit 0 is |0>, qubit 1 is |+>: column 1 must move to the front.
        let (c, r) = matrix(&["+ZI", "+IX"]).to_canonical_form();
        assert_eq!(r, 1);
        assert_eq!(c.qubit_of_column(), [1, 0]);
        assert_eq!(strs(&c), ["+XI", "+IZ"]);
        assert_eq!(
            strs(&GeneratorMatrix::new(c.rows_by_qubit()).unwrap()),
            ["+IX", "+ZI"]
        );
    }

    #[test]
    fn sign_tracked_through_row_operations() {
        // XX·YY = (iZ)(iZ) = -ZZ
        let (c, _) = matrix(&["+XX", "+YY"]).to_canonical_form();
        assert_eq!(strs(&c), ["+XX", "-ZZ"]);
        let (c, _) = matrix(&["+XX", "-YY"]).to_canonical_form();
        assert_eq!(strs(&c), ["+XX", "+ZZ"]);
    }

    #[test]
    fn invalid_matrices_rejected() {
        let rows = |rs: &[&str]| rs.iter().map(|r| r.parse().unwrap()).collect::<Vec<_>>();
        assert_eq!(
            GeneratorMatrix::new(rows(&["+XI", "+ZI"])),
            Err(Error::NonCommuting(0, 1))
        );
        assert_eq!(
            GeneratorMatrix::new(rows(&["+ZZ", "-ZZ"])),
            Err(Error::DependentRows)
        );
        assert_eq!(
            GeneratorMatrix::new(rows(&["+ZZ"])),
            Err(Error::SizeMismatch {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            GeneratorMatrix::with_columns(rows(&["+ZI", "+IZ"]), vec![1, 1]),
            Err(Error::BadPermutation(2))
        );
    }
}
