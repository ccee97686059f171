//! Structure matrices: `m × n` grids over `{0} ∪ G`, rows indexed by Λ and
//! columns by I.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A structure matrix. `None` is the entry 0, `Some(g)` is the group element
/// with index `g`. In a 0-1 matrix every nonzero entry is `Some(0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StructureMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<usize>>,
}

impl StructureMatrix {
    /// Row-major constructor.
    pub fn new(rows: usize, cols: usize, entries: Vec<Option<usize>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(StructureMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a 0-1 matrix from rows of `0`/`1` values.
    pub fn from_01<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(m * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for &v in row {
                entries.push(match v {
                    0 => None,
                    1 => Some(0),
                    _ => return Err(Error::NotZeroOne),
                });
            }
        }
        Self::new(m, n, entries)
    }

    /// `m × n` 0-1 matrix from a predicate on `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(if f(r, c) { Some(0) } else { None });
            }
        }
        Self::new(rows, cols, entries)
    }

    /// The identity matrix `I_k`.
    pub fn identity(k: usize) -> Result<Self> {
        Self::from_fn(k, k, |r, c| r == c)
    }

    /// The all-ones matrix `J_{m×n}`.
    pub fn all_ones(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| true)
    }

    /// `H_k = J_{k×k} − I_k`.
    pub fn hollow(k: usize) -> Result<Self> {
        Self::from_fn(k, k, |r, c| r != c)
    }

    /// Appends an all-ones final row and final column.
    pub fn border(&self) -> Self {
        let (m, n) = (self.rows, self.cols);
        let mut entries = Vec::with_capacity((m + 1) * (n + 1));
        for r in 0..=m {
            for c in 0..=n {
                entries.push(if r < m && c < n {
                    self.get(r, c)
                } else {
                    Some(0)
                });
            }
        }
        StructureMatrix {
            rows: m + 1,
            cols: n + 1,
            entries,
        }
    }

    /// Block-diagonal sum with zeros off the blocks.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut entries = alloc::vec![None; rows * cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[r * cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                entries[(self.rows + r) * cols + self.cols + c] = other.get(r, c);
            }
        }
        StructureMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Number of rows, `m = |Λ|`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, `n = |I|`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry `M(λ, i)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.entries[row * self.cols + col]
    }

    #[inline]
    pub fn is_nonzero(&self, row: usize, col: usize) -> bool {
        self.entries[row * self.cols + col].is_some()
    }

    pub fn entries(&self) -> &[Option<usize>] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[Option<usize>] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = Option<usize>> + '_ {
        (0..self.rows).map(move |r| self.get(r, col))
    }

    /// True when every nonzero entry is the group identity `identity`.
    pub fn is_zero_one(&self, identity: usize) -> bool {
        self.entries.iter().all(|e| e.is_none_or(|g| g == identity))
    }

    /// Checks that each row and each column holds a nonzero entry.
    pub fn check_regular(&self) -> Result<()> {
        if let Some(r) = (0..self.rows).find(|&r| self.row(r).iter().all(Option::is_none)) {
            return Err(Error::IrregularMatrix(format!("row {} is zero", r + 1)));
        }
        if let Some(c) = (0..self.cols).find(|&c| self.column(c).all(|e| e.is_none())) {
            return Err(Error::IrregularMatrix(format!("column {} is zero", c + 1)));
        }
        Ok(())
    }

    /// The 0-1 matrix with 1 wherever `self` is nonzero.
    pub fn shadow(&self) -> Self {
        StructureMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.map(|_| 0)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c));
            }
        }
        StructureMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The matrix `M'` with `M'(row_perm[λ], col_perm[i]) = M(λ, i)`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<Self> {
        if !is_permutation(row_perm, self.rows) || !is_permutation(col_perm, self.cols) {
            return Err(Error::Precondition(
                "row or column map is not a permutation".into(),
            ));
        }
        let mut entries = alloc::vec![None; self.entries.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries[row_perm[r] * self.cols + col_perm[c]] = self.get(r, c);
            }
        }
        Ok(StructureMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Deletes one row.
    pub fn without_row(&self, row: usize) -> Result<Self> {
        let entries = (0..self.rows)
            .filter(|&r| r != row)
            .flat_map(|r| self.row(r).iter().copied())
            .collect();
        Self::new(self.rows - 1, self.cols, entries)
    }

    /// Deletes one column.
    pub fn without_col(&self, col: usize) -> Result<Self> {
        let entries = (0..self.rows)
            .flat_map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(move |&(c, _)| c != col)
                    .map(|(_, &e)| e)
            })
            .collect();
        Self::new(self.rows, self.cols - 1, entries)
    }

    /// A string of `0`/`1` digits per row, for compact debugging.
    pub fn pattern(&self) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        for r in 0..self.rows {
            if r > 0 {
                s.push('/');
            }
            for c in 0..self.cols {
                s.push(if self.is_nonzero(r, c) { '1' } else { '0' });
            }
        }
        s
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    p.iter().all(|&x| x < n && !core::mem::replace(&mut seen[x], true))
}
