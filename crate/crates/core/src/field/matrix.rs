use alloc::vec::Vec;

use super::PrimeField;
use crate::error::{Error, Result};

/// A square matrix over a prime field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldMatrix {
    n: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn new(n: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        Ok(FieldMatrix { n, data })
    }

    pub fn zero(n: usize) -> Self {
        FieldMatrix {
            n,
            data: alloc::vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n {
            m.data[k * n + k] = 1;
        }
        m
    }

    /// `u vᵀ`.
    pub fn outer(f: &PrimeField, u: &[u64], v: &[u64]) -> Self {
        let n = u.len();
        let mut data = Vec::with_capacity(n * n);
        for &a in u {
            for &b in v {
                data.push(f.mul(a, b));
            }
        }
        FieldMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.n + c]
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn mul(&self, f: &PrimeField, other: &Self) -> Self {
        let n = self.n;
        let mut data = alloc::vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] = f.add(data[r * n + c], f.mul(a, other.get(k, c)));
                }
            }
        }
        FieldMatrix { n, data }
    }

    /// Gaussian elimination.
    pub fn rank(&self, f: &PrimeField) -> usize {
        let n = self.n;
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..n {
            let Some(piv) = (rank..n).find(|&r| a[r * n + c] != 0) else {
                continue;
            };
            for k in 0..n {
                a.swap(rank * n + k, piv * n + k);
            }
            let inv = f.inv(a[rank * n + c]).expect("pivot is nonzero");
            for r in 0..n {
                if r != rank && a[r * n + c] != 0 {
                    let factor = f.mul(a[r * n + c], inv);
                    for k in 0..n {
                        a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[rank * n + k]));
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// `T_nF`: all `n × n` matrices over `GF(p)` with the usual product.
#[derive(Clone, Debug)]
pub struct FullMatrixSemigroup {
    pub field: PrimeField,
    pub n: usize,
    pub elements: Vec<FieldMatrix>,
}

impl FullMatrixSemigroup {
    /// Matrices of rank at most one, including `0`.
    pub fn rank_at_most_one(&self) -> Vec<&FieldMatrix> {
        self.elements.iter().filter(|m| m.rank(&self.field) <= 1).collect()
    }

    /// Checks that the rank-≤1 matrices form a two-sided ideal whose nonzero
    /// members all generate one another (`B = UCV` for some `U`, `V`).
    pub fn rank_one_ideal_check(&self) -> bool {
        let f = &self.field;
        let ideal = self.rank_at_most_one();
        let in_ideal = |m: &FieldMatrix| m.rank(f) <= 1;
        let closed = ideal.iter().all(|b| {
            self.elements
                .iter()
                .all(|a| in_ideal(&a.mul(f, b)) && in_ideal(&b.mul(f, a)))
        });
        if !closed {
            return false;
        }
        let nonzero: Vec<&&FieldMatrix> = ideal.iter().filter(|m| !m.is_zero()).collect();
        nonzero.iter().all(|b| {
            let reach: alloc::collections::BTreeSet<FieldMatrix> = self
                .elements
                .iter()
                .flat_map(|u| {
                    let ub = u.mul(f, b);
                    self.elements.iter().map(move |v| ub.mul(f, v))
                })
                .collect();
            nonzero.iter().all(|c| reach.contains(**c))
        })
    }
}

/// Enumerates `T_nF`; refuses more than `limit` elements.
pub fn full_matrix_semigroup(p: u64, n: usize, limit: u64) -> Result<FullMatrixSemigroup> {
    let field = PrimeField::new(p)?;
    let count = (p as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    if count > limit as u128 {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget: limit,
        });
    }
    let elements = field
        .vectors(n * n)
        .into_iter()
        .map(|data| FieldMatrix { n, data })
        .collect();
    Ok(FullMatrixSemigroup { field, n, elements })
}
