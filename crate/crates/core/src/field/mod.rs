//! Prime fields, vectors and matrices over them, and the semigroups of
//! rank-1 matrices.

mod matrix;
mod rank_one;

pub use matrix::{full_matrix_semigroup, FieldMatrix, FullMatrixSemigroup};
pub use rank_one::{l2_quotient_check, one_zero_per_line, Rank1Semigroup};

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `GF(p)` on the residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Unsupported("characteristic above 2^32".into()));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// `a⁻¹` by Fermat; `None` for `0`.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, self.p - 2))
    }

    pub fn dot(&self, u: &[u64], v: &[u64]) -> u64 {
        u.iter().zip(v).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    pub fn scale(&self, k: u64, v: &[u64]) -> Vec<u64> {
        v.iter().map(|&a| self.mul(k, a)).collect()
    }

    pub fn add_vec(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        u.iter().zip(v).map(|(&a, &b)| self.add(a, b)).collect()
    }

    /// All `pⁿ` vectors of length `n`, lexicographically.
    pub fn vectors(&self, n: usize) -> Vec<Vec<u64>> {
        let mut out = alloc::vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..self.p).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// The lexicographically least nonzero vector of each 1-dimensional
    /// subspace of `GFⁿ`, sorted. Each has leading nonzero coordinate `1`.
    pub fn subspace_representatives(&self, n: usize) -> Vec<Vec<u64>> {
        self.vectors(n)
            .into_iter()
            .filter(|v| v.iter().find(|&&a| a != 0) == Some(&1))
            .collect()
    }

    /// `v` scaled so that its leading nonzero coordinate is `1`, with the
    /// scale factor removed; `None` for the zero vector.
    pub fn normalize(&self, v: &[u64]) -> Option<(Vec<u64>, u64)> {
        let lead = *v.iter().find(|&&a| a != 0)?;
        let inv = self.inv(lead)?;
        Some((self.scale(inv, v), lead))
    }
}
