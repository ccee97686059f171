use alloc::vec::Vec;

use super::{FieldMatrix, PrimeField};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::StructureMatrix;
use crate::semigroup::{Element, ReesSemigroup};

/// `L_nF`, the `n × n` matrices of rank at most one over `GF(p)`, as the Rees
/// matrix semigroup `𝓜(F*, T)` with `T(λ, i) = v_λᵀ v_i`.
///
/// The group index `k` stands for the residue `k + 1`, and `[i, k, λ]` is the
/// matrix `(k + 1) v_i v_λᵀ`.
#[derive(Clone, Debug)]
pub struct Rank1Semigroup {
    pub field: PrimeField,
    pub n: usize,
    /// `v_1, …, v_r`, sorted lexicographically.
    pub reps: Vec<Vec<u64>>,
    pub semigroup: ReesSemigroup,
}

impl Rank1Semigroup {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        let field = PrimeField::new(p)?;
        let reps = field.subspace_representatives(n);
        let r = reps.len();
        let mut entries = Vec::with_capacity(r * r);
        for lambda in &reps {
            for i in &reps {
                let t = field.dot(lambda, i);
                entries.push((t != 0).then(|| (t - 1) as usize));
            }
        }
        let t = StructureMatrix::new(r, r, entries)?;
        let semigroup = ReesSemigroup::new(FiniteGroup::units_mod(p)?, t)?;
        Ok(Rank1Semigroup {
            field,
            n,
            reps,
            semigroup,
        })
    }

    /// Index of the subspace spanned by a nonzero `v`.
    pub fn rep_index(&self, v: &[u64]) -> Option<usize> {
        let (u, _) = self.field.normalize(v)?;
        self.reps.iter().position(|r| *r == u)
    }

    /// `r = (pⁿ − 1)/(p − 1)`.
    pub fn subspace_count(&self) -> usize {
        self.reps.len()
    }

    pub fn to_matrix(&self, e: &Element) -> Result<FieldMatrix> {
        match *e {
            Element::Zero => Ok(FieldMatrix::zero(self.n)),
            Element::Triple { i, g, lambda } if self.semigroup.contains(e) => {
                let u = self.field.scale(g as u64 + 1, &self.reps[i]);
                Ok(FieldMatrix::outer(&self.field, &u, &self.reps[lambda]))
            }
            _ => Err(Error::InvalidElement(alloc::string::ToString::to_string(e))),
        }
    }

    /// The inverse of [`Self::to_matrix`]; errors on rank two or more.
    pub fn to_element(&self, a: &FieldMatrix) -> Result<Element> {
        if a.size() != self.n {
            return Err(Error::ShapeMismatch {
                expected: self.n,
                found: a.size(),
            });
        }
        if a.is_zero() {
            return Ok(Element::Zero);
        }
        let f = &self.field;
        let col = (0..self.n).map(|c| a.column(c)).find(|c| c.iter().any(|&x| x != 0)).unwrap();
        let row = (0..self.n).map(|r| a.row(r).to_vec()).find(|r| r.iter().any(|&x| x != 0)).unwrap();
        let (u, _) = f.normalize(&col).unwrap();
        let (v, _) = f.normalize(&row).unwrap();
        let i = self.reps.iter().position(|x| *x == u).unwrap();
        let lambda = self.reps.iter().position(|x| *x == v).unwrap();
        let base = FieldMatrix::outer(f, &u, &v);
        let (r, c) = (0..self.n)
            .flat_map(|r| (0..self.n).map(move |c| (r, c)))
            .find(|&(r, c)| base.get(r, c) != 0)
            .unwrap();
        let k = f.mul(a.get(r, c), f.inv(base.get(r, c)).unwrap());
        let e = Element::triple(i, (k - 1) as usize, lambda);
        if self.to_matrix(&e)? != *a {
            return Err(Error::InvalidElement("matrix has rank above one".into()));
        }
        Ok(e)
    }

    /// All elements of `L_nF` as matrices, in [`ReesSemigroup::elements`]
    /// order.
    pub fn matrices(&self) -> Vec<FieldMatrix> {
        self.semigroup
            .elements()
            .iter()
            .map(|e| self.to_matrix(e).expect("elements of the semigroup"))
            .collect()
    }

    /// Exhaustively checks that `to_matrix` is injective, hits every matrix of
    /// rank at most one, and turns Rees products into matrix products.
    pub fn check_isomorphism(&self) -> bool {
        let f = &self.field;
        let elements = self.semigroup.elements();
        let mats = self.matrices();
        let distinct: alloc::collections::BTreeSet<&FieldMatrix> = mats.iter().collect();
        if distinct.len() != mats.len() {
            return false;
        }
        // |L_nF| = 1 + (pⁿ − 1)² / (p − 1)
        let p = f.characteristic() as u128;
        let pn = p.pow(self.n as u32);
        if mats.len() as u128 != 1 + (pn - 1) * (pn - 1) / (p - 1) {
            return false;
        }
        if !mats.iter().all(|m| m.rank(f) <= 1) {
            return false;
        }
        if elements
            .iter()
            .zip(&mats)
            .any(|(e, m)| self.to_element(m).ok() != Some(*e))
        {
            return false;
        }
        elements.iter().zip(&mats).all(|(a, ma)| {
            elements.iter().zip(&mats).all(|(b, mb)| {
                self.to_matrix(&self.semigroup.mul(a, b)).ok() == Some(ma.mul(f, mb))
            })
        })
    }
}

/// A column permutation taking `m` onto `H_k`, when `m` is square with
/// exactly one zero in each row and each column.
pub fn one_zero_per_line(m: &StructureMatrix) -> Option<Vec<usize>> {
    if m.rows() != m.cols() {
        return None;
    }
    let k = m.rows();
    let mut perm = alloc::vec![usize::MAX; k];
    for r in 0..k {
        let zeros: Vec<usize> = (0..k).filter(|&c| !m.is_nonzero(r, c)).collect();
        let [c] = zeros[..] else { return None };
        if perm[c] != usize::MAX {
            return None;
        }
        perm[c] = r;
    }
    let identity: Vec<usize> = (0..k).collect();
    let permuted = m.shadow().permuted(&identity, &perm).ok()?;
    (permuted == StructureMatrix::hollow(k).ok()?).then_some(perm)
}

/// Checks that `(L₂GF(p))/H` is `S_{H_{p+1}}` up to a column permutation.
pub fn l2_quotient_check(p: u64) -> Result<bool> {
    let l2 = Rank1Semigroup::new(p, 2)?;
    let quotient = l2.semigroup.h_quotient();
    Ok(quotient.rows() as u64 == p + 1 && one_zero_per_line(quotient.matrix()).is_some())
}
