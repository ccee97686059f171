//! Embedding `S_{H₃}` questions into `L_nF` for a prime field `F ≠ GF(2)`,
//! `n ≥ 3`.
//!
//! `T = {v₁, v₂, v₁+v₂}` with each vector orthogonal to exactly one member of
//! `T`. With `R` the vectors non-orthogonal to all of `T`, the gadget
//! `x [v,w] x` for `v, w ∈ R` is nonzero for every `v, w` iff both coordinates
//! of `x` lie in `T`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::search::{extend, EXTEND_NODES};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Rank1Semigroup};
use crate::poly::{Evaluation, Polynomial, Symbol, Variable};
use crate::semigroup::Element;

/// Least `(c, d)` with `1 + c² + d² ≡ 0 (mod p)`.
pub fn orthogonal_step(f: &PrimeField) -> Option<(u64, u64)> {
    let p = f.characteristic();
    (0..p)
        .flat_map(|c| (0..p).map(move |d| (c, d)))
        .find(|&(c, d)| f.add(1, f.add(f.mul(c, c), f.mul(d, d))) == 0)
}

/// `R(C)`: the nonzero vectors with nonzero dot product against every member of `C`.
pub fn non_orthogonal(f: &PrimeField, n: usize, c: &[Vec<u64>]) -> Vec<Vec<u64>> {
    f.vectors(n)
        .into_iter()
        .filter(|v| v.iter().any(|&a| a != 0) && c.iter().all(|w| f.dot(v, w) != 0))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Zeta {
    pub l: Rank1Semigroup,
    /// `v₁, v₂, v₁+v₂`.
    pub t: [Vec<u64>; 3],
    /// Subspace indices of `T`, in the same order.
    pub t_index: [usize; 3],
    /// Subspace indices meeting `R(T)`, sorted.
    pub r_index: Vec<usize>,
}

impl Zeta {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        if p == 2 {
            return Err(Error::Unsupported("the field must differ from GF(2)".into()));
        }
        if n < 3 {
            return Err(Error::Precondition(format!("zeta needs n >= 3, got {}", n)));
        }
        let l = Rank1Semigroup::new(p, n)?;
        let f = l.field;
        let (c, d) = orthogonal_step(&f).ok_or_else(|| Error::Precondition("no solution of 1 + c² + d² = 0".into()))?;
        let mut v1 = alloc::vec![0; n];
        v1[0] = 1;
        let mut v2 = alloc::vec![0; n];
        v2[1] = c;
        v2[2] = d;
        let v3 = f.add_vec(&v1, &v2);
        let t = [v1, v2, v3];
        let t_index = [0, 1, 2].map(|k| l.rep_index(&t[k]).expect("nonzero"));
        let mut r_index: Vec<usize> = non_orthogonal(&f, n, &t)
            .iter()
            .map(|v| l.rep_index(v).expect("nonzero"))
            .collect();
        r_index.sort_unstable();
        r_index.dedup();
        Ok(Zeta { l, t, t_index, r_index })
    }

    pub fn field(&self) -> &PrimeField {
        &self.l.field
    }

    /// Each member of `T` is orthogonal to exactly one member of `T`.
    pub fn single_orthogonality(&self) -> bool {
        let f = self.field();
        self.t
            .iter()
            .all(|v| self.t.iter().filter(|w| f.dot(v, w) == 0).count() == 1)
    }

    /// `R(R(T))` is the union of the lines spanned by `T`.
    pub fn double_complement_is_t(&self) -> bool {
        let f = self.field();
        let r = non_orthogonal(f, self.l.n, &self.t);
        let mut rr = non_orthogonal(f, self.l.n, &r);
        let mut lines: Vec<Vec<u64>> = self
            .t
            .iter()
            .flat_map(|v| (1..f.characteristic()).map(move |k| f.scale(k, v)))
            .collect();
        rr.sort();
        lines.sort();
        lines.dedup();
        rr == lines
    }

    /// `S_{H₃}` to `L_nF`: `[i, λ] ↦ [w_i, w_{σ(λ)}]`, `σ` swapping the first
    /// two indices, so that zero products correspond.
    pub fn embed(&self, c: &Element) -> Result<Element> {
        const SIGMA: [usize; 3] = [1, 0, 2];
        match *c {
            Element::Triple { i, g: 0, lambda } if i < 3 && lambda < 3 => {
                Ok(Element::pair(self.t_index[i], self.t_index[SIGMA[lambda]]))
            }
            _ => Err(Error::InvalidElement(alloc::string::ToString::to_string(c))),
        }
    }

    /// `ζ(x) = x (∏_{v,w ∈ R} y x [v,w] x z) x` with buffers `y#…`, `z#…`.
    pub fn block(&self, x: &Variable) -> Polynomial {
        let xs = Symbol::Var(x.clone());
        let mut word = alloc::vec![xs.clone()];
        for &v in &self.r_index {
            for &w in &self.r_index {
                word.push(Symbol::Var(aux('y', x, v, w)));
                word.push(xs.clone());
                word.push(Symbol::Const(Element::pair(v, w)));
                word.push(xs.clone());
                word.push(Symbol::Var(aux('z', x, v, w)));
            }
        }
        word.push(xs);
        Polynomial::new(word).expect("nonempty")
    }

    /// `ζ(p)`: constants embedded, each variable replaced by its block.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        for c in p.constants() {
            self.embed(c)?;
        }
        let p = p.map_constants(|c| self.embed(c).expect("checked"))?;
        let map: BTreeMap<Variable, Polynomial> = p.variables().into_iter().map(|v| (v.clone(), self.block(&v))).collect();
        Ok(p.substitute(&map))
    }

    /// For every nonzero `x`: `x ∈ T × T` iff `ζ(x)` has a completion, and
    /// then some completion has value exactly `x`.
    pub fn block_property_holds(&self) -> Result<bool> {
        let s = &self.l.semigroup;
        let x = Variable::new("x");
        let block = self.block(&x);
        for ex in s.nonzero_elements() {
            let inside = self.t_index.contains(&ex.first().unwrap()) && self.t_index.contains(&ex.second().unwrap());
            let partial: Evaluation = [(x.clone(), ex)].into_iter().collect();
            let any = extend(s, &block, &partial, None, EXTEND_NODES)?;
            let exact = extend(s, &block, &partial, Some(&ex), EXTEND_NODES)?;
            if any.is_some() != inside || exact.is_some() != inside {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn aux(kind: char, x: &Variable, v: usize, w: usize) -> Variable {
    Variable::new(format!("{}#{}#{}#{}", kind, x.name(), v + 1, w + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::StructureMatrix;
    use crate::semigroup::ReesSemigroup;

    #[test]
    fn setup_over_gf3() {
        let z = Zeta::new(3, 3).unwrap();
        assert_eq!(orthogonal_step(z.field()), Some((1, 1)));
        assert!(z.single_orthogonality());
        assert!(z.double_complement_is_t());
        assert!(Zeta::new(2, 3).is_err());
        assert!(Zeta::new(3, 2).is_err());
    }

    #[test]
    fn embedding_preserves_zero_products() {
        let z = Zeta::new(3, 3).unwrap();
        let h3 = ReesSemigroup::combinatorial(StructureMatrix::hollow(3).unwrap()).unwrap();
        let l = &z.l.semigroup;
        for a in h3.nonzero_elements() {
            for b in h3.nonzero_elements() {
                let zero = h3.mul(&a, &b).is_zero();
                assert_eq!(l.mul(&z.embed(&a).unwrap(), &z.embed(&b).unwrap()).is_zero(), zero);
            }
        }
    }

    #[test]
    fn blocks() {
        let z = Zeta::new(3, 3).unwrap();
        assert!(z.block_property_holds().unwrap());
    }
}
