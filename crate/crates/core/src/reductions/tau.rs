//! Embedding `L₂Z₂` questions into `L_nZ₂`, `n ≥ 3`.
//!
//! An element `[u, v]` of `L_nZ₂` has range `u` and kernel `v^⊥`. With
//! `B = {e₁, e₂, e₁+e₂}`, the gadget `x y [a,a] y [b,b] y x` vanishes whenever
//! a coordinate of `x` is `a+b`, so the block of `x` keeps `x` inside `B × B`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::search::{extend, EXTEND_NODES};
use crate::error::{Error, Result};
use crate::field::Rank1Semigroup;
use crate::poly::{Evaluation, Polynomial, Symbol, Variable};
use crate::semigroup::Element;

#[derive(Clone, Debug)]
pub struct Tau {
    /// `L₂Z₂`.
    pub source: Rank1Semigroup,
    /// `L_nZ₂`.
    pub target: Rank1Semigroup,
    /// Indices in `target` of `e₁`, `e₂`, `e₁+e₂`.
    pub b: [usize; 3],
    /// Unordered pairs `a < b` of target indices with `a + b ∉ B`.
    pub pairs: Vec<(usize, usize)>,
    /// Source index to target index.
    embed: Vec<usize>,
}

impl Tau {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("tau needs n >= 3, got {}", n)));
        }
        let source = Rank1Semigroup::new(2, 2)?;
        let target = Rank1Semigroup::new(2, n)?;
        let pad = |v: &[u64]| {
            let mut w = v.to_vec();
            w.resize(n, 0);
            w
        };
        let embed: Vec<usize> = source
            .reps
            .iter()
            .map(|v| target.rep_index(&pad(v)).expect("embedded vector is a representative"))
            .collect();
        let idx = |v: &[u64]| target.rep_index(&pad(v)).expect("nonzero");
        let b = [idx(&[1, 0]), idx(&[0, 1]), idx(&[1, 1])];
        let f = &target.field;
        let r = target.subspace_count();
        let mut pairs = Vec::new();
        for a in 0..r {
            for c in a + 1..r {
                let sum = f.add_vec(&target.reps[a], &target.reps[c]);
                if !b.contains(&target.rep_index(&sum).expect("distinct vectors over GF(2) sum to nonzero")) {
                    pairs.push((a, c));
                }
            }
        }
        Ok(Tau {
            source,
            target,
            b,
            pairs,
            embed,
        })
    }

    /// The target element for a source constant.
    pub fn embed(&self, c: &Element) -> Result<Element> {
        match *c {
            Element::Triple { i, lambda, .. } if self.source.semigroup.contains(c) => {
                Ok(Element::pair(self.embed[i], self.embed[lambda]))
            }
            _ => Err(Error::InvalidElement(alloc::string::ToString::to_string(c))),
        }
    }

    /// Index of `a + b`.
    pub fn sum(&self, a: usize, b: usize) -> usize {
        let f = &self.target.field;
        self.target
            .rep_index(&f.add_vec(&self.target.reps[a], &self.target.reps[b]))
            .expect("nonzero sum")
    }

    /// `x y [a,a] y [b,b] y x` with `y = y#x#a#b`.
    pub fn gadget(&self, x: &Variable, a: usize, b: usize) -> Polynomial {
        let xs = Symbol::Var(x.clone());
        let y = Symbol::Var(aux('y', x, a, b));
        Polynomial::new(alloc::vec![
            xs.clone(),
            y.clone(),
            Symbol::Const(Element::pair(a, a)),
            y.clone(),
            Symbol::Const(Element::pair(b, b)),
            y,
            xs,
        ])
        .expect("nonempty")
    }

    /// `τ(x) = x (∏ u x y [a,a] y [b,b] y x v) x` with buffers `u#…`, `v#…`.
    pub fn block(&self, x: &Variable) -> Polynomial {
        let xs = Symbol::Var(x.clone());
        let mut word = alloc::vec![xs.clone()];
        for &(a, b) in &self.pairs {
            word.push(Symbol::Var(aux('u', x, a, b)));
            word.extend(self.gadget(x, a, b).into_symbols());
            word.push(Symbol::Var(aux('v', x, a, b)));
        }
        word.push(xs);
        Polynomial::new(word).expect("nonempty")
    }

    /// `τ(p)`: constants embedded, each variable replaced by its block.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let p = p.map_constants(|c| self.embed(c).unwrap_or(Element::Zero))?;
        let map: BTreeMap<Variable, Polynomial> = p.variables().into_iter().map(|v| (v.clone(), self.block(&v))).collect();
        Ok(p.substitute(&map))
    }

    /// Over all `x` and `y`: a coordinate of `x` equal to `a+b` zeroes the
    /// gadget, and a nonzero `x` avoiding `a+b` admits a nonzero `y`.
    pub fn gadget_property_holds(&self, a: usize, b: usize) -> Result<bool> {
        let s = &self.target.semigroup;
        let x = Variable::new("x");
        let q = self.gadget(&x, a, b);
        let y = aux('y', &x, a, b);
        let c = self.sum(a, b);
        for ex in s.nonzero_elements() {
            let mut nonzero = false;
            for ey in s.elements() {
                let e: Evaluation = [(x.clone(), ex), (y.clone(), ey)].into_iter().collect();
                nonzero |= !s.evaluate(&q, &e)?.is_zero();
            }
            let hits = ex.first() == Some(c) || ex.second() == Some(c);
            if nonzero == hits {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A completion of `τ(x)` with value `x` exists exactly for `x ∈ B × B`.
    pub fn block_property_holds(&self) -> Result<bool> {
        let s = &self.target.semigroup;
        let x = Variable::new("x");
        let block = self.block(&x);
        for ex in s.nonzero_elements() {
            let partial: Evaluation = [(x.clone(), ex)].into_iter().collect();
            let inside = self.b.contains(&ex.first().unwrap()) && self.b.contains(&ex.second().unwrap());
            let hit = extend(s, &block, &partial, Some(&ex), EXTEND_NODES)?;
            let any = extend(s, &block, &partial, None, EXTEND_NODES)?;
            if hit.is_some() != inside || any.is_some() != inside {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn aux(kind: char, x: &Variable, a: usize, b: usize) -> Variable {
    Variable::new(format!("{}#{}#{}#{}", kind, x.name(), a + 1, b + 1))
}
