//! Exhaustive oracles: enumerate every evaluation into `S` (including `0`,
//! and `1` for `S¹`).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{certify, Method, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::poly::{Evaluation, Polynomial, Symbol, Variable};
use crate::semigroup::{CayleyTable, Element, ReesSemigroup};

/// Default cap on the number of evaluations an oracle may enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
enum Code {
    Var(usize),
    Const(usize),
}

/// A compiled semigroup for fast word evaluation.
#[derive(Clone, Debug)]
pub struct Oracle {
    s: ReesSemigroup,
    elements: Vec<Element>,
    table: CayleyTable,
    budget: u64,
}

/// A word compiled against a variable order.
#[derive(Clone, Debug)]
pub struct Compiled(Vec<Code>);

impl Oracle {
    pub fn new(s: &ReesSemigroup, budget: u64) -> Self {
        Oracle {
            s: s.clone(),
            elements: s.elements(),
            table: s.cayley(),
            budget,
        }
    }

    pub fn semigroup(&self) -> &ReesSemigroup {
        &self.s
    }

    /// Elements in index order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.s.index_of(e)
    }

    /// `|S|^k`, or an error when it exceeds the budget.
    pub fn check_budget(&self, k: usize) -> Result<u64> {
        let needed = (self.elements.len() as u128).saturating_pow(k as u32);
        if needed > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        Ok(needed as u64)
    }

    pub fn compile(&self, p: &Polynomial, vars: &[Variable]) -> Result<Compiled> {
        p.validate(&self.s)?;
        p.symbols()
            .iter()
            .map(|sym| match sym {
                Symbol::Var(v) => vars
                    .iter()
                    .position(|w| w == v)
                    .map(Code::Var)
                    .ok_or_else(|| Error::MissingAssignment(alloc::string::ToString::to_string(v))),
                Symbol::Const(c) => Ok(Code::Const(self.index_of(c).expect("validated"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Compiled)
    }

    /// Index of the value of a compiled word under an assignment of element
    /// indices.
    #[inline]
    pub fn run(&self, w: &Compiled, assignment: &[usize]) -> usize {
        let mut it = w.0.iter().map(|c| match *c {
            Code::Var(k) => assignment[k],
            Code::Const(e) => e,
        });
        let first = it.next().expect("words are nonempty");
        it.fold(first, |acc, x| self.table.mul(acc, x))
    }

    /// Calls `f` on every assignment of `k` variables in odometer order (the
    /// first variable varies slowest). Stops early when `f` returns false.
    pub fn for_each_assignment(&self, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Result<()> {
        self.check_budget(k)?;
        let n = self.elements.len();
        let mut a = alloc::vec![0usize; k];
        loop {
            if !f(&a) {
                return Ok(());
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                a[pos] += 1;
                if a[pos] < n {
                    break;
                }
                a[pos] = 0;
            }
        }
    }

    /// The value of `p` under every assignment to `vars`, in odometer order.
    pub fn values(&self, p: &Polynomial, vars: &[Variable]) -> Result<Vec<usize>> {
        let w = self.compile(p, vars)?;
        let mut out = Vec::new();
        self.for_each_assignment(vars.len(), |a| {
            out.push(self.run(&w, a));
            true
        })?;
        Ok(out)
    }

    pub fn evaluation(&self, vars: &[Variable], a: &[usize]) -> Evaluation {
        vars.iter()
            .cloned()
            .zip(a.iter().map(|&k| self.elements[k]))
            .collect()
    }

    /// The first evaluation (in odometer order) satisfying `pred`.
    pub fn find(
        &self,
        vars: &[Variable],
        words: &[&Polynomial],
        mut pred: impl FnMut(&[usize]) -> bool,
    ) -> Result<Option<Evaluation>> {
        let compiled = words
            .iter()
            .map(|p| self.compile(p, vars))
            .collect::<Result<Vec<_>>>()?;
        let mut found = None;
        let mut vals = alloc::vec![0; compiled.len()];
        self.for_each_assignment(vars.len(), |a| {
            for (v, w) in vals.iter_mut().zip(&compiled) {
                *v = self.run(w, a);
            }
            if pred(&vals) {
                found = Some(self.evaluation(vars, a));
                false
            } else {
                true
            }
        })?;
        Ok(found)
    }

    pub fn eq(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        let vars = union_vars(p, q);
        let outcome = match self.find(&vars, &[p, q], |v| v[0] != v[1])? {
            Some(e) => Outcome::NotEqual(e),
            None => Outcome::Equal,
        };
        certify::emit(&self.s, Verdict::new(outcome, Method::BruteForce), &[p, q], None)
    }

    pub fn zero(&self, p: &Polynomial) -> Result<Verdict> {
        let vars = p.variables();
        let outcome = match self.find(&vars, &[p], |v| v[0] != 0)? {
            Some(e) => Outcome::NotZero(e),
            None => Outcome::Zero,
        };
        certify::emit(&self.s, Verdict::new(outcome, Method::BruteForce), &[p], None)
    }

    pub fn sat(&self, p: &Polynomial, b: &Element) -> Result<Verdict> {
        let target = self
            .index_of(b)
            .ok_or_else(|| Error::InvalidElement(alloc::string::ToString::to_string(b)))?;
        let vars = p.variables();
        let outcome = match self.find(&vars, &[p], |v| v[0] == target)? {
            Some(e) => Outcome::Sat(e),
            None => Outcome::Unsat,
        };
        certify::emit(&self.s, Verdict::new(outcome, Method::BruteForce), &[p], Some(b))
    }

    /// `Z(p)` over the variables of `p`.
    pub fn zset(&self, p: &Polynomial) -> Result<ZSet> {
        let vars = p.variables();
        let w = self.compile(p, &vars)?;
        let mut members = BTreeSet::new();
        self.for_each_assignment(vars.len(), |a| {
            if self.run(&w, a) == 0 {
                members.insert(a.iter().map(|&k| self.elements[k]).collect());
            }
            true
        })?;
        Ok(ZSet { vars, members })
    }

    /// Compares `Z(p)` and `Z(q)` as subsets of `S^U`, `U` the union of the
    /// variables. A witness is zero on exactly one side.
    pub fn zset_eq(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        let vars = union_vars(p, q);
        let outcome = match self.find(&vars, &[p, q], |v| (v[0] == 0) != (v[1] == 0))? {
            Some(e) => Outcome::NotEqual(e),
            None => Outcome::Equal,
        };
        let v = Verdict::new(outcome, Method::BruteForce);
        certify::emit_zset(&self.s, v, p, q)
    }
}

/// A Z-set: the assignments, in the order of `vars`, that send a polynomial
/// to `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSet {
    pub vars: Vec<Variable>,
    pub members: BTreeSet<Vec<Element>>,
}

/// Variables of `p` then those of `q` not in `p`, in first-occurrence order.
pub fn union_vars(p: &Polynomial, q: &Polynomial) -> Vec<Variable> {
    let mut vars = p.variables();
    for v in q.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars
}

pub fn brute_eq(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial, budget: u64) -> Result<Verdict> {
    Oracle::new(s, budget).eq(p, q)
}

pub fn brute_zero(s: &ReesSemigroup, p: &Polynomial, budget: u64) -> Result<Verdict> {
    Oracle::new(s, budget).zero(p)
}

pub fn brute_sat(s: &ReesSemigroup, p: &Polynomial, b: &Element, budget: u64) -> Result<Verdict> {
    Oracle::new(s, budget).sat(p, b)
}

pub fn brute_zset(s: &ReesSemigroup, p: &Polynomial, budget: u64) -> Result<ZSet> {
    Oracle::new(s, budget).zset(p)
}

pub fn brute_zset_eq(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial, budget: u64) -> Result<Verdict> {
    Oracle::new(s, budget).zset_eq(p, q)
}
