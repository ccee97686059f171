//! Terms over `𝓜(G, M)` with `M` a 0-1 matrix: equal iff equal over the
//! combinatorial quotient and equal as group words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{certify, Decider, Method, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::poly::{Evaluation, Polynomial, Variable};
use crate::semigroup::Element;

/// Decides equality of terms read as words over a group.
pub trait GroupOracle {
    /// `None` when `p = q` holds identically in `g`; otherwise a separating
    /// assignment of group indices.
    fn separate(&self, g: &FiniteGroup, p: &Polynomial, q: &Polynomial) -> Result<Option<BTreeMap<Variable, usize>>>;
}

/// Enumerates all assignments into the group.
#[derive(Clone, Copy, Debug)]
pub struct BruteGroupOracle {
    budget: u64,
}

impl BruteGroupOracle {
    pub fn new(budget: u64) -> Self {
        BruteGroupOracle { budget }
    }
}

/// The group value of a term under `a`.
pub fn group_value(g: &FiniteGroup, p: &Polynomial, a: &BTreeMap<Variable, usize>) -> Result<usize> {
    let mut acc = g.identity();
    for s in p.symbols() {
        let v = s.as_var().ok_or_else(|| Error::NotATerm(alloc::string::ToString::to_string(s)))?;
        let x = *a.get(v).ok_or_else(|| Error::MissingAssignment(alloc::string::ToString::to_string(v)))?;
        acc = g.mul(acc, x);
    }
    Ok(acc)
}

impl GroupOracle for BruteGroupOracle {
    fn separate(&self, g: &FiniteGroup, p: &Polynomial, q: &Polynomial) -> Result<Option<BTreeMap<Variable, usize>>> {
        let vars = super::brute::union_vars(p, q);
        let k = vars.len();
        let needed = (g.order() as u128).saturating_pow(k as u32);
        if needed > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        let mut digits: Vec<usize> = alloc::vec![0; k];
        loop {
            let a: BTreeMap<Variable, usize> = vars.iter().cloned().zip(digits.iter().copied()).collect();
            if group_value(g, p, &a)? != group_value(g, q, &a)? {
                return Ok(Some(a));
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(None);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < g.order() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

impl Decider {
    /// Term equivalence over `𝓜(G, M)` for a 0-1 matrix `M`.
    pub fn term_eq_group(&self, p: &Polynomial, q: &Polynomial, oracle: &dyn GroupOracle) -> Result<Verdict> {
        p.require_term()?;
        q.require_term()?;
        if self.s.has_identity() {
            return Err(Error::Unsupported("group lift over S¹".into()));
        }
        let g = self.s.group();
        if !self.m().is_zero_one(g.identity()) {
            return Err(Error::Unsupported("structure matrix has non-identity group entries".into()));
        }
        let quotient = Decider::new(&self.s.h_quotient()).with_budget(self.budget).with_seed(self.seed);
        let bar = quotient.term_eq(p, q)?;
        let mut why = alloc::vec![alloc::format!("quotient verdict: {}", bar)];
        why.extend(bar.explanation.iter().cloned());
        let outcome = match bar.outcome {
            // pairs are triples with identity group part
            Outcome::NotEqual(e) => Outcome::NotEqual(e),
            Outcome::Equal => match oracle.separate(g, p, q)? {
                None => {
                    why.push(alloc::format!("p = q holds in {}", g.name()));
                    Outcome::Equal
                }
                Some(a) => {
                    why.push(alloc::format!("p and q differ as words over {}", g.name()));
                    let base = self.idempotent_like();
                    let (i, l) = (base.first().unwrap(), base.second().unwrap());
                    let e: Evaluation = a
                        .into_iter()
                        .map(|(v, h)| (v, Element::triple(i, h, l)))
                        .collect();
                    Outcome::NotEqual(e)
                }
            },
            other => other,
        };
        let v = Verdict {
            outcome,
            method: Method::GroupLift,
            explanation: why,
        };
        certify::emit(&self.s, v, &[p, q], None)
    }
}
