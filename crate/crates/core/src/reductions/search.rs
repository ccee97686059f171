//! Exact completion of partial evaluations.
//!
//! The word is cut into segments such that no free variable occurs in two of
//! them. Each segment is enumerated on its own, and the reachable nonzero
//! prefix values are folded left to right, one witness kept per value.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Evaluation, Polynomial, Symbol, Variable};
use crate::semigroup::{Element, ReesSemigroup};

/// Default cap on enumerated segment assignments for [`extend`].
pub const EXTEND_NODES: u64 = 1_000_000;

/// Completes `partial` to an evaluation of every variable of `p` with
/// `e(p) ≠ 0`, and `e(p) = target` when one is given. Free variables range
/// over the nonzero elements of `s`. The answer is exact and deterministic.
pub fn extend(
    s: &ReesSemigroup,
    p: &Polynomial,
    partial: &Evaluation,
    target: Option<&Element>,
    nodes: u64,
) -> Result<Option<Evaluation>> {
    let reach = reachable(s, p, partial, nodes)?;
    let hit = match target {
        Some(t) => reach.get(t).cloned(),
        None => reach.into_values().next(),
    };
    Ok(hit.map(|mut e| {
        e.extend(partial.iter().map(|(k, v)| (k.clone(), *v)));
        e
    }))
}

/// Every nonzero value of `p` over completions of `partial`, each with one
/// completion of the free variables reaching it.
pub fn reachable(
    s: &ReesSemigroup,
    p: &Polynomial,
    partial: &Evaluation,
    nodes: u64,
) -> Result<BTreeMap<Element, Evaluation>> {
    let candidates: Vec<Element> = s.elements().into_iter().filter(|e| !e.is_zero()).collect();
    let word = p.symbols();
    let mut used = 0u64;
    let mut reach: Option<BTreeMap<Element, Evaluation>> = None;
    for seg in segments(word, partial) {
        let values = segment_values(s, &word[seg.0..seg.1], partial, &candidates, nodes, &mut used)?;
        reach = Some(match reach {
            None => values,
            Some(prev) => {
                let mut next = BTreeMap::new();
                for (a, ea) in &prev {
                    for (b, eb) in &values {
                        let c = s.mul(a, b);
                        if !c.is_zero() {
                            next.entry(c).or_insert_with(|| {
                                let mut e = ea.clone();
                                e.extend(eb.iter().map(|(k, v)| (k.clone(), *v)));
                                e
                            });
                        }
                    }
                }
                next
            }
        });
        if reach.as_ref().is_some_and(BTreeMap::is_empty) {
            break;
        }
    }
    Ok(reach.unwrap_or_default())
}

fn free_var<'a>(sym: &'a Symbol, partial: &Evaluation) -> Option<&'a Variable> {
    sym.as_var().filter(|v| !partial.contains_key(*v))
}

/// Half-open ranges covering the word, closed under free-variable occurrence.
fn segments(word: &[Symbol], partial: &Evaluation) -> Vec<(usize, usize)> {
    let mut last: BTreeMap<&Variable, usize> = BTreeMap::new();
    for (k, sym) in word.iter().enumerate() {
        if let Some(v) = free_var(sym, partial) {
            last.insert(v, k);
        }
    }
    let mut out = Vec::new();
    let mut start = 0;
    let mut end = 0;
    for (k, sym) in word.iter().enumerate() {
        if let Some(v) = free_var(sym, partial) {
            end = end.max(last[v]);
        }
        if k >= end {
            out.push((start, k + 1));
            start = k + 1;
            end = k + 1;
        }
    }
    out
}

fn segment_values(
    s: &ReesSemigroup,
    seg: &[Symbol],
    partial: &Evaluation,
    candidates: &[Element],
    nodes: u64,
    used: &mut u64,
) -> Result<BTreeMap<Element, Evaluation>> {
    let mut vars: Vec<&Variable> = Vec::new();
    for sym in seg {
        if let Some(v) = free_var(sym, partial) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    let count = (candidates.len() as u128).saturating_pow(vars.len() as u32);
    let total = u128::from(*used) + count;
    if total > u128::from(nodes) {
        return Err(Error::BudgetExceeded { needed: total, budget: nodes });
    }
    *used = total as u64;
    let mut out = BTreeMap::new();
    let mut idx = alloc::vec![0usize; vars.len()];
    loop {
        let local: Evaluation = vars
            .iter()
            .zip(&idx)
            .map(|(v, &k)| ((*v).clone(), candidates[k]))
            .collect();
        let value = seg.iter().try_fold(None::<Element>, |acc, sym| {
            let x = match sym {
                Symbol::Const(c) => *c,
                Symbol::Var(v) => local.get(v).or_else(|| partial.get(v)).cloned().expect("assigned"),
            };
            let next = match acc {
                None => x,
                Some(a) => s.mul(&a, &x),
            };
            (!next.is_zero()).then_some(Some(next))
        });
        if let Some(Some(v)) = value {
            out.entry(v).or_insert(local);
        }
        let mut k = vars.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
