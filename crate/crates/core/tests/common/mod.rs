#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rees_core::analysis::canonical_pattern;
use rees_core::decide::Oracle;
use rees_core::{Polynomial, ReesSemigroup, StructureMatrix, Symbol, Variable};

pub const VARS: [&str; 3] = ["x", "y", "z"];

/// Every word over the first `k` of `VARS` with length in `1..=max_len`.
pub fn terms(k: usize, max_len: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for v in 0..k {
                let mut w = w.clone();
                w.push(v);
                next.push(w);
            }
        }
        for w in &next {
            out.push(Polynomial::new(w.iter().map(|&v| Symbol::var(VARS[v])).collect()).unwrap());
        }
        layer = next;
    }
    out
}

/// Regular 0-1 matrices of every shape up to `max_rows × max_cols`, one per
/// row/column permutation class.
pub fn regular_matrices(max_rows: usize, max_cols: usize) -> Vec<StructureMatrix> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rows in 1..=max_rows {
        for cols in 1..=max_cols {
            for bits in 0u32..(1 << (rows * cols)) {
                let m = StructureMatrix::from_fn(rows, cols, |r, c| bits >> (r * cols + c) & 1 == 1).unwrap();
                if m.check_regular().is_err() {
                    continue;
                }
                if seen.insert((rows, cols, canonical_pattern(&m))) {
                    out.push(m);
                }
            }
        }
    }
    out
}

pub fn all_vars() -> Vec<Variable> {
    VARS.iter().map(|v| Variable::new(*v)).collect()
}

/// Value vector of `p` over every assignment of `vars`.
pub fn fingerprint(oracle: &Oracle, p: &Polynomial, vars: &[Variable]) -> Vec<usize> {
    oracle.values(p, vars).unwrap()
}

/// Groups of `words` with identical value vectors, keyed by vector.
pub fn classes(s: &ReesSemigroup, words: &[Polynomial]) -> Vec<usize> {
    let oracle = Oracle::new(s, u64::MAX);
    let vars = all_vars();
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    words
        .iter()
        .map(|w| {
            let f = fingerprint(&oracle, w, &vars);
            let n = ids.len();
            *ids.entry(f).or_insert(n)
        })
        .collect()
}

/// Every polynomial of length `1..=max_len` over `vars` and `consts`.
pub fn polynomials(vars: &[&str], consts: &[rees_core::Element], max_len: usize) -> Vec<Polynomial> {
    let mut alphabet: Vec<Symbol> = vars.iter().map(|v| Symbol::var(v)).collect();
    alphabet.extend(consts.iter().cloned().map(Symbol::Const));
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Symbol>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in &alphabet {
                let mut w = w.clone();
                w.push(a.clone());
                next.push(w);
            }
        }
        out.extend(next.iter().map(|w| Polynomial::new(w.clone()).unwrap()));
        layer = next;
    }
    out
}

/// A seeded random polynomial of length `1..=max_len`.
pub fn random_polynomial(
    rng: &mut impl rand::Rng,
    vars: &[&str],
    consts: &[rees_core::Element],
    max_len: usize,
) -> Polynomial {
    let len = rng.gen_range(1..=max_len);
    let word = (0..len)
        .map(|_| {
            let k = rng.gen_range(0..vars.len() + consts.len());
            if k < vars.len() {
                Symbol::var(vars[k])
            } else {
                Symbol::Const(consts[k - vars.len()])
            }
        })
        .collect();
    Polynomial::new(word).unwrap()
}
