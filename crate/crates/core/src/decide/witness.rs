//! Fallback search for evaluations that separate two words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::brute::{union_vars, Oracle};
use crate::error::{Error, Result};
use crate::poly::{Evaluation, Polynomial};
use crate::semigroup::ReesSemigroup;

/// Random probes tried when exhaustive search exceeds the budget.
pub const RANDOM_PROBES: u32 = 200_000;

/// Exhaustive when `|S|^k` fits the budget, seeded random sampling otherwise.
pub fn search(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial, budget: u64, seed: u64) -> Result<Evaluation> {
    let oracle = Oracle::new(s, budget);
    let vars = union_vars(p, q);
    if oracle.check_budget(vars.len()).is_ok() {
        return oracle
            .find(&vars, &[p, q], |v| v[0] != v[1])?
            .ok_or_else(|| Error::BadWitness("exhaustive search found no separating evaluation".into()));
    }
    let wp = oracle.compile(p, &vars)?;
    let wq = oracle.compile(q, &vars)?;
    let n = oracle.elements().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = alloc::vec![0usize; vars.len()];
    for _ in 0..RANDOM_PROBES {
        for x in a.iter_mut() {
            *x = rng.gen_range(0..n);
        }
        if oracle.run(&wp, &a) != oracle.run(&wq, &a) {
            return Ok(oracle.evaluation(&vars, &a));
        }
    }
    Err(Error::BadWitness("random search found no separating evaluation".into()))
}

/// Like [`search`] but for an evaluation that is zero on exactly one side.
pub fn search_zset(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial, budget: u64, seed: u64) -> Result<Evaluation> {
    let oracle = Oracle::new(s, budget);
    let vars = union_vars(p, q);
    if oracle.check_budget(vars.len()).is_ok() {
        return oracle
            .find(&vars, &[p, q], |v| (v[0] == 0) != (v[1] == 0))?
            .ok_or_else(|| Error::BadWitness("exhaustive search found no separating evaluation".into()));
    }
    let wp = oracle.compile(p, &vars)?;
    let wq = oracle.compile(q, &vars)?;
    let n = oracle.elements().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = alloc::vec![0usize; vars.len()];
    for _ in 0..RANDOM_PROBES {
        for x in a.iter_mut() {
            *x = rng.gen_range(0..n);
        }
        if (oracle.run(&wp, &a) == 0) != (oracle.run(&wq, &a) == 0) {
            return Ok(oracle.evaluation(&vars, &a));
        }
    }
    Err(Error::BadWitness("random search found no separating evaluation".into()))
}
