//! Re-evaluates every witness before a verdict leaves the crate.

use alloc::format;

use super::{Outcome, Verdict};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::semigroup::{Element, ReesSemigroup};

/// Checks the witness of `v` against `words` (one word for zero and
/// satisfiability verdicts, two for equivalence verdicts).
pub fn emit(
    s: &ReesSemigroup,
    v: Verdict,
    words: &[&Polynomial],
    target: Option<&Element>,
) -> Result<Verdict> {
    match (&v.outcome, words, target) {
        (Outcome::NotEqual(e), [p, q], _) => {
            let (a, b) = (s.evaluate(p, e)?, s.evaluate(q, e)?);
            if a == b {
                return Err(Error::BadWitness(format!("both sides evaluate to {}", a)));
            }
        }
        (Outcome::NotZero(e), [p], _) => {
            if s.evaluate(p, e)?.is_zero() {
                return Err(Error::BadWitness("polynomial evaluates to 0".into()));
            }
        }
        (Outcome::Sat(e), [p], Some(b)) => {
            let a = s.evaluate(p, e)?;
            if a != *b {
                return Err(Error::BadWitness(format!("evaluates to {} instead of {}", a, b)));
            }
        }
        (Outcome::Equal | Outcome::Zero | Outcome::Unsat, _, _) => {}
        _ => return Err(Error::BadWitness("verdict does not fit the question".into())),
    }
    Ok(v)
}

/// For Z-set comparisons: the witness must be zero on exactly one side.
pub fn emit_zset(s: &ReesSemigroup, v: Verdict, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
    if let Outcome::NotEqual(e) = &v.outcome {
        let (a, b) = (s.evaluate(p, e)?, s.evaluate(q, e)?);
        if a.is_zero() == b.is_zero() {
            return Err(Error::BadWitness(format!(
                "values {} and {} agree on being zero",
                a, b
            )));
        }
    } else if v.outcome != Outcome::Equal {
        return Err(Error::BadWitness("verdict does not fit the question".into()));
    }
    Ok(v)
}
