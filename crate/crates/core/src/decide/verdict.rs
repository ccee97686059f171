use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{format_evaluation, Evaluation};

/// The answer of a decision procedure. Negative equivalence answers and
/// positive zero/satisfiability answers carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Equal,
    /// Evaluates the two sides differently (for Z-set comparison: zero on
    /// exactly one side).
    NotEqual(Evaluation),
    /// Identically zero.
    Zero,
    NotZero(Evaluation),
    Sat(Evaluation),
    Unsat,
}

impl Outcome {
    /// True for `Equal`, `Zero` and `Sat`.
    pub fn is_positive(&self) -> bool {
        matches!(self, Outcome::Equal | Outcome::Zero | Outcome::Sat(_))
    }

    pub fn witness(&self) -> Option<&Evaluation> {
        match self {
            Outcome::NotEqual(e) | Outcome::NotZero(e) | Outcome::Sat(e) => Some(e),
            _ => None,
        }
    }

    /// The outcome with any witness dropped, for comparing verdicts.
    pub fn kind(&self) -> &'static str {
        match self {
            Outcome::Equal => "equal",
            Outcome::NotEqual(_) => "not-equal",
            Outcome::Zero => "zero",
            Outcome::NotZero(_) => "not-zero",
            Outcome::Sat(_) => "sat",
            Outcome::Unsat => "unsat",
        }
    }
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Structure matrix is all ones.
    AllOnes,
    /// Totally balanced matrix, via retraction to an identity matrix.
    TotallyBalanced,
    /// Adjacency-graph and endpoint rule for matrices that are not totally
    /// balanced.
    NotTotallyBalanced,
    /// Antichain and sequencing rule for terms over `S¹`.
    Antichains,
    /// Border evaluation and matchability for matrices with an all-ones row
    /// and column.
    Bordered,
    /// Combinatorial quotient plus a group-word check.
    GroupLift,
    /// Quantifies over the variables sent to the identity and decides each
    /// elimination over `S`.
    Elimination,
    /// Decided without inspecting the matrix.
    Syntactic,
    /// Exhaustive enumeration of evaluations.
    BruteForce,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::AllOnes => "all-ones",
            Method::TotallyBalanced => "totally-balanced",
            Method::NotTotallyBalanced => "not-totally-balanced",
            Method::Antichains => "antichains",
            Method::Bordered => "bordered",
            Method::GroupLift => "group-lift",
            Method::Elimination => "elimination",
            Method::Syntactic => "syntactic",
            Method::BruteForce => "brute-force",
        }
    }

    /// False only for [`Method::BruteForce`].
    pub fn is_fast(&self) -> bool {
        *self != Method::BruteForce
    }
}

/// An outcome with its provenance and a human-readable trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub method: Method,
    /// One line per fact the procedure relied on.
    pub explanation: Vec<String>,
}

impl Verdict {
    pub fn new(outcome: Outcome, method: Method) -> Self {
        Verdict {
            outcome,
            method,
            explanation: Vec::new(),
        }
    }

    pub fn because(mut self, line: impl Into<String>) -> Self {
        self.explanation.push(line.into());
        self
    }

    pub fn is_positive(&self) -> bool {
        self.outcome.is_positive()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.outcome.kind())?;
        if let Some(e) = self.outcome.witness() {
            write!(f, " {{{}}}", format_evaluation(e))?;
        }
        write!(f, " ({})", self.method.name())
    }
}
