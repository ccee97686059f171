//! Decision procedures for term and polynomial equivalence, identically-zero
//! polynomials, Z-set equality and satisfiability, with exhaustive oracles.
//!
//! [`Decider`] picks a procedure from the zero pattern of the structure
//! matrix:
//!
//! * all-ones and totally balanced matrices reduce to `I_k` through a
//!   [`RetractionPlan`], after which every question is about components of
//!   the coordinate graph `B(p)`;
//! * matrices with an all-ones row and column are decided by filling unpinned
//!   coordinates with the border, which never creates a zero product;
//! * other matrices have a fast term procedure only; polynomial questions go
//!   to the budgeted oracle and say so in [`Verdict::method`].
//!
//! Over `S¹` an evaluation is a choice of variables sent to `1` followed by an
//! evaluation into `S` of what remains. Terms have dedicated rules; polynomial
//! questions quantify over that choice ([`Method::Elimination`]).
//!
//! Every witness is re-evaluated before it is returned.

pub mod brute;
mod certify;
mod group;
mod polys;
mod terms;
mod verdict;
mod witness;

pub use brute::{brute_eq, brute_sat, brute_zero, brute_zset, brute_zset_eq, Oracle, ZSet, DEFAULT_BUDGET};
pub use group::{BruteGroupOracle, GroupOracle};
pub use verdict::{Method, Outcome, Verdict};
pub use terms::Rule;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::analysis::{self, MatrixClass, RetractionPlan};
use crate::error::{Error, Result};
use crate::graphs::{CoordinateGraph, Side, Vertex};
use crate::poly::{Evaluation, Polynomial, Variable};
use crate::semigroup::{Element, ReesSemigroup};

/// Coordinates fixed in advance: a column for an X-vertex, a row for a
/// Y-vertex.
pub type Pins = BTreeMap<Vertex, usize>;

/// Decision procedures bound to one semigroup.
#[derive(Clone, Debug)]
pub struct Decider {
    /// The semigroup as given, possibly with identity.
    s: ReesSemigroup,
    /// `s` without identity.
    base: ReesSemigroup,
    class: MatrixClass,
    /// Present for all-ones and totally balanced matrices.
    plan: Option<RetractionPlan>,
    budget: u64,
    seed: u64,
}

impl Decider {
    pub const DEFAULT_SEED: u64 = 0x5eed;

    pub fn new(s: &ReesSemigroup) -> Self {
        let shadow = s.matrix().shadow();
        let class = analysis::classify(&shadow);
        let plan = match &class {
            MatrixClass::AllOnes => analysis::retract(&shadow).plan,
            MatrixClass::TotallyBalanced(p) => Some(p.clone()),
            _ => None,
        };
        Decider {
            s: s.clone(),
            base: s.clone().without_identity(),
            class,
            plan,
            budget: DEFAULT_BUDGET,
            seed: Self::DEFAULT_SEED,
        }
    }

    /// Caps every exhaustive search at `budget` evaluations.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget.max(1);
        self
    }

    /// Seeds the random witness search.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn semigroup(&self) -> &ReesSemigroup {
        &self.s
    }

    pub fn class(&self) -> &MatrixClass {
        &self.class
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn oracle(&self) -> Oracle {
        Oracle::new(&self.s, self.budget)
    }

    fn base_oracle(&self) -> Oracle {
        Oracle::new(&self.base, self.budget)
    }

    fn m(&self) -> &crate::matrix::StructureMatrix {
        self.s.matrix()
    }

    /// An element `[i, λ]` with `M(λ, i) ≠ 0`; its powers never vanish.
    fn idempotent_like(&self) -> Element {
        let m = self.m();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m.is_nonzero(r, c) {
                    return Element::pair(c, r);
                }
            }
        }
        unreachable!("regular matrices have a nonzero entry")
    }

    /// All values a vertex can take: the fixed index of a constant vertex, or
    /// every column (X) or row (Y).
    fn vertex_range(&self, v: &Vertex) -> Vec<usize> {
        match v {
            Vertex::Const(i, _) | Vertex::Index(i) => alloc::vec![*i],
            Vertex::Var(_, Side::X) => (0..self.s.cols()).collect(),
            Vertex::Var(_, Side::Y) => (0..self.s.rows()).collect(),
        }
    }

    /// An evaluation into the nonzero elements of the combinatorial base
    /// semigroup that respects `pins` and keeps `p` nonzero, if one exists.
    ///
    /// Exact for totally balanced and bordered matrices; exhaustive
    /// otherwise.
    fn feasible(&self, p: &Polynomial, pins: &Pins) -> Result<Option<Evaluation>> {
        for (v, &val) in pins {
            if let Some(i) = v.index() {
                if i != val {
                    return Ok(None);
                }
            }
        }
        let pin = |v: &Variable, side| pins.get(&Vertex::Var(v.clone(), side)).copied();
        match (&self.plan, &self.class) {
            (Some(plan), _) => {
                let parts = CoordinateGraph::bipartite(p).components();
                let mut block_class = Vec::with_capacity(parts.len());
                for block in &parts.blocks {
                    let mut fixed = None;
                    for v in block {
                        let c = match v {
                            Vertex::Const(i, Side::X) => Some(plan.col_class[*i]),
                            Vertex::Const(l, Side::Y) => Some(plan.row_class[*l]),
                            Vertex::Var(_, Side::X) => pins.get(v).map(|&i| plan.col_class[i]),
                            Vertex::Var(_, Side::Y) => pins.get(v).map(|&l| plan.row_class[l]),
                            Vertex::Index(_) => unreachable!("B(p) has no merged vertices"),
                        };
                        match (fixed, c) {
                            (Some(a), Some(b)) if a != b => return Ok(None),
                            (None, Some(b)) => fixed = Some(b),
                            _ => {}
                        }
                    }
                    block_class.push(fixed.unwrap_or(0));
                }
                let class_of = |v: &Vertex| block_class[parts.block_of(v).expect("vertex of B(p)")];
                let mut e = Evaluation::new();
                for v in p.variables() {
                    let x = Vertex::Var(v.clone(), Side::X);
                    let y = Vertex::Var(v.clone(), Side::Y);
                    let i = pin(&v, Side::X).unwrap_or_else(|| plan.class_col(class_of(&x)));
                    let l = pin(&v, Side::Y).unwrap_or_else(|| plan.class_row(class_of(&y)));
                    e.insert(v, Element::pair(i, l));
                }
                Ok(Some(e))
            }
            (None, MatrixClass::Bordered { row, col }) => {
                let e: Evaluation = p
                    .variables()
                    .into_iter()
                    .map(|v| {
                        let i = pin(&v, Side::X).unwrap_or(*col);
                        let l = pin(&v, Side::Y).unwrap_or(*row);
                        (v, Element::pair(i, l))
                    })
                    .collect();
                Ok((!self.base.evaluate(p, &e)?.is_zero()).then_some(e))
            }
            _ => {
                let vars = p.variables();
                let choices: Vec<(Vec<usize>, Vec<usize>)> = vars
                    .iter()
                    .map(|v| {
                        let xs = pin(v, Side::X).map_or_else(|| (0..self.s.cols()).collect(), |i| alloc::vec![i]);
                        let ys = pin(v, Side::Y).map_or_else(|| (0..self.s.rows()).collect(), |l| alloc::vec![l]);
                        (xs, ys)
                    })
                    .collect();
                let total = choices
                    .iter()
                    .fold(1u128, |acc, (a, b)| acc.saturating_mul((a.len() * b.len()) as u128));
                if total > self.budget as u128 {
                    return Err(Error::BudgetExceeded {
                        needed: total,
                        budget: self.budget,
                    });
                }
                let mut idx = alloc::vec![(0usize, 0usize); vars.len()];
                loop {
                    let e: Evaluation = vars
                        .iter()
                        .zip(&idx)
                        .zip(&choices)
                        .map(|((v, &(a, b)), (xs, ys))| (v.clone(), Element::pair(xs[a], ys[b])))
                        .collect();
                    if !self.base.evaluate(p, &e)?.is_zero() {
                        return Ok(Some(e));
                    }
                    // odometer over (X choice, Y choice) per variable
                    let mut k = vars.len();
                    loop {
                        if k == 0 {
                            return Ok(None);
                        }
                        k -= 1;
                        let (xs, ys) = &choices[k];
                        idx[k].1 += 1;
                        if idx[k].1 < ys.len() {
                            break;
                        }
                        idx[k].1 = 0;
                        idx[k].0 += 1;
                        if idx[k].0 < xs.len() {
                            break;
                        }
                        idx[k].0 = 0;
                    }
                }
            }
        }
    }

    fn require_combinatorial(&self) -> Result<()> {
        if self.s.is_combinatorial() {
            Ok(())
        } else {
            Err(Error::Unsupported("structure group is not trivial".into()))
        }
    }
}

/// Extends `e` with `value` for every variable of `words` it misses.
fn complete(mut e: Evaluation, words: &[&Polynomial], value: Element) -> Evaluation {
    for p in words {
        for v in p.variables() {
            e.entry(v).or_insert(value);
        }
    }
    e
}

/// Subsets of `vars` in order of increasing size, then lexicographic by
/// position; `None` when there are more than `budget`.
fn subsets(vars: &[Variable], budget: u64) -> Result<Vec<Vec<Variable>>> {
    let k = vars.len();
    if k >= 63 || (1u64 << k) > budget {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << k.min(127),
            budget,
        });
    }
    let mut masks: Vec<u64> = (0..(1u64 << k)).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    Ok(masks
        .into_iter()
        .map(|m| {
            (0..k)
                .filter(|&b| m >> b & 1 == 1)
                .map(|b| vars[b].clone())
                .collect()
        })
        .collect())
}

/// `p` with `o` deleted, or `None` when nothing is left (the value `1`).
fn eliminate(p: &Polynomial, o: &[Variable]) -> Option<Polynomial> {
    p.eliminate_all(o).ok()
}

pub fn term_eq(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
    Decider::new(s).term_eq(p, q)
}

pub fn term_eq_s1(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
    Decider::new(s).term_eq_s1(p, q)
}

pub fn pol_zero(s: &ReesSemigroup, p: &Polynomial) -> Result<Verdict> {
    Decider::new(s).pol_zero(p)
}

pub fn pol_zset_eq(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
    Decider::new(s).pol_zset_eq(p, q)
}

pub fn pol_eq(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
    Decider::new(s).pol_eq(p, q)
}

pub fn pol_sat(s: &ReesSemigroup, p: &Polynomial, b: &Element) -> Result<Verdict> {
    Decider::new(s).pol_sat(p, b)
}
