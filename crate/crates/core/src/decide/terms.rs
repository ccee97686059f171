use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{certify, complete, eliminate, subsets, witness, BruteGroupOracle, Decider, Method, Outcome, Verdict};
use crate::analysis::{self, MatrixClass};
use crate::error::{Error, Result};
use crate::graphs::{self, AdjacencyGraph, CoordinateGraph, Side, Vertex};
use crate::poly::{Evaluation, Polynomial, Symbol, Variable};
use crate::semigroup::Element;

/// A rule's decision, the procedure that made it, and the conditions checked.
pub type Rule = (bool, Method, Vec<String>);

fn names(vs: &[Variable]) -> String {
    let v: Vec<&str> = vs.iter().map(Variable::name).collect();
    v.join(" ")
}

impl Decider {
    /// Term equivalence over the semigroup as given (`S`, `S¹`, or a group
    /// semigroup).
    pub fn term_eq(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        p.require_term()?;
        q.require_term()?;
        if self.s.has_identity() {
            if !self.s.is_combinatorial() {
                return self.oracle().eq(p, q);
            }
            return self.term_eq_s1(p, q);
        }
        if !self.s.is_combinatorial() {
            if !self.m().is_zero_one(self.s.group().identity()) {
                return self.oracle().eq(p, q);
            }
            return self.term_eq_group(p, q, &BruteGroupOracle::new(self.budget));
        }
        let (equal, method, why) = self.term_rule(p, q);
        let outcome = if equal {
            Outcome::Equal
        } else {
            Outcome::NotEqual(self.term_witness(p, q)?)
        };
        let v = Verdict {
            outcome,
            method,
            explanation: why,
        };
        certify::emit(&self.base, v, &[p, q], None)
    }

    /// Term equivalence over `S¹`, whether or not the semigroup was built
    /// with an identity.
    pub fn term_eq_s1(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        p.require_term()?;
        q.require_term()?;
        self.require_combinatorial()?;
        let s1 = self.base.clone().with_identity();
        let (equal, method, why) = match self.class {
            MatrixClass::TotallyBalanced(_) => self.term_rule_s1_by_elimination(p, q)?,
            _ => self.term_rule_s1(p, q),
        };
        let outcome = if equal {
            Outcome::Equal
        } else {
            Outcome::NotEqual(self.term_witness_s1(p, q)?)
        };
        let v = Verdict {
            outcome,
            method,
            explanation: why,
        };
        certify::emit(&s1, v, &[p, q], None)
    }

    /// The equivalence rule for terms over `S`.
    pub(crate) fn term_rule(&self, p: &Polynomial, q: &Polynomial) -> Rule {
        let (n, m) = (self.s.cols(), self.s.rows());
        let mut why = Vec::new();
        match &self.class {
            MatrixClass::AllOnes => {
                let same_vars = p.variable_set() == q.variable_set();
                why.push(format!("M = J({}x{}); same variables: {}", m, n, same_vars));
                let left = n < 2 || p.leftmost() == q.leftmost();
                let right = m < 2 || p.rightmost() == q.rightmost();
                if n >= 2 {
                    why.push(format!("n >= 2, leftmost symbols agree: {}", left));
                }
                if m >= 2 {
                    why.push(format!("m >= 2, rightmost symbols agree: {}", right));
                }
                (same_vars && left && right, Method::AllOnes, why)
            }
            MatrixClass::TotallyBalanced(plan) => {
                why.push(format!("M is totally balanced and retracts to I_{}", plan.k));
                let bp = CoordinateGraph::bipartite(p).components();
                let bq = CoordinateGraph::bipartite(q).components();
                let comps = bp == bq;
                why.push(format!("components of B(p) and B(q) agree: {}", comps));
                if !comps {
                    return (false, Method::TotallyBalanced, why);
                }
                let left = bp.same_block(&Vertex::first_of(p.leftmost()), &Vertex::first_of(q.leftmost()));
                let right = bp.same_block(&Vertex::second_of(p.rightmost()), &Vertex::second_of(q.rightmost()));
                why.push(format!("(p_l)1 and (q_l)1 share a component: {}", left));
                why.push(format!("(p_r)2 and (q_r)2 share a component: {}", right));
                let mut ok = left && right;
                let m0 = self.m().shadow();
                if analysis::equal_cols(&m0).is_some() {
                    let eq = p.leftmost() == q.leftmost();
                    why.push(format!("M has equal columns; p_l = q_l: {}", eq));
                    ok &= eq;
                }
                if analysis::equal_rows(&m0).is_some() {
                    let eq = p.rightmost() == q.rightmost();
                    why.push(format!("M has equal rows; p_r = q_r: {}", eq));
                    ok &= eq;
                }
                (ok, Method::TotallyBalanced, why)
            }
            _ => {
                why.push("M is not totally balanced".into());
                let g = AdjacencyGraph::of(p) == AdjacencyGraph::of(q);
                let l = p.leftmost() == q.leftmost();
                let r = p.rightmost() == q.rightmost();
                why.push(format!("G(p) = G(q): {}", g));
                why.push(format!("p_l = q_l: {}, p_r = q_r: {}", l, r));
                (g && l && r, Method::NotTotallyBalanced, why)
            }
        }
    }

    /// Exact rule over `S¹`: `p = q` iff the variables agree and `p/O = q/O`
    /// over `S` for every proper subset `O` of them.
    pub(crate) fn term_rule_s1_by_elimination(&self, p: &Polynomial, q: &Polynomial) -> Result<Rule> {
        let vars = p.variables();
        if p.variable_set() != q.variable_set() {
            return Ok((false, Method::Syntactic, alloc::vec!["the terms involve different variables".into()]));
        }
        for o in subsets(&vars, self.budget)? {
            let (Some(p1), Some(q1)) = (eliminate(p, &o), eliminate(q, &o)) else { continue };
            let (equal, method, mut why) = self.term_rule(&p1, &q1);
            if !equal {
                let mut out = alloc::vec![format!("sending {{{}}} to 1 leaves {} and {}", names(&o), p1, q1)];
                out.push(format!("which differ over S ({})", method.name()));
                out.append(&mut why);
                return Ok((false, Method::Elimination, out));
            }
        }
        Ok((true, Method::Elimination, alloc::vec!["every elimination of a proper subset of the variables agrees over S".into()]))
    }

    /// The sequencing rule for terms over `S¹`. Exact unless `M` is totally
    /// balanced and not all ones, where it can accept unequal terms.
    pub fn term_rule_s1(&self, p: &Polynomial, q: &Polynomial) -> Rule {
        let (n, m) = (self.s.cols(), self.s.rows());
        let mut why = Vec::new();
        if p.variable_set() != q.variable_set() {
            why.push("the terms involve different variables".into());
            return (false, Method::Syntactic, why);
        }
        let (lp, lq) = (p.left_sequencing(), q.left_sequencing());
        let (rp, rq) = (p.right_sequencing(), q.right_sequencing());
        match &self.class {
            MatrixClass::AllOnes => {
                why.push(format!("M = J({}x{}); the terms involve the same variables", m, n));
                let mut ok = true;
                if m >= 2 {
                    why.push(format!("m >= 2, right sequencings ({} | {}) agree: {}", names(&rp), names(&rq), rp == rq));
                    ok &= rp == rq;
                }
                if n >= 2 {
                    why.push(format!("n >= 2, left sequencings ({} | {}) agree: {}", names(&lp), names(&lq), lp == lq));
                    ok &= lp == lq;
                }
                (ok, Method::AllOnes, why)
            }
            MatrixClass::TotallyBalanced(plan) => {
                why.push(format!("M is totally balanced and retracts to I_{}", plan.k));
                let comps = CoordinateGraph::bipartite(p).components() == CoordinateGraph::bipartite(q).components();
                why.push(format!("components of B(p) and B(q) agree: {}", comps));
                let cl = graphs::component_sequencing_blocks(p, Side::X) == graphs::component_sequencing_blocks(q, Side::X);
                let cr = graphs::component_sequencing_blocks(p, Side::Y) == graphs::component_sequencing_blocks(q, Side::Y);
                why.push(format!("left component sequencings agree: {}", cl));
                why.push(format!("right component sequencings agree: {}", cr));
                let mut ok = comps && cl && cr;
                let m0 = self.m().shadow();
                if analysis::equal_cols(&m0).is_some() {
                    why.push(format!("M has equal columns; left sequencings agree: {}", lp == lq));
                    ok &= lp == lq;
                }
                if analysis::equal_rows(&m0).is_some() {
                    why.push(format!("M has equal rows; right sequencings agree: {}", rp == rq));
                    ok &= rp == rq;
                }
                (ok, Method::TotallyBalanced, why)
            }
            _ => {
                why.push("M is not totally balanced".into());
                why.push(format!("left sequencings ({} | {}) agree: {}", names(&lp), names(&lq), lp == lq));
                why.push(format!("right sequencings ({} | {}) agree: {}", names(&rp), names(&rq), rp == rq));
                let ap = graphs::all_antichains(p);
                let aq = graphs::all_antichains(q);
                let anti = ap == aq;
                why.push(format!("antichain families A(x,y) agree for all pairs: {}", anti));
                if !anti {
                    if let Some(((x, y), a)) = ap.iter().find(|(k, a)| aq.get(*k) != Some(*a)) {
                        why.push(format!("first difference at A({},{}): {} members in p, {} in q", x, y, a.len(), aq[&(x.clone(), y.clone())].len()));
                    }
                }
                (lp == lq && rp == rq && anti, Method::Antichains, why)
            }
        }
    }

    /// Distinguishes two terms over `S` known to differ.
    pub(crate) fn term_witness(&self, p: &Polynomial, q: &Polynomial) -> Result<Evaluation> {
        for e in self.term_candidates(p, q) {
            let e = complete(e, &[p, q], self.idempotent_like());
            if self.base.evaluate(p, &e)? != self.base.evaluate(q, &e)? {
                return Ok(e);
            }
        }
        witness::search(&self.base, p, q, self.budget, self.seed)
    }

    /// Targeted evaluations that separate terms failing one of the rules.
    fn term_candidates(&self, p: &Polynomial, q: &Polynomial) -> Vec<Evaluation> {
        let m = self.m().shadow();
        let mut out = Vec::new();
        let base = self.idempotent_like();
        // a variable on one side only goes to 0
        let (vp, vq) = (p.variable_set(), q.variable_set());
        if let Some(v) = vp.symmetric_difference(&vq).next() {
            let mut e = Evaluation::new();
            e.insert(v.clone(), Element::Zero);
            out.push(e);
        }
        let lp = p.leftmost().as_var().cloned();
        let lq = q.leftmost().as_var().cloned();
        let rp = p.rightmost().as_var().cloned();
        let rq = q.rightmost().as_var().cloned();
        if let Some((a, b, i, j)) = analysis::forbidden_submatrix(&m) {
            // the only zero product is x·y
            let (gp, gq) = (AdjacencyGraph::of(p), AdjacencyGraph::of(q));
            for (x, y) in gp.edges.symmetric_difference(&gq.edges) {
                let (Symbol::Var(x), Symbol::Var(y)) = (x, y) else { continue };
                let mut e = Evaluation::new();
                if x == y {
                    e.insert(x.clone(), Element::pair(j, b));
                } else {
                    e.insert(x.clone(), Element::pair(i, b));
                    e.insert(y.clone(), Element::pair(j, a));
                }
                out.push(complete(e, &[p, q], Element::pair(i, a)));
            }
            if let (Some(x), Some(y)) = (&lp, &lq) {
                if x != y {
                    let mut e = Evaluation::new();
                    e.insert(y.clone(), Element::pair(j, a));
                    out.push(complete(e, &[p, q], Element::pair(i, a)));
                }
            }
            if let (Some(x), Some(y)) = (&rp, &rq) {
                if x != y {
                    let mut e = Evaluation::new();
                    e.insert(y.clone(), Element::pair(i, b));
                    out.push(complete(e, &[p, q], Element::pair(i, a)));
                }
            }
        }
        if let Some(plan) = &self.plan {
            // one component to class 0, the rest to class 1
            if plan.k >= 2 {
                for parts in [CoordinateGraph::bipartite(p).components(), CoordinateGraph::bipartite(q).components()] {
                    for chosen in 0..parts.len() {
                        let class_of = |v: &Vertex| usize::from(parts.block_of(v) != Some(chosen));
                        let e: Evaluation = vp
                            .union(&vq)
                            .map(|v| {
                                let i = plan.class_col(class_of(&Vertex::Var(v.clone(), Side::X)));
                                let l = plan.class_row(class_of(&Vertex::Var(v.clone(), Side::Y)));
                                (v.clone(), Element::pair(i, l))
                            })
                            .collect();
                        out.push(e);
                    }
                }
            }
            // equal rows or columns split the endpoints inside one class
            if let Some((a, b)) = analysis::equal_rows(&m) {
                let c = plan.row_class[a];
                let i = plan.class_col(c);
                if let Some(y) = &rq {
                    let mut e = Evaluation::new();
                    e.insert(y.clone(), Element::pair(i, b));
                    out.push(complete(e, &[p, q], Element::pair(i, a)));
                }
                if let Some(x) = &rp {
                    let mut e = Evaluation::new();
                    e.insert(x.clone(), Element::pair(i, b));
                    out.push(complete(e, &[p, q], Element::pair(i, a)));
                }
            }
            if let Some((i, j)) = analysis::equal_cols(&m) {
                let c = plan.col_class[i];
                let a = plan.class_row(c);
                for x in [&lq, &lp].into_iter().flatten() {
                    let mut e = Evaluation::new();
                    e.insert(x.clone(), Element::pair(j, a));
                    out.push(complete(e, &[p, q], Element::pair(i, a)));
                }
            }
        }
        out.into_iter().map(|e| complete(e, &[p, q], base)).collect()
    }

    /// Distinguishes two terms over `S¹` known to differ: some set `O` of
    /// variables sent to `1` leaves eliminations that differ over `S`.
    fn term_witness_s1(&self, p: &Polynomial, q: &Polynomial) -> Result<Evaluation> {
        let s1 = self.base.clone().with_identity();
        let (vp, vq) = (p.variable_set(), q.variable_set());
        let differs = |e: &Evaluation| -> Result<bool> { Ok(s1.evaluate(p, e)? != s1.evaluate(q, e)?) };
        if let Some(v) = vp.symmetric_difference(&vq).next() {
            let mut e = Evaluation::new();
            e.insert(v.clone(), Element::Zero);
            let e = complete(e, &[p, q], Element::One);
            if differs(&e)? {
                return Ok(e);
            }
        }
        let vars = p.variables();
        let mut candidates: Vec<Vec<Variable>> = Vec::new();
        for (a, b) in [
            (p.left_sequencing(), q.left_sequencing()),
            (p.right_sequencing(), q.right_sequencing()),
        ] {
            if let Some(t) = a.iter().zip(&b).position(|(x, y)| x != y) {
                candidates.push(a[..t].to_vec());
            }
        }
        let ap = graphs::all_antichains(p);
        let aq = graphs::all_antichains(q);
        for (k, fam) in &ap {
            let other = aq.get(k).cloned().unwrap_or_default();
            for d in fam.symmetric_difference(&other) {
                candidates.push(d.iter().cloned().collect());
            }
        }
        let all = subsets(&vars, self.budget).unwrap_or_default();
        for o in candidates.into_iter().chain(all) {
            let (Ok(p1), Ok(q1)) = (p.eliminate_all(&o), q.eliminate_all(&o)) else { continue };
            if self.term_rule(&p1, &q1).0 {
                continue;
            }
            let mut e = self.term_witness(&p1, &q1)?;
            for v in &o {
                e.insert(v.clone(), Element::One);
            }
            if differs(&e)? {
                return Ok(e);
            }
        }
        witness::search(&s1, p, q, self.budget, self.seed)
            .map_err(|_| Error::BadWitness("no elimination separates the terms".into()))
    }
}
