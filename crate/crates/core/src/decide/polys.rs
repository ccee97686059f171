use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::brute::union_vars;
use super::{certify, complete, eliminate, subsets, witness, Decider, Method, Outcome, Pins, Verdict};
use crate::analysis::MatrixClass;
use crate::error::{Error, Result};
use crate::graphs::{self, CoordinateGraph, Side, Vertex};
use crate::poly::{Evaluation, Polynomial, Variable};
use crate::semigroup::Element;

/// The components of `B̄(p̂)` that contain a variable vertex, each reduced to
/// its variable vertices and its constant index.
type ZSignature = BTreeSet<(Vec<Vertex>, Option<usize>)>;

fn zsignature(hat: &Polynomial) -> ZSignature {
    CoordinateGraph::identified(hat)
        .components()
        .blocks
        .into_iter()
        .filter(|b| b.iter().any(Vertex::is_var))
        .map(|b| {
            let index = b.iter().find_map(Vertex::index);
            (b.into_iter().filter(Vertex::is_var).collect(), index)
        })
        .collect()
}

fn with_ones(mut e: Evaluation, o: &[Variable]) -> Evaluation {
    for v in o {
        e.insert(v.clone(), Element::One);
    }
    e
}

fn var_vertices(vars: &[Variable]) -> Vec<Vertex> {
    vars.iter()
        .flat_map(|v| [Vertex::Var(v.clone(), Side::X), Vertex::Var(v.clone(), Side::Y)])
        .collect()
}

impl Decider {
    fn quotient(&self) -> Decider {
        Decider::new(&self.s.h_quotient())
            .with_budget(self.budget)
            .with_seed(self.seed)
    }

    fn shadow_poly(p: &Polynomial) -> Polynomial {
        p.map_constants(Element::shadow).expect("shadows of triples are triples")
    }

    /// Whether `p` is identically `0`.
    pub fn pol_zero(&self, p: &Polynomial) -> Result<Verdict> {
        p.validate(&self.s)?;
        if p.is_term() {
            let e = complete(Evaluation::new(), &[p], self.idempotent_like());
            let v = Verdict::new(Outcome::NotZero(e), Method::Syntactic)
                .because("a term over a regular matrix never vanishes identically");
            return certify::emit(&self.s, v, &[p], None);
        }
        if !self.s.is_combinatorial() {
            let v = self.quotient().pol_zero(&Self::shadow_poly(p))?;
            return certify::emit(&self.s, v.because("decided over the combinatorial quotient"), &[p], None);
        }
        if self.s.has_identity() {
            let vars = p.variables();
            for o in subsets(&vars, self.budget)? {
                let p1 = eliminate(p, &o).expect("constants survive elimination");
                let v = self.zero_s(&p1)?;
                if let Outcome::NotZero(e) = v.outcome {
                    let e = with_ones(e, &o);
                    let v = Verdict::new(Outcome::NotZero(e), Method::Elimination)
                        .because(format!("sending {{{}}} to 1 leaves {}", names(&o), p1))
                        .because(format!("which is not identically 0 ({})", v.method.name()));
                    return certify::emit(&self.s, v, &[p], None);
                }
            }
            let v = Verdict::new(Outcome::Zero, Method::Elimination)
                .because("every elimination of variables is identically 0 over S");
            return Ok(v);
        }
        self.zero_s(p)
    }

    /// `pol_zero` over the combinatorial semigroup without identity.
    fn zero_s(&self, p: &Polynomial) -> Result<Verdict> {
        let v = match (&self.plan, &self.class) {
            (Some(plan), _) => {
                let hat = plan.hat(p);
                let method = if plan.k == 1 { Method::AllOnes } else { Method::TotallyBalanced };
                let parts = CoordinateGraph::bipartite(&hat).components();
                match parts.blocks.iter().find(|b| !graphs::is_consistent(b)) {
                    Some(b) => Verdict::new(Outcome::Zero, method)
                        .because(format!("p̂ = {}", hat))
                        .because(format!("B(p̂) has the inconsistent component {{{}}}", join(b))),
                    None => {
                        let e = self
                            .feasible(p, &Pins::new())?
                            .ok_or_else(|| Error::BadWitness("consistent graph without a nonzero evaluation".into()))?;
                        Verdict::new(Outcome::NotZero(e), method)
                            .because(format!("p̂ = {}", hat))
                            .because("every component of B(p̂) is consistent")
                    }
                }
            }
            (None, MatrixClass::Bordered { row, col }) => {
                let what = format!("every variable sent to the border element [{},{}]", col + 1, row + 1);
                match self.feasible(p, &Pins::new())? {
                    Some(e) => Verdict::new(Outcome::NotZero(e), Method::Bordered).because(format!("{} gives a nonzero value", what)),
                    None => Verdict::new(Outcome::Zero, Method::Bordered).because(format!("{} gives 0", what)),
                }
            }
            _ => return self.base_oracle().zero(p),
        };
        certify::emit(&self.base, v, &[p], None)
    }

    /// Whether some evaluation sends `p` to `b`.
    pub fn pol_sat(&self, p: &Polynomial, b: &Element) -> Result<Verdict> {
        p.validate(&self.s)?;
        if !self.s.contains(b) {
            return Err(Error::InvalidElement(b.to_string()));
        }
        let v = match b {
            Element::Zero => {
                let e = complete(Evaluation::new(), &[p], Element::Zero);
                if !p.variables().is_empty() || self.s.evaluate(p, &e)?.is_zero() {
                    Verdict::new(Outcome::Sat(e), Method::Syntactic).because("0 is reached by sending a variable to 0, or by the constants alone")
                } else {
                    Verdict::new(Outcome::Unsat, Method::Syntactic).because("the constants multiply to a nonzero element")
                }
            }
            Element::One => {
                if p.is_term() {
                    let e = complete(Evaluation::new(), &[p], Element::One);
                    Verdict::new(Outcome::Sat(e), Method::Syntactic).because("a term reaches 1 with every variable sent to 1")
                } else {
                    Verdict::new(Outcome::Unsat, Method::Syntactic).because("a word with a constant never evaluates to 1")
                }
            }
            Element::Triple { .. } if !self.s.is_combinatorial() => return self.oracle().sat(p, b),
            Element::Triple { .. } if self.s.has_identity() => {
                let vars = p.variables();
                let mut found = None;
                for o in subsets(&vars, self.budget)? {
                    let Some(p1) = eliminate(p, &o) else { continue };
                    if let Outcome::Sat(e) = self.sat_s(&p1, b)?.outcome {
                        found = Some((with_ones(e, &o), p1, o));
                        break;
                    }
                }
                match found {
                    Some((e, p1, o)) => Verdict::new(Outcome::Sat(e), Method::Elimination)
                        .because(format!("sending {{{}}} to 1 leaves {}, which reaches {}", names(&o), p1, b)),
                    None => Verdict::new(Outcome::Unsat, Method::Elimination).because(format!("no elimination reaches {}", b)),
                }
            }
            Element::Triple { .. } => return self.sat_s(p, b),
        };
        certify::emit(&self.s, v, &[p], Some(b))
    }

    fn sat_s(&self, p: &Polynomial, b: &Element) -> Result<Verdict> {
        let (i, l) = (b.first().expect("a triple"), b.second().expect("a triple"));
        let method = match (&self.plan, &self.class) {
            (Some(plan), _) if plan.k == 1 => Method::AllOnes,
            (Some(_), _) => Method::TotallyBalanced,
            (None, MatrixClass::Bordered { .. }) => Method::Bordered,
            _ => return self.base_oracle().sat(p, b),
        };
        let mut pins = Pins::new();
        pins.insert(Vertex::first_of(p.leftmost()), i);
        pins.insert(Vertex::second_of(p.rightmost()), l);
        let why = format!("pinning (p_l)1 = {} and (p_r)2 = {}", i + 1, l + 1);
        let v = match self.feasible(p, &pins)? {
            Some(e) => Verdict::new(Outcome::Sat(e), method).because(format!("{} leaves p nonzero", why)),
            None => Verdict::new(Outcome::Unsat, method).because(format!("{} forces 0", why)),
        };
        certify::emit(&self.base, v, &[p], Some(b))
    }

    /// Whether `Z(p) = Z(q)` as subsets of `S^U`, `U` the union of the
    /// variables. A witness is zero on exactly one side.
    pub fn pol_zset_eq(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        p.validate(&self.s)?;
        q.validate(&self.s)?;
        if !self.s.is_combinatorial() {
            // zero products depend only on the shadow of M
            let v = self.quotient().pol_zset_eq(&Self::shadow_poly(p), &Self::shadow_poly(q))?;
            return certify::emit_zset(&self.s, v.because("decided over the combinatorial quotient"), p, q);
        }
        if !self.s.has_identity() {
            return self.zset_s(p, q);
        }
        let vars = union_vars(p, q);
        for o in subsets(&vars, self.budget)? {
            let e = match (eliminate(p, &o), eliminate(q, &o)) {
                (None, None) => continue,
                (Some(w), None) | (None, Some(w)) => {
                    // one side is 1; the other vanishes somewhere unless it is a nonzero constant word
                    let e = complete(Evaluation::new(), &[&w], Element::Zero);
                    if self.base.evaluate(&w, &e)?.is_zero() {
                        Some(e)
                    } else {
                        None
                    }
                }
                (Some(p1), Some(q1)) => match self.zset_s(&p1, &q1)?.outcome {
                    Outcome::NotEqual(e) => Some(e),
                    _ => None,
                },
            };
            if let Some(e) = e {
                let e = complete(with_ones(e, &o), &[p, q], Element::Zero);
                let v = Verdict::new(Outcome::NotEqual(e), Method::Elimination)
                    .because(format!("Z-sets differ once {{{}}} is sent to 1", names(&o)));
                return certify::emit_zset(&self.s, v, p, q);
            }
        }
        Ok(Verdict::new(Outcome::Equal, Method::Elimination).because("every elimination has equal Z-sets over S"))
    }

    fn zset_s(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        let method = match (&self.plan, &self.class) {
            (Some(plan), _) if plan.k == 1 => Method::AllOnes,
            (Some(_), _) => Method::TotallyBalanced,
            (None, MatrixClass::Bordered { .. }) => Method::Bordered,
            _ => return self.base_oracle().zset_eq(p, q),
        };
        let zp = self.zero_s(p)?;
        let zq = self.zero_s(q)?;
        let v = match (&zp.outcome, &zq.outcome) {
            (Outcome::Zero, Outcome::Zero) => Verdict::new(Outcome::Equal, method).because("both sides are identically 0"),
            (Outcome::NotZero(e), Outcome::Zero) | (Outcome::Zero, Outcome::NotZero(e)) => {
                Verdict::new(Outcome::NotEqual(complete(e.clone(), &[p, q], Element::Zero)), method)
                    .because("exactly one side is identically 0")
            }
            (Outcome::NotZero(ep), Outcome::NotZero(eq)) => {
                let (vp, vq) = (p.variable_set(), q.variable_set());
                if let Some(v) = vp.symmetric_difference(&vq).next() {
                    let base = if vp.contains(v) { eq } else { ep };
                    let mut e = base.clone();
                    e.insert(v.clone(), Element::Zero);
                    Verdict::new(Outcome::NotEqual(complete(e, &[p, q], Element::Zero)), method)
                        .because(format!("{} occurs on one side only", v))
                } else {
                    match method {
                        Method::AllOnes => Verdict::new(Outcome::Equal, method).because("same variables and M = J"),
                        Method::TotallyBalanced => self.zset_tb(p, q)?,
                        _ => self.zset_bordered(p, q)?,
                    }
                }
            }
            _ => return Err(Error::BadWitness("zero test returned an unexpected outcome".into())),
        };
        certify::emit_zset(&self.base, v, p, q)
    }

    fn zset_tb(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        let plan = self.plan.as_ref().expect("totally balanced");
        let (sp, sq) = (zsignature(&plan.hat(p)), zsignature(&plan.hat(q)));
        if sp == sq {
            return Ok(Verdict::new(Outcome::Equal, Method::TotallyBalanced)
                .because("the components of B̄(p̂) and B̄(q̂) through variable vertices agree"));
        }
        let why = "the components of B̄(p̂) and B̄(q̂) through variable vertices differ";
        // pin one or two variable vertices to class representatives so that
        // one side stays nonzero while the other is forced to 0
        let vertices = var_vertices(&p.variables());
        let rep = |v: &Vertex, c: usize| match v.side() {
            Some(Side::X) => plan.class_col(c),
            _ => plan.class_row(c),
        };
        for (keep, kill) in [(q, p), (p, q)] {
            for (ai, a) in vertices.iter().enumerate() {
                for b in &vertices[ai..] {
                    for c1 in 0..plan.k {
                        for c2 in 0..plan.k {
                            if a == b && c1 != c2 {
                                continue;
                            }
                            let mut pins = Pins::new();
                            pins.insert(a.clone(), rep(a, c1));
                            pins.insert(b.clone(), rep(b, c2));
                            if let Some(e) = self.feasible(keep, &pins)? {
                                if self.base.evaluate(kill, &e)?.is_zero() {
                                    return Ok(Verdict::new(Outcome::NotEqual(e), Method::TotallyBalanced).because(why));
                                }
                            }
                        }
                    }
                }
            }
        }
        let e = witness::search_zset(&self.base, p, q, self.budget, self.seed)?;
        Ok(Verdict::new(Outcome::NotEqual(e), Method::TotallyBalanced).because(why))
    }

    fn zset_bordered(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        for (first, second, label) in [(p, q, "(p, q)"), (q, p, "(q, p)")] {
            let g1 = CoordinateGraph::bipartite(first);
            let g2 = CoordinateGraph::bipartite(second);
            for (u, w) in g2.edges.difference(&g1.edges) {
                let (a, b) = if u.side() == Some(Side::X) { (u, w) } else { (w, u) };
                if let Some(e) = self.matchable(first, a, b)? {
                    let e = complete(e, &[p, q], Element::Zero);
                    return Ok(Verdict::new(Outcome::NotEqual(e), Method::Bordered)
                        .because(format!("direction {}: the edge {{{}, {}}} is matchable", label, a, b)));
                }
            }
        }
        Ok(Verdict::new(Outcome::Equal, Method::Bordered)
            .because("no edge present on one side only is matchable on the other"))
    }

    /// For a matrix with an all-ones row and column: an evaluation keeping `p`
    /// nonzero with `M(ẽ(b), ẽ(a)) = 0`, where `a` is an X-vertex, `b` a
    /// Y-vertex and `{a, b}` is not an edge of `B(p)`.
    pub fn p_matchable(&self, p: &Polynomial, a: &Vertex, b: &Vertex) -> Result<Option<Evaluation>> {
        p.validate(&self.s)?;
        if !matches!(self.class, MatrixClass::Bordered { .. }) || self.s.has_identity() || !self.s.is_combinatorial() {
            return Err(Error::Unsupported("matchability needs a bordered combinatorial matrix".into()));
        }
        if a.side() != Some(Side::X) || b.side() != Some(Side::Y) {
            return Err(Error::Precondition("expected an X-vertex and a Y-vertex".into()));
        }
        if CoordinateGraph::bipartite(p).has_edge(a, b) {
            return Err(Error::Precondition(format!("{{{}, {}}} is an edge of B(p)", a, b)));
        }
        self.matchable(p, a, b)
    }

    fn matchable(&self, p: &Polynomial, a: &Vertex, b: &Vertex) -> Result<Option<Evaluation>> {
        let m = self.m();
        for va in self.vertex_range(a) {
            for vb in self.vertex_range(b) {
                if m.is_nonzero(vb, va) {
                    continue;
                }
                let mut pins = Pins::new();
                pins.insert(a.clone(), va);
                pins.insert(b.clone(), vb);
                if let Some(e) = self.feasible(p, &pins)? {
                    return Ok(Some(e));
                }
            }
        }
        Ok(None)
    }

    /// Polynomial equivalence.
    pub fn pol_eq(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        p.validate(&self.s)?;
        q.validate(&self.s)?;
        if p.is_term() && q.is_term() {
            return self.term_eq(p, q);
        }
        if !self.s.is_combinatorial() {
            return self.oracle().eq(p, q);
        }
        if !self.s.has_identity() {
            return self.eq_s(p, q);
        }
        let vars = union_vars(p, q);
        for o in subsets(&vars, self.budget)? {
            let e = match (eliminate(p, &o), eliminate(q, &o)) {
                (None, None) => continue,
                // a nonempty word over S is never 1
                (Some(_), None) | (None, Some(_)) => Some(Evaluation::new()),
                (Some(p1), Some(q1)) => match self.eq_s(&p1, &q1)?.outcome {
                    Outcome::NotEqual(e) => Some(e),
                    _ => None,
                },
            };
            if let Some(e) = e {
                let e = complete(with_ones(e, &o), &[p, q], Element::Zero);
                let v = Verdict::new(Outcome::NotEqual(e), Method::Elimination)
                    .because(format!("the sides differ once {{{}}} is sent to 1", names(&o)));
                return certify::emit(&self.s, v, &[p, q], None);
            }
        }
        Ok(Verdict::new(Outcome::Equal, Method::Elimination).because("every elimination agrees over S"))
    }

    fn eq_s(&self, p: &Polynomial, q: &Polynomial) -> Result<Verdict> {
        if p.is_term() && q.is_term() {
            return self.term_eq(p, q);
        }
        let method = match (&self.plan, &self.class) {
            (Some(plan), _) if plan.k == 1 => Method::AllOnes,
            (Some(_), _) => Method::TotallyBalanced,
            (None, MatrixClass::Bordered { .. }) => Method::Bordered,
            _ => return self.base_oracle().eq(p, q),
        };
        let z = self.zset_s(p, q)?;
        if let Outcome::NotEqual(e) = z.outcome {
            let mut v = Verdict::new(Outcome::NotEqual(e), method).because("the Z-sets differ");
            v.explanation.extend(z.explanation);
            return certify::emit(&self.base, v, &[p, q], None);
        }
        if self.zero_s(p)?.outcome == Outcome::Zero {
            return Ok(Verdict::new(Outcome::Equal, method).because("both sides are identically 0"));
        }
        // equal Z-sets: a nonzero evaluation of p is a nonzero evaluation of q,
        // so the sides differ iff some pinning of the endpoint coordinates
        // separates them while keeping p nonzero
        let ends = [
            Vertex::first_of(p.leftmost()),
            Vertex::first_of(q.leftmost()),
            Vertex::second_of(p.rightmost()),
            Vertex::second_of(q.rightmost()),
        ];
        let mut distinct: Vec<Vertex> = Vec::new();
        for v in &ends {
            if !distinct.contains(v) {
                distinct.push(v.clone());
            }
        }
        let ranges: Vec<Vec<usize>> = distinct.iter().map(|v| self.vertex_range(v)).collect();
        let mut idx = alloc::vec![0usize; distinct.len()];
        loop {
            let val = |v: &Vertex| {
                let k = distinct.iter().position(|d| d == v).unwrap();
                ranges[k][idx[k]]
            };
            if val(&ends[0]) != val(&ends[1]) || val(&ends[2]) != val(&ends[3]) {
                let pins: Pins = distinct
                    .iter()
                    .filter(|v| v.is_var())
                    .map(|v| (v.clone(), val(v)))
                    .collect();
                if let Some(e) = self.feasible(p, &pins)? {
                    let e = complete(e, &[p, q], Element::Zero);
                    let v = Verdict::new(Outcome::NotEqual(e), method)
                        .because("the Z-sets agree")
                        .because(format!(
                            "endpoint coordinates ({}, {}) vs ({}, {}) can be separated",
                            ends[0], ends[2], ends[1], ends[3]
                        ));
                    return certify::emit(&self.base, v, &[p, q], None);
                }
            }
            let mut k = distinct.len();
            loop {
                if k == 0 {
                    return Ok(Verdict::new(Outcome::Equal, method)
                        .because("the Z-sets agree")
                        .because("no pinning of the endpoint coordinates separates the sides"));
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < ranges[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

fn names(vs: &[Variable]) -> alloc::string::String {
    let v: Vec<&str> = vs.iter().map(Variable::name).collect();
    v.join(", ")
}

fn join(vs: &[Vertex]) -> alloc::string::String {
    let v: Vec<alloc::string::String> = vs.iter().map(ToString::to_string).collect();
    v.join(", ")
}

