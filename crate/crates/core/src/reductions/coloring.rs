//! Graph 3-colorability as an identically-zero question over `S_{H₃}`.
//!
//! Vertex `v` (1-based) becomes the variable `x#v`. Its block
//! `x (∏_{s≠t} y t^{(s,t)} z) x` reuses the gadget
//! `t^{(s,t)} = x w w [s,t] w x` with `w = x#v#s#t` and buffers `y#v#s#t`,
//! `z#v#s#t`. A nonzero block value forces `x ∈ N = {[z,z]}` and equals `x`.

use alloc::format;
use alloc::vec::Vec;

use super::graph::{colorings, edge_walk, SimpleGraph};
use super::search::{extend, EXTEND_NODES};
use crate::error::{Error, Result};
use crate::matrix::StructureMatrix;
use crate::poly::{Evaluation, Polynomial, Symbol, Variable};
use crate::semigroup::{Element, ReesSemigroup};

/// Ordered pairs `(s, t)` of distinct 0-based indices in block order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// Symbols in one vertex block.
pub const BLOCK_LEN: usize = 50;

pub fn h3() -> ReesSemigroup {
    ReesSemigroup::combinatorial(StructureMatrix::hollow(3).expect("H₃ is valid")).expect("H₃ is regular")
}

pub fn vertex_var(v: usize) -> Variable {
    Variable::new(format!("x#{}", v + 1))
}

fn aux(kind: char, v: usize, s: usize, t: usize) -> Variable {
    Variable::new(format!("{}#{}#{}#{}", kind, v + 1, s + 1, t + 1))
}

/// The gadget `x w² [s,t] w x` with `w` the auxiliary variable of `(v, s, t)`.
pub fn gadget(v: usize, s: usize, t: usize) -> Polynomial {
    let x = Symbol::Var(vertex_var(v));
    let w = Symbol::Var(aux('x', v, s, t));
    Polynomial::new(alloc::vec![
        x.clone(),
        w.clone(),
        w.clone(),
        Symbol::Const(Element::pair(s, t)),
        w,
        x,
    ])
    .expect("nonempty")
}

/// The block `σ(x_v)`.
pub fn block(v: usize) -> Polynomial {
    let x = Symbol::Var(vertex_var(v));
    let mut word = alloc::vec![x.clone()];
    for &(s, t) in &PAIRS {
        word.push(Symbol::Var(aux('y', v, s, t)));
        word.extend(gadget(v, s, t).into_symbols());
        word.push(Symbol::Var(aux('z', v, s, t)));
    }
    word.push(x);
    Polynomial::new(word).expect("nonempty")
}

/// The term `t_G`, one vertex variable per walk position.
pub fn walk_term(g: &SimpleGraph) -> Result<Polynomial> {
    let walk = edge_walk(g)?;
    Polynomial::new(walk.vertices().iter().map(|&v| Symbol::Var(vertex_var(v))).collect())
}

/// `σ(t_G)`: the blocks concatenated along the edge walk.
pub fn sigma(g: &SimpleGraph) -> Result<Polynomial> {
    let walk = edge_walk(g)?;
    let mut word = Vec::with_capacity(walk.vertices().len() * BLOCK_LEN);
    for &v in walk.vertices() {
        word.extend(block(v).into_symbols());
    }
    Polynomial::new(word)
}

/// For every pair, over all `10²` values of `(x, w)`: `x = [t,s]` zeroes the
/// gadget, while any other nonzero `x` admits a `w` keeping it nonzero.
pub fn gadget_property_holds(s: usize, t: usize) -> Result<bool> {
    let h = h3();
    let q = gadget(0, s, t);
    let (x, w) = (vertex_var(0), aux('x', 0, s, t));
    let elements = h.elements();
    for a in &elements {
        let mut nonzero = false;
        for b in &elements {
            let mut e = Evaluation::new();
            e.insert(x.clone(), *a);
            e.insert(w.clone(), *b);
            nonzero |= !h.evaluate(&q, &e)?.is_zero();
        }
        let expected = !a.is_zero() && *a != Element::pair(t, s);
        if nonzero != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An evaluation of the block variables of `v` with `e(σ(x_v)) = [z,z]`.
pub fn extend_block(v: usize, z: usize) -> Result<Option<Evaluation>> {
    let mut partial = Evaluation::new();
    let x = Element::pair(z, z);
    partial.insert(vertex_var(v), x);
    extend(&h3(), &block(v), &partial, Some(&x), EXTEND_NODES)
}

/// The block sends `x ↦ a` to a nonzero value for some completion exactly when
/// `a ∈ N`, and the value is then `a`.
pub fn block_property_holds() -> Result<bool> {
    let h = h3();
    let b = block(0);
    for a in h.elements() {
        let mut partial = Evaluation::new();
        partial.insert(vertex_var(0), a);
        let nil = matches!(a, Element::Triple { i, lambda, .. } if i == lambda);
        let found = extend(&h, &b, &partial, None, EXTEND_NODES)?;
        match found {
            Some(e) if nil => {
                if h.evaluate(&b, &e)? != a {
                    return Ok(false);
                }
            }
            None if !nil => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// `x#v ↦ [c(v), c(v)]`.
pub fn encode_coloring(g: &SimpleGraph, c: &[usize]) -> Result<Evaluation> {
    if !g.is_proper_coloring(c) {
        return Err(Error::Precondition("not a proper 3-coloring".into()));
    }
    Ok((0..g.vertex_count()).map(|v| (vertex_var(v), Element::pair(c[v], c[v]))).collect())
}

/// Extends a vertex assignment over `N` to all block variables, one
/// completion per vertex.
pub fn extend_assignment(g: &SimpleGraph, f: &Evaluation) -> Result<Option<Evaluation>> {
    let mut e = Evaluation::new();
    for v in 0..g.vertex_count() {
        let z = match f.get(&vertex_var(v)) {
            Some(Element::Triple { i, lambda, .. }) if i == lambda => *i,
            _ => return Ok(None),
        };
        match extend_block(v, z)? {
            Some(part) => e.extend(part),
            None => return Ok(None),
        }
    }
    Ok(Some(e))
}

/// Reads the coloring `c(v) = z` from `e(x#v) = [z,z]`.
pub fn decode_coloring(g: &SimpleGraph, e: &Evaluation) -> Result<Vec<usize>> {
    if h3().evaluate(&sigma(g)?, e)?.is_zero() {
        return Err(Error::BadWitness("the evaluation sends the polynomial to 0".into()));
    }
    let mut c = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        match e.get(&vertex_var(v)) {
            Some(Element::Triple { i, lambda, .. }) if i == lambda => c.push(*i),
            _ => return Err(Error::BadWitness(format!("x#{} is not nil", v + 1))),
        }
    }
    debug_assert!(g.is_proper_coloring(&c));
    Ok(c)
}

/// The first `N`-assignment of the vertex variables, in lexicographic colour
/// order, whose block-wise extension keeps `σ(t_G)` nonzero.
pub fn structured_witness(g: &SimpleGraph) -> Result<Option<Evaluation>> {
    let h = h3();
    let p = sigma(g)?;
    let blocks: Vec<[Option<Evaluation>; 3]> = (0..g.vertex_count())
        .map(|v| Ok([extend_block(v, 0)?, extend_block(v, 1)?, extend_block(v, 2)?]))
        .collect::<Result<_>>()?;
    for c in colorings(g.vertex_count()) {
        let mut e = Evaluation::new();
        let mut complete = true;
        for (v, &z) in c.iter().enumerate() {
            match &blocks[v][z] {
                Some(part) => e.extend(part.clone()),
                None => complete = false,
            }
        }
        if complete && !h.evaluate(&p, &e)?.is_zero() {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// True when some occurrence of `v` is immediately followed by another.
pub fn has_adjacent_repeat(p: &Polynomial, v: &Variable) -> bool {
    p.symbols()
        .windows(2)
        .any(|w| w[0].as_var() == Some(v) && w[1].as_var() == Some(v))
}
