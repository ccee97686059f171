//! Graphs attached to a polynomial: the adjacency graph `G(p)`, the bipartite
//! coordinate graph `B(p)`, its index-identified form `B̄(p)`, and the
//! antichain families `A_{x,y,p}`.
//!
//! `B(p)` has an X-vertex for the first coordinate and a Y-vertex for the
//! second coordinate of every symbol. A variable contributes its own pair of
//! vertices; a constant `[i,λ]` contributes the shared vertices `i_X` and
//! `λ_Y`. An adjacent pair `vw` contributes the edge `{w₁, v₂}`, which carries
//! the constraint `M(ẽ(v₂), ẽ(w₁)) ≠ 0`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{Polynomial, Symbol, Variable};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// `G(p)`: `(c, d)` is an edge iff `cd` is a factor of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub vertices: BTreeSet<Symbol>,
    pub edges: BTreeSet<(Symbol, Symbol)>,
}

impl AdjacencyGraph {
    pub fn of(p: &Polynomial) -> Self {
        let w = p.symbols();
        AdjacencyGraph {
            vertices: w.iter().cloned().collect(),
            edges: w
                .windows(2)
                .map(|pair| (pair[0].clone(), pair[1].clone()))
                .collect(),
        }
    }

    pub fn has_edge(&self, a: &Symbol, b: &Symbol) -> bool {
        self.edges.contains(&(a.clone(), b.clone()))
    }
}

/// X holds first coordinates, Y second coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

/// A vertex of `B(p)` or `B̄(p)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// `v₁` (side X) or `v₂` (side Y) of a variable.
    Var(Variable, Side),
    /// A constant coordinate: a column `i_X` or a row `λ_Y`.
    Const(usize, Side),
    /// `i_X` and `i_Y` merged in `B̄(p)`.
    Index(usize),
}

impl Vertex {
    pub fn is_var(&self) -> bool {
        matches!(self, Vertex::Var(..))
    }

    /// The constant index carried by a constant vertex.
    pub fn index(&self) -> Option<usize> {
        match *self {
            Vertex::Const(i, _) | Vertex::Index(i) => Some(i),
            Vertex::Var(..) => None,
        }
    }

    /// The side of a vertex of `B(p)`; merged vertices have none.
    pub fn side(&self) -> Option<Side> {
        match *self {
            Vertex::Var(_, s) | Vertex::Const(_, s) => Some(s),
            Vertex::Index(_) => None,
        }
    }

    /// The X-vertex (first coordinate) of a symbol.
    pub fn first_of(s: &Symbol) -> Vertex {
        match s {
            Symbol::Var(v) => Vertex::Var(v.clone(), Side::X),
            Symbol::Const(c) => Vertex::Const(c.first().expect("constants are triples"), Side::X),
        }
    }

    /// The Y-vertex (second coordinate) of a symbol.
    pub fn second_of(s: &Symbol) -> Vertex {
        match s {
            Symbol::Var(v) => Vertex::Var(v.clone(), Side::Y),
            Symbol::Const(c) => Vertex::Const(c.second().expect("constants are triples"), Side::Y),
        }
    }

    fn merged(self) -> Vertex {
        match self {
            Vertex::Const(i, _) => Vertex::Index(i),
            v => v,
        }
    }
}

impl fmt::Display for Vertex {
    /// `x.1`/`x.2` for variable coordinates, `3X`/`3Y` for constant
    /// coordinates and `3` for merged indices; 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Var(v, Side::X) => write!(f, "{}.1", v),
            Vertex::Var(v, Side::Y) => write!(f, "{}.2", v),
            Vertex::Const(i, Side::X) => write!(f, "{}X", i + 1),
            Vertex::Const(i, Side::Y) => write!(f, "{}Y", i + 1),
            Vertex::Index(i) => write!(f, "{}", i + 1),
        }
    }
}

/// An undirected graph on [`Vertex`] values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateGraph {
    pub vertices: BTreeSet<Vertex>,
    /// Each edge is stored with its smaller endpoint first.
    pub edges: BTreeSet<(Vertex, Vertex)>,
}

/// Connected components as sorted vertex lists, sorted by first vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    pub blocks: Vec<Vec<Vertex>>,
}

impl Partition {
    /// Position of the block containing `v`.
    pub fn block_of(&self, v: &Vertex) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(v).is_ok())
    }

    pub fn same_block(&self, a: &Vertex, b: &Vertex) -> bool {
        match (self.block_of(a), self.block_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// True iff every constant vertex of `block` carries the same index.
pub fn is_consistent(block: &[Vertex]) -> bool {
    let mut it = block.iter().filter_map(Vertex::index);
    match it.next() {
        None => true,
        Some(i) => it.all(|j| j == i),
    }
}

impl CoordinateGraph {
    /// `B(p)`.
    pub fn bipartite(p: &Polynomial) -> Self {
        let w = p.symbols();
        let mut vertices = BTreeSet::new();
        for s in w {
            vertices.insert(Vertex::first_of(s));
            vertices.insert(Vertex::second_of(s));
        }
        let mut edges = BTreeSet::new();
        for pair in w.windows(2) {
            edges.insert(ordered(Vertex::first_of(&pair[1]), Vertex::second_of(&pair[0])));
        }
        CoordinateGraph { vertices, edges }
    }

    /// `B̄(p)`: `B(p)` with `i_X` and `i_Y` merged into one vertex per index.
    pub fn identified(p: &Polynomial) -> Self {
        let b = Self::bipartite(p);
        CoordinateGraph {
            vertices: b.vertices.into_iter().map(Vertex::merged).collect(),
            edges: b
                .edges
                .into_iter()
                .map(|(a, c)| ordered(a.merged(), c.merged()))
                .collect(),
        }
    }

    pub fn has_edge(&self, a: &Vertex, b: &Vertex) -> bool {
        self.edges.contains(&ordered(a.clone(), b.clone()))
    }

    pub fn components(&self) -> Partition {
        let ids: BTreeMap<&Vertex, usize> =
            self.vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut uf = UnionFind::new(ids.len());
        for (a, b) in &self.edges {
            uf.union(ids[a], ids[b]);
        }
        let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (v, &k) in &ids {
            groups.entry(uf.find(k)).or_default().push((*v).clone());
        }
        // vertices iterate in sorted order, so each block is already sorted
        let mut blocks: Vec<Vec<Vertex>> = groups.into_values().collect();
        blocks.sort();
        Partition { blocks }
    }
}

fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// True iff some component of `B(p)` holds two different constant indices.
pub fn has_inconsistent_component(p: &Polynomial) -> bool {
    CoordinateGraph::bipartite(p)
        .components()
        .blocks
        .iter()
        .any(|b| !is_consistent(b))
}

/// The block positions, in order of first appearance, met when scanning
/// the variables of `p` left to right through their X-vertices (`Side::X`)
/// or right to left through their Y-vertices (`Side::Y`).
pub fn component_sequencing(p: &Polynomial, partition: &Partition, side: Side) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut visit = |s: &Symbol| {
        let v = match side {
            Side::X => Vertex::first_of(s),
            Side::Y => Vertex::second_of(s),
        };
        if let Some(b) = partition.block_of(&v) {
            if seen.insert(b) {
                out.push(b);
            }
        }
    };
    match side {
        Side::X => p.symbols().iter().for_each(&mut visit),
        Side::Y => p.symbols().iter().rev().for_each(&mut visit),
    }
    out
}

/// Like [`component_sequencing`] but reports each block by its sorted vertex
/// list, so sequencings of different polynomials can be compared directly.
pub fn component_sequencing_blocks(p: &Polynomial, side: Side) -> Vec<Vec<Vertex>> {
    let partition = CoordinateGraph::bipartite(p).components();
    component_sequencing(p, &partition, side)
        .into_iter()
        .map(|b| partition.blocks[b].clone())
        .collect()
}

/// `A_{x,y,p}`: the inclusion-minimal variable sets `U` for which `p` has a
/// factor `x u y` where `u` avoids `x` and `y` and has variable set `U`.
pub type AntichainFamily = BTreeSet<BTreeSet<Variable>>;

pub fn antichains(p: &Polynomial, x: &Variable, y: &Variable) -> AntichainFamily {
    let w = p.symbols();
    let mut family = BTreeSet::new();
    for (a, s) in w.iter().enumerate() {
        if s.as_var() != Some(x) {
            continue;
        }
        let mut between = BTreeSet::new();
        for t in &w[a + 1..] {
            match t.as_var() {
                Some(v) if v == y => {
                    family.insert(between.clone());
                    break;
                }
                Some(v) if v == x => break,
                Some(v) => {
                    between.insert(v.clone());
                }
                None => {}
            }
        }
    }
    minimal_sets(family)
}

/// The inclusion-minimal members of `family`.
pub fn minimal_sets<T: Ord + Clone>(family: BTreeSet<BTreeSet<T>>) -> BTreeSet<BTreeSet<T>> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}

/// `A_{x,y,p}` for every ordered pair of variables of `p`.
pub fn all_antichains(p: &Polynomial) -> BTreeMap<(Variable, Variable), AntichainFamily> {
    let vars = p.variables();
    let mut out = BTreeMap::new();
    for x in &vars {
        for y in &vars {
            out.insert((x.clone(), y.clone()), antichains(p, x, y));
        }
    }
    out
}

/// The graph in Graphviz DOT syntax.
pub fn to_dot(g: &CoordinateGraph, name: &str) -> alloc::string::String {
    use core::fmt::Write;
    let mut s = alloc::string::String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name);
    for v in &g.vertices {
        let _ = writeln!(s, "  \"{}\";", v);
    }
    for (a, b) in &g.edges {
        let _ = writeln!(s, "  \"{}\" -- \"{}\";", a, b);
    }
    s.push_str("}\n");
    s
}
