//! Simple graphs, their text format, and the closed edge walk.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A simple graph on vertices `0..n`. Edges are stored as `(a, b)` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge {}-{} leaves the vertex range", a + 1, b + 1)));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", a + 1)));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("repeated edge {}-{}", a + 1, b + 1)));
            }
        }
        Ok(SimpleGraph { n, edges: set })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::new(n, &edges)
    }

    /// The path `1 - 2 - … - n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|b| (b - 1, b)).collect();
        Self::new(n, &edges)
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Parses `"n m"` followed by `m` lines `"a b"` with 1-based endpoints.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let parse_pair = |(no, line): (usize, &str)| -> Result<(usize, usize)> {
            let nums: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse {
                offset: no + 1,
                message: format!("expected two integers, found {:?}", line),
            };
            if nums.len() != 2 {
                return Err(bad());
            }
            Ok((nums[0].parse().map_err(|_| bad())?, nums[1].parse().map_err(|_| bad())?))
        };
        let header = lines.next().ok_or(Error::Parse {
            offset: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            let no = line.0;
            let (a, b) = parse_pair(line)?;
            if a == 0 || b == 0 {
                return Err(Error::Parse {
                    offset: no + 1,
                    message: "vertices are numbered from 1".into(),
                });
            }
            edges.push((a - 1, b - 1));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                offset: text.lines().count(),
                message: format!("header announces {} edges, found {}", m, edges.len()),
            });
        }
        if let Some((no, _)) = lines.next() {
            return Err(Error::Parse {
                offset: no + 1,
                message: "trailing lines after the edge list".into(),
            });
        }
        Self::new(n, &edges)
    }

    /// The text format accepted by [`SimpleGraph::parse`].
    pub fn to_text(&self) -> alloc::string::String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (a, b) in &self.edges {
            s.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Neighbours in increasing order.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = alloc::vec![false; self.n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !core::mem::replace(&mut seen[u], true) {
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Colours in `0..3`, one per vertex, with adjacent vertices distinct.
    pub fn is_proper_coloring(&self, c: &[usize]) -> bool {
        c.len() == self.n && c.iter().all(|&z| z < 3) && self.edges.iter().all(|&(a, b)| c[a] != c[b])
    }

    /// The lexicographically first proper 3-coloring.
    pub fn three_coloring(&self) -> Option<Vec<usize>> {
        colorings(self.n).find(|c| self.is_proper_coloring(c))
    }
}

/// All `3ⁿ` colour vectors in lexicographic order.
pub fn colorings(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut c = alloc::vec![0; n];
        for slot in c.iter_mut().rev() {
            *slot = k % 3;
            k /= 3;
        }
        c
    })
}

/// A closed walk `a₁ … a_p` in which consecutive vertices are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWalk(pub Vec<usize>);

impl EdgeWalk {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of steps, one less than the number of vertices visited.
    pub fn steps(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Each edge of `g` is traversed in both directions and every step is an edge.
    pub fn covers(&self, g: &SimpleGraph) -> bool {
        let steps: BTreeSet<(usize, usize)> = self.0.windows(2).map(|w| (w[0], w[1])).collect();
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && g.edges().all(|(a, b)| steps.contains(&(a, b)) && steps.contains(&(b, a)))
            && self.0.iter().all(|&v| v < g.vertex_count())
            && (0..g.vertex_count()).all(|v| self.0.contains(&v))
    }
}

/// Depth-first closed walk from vertex 0 crossing every edge once in each
/// direction, so it has `2|E|` steps.
pub fn edge_walk(g: &SimpleGraph) -> Result<EdgeWalk> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let mut used = BTreeSet::new();
    let mut walk = alloc::vec![0];
    // explicit stack of (vertex, next neighbour position)
    let adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbours(v)).collect();
    let mut stack = alloc::vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut k)) = stack.last_mut() {
        if let Some(&u) = adj[v].get(*k) {
            *k += 1;
            if used.insert((v.min(u), v.max(u))) {
                walk.push(u);
                stack.push((u, 0));
            }
        } else {
            stack.pop();
            if let Some(&(parent, _)) = stack.last() {
                walk.push(parent);
            }
        }
    }
    Ok(EdgeWalk(walk))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walks() {
        let k2 = SimpleGraph::complete(2).unwrap();
        assert_eq!(edge_walk(&k2).unwrap().0, [0, 1, 0]);
        let k3 = SimpleGraph::complete(3).unwrap();
        let w = edge_walk(&k3).unwrap();
        assert_eq!(w.0, [0, 1, 2, 0, 2, 1, 0]);
        assert_eq!(w.steps(), 6);
        assert!(w.covers(&k3));
        let p3 = SimpleGraph::path(3).unwrap();
        assert_eq!(edge_walk(&p3).unwrap().steps(), 4);
        let k1 = SimpleGraph::complete(1).unwrap();
        assert_eq!(edge_walk(&k1).unwrap().0, [0]);
        for n in 2..6 {
            let k = SimpleGraph::complete(n).unwrap();
            let w = edge_walk(&k).unwrap();
            assert_eq!(w.steps(), 2 * k.edge_count());
            assert!(w.covers(&k));
        }
    }

    #[test]
    fn disconnected_graphs_have_no_walk() {
        let g = SimpleGraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(edge_walk(&g), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn construction_errors() {
        assert!(SimpleGraph::new(2, &[(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 2)]).is_err());
        assert!(SimpleGraph::new(0, &[]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = SimpleGraph::parse("# triangle\n3 3\n1 2\n2 3\n\n3 1\n").unwrap();
        assert_eq!(g, SimpleGraph::complete(3).unwrap());
        assert_eq!(SimpleGraph::parse(&g.to_text()).unwrap(), g);
        assert!(SimpleGraph::parse("3 2\n1 2\n").is_err());
        assert!(SimpleGraph::parse("2 1\n0 1\n").is_err());
        assert!(SimpleGraph::parse("2 1\n1 2\n1 2\n").is_err());
    }

    #[test]
    fn colorability() {
        assert!(SimpleGraph::complete(3).unwrap().three_coloring().is_some());
        assert!(SimpleGraph::complete(4).unwrap().three_coloring().is_none());
        assert_eq!(SimpleGraph::cycle(5).unwrap().three_coloring(), Some(alloc::vec![0, 1, 0, 1, 2]));
    }
}
