//! Simple undirected graphs stored as adjacency bit-rows.
//!
//! Vertices are `0..n`. Each vertex owns a row of `ceil(n / 64)` words, so
//! neighborhood, induced-subgraph and component queries are word operations.
//! Solvers that need a single-word vertex set (`n <= 64`) use [`Graph::masks`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting out-of-range endpoints,
    /// loops and repeated pairs.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = Edge::new(a, b);
            if rows[a * words + b / 64] >> (b % 64) & 1 == 1 {
                return Err(Error::DuplicateEdge(e.u(), e.v()));
            }
            rows[a * words + b / 64] |= 1 << (b % 64);
            rows[b * words + a / 64] |= 1 << (a % 64);
            list.push(e);
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            words,
            rows,
            edges: list,
        })
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("pairs u < v are always valid")
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_fn(n, |_, _| false)
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| Bits(word).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `E(v)`: the edges incident with `v`.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = Edge> + '_ {
        self.neighbors(v).map(move |u| Edge::new(u, v))
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Single-word adjacency masks. Only meaningful for `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask view needs n <= 64");
        (0..self.n).map(|v| self.rows[v * self.words]).collect()
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Same vertex set, edges of `self` minus `removed`.
    pub fn without_edges<'a>(&self, removed: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let gone: BTreeSet<Edge> = removed.into_iter().copied().collect();
        let kept = self
            .edges
            .iter()
            .filter(|e| !gone.contains(e))
            .map(|e| (e.u(), e.v()));
        Graph::new(self.n, kept).unwrap()
    }

    /// Graph on the same vertices plus one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u(), e.v())).collect();
        pairs.push((u, v));
        Graph::new(self.n, pairs)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Every component has at most as many edges as vertices, i.e. at most
    /// one cycle.
    pub fn is_quasi_unicyclic(&self) -> bool {
        components_within_budget(self.n, self.edges.iter().copied())
    }

    pub fn is_forest(&self) -> bool {
        self.connected_components()
            .iter()
            .all(|c| component_edge_count(self, c) + 1 == c.len())
    }

    /// A proper 2-coloring when the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether `vertices` are pairwise non-adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

pub(crate) fn component_edge_count(g: &Graph, comp: &[usize]) -> usize {
    comp.iter()
        .map(|&v| g.neighbors(v).filter(|&u| u > v).count())
        .sum()
}

/// Union-find check that every component of `(0..n, edges)` has
/// `|E| <= |V|`.
pub(crate) fn components_within_budget(n: usize, edges: impl IntoIterator<Item = Edge>) -> bool {
    let mut dsu = BudgetDsu::new(n);
    edges.into_iter().all(|e| dsu.try_add(e.u(), e.v()))
}

/// Disjoint sets that track vertex and edge counts per component.
#[derive(Debug, Clone)]
pub(crate) struct BudgetDsu {
    parent: Vec<usize>,
    verts: Vec<usize>,
    edges: Vec<usize>,
}

impl BudgetDsu {
    pub(crate) fn new(n: usize) -> Self {
        BudgetDsu {
            parent: (0..n).collect(),
            verts: vec![1; n],
            edges: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Whether adding `u-v` keeps its component within `|E| <= |V|`.
    pub(crate) fn can_add(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            self.edges[a] < self.verts[a]
        } else {
            self.edges[a] + self.edges[b] < self.verts[a] + self.verts[b]
        }
    }

    /// Adds `u-v` when that keeps the budget; returns whether it did.
    pub(crate) fn try_add(&mut self, u: usize, v: usize) -> bool {
        if !self.can_add(u, v) {
            return false;
        }
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            self.edges[a] += 1;
        } else {
            self.parent[b] = a;
            self.verts[a] += self.verts[b];
            self.edges[a] += self.edges[b] + 1;
        }
        true
    }
}

/// A subset of a graph's edge set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSubset {
    edges: Vec<Edge>,
}

impl EdgeSubset {
    /// Checks that every edge belongs to `g`; duplicates collapse.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().collect();
        for e in &list {
            if !g.has_edge(e.u(), e.v()) {
                return Err(Error::NotAnEdge(e.u(), e.v()));
            }
        }
        list.sort_unstable();
        list.dedup();
        Ok(EdgeSubset { edges: list })
    }

    /// Subset given by a bitmask over `g.edges()` positions.
    pub fn from_index_mask(g: &Graph, mask: u64) -> Self {
        let edges = Bits(mask).map(|i| g.edges()[i]).collect();
        EdgeSubset { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// Whether some 1-selection of `g` removes exactly the edges of `d`.
///
/// Each vertex removes at most one edge, so this holds iff every component
/// of the spanning subgraph `(V, d)` has no more edges than vertices.
pub fn is_removable_edge_set(g: &Graph, d: &EdgeSubset) -> Result<bool> {
    for e in d.edges() {
        if !g.has_edge(e.u(), e.v()) {
            return Err(Error::NotAnEdge(e.u(), e.v()));
        }
    }
    Ok(components_within_budget(g.n(), d.edges().iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_complete_graph() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, []).unwrap().m(), 0);
    }

    #[test]
    fn wide_rows() {
        let g = Graph::from_fn(130, |u, v| v == u + 1 || (u == 0 && v == 129));
        assert!(g.has_edge(128, 129) && g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 129]);
        assert_eq!(g.connected_components().len(), 1);
        assert!(g.is_quasi_unicyclic());
    }

    #[test]
    fn quasi_unicyclic_examples() {
        assert!(Graph::path(7).is_quasi_unicyclic());
        assert!(!Graph::complete(4).is_quasi_unicyclic());
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(two_triangles.is_quasi_unicyclic());
        // Two triangles sharing a vertex: one component, 6 edges on 5 vertices.
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!bowtie.is_quasi_unicyclic());
    }

    #[test]
    fn components() {
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            two_triangles.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);
        assert_eq!(Graph::empty(4).connected_components().len(), 4);
    }

    #[test]
    fn removable_sets() {
        let k4 = Graph::complete(4);
        let tri =
            EdgeSubset::new(&k4, [Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)]).unwrap();
        assert!(is_removable_edge_set(&k4, &tri).unwrap());
        let all = EdgeSubset::new(&k4, k4.edges().iter().copied()).unwrap();
        assert!(!is_removable_edge_set(&k4, &all).unwrap());
        assert!(is_removable_edge_set(&k4, &EdgeSubset::default()).unwrap());

        let p3 = Graph::path(3);
        assert!(EdgeSubset::new(&p3, [Edge::new(0, 2)]).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn bipartite_detection() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
    }
}
