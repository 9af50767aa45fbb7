//! Brute-force reference computations for small graphs, written directly
//! from the definitions and sharing no search code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// A small graph as an edge list over `0..n`, edges `(u, v)` with `u < v`.
#[derive(Debug, Clone)]
pub struct Small {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Small {
    /// Edges picked from the pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Small {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> i & 1 == 1 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Small { n, edges }
    }

    pub fn to_graph(&self) -> robcol::Graph {
        robcol::Graph::new(self.n, self.edges.iter().copied()).unwrap()
    }

    fn adjacent(&self, keep: u64) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    /// Every edge mask (over `self.edges`) removed by some 1-selection:
    /// each vertex picks one incident edge or none.
    pub fn selection_images(&self) -> BTreeSet<u64> {
        // Option 0 is "no pick"; option j > 0 is the j-th incident edge.
        let options: Vec<Vec<u64>> = (0..self.n)
            .map(|v| {
                let mut o = vec![0u64];
                o.extend(
                    (0..self.edges.len())
                        .filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v)
                        .map(|i| 1u64 << i),
                );
                o
            })
            .collect();
        let mut out = BTreeSet::new();
        let mut pick = vec![0usize; self.n];
        loop {
            out.insert(options.iter().zip(&pick).fold(0u64, |m, (o, &p)| m | o[p]));
            let mut i = 0;
            loop {
                if i == pick.len() {
                    return out;
                }
                pick[i] += 1;
                if pick[i] < options[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }

    /// Whether every component of the subgraph spanned by `mask` has no
    /// more edges than vertices.
    pub fn components_sparse(&self, mask: u64) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        let mut vertices = vec![0usize; self.n];
        let mut edges = vec![0usize; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            vertices[r] += 1;
        }
        for (i, &(u, _)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let r = find(&mut parent, u);
                edges[r] += 1;
            }
        }
        (0..self.n).all(|r| edges[r] <= vertices[r])
    }

    /// Chromatic number of the subgraph keeping the edges in `keep`, by
    /// trying every assignment with `k` colors for increasing `k`.
    pub fn chromatic(&self, keep: u64) -> usize {
        if self.n == 0 {
            return 0;
        }
        let kept: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| keep >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        for k in 1..=self.n {
            let total = k.pow(self.n as u32);
            let ok = (0..total).any(|code| {
                let color = |v: usize| code / k.pow(v as u32) % k;
                kept.iter().all(|&(u, v)| color(u) != color(v))
            });
            if ok {
                return k;
            }
        }
        unreachable!()
    }

    /// Largest vertex subset that is independent (`clique == false`) or a
    /// clique (`clique == true`) in the subgraph keeping `keep`.
    pub fn extreme_set(&self, keep: u64, clique: bool) -> usize {
        let adj = self.adjacent(keep);
        (0u32..1 << self.n)
            .filter(|&s| {
                (0..self.n).filter(|&v| s >> v & 1 == 1).all(|v| {
                    let others = s & !(1 << v);
                    if clique {
                        adj[v] & others == others
                    } else {
                        adj[v] & others == 0
                    }
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// χ₁, α₁, ω₁ straight from the definition.
    pub fn robust_triple(&self) -> (usize, usize, usize) {
        let all = (1u64 << self.edges.len()) - 1;
        let mut chi1 = usize::MAX;
        let mut alpha1 = 0;
        let mut omega1 = usize::MAX;
        for removed in self.selection_images() {
            let keep = all & !removed;
            chi1 = chi1.min(self.chromatic(keep));
            alpha1 = alpha1.max(self.extreme_set(keep, false));
            omega1 = omega1.min(self.extreme_set(keep, true));
        }
        (chi1, alpha1, omega1)
    }
}
