//! Edge selections and the removed subgraphs they produce.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSubset, Graph};

/// Per-vertex choice of at most `cap` incident edges. Only the other
/// endpoint is stored: vertex `v` choosing `u` means `f(v)` contains `vu`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection {
    cap: usize,
    choice: Vec<Vec<usize>>,
}

impl Selection {
    /// The empty 1-selection on `n` vertices.
    pub fn new(n: usize) -> Self {
        Selection::with_cap(n, 1)
    }

    pub fn with_cap(n: usize, cap: usize) -> Self {
        Selection {
            cap,
            choice: vec![Vec::new(); n],
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn n(&self) -> usize {
        self.choice.len()
    }

    /// Records that `v` selects the edge `vu`. Repeated picks are ignored.
    pub fn select(&mut self, v: usize, u: usize) {
        if !self.choice[v].contains(&u) {
            self.choice[v].push(u);
        }
    }

    pub fn choices(&self, v: usize) -> &[usize] {
        &self.choice[v]
    }

    /// All `(v, u)` picks in vertex order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.choice
            .iter()
            .enumerate()
            .flat_map(|(v, us)| us.iter().map(move |&u| (v, u)))
    }

    pub fn is_empty(&self) -> bool {
        self.choice.iter().all(Vec::is_empty)
    }

    /// Checks the selection against `g`: same vertex count, each pick an
    /// edge at its vertex, no vertex over the cap.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::params(format!(
                "selection has {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        for (v, us) in self.choice.iter().enumerate() {
            if us.len() > self.cap {
                return Err(Error::SelectionCap {
                    vertex: v,
                    count: us.len(),
                    cap: self.cap,
                });
            }
            for &u in us {
                if !g.has_edge(v, u) {
                    return Err(Error::NotAnEdge(v, u));
                }
            }
        }
        Ok(())
    }

    /// The removed edge set `f[V]`. Assumes the selection is valid.
    pub fn image(&self) -> BTreeSet<Edge> {
        self.pairs().map(|(v, u)| Edge::new(v, u)).collect()
    }

    pub fn image_subset(&self, g: &Graph) -> Result<EdgeSubset> {
        self.validate(g)?;
        EdgeSubset::new(g, self.image())
    }

    /// Adds the picks of `other` (same vertex count).
    pub fn merge(&mut self, other: &Selection) {
        for (v, u) in other.pairs() {
            self.select(v, u);
        }
    }
}

/// `G_f`: the graph with the image of `f` deleted.
pub fn apply_selection(g: &Graph, f: &Selection) -> Result<Graph> {
    f.validate(g)?;
    Ok(g.without_edges(&f.image()))
}

/// A selection that deletes every edge of `g[block]` using only vertices of
/// `block`, when `g[block]` is quasi-unicyclic.
///
/// Per component: a tree is rooted at its lowest vertex and every other
/// vertex picks its parent edge; in a unicyclic component the cycle is walked
/// from its lowest vertex toward its lower-indexed neighbor, each cycle vertex
/// picks the edge to its successor, and the hanging trees point at the cycle.
pub fn erasing_picks(g: &Graph, block: &[usize]) -> Result<Vec<(usize, usize)>> {
    let h = g.induced(block);
    let mut picks = Vec::new();
    for comp in h.connected_components() {
        let edges: usize = comp
            .iter()
            .map(|&v| h.neighbors(v).filter(|&u| u > v).count())
            .sum();
        let roots = if edges + 1 == comp.len() {
            vec![comp[0]]
        } else if edges == comp.len() {
            let cycle = cycle_walk(&h, &comp);
            for i in 0..cycle.len() {
                picks.push((block[cycle[i]], block[cycle[(i + 1) % cycle.len()]]));
            }
            cycle
        } else {
            return Err(Error::WrongClass("quasi-unicyclic"));
        };
        // Breadth-first from the roots; every newly reached vertex picks the
        // edge it was reached by.
        let mut seen: BTreeSet<usize> = roots.iter().copied().collect();
        let mut queue: VecDeque<usize> = roots.into_iter().collect();
        while let Some(v) = queue.pop_front() {
            for u in h.neighbors(v) {
                if seen.insert(u) {
                    picks.push((block[u], block[v]));
                    queue.push_back(u);
                }
            }
        }
    }
    Ok(picks)
}

/// The unique cycle of a unicyclic component, in walk order.
fn cycle_walk(h: &Graph, comp: &[usize]) -> Vec<usize> {
    let mut deg: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut alive: BTreeSet<usize> = comp.iter().copied().collect();
    let mut leaves: Vec<usize> = comp.iter().copied().filter(|&v| deg[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        alive.remove(&v);
        for u in h.neighbors(v) {
            if alive.contains(&u) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    leaves.push(u);
                }
            }
        }
    }
    let start = *alive.first().expect("unicyclic component has a cycle");
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = h
            .neighbors(cur)
            .find(|&u| alive.contains(&u) && u != prev)
            .expect("cycle vertex has two cycle neighbors");
        if next == start {
            break;
        }
        walk.push(next);
        prev = cur;
        cur = next;
        debug_assert!(walk.len() <= alive.len());
    }
    walk
}

/// Selection on `g` erasing every block's induced edges.
pub fn erasing_selection(g: &Graph, blocks: &[Vec<usize>]) -> Result<Selection> {
    let mut f = Selection::new(g.n());
    for block in blocks {
        for (v, u) in erasing_picks(g, block)? {
            f.select(v, u);
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_triangle_removal() {
        let k3 = Graph::complete(3);
        let mut f = Selection::new(3);
        f.select(0, 1);
        f.select(1, 2);
        f.select(2, 0);
        assert_eq!(apply_selection(&k3, &f).unwrap().m(), 0);
    }

    #[test]
    fn empty_selection_is_identity() {
        let p3 = Graph::path(3);
        assert_eq!(apply_selection(&p3, &Selection::new(3)).unwrap(), p3);
    }

    #[test]
    fn shared_pick_removes_one_edge() {
        let k4 = Graph::complete(4);
        let mut f = Selection::new(4);
        f.select(0, 1);
        f.select(1, 0);
        assert_eq!(apply_selection(&k4, &f).unwrap().m(), 5);
    }

    #[test]
    fn invalid_selections() {
        let p3 = Graph::path(3);
        let mut f = Selection::new(3);
        f.select(0, 2);
        assert_eq!(apply_selection(&p3, &f), Err(Error::NotAnEdge(0, 2)));
        let mut g = Selection::new(3);
        g.select(1, 0);
        g.select(1, 2);
        assert!(matches!(
            apply_selection(&p3, &g),
            Err(Error::SelectionCap { vertex: 1, .. })
        ));
        let mut wide = Selection::with_cap(3, 2);
        wide.select(1, 0);
        wide.select(1, 2);
        assert_eq!(apply_selection(&p3, &wide).unwrap().m(), 0);
    }

    #[test]
    fn erasing_unicyclic_with_tails() {
        // Triangle 0-1-2 with tails 2-3-4 and 0-5.
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (0, 5)]).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let f = erasing_selection(&g, &[all]).unwrap();
        assert_eq!(apply_selection(&g, &f).unwrap().m(), 0);
    }

    #[test]
    fn erasing_rejects_dense_block() {
        let k4 = Graph::complete(4);
        assert_eq!(
            erasing_picks(&k4, &[0, 1, 2, 3]),
            Err(Error::WrongClass("quasi-unicyclic"))
        );
        // A block of a dense graph that is itself a triangle is fine.
        let f = erasing_selection(&k4, &[vec![0, 1, 2], vec![3]]).unwrap();
        let gf = apply_selection(&k4, &f).unwrap();
        assert!(!gf.has_edge(0, 1) && !gf.has_edge(1, 2) && !gf.has_edge(0, 2));
    }
}
