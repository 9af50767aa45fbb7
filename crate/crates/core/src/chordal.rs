//! Chordality via maximum cardinality search.

use crate::graph::Graph;

/// Maximum cardinality search visit order (ties to the lowest index).
/// Reversed, it is a perfect elimination ordering whenever `g` is chordal.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Whether each vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        let Some(&first) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if later.iter().any(|&u| u != first && !g.has_edge(first, u)) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering, if `g` is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Greedy coloring along the reversed elimination ordering. On a chordal
/// graph every vertex sees a clique of already colored neighbors, so this
/// uses exactly ω(G) = χ(G) colors.
pub fn peo_coloring(g: &Graph, peo: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    for &v in peo.iter().rev() {
        let used: Vec<usize> = g
            .neighbors(v)
            .filter(|&u| colors[u] != usize::MAX)
            .map(|u| colors[u])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colors
}
