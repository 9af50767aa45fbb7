//! Small-graph enumeration and seeded random instances.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::Graph;

/// Vertex pairs `(u, v)`, `u < v`, in the order that edge masks use.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// The graph whose edges are the pairs selected by `mask` in [`pair_list`] order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    Graph::new(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p),
    )
    .expect("pairs are distinct non-loops")
}

/// Every labeled graph on `n ≤ 8` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to 8 vertices");
    let bits = n * n.saturating_sub(1) / 2;
    (0..1u64 << bits).map(move |mask| graph_from_mask(n, mask))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One graph per isomorphism class on `n ≤ 7` vertices: the labeled graph
/// whose edge mask is smallest among its relabelings.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= 7,
        "isomorphism-class enumeration is limited to 7 vertices"
    );
    let pairs = pair_list(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    // Where each pair goes under each permutation.
    let images: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(u, v)| index[p[u]][p[v]]).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let minimal = images.iter().all(|img| {
            let image = img
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u64, |acc, (_, &j)| acc | 1 << j);
            image >= mask
        });
        if minimal {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

/// The tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// Canonical string of a tree: AHU encoding rooted at its center(s),
/// taking the smaller encoding when there are two centers.
pub fn tree_code(t: &Graph) -> String {
    let n = t.n();
    if n <= 1 {
        return "()".repeat(n);
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for u in t.neighbors(v) {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    fn encode(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .filter(|&u| u != parent)
            .map(|u| encode(t, u, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer
        .iter()
        .map(|&c| encode(t, c, usize::MAX))
        .min()
        .unwrap()
}

/// One tree per isomorphism class on `n` vertices (`1 ≤ n ≤ 9`).
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    assert!(
        (1..=9).contains(&n),
        "tree enumeration covers 1..=9 vertices"
    );
    if n <= 2 {
        return vec![Graph::path(n)];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let len = n - 2;
    let total = n.pow(len as u32);
    for code in 0..total {
        let seq: Vec<usize> = (0..len).map(|i| code / n.pow(i as u32) % n).collect();
        let t = tree_from_prufer(&seq);
        if seen.insert(tree_code(&t)) {
            out.push(t);
        }
    }
    out
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let pairs = pair_list(n);
    let keep: Vec<bool> = pairs.iter().map(|_| rng.gen_bool(p)).collect();
    Graph::new(
        n,
        pairs
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(e, _)| e),
    )
    .unwrap()
}

/// Random bipartite graph: each vertex joins side 0 or 1 at random, and each
/// cross pair is an edge with probability `p`.
pub fn random_bipartite(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let pairs: Vec<(usize, usize)> = pair_list(n)
        .into_iter()
        .filter(|&(u, v)| side[u] != side[v])
        .collect();
    let keep: Vec<bool> = pairs.iter().map(|_| rng.gen_bool(p)).collect();
    Graph::new(
        n,
        pairs
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(e, _)| e),
    )
    .unwrap()
}

/// Random split graph: clique `0..a`, independent `a..n`, each cross pair
/// an edge with probability `p`.
pub fn random_split(rng: &mut impl Rng, a: usize, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v.min(a) {
            if v < a || rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
        let trees: Vec<usize> = (1..=9).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(trees, [1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn prufer_decoding() {
        let t = tree_from_prufer(&[3, 3, 3]);
        assert_eq!(t.degree(3), 4);
        assert!(t.is_forest() && t.m() == 4);
        assert_eq!(
            tree_code(&Graph::path(4)),
            tree_code(&tree_from_prufer(&[1, 2]))
        );
    }
}
