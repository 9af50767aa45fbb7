//! Deterministic generators for the graph families under study.
//!
//! Each generator returns the graph together with a [`FamilyDescriptor`]
//! recording its parameters and whatever structure the constructions need
//! (part membership, threshold partition, set labels, intervals).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chordal;
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::Graph;

/// Largest Kneser graph the generator will build.
pub const KNESER_VERTEX_LIMIT: usize = 4096;

/// One step of a threshold graph's creation sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Isolated,
    Dominating,
}

impl Step {
    /// Reads `i` as isolated and `d`/`D` as dominating.
    pub fn parse_sequence(s: &str) -> Result<Vec<Step>> {
        s.chars()
            .map(|c| match c {
                'i' | 'I' => Ok(Step::Isolated),
                'd' | 'D' => Ok(Step::Dominating),
                other => Err(Error::params(format!("bad creation step {other:?}"))),
            })
            .collect()
    }
}

/// A family member by its defining parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Multipartite { sizes: Vec<usize> },
    Threshold { creation: Vec<Step> },
    SplitTight { t: usize },
    Kneser { n: usize, k: usize },
    PathPower { n: usize, p: usize },
    RTower { k: usize },
    RandomChordal { n: usize, density: f64, seed: u64 },
}

impl Family {
    pub fn build(&self) -> Result<(Graph, FamilyDescriptor)> {
        match self {
            Family::Multipartite { sizes } => gen_complete_multipartite(sizes),
            Family::Threshold { creation } => {
                let (g, tp) = gen_threshold(creation)?;
                let desc = FamilyDescriptor {
                    family: self.clone(),
                    annotation: Annotation::Threshold(tp),
                };
                Ok((g, desc))
            }
            Family::SplitTight { t } => gen_split_tight(*t),
            Family::Kneser { n, k } => gen_kneser(*n, *k),
            Family::PathPower { n, p } => gen_path_power(*n, *p),
            Family::RTower { k } => gen_r_tower(*k),
            Family::RandomChordal { n, density, seed } => gen_random_chordal(*n, *density, *seed),
        }
    }
}

/// Compact form used in report rows, e.g. `multipartite:1,2,3`.
impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Multipartite { sizes } => {
                let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", s.join(","))
            }
            Family::Threshold { creation } => {
                let s: String = creation
                    .iter()
                    .map(|s| match s {
                        Step::Isolated => 'i',
                        Step::Dominating => 'd',
                    })
                    .collect();
                write!(f, "threshold:{s}")
            }
            Family::SplitTight { t } => write!(f, "splittight:{t}"),
            Family::Kneser { n, k } => write!(f, "kneser:{n},{k}"),
            Family::PathPower { n, p } => write!(f, "pathpower:{n},{p}"),
            Family::RTower { k } => write!(f, "rtower:{k}"),
            Family::RandomChordal { n, density, seed } => {
                write!(f, "chordal:{n},{density},{seed}")
            }
        }
    }
}

/// Structural data attached to a generated graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Annotation {
    None,
    /// Part index of each vertex.
    Parts(Vec<usize>),
    Threshold(ThresholdPartition),
    Split {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    /// The k-subset of `{1..n}` labeling each vertex.
    Sets(Vec<Vec<usize>>),
    /// Closed integer intervals whose intersection graph is the graph.
    Intervals(Vec<(u32, u32)>),
    EliminationOrder(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub annotation: Annotation,
}

impl FamilyDescriptor {
    /// Per-vertex labels for the annotation sidecar.
    pub fn labels(&self) -> Vec<(usize, String)> {
        match &self.annotation {
            Annotation::None => Vec::new(),
            Annotation::Parts(parts) => parts
                .iter()
                .enumerate()
                .map(|(v, p)| (v, format!("part{}", p + 1)))
                .collect(),
            Annotation::Threshold(tp) => {
                let mut out: Vec<(usize, String)> = tp
                    .clique_order
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v, format!("A{}", i + 1)))
                    .chain(
                        tp.independent_order
                            .iter()
                            .enumerate()
                            .map(|(i, &v)| (v, format!("B{}", i + 1))),
                    )
                    .collect();
                out.sort();
                out
            }
            Annotation::Split {
                clique,
                independent,
            } => {
                let mut out: Vec<(usize, String)> = clique
                    .iter()
                    .map(|&v| (v, "A".to_string()))
                    .chain(independent.iter().map(|&v| (v, "B".to_string())))
                    .collect();
                out.sort();
                out
            }
            Annotation::Sets(sets) => sets
                .iter()
                .enumerate()
                .map(|(v, s)| {
                    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
                    (v, format!("{{{}}}", parts.join(",")))
                })
                .collect(),
            Annotation::Intervals(iv) => iv
                .iter()
                .enumerate()
                .map(|(v, (l, r))| (v, format!("[{l},{r}]")))
                .collect(),
            Annotation::EliminationOrder(order) => order
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, format!("peo{}", i + 1)))
                .collect(),
        }
    }
}

/// `K_{n_1,...,n_t}` with parts laid out consecutively.
pub fn gen_complete_multipartite(sizes: &[usize]) -> Result<(Graph, FamilyDescriptor)> {
    if sizes.is_empty() {
        return Err(Error::params("multipartite sizes are empty"));
    }
    if sizes.contains(&0) {
        return Err(Error::params("multipartite parts must be nonempty"));
    }
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::params("multipartite sizes must be ascending"));
    }
    let parts: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let g = Graph::from_fn(parts.len(), |u, v| parts[u] != parts[v]);
    let desc = FamilyDescriptor {
        family: Family::Multipartite {
            sizes: sizes.to_vec(),
        },
        annotation: Annotation::Parts(parts),
    };
    Ok((g, desc))
}

/// A threshold partition `(A, B)`: `A` a maximum clique with nested closed
/// neighborhoods, `B` independent with nested open neighborhoods, and the
/// last vertex of `A` without neighbors in `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdPartition {
    /// `a_1, ..., a_q`, with `N[a_1] ⊇ ... ⊇ N[a_q]`.
    pub clique_order: Vec<usize>,
    /// `b_1, ..., b_s`, with `N(b_1) ⊇ ... ⊇ N(b_s)`.
    pub independent_order: Vec<usize>,
}

impl ThresholdPartition {
    pub fn q(&self) -> usize {
        self.clique_order.len()
    }

    /// Re-checks all partition conditions against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: &str| Err(Error::params(format!("invalid threshold partition: {msg}")));
        let a = &self.clique_order;
        let b = &self.independent_order;
        let mut seen = vec![false; g.n()];
        for &v in a.iter().chain(b) {
            if v >= g.n() || seen[v] {
                return bad("not a partition of the vertex set");
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            return bad("not a partition of the vertex set");
        }
        if a.is_empty() && g.n() > 0 {
            return bad("empty clique side");
        }
        if !g.is_clique(a) {
            return bad("A is not a clique");
        }
        if !g.is_independent(b) {
            return bad("B is not independent");
        }
        let closed = |v: usize| {
            let mut s: Vec<usize> = g.neighbors(v).collect();
            s.push(v);
            s
        };
        for w in a.windows(2) {
            let outer = closed(w[0]);
            if closed(w[1]).iter().any(|x| !outer.contains(x)) {
                return bad("closed neighborhoods along A are not nested");
            }
        }
        for w in b.windows(2) {
            if g.neighbors(w[1]).any(|x| !g.has_edge(w[0], x)) {
                return bad("neighborhoods along B are not nested");
            }
        }
        if let Some(&last) = a.last() {
            if b.iter().any(|&x| g.has_edge(last, x)) {
                return bad("a_q has a neighbor in B");
            }
        }
        Ok(())
    }
}

/// Graph grown left to right; each step adds an isolated vertex or one
/// adjacent to everything before it.
pub fn gen_threshold(creation: &[Step]) -> Result<(Graph, ThresholdPartition)> {
    if creation.is_empty() {
        return Err(Error::params("empty creation sequence"));
    }
    let g = Graph::from_fn(creation.len(), |u, v| {
        creation[u.max(v)] == Step::Dominating
    });
    let tp = threshold_partition(&g)?;
    Ok((g, tp))
}

/// Recognizes a threshold graph by repeatedly peeling a dominating vertex
/// (preferred) or an isolated one, lowest index first. Peeled dominating
/// vertices form `A` in peel order; peeled isolated vertices form `B` in
/// reverse peel order.
pub fn threshold_partition(g: &Graph) -> Result<ThresholdPartition> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut left = n;
    let mut clique_order = Vec::new();
    let mut isolated = Vec::new();
    while left > 0 {
        let dominating = (0..n).find(|&v| alive[v] && deg[v] + 1 == left);
        let v = match dominating {
            Some(v) => {
                clique_order.push(v);
                v
            }
            None => match (0..n).find(|&v| alive[v] && deg[v] == 0) {
                Some(v) => {
                    isolated.push(v);
                    v
                }
                None => return Err(Error::WrongClass("a threshold graph")),
            },
        };
        alive[v] = false;
        left -= 1;
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    isolated.reverse();
    Ok(ThresholdPartition {
        clique_order,
        independent_order: isolated,
    })
}

/// Both answers to "does `G` have a single maximum clique".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaUniqueness {
    /// From the partition: unique iff `a_{q-1} b_1` is not an edge.
    pub by_criterion: bool,
    /// From counting maximum cliques directly.
    pub by_enumeration: bool,
}

impl OmegaUniqueness {
    pub fn agree(&self) -> bool {
        self.by_criterion == self.by_enumeration
    }
}

/// ω-uniqueness of a threshold graph, by the partition criterion and by
/// direct enumeration. With `B` empty the clique `A` is the only one; with
/// `q = 1` the graph is edgeless and every vertex is a maximum clique.
pub fn is_omega_unique_threshold(g: &Graph, tp: &ThresholdPartition) -> Result<OmegaUniqueness> {
    tp.validate(g)?;
    let q = tp.q();
    let by_criterion = match tp.independent_order.first() {
        None => true,
        Some(&b1) if q >= 2 => !g.has_edge(tp.clique_order[q - 2], b1),
        Some(_) => false,
    };
    let by_enumeration = exact::maximum_clique_count(g)? == 1;
    Ok(OmegaUniqueness {
        by_criterion,
        by_enumeration,
    })
}

/// Clique `A = {a_0..a_{t-1}}`, independent `B = {b_0..b_{t-1}}`, and
/// `a_i ~ b_j` iff `i != j`: `K_{t,t}` minus a perfect matching between them.
pub fn gen_split_tight(t: usize) -> Result<(Graph, FamilyDescriptor)> {
    if t < 3 {
        return Err(Error::params("split construction needs t >= 3"));
    }
    let g = Graph::from_fn(2 * t, |u, v| {
        if v < t {
            true
        } else if u < t {
            v - t != u
        } else {
            false
        }
    });
    let desc = FamilyDescriptor {
        family: Family::SplitTight { t },
        annotation: Annotation::Split {
            clique: (0..t).collect(),
            independent: (t..2 * t).collect(),
        },
    };
    Ok((g, desc))
}

/// All k-subsets of `{1..n}` in colexicographic order.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Colex successor: bump the lowest position that can move up.
        let mut i = 0;
        while i < k
            && (if i + 1 < k {
                cur[i] + 1 == cur[i + 1]
            } else {
                cur[i] == n
            })
        {
            i += 1;
        }
        if i == k {
            break;
        }
        cur[i] += 1;
        for (j, slot) in cur.iter_mut().enumerate().take(i) {
            *slot = j + 1;
        }
    }
    out
}

/// Position of a k-subset of `{1, 2, ...}` (ascending) in colex order.
pub fn colex_rank(set: &[usize]) -> usize {
    set.iter()
        .enumerate()
        .map(|(i, &a)| binomial(a - 1, i + 1))
        .sum()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `KG(n, k)`: k-subsets of `{1..n}`, adjacent when disjoint. Vertex `i` is
/// the colex rank of its set, so the first `C(m, k)` vertices are exactly the
/// subsets of `{1..m}`.
pub fn gen_kneser(n: usize, k: usize) -> Result<(Graph, FamilyDescriptor)> {
    if k < 2 || n < 2 * k {
        return Err(Error::params(format!(
            "Kneser graph needs k >= 2 and n >= 2k, got n={n}, k={k}"
        )));
    }
    if n > 64 || binomial(n, k) > KNESER_VERTEX_LIMIT {
        return Err(Error::params(format!("KG({n},{k}) is too large")));
    }
    let sets = k_subsets_colex(n, k);
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << (x - 1)))
        .collect();
    let g = Graph::from_fn(sets.len(), |u, v| masks[u] & masks[v] == 0);
    let desc = FamilyDescriptor {
        family: Family::Kneser { n, k },
        annotation: Annotation::Sets(sets),
    };
    Ok((g, desc))
}

/// `P_n^p`: vertices `0..n`, adjacent when their indices differ by at most `p`.
pub fn gen_path_power(n: usize, p: usize) -> Result<(Graph, FamilyDescriptor)> {
    if n == 0 || p == 0 {
        return Err(Error::params("path power needs n >= 1 and p >= 1"));
    }
    let g = Graph::from_fn(n, |u, v| v - u <= p);
    let desc = FamilyDescriptor {
        family: Family::PathPower { n, p },
        annotation: Annotation::Intervals((0..n as u32).map(|i| (i, i + p as u32)).collect()),
    };
    Ok((g, desc))
}

/// The tower `G_k` with `ω = χ = k`: `G_2 = K_2`, `G_3 = K_4 - e`, and
/// `G_k` is three disjoint copies of `G_{k-2}` joined to two universal
/// vertices. Copies come first in the vertex order, universal vertices last.
pub fn gen_r_tower(k: usize) -> Result<(Graph, FamilyDescriptor)> {
    if k < 2 {
        return Err(Error::params("tower needs k >= 2"));
    }
    if k > 12 {
        return Err(Error::params("tower above k = 12 is too large"));
    }
    let (edges, intervals) = tower(k);
    let g = Graph::new(intervals.len(), edges)?;
    let desc = FamilyDescriptor {
        family: Family::RTower { k },
        annotation: Annotation::Intervals(intervals),
    };
    Ok((g, desc))
}

type TowerParts = (Vec<(usize, usize)>, Vec<(u32, u32)>);

fn tower(k: usize) -> TowerParts {
    match k {
        2 => (vec![(0, 1)], vec![(0, 1), (0, 1)]),
        // K_4 minus the edge 01.
        3 => (
            vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            vec![(0, 1), (2, 3), (0, 3), (0, 3)],
        ),
        _ => {
            let (sub_edges, sub_iv) = tower(k - 2);
            let size = sub_iv.len();
            let span = sub_iv.iter().map(|iv| iv.1).max().unwrap() + 1;
            let mut edges = Vec::new();
            let mut iv = Vec::new();
            for c in 0..3 {
                let shift = c * size;
                let offset = c as u32 * (span + 1);
                edges.extend(sub_edges.iter().map(|&(u, v)| (u + shift, v + shift)));
                iv.extend(sub_iv.iter().map(|&(l, r)| (l + offset, r + offset)));
            }
            let total = 3 * size;
            let right = iv.iter().map(|x| x.1).max().unwrap();
            for x in [total, total + 1] {
                edges.extend((0..total).map(|v| (v, x)));
                iv.push((0, right));
            }
            edges.push((total, total + 1));
            (edges, iv)
        }
    }
}

/// Whether the closed intervals have exactly `g` as intersection graph.
pub fn intervals_realize(g: &Graph, intervals: &[(u32, u32)]) -> bool {
    intervals.len() == g.n()
        && (0..g.n()).all(|u| {
            (u + 1..g.n()).all(|v| {
                let (a, b) = (intervals[u], intervals[v]);
                let meet = a.0 <= b.1 && b.0 <= a.1;
                meet == g.has_edge(u, v)
            })
        })
}

/// Random chordal graph: vertices arrive in order, and each new vertex is
/// joined to a random subset of a maximal clique of the graph so far
/// (grown greedily from a random earlier vertex), keeping each clique vertex
/// with probability `density`. Every new vertex is simplicial at arrival,
/// so the reversed arrival order is a perfect elimination ordering.
pub fn gen_random_chordal(n: usize, density: f64, seed: u64) -> Result<(Graph, FamilyDescriptor)> {
    if n == 0 || !(0.0..=1.0).contains(&density) {
        return Err(Error::params(
            "chordal generator needs n >= 1 and density in [0, 1]",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![false; n]; n];
    for v in 1..n {
        let start = rng.gen_range(0..v);
        let mut clique = vec![start];
        let mut others: Vec<usize> = (0..v).filter(|&u| u != start).collect();
        // Fisher–Yates so the clique growth order is random.
        for i in (1..others.len()).rev() {
            let j = rng.gen_range(0..=i);
            others.swap(i, j);
        }
        for u in others {
            if clique.iter().all(|&c| adj[c][u]) {
                clique.push(u);
            }
        }
        clique.sort_unstable();
        for c in clique {
            if density >= 1.0 || rng.gen_bool(density) {
                adj[c][v] = true;
                adj[v][c] = true;
            }
        }
    }
    let g = Graph::from_fn(n, |u, v| adj[u][v]);
    let peo: Vec<usize> = (0..n).rev().collect();
    debug_assert!(chordal::is_perfect_elimination_ordering(&g, &peo));
    let desc = FamilyDescriptor {
        family: Family::RandomChordal { n, density, seed },
        annotation: Annotation::EliminationOrder(peo),
    };
    Ok((g, desc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{chromatic_number, clique_number};

    fn k4_minus_edge() -> Graph {
        Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(
            gen_complete_multipartite(&[1, 1, 1, 1]).unwrap().0,
            Graph::complete(4)
        );
        let (c4, _) = gen_complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(c4.m(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let (g, _) = gen_complete_multipartite(&[1, 1, 2]).unwrap();
        assert_eq!(g.m(), 5);
        assert!(!g.has_edge(2, 3));
        assert!(gen_complete_multipartite(&[2, 1]).is_err());
        assert!(gen_complete_multipartite(&[]).is_err());
        assert!(gen_complete_multipartite(&[0, 1]).is_err());
    }

    #[test]
    fn threshold_examples() {
        let (k6, tp) = gen_threshold(&[Step::Dominating; 6]).unwrap();
        assert_eq!(k6, Graph::complete(6));
        assert_eq!(tp.q(), 6);
        assert!(tp.independent_order.is_empty());

        let (star, tp) = gen_threshold(&Step::parse_sequence("iid").unwrap()).unwrap();
        assert_eq!(star.m(), 2);
        assert_eq!(tp.q(), 2);
        tp.validate(&star).unwrap();

        // K6 plus b adjacent to five of its vertices: a6 first, then b, then
        // five dominating vertices.
        let (g, tp) = gen_threshold(&Step::parse_sequence("diddddd").unwrap()).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(tp.q(), 6);
        let b1 = tp.independent_order[0];
        assert!(g.has_edge(tp.clique_order[4], b1));
        assert!(!g.has_edge(tp.clique_order[5], b1));
        assert!(gen_threshold(&[]).is_err());
    }

    #[test]
    fn threshold_recognition() {
        let k6 = Graph::complete(6);
        let tp = threshold_partition(&k6).unwrap();
        assert_eq!(tp.q(), 6);

        let star = Graph::new(6, (1..6).map(|i| (0, i))).unwrap();
        let tp = threshold_partition(&star).unwrap();
        tp.validate(&star).unwrap();
        assert_eq!(tp.clique_order[0], 0);
        assert_eq!(tp.q(), 2);
        assert_eq!(tp.independent_order.len(), 4);

        assert_eq!(
            threshold_partition(&Graph::cycle(4)),
            Err(Error::WrongClass("a threshold graph"))
        );
    }

    #[test]
    fn omega_uniqueness() {
        let (k6, tp) = gen_threshold(&[Step::Dominating; 6]).unwrap();
        let u = is_omega_unique_threshold(&k6, &tp).unwrap();
        assert!(u.by_criterion && u.by_enumeration);

        let (g, tp) = gen_threshold(&Step::parse_sequence("diddddd").unwrap()).unwrap();
        let u = is_omega_unique_threshold(&g, &tp).unwrap();
        assert!(!u.by_criterion && !u.by_enumeration);

        // K_{1,2}: both edges are maximum cliques, and the criterion agrees.
        let (p3, tp) = gen_threshold(&Step::parse_sequence("iid").unwrap()).unwrap();
        let u = is_omega_unique_threshold(&p3, &tp).unwrap();
        assert_eq!(
            u,
            OmegaUniqueness {
                by_criterion: false,
                by_enumeration: false
            }
        );
    }

    #[test]
    fn split_tight_shape() {
        let (g, _) = gen_split_tight(3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        let (g, _) = gen_split_tight(4).unwrap();
        assert_eq!(g.m(), 6 + 12);
        assert!(gen_split_tight(2).is_err());
    }

    #[test]
    fn kneser_examples() {
        let (p, desc) = gen_kneser(5, 2).unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(clique_number(&p).unwrap().0, 2);
        assert_eq!(exact::independence_number(&p).unwrap().0, 4);
        let Annotation::Sets(sets) = desc.annotation else {
            panic!()
        };
        assert_eq!(sets[0], vec![1, 2]);
        assert_eq!(sets[1], vec![1, 3]);
        assert_eq!(sets[2], vec![2, 3]);

        let (m, _) = gen_kneser(4, 2).unwrap();
        assert_eq!(m.m(), 3);
        assert!((0..6).all(|v| m.degree(v) == 1));

        let (g, _) = gen_kneser(6, 2).unwrap();
        assert_eq!((g.n(), g.m()), (15, 45));
        assert!(gen_kneser(5, 3).is_err());
        assert!(gen_kneser(4, 1).is_err());
    }

    #[test]
    fn colex_order() {
        let sets = k_subsets_colex(5, 3);
        assert_eq!(sets.len(), 10);
        assert_eq!(
            sets[..4],
            [vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
        for (i, s) in k_subsets_colex(7, 3).iter().enumerate() {
            assert_eq!(colex_rank(s), i);
        }
        assert_eq!(binomial(15, 2), 105);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn path_power_examples() {
        assert_eq!(gen_path_power(5, 1).unwrap().0, Graph::path(5));
        assert_eq!(gen_path_power(5, 4).unwrap().0, Graph::complete(5));
        let (g, _) = gen_path_power(9, 2).unwrap();
        assert_eq!(clique_number(&g).unwrap().0, 3);
        assert_eq!(chromatic_number(&g).unwrap().0, 3);
    }

    #[test]
    fn tower_examples() {
        assert_eq!(gen_r_tower(2).unwrap().0, Graph::complete(2));
        assert_eq!(gen_r_tower(3).unwrap().0, k4_minus_edge());
        for k in 2..=6 {
            let (g, desc) = gen_r_tower(k).unwrap();
            let Annotation::Intervals(iv) = &desc.annotation else {
                panic!()
            };
            assert!(intervals_realize(&g, iv), "k={k}");
            if g.n() <= 24 {
                assert_eq!(clique_number(&g).unwrap().0, k);
                assert_eq!(chromatic_number(&g).unwrap().0, k);
            }
        }
        assert_eq!(gen_r_tower(4).unwrap().0.n(), 8);
        assert_eq!(gen_r_tower(5).unwrap().0.n(), 14);
        assert!(gen_r_tower(1).is_err());
    }

    #[test]
    fn random_chordal_extremes() {
        assert_eq!(gen_random_chordal(7, 1.0, 3).unwrap().0, Graph::complete(7));
        assert_eq!(gen_random_chordal(7, 0.0, 3).unwrap().0.m(), 0);
        for seed in 0..30 {
            let (g, _) = gen_random_chordal(25, 0.5, seed).unwrap();
            assert!(chordal::is_chordal(&g));
            assert_eq!(gen_random_chordal(25, 0.5, seed).unwrap().0, g);
        }
    }
}
