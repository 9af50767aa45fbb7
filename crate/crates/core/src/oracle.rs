//! Exact robust parameters χ₁, α₁, ω₁ with checkable certificates.
//!
//! A vertex set can be made independent by a 1-selection exactly when it
//! induces a quasi-unicyclic subgraph: only vertices inside the set can
//! delete its internal edges, and one edge per vertex covers a component iff
//! it has no more edges than vertices. χ₁ is therefore the least number of
//! quasi-unicyclic blocks partitioning `V`, and α₁ the largest quasi-unicyclic
//! induced subgraph. The `*_by_definition` functions compute the same values
//! straight from the definition by enumerating every selection; they are the
//! independent route used to validate the fast ones.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{self, check_limit, full_mask, Limits};
use crate::graph::{Bits, BudgetDsu, Edge, EdgeSubset, Graph};
use crate::selection::{apply_selection, erasing_picks, erasing_selection, Selection};

/// A selection plus a partition that is proper on `G_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustColoringCertificate {
    pub selection: Selection,
    /// Block index is the color.
    pub blocks: Vec<Vec<usize>>,
}

impl RobustColoringCertificate {
    /// Number of non-empty blocks.
    pub fn color_count(&self) -> usize {
        self.blocks.iter().filter(|b| !b.is_empty()).count()
    }

    /// Builds the certificate for `blocks`, deriving the selection that erases
    /// each block's induced edges.
    pub fn from_blocks(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let selection = erasing_selection(g, &blocks)?;
        Ok(RobustColoringCertificate { selection, blocks })
    }
}

/// A selection plus a vertex set independent in `G_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustIndependenceCertificate {
    pub selection: Selection,
    pub members: Vec<usize>,
}

impl RobustIndependenceCertificate {
    pub fn from_members(g: &Graph, members: Vec<usize>) -> Result<Self> {
        let mut selection = Selection::new(g.n());
        for (v, u) in erasing_picks(g, &members)? {
            selection.select(v, u);
        }
        Ok(RobustIndependenceCertificate { selection, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A selection attaining ω₁ and the clique number it leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustCliqueWitness {
    pub selection: Selection,
    pub value: usize,
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    /// A pick that is not an edge at its vertex, or too many picks.
    InvalidSelection {
        vertex: usize,
        other: Option<usize>,
    },
    SizeMismatch {
        graph: usize,
        certificate: usize,
    },
    VertexOutOfRange(usize),
    Uncovered(usize),
    Repeated(usize),
    /// An edge of `G_f` inside one block.
    MonochromaticEdge(Edge),
    /// An edge of `G_f` inside the claimed independent set.
    SurvivingEdge(Edge),
}

impl VerifyFailure {
    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            VerifyFailure::InvalidSelection { .. } => "invalid-selection",
            VerifyFailure::SizeMismatch { .. } => "size-mismatch",
            VerifyFailure::VertexOutOfRange(_) => "vertex-out-of-range",
            VerifyFailure::Uncovered(_) => "uncovered-vertex",
            VerifyFailure::Repeated(_) => "repeated-vertex",
            VerifyFailure::MonochromaticEdge(_) => "monochromatic-edge",
            VerifyFailure::SurvivingEdge(_) => "surviving-edge",
        }
    }
}

/// Displays with 1-based vertices, matching the file formats.
impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        match *self {
            VerifyFailure::InvalidSelection {
                vertex,
                other: Some(u),
            } => {
                write!(f, "{tag} {} {}", vertex + 1, u + 1)
            }
            VerifyFailure::InvalidSelection {
                vertex,
                other: None,
            } => {
                write!(f, "{tag} {}", vertex + 1)
            }
            VerifyFailure::SizeMismatch { graph, certificate } => {
                write!(f, "{tag} graph={graph} certificate={certificate}")
            }
            VerifyFailure::VertexOutOfRange(v)
            | VerifyFailure::Uncovered(v)
            | VerifyFailure::Repeated(v) => write!(f, "{tag} {}", v + 1),
            VerifyFailure::MonochromaticEdge(e) | VerifyFailure::SurvivingEdge(e) => {
                write!(f, "{tag} {} {}", e.u() + 1, e.v() + 1)
            }
        }
    }
}

fn check_selection(g: &Graph, f: &Selection) -> std::result::Result<(), VerifyFailure> {
    if f.n() != g.n() {
        return Err(VerifyFailure::SizeMismatch {
            graph: g.n(),
            certificate: f.n(),
        });
    }
    if f.cap() != 1 {
        return Err(VerifyFailure::InvalidSelection {
            vertex: 0,
            other: None,
        });
    }
    for v in 0..g.n() {
        let picks = f.choices(v);
        if picks.len() > 1 {
            return Err(VerifyFailure::InvalidSelection {
                vertex: v,
                other: None,
            });
        }
        if let Some(&u) = picks.first() {
            if !g.has_edge(v, u) {
                return Err(VerifyFailure::InvalidSelection {
                    vertex: v,
                    other: Some(u),
                });
            }
        }
    }
    Ok(())
}

/// Accepts iff the selection is a valid 1-selection, the blocks partition
/// `V`, and no edge of `G_f` joins two vertices of one block.
pub fn verify_robust_coloring(
    g: &Graph,
    cert: &RobustColoringCertificate,
) -> std::result::Result<(), VerifyFailure> {
    check_selection(g, &cert.selection)?;
    let mut color = vec![usize::MAX; g.n()];
    for (c, block) in cert.blocks.iter().enumerate() {
        for &v in block {
            if v >= g.n() {
                return Err(VerifyFailure::VertexOutOfRange(v));
            }
            if color[v] != usize::MAX {
                return Err(VerifyFailure::Repeated(v));
            }
            color[v] = c;
        }
    }
    if let Some(v) = color.iter().position(|&c| c == usize::MAX) {
        return Err(VerifyFailure::Uncovered(v));
    }
    let removed = cert.selection.image();
    for &e in g.edges() {
        if color[e.u()] == color[e.v()] && !removed.contains(&e) {
            return Err(VerifyFailure::MonochromaticEdge(e));
        }
    }
    Ok(())
}

/// Accepts iff the selection is valid and the members span no edge of `G_f`.
pub fn verify_robust_independent(
    g: &Graph,
    cert: &RobustIndependenceCertificate,
) -> std::result::Result<(), VerifyFailure> {
    check_selection(g, &cert.selection)?;
    let mut inside = vec![false; g.n()];
    for &v in &cert.members {
        if v >= g.n() {
            return Err(VerifyFailure::VertexOutOfRange(v));
        }
        if inside[v] {
            return Err(VerifyFailure::Repeated(v));
        }
        inside[v] = true;
    }
    let removed = cert.selection.image();
    for &e in g.edges() {
        if inside[e.u()] && inside[e.v()] && !removed.contains(&e) {
            return Err(VerifyFailure::SurvivingEdge(e));
        }
    }
    Ok(())
}

/// Quasi-unicyclic flag for every vertex subset of a graph with `n <= 64`
/// (table size `2^n`). Built incrementally: adding the top vertex `h` to a
/// good set only changes the component of `h`.
pub(crate) fn quasi_unicyclic_table(adj: &[u64]) -> Vec<bool> {
    let n = adj.len();
    let size = 1usize << n;
    let mut qu = vec![true; size];
    for s in 1..size {
        let h = 63 - (s as u64).leading_zeros() as usize;
        let prev = s & !(1 << h);
        if !qu[prev] {
            qu[s] = false;
            continue;
        }
        qu[s] = component_fits(adj, s as u64, h);
    }
    qu
}

/// Whether the component of `v` in `G[set]` has at most as many edges as
/// vertices.
#[inline]
fn component_fits(adj: &[u64], set: u64, v: usize) -> bool {
    let mut comp = 1u64 << v;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for u in Bits(frontier) {
            next |= adj[u] & set;
        }
        frontier = next & !comp;
        comp |= next;
    }
    let twice_edges: u32 = Bits(comp).map(|u| (adj[u] & comp).count_ones()).sum();
    twice_edges <= 2 * comp.count_ones()
}

/// χ₁ with a certificate, default limits.
pub fn chi1_exact(g: &Graph) -> Result<(usize, RobustColoringCertificate)> {
    chi1_exact_with(g, &Limits::default())
}

/// Minimum partition of `V` into quasi-unicyclic blocks.
///
/// Top-down DP over vertex subsets: the block holding the lowest uncovered
/// vertex is enumerated by growing it upward, pruning as soon as it stops
/// being quasi-unicyclic (the property is hereditary). Among optimal blocks
/// the numerically smallest mask wins.
pub fn chi1_exact_with(g: &Graph, limits: &Limits) -> Result<(usize, RobustColoringCertificate)> {
    check_limit("chi1 oracle", g.n(), limits.chi1)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, RobustColoringCertificate::from_blocks(g, Vec::new())?));
    }
    if g.is_quasi_unicyclic() {
        let cert = RobustColoringCertificate::from_blocks(g, vec![(0..n).collect()])?;
        return Ok((1, cert));
    }
    let adj = g.masks();
    let qu = quasi_unicyclic_table(&adj);
    let mut dp = PartitionDp {
        qu: &qu,
        value: vec![u8::MAX; 1 << n],
        block: vec![0; 1 << n],
        n,
    };
    dp.value[0] = 0;
    let count = dp.solve(full_mask(n)) as usize;

    let mut blocks = Vec::new();
    let mut rest = full_mask(n);
    while rest != 0 {
        let b = dp.block[rest as usize];
        blocks.push(Bits(b).collect());
        rest &= !b;
    }
    let cert = RobustColoringCertificate::from_blocks(g, blocks)?;
    debug_assert!(verify_robust_coloring(g, &cert).is_ok());
    Ok((count, cert))
}

struct PartitionDp<'a> {
    qu: &'a [bool],
    value: Vec<u8>,
    block: Vec<u64>,
    n: usize,
}

impl PartitionDp<'_> {
    fn solve(&mut self, set: u64) -> u8 {
        if self.value[set as usize] != u8::MAX {
            return self.value[set as usize];
        }
        if self.qu[set as usize] {
            self.value[set as usize] = 1;
            self.block[set as usize] = set;
            return 1;
        }
        let v = set.trailing_zeros() as usize;
        let mut blocks = Vec::new();
        grow_blocks(self.qu, 1 << v, set & !((2u64 << v) - 1), &mut blocks);
        let mut best = (u8::MAX, u64::MAX);
        for b in blocks {
            let val = 1 + self.solve(set & !b);
            if (val, b) < best {
                best = (val, b);
            }
        }
        debug_assert!(self.n <= 64);
        self.value[set as usize] = best.0;
        self.block[set as usize] = best.1;
        best.0
    }
}

/// All quasi-unicyclic supersets of `cur` using extra vertices from `pool`.
fn grow_blocks(qu: &[bool], cur: u64, pool: u64, out: &mut Vec<u64>) {
    out.push(cur);
    let mut pool = pool;
    while pool != 0 {
        let w = pool.trailing_zeros() as usize;
        pool &= pool - 1;
        let next = cur | 1 << w;
        if qu[next as usize] {
            grow_blocks(qu, next, pool, out);
        }
    }
}

/// α₁ with a certificate, default limits.
pub fn alpha1_exact(g: &Graph) -> Result<(usize, RobustIndependenceCertificate)> {
    alpha1_exact_with(g, &Limits::default())
}

/// Largest vertex set inducing a quasi-unicyclic subgraph, by branch and
/// bound over include/exclude decisions in vertex order.
pub fn alpha1_exact_with(
    g: &Graph,
    limits: &Limits,
) -> Result<(usize, RobustIndependenceCertificate)> {
    check_limit("alpha1 oracle", g.n(), limits.alpha1)?;
    let adj = g.masks();
    let mut best = 0u64;
    alpha1_search(&adj, 0, 0, &mut best);
    let members: Vec<usize> = Bits(best).collect();
    let cert = RobustIndependenceCertificate::from_members(g, members)?;
    debug_assert!(verify_robust_independent(g, &cert).is_ok());
    Ok((cert.len(), cert))
}

fn alpha1_search(adj: &[u64], next: usize, cur: u64, best: &mut u64) {
    let n = adj.len();
    if cur.count_ones() > best.count_ones() {
        *best = cur;
    }
    if next == n || cur.count_ones() as usize + (n - next) <= best.count_ones() as usize {
        return;
    }
    let with = cur | 1 << next;
    if component_fits(adj, with, next) {
        alpha1_search(adj, next + 1, with, best);
    }
    alpha1_search(adj, next + 1, cur, best);
}

/// ω₁ with a witness, default limits.
pub fn omega1_exact(g: &Graph) -> Result<(usize, RobustCliqueWitness)> {
    omega1_exact_with(g, &Limits::default())
}

/// Least clique number over removable edge sets.
///
/// For increasing targets `t`, starting at `⌈ω/3⌉` (a selection can only
/// delete a quasi-unicyclic, hence 3-colorable, part of a maximum clique),
/// search for a removable set leaving no clique of `t + 1` vertices: find
/// such a clique and branch on which of its edges to delete, forbidding the
/// edges already tried at the same level.
pub fn omega1_exact_with(g: &Graph, limits: &Limits) -> Result<(usize, RobustCliqueWitness)> {
    check_limit("omega1 oracle", g.n(), limits.omega1)?;
    let n = g.n();
    if n == 0 {
        return Ok((
            0,
            RobustCliqueWitness {
                selection: Selection::new(0),
                value: 0,
            },
        ));
    }
    let adj = g.masks();
    let (omega, _) = exact::clique_masks(&adj, full_mask(n));
    let omega = omega.count_ones() as usize;
    let mut t = omega.div_ceil(3).max(1);
    loop {
        let mut search = OmegaSearch {
            adj: adj.clone(),
            forbidden: vec![0; n],
            removed: Vec::new(),
            target: t as u32,
        };
        if search.run(&BudgetDsu::new(n)) {
            let d = Graph::new(n, search.removed.iter().map(|e| (e.u(), e.v()))).unwrap();
            let all: Vec<usize> = (0..n).collect();
            let mut selection = Selection::new(n);
            for (v, u) in erasing_picks(&d, &all)? {
                selection.select(v, u);
            }
            let gf = apply_selection(g, &selection)?;
            let value = exact::clique_number_with(
                &gf,
                &Limits {
                    clique: 64,
                    ..*limits
                },
            )?
            .0;
            debug_assert_eq!(value, t);
            return Ok((value, RobustCliqueWitness { selection, value }));
        }
        t += 1;
    }
}

struct OmegaSearch {
    adj: Vec<u64>,
    forbidden: Vec<u64>,
    removed: Vec<Edge>,
    target: u32,
}

impl OmegaSearch {
    fn run(&mut self, dsu: &BudgetDsu) -> bool {
        let n = self.adj.len();
        let Some(clique) = exact::clique_at_least(&self.adj, full_mask(n), self.target + 1) else {
            return true;
        };
        let verts: Vec<usize> = Bits(clique).take(self.target as usize + 1).collect();
        let mut tried = Vec::new();
        let mut found = false;
        'outer: for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if self.forbidden[u] >> v & 1 == 1 {
                    continue;
                }
                let mut next = dsu.clone();
                if !next.try_add(u, v) {
                    continue;
                }
                self.adj[u] &= !(1 << v);
                self.adj[v] &= !(1 << u);
                self.removed.push(Edge::new(u, v));
                if self.run(&next) {
                    found = true;
                    break 'outer;
                }
                self.removed.pop();
                self.adj[u] |= 1 << v;
                self.adj[v] |= 1 << u;
                self.forbidden[u] |= 1 << v;
                self.forbidden[v] |= 1 << u;
                tried.push((u, v));
            }
        }
        for (u, v) in tried {
            self.forbidden[u] &= !(1 << v);
            self.forbidden[v] &= !(1 << u);
        }
        found
    }
}

/// Every removal image `E(G) \ E(G_f)` over all 1-selections, as bitmasks
/// over `g.edges()` positions. Direct enumeration of selection functions.
pub fn removal_image_masks(g: &Graph) -> Result<BTreeSet<u64>> {
    check_limit("selection enumeration", g.n(), 5)?;
    if g.m() > 10 {
        return Err(Error::params(format!(
            "selection enumeration needs at most 10 edges, got {}",
            g.m()
        )));
    }
    let incident: Vec<Vec<u64>> = (0..g.n())
        .map(|v| {
            g.incident_edges(v)
                .map(|e| 1u64 << g.edge_index(e).unwrap())
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    enumerate_images(&incident, 0, 0, &mut out);
    Ok(out)
}

fn enumerate_images(incident: &[Vec<u64>], v: usize, acc: u64, out: &mut BTreeSet<u64>) {
    if v == incident.len() {
        out.insert(acc);
        return;
    }
    enumerate_images(incident, v + 1, acc, out);
    for &bit in &incident[v] {
        enumerate_images(incident, v + 1, acc | bit, out);
    }
}

/// The set `{E(G) \ E(G_f) : f a 1-selection}` (`n <= 5`, `m <= 10`).
pub fn enumerate_removed_graphs(g: &Graph) -> Result<BTreeSet<EdgeSubset>> {
    Ok(removal_image_masks(g)?
        .into_iter()
        .map(|m| EdgeSubset::from_index_mask(g, m))
        .collect())
}

fn over_images<T>(g: &Graph, mut eval: impl FnMut(&Graph) -> T) -> Result<Vec<T>> {
    let images = removal_image_masks(g)?;
    Ok(images
        .into_iter()
        .map(|m| {
            let d = EdgeSubset::from_index_mask(g, m);
            eval(&g.without_edges(d.edges()))
        })
        .collect())
}

/// min χ(G_f) over all selections, by enumeration.
pub fn chi1_by_definition(g: &Graph) -> Result<usize> {
    let vals = over_images(g, |h| exact::chromatic_dp(h).0)?;
    Ok(vals.into_iter().min().unwrap_or(0))
}

/// max α(G_f) over all selections, by enumeration.
pub fn alpha1_by_definition(g: &Graph) -> Result<usize> {
    let vals = over_images(g, |h| exact::independence_number(h).unwrap().0)?;
    Ok(vals.into_iter().max().unwrap_or(0))
}

/// min ω(G_f) over all selections, by enumeration.
pub fn omega1_by_definition(g: &Graph) -> Result<usize> {
    let vals = over_images(g, |h| exact::clique_number(h).unwrap().0)?;
    Ok(vals.into_iter().min().unwrap_or(0))
}
