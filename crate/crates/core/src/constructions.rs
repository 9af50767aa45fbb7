//! Explicit robust colorings and robust independent sets.
//!
//! Every function here returns a certificate that
//! [`verify_robust_coloring`](crate::oracle::verify_robust_coloring) or
//! [`verify_robust_independent`](crate::oracle::verify_robust_independent)
//! accepts; the block counts match the known upper bounds for each family.

use crate::chordal;
use crate::error::{Error, Result};
use crate::families::{
    binomial, colex_rank, gen_complete_multipartite, gen_kneser, gen_path_power,
    is_omega_unique_threshold, Annotation, ThresholdPartition,
};
use crate::graph::Graph;
use crate::oracle::{RobustColoringCertificate, RobustIndependenceCertificate};
use crate::selection::{erasing_picks, erasing_selection, Selection};

/// Collects blocks and the picks that erase them into a certificate.
struct Builder {
    selection: Selection,
    blocks: Vec<Vec<usize>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            selection: Selection::new(n),
            blocks: Vec::new(),
        }
    }

    /// Adds a quasi-unicyclic block erased by the default rule.
    fn block(&mut self, g: &Graph, block: Vec<usize>) -> Result<()> {
        for (v, u) in erasing_picks(g, &block)? {
            self.selection.select(v, u);
        }
        self.blocks.push(block);
        Ok(())
    }

    /// Adds `{center} ∪ leaves`, where the leaves are pairwise nonadjacent.
    /// Each adjacent leaf picks its edge to the center; the center picks its
    /// lowest leaf edge.
    fn star(&mut self, g: &Graph, center: usize, leaves: Vec<usize>) {
        let mut touching: Vec<usize> = leaves
            .iter()
            .copied()
            .filter(|&l| g.has_edge(center, l))
            .collect();
        touching.sort_unstable();
        for &l in &touching {
            self.selection.select(l, center);
        }
        if let Some(&first) = touching.first() {
            self.selection.select(center, first);
        }
        let mut block = vec![center];
        block.extend(leaves);
        self.blocks.push(block);
    }

    fn finish(self) -> RobustColoringCertificate {
        RobustColoringCertificate {
            selection: self.selection,
            blocks: self.blocks,
        }
    }
}

/// Selection deleting every edge of a forest: each tree is rooted at its
/// lowest vertex and every other vertex picks its parent edge.
pub fn forest_erasing_selection(f: &Graph) -> Result<Selection> {
    if !f.is_forest() {
        return Err(Error::WrongClass("a forest"));
    }
    let all: Vec<usize> = (0..f.n()).collect();
    erasing_selection(f, &[all])
}

/// Colors a chordal graph optimally along a perfect elimination ordering and
/// merges color classes in pairs. Two classes of a chordal graph induce a
/// chordal bipartite graph, i.e. a forest, so each pair is one block:
/// `⌈χ/2⌉` blocks in total.
pub fn construct_chordal_half(g: &Graph) -> Result<RobustColoringCertificate> {
    let peo = chordal::perfect_elimination_ordering(g).ok_or(Error::WrongClass("chordal"))?;
    let colors = chordal::peo_coloring(g, &peo);
    let chi = colors.iter().max().map_or(0, |c| c + 1);
    let mut blocks = vec![Vec::new(); chi.div_ceil(2)];
    for (v, &c) in colors.iter().enumerate() {
        blocks[c / 2].push(v);
    }
    RobustColoringCertificate::from_blocks(g, blocks)
}

/// Consecutive triples of the clique side, with a final block absorbing the
/// leftover clique vertices and the independent side:
/// - `q ≡ 1`: `{a_q} ∪ B`, which is independent;
/// - `q ≡ 2`: `{a_{q-1}, a_q} ∪ B`, a star at `a_{q-1}` plus an edge;
/// - `q ≡ 0`, ω-unique: `{a_{q-2}, a_{q-1}, a_q} ∪ B`, a triangle with
///   pendants at `a_{q-2}`;
/// - `q ≡ 0` otherwise: `B` alone.
///
/// The block count equals [`chi1_threshold`](crate::closed_form::chi1_threshold).
pub fn construct_threshold_coloring(
    g: &Graph,
    tp: &ThresholdPartition,
) -> Result<RobustColoringCertificate> {
    let unique = is_omega_unique_threshold(g, tp)?.by_criterion;
    let a = &tp.clique_order;
    let b = &tp.independent_order;
    let q = a.len();
    let split = match q % 3 {
        0 if unique => q.saturating_sub(3),
        0 => q,
        r => q - r,
    };
    let mut out = Builder::new(g.n());
    for triple in a[..split].chunks(3) {
        out.block(g, triple.to_vec())?;
    }
    let mut last: Vec<usize> = a[split..].to_vec();
    last.extend(b);
    if !last.is_empty() {
        out.block(g, last)?;
    }
    Ok(out.finish())
}

/// Robust coloring of a split graph with clique `A` (of size `χ ≥ 3`) and
/// independent set `B`: triples of `A` are triangle blocks. If `|A| ≡ 1
/// (mod 3)` the last clique vertex joins `B` in one star block; otherwise a
/// leftover pair of `A` is its own block and `B`, if nonempty, is another.
pub fn construct_split_coloring(
    g: &Graph,
    clique: &[usize],
    independent: &[usize],
) -> Result<RobustColoringCertificate> {
    let mut seen = vec![false; g.n()];
    for &v in clique.iter().chain(independent) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if seen[v] {
            return Err(Error::params(format!("vertex {v} listed twice")));
        }
        seen[v] = true;
    }
    if seen.contains(&false) {
        return Err(Error::params(
            "clique and independent set do not cover the graph",
        ));
    }
    if !g.is_clique(clique) || !g.is_independent(independent) {
        return Err(Error::WrongClass("split with the given partition"));
    }
    if clique.len() < 3 {
        return Err(Error::params(
            "split coloring needs a clique of size at least 3",
        ));
    }
    if let Some(&b) = independent
        .iter()
        .find(|&&b| clique.iter().all(|&a| g.has_edge(a, b)))
    {
        return Err(Error::params(format!(
            "vertex {b} sees the whole clique, so the clique is not maximum"
        )));
    }
    let t = clique.len();
    let mut out = Builder::new(g.n());
    let whole = t - t % 3;
    for triple in clique[..whole].chunks(3) {
        out.block(g, triple.to_vec())?;
    }
    match t % 3 {
        1 => out.star(g, clique[t - 1], independent.to_vec()),
        r => {
            if r == 2 {
                out.block(g, clique[whole..].to_vec())?;
            }
            if !independent.is_empty() {
                out.block(g, independent.to_vec())?;
            }
        }
    }
    Ok(out.finish())
}

/// Robust coloring of `P_n^p`, or of its induced subgraph on `subset`.
///
/// For `p = 1` the graph is a linear forest and one block suffices.
/// Otherwise, with `k = ⌈(p+1)/3⌉`, vertex triples `{3i, 3i+1, 3i+2}` are
/// triangles whose edges the triple deletes itself, and triple `i` gets
/// color `i mod (k+1)`: equally colored triples are more than `p` apart.
/// Returns the graph the certificate refers to.
pub fn construct_unit_interval_coloring(
    n: usize,
    p: usize,
    subset: Option<&[usize]>,
) -> Result<(Graph, RobustColoringCertificate)> {
    if p < 1 {
        return Err(Error::params("path power needs p >= 1"));
    }
    let (full, _) = gen_path_power(n, p)?;
    let vertices: Vec<usize> = match subset {
        Some(s) => {
            let mut s = s.to_vec();
            s.sort_unstable();
            s.dedup();
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s
        }
        None => (0..n).collect(),
    };
    let g = full.induced(&vertices);
    let classes = if p == 1 { 1 } else { (p + 1).div_ceil(3) + 1 };
    let mut blocks = vec![Vec::new(); classes];
    for (i, &v) in vertices.iter().enumerate() {
        let class = if p == 1 { 0 } else { (v / 3) % classes };
        blocks[class].push(i);
    }
    blocks.retain(|b| !b.is_empty());
    let cert = RobustColoringCertificate::from_blocks(&g, blocks)?;
    Ok((g, cert))
}

/// Robust coloring of `K_{n_1,...,n_t}` (vertices laid out part by part, as
/// in [`gen_complete_multipartite`]).
///
/// While some part has three or more vertices, one vertex of the smallest
/// part and the whole largest part form a star block. Among the remaining
/// parts of size one and two: two pairs form a `C_4` block, three singletons
/// a triangle block, and the rest one final block, split in two when it is
/// two singletons plus a pair (`K_{1,1,2}` has more edges than vertices).
pub fn construct_multipartite_coloring(sizes: &[usize]) -> Result<RobustColoringCertificate> {
    let (g, desc) = gen_complete_multipartite(sizes)?;
    let Annotation::Parts(labels) = desc.annotation else {
        unreachable!("multipartite graphs carry part labels")
    };
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); sizes.len()];
    for (v, &p) in labels.iter().enumerate() {
        parts[p].push(v);
    }
    let mut out = Builder::new(g.n());
    while parts.last().is_some_and(|p| p.len() >= 3) {
        let largest = parts.pop().unwrap();
        match parts.first_mut() {
            Some(smallest) => {
                let center = smallest.pop().unwrap();
                if smallest.is_empty() {
                    parts.remove(0);
                }
                out.star(&g, center, largest);
            }
            None => out.block(&g, largest)?,
        }
        parts.sort_by_key(Vec::len);
    }
    let singles: Vec<usize> = parts
        .iter()
        .filter(|p| p.len() == 1)
        .map(|p| p[0])
        .collect();
    let pairs: Vec<&Vec<usize>> = parts.iter().filter(|p| p.len() == 2).collect();
    let mut pair_rest = pairs.chunks_exact(2);
    for two in pair_rest.by_ref() {
        out.block(&g, two.iter().flat_map(|p| p.iter().copied()).collect())?;
    }
    let last_pair = pair_rest.remainder().first().map(|p| p.to_vec());
    let mut single_rest = singles.chunks_exact(3);
    for three in single_rest.by_ref() {
        out.block(&g, three.to_vec())?;
    }
    let mut rest: Vec<usize> = single_rest.remainder().to_vec();
    match last_pair {
        Some(pair) if rest.len() == 2 => {
            let lone = rest.pop().unwrap();
            rest.extend(pair);
            out.block(&g, rest)?;
            out.block(&g, vec![lone])?;
        }
        Some(pair) => {
            rest.extend(pair);
            out.block(&g, rest)?;
        }
        None if !rest.is_empty() => out.block(&g, rest)?,
        None => {}
    }
    Ok(out.finish())
}

/// A set family in which one element lies in every member but at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarLikeFamily {
    pub center: usize,
    pub members: Vec<Vec<usize>>,
}

impl StarLikeFamily {
    pub fn new(center: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        let family = StarLikeFamily { center, members };
        if !family.holds() {
            return Err(Error::params(format!(
                "more than one member avoids {center}"
            )));
        }
        Ok(family)
    }

    /// Whether at most one member avoids the center.
    pub fn holds(&self) -> bool {
        self.members
            .iter()
            .filter(|m| !m.contains(&self.center))
            .count()
            <= 1
    }

    /// The member avoiding the center, if any.
    pub fn exceptional(&self) -> Option<&[usize]> {
        self.members
            .iter()
            .find(|m| !m.contains(&self.center))
            .map(Vec::as_slice)
    }
}

fn check_kneser(n: usize, k: usize) -> Result<()> {
    if k < 2 || n < 2 * k {
        return Err(Error::params(format!(
            "Kneser parameters need k >= 2 and n >= 2k, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// Largest independent set of `KG(n,k)`: `C(n-1, k-1)`.
pub fn ekr_bound(n: usize, k: usize) -> Result<usize> {
    check_kneser(n, k)?;
    Ok(binomial(n - 1, k - 1))
}

/// Largest intersecting family of k-subsets of `[n]` with empty common
/// intersection: `C(n-1,k-1) - C(n-k-1,k-1) + 1`.
pub fn hm_bound(n: usize, k: usize) -> Result<usize> {
    check_kneser(n, k)?;
    if n == 2 * k {
        return Err(Error::params("needs n >= 2k + 1"));
    }
    Ok(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1)
}

/// `8k·C(n-2, k-2)`, the size bound for robust independent families in which
/// every element is avoided by at least two members.
pub fn twice_avoided_bound(n: usize, k: usize) -> Result<usize> {
    check_kneser(n, k)?;
    Ok(8 * k * binomial(n - 2, k - 2))
}

pub fn is_intersecting(family: &[Vec<usize>]) -> bool {
    family.iter().enumerate().all(|(i, a)| {
        family[i + 1..]
            .iter()
            .all(|b| a.iter().any(|x| b.contains(x)))
    })
}

/// Whether every element of `[n]` is missing from at least two members.
pub fn is_twice_avoided(family: &[Vec<usize>], n: usize) -> bool {
    (1..=n).all(|x| family.iter().filter(|m| !m.contains(&x)).count() >= 2)
}

fn kneser_members(n: usize, k: usize, sets: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let (g, _) = gen_kneser(n, k)?;
    let mut members = Vec::with_capacity(sets.len());
    for s in sets {
        if s.len() != k || s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&x| x < 1 || x > n) {
            return Err(Error::params(format!(
                "{s:?} is not a sorted {k}-subset of 1..={n}"
            )));
        }
        members.push(colex_rank(s));
    }
    Ok((g, members))
}

fn robust_independent_sets(
    n: usize,
    k: usize,
    sets: &[Vec<usize>],
) -> Result<(Graph, RobustIndependenceCertificate)> {
    let (g, members) = kneser_members(n, k, sets)?;
    let cert = RobustIndependenceCertificate::from_members(&g, members)?;
    Ok((g, cert))
}

/// All k-sets containing 1 plus `{2, ..., k+1}`: a star in `KG(n,k)`
/// centered at the extra set, of size `C(n-1,k-1) + 1`.
pub fn construct_kneser_alpha1(
    n: usize,
    k: usize,
) -> Result<(Graph, RobustIndependenceCertificate)> {
    check_kneser(n, k)?;
    if n == 2 * k {
        return Err(Error::params("needs n >= 2k + 1"));
    }
    let (g, desc) = gen_kneser(n, k)?;
    let Annotation::Sets(sets) = desc.annotation else {
        unreachable!("Kneser graphs carry set labels")
    };
    let extra = colex_rank(&(2..=k + 1).collect::<Vec<_>>());
    let star: Vec<usize> = (0..sets.len()).filter(|&v| sets[v].contains(&1)).collect();
    let mut selection = Selection::new(g.n());
    let touching: Vec<usize> = star
        .iter()
        .copied()
        .filter(|&v| g.has_edge(v, extra))
        .collect();
    for &v in &touching {
        selection.select(v, extra);
    }
    if let Some(&first) = touching.first() {
        selection.select(extra, first);
    }
    let mut members = star;
    members.push(extra);
    members.sort_unstable();
    Ok((g, RobustIndependenceCertificate { selection, members }))
}

/// In `KG(3k, k)`: all k-sets containing 1 together with `[k+1, 2k]` and
/// `[2k+1, 3k]`. The induced graph is a triangle through `[1, k]` with
/// pendant edges at the two extra sets; size `C(3k-1, k-1) + 2`.
pub fn construct_kneser_3k_family(k: usize) -> Result<(Graph, RobustIndependenceCertificate)> {
    if k < 2 {
        return Err(Error::params("needs k >= 2"));
    }
    let n = 3 * k;
    let mut sets: Vec<Vec<usize>> = crate::families::k_subsets_colex(n, k)
        .into_iter()
        .filter(|s| s.contains(&1))
        .collect();
    sets.push((k + 1..=2 * k).collect());
    sets.push((2 * k + 1..=3 * k).collect());
    robust_independent_sets(n, k, &sets)
}

/// Whether `extra` qualifies for the family `{F : 2k+m ∈ F} ∪ extra` in
/// `KG(2k+m, k)`: subsets of `[2k+m-1]`, pairwise intersecting, and any two
/// distinct members cover more than `k+m` elements.
pub fn star_extension_is_valid(k: usize, m: usize, extra: &[Vec<usize>]) -> bool {
    let n = 2 * k + m;
    let proper = extra.iter().all(|s| {
        s.len() == k && s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&x| (1..n).contains(&x))
    });
    let wide = extra.iter().enumerate().all(|(i, a)| {
        extra[i + 1..].iter().all(|b| {
            let union = a.len() + b.iter().filter(|x| !a.contains(x)).count();
            union > k + m
        })
    });
    proper && is_intersecting(extra) && wide
}

/// The family `{F : 2k+m ∈ F} ∪ extra` in `KG(2k+m, k)`, which induces a
/// star forest when `extra` passes [`star_extension_is_valid`].
pub fn construct_kneser_star_extension(
    k: usize,
    m: usize,
    extra: &[Vec<usize>],
) -> Result<(Graph, RobustIndependenceCertificate)> {
    if !star_extension_is_valid(k, m, extra) {
        return Err(Error::params(
            "extra sets do not satisfy the family conditions",
        ));
    }
    let n = 2 * k + m;
    let mut sets: Vec<Vec<usize>> = crate::families::k_subsets_colex(n, k)
        .into_iter()
        .filter(|s| s.contains(&n))
        .collect();
    sets.extend(extra.iter().cloned());
    robust_independent_sets(n, k, &sets)
}

/// Largest `c ≤ n` with `n - c ≥ C(c,k) - C(2k,k)`, scanning up from `2k`.
pub fn kneser_chi1_c(n: usize, k: usize) -> Result<usize> {
    check_kneser(n, k)?;
    let base = binomial(2 * k, k);
    let mut c = 2 * k;
    while c < n && n - (c + 1) + base >= binomial(c + 1, k) {
        c += 1;
    }
    Ok(c)
}

/// The classes of the robust coloring of `KG(n,k)` with `n - c + 1` colors:
/// for `i = 1..=n-c`, the sets with maximum `n+1-i` plus the `i`-th set of
/// `C([c],k) ∖ C([2k],k)` (colex order) while these last, each star-like;
/// and finally all k-subsets of `[2k]`, which induce a perfect matching.
pub fn kneser_chi1_classes(
    n: usize,
    k: usize,
) -> Result<(usize, Vec<StarLikeFamily>, Vec<Vec<usize>>)> {
    let c = kneser_chi1_c(n, k)?;
    let sets = crate::families::k_subsets_colex(n, k);
    let low = binomial(2 * k, k);
    let mid = binomial(c, k);
    let mut stars = Vec::with_capacity(n - c);
    for i in 1..=n - c {
        let top = n + 1 - i;
        let mut members: Vec<Vec<usize>> =
            sets.iter().filter(|s| s[k - 1] == top).cloned().collect();
        if low + i - 1 < mid {
            members.push(sets[low + i - 1].clone());
        }
        stars.push(StarLikeFamily::new(top, members)?);
    }
    Ok((c, stars, sets[..low].to_vec()))
}

/// Robust coloring of `KG(n,k)` with `n - c + 1` classes; see
/// [`kneser_chi1_classes`]. Returns the graph, the certificate and `c`.
pub fn construct_kneser_chi1(
    n: usize,
    k: usize,
) -> Result<(Graph, RobustColoringCertificate, usize)> {
    let (c, stars, matching) = kneser_chi1_classes(n, k)?;
    let (g, _) = gen_kneser(n, k)?;
    let mut out = Builder::new(g.n());
    for star in stars {
        let ranks: Vec<usize> = star.members.iter().map(|s| colex_rank(s)).collect();
        match star.exceptional() {
            Some(e) => {
                let center = colex_rank(e);
                let leaves = ranks.into_iter().filter(|&r| r != center).collect();
                out.star(&g, center, leaves);
            }
            None => out.block(&g, ranks)?,
        }
    }
    out.block(&g, matching.iter().map(|s| colex_rank(s)).collect())?;
    Ok((g, out.finish(), c))
}
