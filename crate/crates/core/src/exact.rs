//! Exact chromatic, clique and independence numbers for small graphs.
//!
//! Everything here works on single-word vertex masks, so the hard ceiling is
//! 64 vertices; [`Limits`] sets the configured ceilings below that.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Size ceilings for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub chromatic: usize,
    /// Above this size χ switches from subset DP to branch and bound.
    pub chromatic_dp: usize,
    pub clique: usize,
    pub chi1: usize,
    pub alpha1: usize,
    pub omega1: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            chromatic: 24,
            chromatic_dp: 20,
            clique: 24,
            chi1: 18,
            alpha1: 20,
            omega1: 10,
        }
    }
}

pub(crate) fn check_limit(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit.min(64) {
        return Err(Error::SizeLimit {
            what,
            limit: limit.min(64),
            n,
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// χ(G) together with a proper coloring using exactly that many colors.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    chromatic_number_with(g, &Limits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    check_limit("chromatic number", g.n(), limits.chromatic)?;
    if g.n() <= limits.chromatic_dp {
        Ok(chromatic_dp(g))
    } else {
        Ok(chromatic_bnb(g))
    }
}

/// Subset DP: `χ(S) = 1 + min χ(S \ I)` over maximal independent sets `I` of
/// `G[S]` containing the lowest vertex of `S`. Any optimal coloring can be
/// rearranged so the class of that vertex is such a set.
pub fn chromatic_dp(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    assert!(n <= 26, "subset DP table would be too large");
    let adj = g.masks();
    let mut memo = vec![u8::MAX; 1usize << n];
    let mut pick = vec![0u32; 1usize << n];
    memo[0] = 0;
    dp_solve(&adj, full_mask(n), &mut memo, &mut pick);

    let mut colors = vec![0; n];
    let mut rest = full_mask(n);
    let mut c = 0;
    while rest != 0 {
        let class = pick[rest as usize] as u64;
        for v in Bits(class) {
            colors[v] = c;
        }
        rest &= !class;
        c += 1;
    }
    (memo[full_mask(n) as usize] as usize, colors)
}

fn dp_solve(adj: &[u64], set: u64, memo: &mut [u8], pick: &mut [u32]) -> u8 {
    if memo[set as usize] != u8::MAX {
        return memo[set as usize];
    }
    let v = set.trailing_zeros() as usize;
    let rest = set & !(adj[v] | 1 << v);
    let mut classes = Vec::new();
    maximal_independent_sets(adj, 0, rest, 0, &mut |j| classes.push(j | 1 << v));
    let mut best = u8::MAX;
    let mut best_class = 0;
    for class in classes {
        let val = 1 + dp_solve(adj, set & !class, memo, pick);
        if val < best {
            best = val;
            best_class = class;
        }
    }
    memo[set as usize] = best;
    pick[set as usize] = best_class as u32;
    best
}

/// Bron–Kerbosch with pivoting on the complement: reports every maximal
/// independent set of `G[cand ∪ excl]` that extends `chosen` and avoids `excl`.
fn maximal_independent_sets(
    adj: &[u64],
    chosen: u64,
    cand: u64,
    excl: u64,
    out: &mut impl FnMut(u64),
) {
    if cand == 0 {
        if excl == 0 {
            out(chosen);
        }
        return;
    }
    // Pivot: the vertex with the most candidates in its non-neighborhood.
    let pivot = Bits(cand | excl)
        .max_by_key(|&u| (cand & !adj[u] & !(1 << u)).count_ones())
        .unwrap();
    let mut todo = cand & (adj[pivot] | 1 << pivot);
    let mut cand = cand;
    let mut excl = excl;
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        let keep = !(adj[v] | 1 << v);
        maximal_independent_sets(adj, chosen | 1 << v, cand & keep, excl & keep, out);
        cand &= !(1 << v);
        excl |= 1 << v;
    }
}

/// Exact DSATUR branch and bound.
pub fn chromatic_bnb(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let adj = g.masks();
    let (omega, _) = clique_masks(&adj, full_mask(n));
    let mut search = Dsatur {
        adj: &adj,
        n,
        colors: vec![usize::MAX; n],
        classes: Vec::new(),
        best: n + 1,
        best_colors: (0..n).collect(),
        lower: omega.count_ones() as usize,
    };
    search.best = n;
    search.run(0);
    (search.best, search.best_colors)
}

struct Dsatur<'a> {
    adj: &'a [u64],
    n: usize,
    colors: Vec<usize>,
    classes: Vec<u64>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
}

impl Dsatur<'_> {
    fn run(&mut self, colored: usize) {
        if self.best <= self.lower {
            return;
        }
        if colored == self.n {
            if self.classes.len() < self.best {
                self.best = self.classes.len();
                self.best_colors = self.colors.clone();
            }
            return;
        }
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..self.n {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let sat = self
                .classes
                .iter()
                .filter(|&&c| c & self.adj[v] != 0)
                .count();
            let deg = (0..self.n)
                .filter(|&u| self.colors[u] == usize::MAX && self.adj[v] >> u & 1 == 1)
                .count();
            if pick == usize::MAX || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        let v = pick;
        for c in 0..self.classes.len() {
            if self.classes[c] & self.adj[v] == 0 {
                self.colors[v] = c;
                self.classes[c] |= 1 << v;
                self.run(colored + 1);
                self.classes[c] &= !(1 << v);
                self.colors[v] = usize::MAX;
                if self.best <= self.lower {
                    return;
                }
            }
        }
        if self.classes.len() + 1 < self.best {
            self.colors[v] = self.classes.len();
            self.classes.push(1 << v);
            self.run(colored + 1);
            self.classes.pop();
            self.colors[v] = usize::MAX;
        }
    }
}

/// ω(G) and a maximum clique.
pub fn clique_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    clique_number_with(g, &Limits::default())
}

pub fn clique_number_with(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    check_limit("clique number", g.n(), limits.clique)?;
    let adj = g.masks();
    let (best, _) = clique_masks(&adj, full_mask(g.n()));
    Ok((best.count_ones() as usize, Bits(best).collect()))
}

/// α(G) and a maximum independent set.
pub fn independence_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    independence_number_with(g, &Limits::default())
}

pub fn independence_number_with(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    check_limit("independence number", g.n(), limits.clique)?;
    let n = g.n();
    let comp: Vec<u64> = g
        .masks()
        .iter()
        .enumerate()
        .map(|(v, &row)| !row & full_mask(n) & !(1 << v))
        .collect();
    let (best, _) = clique_masks(&comp, full_mask(n));
    Ok((best.count_ones() as usize, Bits(best).collect()))
}

/// Maximum clique inside `cand`; returns the clique mask and the number of
/// search nodes expanded.
pub(crate) fn clique_masks(adj: &[u64], cand: u64) -> (u64, u64) {
    let mut best = 0u64;
    let mut nodes = 0u64;
    expand(adj, 0, cand, &mut best, &mut nodes, 0);
    (best, nodes)
}

/// Whether `G[cand]` has a clique of at least `target` vertices; returns one.
pub(crate) fn clique_at_least(adj: &[u64], cand: u64, target: u32) -> Option<u64> {
    if target == 0 {
        return Some(0);
    }
    let mut best = 0u64;
    let mut nodes = 0u64;
    expand(adj, 0, cand, &mut best, &mut nodes, target);
    (best.count_ones() >= target).then_some(best)
}

/// Branch and bound with a greedy-coloring bound. Stops early once a clique
/// of `stop_at` vertices is found (`0` means never).
fn expand(adj: &[u64], clique: u64, cand: u64, best: &mut u64, nodes: &mut u64, stop_at: u32) {
    *nodes += 1;
    if cand == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    let (order, bounds) = color_sort(adj, cand);
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if stop_at > 0 && best.count_ones() >= stop_at {
            return;
        }
        if clique.count_ones() + bounds[i] <= best.count_ones() {
            return;
        }
        let v = order[i];
        expand(adj, clique | 1 << v, cand & adj[v], best, nodes, stop_at);
        cand &= !(1 << v);
    }
    if clique.count_ones() > best.count_ones() {
        *best = clique;
    }
}

/// Greedy sequential coloring of `cand`; vertices come out ordered by color
/// and `bounds[i]` is the color number (1-based) of `order[i]`.
fn color_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut left = cand;
    let mut color = 0;
    while left != 0 {
        color += 1;
        let mut avail = left;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            left &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

/// Number of distinct cliques of order ω(G).
pub fn maximum_clique_count(g: &Graph) -> Result<usize> {
    check_limit("clique enumeration", g.n(), Limits::default().clique)?;
    let adj = g.masks();
    let (best, _) = clique_masks(&adj, full_mask(g.n()));
    let target = best.count_ones();
    let mut count = 0;
    count_cliques(&adj, 0, full_mask(g.n()), target, &mut count);
    Ok(count)
}

fn count_cliques(adj: &[u64], size: u32, cand: u64, target: u32, count: &mut usize) {
    if size == target {
        *count += 1;
        return;
    }
    if size + cand.count_ones() < target {
        return;
    }
    let mut cand = cand;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        count_cliques(adj, size + 1, cand & adj[v], target, count);
    }
}

#[cfg(test)]
fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|e| colors[e.u()] != colors[e.v()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k_colorable_brute(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if k == 0 {
            return n == 0;
        }
        let mut colors = vec![0usize; n];
        loop {
            if is_proper_coloring(g, &colors) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        Graph::from_fn(n, |_, _| rng.gen_bool(p))
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap().0, 2);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap().0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(chromatic_number(&Graph::petersen()).unwrap().0, 3);
    }

    #[test]
    fn dp_and_bnb_agree_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let (a, ca) = chromatic_dp(&g);
            let (b, cb) = chromatic_bnb(&g);
            assert_eq!(a, b, "{g:?}");
            assert!(is_proper_coloring(&g, &ca) && is_proper_coloring(&g, &cb));
            assert_eq!(ca.iter().max().map_or(0, |m| m + 1), a);
            assert!(k_colorable_brute(&g, a));
            assert!(a == 0 || !k_colorable_brute(&g, a - 1));
        }
    }

    #[test]
    fn dp_and_bnb_agree_on_larger_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_graph(&mut rng, 16, 0.5);
            assert_eq!(chromatic_dp(&g).0, chromatic_bnb(&g).0);
        }
    }

    #[test]
    fn clique_and_independence() {
        let p = Graph::petersen();
        assert_eq!(clique_number(&p).unwrap().0, 2);
        let (a, set) = independence_number(&p).unwrap();
        assert_eq!(a, 4);
        assert!(p.is_independent(&set));
        assert_eq!(clique_number(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(independence_number(&Graph::complete(4)).unwrap().0, 1);
        assert_eq!(clique_number(&Graph::empty(5)).unwrap().0, 1);
        assert_eq!(independence_number(&Graph::empty(5)).unwrap().0, 5);
    }

    #[test]
    fn clique_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let brute = (0u64..1 << n)
                .filter(|&s| g.is_clique(&Bits(s).collect::<Vec<_>>()))
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap();
            let (w, clique) = clique_number(&g).unwrap();
            assert_eq!(w, brute);
            assert!(g.is_clique(&clique) && clique.len() == w);
        }
    }

    #[test]
    fn size_limit() {
        let g = Graph::empty(30);
        assert!(matches!(
            chromatic_number(&g),
            Err(Error::SizeLimit {
                limit: 24,
                n: 30,
                ..
            })
        ));
        let limits = Limits {
            chromatic: 40,
            ..Limits::default()
        };
        assert_eq!(chromatic_number_with(&g, &limits).unwrap().0, 1);
    }
}
