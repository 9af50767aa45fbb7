//! Suites comparing the exact oracle, the closed forms and the
//! constructions over families of instances, with line-oriented reports.
//!
//! Instances are generated sequentially from fixed seeds, evaluated in
//! parallel, and reported in generation order, so a report depends only on
//! its options.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_form::{
    chi1_bipartite, chi1_multipartite, chi1_split_upper, chi1_threshold, chi1_tripartite,
    multipartite_upper_bound, Mode,
};
use crate::constructions::{
    construct_chordal_half, construct_kneser_3k_family, construct_kneser_alpha1,
    construct_kneser_chi1, construct_multipartite_coloring, construct_split_coloring,
    construct_threshold_coloring, construct_unit_interval_coloring, ekr_bound, hm_bound,
    kneser_chi1_c,
};
use crate::enumerate::{
    all_graphs, nonisomorphic_graphs, nonisomorphic_trees, random_bipartite, random_graph,
    random_split,
};
use crate::error::{Error, Result};
use crate::exact::{chromatic_number, independence_number, Limits};
use crate::families::{
    binomial, gen_complete_multipartite, gen_kneser, gen_r_tower, gen_random_chordal,
    gen_split_tight, gen_threshold, Step,
};
use crate::graph::{is_removable_edge_set, EdgeSubset, Graph};
use crate::oracle::{
    alpha1_by_definition, alpha1_exact, chi1_by_definition, chi1_exact, chi1_exact_with,
    omega1_by_definition, omega1_exact, omega1_exact_with, removal_image_masks,
    verify_robust_coloring, verify_robust_independent, RobustColoringCertificate,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Bounds,
    Threshold,
    Multipartite,
    Tripartite,
    Bipartite,
    Chordal,
    Split,
    RTower,
    UnitInterval,
    Kneser,
    RemovableLemma,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Bounds,
        Suite::Threshold,
        Suite::Multipartite,
        Suite::Tripartite,
        Suite::Bipartite,
        Suite::Chordal,
        Suite::Split,
        Suite::RTower,
        Suite::UnitInterval,
        Suite::Kneser,
        Suite::RemovableLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::Threshold => "threshold",
            Suite::Multipartite => "multipartite",
            Suite::Tripartite => "tripartite",
            Suite::Bipartite => "bipartite",
            Suite::Chordal => "chordal",
            Suite::Split => "split",
            Suite::RTower => "rtower",
            Suite::UnitInterval => "unitinterval",
            Suite::Kneser => "kneser",
            Suite::RemovableLemma => "removable-lemma",
        }
    }

    /// Default for `limit_n`: the instance size bound each suite sweeps.
    pub fn default_limit_n(self) -> usize {
        match self {
            Suite::Bounds => 6,
            Suite::Threshold => 10,
            Suite::Multipartite => 11,
            Suite::Tripartite => 10,
            Suite::Bipartite => 8,
            Suite::Chordal => 40,
            Suite::Split => 6,
            Suite::RTower => 5,
            Suite::UnitInterval => 60,
            Suite::Kneser => 15,
            Suite::RemovableLemma => 5,
        }
    }

    /// Default number of random instances, where the suite has any.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Bounds => 500,
            Suite::Bipartite => 300,
            Suite::Chordal => 200,
            Suite::Split => 100,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::params(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub limit_n: Option<usize>,
    /// Instances with more edges are reported as skipped.
    pub limit_edges: Option<usize>,
    pub mode: Mode,
    pub seed: u64,
    pub samples: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            limit_n: None,
            limit_edges: None,
            mode: Mode::OracleValidated,
            seed: 1,
            samples: None,
        }
    }
}

/// A report value: a number, not applicable, or skipped as infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Value(usize),
    Absent,
    Skipped,
}

impl Cell {
    pub fn value(self) -> Option<usize> {
        match self {
            Cell::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(v) => write!(f, "{v}"),
            Cell::Absent => f.write_str("-"),
            Cell::Skipped => f.write_str("skipped"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub desc: String,
    pub oracle: Cell,
    pub formula: Cell,
    pub mode: String,
    /// Block count (or set size) of a certificate verified in this run.
    pub constr: Cell,
    /// Discrepancies and row classifications; empty when all checks pass.
    pub flags: Vec<String>,
    /// Auxiliary values, printed after the flags.
    pub info: Vec<(String, String)>,
}

impl Row {
    fn new(desc: impl Into<String>) -> Self {
        Row {
            desc: desc.into(),
            oracle: Cell::Absent,
            formula: Cell::Absent,
            mode: "none".to_string(),
            constr: Cell::Absent,
            flags: Vec::new(),
            info: Vec::new(),
        }
    }

    fn flag(&mut self, f: impl Into<String>) {
        self.flags.push(f.into());
    }

    fn flag_if(&mut self, cond: bool, f: &str) {
        if cond {
            self.flag(f);
        }
    }

    fn info(&mut self, key: &str, value: impl fmt::Display) {
        self.info.push((key.to_string(), value.to_string()));
    }

    pub fn has_flag(&self, name: &str) -> bool {
        self.flags.iter().any(|f| flag_name(f) == name)
    }

    pub fn info_value(&self, key: &str) -> Option<&str> {
        self.info
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn is_skipped(&self) -> bool {
        self.oracle == Cell::Skipped || self.constr == Cell::Skipped
    }

    /// Records a verified coloring certificate, or flags it.
    fn coloring(&mut self, g: &Graph, cert: Result<RobustColoringCertificate>) -> Option<usize> {
        match cert {
            Ok(cert) => match verify_robust_coloring(g, &cert) {
                Ok(()) => {
                    self.constr = Cell::Value(cert.color_count());
                    Some(cert.color_count())
                }
                Err(e) => {
                    self.flag(format!("invalid-certificate:{}", e.tag()));
                    None
                }
            },
            Err(e) => {
                self.flag("construction-error");
                self.info("error", e.to_string().replace(' ', "_"));
                None
            }
        }
    }
}

fn flag_name(flag: &str) -> &str {
    flag.split(':').next().unwrap_or(flag)
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let formula = match self.formula {
            Cell::Value(v) => format!("{v}/{}", self.mode),
            other => other.to_string(),
        };
        let flags = if self.flags.is_empty() {
            "-".to_string()
        } else {
            self.flags.join(",")
        };
        write!(
            f,
            "row {} oracle={} formula={} constr={} flags={}",
            self.desc, self.oracle, formula, self.constr, flags
        )?;
        for (k, v) in &self.info {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub header: String,
    pub rows: Vec<Row>,
}

impl Report {
    /// Counts of rows, skipped rows, and each flag name.
    pub fn summary(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        out.insert("rows".to_string(), self.rows.len());
        out.insert(
            "skipped".to_string(),
            self.rows.iter().filter(|r| r.is_skipped()).count(),
        );
        out.insert(
            "clean".to_string(),
            self.rows.iter().filter(|r| r.flags.is_empty()).count(),
        );
        for row in &self.rows {
            for f in &row.flags {
                *out.entry(flag_name(f).to_string()).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn count(&self, flag: &str) -> usize {
        self.rows.iter().filter(|r| r.has_flag(flag)).count()
    }

    pub fn rows_with(&self, flag: &str) -> impl Iterator<Item = &Row> {
        let flag = flag.to_string();
        self.rows.iter().filter(move |r| r.has_flag(&flag))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header)?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        for (k, v) in self.summary() {
            writeln!(f, "summary {} {k}={v}", self.suite)?;
        }
        Ok(())
    }
}

/// Runs one suite.
pub fn run(suite: Suite, opts: &Options) -> Result<Report> {
    let limit_n = opts.limit_n.unwrap_or(suite.default_limit_n());
    let samples = opts.samples.unwrap_or(suite.default_samples());
    let ctx = Ctx {
        limit_n,
        samples,
        opts: opts.clone(),
    };
    let rows = match suite {
        Suite::Bounds => bounds(&ctx),
        Suite::Threshold => threshold(&ctx),
        Suite::Multipartite => multipartite(&ctx),
        Suite::Tripartite => tripartite(&ctx),
        Suite::Bipartite => bipartite(&ctx),
        Suite::Chordal => chordal(&ctx),
        Suite::Split => split(&ctx),
        Suite::RTower => rtower(&ctx),
        Suite::UnitInterval => unit_interval(&ctx),
        Suite::Kneser => kneser(&ctx),
        Suite::RemovableLemma => removable_lemma(&ctx),
    };
    let header = format!(
        "crosscheck {suite} limit-n={limit_n} limit-edges={} mode={} seed={} samples={samples}",
        opts.limit_edges
            .map_or("none".to_string(), |e| e.to_string()),
        opts.mode,
        opts.seed,
    );
    Ok(Report {
        suite,
        header,
        rows,
    })
}

struct Ctx {
    limit_n: usize,
    samples: usize,
    opts: Options,
}

impl Ctx {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
    }

    fn too_big(&self, g: &Graph) -> bool {
        self.opts.limit_edges.is_some_and(|e| g.m() > e)
    }
}

/// Evaluates instances in parallel, keeping their order.
fn evaluate<T: Sync>(items: &[T], f: impl Fn(&T) -> Row + Sync + Send) -> Vec<Row> {
    items.par_iter().map(f).collect()
}

fn skipped(desc: String) -> Row {
    let mut row = Row::new(desc);
    row.oracle = Cell::Skipped;
    row
}

fn mask_desc(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("{}{}", e.u() + 1, e.v() + 1))
        .collect();
    if edges.is_empty() {
        format!("n{}:empty", g.n())
    } else {
        format!("n{}:{}", g.n(), edges.join("."))
    }
}

fn bounds(ctx: &Ctx) -> Vec<Row> {
    let mut items: Vec<(String, Graph)> = Vec::new();
    for n in 1..=ctx.limit_n.min(7) {
        for g in nonisomorphic_graphs(n) {
            items.push((format!("all:{}", mask_desc(&g)), g));
        }
    }
    let mut rng = ctx.rng(1);
    for i in 0..ctx.samples {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        items.push((format!("random:{i}:n{n}"), random_graph(&mut rng, n, p)));
    }
    evaluate(&items, |(desc, g)| {
        if ctx.too_big(g) {
            return skipped(desc.clone());
        }
        let mut row = Row::new(desc.clone());
        let chi = chromatic_number(g).expect("within limits").0;
        let chi1 = chi1_exact(g).expect("within limits").0;
        row.oracle = Cell::Value(chi1);
        row.info("chi", chi);
        row.info("qu", g.is_quasi_unicyclic());
        row.flag_if(chi1 < chi.div_ceil(3), "lower-violation");
        row.flag_if(chi1 > chi, "upper-violation");
        row.flag_if(
            (chi1 == 1) != g.is_quasi_unicyclic() && g.n() > 0,
            "qu-mismatch",
        );
        row
    })
}

fn threshold(ctx: &Ctx) -> Vec<Row> {
    // The first vertex is the same whether added as isolated or dominating.
    let mut seqs = Vec::new();
    for len in 1..=ctx.limit_n {
        for bits in 0..1u32 << (len - 1) {
            let mut seq = vec![Step::Dominating];
            seq.extend((0..len - 1).map(|i| {
                if bits >> (len - 2 - i) & 1 == 1 {
                    Step::Dominating
                } else {
                    Step::Isolated
                }
            }));
            seqs.push(seq);
        }
    }
    evaluate(&seqs, |seq| {
        let (g, tp) = gen_threshold(seq).expect("nonempty sequence");
        let desc = crate::families::Family::Threshold {
            creation: seq.clone(),
        }
        .to_string();
        if ctx.too_big(&g) {
            return skipped(desc);
        }
        let mut row = Row::new(desc);
        let formula = chi1_threshold(&g, &tp).expect("valid partition");
        row.formula = Cell::Value(formula.value);
        row.mode = formula.mode_label();
        row.info("clause", formula.clause_label());
        row.info("q", tp.q());
        let oracle = chi1_exact(&g).expect("within limits").0;
        row.oracle = Cell::Value(oracle);
        row.flag_if(formula.ambiguous, "ambiguous");
        row.flag_if(formula.value != oracle, "mismatch");
        if let Some(c) = row.coloring(&g, construct_threshold_coloring(&g, &tp)) {
            row.flag_if(c != formula.value, "constr-mismatch");
        }
        row
    })
}

/// Ascending lists of positive integers with the given total.
fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=left {
            cur.push(part);
            go(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, &mut Vec::new(), &mut out);
    out
}

fn multipartite(ctx: &Ctx) -> Vec<Row> {
    let lists: Vec<Vec<usize>> = (1..=ctx.limit_n).flat_map(partitions).collect();
    evaluate(&lists, |sizes| {
        let (g, _) = gen_complete_multipartite(sizes).expect("valid sizes");
        let desc = crate::families::Family::Multipartite {
            sizes: sizes.clone(),
        }
        .to_string();
        if ctx.too_big(&g) {
            return skipped(desc);
        }
        let mut row = Row::new(desc);
        let formula = chi1_multipartite(sizes, ctx.opts.mode).expect("valid sizes");
        let printed = chi1_multipartite(sizes, Mode::AsPrinted)
            .expect("valid sizes")
            .value;
        row.formula = Cell::Value(formula.value);
        row.mode = formula.mode_label();
        row.info("clause", formula.clause_label());
        row.info("printed", printed);
        let bound = multipartite_upper_bound(sizes).expect("valid sizes");
        row.info("bound", bound);
        match chi1_exact(&g) {
            Ok((oracle, _)) => {
                row.oracle = Cell::Value(oracle);
                row.flag_if(formula.value != oracle, "mismatch");
                row.flag_if(printed != oracle, "printed-mismatch");
                row.flag_if(oracle > bound, "bound-violation");
                let t = sizes.len();
                if sizes[0] >= t {
                    row.flag("large-parts");
                    row.flag_if(oracle != t, "large-parts-violation");
                }
            }
            Err(_) => row.oracle = Cell::Skipped,
        }
        if formula.value > bound {
            row.flag("formula-above-bound");
        }
        if let Some(c) = row.coloring(&g, construct_multipartite_coloring(sizes)) {
            row.flag_if(
                row.oracle.value().is_some_and(|o| c < o),
                "constr-below-oracle",
            );
        }
        row
    })
}

fn tripartite(ctx: &Ctx) -> Vec<Row> {
    let mut triples = Vec::new();
    for total in 4..=ctx.limit_n {
        for r in 1..=total {
            for s in r..=total {
                if r + s < total && total - r - s >= s {
                    triples.push((r, s, total - r - s));
                }
            }
        }
    }
    evaluate(&triples, |&(r, s, t)| {
        let desc = format!("tripartite:{r},{s},{t}");
        let (g, _) = gen_complete_multipartite(&[r, s, t]).expect("valid sizes");
        if ctx.too_big(&g) {
            return skipped(desc);
        }
        let mut row = Row::new(desc);
        let formula = chi1_tripartite(r, s, t).expect("t >= 2");
        row.formula = Cell::Value(formula.value);
        row.info("clause", formula.clause);
        let oracle = chi1_exact(&g).expect("within limits").0;
        row.oracle = Cell::Value(oracle);
        row.flag_if(oracle != formula.value, "mismatch");
        row
    })
}

fn bipartite(ctx: &Ctx) -> Vec<Row> {
    let mut items: Vec<(String, Graph)> = Vec::new();
    for n in 1..=ctx.limit_n.min(9) {
        for (i, t) in nonisomorphic_trees(n).into_iter().enumerate() {
            items.push((format!("tree:n{n}:{i}"), t));
        }
    }
    let mut rng = ctx.rng(2);
    for i in 0..ctx.samples {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.2..0.9);
        items.push((format!("random:{i}:n{n}"), random_bipartite(&mut rng, n, p)));
    }
    evaluate(&items, |(desc, g)| {
        if ctx.too_big(g) {
            return skipped(desc.clone());
        }
        let mut row = Row::new(desc.clone());
        let formula = chi1_bipartite(g).expect("bipartite by construction");
        row.formula = Cell::Value(formula.value);
        row.info("clause", formula.clause);
        let oracle = chi1_exact(g).expect("within limits").0;
        row.oracle = Cell::Value(oracle);
        row.flag_if(oracle != formula.value, "mismatch");
        row
    })
}

/// Largest graph on which the chordal suite runs the ω₁ search.
pub const CHORDAL_ORACLE_N: usize = 14;

fn chordal(ctx: &Ctx) -> Vec<Row> {
    let mut rng = ctx.rng(3);
    let items: Vec<(usize, f64, u64)> = (0..ctx.samples)
        .map(|_| {
            (
                rng.gen_range(1..=ctx.limit_n.max(1)),
                (rng.gen_range(20..=90) as f64) / 100.0,
                rng.gen::<u32>() as u64,
            )
        })
        .collect();
    let limits = Limits {
        omega1: CHORDAL_ORACLE_N,
        ..Limits::default()
    };
    evaluate(&items, |&(n, density, seed)| {
        let (g, _) = gen_random_chordal(n, density, seed).expect("valid parameters");
        let desc = crate::families::Family::RandomChordal { n, density, seed }.to_string();
        if ctx.too_big(&g) {
            return skipped(desc);
        }
        let mut row = Row::new(desc);
        let peo =
            crate::chordal::perfect_elimination_ordering(&g).expect("chordal by construction");
        let chi = crate::chordal::peo_coloring(&g, &peo)
            .into_iter()
            .max()
            .map_or(0, |c| c + 1);
        let half = chi.div_ceil(2);
        row.formula = Cell::Value(half);
        row.info("chi", chi);
        if let Some(c) = row.coloring(&g, construct_chordal_half(&g)) {
            row.flag_if(c != half, "block-count");
        }
        if n <= CHORDAL_ORACLE_N {
            let chi1 = chi1_exact_with(&g, &limits).expect("within limits").0;
            let omega1 = omega1_exact_with(&g, &limits).expect("within limits").0;
            row.oracle = Cell::Value(chi1);
            row.info("omega1", omega1);
            row.flag_if(chi1 > half, "upper-violation");
            row.flag_if(omega1 > chi1, "omega1-violation");
        }
        row
    })
}

fn split(ctx: &Ctx) -> Vec<Row> {
    enum Item {
        Tight(usize),
        Random(usize, usize, Graph),
    }
    let mut items: Vec<Item> = (3..=ctx.limit_n).map(Item::Tight).collect();
    let mut rng = ctx.rng(4);
    for i in 0..ctx.samples {
        let n = rng.gen_range(4..=12);
        let a = rng.gen_range(3..n);
        let p = rng.gen_range(0.1..0.9);
        items.push(Item::Random(i, a, random_split(&mut rng, a, n, p)));
    }
    evaluate(&items, |item| match item {
        Item::Tight(t) => {
            let t = *t;
            let (g, _) = gen_split_tight(t).expect("t >= 3");
            let desc = format!("splittight:{t}");
            if ctx.too_big(&g) {
                return skipped(desc);
            }
            let mut row = Row::new(desc);
            let formula = chi1_split_upper(t).expect("t >= 3");
            row.formula = Cell::Value(formula);
            match chi1_exact(&g) {
                Ok((oracle, _)) => {
                    row.oracle = Cell::Value(oracle);
                    row.flag_if(oracle != formula, "mismatch");
                }
                Err(_) => row.oracle = Cell::Skipped,
            }
            let a: Vec<usize> = (0..t).collect();
            let b: Vec<usize> = (t..2 * t).collect();
            if let Some(c) = row.coloring(&g, construct_split_coloring(&g, &a, &b)) {
                row.flag_if(c != formula, "constr-mismatch");
            }
            row
        }
        Item::Random(i, a, g) => {
            let desc = format!("randomsplit:{i}:n{}:a{a}", g.n());
            if ctx.too_big(g) {
                return skipped(desc);
            }
            let mut row = Row::new(desc);
            // Move clique-dominating independent vertices into the clique so
            // that the clique is maximum.
            let mut clique: Vec<usize> = (0..*a).collect();
            let mut independent: Vec<usize> = (*a..g.n()).collect();
            if let Some(pos) = independent
                .iter()
                .position(|&b| clique.iter().all(|&x| g.has_edge(x, b)))
            {
                clique.push(independent.remove(pos));
            }
            let chi = clique.len();
            let formula = chi1_split_upper(chi).expect("clique of size >= 3");
            row.formula = Cell::Value(formula);
            row.info("chi", chi);
            let oracle = chi1_exact(g).expect("within limits").0;
            row.oracle = Cell::Value(oracle);
            row.flag_if(oracle > formula, "upper-violation");
            if let Some(c) = row.coloring(g, construct_split_coloring(g, &clique, &independent)) {
                row.flag_if(c > formula, "constr-above-bound");
            }
            row
        }
    })
}

fn rtower(ctx: &Ctx) -> Vec<Row> {
    let ks: Vec<usize> = (2..=ctx.limit_n.min(6)).collect();
    evaluate(&ks, |&k| {
        let (g, _) = gen_r_tower(k).expect("k >= 2");
        let desc = format!("rtower:{k}:n{}", g.n());
        if ctx.too_big(&g) {
            return skipped(desc);
        }
        let mut row = Row::new(desc);
        let target = k.div_ceil(2);
        row.formula = Cell::Value(target);
        match chi1_exact(&g) {
            Ok((oracle, cert)) => {
                row.oracle = Cell::Value(oracle);
                row.flag_if(oracle != target, "mismatch");
                row.coloring(&g, Ok(cert));
            }
            Err(_) => row.oracle = Cell::Skipped,
        }
        if g.n() <= Limits::default().omega1 {
            let omega1 = omega1_exact(&g).expect("within limits").0;
            row.info("omega1", omega1);
            row.flag_if(omega1 != target, "omega1-mismatch");
        }
        row
    })
}

/// Largest graph on which the unit interval suite runs the oracle.
pub const UNIT_INTERVAL_ORACLE_N: usize = 16;

fn unit_interval(ctx: &Ctx) -> Vec<Row> {
    let mut items = Vec::new();
    for p in 1..=8 {
        for n in 1..=ctx.limit_n {
            items.push((n, p));
        }
    }
    evaluate(&items, |&(n, p)| {
        let desc = format!("pathpower:{n},{p}");
        let (g, cert) = match construct_unit_interval_coloring(n, p, None) {
            Ok(x) => x,
            Err(_) => {
                let mut row = Row::new(desc);
                row.flag("construction-error");
                return row;
            }
        };
        if ctx.too_big(&g) {
            return skipped(desc);
        }
        let mut row = Row::new(desc);
        let chi = n.min(p + 1);
        let bound = (p + 1).div_ceil(3) + 2;
        row.formula = Cell::Value(bound);
        row.info("chi", chi);
        if let Some(c) = row.coloring(&g, Ok(cert)) {
            row.flag_if(c > bound, "block-bound");
            // c - χ/3 ≤ 2
            row.flag_if(3 * c > chi + 6, "gap");
            if n <= UNIT_INTERVAL_ORACLE_N {
                let oracle = chi1_exact(&g).expect("within limits").0;
                row.oracle = Cell::Value(oracle);
                row.flag_if(oracle < chi.div_ceil(3), "lower-violation");
                row.flag_if(oracle > c, "upper-violation");
            }
        }
        row
    })
}

fn kneser(ctx: &Ctx) -> Vec<Row> {
    #[derive(Clone, Copy)]
    enum Item {
        Alpha(usize, usize),
        Alpha1(usize, usize),
        Chi1(usize, usize),
        ThreeK(usize),
        Petersen,
        Bounds,
    }
    let mut items = Vec::new();
    for n in 4..=ctx.limit_n.min(7) {
        items.push(Item::Alpha(n, 2));
    }
    for n in 5..=ctx.limit_n.min(12) {
        items.push(Item::Alpha1(n, 2));
    }
    for n in 7..=ctx.limit_n.min(9) {
        items.push(Item::Alpha1(n, 3));
    }
    for n in 4..=ctx.limit_n {
        items.push(Item::Chi1(n, 2));
    }
    for n in 6..=ctx.limit_n.min(10) {
        items.push(Item::Chi1(n, 3));
    }
    items.push(Item::ThreeK(2));
    items.push(Item::ThreeK(3));
    items.push(Item::Petersen);
    items.push(Item::Bounds);
    evaluate(&items, |&item| match item {
        Item::Alpha(n, k) => {
            let mut row = Row::new(format!("kneser-alpha:{n},{k}"));
            let (g, _) = gen_kneser(n, k).expect("valid parameters");
            let ekr = ekr_bound(n, k).expect("valid parameters");
            row.formula = Cell::Value(ekr);
            let alpha = independence_number(&g).expect("within limits").0;
            row.oracle = Cell::Value(alpha);
            row.flag_if(alpha != ekr, "mismatch");
            row
        }
        Item::Alpha1(n, k) => {
            let mut row = Row::new(format!("kneser-alpha1:{n},{k}"));
            let target = ekr_bound(n, k).expect("valid parameters") + 1;
            row.formula = Cell::Value(target);
            match construct_kneser_alpha1(n, k) {
                Ok((g, cert)) => match verify_robust_independent(&g, &cert) {
                    Ok(()) => {
                        row.constr = Cell::Value(cert.len());
                        row.flag_if(cert.len() != target, "size-mismatch");
                    }
                    Err(e) => row.flag(format!("invalid-certificate:{}", e.tag())),
                },
                Err(_) => row.flag("construction-error"),
            }
            row
        }
        Item::Chi1(n, k) => {
            let mut row = Row::new(format!("kneser-chi1:{n},{k}"));
            let c = kneser_chi1_c(n, k).expect("valid parameters");
            row.formula = Cell::Value(n - c + 1);
            row.info("c", c);
            match construct_kneser_chi1(n, k) {
                Ok((g, cert, _)) => {
                    let blocks = row.coloring(&g, Ok(cert));
                    row.flag_if(blocks.is_some_and(|b| b != n - c + 1), "block-count");
                    if g.n() <= 10 {
                        let oracle = chi1_exact(&g).expect("within limits").0;
                        row.oracle = Cell::Value(oracle);
                        row.flag_if(blocks.is_some_and(|b| oracle > b), "upper-violation");
                    }
                }
                Err(_) => row.flag("construction-error"),
            }
            row
        }
        Item::ThreeK(k) => {
            let mut row = Row::new(format!("kneser-3k-family:{k}"));
            let target = binomial(3 * k - 1, k - 1) + 2;
            row.formula = Cell::Value(target);
            match construct_kneser_3k_family(k) {
                Ok((g, cert)) => match verify_robust_independent(&g, &cert) {
                    Ok(()) => {
                        row.constr = Cell::Value(cert.len());
                        row.flag_if(cert.len() != target, "size-mismatch");
                    }
                    Err(e) => row.flag(format!("invalid-certificate:{}", e.tag())),
                },
                Err(_) => row.flag("construction-error"),
            }
            row
        }
        Item::Petersen => {
            let mut row = Row::new("kneser-alpha1-exact:5,2");
            let (g, _) = gen_kneser(5, 2).expect("valid parameters");
            let (alpha1, cert) = alpha1_exact(&g).expect("within limits");
            row.oracle = Cell::Value(alpha1);
            row.formula = Cell::Value(ekr_bound(5, 2).expect("valid") + 1);
            if verify_robust_independent(&g, &cert).is_ok() {
                row.constr = Cell::Value(cert.len());
            } else {
                row.flag("invalid-certificate");
            }
            row.flag_if(alpha1 < 6, "below-six");
            row.flag_if(alpha1 < 5, "below-formula");
            row
        }
        Item::Bounds => {
            let mut row = Row::new("kneser-bounds:ekr(5,2),ekr(4,2),hm(7,3)");
            let values = [
                ekr_bound(5, 2).expect("valid"),
                ekr_bound(4, 2).expect("valid"),
                hm_bound(7, 3).expect("valid"),
            ];
            row.info(
                "values",
                format!("{},{},{}", values[0], values[1], values[2]),
            );
            row.flag_if(values != [4, 3, 13], "mismatch");
            row
        }
    })
}

fn removable_lemma(ctx: &Ctx) -> Vec<Row> {
    let graphs: Vec<Graph> = (0..=ctx.limit_n.min(5)).flat_map(all_graphs).collect();
    evaluate(&graphs, |g| {
        let mut row = Row::new(format!("labeled:{}", mask_desc(g)));
        if ctx.too_big(g) {
            row.oracle = Cell::Skipped;
            return row;
        }
        let images = removal_image_masks(g).expect("within limits");
        let mut lemma_count = 0;
        let mut mismatches = 0;
        for mask in 0..1u64 << g.m() {
            let subset = EdgeSubset::from_index_mask(g, mask);
            let removable = is_removable_edge_set(g, &subset).expect("subset of g");
            lemma_count += removable as usize;
            mismatches += (removable != images.contains(&mask)) as usize;
        }
        row.oracle = Cell::Value(images.len());
        row.formula = Cell::Value(lemma_count);
        row.flag_if(mismatches > 0, "lemma-mismatch");
        let pairs = [
            ("chi1", chi1_exact(g).map(|x| x.0), chi1_by_definition(g)),
            (
                "alpha1",
                alpha1_exact(g).map(|x| x.0),
                alpha1_by_definition(g),
            ),
            (
                "omega1",
                omega1_exact(g).map(|x| x.0),
                omega1_by_definition(g),
            ),
        ];
        for (name, fast, slow) in pairs {
            let (fast, slow) = (fast.expect("within limits"), slow.expect("within limits"));
            row.info(name, fast);
            if fast != slow {
                row.flag(format!("{name}-mismatch"));
            }
        }
        row
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_count() {
        let counts: Vec<usize> = (1..=11).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn row_format() {
        let mut row = Row::new("multipartite:1,1,2");
        row.oracle = Cell::Value(2);
        row.formula = Cell::Value(1);
        row.mode = "as_printed".to_string();
        row.constr = Cell::Value(2);
        row.flag("mismatch");
        row.info("bound", 2);
        assert_eq!(
            row.to_string(),
            "row multipartite:1,1,2 oracle=2 formula=1/as_printed constr=2 flags=mismatch bound=2"
        );
    }

    #[test]
    fn small_tripartite_suite() {
        let report = run(
            Suite::Tripartite,
            &Options {
                limit_n: Some(6),
                ..Options::default()
            },
        )
        .unwrap();
        assert_eq!(report.count("mismatch"), 0);
        assert!(report.rows.iter().any(|r| r.desc == "tripartite:1,1,2"));
        assert!(report.to_string().contains("summary tripartite rows="));
    }
}
