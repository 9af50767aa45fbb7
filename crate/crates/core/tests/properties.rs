mod common;

use proptest::prelude::*;

use common::Small;
use robcol::closed_form::{chi1_multipartite, multipartite_upper_bound, Mode};
use robcol::constructions::{
    construct_chordal_half, construct_multipartite_coloring, construct_threshold_coloring,
    construct_unit_interval_coloring,
};
use robcol::exact::{chromatic_number, clique_number, independence_number};
use robcol::families::{
    colex_rank, gen_random_chordal, gen_threshold, k_subsets_colex, threshold_partition, Step,
};
use robcol::graph::is_removable_edge_set;
use robcol::io::{self, CertificateFile};
use robcol::oracle::{
    alpha1_exact, chi1_exact, omega1_exact, verify_robust_coloring, verify_robust_independent,
};
use robcol::selection::apply_selection;
use robcol::{EdgeSubset, Graph};

fn small_graph(max_n: usize) -> impl Strategy<Value = Small> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), 0..1u64 << pairs).prop_map(|(n, m)| Small::from_mask(n, m))
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    small_graph(max_n).prop_map(|s| s.to_graph())
}

fn steps(max_len: usize) -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec(prop::bool::ANY, 1..=max_len).prop_map(|bits| {
        bits.into_iter()
            .map(|d| if d { Step::Dominating } else { Step::Isolated })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn robust_triple_matches_definition(s in small_graph(5)) {
        let g = s.to_graph();
        let got = (chi1_exact(&g).unwrap().0, alpha1_exact(&g).unwrap().0, omega1_exact(&g).unwrap().0);
        prop_assert_eq!(got, s.robust_triple());
    }

    #[test]
    fn robust_parameters_sit_between_classical_ones(g in graph(9)) {
        let (chi, _) = chromatic_number(&g).unwrap();
        let (alpha, _) = independence_number(&g).unwrap();
        let (omega, _) = clique_number(&g).unwrap();
        let (chi1, ccert) = chi1_exact(&g).unwrap();
        let (alpha1, icert) = alpha1_exact(&g).unwrap();
        let (omega1, _) = omega1_exact(&g).unwrap();
        prop_assert!(chi.div_ceil(3) <= chi1 && chi1 <= chi);
        prop_assert!(alpha1 >= alpha);
        prop_assert!(omega1 <= omega && omega1 <= chi1);
        prop_assert_eq!(chi1 == 1, g.n() > 0 && g.is_quasi_unicyclic());
        verify_robust_coloring(&g, &ccert).unwrap();
        verify_robust_independent(&g, &icert).unwrap();
        prop_assert_eq!(ccert.color_count(), chi1);
        prop_assert_eq!(icert.len(), alpha1);
    }

    #[test]
    fn applied_selection_removes_a_removable_set(g in graph(8)) {
        let (_, cert) = chi1_exact(&g).unwrap();
        let h = apply_selection(&g, &cert.selection).unwrap();
        prop_assert!(h.m() <= g.m() && g.m() <= h.m() + g.n());
        let removed: Vec<_> = g.edges().iter().copied().filter(|e| !h.has_edge(e.u(), e.v())).collect();
        let d = EdgeSubset::new(&g, removed).unwrap();
        prop_assert!(is_removable_edge_set(&g, &d).unwrap());
    }

    #[test]
    fn certificates_survive_a_file_round_trip(g in graph(8)) {
        let text = io::write_dimacs(&g, &[]);
        prop_assert_eq!(io::parse_dimacs(&text).unwrap(), g.clone());
        let (_, cert) = chi1_exact(&g).unwrap();
        let CertificateFile::Coloring { cert: back, .. } =
            io::parse_certificate(&io::write_coloring_certificate(&cert)).unwrap()
        else {
            panic!("wrong certificate kind")
        };
        verify_robust_coloring(&g, &back).unwrap();
        prop_assert_eq!(back.color_count(), cert.color_count());
    }

    #[test]
    fn threshold_partition_is_recovered(seq in steps(14)) {
        let (g, _) = gen_threshold(&seq).unwrap();
        let tp = threshold_partition(&g).unwrap();
        tp.validate(&g).unwrap();
        let cert = construct_threshold_coloring(&g, &tp).unwrap();
        verify_robust_coloring(&g, &cert).unwrap();
    }

    #[test]
    fn chordal_half_coloring(n in 1usize..60, density in 0.05f64..0.95, seed in any::<u64>()) {
        let (g, _) = gen_random_chordal(n, density, seed).unwrap();
        prop_assert!(robcol::chordal::is_chordal(&g));
        let peo = robcol::chordal::perfect_elimination_ordering(&g).unwrap();
        let chi = robcol::chordal::peo_coloring(&g, &peo).into_iter().max().map_or(0, |c| c + 1);
        let cert = construct_chordal_half(&g).unwrap();
        verify_robust_coloring(&g, &cert).unwrap();
        prop_assert_eq!(cert.color_count(), chi.div_ceil(2));
    }

    #[test]
    fn unit_interval_blocks(n in 1usize..80, p in 1usize..12) {
        let (g, cert) = construct_unit_interval_coloring(n, p, None).unwrap();
        verify_robust_coloring(&g, &cert).unwrap();
        prop_assert!(cert.color_count() <= (p + 1).div_ceil(3) + 2);
    }

    #[test]
    fn multipartite_construction_meets_formula(mut sizes in prop::collection::vec(1usize..6, 1..9)) {
        sizes.sort_unstable();
        let (g, _) = robcol::families::gen_complete_multipartite(&sizes).unwrap();
        let cert = construct_multipartite_coloring(&sizes).unwrap();
        verify_robust_coloring(&g, &cert).unwrap();
        let formula = chi1_multipartite(&sizes, Mode::OracleValidated).unwrap().value;
        prop_assert!(cert.color_count() >= formula);
        prop_assert!(formula <= multipartite_upper_bound(&sizes).unwrap());
    }
}

#[test]
fn colex_rank_is_position() {
    for (n, k) in [(5, 2), (7, 3), (9, 4)] {
        for (i, s) in k_subsets_colex(n, k).iter().enumerate() {
            assert_eq!(colex_rank(s), i, "rank of {s:?} in KG({n},{k})");
        }
    }
}

#[test]
fn multipartite_oracle_agrees_on_small_lists() {
    // Brute force from the definition on every ascending size list with total <= 5.
    fn lists(left: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
        }
        for p in min..=left {
            cur.push(p);
            lists(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    for total in 1..=5 {
        lists(total, 1, &mut Vec::new(), &mut all);
    }
    for sizes in all {
        let (g, _) = robcol::families::gen_complete_multipartite(&sizes).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
        let (chi1, _, _) = Small { n: g.n(), edges }.robust_triple();
        let f = chi1_multipartite(&sizes, Mode::OracleValidated).unwrap();
        assert_eq!(f.value, chi1, "sizes {sizes:?}");
    }
}
