use blowup_ramsey::colouring::check::{has_monochromatic_canonical_blowup, monochromatic_copy_count};
use blowup_ramsey::colouring::{arrows, canonical_arrows, multiplicity, robustness};
use blowup_ramsey::graph::copy_count;
use blowup_ramsey::{BlowupGraph, Graph, SearchConfig, Verdict};
use num_rational::Rational64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn seeded(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Small hosts and patterns, each pair cheap to decide exactly.
fn corpus() -> Vec<(Graph, Graph, usize)> {
    let k = Graph::complete;
    vec![
        (k(5), k(3), 2),
        (k(6), k(3), 2),
        (k(4), Graph::path(3), 2),
        (Graph::cycle(5), Graph::path(3), 2),
        (Graph::cycle(6), k(2), 2),
        (k(5), Graph::path(3), 3),
        (Graph::complete_bipartite(3, 3), Graph::path(3), 2),
        (k(4), k(3), 1),
        (Graph::cycle(7), Graph::path(4), 2),
    ]
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn arrows_iff_positive_multiplicity() {
    let cfg = SearchConfig::default();
    for (g, h, r) in corpus() {
        let a = arrows(&g, &h, r, &cfg).unwrap().verdict;
        let m = multiplicity(&g, &h, r, &cfg).unwrap();
        assert!(m.exact);
        assert_eq!(a == Verdict::True, m.count.unwrap() >= 1, "{g} vs {h}, r = {r}");
    }
}

#[test]
fn more_colours_never_increase_multiplicity() {
    let cfg = SearchConfig::default();
    for (g, h, _) in corpus() {
        let counts: Vec<u64> = (1..=3).map(|r| multiplicity(&g, &h, r, &cfg).unwrap().count.unwrap()).collect();
        assert!(counts.windows(2).all(|w| w[1] <= w[0]), "{g} vs {h}: {counts:?}");
    }
}

#[test]
fn witnesses_rescore_to_claimed_count() {
    let cfg = SearchConfig::default();
    for (g, h, r) in corpus() {
        let m = multiplicity(&g, &h, r, &cfg).unwrap();
        let w = m.witness.expect("multiplicity carries a witness");
        assert_eq!(monochromatic_copy_count(&w, &h), m.count.unwrap());
        let a = arrows(&g, &h, r, &cfg).unwrap();
        if a.verdict == Verdict::False {
            assert_eq!(monochromatic_copy_count(a.witness.as_ref().unwrap(), &h), 0);
        }
    }
}

#[test]
fn triangle_robustness_in_cliques() {
    let cfg = SearchConfig::default().with_threads(0);
    let k3 = Graph::complete(3);
    let values: Vec<Rational64> = (5..=7).map(|n| robustness(&Graph::complete(n), &k3, 2, &cfg).unwrap()).collect();
    assert_eq!(values, vec![Rational64::new(0, 1), Rational64::new(1, 10), Rational64::new(4, 35)]);
    assert!(values.windows(2).all(|w| w[0] <= w[1]));
    assert!(values.iter().all(|&v| v <= Rational64::new(1, 4)));
}

#[test]
fn canonical_arrowing_is_monotone_near_the_boundary() {
    let k2 = Graph::complete(2);
    let cfg = SearchConfig::default();
    let verdicts: Vec<Verdict> = (1..=6).map(|n| canonical_arrows(&k2, &k2, 2, 2, n, &cfg).unwrap().verdict).collect();
    assert_eq!(verdicts[..4], [Verdict::False; 4]);
    assert_eq!(verdicts[4..], [Verdict::True; 2]);
}

#[test]
fn canonical_witness_has_no_monochromatic_blowup() {
    let k2 = Graph::complete(2);
    let out = canonical_arrows(&k2, &k2, 2, 2, 4, &SearchConfig::default()).unwrap();
    let host = BlowupGraph::uniform(&k2, 4).unwrap();
    assert!(!has_monochromatic_canonical_blowup(out.witness.as_ref().unwrap(), &host, &k2, 2));
}

#[test]
fn thread_count_does_not_change_results() {
    for (g, h, r) in corpus() {
        let one = multiplicity(&g, &h, r, &SearchConfig::default()).unwrap();
        let many = multiplicity(&g, &h, r, &SearchConfig::default().with_threads(4)).unwrap();
        assert_eq!(one.count, many.count);
        assert_eq!(
            monochromatic_copy_count(one.witness.as_ref().unwrap(), &h),
            monochromatic_copy_count(many.witness.as_ref().unwrap(), &h)
        );
        let a1 = arrows(&g, &h, r, &SearchConfig::default()).unwrap().verdict;
        let a4 = arrows(&g, &h, r, &SearchConfig::default().with_threads(4)).unwrap().verdict;
        assert_eq!(a1, a4);
    }
}

#[test]
fn pruning_flag_does_not_change_verdicts() {
    for (g, h, r) in corpus() {
        let on = multiplicity(&g, &h, r, &SearchConfig::default()).unwrap().count;
        let off = multiplicity(&g, &h, r, &SearchConfig::default().without_automorphisms()).unwrap().count;
        assert_eq!(on, off, "{g} vs {h}");
    }
}

proptest! {
    #![proptest_config(seeded(300, 0x5eed_0001))]

    #[test]
    fn one_colour_multiplicity_is_copy_count(g in graph_strategy(7), pick in 0usize..4) {
        let h = [Graph::complete(2), Graph::path(3), Graph::complete(3), Graph::cycle(4)][pick].clone();
        let m = multiplicity(&g, &h, 1, &SearchConfig::default()).unwrap();
        prop_assert_eq!(m.count.unwrap(), copy_count(&h, &g));
    }

    #[test]
    fn random_host_arrowing_matches_multiplicity(g in graph_strategy(6)) {
        let h = Graph::path(3);
        let cfg = SearchConfig::default();
        let a = arrows(&g, &h, 2, &cfg).unwrap();
        let m = multiplicity(&g, &h, 2, &cfg).unwrap();
        prop_assert_eq!(a.verdict == Verdict::True, m.count.unwrap() >= 1);
        prop_assert_eq!(monochromatic_copy_count(m.witness.as_ref().unwrap(), &h), m.count.unwrap());
    }
}
