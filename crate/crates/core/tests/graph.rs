use blowup_ramsey::graph::{automorphism_count, copy_count, count_canonical_copies, density_stats, inj_count, parse_graph};
use blowup_ramsey::{BlowupGraph, Graph};
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

fn graph_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Injective maps `V(h) -> V(g)` preserving edges, counted by brute force.
fn naive_inj(h: &Graph, g: &Graph) -> u64 {
    fn go(h: &Graph, g: &Graph, phi: &mut Vec<usize>) -> u64 {
        let i = phi.len();
        if i == h.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for x in 0..g.vertex_count() {
            if phi.contains(&x) || (0..i).any(|j| h.has_edge(i, j) && !g.has_edge(x, phi[j])) {
                continue;
            }
            phi.push(x);
            total += go(h, g, phi);
            phi.pop();
        }
        total
    }
    go(h, g, &mut Vec::new())
}

proptest! {
    #![proptest_config(seeded(400, 0x5eed_0101))]

    #[test]
    fn labelled_and_unlabelled_counts_agree(h in graph_strategy(1, 5), g in graph_strategy(1, 8)) {
        let inj = naive_inj(&h, &g);
        prop_assert_eq!(inj_count(&h, &g), inj);
        prop_assert_eq!(copy_count(&h, &g) * automorphism_count(&h), inj);
        prop_assert_eq!(automorphism_count(&h), naive_inj(&h, &h));
    }

    #[test]
    fn text_formats_reparse(g in graph_strategy(0, 12)) {
        prop_assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn two_density_exceeds_density_when_some_degree_is_two(h in graph_strategy(3, 6)) {
        prop_assume!(h.max_degree() >= 2);
        let d = density_stats(&h).unwrap();
        prop_assert!(d.max_density < d.two_density, "{}: m = {}, m2 = {}", h, d.max_density, d.two_density);
    }

    #[test]
    fn blowup_counts_match_closed_forms(h in graph_strategy(1, 4), sizes in proptest::collection::vec(1usize..=4, 4)) {
        let t = &sizes[..h.vertex_count()];
        let b = BlowupGraph::full(&h, t).unwrap();
        prop_assert_eq!(b.graph().vertex_count(), t.iter().sum::<usize>());
        let edges: usize = h.edges().iter().map(|&(i, j)| t[i] * t[j]).sum();
        prop_assert_eq!(b.graph().edge_count(), edges);
    }
}

#[test]
fn full_blowup_has_n_to_the_v_canonical_copies() {
    for v in 1..=4 {
        for h in [Graph::complete(v), Graph::path(v)] {
            for n in 1..=4usize {
                let host = BlowupGraph::uniform(&h, n).unwrap();
                assert_eq!(count_canonical_copies(&h, &host).unwrap(), (n as u64).pow(v as u32), "{h}[{n}]");
            }
        }
    }
    let c4 = Graph::cycle(4);
    assert_eq!(count_canonical_copies(&c4, &BlowupGraph::uniform(&c4, 3).unwrap()).unwrap(), 81);
}

#[test]
fn known_densities() {
    let d = density_stats(&Graph::complete(4)).unwrap();
    assert_eq!((d.average_degree, d.max_density, d.two_density), (Rational64::from(3), Rational64::new(3, 2), Rational64::new(5, 2)));
    assert_eq!(density_stats(&Graph::complete(2)).unwrap().two_density, Rational64::new(1, 2));
}
