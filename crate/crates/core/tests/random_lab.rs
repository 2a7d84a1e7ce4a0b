use blowup_ramsey::colouring::robustness;
use blowup_ramsey::random_lab::{arrow_experiment, estimate_robustness, sample_gnp, sample_gnp_stream};
use blowup_ramsey::{Graph, SearchConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn edge_marginals_match_p() {
    let (n, p, seeds) = (9usize, 0.3, 10_000u64);
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let picks: Vec<(usize, usize)> = (0..5)
        .map(|_| {
            let u = rng.gen_range(0..n - 1);
            (u, rng.gen_range(u + 1..n))
        })
        .collect();
    let mut hits = [0u64; 5];
    let mut edges = 0u64;
    for seed in 0..seeds {
        let g = sample_gnp(n, p, seed).unwrap();
        edges += g.edge_count() as u64;
        for (k, &(u, v)) in picks.iter().enumerate() {
            hits[k] += u64::from(g.has_edge(u, v));
        }
    }
    let se = (p * (1.0 - p) / seeds as f64).sqrt();
    for (k, &h) in hits.iter().enumerate() {
        let freq = h as f64 / seeds as f64;
        assert!((freq - p).abs() <= 3.0 * se, "edge {:?}: {freq}", picks[k]);
    }
    let pairs = (n * (n - 1) / 2) as f64;
    let mean = edges as f64 / seeds as f64;
    let mean_se = (pairs * p * (1.0 - p) / seeds as f64).sqrt();
    assert!((mean - pairs * p).abs() <= 3.0 * mean_se, "mean edge count {mean}");
}

#[test]
fn streams_are_independent_of_evaluation_order() {
    let forward: Vec<Graph> = (0..6).map(|i| sample_gnp_stream(10, 0.5, 3, i).unwrap()).collect();
    let backward: Vec<Graph> = (0..6).rev().map(|i| sample_gnp_stream(10, 0.5, 3, i).unwrap()).collect();
    assert!(forward.iter().eq(backward.iter().rev()));
}

#[test]
fn tables_identical_across_thread_counts() {
    let k3 = Graph::complete(3);
    let grid = [0.3, 0.5, 0.7, 0.9];
    let one = arrow_experiment(&k3, 2, 7, &grid, 12, 99, &SearchConfig::default()).unwrap();
    let four = arrow_experiment(&k3, 2, 7, &grid, 12, 99, &SearchConfig::default().with_threads(4)).unwrap();
    assert_eq!(one.to_csv(), four.to_csv());
    assert_eq!(one.to_json(), four.to_json());
}

#[test]
fn complete_host_always_arrows() {
    let exp = arrow_experiment(&Graph::complete(3), 2, 8, &[1.0], 10, 5, &SearchConfig::default()).unwrap();
    assert_eq!(exp.rows[0].arrow_freq, 1.0);
}

#[test]
fn budgeted_samples_are_reported_undecided() {
    let exp = arrow_experiment(&Graph::complete(3), 2, 8, &[1.0], 4, 5, &SearchConfig::default().with_budget(1)).unwrap();
    let row = &exp.rows[0];
    assert_eq!(row.arrows + row.undecided, 4);
    assert!(row.undecided > 0);
    assert!((row.undecided_frac + row.exact_fraction - 1.0).abs() < 1e-12);
}

#[test]
fn inexact_estimates_bound_the_robustness_from_above() {
    let cfg = SearchConfig::default();
    let k3 = Graph::complete(3);
    for (g, h) in [(Graph::complete(6), k3.clone()), (Graph::complete(7), k3.clone()), (Graph::complete(5), Graph::path(3))] {
        let exact = robustness(&g, &h, 2, &cfg).unwrap();
        for (budget, seed) in [(1, 1), (5, 2), (40, 3), (200, 4)] {
            let est = estimate_robustness(&g, &h, 2, budget, seed).unwrap();
            assert!(est.value >= exact, "{g}: {} < {exact}", est.value);
            if est.exact {
                assert_eq!(est.value, exact);
            }
        }
    }
}
