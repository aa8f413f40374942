mod common;

use common::*;
use karger_core::contraction::WeightScore;
use karger_core::exact::*;
use karger_core::graph::{make_complete_graph, make_star_counterexample};
use karger_core::potentials::random_walker_potential;
use karger_core::rng::rng_from_seed;
use karger_core::{Graph, SeedMap};
use rand::Rng;

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn assert_gibbs_matches_rw(g: &Graph, seeds: &SeedMap) {
    let gibbs = gibbs_distribution(g, seeds).unwrap();
    assert!((gibbs.total_probability() - 1.0).abs() < 1e-9);
    let marginals = gibbs.marginals(g, seeds);
    let rw = random_walker_potential(g, seeds, 1e-12).unwrap();
    for (v, row) in marginals.iter().enumerate() {
        for (l, &p) in row.iter().enumerate() {
            let q = rw.get(v, l as u32 + 1);
            assert!(
                (p - q).abs() < 1e-8,
                "v={v} l={}: gibbs {p} rw {q} on {g:?}",
                l + 1
            );
        }
    }
}

#[test]
fn gibbs_marginals_equal_random_walker_exhaustively() {
    let mut checked = 0;
    for n in 2..=5 {
        for edges in connected_graphs(n) {
            for weighted in weight_patterns(&edges) {
                let g = Graph::new(n, weighted).unwrap();
                for seeds in seed_placements(n) {
                    assert_gibbs_matches_rw(&g, &seeds);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 4000, "{checked}");
}

#[test]
fn gibbs_marginals_equal_random_walker_on_random_graphs() {
    for g in random_graphs(20, 3, 7, 8, 21) {
        assert_gibbs_matches_rw(&g, &end_seeds(g.vertex_count()));
    }
}

#[test]
fn two_contraction_evaluators_agree() {
    for n in 2..=5 {
        for edges in connected_graphs(n).into_iter().step_by(3) {
            for weighted in weight_patterns(&edges) {
                let g = Graph::new(n, weighted).unwrap();
                for seeds in seed_placements(n) {
                    let a = contraction_distribution(&g, &seeds).unwrap();
                    let b = contraction_distribution_by_sequences(&g, &seeds).unwrap();
                    assert!(a.max_difference(&b) < 1e-9, "{g:?}");
                    assert!((a.total_probability() - 1.0).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn contraction_distribution_sums_to_one_on_random_graphs() {
    for g in random_graphs(30, 3, 6, 16, 5) {
        let seeds = end_seeds(g.vertex_count());
        let d = contraction_distribution(&g, &seeds).unwrap();
        assert!((d.total_probability() - 1.0).abs() < 1e-9);
        let gibbs = gibbs_distribution(&g, &seeds).unwrap();
        assert_eq!(d.forests.len(), gibbs.forests.len());
    }
}

/// Forest counts of the 4-cycle, checked by subset enumeration in the test
/// itself.
#[test]
fn four_cycle_forest_count() {
    let g = four_cycle();
    let seeds = SeedMap::new(vec![1, 0, 2, 0]).unwrap();
    let mut brute = 0;
    for mask in 0u32..16 {
        let subset: Vec<usize> = (0..4).filter(|b| mask >> b & 1 == 1).collect();
        if subset.len() != 2 {
            continue;
        }
        // reject subsets connecting s and t or leaving a vertex without a seed
        let mut comp: Vec<usize> = (0..4).collect();
        for &e in &subset {
            let (a, b) = (comp[g.edge(e).u], comp[g.edge(e).v]);
            comp.iter_mut().filter(|c| **c == b).for_each(|c| *c = a);
        }
        let ok = comp[0] != comp[2] && (0..4).all(|v| comp[v] == comp[0] || comp[v] == comp[2]);
        brute += ok as usize;
    }
    assert_eq!(brute, 4);
    assert_eq!(enumerate_seed_forests(&g, &seeds).unwrap().len(), 4);
}

#[test]
fn every_global_mincut_has_karger_probability_bound() {
    for g in random_graphs(30, 3, 7, 21, 77) {
        let n = g.vertex_count();
        let mincut = brute_force_global_mincut(&g).unwrap();
        let dist = exact_cut_distribution(&g, &WeightScore, None, None).unwrap();
        let bound = 1.0 / binomial(n, 2);
        for cut in &mincut.minimizers {
            let p = probability_of_partition(&dist, cut);
            assert!(p >= bound - 1e-12, "p={p} < {bound} on {g:?}");
        }
    }
}

#[test]
fn global_mincut_count_is_bounded() {
    let mut rng = rng_from_seed(50);
    for _ in 0..50 {
        let n = rng.random_range(2..=9);
        let g = karger_core::graph::random_connected_graph(
            n,
            0.3,
            karger_core::graph::WeightPattern::Integer { max: 2 },
            &mut rng,
        )
        .unwrap();
        let r = brute_force_global_mincut(&g).unwrap();
        assert!(r.minimizer_count() as f64 <= binomial(n, 2));
    }
    // a cycle attains the bound
    let cycle = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6, 1.0))).unwrap();
    assert_eq!(brute_force_global_mincut(&cycle).unwrap().minimizer_count(), 15);
}

#[test]
fn star_st_mincut_is_unique() {
    for n in 3..=12 {
        let star = make_star_counterexample(n).unwrap();
        let r = brute_force_st_mincut(&star.graph, star.s, star.t).unwrap();
        assert_eq!(r.value, (n - 2) as f64);
        assert_eq!(r.minimizer_count(), 1);
    }
}

#[test]
fn ncut_identities() {
    for n in 3..=8 {
        let g = make_complete_graph(n).unwrap();
        let expected = n as f64 / (n as f64 - 1.0);
        for mask in 1u32..(1 << (n - 1)) {
            let in_a: Vec<bool> = (0..n).map(|b| b < n - 1 && mask >> b & 1 == 1).collect();
            assert!((ncut_cost(&g, &in_a).unwrap() - expected).abs() < 1e-12);
        }
    }
    let mut rng = rng_from_seed(8);
    for g in random_graphs(40, 3, 9, 40, 9) {
        let n = g.vertex_count();
        let mut in_a: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
        in_a[0] = true;
        in_a[n - 1] = false;
        let v = ncut_cost(&g, &in_a).unwrap();
        assert!((0.0..=2.0).contains(&v), "{v}");
    }
}

#[test]
fn cut_weight_two_ways() {
    let mut rng = rng_from_seed(4);
    for g in random_graphs(40, 2, 12, 66, 14) {
        let n = g.vertex_count();
        let side: Vec<u32> = (0..n).map(|_| rng.random_range(1..=2)).collect();
        let mut by_pairs = 0.0;
        for u in 0..n {
            for v in u + 1..n {
                if side[u] != side[v] {
                    by_pairs += g.weight_between(u, v);
                }
            }
        }
        assert!((g.cut_weight(&side) - by_pairs).abs() < 1e-9);
    }
}

#[test]
fn closure_is_monotone() {
    for g in random_graphs(20, 4, 7, 16, 31) {
        let seeds = end_seeds(g.vertex_count());
        for forest in enumerate_seed_forests(&g, &seeds).unwrap().into_iter().take(5) {
            for cut in 0..forest.len() {
                let small = closure(&g, &seeds, &forest[..cut]);
                let large = closure(&g, &seeds, &forest[..cut + 1]);
                assert!(small.iter().zip(&large).all(|(&a, &b)| !a || b));
            }
        }
    }
}

#[test]
fn exact_success_examples() {
    let star = make_star_counterexample(5).unwrap();
    let p = exact_karger_success(&star.graph, Some(0), Some(1), &karger_core::contraction::StScore).unwrap();
    assert!((p - 8.0 / 27.0).abs() < 1e-12);
    let star = make_star_counterexample(6).unwrap();
    let p = exact_karger_success(&star.graph, Some(0), Some(1), &karger_core::contraction::StScore).unwrap();
    assert!((p - 16.0 / 81.0).abs() < 1e-12);
}
