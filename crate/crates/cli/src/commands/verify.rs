//! Oracle cross-checks over small exhaustively enumerable fixtures.

use std::time::{Duration, Instant};

use karger_core::contraction::{oracle_score, StScore, WeightScore};
use karger_core::exact::*;
use karger_core::graph::{
    make_complete_graph, make_star_counterexample, random_connected_graph, WeightPattern,
};
use karger_core::potentials::random_walker_potential;
use karger_core::rng::rng_from_seed;
use karger_core::{Graph, SeedMap};
use rand::Rng;

/// Fixture generators shared with the acceptance suite.
pub mod fixtures {
    use super::*;

    /// Every connected labelled graph on `n` vertices, as edge lists.
    pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect::<Vec<_>>()
            })
            .filter(|edges| Graph::new(n, edges.iter().map(|&(u, v)| (u, v, 1.0))).is_ok())
            .collect()
    }

    /// All-unit weights and an alternating 2:1 pattern.
    pub fn weight_patterns(edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize, f64)>> {
        vec![
            edges.iter().map(|&(u, v)| (u, v, 1.0)).collect(),
            edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (u, v, if i % 2 == 0 { 2.0 } else { 1.0 }))
                .collect(),
        ]
    }

    /// Two labels at the ends; on 4+ vertices also three labels and a
    /// label with two seeds.
    pub fn seed_placements(n: usize) -> Vec<SeedMap> {
        let mut out = vec![SeedMap::from_pairs(n, [(0, 1), (n - 1, 2)]).unwrap()];
        if n >= 4 {
            out.push(SeedMap::from_pairs(n, [(0, 1), (1, 2), (n - 1, 3)]).unwrap());
            out.push(SeedMap::from_pairs(n, [(0, 1), (1, 1), (n - 1, 2)]).unwrap());
        }
        out
    }

    /// Every (graph, seeds) pair on 2..=5 vertices.
    pub fn exhaustive_seeded() -> Vec<(Graph, SeedMap)> {
        let mut out = Vec::new();
        for n in 2..=5 {
            for edges in connected_graphs(n) {
                for weighted in weight_patterns(&edges) {
                    let g = Graph::new(n, weighted).unwrap();
                    for seeds in seed_placements(n) {
                        out.push((g.clone(), seeds));
                    }
                }
            }
        }
        out
    }

    /// Random connected graphs, alternating unit and uniform random weights.
    pub fn random_graphs(
        count: usize,
        min_n: usize,
        max_n: usize,
        max_edges: usize,
        seed: u64,
    ) -> Vec<Graph> {
        let mut rng = rng_from_seed(seed);
        let mut out = Vec::new();
        while out.len() < count {
            let n = rng.random_range(min_n..=max_n);
            let pattern = if out.len() % 2 == 0 {
                WeightPattern::Unit
            } else {
                WeightPattern::Uniform { low: 0.2, high: 3.0 }
            };
            let g = random_connected_graph(n, 0.4, pattern, &mut rng).unwrap();
            if g.edge_count() <= max_edges {
                out.push(g);
            }
        }
        out
    }

    pub fn end_seeds(n: usize) -> SeedMap {
        SeedMap::from_pairs(n, [(0, 1), (n - 1, 2)]).unwrap()
    }
}

use fixtures::*;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type CheckResult = Result<String, String>;
type CheckFn = Box<dyn Fn() -> CheckResult>;

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Scales the first edge weight by 1.5, standing in for a corrupted fixture.
fn perturb(g: &Graph) -> Graph {
    g.map_weights(|i, e| if i == 0 { e.weight * 1.5 } else { e.weight })
        .unwrap()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn gibbs_vs_rw(fault: bool) -> CheckResult {
    let mut cases = exhaustive_seeded();
    cases.extend(random_graphs(20, 3, 7, 8, 21).into_iter().map(|g| {
        let n = g.vertex_count();
        (g, end_seeds(n))
    }));
    let mut worst: f64 = 0.0;
    for (g, seeds) in &cases {
        let marginals = gibbs_distribution(g, seeds).map_err(err)?.marginals(g, seeds);
        let rw_graph = if fault { perturb(g) } else { g.clone() };
        let rw = random_walker_potential(&rw_graph, seeds, 1e-12).map_err(err)?;
        for (v, row) in marginals.iter().enumerate() {
            for (l, p) in row.iter().enumerate() {
                worst = worst.max((p - rw.get(v, l as u32 + 1)).abs());
            }
        }
    }
    let detail = format!("{} graphs, max |diff| {worst:.1e}", cases.len());
    if worst <= 1e-8 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn evaluators_agree(fault: bool) -> CheckResult {
    let mut cases: Vec<(Graph, SeedMap)> = exhaustive_seeded().into_iter().step_by(7).collect();
    cases.extend(random_graphs(10, 3, 6, 7, 3).into_iter().map(|g| {
        let n = g.vertex_count();
        (g, end_seeds(n))
    }));
    let mut worst: f64 = 0.0;
    for (g, seeds) in &cases {
        let a = contraction_distribution(g, seeds).map_err(err)?;
        let other = if fault { perturb(g) } else { g.clone() };
        let b = contraction_distribution_by_sequences(&other, seeds).map_err(err)?;
        worst = worst
            .max(a.max_difference(&b))
            .max((a.total_probability() - 1.0).abs());
    }
    let detail = format!("{} graphs, max |diff| {worst:.1e}", cases.len());
    if worst <= 1e-9 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn karger_bound(fault: bool) -> CheckResult {
    let mut lowest = f64::INFINITY;
    let graphs = random_graphs(30, 3, 7, 21, 77);
    for g in &graphs {
        let n = g.vertex_count();
        let mincut = brute_force_global_mincut(g).map_err(err)?;
        let sampled = if fault { perturb(g) } else { g.clone() };
        let dist = exact_cut_distribution(&sampled, &WeightScore, None, None).map_err(err)?;
        for cut in &mincut.minimizers {
            lowest = lowest.min(probability_of_partition(&dist, cut) * binomial(n, 2));
        }
    }
    let detail = format!("{} graphs, min P(cut) * C(n,2) = {lowest:.4}", graphs.len());
    if lowest >= 1.0 - 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn oracle_recovers_mincut() -> CheckResult {
    let graphs = random_graphs(20, 3, 8, 28, 99);
    for g in &graphs {
        let n = g.vertex_count();
        let target = brute_force_st_mincut(g, 0, n - 1).map_err(err)?;
        let cut_set = g.cut_set(&target.cut.assignment);
        let dist =
            exact_cut_distribution(g, &oracle_score(g, &cut_set), Some(0), Some(n - 1)).map_err(err)?;
        let p = probability_of_partition(&dist, &target.cut.assignment);
        if (p - 1.0).abs() > 1e-12 {
            return Err(format!("oracle success {p} on {g:?}"));
        }
    }
    Ok(format!("{} graphs, success probability 1", graphs.len()))
}

fn star_exact(fault: bool) -> CheckResult {
    let mut worst: f64 = 0.0;
    for n in 3..=MAX_EXACT_VERTICES {
        let star = make_star_counterexample(n).map_err(err)?;
        let g = if fault { perturb(&star.graph) } else { star.graph };
        let p = exact_karger_success(&g, Some(star.s), Some(star.t), &StScore).map_err(err)?;
        worst = worst.max((p - (2.0f64 / 3.0).powi(n as i32 - 2)).abs());
    }
    let detail = format!("n=3..{MAX_EXACT_VERTICES}, max |diff| {worst:.1e}");
    if worst <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn mincut_counts() -> CheckResult {
    let mut rng = rng_from_seed(50);
    for _ in 0..50 {
        let n = rng.random_range(2..=9);
        let g = random_connected_graph(n, 0.3, WeightPattern::Integer { max: 2 }, &mut rng).map_err(err)?;
        let r = brute_force_global_mincut(&g).map_err(err)?;
        if r.minimizer_count() as f64 > binomial(n, 2) {
            return Err(format!("{} minimizers on {n} vertices", r.minimizer_count()));
        }
        if r.minimizers
            .iter()
            .any(|c| (g.cut_weight(c) - r.value).abs() > 1e-9)
        {
            return Err("minimizer weight differs from reported value".into());
        }
    }
    Ok("50 graphs, count <= C(n,2)".into())
}

fn ncut_identity() -> CheckResult {
    let mut worst: f64 = 0.0;
    for n in 3..=8 {
        let g = make_complete_graph(n).map_err(err)?;
        let expected = n as f64 / (n as f64 - 1.0);
        for mask in 1u32..(1 << (n - 1)) {
            let in_a: Vec<bool> = (0..n).map(|b| b < n - 1 && mask >> b & 1 == 1).collect();
            worst = worst.max((ncut_cost(&g, &in_a).map_err(err)? - expected).abs());
        }
    }
    let detail = format!("K3..K8 all bipartitions, max |diff| {worst:.1e}");
    if worst <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Runs every check. With `inject_fault` one fixture weight is perturbed on
/// one side of the graph comparisons; the equality checks must then fail.
pub fn run_verify(inject_fault: bool) -> Vec<CheckOutcome> {
    let checks: Vec<(&'static str, CheckFn)> = vec![
        (
            "gibbs marginals = random walker",
            Box::new(move || gibbs_vs_rw(inject_fault)),
        ),
        (
            "ordering sum = sequence recursion",
            Box::new(move || evaluators_agree(inject_fault)),
        ),
        (
            "mincut probability >= 1/C(n,2)",
            Box::new(move || karger_bound(inject_fault)),
        ),
        ("oracle score finds s-t mincut", Box::new(oracle_recovers_mincut)),
        (
            "star success = (2/3)^(n-2)",
            Box::new(move || star_exact(inject_fault)),
        ),
        ("global mincut count bound", Box::new(mincut_counts)),
        ("ncut of complete graph", Box::new(ncut_identity)),
    ];
    checks
        .into_iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let result = check();
            let elapsed = start.elapsed();
            let passed = result.is_ok();
            let detail = result.unwrap_or_else(|e| e);
            CheckOutcome {
                name,
                passed,
                detail,
                elapsed,
            }
        })
        .collect()
}

pub fn render_table(outcomes: &[CheckOutcome]) -> String {
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&format!(
            "{:<width$}  {}  {:>7.2}s  {}\n",
            o.name,
            if o.passed { "PASS" } else { "FAIL" },
            o.elapsed.as_secs_f64(),
            o.detail
        ));
    }
    out
}
