use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use karger_core::graph::make_grid_graph;
use karger_core::rng::rng_from_seed;
use karger_core::{seeded_contraction_run, weighted_permutation, Graph, SeedMap};
use rand::Rng;

/// Grid sizes from about 2^14 to 2^20 edges, doubling each step.
pub const DEFAULT_SIZES: [(usize, usize); 7] = [
    (64, 128),
    (128, 128),
    (128, 256),
    (256, 256),
    (256, 512),
    (512, 512),
    (512, 1024),
];

pub const DEFAULT_BENCH_RUNS: usize = 5;

/// Random-intensity grid with one seed in each of two opposite corners.
pub fn grid_fixture(width: usize, height: usize, rng_seed: u64) -> Result<(Graph, SeedMap)> {
    let mut rng = rng_from_seed(rng_seed);
    let intensity: Vec<f64> = (0..width * height).map(|_| rng.random::<f64>()).collect();
    let graph = make_grid_graph(width, height, &intensity, 1.0)?;
    let n = width * height;
    let seeds = SeedMap::from_pairs(n, [(0, 1), (n - 1, 2)])?;
    Ok((graph, seeds))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub width: usize,
    pub height: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Median wall time of one seeded contraction run.
    pub median: Duration,
    /// Median time of the weighted permutation alone.
    pub permutation: Duration,
    /// Time relative to the previous (smaller) size.
    pub time_ratio: Option<f64>,
}

impl BenchRow {
    pub fn ns_per_edge(&self) -> f64 {
        self.median.as_nanos() as f64 / self.edges as f64
    }

    pub fn permutation_share(&self) -> f64 {
        self.permutation.as_secs_f64() / self.median.as_secs_f64()
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Times seeded contraction on grids of increasing size. Each size gets one
/// warm-up run, then `runs` timed runs.
pub fn run_bench(sizes: &[(usize, usize)], runs: usize, rng_seed: u64) -> Result<Vec<BenchRow>> {
    if runs == 0 {
        bail!("--runs must be >= 1");
    }
    if sizes.is_empty() {
        bail!("no grid sizes given");
    }
    let mut rows: Vec<BenchRow> = Vec::new();
    for &(width, height) in sizes {
        if width * height < 2 {
            bail!("grid {width}x{height} is too small");
        }
        let (graph, seeds) = grid_fixture(width, height, rng_seed)?;
        let weights: Vec<f64> = graph.edges().iter().map(|e| e.weight).collect();
        seeded_contraction_run(&graph, &seeds, rng_seed)?;
        let mut total = Vec::with_capacity(runs);
        let mut perm = Vec::with_capacity(runs);
        for i in 0..runs as u64 {
            let start = Instant::now();
            std::hint::black_box(seeded_contraction_run(&graph, &seeds, rng_seed + i)?);
            total.push(start.elapsed());
            let start = Instant::now();
            std::hint::black_box(weighted_permutation(&weights, rng_seed + i)?);
            perm.push(start.elapsed());
        }
        let median = median(total);
        let time_ratio = rows
            .last()
            .map(|prev| median.as_secs_f64() / prev.median.as_secs_f64());
        rows.push(BenchRow {
            width,
            height,
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            median,
            permutation: self::median(perm),
            time_ratio,
        });
    }
    Ok(rows)
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out =
        String::from("width,height,vertices,edges,median_seconds,ns_per_edge,permutation_share,time_ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6},{:.3},{:.3},{}\n",
            r.width,
            r.height,
            r.vertices,
            r.edges,
            r.median.as_secs_f64(),
            r.ns_per_edge(),
            r.permutation_share(),
            r.time_ratio.map_or(String::new(), |x| format!("{x:.3}"))
        ));
    }
    out
}

/// Parses `64x128,128x128`.
pub fn parse_sizes(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|part| {
            let (w, h) = part
                .trim()
                .split_once('x')
                .ok_or_else(|| anyhow::anyhow!("size {part:?} is not WIDTHxHEIGHT"))?;
            Ok((w.parse()?, h.parse()?))
        })
        .collect()
}
