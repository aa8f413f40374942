use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use karger_cli::commands::{bench, counterexample, graph, segment, ssl, synth, verify};
use karger_cli::io::write_text;
use karger_cli::{ExperimentConfig, MethodArg, Mode};

#[derive(Parser)]
#[command(
    name = "karger",
    version,
    about = "Seeded contraction potentials, random walker and watershed labelings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Labeling method
    #[arg(long, value_enum, default_value = "contraction")]
    method: MethodArg,
    /// Weight sharpness; defaults depend on the mode and method
    #[arg(long)]
    beta: Option<f64>,
    /// Monte Carlo runs for the contraction potential
    #[arg(long, default_value_t = 1000)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Linear solver tolerance for the random walker
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Output directory
    #[arg(long, default_value = ".")]
    output: PathBuf,
    /// True labels for scoring: a label PGM or `vertex label` lines
    #[arg(long)]
    ground_truth: Option<PathBuf>,
}

impl RunArgs {
    fn config(self, mode: Mode, inputs: Vec<PathBuf>, knn: usize) -> ExperimentConfig {
        ExperimentConfig {
            beta: self.beta,
            runs: self.runs,
            rng_seed: self.rng_seed,
            knn,
            tolerance: self.tolerance,
            inputs,
            output: self.output,
            ground_truth: self.ground_truth,
            ..ExperimentConfig::new(mode, self.method.methods())
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Dataset {
    Blob,
    Gaussians,
}

#[derive(Subcommand)]
enum Command {
    /// Segment a PGM boundary map from `x y label` seeds on a 4-connected grid
    Segment {
        image: PathBuf,
        seeds: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Label feature rows from `point label` seeds on a k-NN graph
    Ssl {
        features: PathBuf,
        labels: PathBuf,
        /// Neighbors per point before symmetrization
        #[arg(long, default_value_t = 10)]
        knn: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Label an explicit weighted edge list from `vertex label` seeds
    Graph {
        edges: PathBuf,
        seeds: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Success frequency of s-t contraction on the star graph
    Counterexample {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
    /// Run the exact oracle cross-checks
    Verify {
        /// Perturb a fixture weight; the run must then fail
        #[arg(long)]
        inject_fault: bool,
    },
    /// Time seeded contraction on grids of doubling size
    Bench {
        /// Comma-separated WIDTHxHEIGHT list
        #[arg(long)]
        sizes: Option<String>,
        /// Timed runs per size
        #[arg(long, default_value_t = bench::DEFAULT_BENCH_RUNS)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// CSV path; printed to stdout when absent
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write synthetic inputs with ground truth
    Synth {
        #[arg(value_enum)]
        dataset: Dataset,
        #[arg(long, default_value = ".")]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
}

/// `Ok(false)` means the command ran but a check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Segment { image, seeds, run } => {
            let (_, text) = segment::cmd_segment(&run.config(Mode::Segment, vec![image, seeds], 10))?;
            print!("{text}");
        }
        Command::Ssl {
            features,
            labels,
            knn,
            run,
        } => {
            let (_, text) = ssl::cmd_ssl(&run.config(Mode::Ssl, vec![features, labels], knn))?;
            print!("{text}");
        }
        Command::Graph { edges, seeds, run } => {
            let (_, text) = graph::cmd_graph(&run.config(Mode::Graph, vec![edges, seeds], 10))?;
            print!("{text}");
        }
        Command::Counterexample { n, trials, rng_seed } => {
            let report = counterexample::run_counterexample(n, trials, rng_seed)?;
            print!("{}", report.render());
            return Ok(report.passed());
        }
        Command::Verify { inject_fault } => {
            let outcomes = verify::run_verify(inject_fault);
            print!("{}", verify::render_table(&outcomes));
            return Ok(outcomes.iter().all(|o| o.passed));
        }
        Command::Bench {
            sizes,
            runs,
            rng_seed,
            output,
        } => {
            let sizes = match sizes {
                Some(text) => bench::parse_sizes(&text)?,
                None => bench::DEFAULT_SIZES.to_vec(),
            };
            let rows = bench::run_bench(&sizes, runs, rng_seed)?;
            let csv = bench::bench_csv(&rows);
            match output {
                Some(path) => write_text(&path, &csv)?,
                None => print!("{csv}"),
            }
            let share = rows.last().map_or(0.0, |r| r.permutation_share());
            eprintln!(
                "note: the weighted permutation takes {:.0}% of a run at the largest size",
                100.0 * share
            );
        }
        Command::Synth {
            dataset,
            output,
            rng_seed,
        } => match dataset {
            Dataset::Blob => synth::write_blob(&output, 16)?,
            Dataset::Gaussians => synth::write_gaussians(&output, 20, rng_seed)?,
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
