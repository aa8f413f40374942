use std::fs;

use anyhow::{bail, Context, Result};
use karger_core::graph::make_grid_graph;
use karger_core::SeedMap;

use super::pipeline::{run_methods, summary, write_outputs, PipelineReport};
use crate::config::ExperimentConfig;
use crate::io::{parse_grid_seeds, read_grid_truth, read_pgm, write_label_pgm, Intensity};

/// Segments `image` on a 4-connected grid.
pub fn segment(
    image: &Intensity,
    seeds: &SeedMap,
    truth: Option<&[u32]>,
    cfg: &ExperimentConfig,
) -> Result<PipelineReport> {
    if seeds.len() != image.pixel_count() {
        bail!(
            "seed map covers {} pixels, image has {}",
            seeds.len(),
            image.pixel_count()
        );
    }
    run_methods(cfg, seeds, truth, |beta| {
        Ok(make_grid_graph(
            image.width,
            image.height,
            &image.values,
            beta.unwrap_or(0.0),
        )?)
    })
}

/// `karger segment IMAGE SEEDS`: inputs are `cfg.inputs[0..2]`.
pub fn cmd_segment(cfg: &ExperimentConfig) -> Result<(PipelineReport, String)> {
    cfg.validate()?;
    let [image_path, seeds_path] = cfg.inputs.as_slice() else {
        bail!("segment needs an image and a seed file");
    };
    let image = read_pgm(image_path)?;
    let seeds_text =
        fs::read_to_string(seeds_path).with_context(|| format!("reading {}", seeds_path.display()))?;
    let seeds = parse_grid_seeds(&seeds_text, image.width, image.height)
        .with_context(|| format!("parsing {}", seeds_path.display()))?;
    let truth = cfg
        .ground_truth
        .as_deref()
        .map(|p| read_grid_truth(p, image.width, image.height))
        .transpose()?;
    let report = segment(&image, &seeds, truth.as_deref(), cfg)?;
    write_outputs(&report, &cfg.output)?;
    for o in &report.outcomes {
        write_label_pgm(
            &cfg.output.join(format!("labels_{}.pgm", o.method.name())),
            image.width,
            image.height,
            &o.labeling.assignment,
        )?;
    }
    let text = summary(&report, &seeds);
    Ok((report, text))
}
