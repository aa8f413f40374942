use std::path::Path;

use anyhow::{Context, Result};

use crate::io::{format_labels, write_label_pgm, write_pgm, write_text};
use crate::synth::{gaussian_clusters, two_blob_image};

/// Writes `blob.pgm`, `blob_seeds.txt` and `blob_truth.pgm`.
pub fn write_blob(dir: &Path, size: usize) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let s = two_blob_image(size);
    write_pgm(&dir.join("blob.pgm"), &s.image)?;
    write_text(&dir.join("blob_seeds.txt"), &s.seeds_text())?;
    write_label_pgm(&dir.join("blob_truth.pgm"), size, size, &s.truth)
}

/// Writes `gaussians.csv`, `gaussians_seeds.txt` and `gaussians_truth.txt`.
pub fn write_gaussians(dir: &Path, per_class: usize, rng_seed: u64) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let p = gaussian_clusters(per_class, rng_seed);
    write_text(&dir.join("gaussians.csv"), &p.features_csv())?;
    write_text(&dir.join("gaussians_seeds.txt"), &p.seeds_text())?;
    write_text(&dir.join("gaussians_truth.txt"), &format_labels(&p.truth))
}
