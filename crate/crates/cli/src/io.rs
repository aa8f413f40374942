//! File formats: PGM images, seed and label files, feature CSVs.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{DynamicImage, ExtendedColorType, GrayImage, ImageEncoder, ImageFormat, Luma};
use karger_core::SeedMap;

/// Grayscale image with values scaled into `[0, 1]`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Intensity {
    pub width: usize,
    pub height: usize,
    pub values: Vec<f64>,
}

impl Intensity {
    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }
}

/// Reads a binary or ASCII PGM, 8 or 16 bit.
pub fn read_pgm(path: &Path) -> Result<Intensity> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    decode_pgm(&bytes).with_context(|| format!("decoding {}", path.display()))
}

pub fn decode_pgm(bytes: &[u8]) -> Result<Intensity> {
    if !(bytes.starts_with(b"P2") || bytes.starts_with(b"P5")) {
        bail!("not a grayscale PGM (expected P2 or P5 magic)");
    }
    let img = image::load_from_memory_with_format(bytes, ImageFormat::Pnm)?;
    let (width, height) = (img.width() as usize, img.height() as usize);
    let values = match img {
        DynamicImage::ImageLuma8(buf) => buf.pixels().map(|p| p.0[0] as f64 / 255.0).collect(),
        DynamicImage::ImageLuma16(buf) => buf.pixels().map(|p| p.0[0] as f64 / 65535.0).collect(),
        other => bail!("unsupported PGM pixel type {:?}", other.color()),
    };
    Ok(Intensity {
        width,
        height,
        values,
    })
}

/// Writes intensities in `[0, 1]` as an 8-bit binary PGM.
pub fn write_pgm(path: &Path, img: &Intensity) -> Result<()> {
    let buf = GrayImage::from_fn(img.width as u32, img.height as u32, |x, y| {
        let v = img.values[y as usize * img.width + x as usize];
        Luma([(v.clamp(0.0, 1.0) * 255.0).round() as u8])
    });
    save_gray(path, &buf)
}

/// Label map as an 8-bit PGM holding the raw label values.
pub fn write_label_pgm(path: &Path, width: usize, height: usize, labels: &[u32]) -> Result<()> {
    if let Some(&l) = labels.iter().find(|&&l| l > 255) {
        bail!("label {l} does not fit an 8-bit label map");
    }
    let buf = GrayImage::from_fn(width as u32, height as u32, |x, y| {
        Luma([labels[y as usize * width + x as usize] as u8])
    });
    save_gray(path, &buf)
}

fn save_gray(path: &Path, buf: &GrayImage) -> Result<()> {
    let mut bytes = Vec::new();
    PnmEncoder::new(&mut bytes)
        .with_subtype(PnmSubtype::Graymap(SampleEncoding::Binary))
        .write_image(buf.as_raw(), buf.width(), buf.height(), ExtendedColorType::L8)?;
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn field<T: std::str::FromStr>(tok: &str, what: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| anyhow::anyhow!("line {line}: bad {what} {tok:?}"))
}

/// Grid seeds, one `x y label` per line.
pub fn parse_grid_seeds(text: &str, width: usize, height: usize) -> Result<SeedMap> {
    let mut pairs = Vec::new();
    for (line, toks) in data_lines(text) {
        if toks.len() != 3 {
            bail!("line {line}: expected `x y label`");
        }
        let x: usize = field(toks[0], "x", line)?;
        let y: usize = field(toks[1], "y", line)?;
        let l: u32 = field(toks[2], "label", line)?;
        if x >= width || y >= height {
            bail!("line {line}: seed ({x}, {y}) outside the {width}x{height} image");
        }
        pairs.push((y * width + x, l));
    }
    Ok(SeedMap::from_pairs(width * height, pairs)?)
}

/// Full labeling from `v label` lines; every vertex must appear once.
pub fn parse_labels(text: &str, n: usize) -> Result<Vec<u32>> {
    let mut labels = vec![0u32; n];
    for (line, toks) in data_lines(text) {
        if toks.len() != 2 {
            bail!("line {line}: expected `vertex label`");
        }
        let v: usize = field(toks[0], "vertex", line)?;
        let l: u32 = field(toks[1], "label", line)?;
        if v >= n {
            bail!("line {line}: vertex {v} out of range for {n} vertices");
        }
        if l == 0 {
            bail!("line {line}: labels start at 1");
        }
        if labels[v] != 0 {
            bail!("line {line}: vertex {v} listed twice");
        }
        labels[v] = l;
    }
    if let Some(v) = labels.iter().position(|&l| l == 0) {
        bail!("vertex {v} has no label");
    }
    Ok(labels)
}

pub fn format_labels(labels: &[u32]) -> String {
    labels
        .iter()
        .enumerate()
        .map(|(v, l)| format!("{v} {l}\n"))
        .collect()
}

/// Ground truth for a grid: a PGM of raw label values or a `v label` file.
pub fn read_grid_truth(path: &Path, width: usize, height: usize) -> Result<Vec<u32>> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if bytes.starts_with(b"P2") || bytes.starts_with(b"P5") {
        let img = image::load_from_memory_with_format(&bytes, ImageFormat::Pnm)?.to_luma16();
        if (img.width() as usize, img.height() as usize) != (width, height) {
            bail!(
                "ground truth is {}x{}, image is {width}x{height}",
                img.width(),
                img.height()
            );
        }
        let raw: Vec<u32> = img.pixels().map(|p| p.0[0] as u32).collect();
        // 8-bit maps are widened by 257 on conversion
        let is_8bit = raw.iter().all(|&v| v % 257 == 0);
        let labels: Vec<u32> = raw.iter().map(|&v| if is_8bit { v / 257 } else { v }).collect();
        if labels.contains(&0) {
            bail!("ground truth label map contains 0; labels start at 1");
        }
        Ok(labels)
    } else {
        parse_labels(&String::from_utf8(bytes)?, width * height)
    }
}

/// Numeric feature matrix, one row per sample. A non-numeric first row is
/// taken as a header.
pub fn read_features(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_features(&text)
}

pub fn parse_features(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(row) => {
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        bail!(
                            "row {} has {} columns, expected {}",
                            i + 1,
                            row.len(),
                            first.len()
                        );
                    }
                }
                if row.iter().any(|x| !x.is_finite()) {
                    bail!("row {} has a non-finite value", i + 1);
                }
                rows.push(row);
            }
            Err(_) if i == 0 => continue,
            Err(e) => bail!("row {}: {e}", i + 1),
        }
    }
    if rows.is_empty() {
        bail!("no feature rows");
    }
    Ok(rows)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
