//! Synthetic inputs with known ground truth.

use karger_core::rng::rng_from_seed;
use karger_core::SeedMap;
use rand_distr::{Distribution, Normal};

use crate::io::Intensity;

/// Image, seeds and per-pixel ground truth.
#[derive(Debug, Clone)]
pub struct SyntheticImage {
    pub image: Intensity,
    /// `(x, y, label)`
    pub seeds: Vec<(usize, usize, u32)>,
    pub truth: Vec<u32>,
}

impl SyntheticImage {
    pub fn seed_map(&self) -> SeedMap {
        let w = self.image.width;
        SeedMap::from_pairs(
            self.image.pixel_count(),
            self.seeds.iter().map(|&(x, y, l)| (y * w + x, l)),
        )
        .expect("synthetic seeds are valid")
    }

    pub fn seeds_text(&self) -> String {
        self.seeds
            .iter()
            .map(|(x, y, l)| format!("{x} {y} {l}\n"))
            .collect()
    }
}

/// A disk (label 1) on a background (label 2), `size` x `size` pixels.
///
/// The boundary map is 1.0 on the ring of pixels just outside the disk
/// (its 4-neighborhood), 0.3 on the halo around that ring and 0 elsewhere.
/// Every ring pixel touches the disk, so its strongest edge points inward
/// and the ring belongs to the disk.
pub fn two_blob_image(size: usize) -> SyntheticImage {
    assert!(size >= 8, "two-blob image needs at least 8x8 pixels");
    let c = (size as f64 - 1.0) / 2.0;
    let r = size as f64 * 0.28;
    let n = size * size;
    let neighbors = |v: usize| {
        let (x, y) = (v % size, v / size);
        let mut out = Vec::with_capacity(4);
        if x > 0 {
            out.push(v - 1)
        }
        if x + 1 < size {
            out.push(v + 1)
        }
        if y > 0 {
            out.push(v - size)
        }
        if y + 1 < size {
            out.push(v + size)
        }
        out
    };
    let disk: Vec<bool> = (0..n)
        .map(|v| ((v % size) as f64 - c).hypot((v / size) as f64 - c) < r)
        .collect();
    let ring: Vec<bool> = (0..n)
        .map(|v| !disk[v] && neighbors(v).iter().any(|&u| disk[u]))
        .collect();
    let values = (0..n)
        .map(|v| {
            if ring[v] {
                1.0
            } else if !disk[v] && neighbors(v).iter().any(|&u| ring[u]) {
                0.3
            } else {
                0.0
            }
        })
        .collect();
    let truth = (0..n).map(|v| if disk[v] || ring[v] { 1 } else { 2 }).collect();
    let mid = size / 2;
    SyntheticImage {
        image: Intensity {
            width: size,
            height: size,
            values,
        },
        seeds: vec![(mid, mid, 1), (0, 0, 2)],
        truth,
    }
}

/// Points, one seed per class and the true classes.
#[derive(Debug, Clone)]
pub struct SyntheticPoints {
    pub features: Vec<Vec<f64>>,
    /// `(point, label)`
    pub seeds: Vec<(usize, u32)>,
    pub truth: Vec<u32>,
}

impl SyntheticPoints {
    pub fn seed_map(&self) -> SeedMap {
        SeedMap::from_pairs(self.features.len(), self.seeds.iter().copied())
            .expect("synthetic seeds are valid")
    }

    pub fn features_csv(&self) -> String {
        let dims = self.features[0].len();
        let mut out: String = (0..dims).map(|d| format!("x{d}")).collect::<Vec<_>>().join(",");
        out.push('\n');
        for row in &self.features {
            out.push_str(&row.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn seeds_text(&self) -> String {
        self.seeds.iter().map(|(v, l)| format!("{v} {l}\n")).collect()
    }
}

/// Default distance between cluster centers, in standard deviations.
pub const GAUSSIAN_SPACING: f64 = 4.5;

pub fn gaussian_clusters(per_class: usize, rng_seed: u64) -> SyntheticPoints {
    gaussian_clusters_spaced(per_class, GAUSSIAN_SPACING, rng_seed)
}

/// Three isotropic unit-variance Gaussian clusters in 2D with
/// `per_class` points each, centered on an equilateral triangle with side
/// `spacing`. The seed of each class is the point nearest its center.
pub fn gaussian_clusters_spaced(per_class: usize, spacing: f64, rng_seed: u64) -> SyntheticPoints {
    assert!(per_class >= 1);
    let s = spacing;
    let centers = [[0.0, 0.0], [s, 0.0], [s / 2.0, s * 3f64.sqrt() / 2.0]];
    let noise = Normal::new(0.0, 1.0).expect("unit normal");
    let mut rng = rng_from_seed(rng_seed);
    let mut features = Vec::with_capacity(3 * per_class);
    let mut truth = Vec::with_capacity(3 * per_class);
    let mut seeds = Vec::new();
    for (class, center) in centers.iter().enumerate() {
        let start = features.len();
        for _ in 0..per_class {
            features.push(vec![
                center[0] + noise.sample(&mut rng),
                center[1] + noise.sample(&mut rng),
            ]);
            truth.push(class as u32 + 1);
        }
        let nearest = (start..features.len())
            .min_by(|&a, &b| {
                let da = (features[a][0] - center[0]).hypot(features[a][1] - center[1]);
                let db = (features[b][0] - center[0]).hypot(features[b][1] - center[1]);
                da.total_cmp(&db)
            })
            .expect("non-empty class");
        seeds.push((nearest, class as u32 + 1));
    }
    SyntheticPoints {
        features,
        seeds,
        truth,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_separates_disk_from_background() {
        let s = two_blob_image(16);
        let w = 16;
        // flood the zero-valued pixels from the disk seed, 4-connected
        let start = 8 * w + 8;
        let mut seen = vec![false; w * w];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            let (x, y) = (v % w, v / w);
            let mut next = Vec::new();
            if x > 0 {
                next.push(v - 1)
            }
            if x + 1 < w {
                next.push(v + 1)
            }
            if y > 0 {
                next.push(v - w)
            }
            if y + 1 < w {
                next.push(v + w)
            }
            for u in next {
                if !seen[u] && s.image.values[u] == 0.0 {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        assert!(!seen[0]);
        assert!((0..w * w).filter(|&v| seen[v]).all(|v| s.truth[v] == 1));
        assert_eq!(s.seed_map().k(), 2);
    }

    #[test]
    fn gaussian_clusters_shape() {
        let p = gaussian_clusters(20, 0);
        assert_eq!(p.features.len(), 60);
        assert_eq!(p.seeds.len(), 3);
        for &(v, l) in &p.seeds {
            assert_eq!(p.truth[v], l);
        }
        // reproducible
        assert_eq!(p.features, gaussian_clusters(20, 0).features);
        assert!(crate::io::parse_features(&p.features_csv()).unwrap() == p.features);
    }
}
