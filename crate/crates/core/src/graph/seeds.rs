use crate::error::{Error, Result};

/// Per-vertex seed labels: `0` is unlabeled, `1..=k` are classes.
///
/// Every class label in `1..=k` occurs at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedMap {
    labels: Vec<u32>,
    k: u32,
}

impl SeedMap {
    /// Wraps a label vector, checking surjectivity onto `1..=max label`.
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(0);
        if k == 0 {
            return Err(Error::InvalidSeeds("no vertex carries a label".into()));
        }
        let mut present = vec![false; k as usize + 1];
        for &l in &labels {
            present[l as usize] = true;
        }
        if let Some(missing) = (1..=k).find(|&l| !present[l as usize]) {
            return Err(Error::InvalidSeeds(format!(
                "label {missing} has no seed (labels must cover 1..={k})"
            )));
        }
        Ok(Self { labels, k })
    }

    /// Builds a seed map on `n` vertices from `(vertex, label)` pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let mut labels = vec![0; n];
        for (v, l) in pairs {
            if v >= n {
                return Err(Error::InvalidSeeds(format!(
                    "seed vertex {v} out of range for {n} vertices"
                )));
            }
            if l == 0 {
                return Err(Error::InvalidSeeds(format!("seed vertex {v} has label 0")));
            }
            if labels[v] != 0 && labels[v] != l {
                return Err(Error::InvalidSeeds(format!(
                    "vertex {v} seeded with both {} and {l}",
                    labels[v]
                )));
            }
            labels[v] = l;
        }
        Self::new(labels)
    }

    #[inline]
    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    #[inline]
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Number of classes.
    #[inline]
    pub fn k(&self) -> usize {
        self.k as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_seed(&self, v: usize) -> bool {
        self.labels[v] != 0
    }

    pub fn seeded_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l != 0).count()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.labels.len() != n {
            return Err(Error::InvalidSeeds(format!(
                "seed map covers {} vertices, graph has {n}",
                self.labels.len()
            )));
        }
        Ok(())
    }
}
