use super::SeedMap;

/// Union-find over vertex ids with path compression, union by rank and a
/// class label per root (`0` = unlabeled).
///
/// Two clusters carrying different nonzero labels are never merged. Merging
/// a labeled with an unlabeled cluster propagates the label.
///
/// Indices are checked like slice indices: out-of-range ids panic.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<u32>,
    rank: Vec<u8>,
    label: Vec<u32>,
    clusters: usize,
}

impl DisjointSet {
    /// `n` unlabeled singletons.
    pub fn new(n: usize) -> Self {
        assert!(n <= u32::MAX as usize, "too many elements for DisjointSet");
        Self {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            label: vec![0; n],
            clusters: n,
        }
    }

    /// Singletons with seed labels attached; all seeds sharing a label are
    /// placed in one cluster.
    pub fn with_seeds(seeds: &SeedMap) -> Self {
        let mut ds = Self::new(seeds.len());
        let mut first_of_label = vec![usize::MAX; seeds.k() + 1];
        for (v, &l) in seeds.labels().iter().enumerate() {
            if l == 0 {
                continue;
            }
            ds.label[v] = l;
            let first = &mut first_of_label[l as usize];
            if *first == usize::MAX {
                *first = v;
            } else {
                let merged = ds.union(*first, v);
                debug_assert!(merged);
            }
        }
        ds
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of live clusters.
    #[inline]
    pub fn cluster_count(&self) -> usize {
        self.clusters
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Label of the cluster containing `x`.
    #[inline]
    pub fn label(&mut self, x: usize) -> u32 {
        let r = self.find(x);
        self.label[r]
    }

    /// Label stored at a root; only meaningful when `root == find(root)`.
    #[inline]
    pub fn root_label(&self, root: usize) -> u32 {
        self.label[root]
    }

    /// Merges the clusters of `x` and `y`. Returns `false` when they are
    /// already one cluster or carry different nonzero labels.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let rx = self.find(x);
        let ry = self.find(y);
        self.union_roots(rx, ry)
    }

    /// [`union`](Self::union) for two roots already found by the caller.
    #[inline]
    pub fn union_roots(&mut self, rx: usize, ry: usize) -> bool {
        if rx == ry {
            return false;
        }
        let (lx, ly) = (self.label[rx], self.label[ry]);
        if lx != 0 && ly != 0 && lx != ly {
            return false;
        }
        let (child, root) = match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => (rx, ry),
            std::cmp::Ordering::Greater => (ry, rx),
            std::cmp::Ordering::Equal => {
                self.rank[rx] += 1;
                (ry, rx)
            }
        };
        self.parent[child] = root as u32;
        self.label[root] = lx.max(ly);
        self.clusters -= 1;
        true
    }

    /// Whether `x` and `y` share a cluster.
    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    /// Per-element label of its cluster.
    pub fn labels(&mut self) -> Vec<u32> {
        (0..self.len()).map(|x| self.label(x)).collect()
    }

    /// Per-element root id.
    pub fn roots(&mut self) -> Vec<usize> {
        (0..self.len()).map(|x| self.find(x)).collect()
    }
}
