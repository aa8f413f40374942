use crate::error::{Error, Result};
use crate::graph::{CutResult, Graph};

/// Vertex limit for exhaustive cut enumeration.
pub const MAX_CUT_VERTICES: usize = 20;

/// Result of an exhaustive minimum cut search.
#[derive(Debug, Clone, PartialEq)]
pub struct MincutResult {
    /// The first minimizer found.
    pub cut: CutResult,
    pub value: f64,
    /// Every minimizing assignment (labels 1 and 2).
    pub minimizers: Vec<Vec<u32>>,
}

impl MincutResult {
    pub fn minimizer_count(&self) -> usize {
        self.minimizers.len()
    }
}

/// Float equality used to decide whether two cut values tie.
pub fn values_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn guard(graph: &Graph) -> Result<()> {
    if graph.vertex_count() > MAX_CUT_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: graph.vertex_count(),
            limit: MAX_CUT_VERTICES,
        });
    }
    Ok(())
}

/// Enumerates assignments where `fixed` vertices are pinned to the given
/// sides and every other vertex takes both sides; `skip_empty` drops the
/// assignment with no free vertex on side 2.
fn enumerate(graph: &Graph, fixed: &[(usize, u32)], skip_empty: bool) -> MincutResult {
    let n = graph.vertex_count();
    let free: Vec<usize> = (0..n).filter(|v| !fixed.iter().any(|&(f, _)| f == *v)).collect();
    let mut assignment = vec![1u32; n];
    for &(v, side) in fixed {
        assignment[v] = side;
    }
    let mut best = f64::INFINITY;
    let mut minimizers: Vec<Vec<u32>> = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        if skip_empty && mask == 0 {
            continue;
        }
        for (bit, &v) in free.iter().enumerate() {
            assignment[v] = if mask >> bit & 1 == 1 { 2 } else { 1 };
        }
        let w = graph.cut_weight(&assignment);
        if minimizers.is_empty() || (w < best && !values_tie(w, best)) {
            best = w;
            minimizers.clear();
            minimizers.push(assignment.clone());
        } else if values_tie(w, best) {
            minimizers.push(assignment.clone());
        }
    }
    MincutResult {
        cut: CutResult::from_assignment(graph, minimizers[0].clone()),
        value: best,
        minimizers,
    }
}

/// Minimum s-t cut by enumerating all `2^(n-2)` s-t bipartitions. The
/// returned assignment puts `s` on side 1 and `t` on side 2.
pub fn brute_force_st_mincut(graph: &Graph, s: usize, t: usize) -> Result<MincutResult> {
    guard(graph)?;
    let n = graph.vertex_count();
    if s >= n || t >= n || s == t {
        return Err(Error::InvalidArgument(format!(
            "need distinct terminals below {n}, got s={s}, t={t}"
        )));
    }
    Ok(enumerate(graph, &[(s, 1), (t, 2)], false))
}

/// Global minimum cut by enumerating all `2^(n-1) - 1` bipartitions, with
/// vertex 0 on side 1.
pub fn brute_force_global_mincut(graph: &Graph) -> Result<MincutResult> {
    guard(graph)?;
    Ok(enumerate(graph, &[(0, 1)], true))
}

/// Normalized cut `w(A,B)/w(A,V) + w(A,B)/w(B,V)`, where `w(A,V)` is the
/// total weighted degree of `A` (internal edges counted twice).
pub fn ncut_cost(graph: &Graph, in_a: &[bool]) -> Result<f64> {
    if in_a.len() != graph.vertex_count() {
        return Err(Error::InvalidArgument("bipartition length mismatch".into()));
    }
    let size_a = in_a.iter().filter(|&&a| a).count();
    if size_a == 0 || size_a == in_a.len() {
        return Err(Error::InvalidArgument(
            "both sides of a cut must be non-empty".into(),
        ));
    }
    let (mut vol_a, mut vol_b) = (0.0, 0.0);
    for (v, &a) in in_a.iter().enumerate() {
        if a {
            vol_a += graph.degree(v);
        } else {
            vol_b += graph.degree(v);
        }
    }
    if vol_a == 0.0 || vol_b == 0.0 {
        return Err(Error::InvalidArgument("a side of the cut has zero volume".into()));
    }
    let cut: f64 = graph
        .edges()
        .iter()
        .filter(|e| in_a[e.u] != in_a[e.v])
        .map(|e| e.weight)
        .sum();
    Ok(cut / vol_a + cut / vol_b)
}

/// Which minimum a cut is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutReference {
    Global,
    St { s: usize, t: usize },
}

/// Whether the cut costs at most `alpha` times the reference minimum. An
/// s-t reference also requires the cut to separate `s` and `t`.
pub fn is_alpha_minimal(graph: &Graph, cut: &CutResult, alpha: f64, reference: CutReference) -> Result<bool> {
    if alpha.is_nan() || alpha <= 1.0 {
        return Err(Error::InvalidArgument(format!(
            "alpha must exceed 1, got {alpha}"
        )));
    }
    let weight = graph.cut_weight(&cut.assignment);
    let minimum = match reference {
        CutReference::Global => brute_force_global_mincut(graph)?.value,
        CutReference::St { s, t } => {
            let value = brute_force_st_mincut(graph, s, t)?.value;
            if cut.assignment[s] == cut.assignment[t] {
                return Ok(false);
            }
            value
        }
    };
    Ok(weight <= alpha * minimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_graph, make_star_counterexample};

    #[test]
    fn star_st_mincut() {
        let star = make_star_counterexample(5).unwrap();
        let r = brute_force_st_mincut(&star.graph, star.s, star.t).unwrap();
        assert_eq!(r.value, 3.0);
        assert_eq!(r.minimizer_count(), 1);
        assert_eq!(r.cut.assignment, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn path_and_triangle() {
        let path = Graph::new(3, [(0, 1, 2.0), (1, 2, 1.0)]).unwrap();
        assert_eq!(brute_force_st_mincut(&path, 0, 2).unwrap().value, 1.0);

        let tri = Graph::new(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        for (s, t) in [(0, 1), (1, 2), (2, 0)] {
            assert_eq!(brute_force_st_mincut(&tri, s, t).unwrap().value, 2.0);
        }
        let global = brute_force_global_mincut(&tri).unwrap();
        assert_eq!(global.value, 2.0);
        assert_eq!(global.minimizer_count(), 3);

        let edge = Graph::new(2, [(0, 1, 4.5)]).unwrap();
        let global = brute_force_global_mincut(&edge).unwrap();
        assert_eq!(global.value, 4.5);
        assert_eq!(global.minimizer_count(), 1);
    }

    #[test]
    fn guard_applies() {
        let g = make_complete_graph(21).unwrap();
        assert!(matches!(
            brute_force_global_mincut(&g),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn ncut_complete_graph() {
        let g = make_complete_graph(4).unwrap();
        for mask in 1u32..15 {
            let in_a: Vec<bool> = (0..4).map(|b| mask >> b & 1 == 1).collect();
            assert!((ncut_cost(&g, &in_a).unwrap() - 4.0 / 3.0).abs() < 1e-12);
        }
        assert!(ncut_cost(&g, &[true; 4]).is_err());
    }

    #[test]
    fn ncut_zero_for_empty_cut_set() {
        let g = Graph::new(3, [(0, 1, 1.0), (1, 2, 0.0)]).unwrap();
        assert_eq!(
            ncut_cost(&g, &[true, true, false]),
            Err(Error::InvalidArgument("a side of the cut has zero volume".into()))
        );
        let g = Graph::new(4, [(0, 1, 1.0), (1, 2, 0.0), (2, 3, 1.0)]).unwrap();
        assert_eq!(ncut_cost(&g, &[true, true, false, false]).unwrap(), 0.0);
    }

    #[test]
    fn alpha_minimality_on_star() {
        let star = make_star_counterexample(5).unwrap();
        let g = &star.graph;
        let reference = CutReference::St { s: star.s, t: star.t };
        // {s, v_1} against the rest: thin edges of v_2, v_3 plus the thick
        // edge of v_1, 1 + 1 + 2 = 4.
        let cut = CutResult::from_assignment(g, vec![1, 2, 1, 2, 2]);
        assert_eq!(cut.cut_weight, 4.0);
        assert!(!is_alpha_minimal(g, &cut, 1.3, reference).unwrap());
        assert!(is_alpha_minimal(g, &cut, 1.5, reference).unwrap());
        let best = brute_force_st_mincut(g, star.s, star.t).unwrap().cut;
        assert!(is_alpha_minimal(g, &best, 1.0001, reference).unwrap());
        assert!(is_alpha_minimal(g, &best, 1.0, reference).is_err());
    }
}
