use std::collections::HashSet;

use super::group::PermGroup;
use super::search::automorphism_group;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of the k-arc analysis of a cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ArcRegularity {
    /// The `k` for which the group is regular on k-arcs; `None` when the
    /// graph is not arc-transitive.
    pub k: Option<usize>,
    pub arc_transitive: bool,
    /// Largest `k` with the group transitive on k-arcs (0 if none).
    pub max_transitive_k: usize,
}

/// All k-arcs `(v_0, ..., v_k)`: consecutive vertices adjacent, no
/// immediate backtracking.
pub fn k_arcs(g: &Graph, k: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0..g.n()).map(|v| vec![v as u32]).collect();
    for _ in 0..k {
        let mut next = Vec::new();
        for arc in &out {
            let last = *arc.last().expect("nonempty") as usize;
            let prev = (arc.len() >= 2).then(|| arc[arc.len() - 2] as usize);
            for &w in g.neighbors(last) {
                if Some(w) != prev {
                    let mut a = arc.clone();
                    a.push(w as u32);
                    next.push(a);
                }
            }
        }
        out = next;
    }
    out
}

fn orbit_size_on_arcs(group: &PermGroup, start: Vec<u32>) -> usize {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for g in group.generators() {
            let b: Vec<u32> = a.iter().map(|&v| g.apply(v as usize) as u32).collect();
            if seen.insert(b.clone()) {
                stack.push(b);
            }
        }
    }
    seen.len()
}

/// Whether `group` is transitive on the k-arcs of `g`.
pub fn is_k_arc_transitive(g: &Graph, group: &PermGroup, k: usize) -> bool {
    let arcs = k_arcs(g, k);
    match arcs.first() {
        None => true,
        Some(first) => orbit_size_on_arcs(group, first.clone()) == arcs.len(),
    }
}

pub fn k_arc_regularity(g: &Graph) -> Result<ArcRegularity> {
    let aut = automorphism_group(g)?;
    k_arc_regularity_with(g, &aut)
}

/// Ascends through k = 1, 2, ... while the group stays transitive on
/// k-arcs; the graph is k-regular at the level where the group order
/// equals the number of k-arcs.
pub fn k_arc_regularity_with(g: &Graph, aut: &PermGroup) -> Result<ArcRegularity> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let order = aut.order();
    let mut result = ArcRegularity {
        k: None,
        arc_transitive: false,
        max_transitive_k: 0,
    };
    // Tutte's bound keeps k <= 5 for cubic graphs; 7 leaves headroom for
    // disconnected inputs
    for k in 1..=7 {
        if !is_k_arc_transitive(g, aut, k) {
            break;
        }
        result.max_transitive_k = k;
        if k == 1 {
            result.arc_transitive = true;
        }
        if order == k_arcs(g, k).len() as u128 {
            result.k = Some(k);
            break;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn arc_counts() {
        let k4 = named::complete(4);
        assert_eq!(k_arcs(&k4, 0).len(), 4);
        assert_eq!(k_arcs(&k4, 1).len(), 12);
        assert_eq!(k_arcs(&k4, 2).len(), 24);
        assert_eq!(k_arcs(&named::petersen(), 3).len(), 10 * 3 * 4);
    }

    #[test]
    fn regularity_of_small_cubic_graphs() {
        let cases = [
            (named::complete(4), 2),
            (named::complete_bipartite(3, 3), 3),
            (named::cube(), 2),
            (named::petersen(), 3),
        ];
        for (g, k) in cases {
            let r = k_arc_regularity(&g).unwrap();
            assert_eq!(r.k, Some(k));
            assert!(r.arc_transitive);
            assert_eq!(r.max_transitive_k, k);
        }
        // the triangular prism is vertex- but not arc-transitive
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let r = k_arc_regularity(&prism).unwrap();
        assert_eq!(r.k, None);
        assert!(!r.arc_transitive);
        assert_eq!(k_arc_regularity(&named::cycle(5)), Err(Error::NotCubic));
    }
}
