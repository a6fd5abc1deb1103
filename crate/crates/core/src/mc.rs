//! Matching covered graphs, removable edges and doubletons, bicritical graphs
//! and bricks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components, EdgeId, Multigraph, VertexSet};
use crate::matching::{every_pair_in_pm, has_pm_masks};

/// A removable edge or a removable doubleton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RemovableClass {
    Single(EdgeId),
    /// Stored with the smaller edge id first.
    Doubleton(EdgeId, EdgeId),
}

impl RemovableClass {
    pub fn edges(&self) -> Vec<EdgeId> {
        match *self {
            RemovableClass::Single(e) => vec![e],
            RemovableClass::Doubleton(e, f) => vec![e, f],
        }
    }
}

pub(crate) fn is_mc_masks(adj: &[u64], alive: VertexSet) -> bool {
    alive.len() >= 2 && components(adj, alive).len() == 1 && every_pair_in_pm(adj, alive.0)
}

pub fn is_matching_covered(g: &Multigraph) -> bool {
    is_mc_masks(&g.adjacency(), g.vertices())
}

fn require_mc(g: &Multigraph) -> Result<()> {
    if is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

/// Adjacency masks of `g` with the listed edges removed (a pair stays
/// adjacent while some parallel copy survives).
fn adjacency_without(g: &Multigraph, removed: &[EdgeId]) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if !removed.contains(&i) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn mc_after_removing(g: &Multigraph, removed: &[EdgeId]) -> bool {
    is_mc_masks(&adjacency_without(g, removed), g.vertices())
}

pub fn is_removable_edge(g: &Multigraph, e: EdgeId) -> Result<bool> {
    g.check_edge(e)?;
    require_mc(g)?;
    Ok(mc_after_removing(g, &[e]))
}

fn removable_flags(g: &Multigraph) -> Vec<bool> {
    (0..g.m()).map(|e| mc_after_removing(g, &[e])).collect()
}

pub fn removable_edges(g: &Multigraph) -> Result<Vec<EdgeId>> {
    require_mc(g)?;
    Ok(removable_flags(g)
        .into_iter()
        .enumerate()
        .filter_map(|(e, r)| r.then_some(e))
        .collect())
}

fn doubletons_given(g: &Multigraph, removable: &[bool]) -> Vec<(EdgeId, EdgeId)> {
    let mut out = Vec::new();
    for e in 0..g.m() {
        if removable[e] {
            continue;
        }
        for f in e + 1..g.m() {
            if !removable[f] && mc_after_removing(g, &[e, f]) {
                out.push((e, f));
            }
        }
    }
    out
}

/// Pairs `{e, f}` with `G − e − f` matching covered while neither `G − e`
/// nor `G − f` is.
pub fn removable_doubletons(g: &Multigraph) -> Result<Vec<(EdgeId, EdgeId)>> {
    require_mc(g)?;
    Ok(doubletons_given(g, &removable_flags(g)))
}

/// All removable edges as singles followed by all removable doubletons.
pub fn removable_classes(g: &Multigraph) -> Result<Vec<RemovableClass>> {
    require_mc(g)?;
    let flags = removable_flags(g);
    let mut out: Vec<RemovableClass> = flags
        .iter()
        .enumerate()
        .filter_map(|(e, &r)| r.then_some(RemovableClass::Single(e)))
        .collect();
    out.extend(
        doubletons_given(g, &flags)
            .into_iter()
            .map(|(e, f)| RemovableClass::Doubleton(e, f)),
    );
    Ok(out)
}

/// Graphs on fewer than four vertices are never bicritical.
pub fn is_bicritical(g: &Multigraph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let adj = g.adjacency();
    let all = g.vertices();
    (0..n).all(|u| (u + 1..n).all(|v| has_pm_masks(&adj, all.without(u).without(v).0)))
}

pub fn is_brick(g: &Multigraph) -> bool {
    is_bicritical(g) && g.is_k_connected(3)
}

/// Matching covered with no removable edge.
pub fn is_minimal_mc(g: &Multigraph) -> bool {
    is_matching_covered(g) && removable_flags(g).iter().all(|&r| !r)
}

/// A pair of edges whose deletion leaves a bipartite matching covered graph,
/// the lexicographically least one if several exist.
pub fn is_near_bipartite(g: &Multigraph) -> Result<Option<(EdgeId, EdgeId)>> {
    require_mc(g)?;
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    for e in 0..g.m() {
        for f in e + 1..g.m() {
            let h = g.delete_edges(&[e, f])?;
            if h.is_bipartite() && is_matching_covered(&h) {
                return Ok(Some((e, f)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_perfect_matchings;

    fn wheel(k: usize) -> Multigraph {
        let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend((0..k).map(|i| (i, k)));
        Multigraph::new(k + 1, edges).unwrap()
    }

    /// Matching covered straight from the definition: every edge appears in
    /// an enumerated perfect matching.
    fn mc_by_enumeration(g: &Multigraph) -> bool {
        if g.n() < 2 || !g.is_connected() {
            return false;
        }
        let pms = enumerate_perfect_matchings(g).unwrap();
        (0..g.m()).all(|e| pms.iter().any(|m| m.contains(e)))
    }

    #[test]
    fn exemplars() {
        for g in [
            Multigraph::complete(2),
            Multigraph::cycle(6),
            Multigraph::complete(4),
            Multigraph::prism(),
            wheel(5),
        ] {
            assert!(is_matching_covered(&g));
        }
        assert!(!is_matching_covered(&Multigraph::path(4)));
        let mut k4p = Multigraph::complete(4);
        let mut e = k4p.edges().to_vec();
        e.push((0, 4));
        k4p = Multigraph::new(5, e).unwrap();
        assert!(!is_matching_covered(&k4p));
    }

    #[test]
    fn agrees_with_enumeration_on_small_graphs() {
        for n in 2..=7 {
            for g in crate::generate::enumerate_connected_graphs(n, 1).unwrap() {
                assert_eq!(is_matching_covered(&g), mc_by_enumeration(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn wheel_spokes_removable_rim_not() {
        let w5 = wheel(5);
        let r = removable_edges(&w5).unwrap();
        assert_eq!(r, vec![5, 6, 7, 8, 9]);
        assert!(removable_doubletons(&w5).unwrap().is_empty());
    }

    #[test]
    fn k4_and_prism_classes() {
        let k4 = Multigraph::complete(4);
        assert!(removable_edges(&k4).unwrap().is_empty());
        let d = removable_doubletons(&k4).unwrap();
        assert_eq!(d.len(), 3);
        for (e, f) in d {
            let (a, b) = k4.endpoints(e);
            let (c, x) = k4.endpoints(f);
            assert_eq!(VertexSet::from_slice(&[a, b, c, x]).len(), 4);
        }
        let p = Multigraph::prism();
        assert!(removable_edges(&p).unwrap().is_empty());
        let mut d = removable_doubletons(&p).unwrap();
        d.sort();
        // triangle edges i and i+3 are {a_i a_j} and {b_i b_j}
        assert_eq!(d, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn classes_partition() {
        let w5 = wheel(5);
        assert_eq!(removable_classes(&w5).unwrap().len(), 5);
        assert_eq!(removable_classes(&Multigraph::complete(4)).unwrap().len(), 3);
    }

    #[test]
    fn bicritical_and_bricks() {
        assert!(is_bicritical(&Multigraph::complete(4)));
        assert!(!is_bicritical(&Multigraph::cycle(6)));
        assert!(is_bicritical(&Multigraph::prism()));
        assert!(!is_bicritical(&Multigraph::complete(2)));
        for g in [Multigraph::complete(4), Multigraph::prism(), wheel(5)] {
            assert!(is_brick(&g));
        }
        assert!(!is_brick(&Multigraph::cycle(6)));
        assert!(!is_brick(&Multigraph::complete_bipartite(3, 3)));
        assert!(is_brick(&Multigraph::petersen()));
    }

    #[test]
    fn minimal() {
        assert!(is_minimal_mc(&Multigraph::cycle(6)));
        assert!(is_minimal_mc(&Multigraph::complete(4)));
        assert!(is_minimal_mc(&Multigraph::prism()));
        assert!(!is_minimal_mc(&wheel(5)));
    }

    #[test]
    fn near_bipartite() {
        assert!(is_near_bipartite(&Multigraph::complete(4)).unwrap().is_some());
        let (e, f) = is_near_bipartite(&Multigraph::prism()).unwrap().unwrap();
        let h = Multigraph::prism().delete_edges(&[e, f]).unwrap();
        assert!(h.is_bipartite() && is_matching_covered(&h));
        assert_eq!(is_near_bipartite(&Multigraph::petersen()).unwrap(), None);
        assert_eq!(is_near_bipartite(&Multigraph::cycle(6)), Err(Error::Bipartite));
    }

    #[test]
    fn parallel_edges_removable() {
        let mut edges = Multigraph::complete(4).edges().to_vec();
        edges.push((0, 1));
        let g = Multigraph::new(4, edges).unwrap();
        let r = removable_edges(&g).unwrap();
        assert!(r.contains(&0) && r.contains(&6));
    }
}
