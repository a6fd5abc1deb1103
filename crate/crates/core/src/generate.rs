//! Exhaustive generation of small graphs up to isomorphism, plus the
//! multigraph and random samplers used by the verification campaigns.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::limits::Limits;

pub(crate) fn check_bound(n: usize) -> Result<()> {
    let limit = Limits::get().max_enum_vertices;
    if n > limit {
        return Err(Error::BoundExceeded {
            what: "enumeration vertices",
            value: n,
            limit,
        });
    }
    Ok(())
}

type Level = Arc<Vec<Multigraph>>;

fn cache() -> &'static Mutex<HashMap<usize, Level>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Level>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All simple graphs on `n` vertices (connected or not), one canonical
/// representative per isomorphism class, sorted by canonical form.
///
/// Level `n` is built from level `n − 1` by adding a vertex joined to every
/// possible neighbourhood and keeping the first graph of each class.
pub fn all_graphs(n: usize) -> Result<Level> {
    check_bound(n)?;
    if let Some(l) = cache().lock().unwrap().get(&n) {
        return Ok(l.clone());
    }
    let level: Vec<Multigraph> = if n == 0 {
        vec![Multigraph::empty(0)]
    } else {
        let prev = all_graphs(n - 1)?;
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        for g in prev.iter() {
            for nbrs in 0u64..(1u64 << (n - 1)) {
                let mut edges = g.edges().to_vec();
                edges.extend(VertexSet(nbrs).iter().map(|u| (u, n - 1)));
                let h = Multigraph::new(n, edges)?;
                seen.insert(canonical_form(&h));
            }
        }
        seen.into_iter().map(|f| f.to_graph()).collect()
    };
    let level = Arc::new(level);
    cache().lock().unwrap().insert(n, level.clone());
    Ok(level)
}

/// Connected simple graphs on `n` vertices with minimum degree at least
/// `min_degree`, one per isomorphism class, in canonical-form order.
pub fn enumerate_connected_graphs(n: usize, min_degree: usize) -> Result<Vec<Multigraph>> {
    Ok(all_graphs(n)?
        .iter()
        .filter(|g| g.is_connected() && g.min_degree() >= min_degree)
        .cloned()
        .collect())
}

/// Labelled brute force over all `2^(n choose 2)` edge sets, deduplicated by
/// canonical form. Only meant as a cross-check for small `n`.
pub fn enumerate_connected_graphs_bruteforce(n: usize, min_degree: usize) -> Result<Vec<Multigraph>> {
    if n > 7 {
        return Err(Error::BoundExceeded {
            what: "brute-force enumeration vertices",
            value: n,
            limit: 7,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<_> = VertexSet(mask).iter().map(|i| pairs[i]).collect();
        let g = Multigraph::new(n, edges)?;
        if g.is_connected() && g.min_degree() >= min_degree {
            seen.insert(canonical_form(&g));
        }
    }
    Ok(seen.into_iter().map(|f| f.to_graph()).collect())
}

/// Every multigraph whose underlying simple graph is `g` and whose edge
/// multiplicities are at most `mult_bound`, restricted to raising the
/// multiplicity of edges accepted by `allow`. Deduplicated by isomorphism.
pub fn multigraph_variants(
    g: &Multigraph,
    mult_bound: usize,
    allow: impl Fn(usize, usize) -> bool,
) -> Vec<Multigraph> {
    let simple = g.underlying_simple();
    let free: Vec<(usize, usize)> = simple
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| allow(u, v))
        .collect();
    let extra = mult_bound.saturating_sub(1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut counts = vec![0usize; free.len()];
    loop {
        let mut edges = simple.edges().to_vec();
        for (i, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                edges.push(free[i]);
            }
        }
        let h = Multigraph::new(simple.n(), edges).expect("valid variant");
        if seen.insert(canonical_form(&h)) {
            out.push(h);
        }
        // odometer over counts in 0..=extra
        let mut i = 0;
        loop {
            if i == counts.len() {
                return out;
            }
            if counts[i] < extra {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Uniform labelled graph on `n` vertices (each pair present with
/// probability 1/2), resampled until connected.
pub fn random_connected_graph<R: Rng>(n: usize, rng: &mut R) -> Multigraph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Multigraph::new(n, edges).expect("valid random graph");
        if g.is_connected() {
            return g;
        }
    }
}

/// Random bipartite graph with colour classes `0..a` and `a..a+b`, each pair
/// present with probability `p`.
pub fn random_bipartite_graph<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if rng.gen_bool(p) {
                edges.push((u, a + v));
            }
        }
    }
    Multigraph::new(a + b, edges).expect("valid random graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn graph_counts_match_known_sequence() {
        // number of graphs on n nodes: 1, 1, 2, 4, 11, 34, 156, 1044
        let counts: Vec<usize> = (0..=7).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn n4_min_degree_2() {
        let gs = enumerate_connected_graphs(4, 2).unwrap();
        assert_eq!(gs.len(), 3);
        let c4 = Multigraph::cycle(4);
        let k4 = Multigraph::complete(4);
        let diamond = k4.delete_edges(&[5]).unwrap();
        for h in [c4, k4, diamond] {
            assert!(gs.iter().any(|g| is_isomorphic(g, &h)));
        }
    }

    #[test]
    fn n2_is_k2() {
        let gs = enumerate_connected_graphs(2, 1).unwrap();
        assert_eq!(gs.len(), 1);
        assert!(is_isomorphic(&gs[0], &Multigraph::complete(2)));
    }

    #[test]
    fn matches_bruteforce_up_to_6() {
        for n in 1..=6 {
            for d in 0..=3 {
                let a: Vec<_> = enumerate_connected_graphs(n, d).unwrap().iter().map(canonical_form).collect();
                let b: Vec<_> = enumerate_connected_graphs_bruteforce(n, d).unwrap().iter().map(canonical_form).collect();
                assert_eq!(a, b, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn variants_of_k3() {
        let v = multigraph_variants(&Multigraph::complete(3), 2, |_, _| true);
        // 0, 1, 2 or 3 doubled edges
        assert_eq!(v.len(), 4);
    }
}
