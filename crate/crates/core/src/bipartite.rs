//! Bipartite matching covered graphs: P-sets, removability certificates,
//! tight cuts by colour counts, and contraction of a barrier's odd
//! components.

use serde::{Deserialize, Serialize};

use crate::cuts::{barriers, is_barrier};
use crate::error::{Error, Result};
use crate::graph::{components, EdgeId, Multigraph, VertexId, VertexSet};
use crate::limits::Limits;
use crate::mc::{is_matching_covered, is_mc_masks, removable_edges};

/// Colour classes of a connected bipartite graph; `a` holds vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Bipartition {
    pub fn of(g: &Multigraph) -> Option<Self> {
        let colors = g.bipartition()?;
        let a: VertexSet = (0..g.n()).filter(|&v| !colors[v]).collect();
        Some(Bipartition {
            a,
            b: g.vertices().difference(a),
        })
    }
}

fn require_bipartite_mc(g: &Multigraph) -> Result<Bipartition> {
    match Bipartition::of(g) {
        Some(p) if is_matching_covered(g) => Ok(p),
        _ => Err(Error::NotBipartiteMC),
    }
}

/// Which of the two single-crossing conditions a P-set meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PSide {
    /// Exactly one edge joins `X ∩ A` to `X̄ ∩ B`.
    OutOfShoreA,
    /// Exactly one edge joins `X̄ ∩ A` to `X ∩ B`.
    IntoShoreB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PSet {
    pub set: VertexSet,
    pub side: PSide,
}

fn p_side(g: &Multigraph, part: Bipartition, x: VertexSet) -> Option<PSide> {
    let xa = x.intersection(part.a);
    let xb = x.intersection(part.b);
    if xa.len() != xb.len() {
        return None;
    }
    let out_a = g.count_between(xa, part.b.difference(xb));
    let in_b = g.count_between(part.a.difference(xa), xb);
    if out_a == 1 {
        Some(PSide::OutOfShoreA)
    } else if in_b == 1 {
        Some(PSide::IntoShoreB)
    } else {
        None
    }
}

fn require_p_set_domain(g: &Multigraph) -> Result<Bipartition> {
    let part = require_bipartite_mc(g)?;
    if g.n() < 4 {
        return Err(Error::NotBipartiteMC);
    }
    Ok(part)
}

/// `X` is balanced and exactly one edge crosses from one colour of `X` to
/// the other colour outside `X`.
pub fn is_p_set(g: &Multigraph, x: VertexSet) -> Result<Option<PSet>> {
    let part = require_p_set_domain(g)?;
    Ok(p_side(g, part, x).map(|side| PSet { set: x, side }))
}

pub fn all_p_sets(g: &Multigraph) -> Result<Vec<PSet>> {
    let part = require_p_set_domain(g)?;
    let n = g.n();
    let limit = Limits::get().max_subset_vertices;
    if n > limit {
        return Err(Error::BoundExceeded {
            what: "P-set search vertices",
            value: n,
            limit,
        });
    }
    Ok((1u64..(1u64 << n) - 1)
        .filter_map(|m| {
            let x = VertexSet(m);
            p_side(g, part, x).map(|side| PSet { set: x, side })
        })
        .collect())
}

/// A P-set of least size, ties broken by the lexicographically least sorted
/// vertex list.
pub fn minimum_p_set(g: &Multigraph) -> Result<Option<PSet>> {
    Ok(all_p_sets(g)?
        .into_iter()
        .min_by(|p, q| {
            p.set
                .len()
                .cmp(&q.set.len())
                .then_with(|| p.set.to_vec().cmp(&q.set.to_vec()))
        }))
}

/// Witness that an edge `uv` (`u ∈ A`) is not removable: `A₁ ∋ u`,
/// `B₁ ∌ v`, `G[A₁ ∪ B₁]` matching covered, and `uv` the only edge from
/// `A₁` to `B ∖ B₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonremovableCertificate {
    pub a1: VertexSet,
    pub b1: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteRemovability {
    pub removable: bool,
    pub certificate: Option<NonremovableCertificate>,
}

/// Checks a certificate for edge `e` against its defining conditions.
pub fn check_certificate(g: &Multigraph, e: EdgeId, cert: NonremovableCertificate) -> Result<bool> {
    g.check_edge(e)?;
    let part = require_bipartite_mc(g)?;
    let (u, v) = oriented(part, g.endpoints(e));
    Ok(certificate_holds(g, part, u, v, cert))
}

fn oriented(part: Bipartition, (x, y): (VertexId, VertexId)) -> (VertexId, VertexId) {
    if part.a.contains(x) {
        (x, y)
    } else {
        (y, x)
    }
}

fn certificate_holds(
    g: &Multigraph,
    part: Bipartition,
    u: VertexId,
    v: VertexId,
    c: NonremovableCertificate,
) -> bool {
    let NonremovableCertificate { a1, b1 } = c;
    a1.is_subset(part.a)
        && b1.is_subset(part.b)
        && !a1.is_empty()
        && !b1.is_empty()
        && a1 != part.a
        && b1 != part.b
        && a1.contains(u)
        && !b1.contains(v)
        && g.count_between(a1, part.b.difference(b1)) == 1
        && is_mc_masks(&g.adjacency(), a1.union(b1))
}

/// A certificate for `uv`, found by trying every `A₁ ∋ u` and every `B₁`
/// containing the other neighbours of `A₁`.
fn find_certificate(g: &Multigraph, part: Bipartition, u: VertexId, v: VertexId) -> Option<NonremovableCertificate> {
    let adj = g.adjacency();
    let a_rest: Vec<VertexId> = part.a.without(u).to_vec();
    for sub in 0u64..(1u64 << a_rest.len()) {
        let a1 = VertexSet::from_slice(
            &a_rest
                .iter()
                .enumerate()
                .filter(|(i, _)| sub >> i & 1 == 1)
                .map(|(_, &w)| w)
                .collect::<Vec<_>>(),
        )
        .with(u);
        if a1 == part.a {
            continue;
        }
        if a1.without(u).iter().any(|w| adj[w] >> v & 1 == 1) {
            continue;
        }
        let forced = a1
            .iter()
            .fold(VertexSet::EMPTY, |acc, w| acc.union(VertexSet(adj[w])))
            .without(v);
        // G[A₁ ∪ B₁] needs |B₁| = |A₁| and B₁ ⊇ N(A₁) − v
        if forced.len() > a1.len() {
            continue;
        }
        let free: Vec<VertexId> = part.b.difference(forced).without(v).to_vec();
        let need = a1.len() - forced.len();
        if need > free.len() {
            continue;
        }
        let mut found = None;
        crate::graph::for_each_subset_of_size(free.len(), need, |s| {
            let extra = VertexSet::from_slice(&s.iter().map(|i| free[i]).collect::<Vec<_>>());
            let c = NonremovableCertificate {
                a1,
                b1: forced.union(extra),
            };
            if certificate_holds(g, part, u, v, c) {
                found = Some(c);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Decides removability of `e` directly; for a nonremovable edge also
/// searches for a certificate.
pub fn is_removable_bipartite(g: &Multigraph, e: EdgeId) -> Result<BipartiteRemovability> {
    g.check_edge(e)?;
    let part = require_bipartite_mc(g)?;
    if g.m() < 2 {
        return Err(Error::NotBipartiteMC);
    }
    let removable = crate::mc::is_removable_edge(g, e)?;
    let certificate = if removable {
        None
    } else {
        let (u, v) = oriented(part, g.endpoints(e));
        find_certificate(g, part, u, v)
    };
    Ok(BipartiteRemovability {
        removable,
        certificate,
    })
}

/// A certificate for `e` whenever one exists, whether or not `e` is
/// removable. Used to test both directions of the certificate criterion.
pub fn search_certificate(g: &Multigraph, e: EdgeId) -> Result<Option<NonremovableCertificate>> {
    g.check_edge(e)?;
    let part = require_bipartite_mc(g)?;
    let (u, v) = oriented(part, g.endpoints(e));
    Ok(find_certificate(g, part, u, v))
}

/// Tightness from colour counts: the shore's two colours differ by one and
/// every cut edge meets the larger colour of the shore.
pub fn is_tight_bipartite(g: &Multigraph, x: VertexSet) -> Result<bool> {
    crate::cuts::check_shore(g, x)?;
    let part = require_bipartite_mc(g)?;
    let xa = x.intersection(part.a);
    let xb = x.intersection(part.b);
    let larger = match xa.len() as isize - xb.len() as isize {
        1 => xa,
        -1 => xb,
        _ => return Ok(false),
    };
    Ok(g.boundary(x).into_iter().all(|e| {
        let (p, q) = g.endpoints(e);
        larger.contains(p) || larger.contains(q)
    }))
}

/// `H(G, B)`: the bipartite graph obtained by shrinking every nontrivial
/// odd component of `G − B`. Vertices `0..|B|` are the barrier vertices in
/// increasing order, then one vertex per odd component ordered by least
/// vertex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BarrierContraction {
    pub graph: Multigraph,
    pub barrier: VertexSet,
    /// Input vertices each vertex of `graph` stands for.
    pub origin: Vec<VertexSet>,
    /// Input edge each edge of `graph` came from.
    pub edge_origin: Vec<EdgeId>,
}

impl BarrierContraction {
    /// Vertices of `graph` coming from the barrier.
    pub fn barrier_side(&self) -> VertexSet {
        VertexSet::full(self.barrier.len())
    }

    /// Vertices of `graph` coming from odd components.
    pub fn component_side(&self) -> VertexSet {
        self.graph.vertices().difference(self.barrier_side())
    }
}

pub fn barrier_contraction(g: &Multigraph, b: VertexSet) -> Result<BarrierContraction> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    if !is_barrier(g, b) {
        return Err(Error::NotABarrier);
    }
    if b.len() == 1 {
        return Err(Error::BarrierTrivial);
    }
    if barriers(g)?
        .iter()
        .any(|c| c.set != b && b.is_subset(c.set))
    {
        return Err(Error::BarrierNotMaximal);
    }
    let mut comps = components(&g.adjacency(), g.vertices().difference(b));
    comps.sort_by_key(|c| c.first());
    let mut origin: Vec<VertexSet> = b.iter().map(VertexSet::singleton).collect();
    origin.extend(comps.iter().copied());
    let mut image = vec![0; g.n()];
    for (i, s) in origin.iter().enumerate() {
        for v in s.iter() {
            image[v] = i;
        }
    }
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (e, &(p, q)) in g.edges().iter().enumerate() {
        if image[p] != image[q] {
            edges.push((image[p], image[q]));
            edge_origin.push(e);
        }
    }
    Ok(BarrierContraction {
        graph: Multigraph::new(origin.len(), edges)?,
        barrier: b,
        origin,
        edge_origin,
    })
}

/// Component-side vertices of `H(G, B)` incident with a removable edge of
/// `H(G, B)`.
pub fn w_set(h: &BarrierContraction) -> Result<VertexSet> {
    let side = h.component_side();
    let mut w = VertexSet::EMPTY;
    for e in removable_edges(&h.graph)? {
        let (p, q) = h.graph.endpoints(e);
        for x in [p, q] {
            if side.contains(x) {
                w.insert(x);
            }
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::is_tight;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn c6_p_sets() {
        let c6 = Multigraph::cycle(6);
        // A = {0, 2, 4}; from {0, 1} the edges 0-5 and 1-2 leave, one of
        // each kind, and the first condition is reported
        let p = is_p_set(&c6, vs(&[0, 1])).unwrap().unwrap();
        assert_eq!(p.side, PSide::OutOfShoreA);
        for p in all_p_sets(&c6).unwrap() {
            let comp = p.set.complement(6);
            assert!(is_p_set(&c6, comp).unwrap().is_some());
        }
        let m = minimum_p_set(&c6).unwrap().unwrap();
        assert_eq!(m.set, vs(&[0, 1]));
    }

    #[test]
    fn k33_has_no_p_set() {
        assert!(all_p_sets(&Multigraph::complete_bipartite(3, 3)).unwrap().is_empty());
    }

    #[test]
    fn domain_errors() {
        assert_eq!(all_p_sets(&Multigraph::complete(4)), Err(Error::NotBipartiteMC));
        assert_eq!(all_p_sets(&Multigraph::complete(2)), Err(Error::NotBipartiteMC));
        assert_eq!(is_tight_bipartite(&Multigraph::path(4), vs(&[0])), Err(Error::NotBipartiteMC));
    }

    #[test]
    fn c6_edges_have_certificates() {
        let c6 = Multigraph::cycle(6);
        for e in 0..6 {
            let r = is_removable_bipartite(&c6, e).unwrap();
            assert!(!r.removable);
            let c = r.certificate.unwrap();
            assert!(check_certificate(&c6, e, c).unwrap());
        }
    }

    #[test]
    fn k33_edges_removable() {
        let k = Multigraph::complete_bipartite(3, 3);
        for e in 0..9 {
            let r = is_removable_bipartite(&k, e).unwrap();
            assert!(r.removable);
            assert!(search_certificate(&k, e).unwrap().is_none());
        }
        let c4d = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]).unwrap();
        assert!(is_removable_bipartite(&c4d, 4).unwrap().removable);
    }

    #[test]
    fn bipartite_tightness_matches_enumeration() {
        let c6 = Multigraph::cycle(6);
        assert!(is_tight_bipartite(&c6, vs(&[0, 1, 2])).unwrap());
        assert!(!is_tight_bipartite(&c6, vs(&[0, 1])).unwrap());
        let k = Multigraph::complete_bipartite(3, 3);
        for m in 1u64..63 {
            let x = VertexSet(m);
            assert_eq!(is_tight_bipartite(&k, x).unwrap(), is_tight(&k, x).unwrap());
        }
    }

    /// Two triangles joined to a barrier {6, 7}: vertices 0–2 and 3–5 form
    /// triangles, and each of 6, 7 is adjacent to both triangles.
    fn two_triangles() -> Multigraph {
        Multigraph::new(
            8,
            vec![
                (0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                (6, 0), (6, 3), (7, 1), (7, 4), (6, 2), (7, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn barrier_contraction_by_hand() {
        let g = two_triangles();
        assert!(is_matching_covered(&g));
        let h = barrier_contraction(&g, vs(&[6, 7])).unwrap();
        // hand contraction: 6 → 0, 7 → 1, triangle {0,1,2} → 2, {3,4,5} → 3
        assert_eq!(h.origin, vec![vs(&[6]), vs(&[7]), vs(&[0, 1, 2]), vs(&[3, 4, 5])]);
        assert_eq!(h.graph.multiplicity(0, 2), 2);
        assert_eq!(h.graph.multiplicity(0, 3), 1);
        assert_eq!(h.graph.multiplicity(1, 2), 1);
        assert_eq!(h.graph.multiplicity(1, 3), 2);
        assert_eq!(h.graph.m(), 6);
        assert!(h.graph.is_bipartite() && is_matching_covered(&h.graph));
        // the doubled edges are removable, so both component vertices count
        assert_eq!(w_set(&h).unwrap(), vs(&[2, 3]));
    }

    #[test]
    fn barrier_contraction_errors() {
        let g = two_triangles();
        assert_eq!(barrier_contraction(&g, vs(&[6])).unwrap_err(), Error::BarrierTrivial);
        assert_eq!(barrier_contraction(&g, vs(&[0, 3])).unwrap_err(), Error::NotABarrier);
        assert_eq!(
            barrier_contraction(&Multigraph::cycle(6), vs(&[0, 2, 4])).unwrap_err(),
            Error::Bipartite
        );
    }
}
