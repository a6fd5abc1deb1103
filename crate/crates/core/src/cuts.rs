//! Edge cuts, barriers and 2-separations.

use serde::{Deserialize, Serialize};

use crate::decomposition::is_near_brick;
use crate::error::{Error, Result};
use crate::graph::{components, odd_components, EdgeId, Multigraph, VertexId, VertexSet};
use crate::limits::Limits;
use crate::matching::{for_each_perfect_matching, has_pm_masks};
use crate::mc::{is_matching_covered, is_mc_masks};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub shore: VertexSet,
    pub boundary: Vec<EdgeId>,
}

impl EdgeCut {
    pub fn new(g: &Multigraph, shore: VertexSet) -> Result<Self> {
        check_shore(g, shore)?;
        Ok(EdgeCut {
            shore,
            boundary: g.boundary(shore),
        })
    }

    pub fn is_trivial(&self, n: usize) -> bool {
        self.shore.len() == 1 || self.shore.len() + 1 == n
    }

    pub fn other_shore(&self, n: usize) -> VertexSet {
        self.shore.complement(n)
    }
}

pub(crate) fn check_shore(g: &Multigraph, x: VertexSet) -> Result<()> {
    if x.is_empty() || !x.is_subset(g.vertices()) || x == g.vertices() {
        return Err(Error::BadShore);
    }
    Ok(())
}

fn require_mc(g: &Multigraph) -> Result<()> {
    if is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

/// The perfect matchings of `g` as vertex pairings (`mate[v]`); parallel
/// copies of an edge give the same pairing and are listed once.
pub fn pairings(g: &Multigraph) -> Result<Vec<Vec<u8>>> {
    let simple = g.underlying_simple();
    let mut out = Vec::new();
    for_each_perfect_matching(&simple, |pm| {
        let mut mate = vec![0u8; g.n()];
        for &e in pm {
            let (a, b) = simple.endpoints(e);
            mate[a] = b as u8;
            mate[b] = a as u8;
        }
        out.push(mate);
        true
    })?;
    Ok(out)
}

fn crossing(mate: &[u8], x: VertexSet) -> usize {
    x.iter().filter(|&v| !x.contains(mate[v] as usize)).count()
}

pub(crate) fn tight_given(pairings: &[Vec<u8>], x: VertexSet) -> bool {
    pairings.iter().all(|m| crossing(m, x) == 1)
}

/// Every perfect matching meets `∂(X)` in exactly one edge.
pub fn is_tight(g: &Multigraph, x: VertexSet) -> Result<bool> {
    check_shore(g, x)?;
    require_mc(g)?;
    let mut tight = true;
    let simple = g.underlying_simple();
    for_each_perfect_matching(&simple, |pm| {
        let c = pm
            .iter()
            .filter(|&&e| {
                let (a, b) = simple.endpoints(e);
                x.contains(a) != x.contains(b)
            })
            .count();
        tight = c == 1;
        tight
    })?;
    Ok(tight)
}

/// Both cut-contractions are matching covered.
pub fn is_separating(g: &Multigraph, x: VertexSet) -> Result<bool> {
    check_shore(g, x)?;
    require_mc(g)?;
    Ok(separating_unchecked(g, x))
}

pub(crate) fn separating_unchecked(g: &Multigraph, x: VertexSet) -> bool {
    if x.len() % 2 == 0 || (g.n() - x.len()) % 2 == 0 {
        return false;
    }
    let y = x.complement(g.n());
    [x, y].iter().all(|&s| {
        let c = g.contract(s).expect("valid shore");
        is_mc_masks(&c.graph.adjacency(), c.graph.vertices())
    })
}

/// The two cut-contractions `(G/X, G/X̄)`: the first shrinks `X`, the second
/// shrinks its complement.
pub fn cut_contractions(g: &Multigraph, x: VertexSet) -> Result<(Multigraph, Multigraph)> {
    check_shore(g, x)?;
    Ok((
        g.contract(x)?.graph,
        g.contract(x.complement(g.n()))?.graph,
    ))
}

/// Odd shores `X ∋ 0` with `3 ≤ |X| ≤ n − 3` whose two sides both induce
/// connected subgraphs, in increasing order of mask. Every nontrivial
/// separating cut of a matching covered graph has such a shore.
pub fn candidate_shores(g: &Multigraph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let limit = Limits::get().max_shore_vertices;
    if n > limit {
        return Err(Error::BoundExceeded {
            what: "cut enumeration vertices",
            value: n,
            limit,
        });
    }
    if n < 6 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let adj = g.adjacency();
    let all = g.vertices();
    let mut out = Vec::new();
    for rest in 0u64..(1u64 << (n - 1)) {
        let x = VertexSet(rest << 1 | 1);
        let k = x.len();
        if k % 2 == 0 || k < 3 || k + 3 > n {
            continue;
        }
        if components(&adj, x).len() == 1 && components(&adj, all.difference(x)).len() == 1 {
            out.push(x);
        }
    }
    Ok(out)
}

/// All nontrivial tight cuts, one shore per cut (the one containing vertex 0).
pub fn nontrivial_tight_cuts(g: &Multigraph) -> Result<Vec<EdgeCut>> {
    require_mc(g)?;
    let shores = candidate_shores(g)?;
    let p = pairings(g)?;
    Ok(shores
        .into_iter()
        .filter(|&x| tight_given(&p, x))
        .map(|x| EdgeCut {
            shore: x,
            boundary: g.boundary(x),
        })
        .collect())
}

/// A nonempty vertex set `B` with `o(G − B) = |B|`, with the vertex sets of
/// the odd components of `G − B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barrier {
    pub set: VertexSet,
    pub odd_components: Vec<VertexSet>,
}

impl Barrier {
    pub fn is_trivial(&self) -> bool {
        self.set.len() == 1
    }
}

fn odd_components_of(adj: &[u64], alive: VertexSet) -> Vec<VertexSet> {
    components(adj, alive)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect()
}

pub fn is_barrier(g: &Multigraph, b: VertexSet) -> bool {
    !b.is_empty()
        && b.is_subset(g.vertices())
        && odd_components(&g.adjacency(), g.vertices().difference(b)) == b.len()
}

pub fn barrier(g: &Multigraph, b: VertexSet) -> Result<Barrier> {
    if !is_barrier(g, b) {
        return Err(Error::NotABarrier);
    }
    Ok(Barrier {
        set: b,
        odd_components: odd_components_of(&g.adjacency(), g.vertices().difference(b)),
    })
}

/// Every barrier, ordered by mask. In a matching covered graph only
/// independent sets are examined, since barriers there are independent.
pub fn barriers(g: &Multigraph) -> Result<Vec<Barrier>> {
    let n = g.n();
    let adj = g.adjacency();
    if !has_pm_masks(&adj, g.vertices().0) {
        return Err(Error::NoPerfectMatching);
    }
    let limits = Limits::get();
    let mc = is_matching_covered(g);
    let limit = if mc { limits.max_pm_vertices } else { limits.max_subset_vertices };
    if n > limit {
        return Err(Error::BoundExceeded {
            what: "barrier enumeration vertices",
            value: n,
            limit,
        });
    }
    let all = g.vertices();
    let mut found = Vec::new();
    let mut test = |b: VertexSet| {
        let rest = all.difference(b);
        if odd_components(&adj, rest) == b.len() {
            found.push(Barrier {
                set: b,
                odd_components: odd_components_of(&adj, rest),
            });
        }
    };
    if mc {
        fn independent(v: usize, n: usize, cur: VertexSet, blocked: u64, adj: &[u64], f: &mut dyn FnMut(VertexSet)) {
            if v == n {
                if !cur.is_empty() {
                    f(cur);
                }
                return;
            }
            independent(v + 1, n, cur, blocked, adj, f);
            if blocked >> v & 1 == 0 {
                independent(v + 1, n, cur.with(v), blocked | adj[v], adj, f);
            }
        }
        independent(0, n, VertexSet::EMPTY, 0, &adj, &mut test);
    } else {
        for mask in 1u64..(1u64 << n) {
            test(VertexSet(mask));
        }
    }
    found.sort_by_key(|b| b.set.0);
    Ok(found)
}

/// Barriers not properly contained in another barrier.
pub fn maximal_barriers(g: &Multigraph) -> Result<Vec<Barrier>> {
    let all = barriers(g)?;
    Ok(all
        .iter()
        .filter(|b| {
            !all
                .iter()
                .any(|c| c.set != b.set && b.set.is_subset(c.set))
        })
        .cloned()
        .collect())
}

/// The cut `∂(V(Q))` for an odd component `Q` of `G − B`.
pub fn barrier_cut(g: &Multigraph, b: VertexSet, q: VertexSet) -> Result<EdgeCut> {
    let bar = barrier(g, b)?;
    if !bar.odd_components.contains(&q) {
        return Err(Error::NotAComponent);
    }
    EdgeCut::new(g, q)
}

/// `G[X]` is an odd component of `G − B` and the only nontrivial one.
pub fn is_special_barrier_cut(g: &Multigraph, b: VertexSet, x: VertexSet) -> Result<bool> {
    let bar = barrier(g, b)?;
    if !bar.odd_components.contains(&x) {
        return Err(Error::NotAComponent);
    }
    Ok(x.len() > 1
        && bar
            .odd_components
            .iter()
            .all(|&c| c == x || c.len() == 1))
}

/// A barrier making `∂(X)` a special barrier-cut, with `X` or its
/// complement as the component, if one exists.
pub fn special_barrier_for(g: &Multigraph, x: VertexSet) -> Result<Option<Barrier>> {
    check_shore(g, x)?;
    let y = x.complement(g.n());
    for b in barriers(g)? {
        for s in [x, y] {
            if s.len() > 1
                && b.odd_components.contains(&s)
                && b.odd_components.iter().all(|&c| c == s || c.len() == 1)
            {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}

fn two_separation_components(adj: &[u64], all: VertexSet, u: VertexId, v: VertexId) -> Option<Vec<VertexSet>> {
    let comps = components(adj, all.without(u).without(v));
    (comps.len() >= 2 && comps.iter().all(|c| c.len() % 2 == 0)).then_some(comps)
}

/// Pairs `{u, v}` (with `u < v`) such that `G − u − v` is disconnected with
/// only even components.
pub fn two_separations(g: &Multigraph) -> Result<Vec<(VertexId, VertexId)>> {
    require_mc(g)?;
    let adj = g.adjacency();
    let all = g.vertices();
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if two_separation_components(&adj, all, u, v).is_some() {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// The cuts `∂(V(G₁) + u)` and `∂(V(G₁) + v)` for every split of the
/// components of `G − u − v` into a nonempty group `G₁` (containing the
/// first component) and a nonempty remainder.
pub fn two_separation_cuts(g: &Multigraph, u: VertexId, v: VertexId) -> Result<Vec<EdgeCut>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let comps = if u == v {
        None
    } else {
        two_separation_components(&g.adjacency(), g.vertices(), u, v)
    }
    .ok_or(Error::NotA2Separation)?;
    let k = comps.len();
    let mut out = Vec::new();
    for rest in 0u64..(1u64 << (k - 1)) - 1 {
        let pick = rest << 1 | 1;
        let g1: VertexSet = VertexSet(
            (0..k)
                .filter(|i| pick >> i & 1 == 1)
                .fold(0, |acc, i| acc | comps[i].0),
        );
        out.push(EdgeCut::new(g, g1.with(u))?);
        out.push(EdgeCut::new(g, g1.with(v))?);
    }
    Ok(out)
}

/// A separating cut that is not tight and whose contractions are both
/// near-bricks.
pub fn is_robust(g: &Multigraph, x: VertexSet) -> Result<bool> {
    if !is_separating(g, x)? || is_tight(g, x)? {
        return Ok(false);
    }
    let (a, b) = cut_contractions(g, x)?;
    Ok(is_near_brick(&a)? && is_near_brick(&b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn trivial_cuts_tight() {
        let p = Multigraph::prism();
        for v in 0..6 {
            assert!(is_tight(&p, VertexSet::singleton(v)).unwrap());
        }
    }

    #[test]
    fn prism_triangle_cut() {
        let p = Multigraph::prism();
        let t = vs(&[0, 1, 2]);
        assert!(!is_tight(&p, t).unwrap());
        assert!(is_separating(&p, t).unwrap());
        assert!(is_robust(&p, t).unwrap());
    }

    #[test]
    fn c6_cuts() {
        let c = Multigraph::cycle(6);
        assert!(is_tight(&c, vs(&[0, 1, 2])).unwrap());
        assert!(is_separating(&c, vs(&[0, 1, 2])).unwrap());
        assert!(!is_separating(&c, vs(&[0, 1])).unwrap());
        assert!(!is_robust(&c, vs(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn bad_shores() {
        let c = Multigraph::cycle(6);
        assert_eq!(is_tight(&c, VertexSet::EMPTY), Err(Error::BadShore));
        assert_eq!(is_tight(&c, c.vertices()), Err(Error::BadShore));
        assert_eq!(is_tight(&Multigraph::path(4), vs(&[0])), Err(Error::NotMatchingCovered));
    }

    #[test]
    fn barriers_of_small_graphs() {
        let k4 = Multigraph::complete(4);
        let b = barriers(&k4).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(Barrier::is_trivial));
        let p = barriers(&Multigraph::prism()).unwrap();
        assert!(p.iter().all(Barrier::is_trivial));
        let c6 = Multigraph::cycle(6);
        let b = maximal_barriers(&c6).unwrap();
        let sets: Vec<_> = b.iter().map(|b| b.set).collect();
        assert_eq!(sets, vec![vs(&[0, 2, 4]), vs(&[1, 3, 5])]);
        assert!(matches!(barriers(&Multigraph::path(3)), Err(Error::NoPerfectMatching)));
    }

    #[test]
    fn barrier_cuts() {
        let c6 = Multigraph::cycle(6);
        let cut = barrier_cut(&c6, vs(&[0, 2, 4]), vs(&[1])).unwrap();
        assert!(cut.is_trivial(6));
        assert_eq!(barrier_cut(&c6, vs(&[0, 3]), vs(&[1])), Err(Error::NotABarrier));
        assert_eq!(barrier_cut(&c6, vs(&[0, 2, 4]), vs(&[1, 3])), Err(Error::NotAComponent));
        assert!(!is_special_barrier_cut(&c6, vs(&[0, 2, 4]), vs(&[1])).unwrap());
    }

    #[test]
    fn two_separation_examples() {
        assert!(two_separations(&Multigraph::complete(4)).unwrap().is_empty());
        // antipodal pairs of C6 leave two paths on two vertices each
        assert_eq!(two_separations(&Multigraph::cycle(6)).unwrap(), vec![(0, 3), (1, 4), (2, 5)]);
        // two 4-cycles 0-1-2-3 and 0-4-5-3... glued on {0, 3}: components
        // {1,2} and {4,5}
        let g = Multigraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        assert!(is_matching_covered(&g));
        assert_eq!(two_separations(&g).unwrap(), vec![(0, 3)]);
        let cuts = two_separation_cuts(&g, 0, 3).unwrap();
        assert_eq!(cuts.len(), 2);
        for c in &cuts {
            assert!(is_tight(&g, c.shore).unwrap());
        }
        assert_eq!(two_separation_cuts(&g, 0, 1), Err(Error::NotA2Separation));
    }

    #[test]
    fn candidate_shores_cover_tight_cuts() {
        let c = Multigraph::cycle(8);
        let shores = candidate_shores(&c).unwrap();
        // paths of length 3 or 5 through vertex 0
        assert_eq!(shores.len(), 3 + 5);
        let tight = nontrivial_tight_cuts(&c).unwrap();
        assert_eq!(tight.len(), 8);
    }
}
