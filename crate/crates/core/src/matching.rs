//! Maximum matchings (Edmonds' blossom shrinking), perfect matching
//! enumeration and Tutte-set certificates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, odd_components, Bits, EdgeId, Multigraph, VertexId, VertexSet};
use crate::limits::Limits;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    pub edges: Vec<EdgeId>,
    pub covered: VertexSet,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self, g: &Multigraph) -> bool {
        self.covered == g.vertices()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }
}

/// A set `S` with more odd components in `G − S` than vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteViolator {
    pub set: VertexSet,
    pub odd_count: usize,
}

/// Augmenting-path search with blossom contraction on the simple graph given
/// by adjacency masks, restricted to the vertices in `alive`.
pub(crate) struct Blossom<'a> {
    adj: &'a [u64],
    pub(crate) alive: u64,
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    pub(crate) fn new(adj: &'a [u64], alive: u64) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            alive,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            queue: Vec::with_capacity(n),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut u64) {
        while self.base[v] != b {
            *blossom |= 1 << self.base[v] | 1 << self.base[self.mate[v]];
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root` and
    /// returns its other end.
    pub(crate) fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        let mut used = 1u64 << root;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in Bits(self.adj[v] & self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut blossom = 0u64;
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in Bits(self.alive) {
                        if blossom >> self.base[i] & 1 == 1 {
                            self.base[i] = cur;
                            if used >> i & 1 == 0 {
                                used |= 1 << i;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    used |= 1 << m;
                    self.queue.push(m);
                }
            }
        }
        None
    }

    pub(crate) fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    pub(crate) fn greedy(&mut self) {
        for v in Bits(self.alive) {
            if self.mate[v] != NONE {
                continue;
            }
            let free = Bits(self.adj[v] & self.alive).find(|&w| self.mate[w] == NONE);
            if let Some(w) = free {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    pub(crate) fn maximize(&mut self) {
        self.greedy();
        for v in Bits(self.alive) {
            if self.mate[v] == NONE {
                if let Some(t) = self.find_path(v) {
                    self.augment(t);
                }
            }
        }
    }

    pub(crate) fn size(&self) -> usize {
        Bits(self.alive).filter(|&v| self.mate[v] != NONE).count() / 2
    }

    pub(crate) fn is_perfect(&self) -> bool {
        Bits(self.alive).all(|v| self.mate[v] != NONE)
    }
}

/// Whether the subgraph induced by `alive` has a perfect matching.
pub(crate) fn has_pm_masks(adj: &[u64], alive: u64) -> bool {
    if alive.count_ones() % 2 == 1 {
        return false;
    }
    let mut b = Blossom::new(adj, alive);
    b.greedy();
    for v in Bits(alive) {
        if b.mate[v] == NONE {
            match b.find_path(v) {
                Some(t) => b.augment(t),
                None => return false,
            }
        }
    }
    true
}

pub(crate) fn matching_number_masks(adj: &[u64], alive: u64) -> usize {
    let mut b = Blossom::new(adj, alive);
    b.maximize();
    b.size()
}

/// Every adjacent pair inside `alive` lies in a perfect matching of the
/// induced subgraph. One blossom search per pair not already covered by a
/// matching found earlier.
pub(crate) fn every_pair_in_pm(adj: &[u64], alive: u64) -> bool {
    if alive.count_ones() % 2 == 1 {
        return false;
    }
    let n = adj.len();
    let mut b = Blossom::new(adj, alive);
    b.maximize();
    if !b.is_perfect() {
        return false;
    }
    let base_mate = b.mate.clone();
    let mut allowed = vec![0u64; n];
    for v in Bits(alive) {
        allowed[v] |= 1 << base_mate[v];
    }
    for u in Bits(alive) {
        let higher = !((2u64 << u) - 1);
        for v in Bits(adj[u] & alive & higher & !allowed[u]) {
            b.mate.copy_from_slice(&base_mate);
            let (a, c) = (base_mate[u], base_mate[v]);
            for w in [u, v, a, c] {
                b.mate[w] = NONE;
            }
            b.alive = alive & !(1 << u) & !(1 << v);
            match b.find_path(a) {
                Some(t) => {
                    b.augment(t);
                    for w in Bits(b.alive) {
                        allowed[w] |= 1 << b.mate[w];
                    }
                    allowed[u] |= 1 << v;
                    allowed[v] |= 1 << u;
                }
                None => return false,
            }
        }
    }
    true
}

/// Maximum-cardinality matching; each matched pair is realised by its
/// lowest-numbered parallel edge.
pub fn max_matching(g: &Multigraph) -> Matching {
    let adj = g.adjacency();
    let mut b = Blossom::new(&adj, g.vertices().0);
    b.maximize();
    lift(g, &b.mate)
}

fn lift(g: &Multigraph, mate: &[usize]) -> Matching {
    let mut edges = Vec::new();
    let mut covered = VertexSet::EMPTY;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if mate[a] == b && !covered.contains(a) {
            covered.insert(a);
            covered.insert(b);
            edges.push(e);
        }
    }
    Matching { edges, covered }
}

pub fn has_perfect_matching(g: &Multigraph) -> bool {
    has_pm_masks(&g.adjacency(), g.vertices().0)
}

/// `o(G − S)`.
pub fn odd_components_count(g: &Multigraph, s: VertexSet) -> usize {
    odd_components(&g.adjacency(), g.vertices().difference(s))
}

/// A set `S` with `o(G − S) > |S|`, or `None` when `G` has a perfect
/// matching. The set is the Gallai–Edmonds set `A(G)`: neighbours of the
/// vertices missed by some maximum matching.
pub fn find_tutte_violator(g: &Multigraph) -> Option<TutteViolator> {
    let adj = g.adjacency();
    let all = g.vertices().0;
    let nu = matching_number_masks(&adj, all);
    if 2 * nu == g.n() {
        return None;
    }
    let mut d = VertexSet::EMPTY;
    for v in 0..g.n() {
        if matching_number_masks(&adj, all & !(1 << v)) == nu {
            d.insert(v);
        }
    }
    let mut a = VertexSet::EMPTY;
    for v in d.iter() {
        a = a.union(VertexSet(adj[v]));
    }
    let a = a.difference(d);
    let odd_count = odd_components(&adj, VertexSet(all).difference(a));
    debug_assert!(odd_count > a.len());
    Some(TutteViolator { set: a, odd_count })
}

/// Calls `f` on every perfect matching (parallel edges distinguished), in
/// lexicographic order of edge ids chosen for the lowest uncovered vertex.
/// Stops early when `f` returns false.
pub fn for_each_perfect_matching(
    g: &Multigraph,
    mut f: impl FnMut(&[EdgeId]) -> bool,
) -> Result<()> {
    let limit = Limits::get().max_pm_vertices;
    if g.n() > limit {
        return Err(Error::BoundExceeded {
            what: "perfect matching enumeration vertices",
            value: g.n(),
            limit,
        });
    }
    if g.n() % 2 == 1 {
        return Ok(());
    }
    let mut inc: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); g.n()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        inc[a].push((e, b));
        inc[b].push((e, a));
    }
    let mut chosen = Vec::with_capacity(g.n() / 2);
    fn rec(
        inc: &[Vec<(EdgeId, VertexId)>],
        left: u64,
        chosen: &mut Vec<EdgeId>,
        f: &mut dyn FnMut(&[EdgeId]) -> bool,
    ) -> bool {
        if left == 0 {
            return f(chosen);
        }
        let v = left.trailing_zeros() as usize;
        for &(e, w) in &inc[v] {
            if left >> w & 1 == 1 {
                chosen.push(e);
                let go = rec(inc, left & !(1 << v) & !(1 << w), chosen, f);
                chosen.pop();
                if !go {
                    return false;
                }
            }
        }
        true
    }
    rec(&inc, g.vertices().0, &mut chosen, &mut f);
    Ok(())
}

pub fn enumerate_perfect_matchings(g: &Multigraph) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, |es| {
        let mut edges = es.to_vec();
        edges.sort_unstable();
        out.push(Matching { edges, covered: g.vertices() });
        true
    })?;
    Ok(out)
}

pub fn count_perfect_matchings(g: &Multigraph) -> Result<usize> {
    let mut c = 0;
    for_each_perfect_matching(g, |_| {
        c += 1;
        true
    })?;
    Ok(c)
}

pub fn has_pm_containing(g: &Multigraph, e: EdgeId) -> Result<bool> {
    g.check_edge(e)?;
    let (a, b) = g.endpoints(e);
    Ok(has_pm_masks(&g.adjacency(), g.vertices().without(a).without(b).0))
}

pub fn has_pm_avoiding_vertices(g: &Multigraph, u: VertexId, v: VertexId) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Parse("vertices must be distinct".into()));
    }
    Ok(has_pm_masks(&g.adjacency(), g.vertices().without(u).without(v).0))
}

/// Connected components of `G − S`.
pub fn components_after_removing(g: &Multigraph, s: VertexSet) -> Vec<VertexSet> {
    components(&g.adjacency(), g.vertices().difference(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_matching_number(g: &Multigraph) -> usize {
        fn rec(edges: &[(usize, usize)], i: usize, used: u64) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = rec(edges, i + 1, used);
            let (a, b) = edges[i];
            if used >> a & 1 == 0 && used >> b & 1 == 0 {
                skip.max(1 + rec(edges, i + 1, used | 1 << a | 1 << b))
            } else {
                skip
            }
        }
        rec(g.edges(), 0, 0)
    }

    #[test]
    fn matching_sizes() {
        assert_eq!(max_matching(&Multigraph::cycle(6)).len(), 3);
        assert_eq!(max_matching(&Multigraph::cycle(5)).len(), 2);
        let p = Multigraph::petersen();
        assert_eq!(brute_matching_number(&p), 5);
        assert_eq!(max_matching(&p).len(), 5);
    }

    #[test]
    fn perfect_matching_existence() {
        assert!(has_perfect_matching(&Multigraph::complete(4)));
        let (k4v, _) = Multigraph::complete(4).delete_vertices(VertexSet::singleton(0));
        assert!(!has_perfect_matching(&k4v));
        assert!(!has_perfect_matching(&Multigraph::complete_bipartite(1, 3)));
    }

    #[test]
    fn odd_components() {
        let star = Multigraph::complete_bipartite(1, 3);
        assert_eq!(odd_components_count(&star, VertexSet::singleton(0)), 3);
        assert_eq!(odd_components_count(&Multigraph::prism(), VertexSet::EMPTY), 0);
        assert_eq!(odd_components_count(&Multigraph::prism(), VertexSet::singleton(0)), 1);
    }

    #[test]
    fn tutte_violators() {
        let star = Multigraph::complete_bipartite(1, 3);
        let t = find_tutte_violator(&star).unwrap();
        assert_eq!(t.set, VertexSet::singleton(0));
        assert_eq!(t.odd_count, 3);
        assert!(find_tutte_violator(&Multigraph::cycle(6)).is_none());
        let t = find_tutte_violator(&Multigraph::cycle(5)).unwrap();
        assert!(t.odd_count > t.set.len());
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(count_perfect_matchings(&Multigraph::complete(4)).unwrap(), 3);
        // brute force: the prism's rungs, plus one triangle edge pair with the
        // opposite rung for each of the three rungs
        assert_eq!(count_perfect_matchings(&Multigraph::prism()).unwrap(), 4);
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(count_perfect_matchings(&digon).unwrap(), 2);
        assert_eq!(count_perfect_matchings(&Multigraph::petersen()).unwrap(), 6);
    }

    #[test]
    fn pm_containing() {
        let k4 = Multigraph::complete(4);
        assert!((0..6).all(|e| has_pm_containing(&k4, e).unwrap()));
        let p4 = Multigraph::path(4);
        assert!(has_pm_containing(&p4, 0).unwrap());
        assert!(!has_pm_containing(&p4, 1).unwrap());
        assert!(has_pm_avoiding_vertices(&k4, 0, 1).unwrap());
        assert!(has_pm_avoiding_vertices(&Multigraph::cycle(6), 0, 3).unwrap());
        assert!(!has_pm_avoiding_vertices(&Multigraph::cycle(6), 0, 2).unwrap());
    }

    #[test]
    fn bound_enforced() {
        let big = Multigraph::cycle(40);
        assert!(matches!(
            count_perfect_matchings(&big),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
