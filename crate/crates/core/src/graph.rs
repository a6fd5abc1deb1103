//! Loop-free multigraphs with stable vertex and edge identities.
//!
//! Vertices are `0..n` and edges are indexed by insertion order. Vertex sets
//! are carried as 64-bit masks, which caps graphs at [`MAX_VERTICES`]
//! vertices; every algorithm in this crate is exponential well before that.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vs: &[VertexId]) -> Self {
        VertexSet(vs.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<VertexId>::deserialize(d)?;
        if vs.iter().any(|&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom("vertex id out of range"));
        }
        Ok(VertexSet::from_slice(&vs))
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A loop-free multigraph. Parallel edges are distinct [`EdgeId`]s.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, {:?})", self.n, self.edges)
    }
}

/// Result of contracting a vertex set to a single vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Multigraph,
    /// Image of the contracted set.
    pub image: VertexId,
    /// `vertex_map[v]` is the vertex of the contraction that `v` became.
    pub vertex_map: Vec<VertexId>,
    /// `edge_map[e]` is the edge `e` became, `None` for edges inside the set.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "vertex count",
                value: n,
                limit: MAX_VERTICES,
            });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(i, u));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Multigraph { n, edges: Vec::new() }
    }

    /// Simple graph from adjacency masks (only `u < v` pairs are read).
    pub fn from_adjacency(adj: &[u64]) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in Bits(row >> u >> 1) {
                edges.push((u, u + 1 + v));
            }
        }
        Multigraph { n, edges }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Multigraph {
            n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        Multigraph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Multigraph { n: a + b, edges }
    }

    /// The triangular prism: triangles `0 1 2` and `3 4 5`, rungs `i, i+3`.
    pub fn prism() -> Self {
        Multigraph {
            n: 6,
            edges: vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        }
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph { n: 10, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, m: self.edges.len() })
        }
    }

    /// The end of `e` other than `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_incident(&self, e: EdgeId, v: VertexId) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Edges of `∂(v)` in increasing id order.
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| self.is_incident(e, v)).collect()
    }

    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for &(a, b) in &self.edges {
            if a == v {
                s.insert(b);
            } else if b == v {
                s.insert(a);
            }
        }
        s
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a == u && b == v) || (a == v && b == u))
            .count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            if seen[a] >> b & 1 == 1 {
                return false;
            }
            seen[a] |= 1 << b;
            seen[b] |= 1 << a;
        }
        true
    }

    /// Adjacency masks of the underlying simple graph.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// Dense symmetric multiplicity matrix.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let mut mat = vec![vec![0u32; self.n]; self.n];
        for &(a, b) in &self.edges {
            mat[a][b] += 1;
            mat[b][a] += 1;
        }
        mat
    }

    /// Parallel classes with at least two edges, as `(u, v, multiplicity)`, `u < v`.
    pub fn parallel_classes(&self) -> Vec<(VertexId, VertexId, usize)> {
        let mat = self.multiplicity_matrix();
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if mat[u][v] >= 2 {
                    out.push((u, v, mat[u][v] as usize));
                }
            }
        }
        out
    }

    /// `G − S`. Surviving edges keep their relative order.
    pub fn delete_edges(&self, remove: &[EdgeId]) -> Result<Multigraph> {
        let mut gone = vec![false; self.edges.len()];
        for &e in remove {
            self.check_edge(e)?;
            gone[e] = true;
        }
        Ok(Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .zip(gone)
                .filter(|(_, g)| !g)
                .map(|(&e, _)| e)
                .collect(),
        })
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(self.edges.len(), u));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// One edge per adjacent pair, sorted by `(min, max)`.
    pub fn underlying_simple(&self) -> Multigraph {
        Multigraph::from_adjacency(&self.adjacency())
    }

    /// Subgraph induced by `keep`, renumbered in increasing order. Returns the
    /// graph and the original id of each new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Multigraph, Vec<VertexId>) {
        let old: Vec<VertexId> = keep.intersection(self.vertices()).to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        (Multigraph { n: old.len(), edges }, old)
    }

    /// `G − S` for a vertex set `S`.
    pub fn delete_vertices(&self, remove: VertexSet) -> (Multigraph, Vec<VertexId>) {
        self.induced_subgraph(self.vertices().difference(remove))
    }

    /// `G/X`: contracts `X` to one vertex placed at the position of `min(X)`,
    /// dropping edges inside `X` and keeping parallels in `∂(X)`.
    pub fn contract(&self, shore: VertexSet) -> Result<Contraction> {
        if shore.is_empty() {
            return Err(Error::EmptyShore);
        }
        if !shore.is_subset(self.vertices()) {
            let v = shore.difference(self.vertices()).first().unwrap();
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let rep = shore.first().unwrap();
        let mut vertex_map = vec![0; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if shore.contains(v) && v != rep {
                continue;
            }
            vertex_map[v] = next;
            next += 1;
        }
        let image = vertex_map[rep];
        for v in shore.iter() {
            vertex_map[v] = image;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::with_capacity(self.edges.len());
        for &(a, b) in &self.edges {
            if shore.contains(a) && shore.contains(b) {
                edge_map.push(None);
            } else {
                edge_map.push(Some(edges.len()));
                edges.push((vertex_map[a], vertex_map[b]));
            }
        }
        Ok(Contraction {
            graph: Multigraph { n: next, edges },
            image,
            vertex_map,
            edge_map,
        })
    }

    /// Relabels vertex `v` as `perm[v]`; edge order is preserved.
    pub fn permute(&self, perm: &[VertexId]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        Multigraph {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        }
    }

    /// `∂(X)` in increasing edge order.
    pub fn boundary(&self, shore: VertexSet) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                shore.contains(a) != shore.contains(b)
            })
            .collect()
    }

    /// Number of edges with one end in `x` and the other in `y` (disjoint sets).
    pub fn count_between(&self, x: VertexSet, y: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (x.contains(a) && y.contains(b)) || (x.contains(b) && y.contains(a)))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && components(&self.adjacency(), self.vertices()).len() == 1
    }

    /// Proper 2-colouring, `false` for the class containing the least vertex
    /// of each component.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for w in Bits(adj[v]) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertex connectivity of the underlying simple graph. Disconnected graphs
    /// give 0 and `K_n` gives `n − 1`.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        let adj = self.adjacency();
        if components(&adj, self.vertices()).len() != 1 {
            return 0;
        }
        for k in 1..self.n - 1 {
            if has_separator_of_size(&adj, self.n, k) {
                return k;
            }
        }
        self.n - 1
    }

    /// `κ(G) ≥ k`, without computing κ exactly.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n <= k {
            return false;
        }
        let adj = self.adjacency();
        if components(&adj, self.vertices()).len() != 1 {
            return false;
        }
        (1..k).all(|s| !has_separator_of_size(&adj, self.n, s))
    }

    /// Planarity for graphs on at most six vertices. At that size the only
    /// Kuratowski subgraphs are `K5`, `K5` with one subdivided edge, and
    /// `K3,3` itself.
    pub fn is_planar_small(&self) -> Result<bool> {
        if self.n > 6 {
            return Err(Error::BoundExceeded {
                what: "planarity test vertices",
                value: self.n,
                limit: 6,
            });
        }
        let adj = self.adjacency();
        let complete_except = |s: VertexSet, skip: Option<(VertexId, VertexId)>| {
            s.iter().all(|a| {
                s.iter().all(|b| {
                    a == b || adj[a] >> b & 1 == 1 || skip.map_or(false, |(x, y)| (a, b) == (x, y) || (a, b) == (y, x))
                })
            })
        };
        let mut nonplanar = false;
        for_each_subset_of_size(self.n, 5, |s| {
            if complete_except(s, None) {
                nonplanar = true;
                return false;
            }
            for w in VertexSet::full(self.n).difference(s).iter() {
                let nb = VertexSet(adj[w]).intersection(s).to_vec();
                for (i, &x) in nb.iter().enumerate() {
                    for &y in &nb[i + 1..] {
                        if complete_except(s, Some((x, y))) {
                            nonplanar = true;
                            return false;
                        }
                    }
                }
            }
            true
        });
        if !nonplanar && self.n == 6 {
            for_each_subset_of_size(6, 3, |a| {
                let b = VertexSet::full(6).difference(a);
                if a.iter().all(|x| b.is_subset(VertexSet(adj[x]))) {
                    nonplanar = true;
                    return false;
                }
                true
            });
        }
        Ok(!nonplanar)
    }

    /// Edge-list text: first line `n m`, then one `u v` line per edge.
    pub fn to_mg(&self) -> String {
        crate::format::encode_mg(self)
    }
}

fn has_separator_of_size(adj: &[u64], n: usize, k: usize) -> bool {
    let all = VertexSet::full(n);
    let mut found = false;
    for_each_subset_of_size(n, k, |s| {
        let rest = all.difference(s);
        if rest.len() >= 2 && components(adj, rest).len() > 1 {
            found = true;
            return false;
        }
        true
    });
    found
}

/// Calls `f` on every `k`-subset of `0..n` in colexicographic order until
/// `f` returns false.
pub fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    assert!(n < 64);
    let mut s: u64 = (1u64 << k) - 1;
    while s < 1u64 << n {
        if !f(VertexSet(s)) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 {
            return;
        }
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Connected components of the subgraph induced by `alive`.
pub fn components(adj: &[u64], alive: VertexSet) -> Vec<VertexSet> {
    let mut rest = alive.0;
    let mut out = Vec::new();
    while rest != 0 {
        let s = rest & rest.wrapping_neg();
        let mut comp = s;
        let mut frontier = s;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= adj[v];
            }
            next &= alive.0 & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
        out.push(VertexSet(comp));
    }
    out
}

/// Number of odd components of the subgraph induced by `alive`.
pub fn odd_components(adj: &[u64], alive: VertexSet) -> usize {
    components(adj, alive).iter().filter(|c| c.len() % 2 == 1).count()
}

#[cfg(test)]
mod tests {

    #[test]
    fn small_planarity() {
        assert!(Multigraph::complete(4).is_planar_small().unwrap());
        assert!(Multigraph::prism().is_planar_small().unwrap());
        assert!(!Multigraph::complete(5).is_planar_small().unwrap());
        assert!(!Multigraph::complete_bipartite(3, 3).is_planar_small().unwrap());
        // K5 with edge 0-1 replaced by the path 0-5-1
        let mut edges: Vec<_> = Multigraph::complete(5).edges().iter().copied().filter(|&e| e != (0, 1)).collect();
        edges.extend([(0, 5), (5, 1)]);
        assert!(!Multigraph::new(6, edges).unwrap().is_planar_small().unwrap());
        // W5 is planar
        let mut w5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        w5.extend((0..5).map(|i| (i, 5)));
        assert!(Multigraph::new(6, w5).unwrap().is_planar_small().unwrap());
        assert!(Multigraph::cycle(7).is_planar_small().is_err());
    }
    use super::*;

    #[test]
    fn k4_and_digon_construct() {
        let k4 = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4, Multigraph::complete(4));
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(digon.m(), 2);
        assert_eq!(digon.degree(0), 2);
        assert_eq!(digon.underlying_simple(), Multigraph::complete(2));
    }

    #[test]
    fn loops_and_range_rejected() {
        assert_eq!(Multigraph::new(3, vec![(0, 0)]), Err(Error::LoopEdge(0, 0)));
        assert_eq!(
            Multigraph::new(3, vec![(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn contract_k4_pair() {
        // Hand contraction: K4 minus edge 01, vertices 0 and 1 merged into x.
        // Remaining edges 02 03 12 13 23 become x2 x3 x2 x3 23.
        let c = Multigraph::complete(4).contract(VertexSet::from_slice(&[0, 1])).unwrap();
        assert_eq!(c.graph.n(), 3);
        assert_eq!(c.graph.m(), 5);
        assert_eq!(c.image, 0);
        assert_eq!(c.graph.multiplicity(0, 1), 2);
        assert_eq!(c.graph.multiplicity(0, 2), 2);
        assert_eq!(c.graph.multiplicity(1, 2), 1);
        assert_eq!(c.edge_map[0], None);
        assert_eq!(c.edge_map[1], Some(0));
    }

    #[test]
    fn contract_c4_and_everything() {
        let c = Multigraph::cycle(4).contract(VertexSet::from_slice(&[0, 1])).unwrap();
        let mut e: Vec<_> = c.graph.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        e.sort();
        assert_eq!(e, vec![(0, 1), (0, 2), (1, 2)]);
        let all = Multigraph::petersen().contract(VertexSet::full(10)).unwrap();
        assert_eq!((all.graph.n(), all.graph.m()), (1, 0));
        assert_eq!(
            Multigraph::cycle(4).contract(VertexSet::EMPTY).unwrap_err(),
            Error::EmptyShore
        );
    }

    #[test]
    fn delete_and_degree() {
        let g = Multigraph::complete(4).delete_edges(&[0]).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(Multigraph::complete(4).vertex_connectivity(), 3);
        assert_eq!(Multigraph::cycle(6).vertex_connectivity(), 2);
        assert_eq!(Multigraph::complete(2).vertex_connectivity(), 1);
        assert_eq!(Multigraph::petersen().vertex_connectivity(), 3);
        assert!(Multigraph::prism().is_k_connected(3));
        assert!(!Multigraph::cycle(6).is_k_connected(3));
        let two = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.vertex_connectivity(), 0);
    }

    #[test]
    fn bipartition_of_cycles() {
        assert!(Multigraph::cycle(6).is_bipartite());
        assert!(!Multigraph::cycle(5).is_bipartite());
        assert!(Multigraph::complete_bipartite(3, 3).is_bipartite());
    }

    #[test]
    fn subsets_of_size() {
        let mut c = 0;
        for_each_subset_of_size(6, 3, |s| {
            assert_eq!(s.len(), 3);
            c += 1;
            true
        });
        assert_eq!(c, 20);
    }
}
