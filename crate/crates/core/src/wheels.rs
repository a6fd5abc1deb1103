//! Wheels, splicing, and the wheel-like predicate.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canon::canonize;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId, VertexSet};
use crate::mc::{is_brick, is_matching_covered, is_mc_masks};

/// Rim length `k` and spoke multiplicities; spoke `i` joins rim vertex `i`
/// to the hub and is repeated `mults[i]` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WheelSpec {
    pub k: usize,
    pub mults: Vec<usize>,
}

impl WheelSpec {
    pub fn simple(k: usize) -> Self {
        WheelSpec { k, mults: vec![1; k] }
    }

    pub fn hub(&self) -> VertexId {
        self.k
    }

    fn validate(&self) -> Result<()> {
        if self.k < 3 {
            return Err(Error::BadSpec(format!("rim length {} is below 3", self.k)));
        }
        if self.mults.len() != self.k {
            return Err(Error::BadSpec(format!(
                "{} multiplicities given for rim length {}",
                self.mults.len(),
                self.k
            )));
        }
        if self.mults.contains(&0) {
            return Err(Error::BadSpec("spoke multiplicities must be positive".into()));
        }
        Ok(())
    }
}

/// Rim vertices `0..k`, hub `k`. Rim edges `(i, i+1 mod k)` come first, then
/// the spokes in rim order.
pub fn make_wheel(spec: &WheelSpec) -> Result<Multigraph> {
    spec.validate()?;
    let k = spec.k;
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for (i, &m) in spec.mults.iter().enumerate() {
        edges.extend(std::iter::repeat((i, k)).take(m));
    }
    Multigraph::new(k + 1, edges)
}

/// Wheel specs with rim lengths `ks` and spoke multiplicities `1..=max_mult`,
/// one per isomorphism class (rotations and reflections of the rim
/// identified), in a deterministic order.
pub fn wheel_specs(ks: &[usize], max_mult: usize) -> Vec<WheelSpec> {
    let mut out = Vec::new();
    for &k in ks {
        let mut seen = HashSet::new();
        let mut mults = vec![1usize; k];
        loop {
            let canon = (0..k)
                .flat_map(|r| {
                    let m = &mults;
                    [
                        (0..k).map(|i| m[(i + r) % k]).collect::<Vec<_>>(),
                        (0..k).map(|i| m[(r + k - i) % k]).collect::<Vec<_>>(),
                    ]
                })
                .min()
                .unwrap();
            // K4-shaped wheels have extra symmetry, so use the graph form.
            let key = if k == 3 {
                crate::canon::canonical_form(&make_wheel(&WheelSpec { k, mults: mults.clone() }).unwrap()).0
            } else {
                canon.iter().map(|&x| x as u8).collect()
            };
            if seen.insert(key) {
                out.push(WheelSpec { k, mults: mults.clone() });
            }
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                if mults[i] < max_mult {
                    mults[i] += 1;
                    break;
                }
                mults[i] = 1;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    out
}

/// `G(u) ⊙ H(v)`: `theta[i]` is the position in `∂_G(u)` (edges in id order)
/// that the `i`-th edge of `∂_H(v)` is matched with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceSpec {
    pub g: Multigraph,
    pub u: VertexId,
    pub h: Multigraph,
    pub v: VertexId,
    pub theta: Vec<usize>,
}

/// Where the vertices of the two inputs went in a splice result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpliceMaps {
    pub g_map: Vec<Option<VertexId>>,
    pub h_map: Vec<Option<VertexId>>,
}

pub fn splice_maps(g_n: usize, u: VertexId, h_n: usize, v: VertexId) -> SpliceMaps {
    let g_map = (0..g_n)
        .map(|x| match x.cmp(&u) {
            std::cmp::Ordering::Less => Some(x),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(x - 1),
        })
        .collect();
    let base = g_n - 1;
    let h_map = (0..h_n)
        .map(|x| match x.cmp(&v) {
            std::cmp::Ordering::Less => Some(base + x),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(base + x - 1),
        })
        .collect();
    SpliceMaps { g_map, h_map }
}

/// Vertices of `G − u` keep their order, followed by those of `H − v`.
/// Edges of `G − u` come first, then those of `H − v`, then the joined
/// edges in `∂_H(v)` order.
pub fn splice(spec: &SpliceSpec) -> Result<Multigraph> {
    let SpliceSpec { g, u, h, v, theta } = spec;
    g.check_vertex(*u)?;
    h.check_vertex(*v)?;
    let gu = g.incident_edges(*u);
    let hv = h.incident_edges(*v);
    if gu.len() != hv.len() {
        return Err(Error::DegreeMismatch(gu.len(), hv.len()));
    }
    if theta.len() != hv.len() {
        return Err(Error::NotABijection);
    }
    let mut hit = vec![false; gu.len()];
    for &t in theta {
        if t >= gu.len() || hit[t] {
            return Err(Error::NotABijection);
        }
        hit[t] = true;
    }
    let maps = splice_maps(g.n(), *u, h.n(), *v);
    let mut edges = Vec::with_capacity(g.m() + h.m() - gu.len());
    for &(a, b) in g.edges() {
        if a != *u && b != *u {
            edges.push((maps.g_map[a].unwrap(), maps.g_map[b].unwrap()));
        }
    }
    for &(a, b) in h.edges() {
        if a != *v && b != *v {
            edges.push((maps.h_map[a].unwrap(), maps.h_map[b].unwrap()));
        }
    }
    for (i, &he) in hv.iter().enumerate() {
        let hy = h.other_end(he, *v);
        let gx = g.other_end(gu[theta[i]], *u);
        edges.push((maps.h_map[hy].unwrap(), maps.g_map[gx].unwrap()));
    }
    Multigraph::new(g.n() + h.n() - 2, edges)
}

/// Vertices of maximum degree.
pub fn max_degree_set(g: &Multigraph) -> VertexSet {
    let d = g.max_degree();
    (0..g.n()).filter(|&v| g.degree(v) == d).collect()
}

/// Vertices `h` such that every removable class has exactly one edge in
/// `∂(h)`; empty when the brick is not wheel-like.
pub fn is_wheel_like(g: &Multigraph) -> Result<VertexSet> {
    if !is_brick(g) {
        return Err(Error::NotABrick);
    }
    Ok(wheel_hubs_of_brick(g))
}

fn adjacency_without(g: &Multigraph, removed: &[EdgeId]) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if !removed.contains(&i) {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    adj
}

/// The hub set, stopping as soon as it becomes empty. `g` must be a brick.
pub(crate) fn wheel_hubs_of_brick(g: &Multigraph) -> VertexSet {
    let all = g.vertices();
    let ends = |e: EdgeId| {
        let (a, b) = g.endpoints(e);
        VertexSet::singleton(a).with(b)
    };
    let mut hubs = all;
    let mut nonremovable = Vec::new();
    // Parallel copies are removable in a brick; test each distinct pair
    // once and handle multiplicity directly.
    for e in 0..g.m() {
        let (a, b) = g.endpoints(e);
        let removable = g.multiplicity(a, b) > 1 || is_mc_masks(&adjacency_without(g, &[e]), all);
        if removable {
            hubs = hubs.intersection(ends(e));
            if hubs.is_empty() {
                return hubs;
            }
        } else {
            nonremovable.push(e);
        }
    }
    for (i, &e) in nonremovable.iter().enumerate() {
        for &f in &nonremovable[i + 1..] {
            // only pairs that would change the hub set need testing
            let keep = VertexSet(ends(e).0 ^ ends(f).0);
            if hubs.is_subset(keep) {
                continue;
            }
            if is_mc_masks(&adjacency_without(g, &[e, f]), all) {
                hubs = hubs.intersection(keep);
                if hubs.is_empty() {
                    return hubs;
                }
            }
        }
    }
    hubs
}

/// Every edge at `h` is removable.
pub fn hub_edges_removable(g: &Multigraph, h: VertexId) -> bool {
    if h >= g.n() || !is_matching_covered(g) {
        return false;
    }
    let all = g.vertices();
    g.incident_edges(h).into_iter().all(|e| {
        let (a, b) = g.endpoints(e);
        g.multiplicity(a, b) > 1 || is_mc_masks(&adjacency_without(g, &[e]), all)
    })
}

/// Outcome of checking the syntactic conditions on a splice of two odd
/// wheels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelSpliceReport {
    pub holds: bool,
    /// Numbers (1, 2, 3) of the conditions that fail for the designated hubs
    /// when no choice of hubs satisfies all three.
    pub violated: Vec<u8>,
}

/// Vertices that can serve as the hub of the wheel: the designated hub, and
/// for `k = 3` every vertex (the underlying graph is `K4`).
fn hub_choices(spec: &WheelSpec) -> Vec<VertexId> {
    if spec.k == 3 {
        (0..4).collect()
    } else {
        vec![spec.k]
    }
}

fn parallels_at(g: &Multigraph, hub: VertexId) -> bool {
    g.parallel_classes()
        .iter()
        .all(|&(a, b, m)| m == 1 || a == hub || b == hub)
}

/// Evaluates the three splice conditions for one choice of hubs.
#[allow(clippy::too_many_arguments)]
fn violations(
    g: &Multigraph,
    gk: usize,
    u: VertexId,
    gh: VertexId,
    h: &Multigraph,
    hk: usize,
    v: VertexId,
    hh: VertexId,
    theta: &[usize],
) -> Vec<u8> {
    let mut out = Vec::new();
    let u_hub = u == gh;
    let v_hub = v == hh;
    let cond1 = u_hub != v_hub && if u_hub { gk >= 5 } else { hk >= 5 };
    if !cond1 {
        out.push(1);
    }
    if !(parallels_at(g, gh) && parallels_at(h, hh)) {
        out.push(2);
    }
    if u_hub != v_hub {
        let gu = g.incident_edges(u);
        let hv = h.incident_edges(v);
        // rim-spliced side y, hub-spliced side x; follow the two rim edges at
        // y across the splice to rim vertices of x
        let (targets, x_graph) = if u_hub {
            let t: Vec<VertexId> = hv
                .iter()
                .enumerate()
                .filter(|&(_, &e)| h.other_end(e, v) != hh)
                .map(|(i, _)| g.other_end(gu[theta[i]], u))
                .collect();
            (t, g)
        } else {
            let mut inv = vec![0; theta.len()];
            for (i, &t) in theta.iter().enumerate() {
                inv[t] = i;
            }
            let t: Vec<VertexId> = gu
                .iter()
                .enumerate()
                .filter(|&(_, &e)| g.other_end(e, u) != gh)
                .map(|(j, _)| h.other_end(hv[inv[j]], v))
                .collect();
            (t, h)
        };
        let ok = targets.len() == 2
            && targets[0] != targets[1]
            && x_graph.multiplicity(targets[0], targets[1]) == 0;
        if !ok {
            out.push(3);
        }
    }
    out
}

/// The splice conditions for wheels `g_spec(u) ⊙ h_spec(v)` under `theta`.
pub fn check_odd_wheel_splice(
    g_spec: &WheelSpec,
    h_spec: &WheelSpec,
    u: VertexId,
    v: VertexId,
    theta: &[usize],
) -> Result<WheelSpliceReport> {
    if g_spec.k % 2 == 0 || h_spec.k % 2 == 0 {
        return Err(Error::NotOddWheels);
    }
    let g = make_wheel(g_spec)?;
    let h = make_wheel(h_spec)?;
    let spec = SpliceSpec {
        g: g.clone(),
        u,
        h: h.clone(),
        v,
        theta: theta.to_vec(),
    };
    splice(&spec).map_err(|e| Error::SpliceInvalid(e.to_string()))?;
    for gh in hub_choices(g_spec) {
        for hh in hub_choices(h_spec) {
            if violations(&g, g_spec.k, u, gh, &h, h_spec.k, v, hh, theta).is_empty() {
                return Ok(WheelSpliceReport {
                    holds: true,
                    violated: Vec::new(),
                });
            }
        }
    }
    Ok(WheelSpliceReport {
        holds: false,
        violated: violations(&g, g_spec.k, u, g_spec.k, &h, h_spec.k, v, h_spec.k, theta),
    })
}

/// All elements of the group generated by `gens` (permutations of
/// `0..n`), identity included.
fn group_closure(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let p: Vec<usize> = (0..n).map(|x| g[out[i][x]]).collect();
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        i += 1;
    }
    out
}

/// Automorphisms of `g` fixing `u`, as permutations of the distinct
/// neighbours of `u` (listed in increasing order).
fn neighbour_symmetries(g: &Multigraph, u: VertexId) -> (Vec<VertexId>, Vec<Vec<usize>>) {
    let nbrs = g.neighbors(u).to_vec();
    let mut colors = vec![0u32; g.n()];
    colors[u] = 1;
    let c = canonize(g, Some(&colors));
    let pos = |x: VertexId| nbrs.iter().position(|&y| y == x).unwrap();
    let gens: Vec<Vec<usize>> = c
        .generators
        .iter()
        .map(|p| nbrs.iter().map(|&x| pos(p[x])).collect())
        .collect();
    let group = group_closure(nbrs.len(), &gens);
    (nbrs, group)
}

/// One bijection per class of splices `G(u) ⊙ H(v)` that differ only by
/// symmetries of `G` fixing `u`, symmetries of `H` fixing `v`, or by
/// permuting parallel edges. With `max_mult`, classes whose result would
/// have an edge of larger multiplicity between the two sides are skipped.
pub fn theta_orbits(
    g: &Multigraph,
    u: VertexId,
    h: &Multigraph,
    v: VertexId,
    max_mult: Option<usize>,
) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    let gu = g.incident_edges(u);
    let hv = h.incident_edges(v);
    if gu.len() != hv.len() {
        return Err(Error::DegreeMismatch(gu.len(), hv.len()));
    }
    let (gn, g_group) = neighbour_symmetries(g, u);
    let (hn, h_group) = neighbour_symmetries(h, v);
    let cols: Vec<usize> = gn.iter().map(|&x| g.multiplicity(u, x)).collect();
    let rows: Vec<usize> = hn.iter().map(|&y| h.multiplicity(v, y)).collect();
    let cap = max_mult.unwrap_or(usize::MAX);
    let (p, q) = (cols.len(), rows.len());
    let mut out = Vec::new();
    let mut mat = vec![0usize; p * q];
    let mut left = cols.clone();
    fill(
        &mut FillState {
            rows: &rows,
            p,
            q,
            cap,
            g_group: &g_group,
            h_group: &h_group,
        },
        0,
        0,
        &mut mat,
        &mut left,
        &mut |m: &[usize]| {
            out.push(theta_from_matrix(g, u, &gn, h, v, &hn, m, p));
        },
    );
    Ok(out)
}

struct FillState<'a> {
    rows: &'a [usize],
    p: usize,
    q: usize,
    cap: usize,
    g_group: &'a [Vec<usize>],
    h_group: &'a [Vec<usize>],
}

/// Transport matrices row by row (`mat[i*p + j]` edges from the `i`-th
/// neighbour of `v` to the `j`-th neighbour of `u`), keeping only those
/// least in their orbit.
fn fill(
    st: &mut FillState,
    i: usize,
    j: usize,
    mat: &mut Vec<usize>,
    left: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let (p, q) = (st.p, st.q);
    if i == q {
        if is_least(mat, p, q, st.g_group, st.h_group) {
            emit(mat);
        }
        return;
    }
    if j == p {
        let used: usize = mat[i * p..(i + 1) * p].iter().sum();
        if used != st.rows[i] {
            return;
        }
        // prune with the column symmetries alone: they act on each row, so a
        // smaller image of the finished rows rules out every completion
        if !prefix_least(mat, p, i + 1, st.g_group) {
            return;
        }
        fill(st, i + 1, 0, mat, left, emit);
        return;
    }
    let used: usize = mat[i * p..i * p + j].iter().sum();
    let room = st.rows[i] - used;
    let hi = room.min(left[j]).min(st.cap);
    let lo = if j + 1 == p { room } else { 0 };
    if lo > hi {
        return;
    }
    for x in lo..=hi {
        mat[i * p + j] = x;
        left[j] -= x;
        fill(st, i, j + 1, mat, left, emit);
        left[j] += x;
    }
    mat[i * p + j] = 0;
}

fn prefix_least(mat: &[usize], p: usize, rows: usize, g_group: &[Vec<usize>]) -> bool {
    for beta in g_group {
        // image[i][beta[j]] = mat[i][j]
        for i in 0..rows {
            let mut ord = std::cmp::Ordering::Equal;
            for jj in 0..p {
                // entry of the image at column jj comes from column beta⁻¹(jj)
                let j = beta.iter().position(|&b| b == jj).unwrap();
                ord = mat[i * p + j].cmp(&mat[i * p + jj]);
                if ord != std::cmp::Ordering::Equal {
                    break;
                }
            }
            match ord {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}

fn is_least(mat: &[usize], p: usize, q: usize, g_group: &[Vec<usize>], h_group: &[Vec<usize>]) -> bool {
    let g_inv: Vec<Vec<usize>> = g_group.iter().map(|b| invert(b)).collect();
    let h_inv: Vec<Vec<usize>> = h_group.iter().map(|a| invert(a)).collect();
    for ai in &h_inv {
        for bi in &g_inv {
            // image[i][j] = mat[a⁻¹(i)][b⁻¹(j)]
            let mut ord = std::cmp::Ordering::Equal;
            'scan: for i in 0..q {
                for j in 0..p {
                    ord = mat[ai[i] * p + bi[j]].cmp(&mat[i * p + j]);
                    if ord != std::cmp::Ordering::Equal {
                        break 'scan;
                    }
                }
            }
            if ord == std::cmp::Ordering::Less {
                return false;
            }
        }
    }
    true
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

#[allow(clippy::too_many_arguments)]
fn theta_from_matrix(
    g: &Multigraph,
    u: VertexId,
    gn: &[VertexId],
    h: &Multigraph,
    v: VertexId,
    hn: &[VertexId],
    mat: &[usize],
    p: usize,
) -> Vec<usize> {
    let gu = g.incident_edges(u);
    let hv = h.incident_edges(v);
    let g_slots: Vec<Vec<usize>> = gn
        .iter()
        .map(|&x| (0..gu.len()).filter(|&k| g.other_end(gu[k], u) == x).collect())
        .collect();
    let mut g_next = vec![0usize; gn.len()];
    let mut theta = vec![usize::MAX; hv.len()];
    for (i, &y) in hn.iter().enumerate() {
        let mut slots = (0..hv.len()).filter(|&k| h.other_end(hv[k], v) == y);
        for j in 0..p {
            for _ in 0..mat[i * p + j] {
                let k = slots.next().unwrap();
                theta[k] = g_slots[j][g_next[j]];
                g_next[j] += 1;
            }
        }
    }
    theta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, is_isomorphic};

    fn w(k: usize) -> Multigraph {
        make_wheel(&WheelSpec::simple(k)).unwrap()
    }

    #[test]
    fn wheel_shapes() {
        assert!(is_isomorphic(&w(3), &Multigraph::complete(4)));
        assert!(is_brick(&w(5)));
        let g = make_wheel(&WheelSpec { k: 5, mults: vec![2, 1, 1, 1, 1] }).unwrap();
        assert!(is_brick(&g));
        assert_eq!(g.m(), 11);
        assert!(matches!(make_wheel(&WheelSpec { k: 2, mults: vec![1, 1] }), Err(Error::BadSpec(_))));
        assert!(matches!(make_wheel(&WheelSpec { k: 3, mults: vec![1, 0, 1] }), Err(Error::BadSpec(_))));
    }

    #[test]
    fn spec_enumeration_counts() {
        // necklaces with reflection over {1, 2}: k = 5 gives 8
        assert_eq!(wheel_specs(&[5], 2).len(), 8);
        // K4 with spoke multiplicities in {1, 2}: 0, 1, 2 or 3 doubled spokes
        assert_eq!(wheel_specs(&[3], 2).len(), 4);
    }

    #[test]
    fn c4_splice_gives_c6() {
        let c4 = Multigraph::cycle(4);
        let s = splice(&SpliceSpec { g: c4.clone(), u: 0, h: c4, v: 0, theta: vec![0, 1] }).unwrap();
        assert!(is_isomorphic(&s, &Multigraph::cycle(6)));
    }

    #[test]
    fn k4_splices() {
        let k4 = Multigraph::complete(4);
        let mut forms = HashSet::new();
        for theta in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let s = splice(&SpliceSpec { g: k4.clone(), u: 0, h: k4.clone(), v: 0, theta: theta.to_vec() }).unwrap();
            assert!(is_matching_covered(&s));
            forms.insert(canonical_form(&s));
        }
        // every bijection gives the prism
        assert_eq!(forms.len(), 1);
        assert!(forms.contains(&canonical_form(&Multigraph::prism())));
        assert_eq!(theta_orbits(&k4, 0, &k4, 0, None).unwrap().len(), 1);
    }

    #[test]
    fn splice_errors() {
        let k4 = Multigraph::complete(4);
        let c4 = Multigraph::cycle(4);
        let e = splice(&SpliceSpec { g: k4.clone(), u: 0, h: c4, v: 0, theta: vec![0, 1] });
        assert_eq!(e, Err(Error::DegreeMismatch(3, 2)));
        let e = splice(&SpliceSpec { g: k4.clone(), u: 0, h: k4, v: 0, theta: vec![0, 0, 1] });
        assert_eq!(e, Err(Error::NotABijection));
    }

    #[test]
    fn w5_rim_with_k4_is_mc() {
        let s = splice(&SpliceSpec { g: w(5), u: 0, h: Multigraph::complete(4), v: 0, theta: vec![0, 1, 2] }).unwrap();
        assert_eq!(s.n(), 8);
        assert!(is_matching_covered(&s));
    }

    #[test]
    fn max_degree_sets() {
        assert_eq!(max_degree_set(&Multigraph::complete(4)).len(), 4);
        assert_eq!(max_degree_set(&w(5)), VertexSet::singleton(5));
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(max_degree_set(&digon).len(), 2);
    }

    #[test]
    fn wheel_like_examples() {
        assert_eq!(is_wheel_like(&Multigraph::complete(4)).unwrap().len(), 4);
        assert!(is_wheel_like(&Multigraph::prism()).unwrap().is_empty());
        let g = make_wheel(&WheelSpec { k: 5, mults: vec![2, 1, 1, 1, 1] }).unwrap();
        assert_eq!(is_wheel_like(&g).unwrap(), VertexSet::singleton(5));
        assert_eq!(is_wheel_like(&Multigraph::cycle(6)), Err(Error::NotABrick));
    }

    #[test]
    fn hub_edges() {
        assert!(hub_edges_removable(&w(5), 5));
        let g = make_wheel(&WheelSpec { k: 5, mults: vec![2, 1, 1, 1, 1] }).unwrap();
        assert!(hub_edges_removable(&g, 5));
        assert!((0..6).all(|v| !hub_edges_removable(&Multigraph::prism(), v)));
    }

    #[test]
    fn theta_orbits_cover_all_bijections() {
        // every bijection's result is isomorphic to some orbit representative's
        let g = w(5);
        let h = make_wheel(&WheelSpec { k: 5, mults: vec![3, 1, 1, 1, 1] }).unwrap();
        let reps: HashSet<_> = theta_orbits(&g, 5, &h, 0, None)
            .unwrap()
            .into_iter()
            .map(|t| canonical_form(&splice(&SpliceSpec { g: g.clone(), u: 5, h: h.clone(), v: 0, theta: t }).unwrap()))
            .collect();
        let mut all = HashSet::new();
        let mut perm: Vec<usize> = (0..5).collect();
        permutations(&mut perm, 0, &mut |t| {
            all.insert(canonical_form(&splice(&SpliceSpec { g: g.clone(), u: 5, h: h.clone(), v: 0, theta: t.to_vec() }).unwrap()));
        });
        assert_eq!(reps, all);
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn splice_conditions() {
        let w5 = WheelSpec::simple(5);
        let w5t = WheelSpec { k: 5, mults: vec![3, 1, 1, 1, 1] };
        // hub of G with rim vertex 0 of H: ∂_H(0) in id order is rim edge to
        // 1, rim edge to 4, then the three spokes
        let good = check_odd_wheel_splice(&w5, &w5t, 5, 0, &[0, 2, 1, 3, 4]).unwrap();
        assert!(good.holds);
        // rim neighbours sent to adjacent rim vertices 0 and 1
        let bad = check_odd_wheel_splice(&w5, &w5t, 5, 0, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(bad.violated, vec![3]);
        let both = check_odd_wheel_splice(&w5, &w5, 5, 5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(both.violated.contains(&1));
        let k4t = WheelSpec { k: 3, mults: vec![1, 1, 1] };
        let small = check_odd_wheel_splice(&k4t, &k4t, 3, 0, &[0, 1, 2]).unwrap();
        assert!(!small.holds && small.violated.contains(&1));
        assert_eq!(
            check_odd_wheel_splice(&WheelSpec::simple(4), &w5, 4, 5, &[0, 1, 2, 3]),
            Err(Error::NotOddWheels)
        );
    }
}
