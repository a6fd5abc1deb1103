//! The family 𝒢 of graphs built from wheel-like odd wheels by constrained
//! splicing, with certificates and a bounded forward closure.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonize, orbits, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId, VertexSet};
use crate::mc::{is_brick, removable_edges};
use crate::wheels::{make_wheel, max_degree_set, splice, theta_orbits, wheel_hubs_of_brick, SpliceSpec, WheelSpec};

/// Largest vertex count the closure will build.
pub const MAX_CLOSURE_N: usize = 12;

/// A leaf is a wheel in 𝒢₁; a node splices the graph built by `left` at `u`
/// with the wheel `right` at `v` (`theta` as in [`SpliceSpec`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GCertificate {
    Leaf(WheelSpec),
    Node {
        left: Box<GCertificate>,
        right: WheelSpec,
        u: VertexId,
        v: VertexId,
        theta: Vec<usize>,
    },
}

impl GCertificate {
    /// `j` such that the certificate places its graph in 𝒢_j.
    pub fn level(&self) -> usize {
        match self {
            GCertificate::Leaf(_) => 1,
            GCertificate::Node { left, .. } => left.level() + 1,
        }
    }
}

/// Builds the graph without checking any membership condition.
pub fn build_from_certificate(cert: &GCertificate) -> Result<Multigraph> {
    match cert {
        GCertificate::Leaf(spec) => make_wheel(spec),
        GCertificate::Node { left, right, u, v, theta } => splice(&SpliceSpec {
            g: build_from_certificate(left)?,
            u: *u,
            h: make_wheel(right)?,
            v: *v,
            theta: theta.clone(),
        }),
    }
}

fn violated(level: usize, condition: &str) -> Error {
    Error::ConditionViolated {
        level,
        condition: condition.to_string(),
    }
}

fn is_k4(spec: &WheelSpec) -> bool {
    spec.k == 3 && spec.mults.iter().all(|&m| m == 1)
}

/// Underlying `K4` with every parallel edge between the same two ends.
fn in_k4_plus(spec: &WheelSpec) -> bool {
    spec.k == 3 && spec.mults.iter().filter(|&&m| m > 1).count() <= 1
}

fn leaf_is_wheel_like(spec: &WheelSpec) -> Result<bool> {
    if spec.k % 2 == 0 {
        return Ok(false);
    }
    let g = make_wheel(spec)?;
    Ok(is_brick(&g) && !wheel_hubs_of_brick(&g).is_empty())
}

/// Hub-incidence rule relating `u`, `v` and the maximum-degree sets.
fn condition_one(g: &Multigraph, u: VertexId, right: &WheelSpec, h: &Multigraph, v: VertexId) -> bool {
    let ug = max_degree_set(g);
    let uh = max_degree_set(h);
    if is_k4(right) {
        !ug.contains(u)
    } else if in_k4_plus(right) {
        uh.contains(v)
    } else {
        ug.contains(u) as usize + uh.contains(v) as usize == 1
    }
}

/// Nonremovable edges at `v` of a four-vertex `H` must not land on edges of
/// `G` that touch `U(G)`.
fn condition_two(g: &Multigraph, u: VertexId, h: &Multigraph, v: VertexId, theta: &[usize], h_removable: &[bool]) -> bool {
    let ug = max_degree_set(g);
    if h.n() != 4 || ug.contains(u) {
        return true;
    }
    let gu = g.incident_edges(u);
    h.incident_edges(v).iter().enumerate().all(|(i, &e)| {
        h_removable[e] || !ug.contains(g.other_end(gu[theta[i]], u))
    })
}

fn removable_mask(h: &Multigraph) -> Vec<bool> {
    let mut mask = vec![false; h.m()];
    if let Ok(es) = removable_edges(h) {
        for e in es {
            mask[e] = true;
        }
    }
    mask
}

/// Builds the graph, checking leaf validity and both splice conditions and
/// the size clause at every node. The left graph of a node must have at
/// least six vertices, so a four-vertex wheel only enters on the right.
pub fn verify_certificate(cert: &GCertificate) -> Result<Multigraph> {
    match cert {
        GCertificate::Leaf(spec) => {
            if spec.k % 2 == 0 {
                return Err(violated(1, "odd wheel"));
            }
            if !leaf_is_wheel_like(spec)? {
                return Err(violated(1, "wheel-like"));
            }
            make_wheel(spec)
        }
        GCertificate::Node { left, right, u, v, theta } => {
            let level = cert.level();
            let g = verify_certificate(left)?;
            if g.n() < 6 {
                return Err(violated(level, "left graph has at least 6 vertices"));
            }
            if right.k % 2 == 0 || !leaf_is_wheel_like(right)? {
                return Err(violated(level, "right wheel in G1"));
            }
            let h = make_wheel(right)?;
            g.check_vertex(*u)?;
            h.check_vertex(*v)?;
            let out = splice(&SpliceSpec {
                g: g.clone(),
                u: *u,
                h: h.clone(),
                v: *v,
                theta: theta.clone(),
            })?;
            if out.n() < 8 {
                return Err(violated(level, "at least 8 vertices"));
            }
            if !condition_one(&g, *u, right, &h, *v) {
                return Err(violated(level, "condition 1"));
            }
            if !condition_two(&g, *u, &h, *v, theta, &removable_mask(&h)) {
                return Err(violated(level, "condition 2"));
            }
            Ok(out)
        }
    }
}

/// Bounds for [`g_closure`]: members have at most `max_n` vertices and edge
/// multiplicity at most `mult_bound`. Leaves spliced at a vertex may carry
/// larger multiplicities on the edges at that vertex, since those edges do
/// not survive the splice. With `bricks_only`, splice results that are not
/// bricks are dropped at every level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosureOptions {
    pub max_n: usize,
    pub mult_bound: usize,
    pub bricks_only: bool,
}

impl ClosureOptions {
    pub fn new(max_n: usize, mult_bound: usize) -> Self {
        ClosureOptions {
            max_n,
            mult_bound,
            bricks_only: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosureMember {
    pub graph: Multigraph,
    pub form: CanonicalForm,
    pub cert: GCertificate,
}

#[derive(Clone, Debug, Default)]
pub struct Closure {
    /// One member per isomorphism class, ordered by vertex count then form;
    /// the certificate is the first found at the lowest level.
    pub members: Vec<ClosureMember>,
    index: HashMap<CanonicalForm, usize>,
}

impl Closure {
    pub fn find(&self, g: &Multigraph) -> Option<&ClosureMember> {
        self.index.get(&canonical_form(g)).map(|&i| &self.members[i])
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn max_multiplicity(g: &Multigraph) -> usize {
    g.parallel_classes().iter().map(|c| c.2).max().unwrap_or(0)
}

/// Max multiplicity among edges avoiding `x`.
fn max_multiplicity_avoiding(g: &Multigraph, x: VertexId) -> usize {
    g.parallel_classes()
        .iter()
        .filter(|&&(a, b, _)| a != x && b != x)
        .map(|c| c.2)
        .max()
        .unwrap_or(0)
}

/// Lexicographically least rotation/reflection of a cyclic sequence.
fn dihedral_min(m: &[usize]) -> Vec<usize> {
    let k = m.len();
    (0..k)
        .flat_map(|r| {
            [
                (0..k).map(|i| m[(i + r) % k]).collect::<Vec<_>>(),
                (0..k).map(|i| m[(r + k - i) % k]).collect::<Vec<_>>(),
            ]
        })
        .min()
        .unwrap()
}

/// Calls `f` on every sequence of length `k` with entries in `1..=cap`
/// and sum `total` (any sum when `total` is `None`).
fn for_each_mults(k: usize, cap: usize, total: Option<usize>, f: &mut dyn FnMut(&[usize])) {
    fn rec(i: usize, k: usize, cap: usize, left: Option<usize>, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == k {
            if left.map_or(true, |l| l == 0) {
                f(cur);
            }
            return;
        }
        let rest = k - i - 1;
        let hi = match left {
            Some(l) if l < rest + 1 => return,
            Some(l) => cap.min(l - rest),
            None => cap,
        };
        for x in 1..=hi {
            cur.push(x);
            rec(i + 1, k, cap, left.map(|l| l - x), cur, f);
            cur.pop();
        }
    }
    rec(0, k, cap, total, &mut Vec::with_capacity(k), f);
}

/// Wheels with a marked vertex: the hub with spokes of multiplicity at most
/// `hub_cap` (summing to `degree` if given), or rim vertex 0 with its spoke
/// at most `hub_cap` and the other spokes at most `rim_cap`. One pair per
/// isomorphism class of marked graphs.
fn wheel_sites(k: usize, hub_cap: usize, rim_cap: usize, degree: Option<usize>) -> Vec<(WheelSpec, VertexId)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |spec: WheelSpec, v: VertexId, key: Vec<usize>| {
        let key = if k == 3 {
            let g = make_wheel(&spec).unwrap();
            let mut colors = vec![0u32; 4];
            colors[v] = 1;
            canonize(&g, Some(&colors)).form.0.iter().map(|&b| b as usize).collect()
        } else {
            key
        };
        if seen.insert(key) {
            out.push((spec, v));
        }
    };
    for_each_mults(k, hub_cap, degree, &mut |m| {
        let key = [vec![0], dihedral_min(m)].concat();
        push(WheelSpec { k, mults: m.to_vec() }, k, key);
    });
    let spoke_range: Vec<usize> = match degree {
        Some(d) if d >= 3 && d - 2 <= hub_cap => vec![d - 2],
        Some(_) => vec![],
        None => (1..=hub_cap).collect(),
    };
    for m0 in spoke_range {
        for_each_mults(k - 1, rim_cap, None, &mut |rest| {
            let reflected: Vec<usize> = rest.iter().rev().copied().collect();
            let key = [vec![1, m0], rest.to_vec().min(reflected)].concat();
            let mut mults = vec![m0];
            mults.extend_from_slice(rest);
            push(WheelSpec { k, mults }, 0, key);
        });
    }
    out
}

/// Vertex orbit representatives of `g`.
fn orbit_reps(g: &Multigraph) -> Vec<VertexId> {
    let c = canonize(g, None);
    let orb = orbits(g.n(), &c.generators);
    (0..g.n()).filter(|&v| orb[v] == v).collect()
}

struct Emit {
    form: CanonicalForm,
    graph: Multigraph,
    cert: GCertificate,
}

struct WheelLikeMemo(Mutex<HashMap<WheelSpec, bool>>);

impl WheelLikeMemo {
    fn get(&self, spec: &WheelSpec) -> bool {
        if let Some(&b) = self.0.lock().unwrap().get(spec) {
            return b;
        }
        let b = leaf_is_wheel_like(spec).unwrap_or(false);
        self.0.lock().unwrap().insert(spec.clone(), b);
        b
    }
}

/// All splices `left(u) ⊙ right(v)` meeting the membership conditions whose
/// result fits the bounds.
fn extend(left: &GCertificate, g: &Multigraph, u: VertexId, opts: ClosureOptions, memo: &WheelLikeMemo) -> Vec<Emit> {
    let t = opts.mult_bound;
    let mut out = Vec::new();
    if g.n() < 6 || max_multiplicity_avoiding(g, u) > t {
        return out;
    }
    let d = g.degree(u);
    let p = g.neighbors(u).len();
    for k in (3..).step_by(2) {
        let nh = k + 1;
        if g.n() + nh - 2 > opts.max_n {
            break;
        }
        if g.n() + nh - 2 < 8 {
            continue;
        }
        for (spec, v) in wheel_sites(k, t * p, t, Some(d)) {
            if !memo.get(&spec) {
                continue;
            }
            let h = make_wheel(&spec).unwrap();
            if max_multiplicity_avoiding(&h, v) > t || !condition_one(g, u, &spec, &h, v) {
                continue;
            }
            let Ok(thetas) = theta_orbits(g, u, &h, v, Some(t)) else {
                continue;
            };
            let h_removable = removable_mask(&h);
            for theta in thetas {
                if !condition_two(g, u, &h, v, &theta, &h_removable) {
                    continue;
                }
                let graph = splice(&SpliceSpec {
                    g: g.clone(),
                    u,
                    h: h.clone(),
                    v,
                    theta: theta.clone(),
                })
                .unwrap();
                out.push(Emit {
                    form: canonical_form(&graph),
                    graph,
                    cert: GCertificate::Node {
                        left: Box::new(left.clone()),
                        right: spec.clone(),
                        u,
                        v,
                        theta,
                    },
                });
            }
        }
    }
    out
}

/// Forward closure of 𝒢 within the bounds.
pub fn g_closure(opts: ClosureOptions) -> Result<Closure> {
    if opts.max_n > MAX_CLOSURE_N {
        return Err(Error::BoundExceeded {
            what: "closure vertices",
            value: opts.max_n,
            limit: MAX_CLOSURE_N,
        });
    }
    let t = opts.mult_bound.max(1);
    let opts = ClosureOptions { mult_bound: t, ..opts };
    let memo = WheelLikeMemo(Mutex::new(HashMap::new()));
    let mut all: BTreeMap<(usize, CanonicalForm), ClosureMember> = BTreeMap::new();

    let ks: Vec<usize> = (3..opts.max_n).step_by(2).collect();
    for spec in crate::wheels::wheel_specs(&ks, t) {
        if memo.get(&spec) {
            let graph = make_wheel(&spec)?;
            let form = canonical_form(&graph);
            all.entry((graph.n(), form.clone())).or_insert(ClosureMember {
                graph,
                form,
                cert: GCertificate::Leaf(spec),
            });
        }
    }

    // Sites for the first splice: leaves whose marked vertex may carry
    // heavy spokes, the rest held to the bound.
    let mut sites: Vec<(GCertificate, Multigraph, VertexId)> = Vec::new();
    for &k in &ks {
        if k < 5 || k + 1 + 2 > opts.max_n {
            continue;
        }
        let partner_nbrs = opts.max_n - k;
        for (spec, u) in wheel_sites(k, t * partner_nbrs, t, None) {
            if memo.get(&spec) {
                let g = make_wheel(&spec)?;
                sites.push((GCertificate::Leaf(spec), g, u));
            }
        }
    }

    while !sites.is_empty() {
        let emitted: Vec<Vec<Emit>> = sites
            .par_iter()
            .map(|(cert, g, u)| extend(cert, g, *u, opts, &memo))
            .collect();
        let mut level: BTreeMap<CanonicalForm, ClosureMember> = BTreeMap::new();
        for e in emitted.into_iter().flatten() {
            if max_multiplicity(&e.graph) > t || (opts.bricks_only && !is_brick(&e.graph)) {
                continue;
            }
            level.entry(e.form.clone()).or_insert(ClosureMember {
                graph: e.graph,
                form: e.form,
                cert: e.cert,
            });
        }
        sites = Vec::new();
        for m in level.values() {
            if m.graph.n() + 2 <= opts.max_n {
                for u in orbit_reps(&m.graph) {
                    sites.push((m.cert.clone(), m.graph.clone(), u));
                }
            }
        }
        for (form, m) in level {
            all.entry((m.graph.n(), form)).or_insert(m);
        }
    }

    let members: Vec<ClosureMember> = all.into_values().collect();
    let index = members
        .iter()
        .enumerate()
        .map(|(i, m)| (m.form.clone(), i))
        .collect();
    Ok(Closure { members, index })
}

type ClosureCache = Mutex<HashMap<ClosureOptions, Arc<Closure>>>;

/// [`g_closure`] memoized per bound.
pub fn g_closure_cached(opts: ClosureOptions) -> Result<Arc<Closure>> {
    static CACHE: OnceLock<ClosureCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&opts) {
        return Ok(c.clone());
    }
    let c = Arc::new(g_closure(opts)?);
    cache.lock().unwrap().insert(opts, c.clone());
    Ok(c)
}

/// A certificate for a graph isomorphic to `g`, searched in the closure
/// bounded by `|V(g)|` and the largest multiplicity of `g`.
pub fn search_g_certificate(g: &Multigraph) -> Result<Option<GCertificate>> {
    if !is_brick(g) {
        return Err(Error::NotABrick);
    }
    let opts = ClosureOptions::new(g.n(), max_multiplicity(g).max(1));
    let closure = g_closure_cached(opts)?;
    Ok(closure.find(g).map(|m| m.cert.clone()))
}

/// Vertices of maximum degree, exposed for reports on closure members.
pub fn hubs_of_member(g: &Multigraph) -> VertexSet {
    max_degree_set(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::wheels::hub_edges_removable;

    fn leaf(k: usize) -> GCertificate {
        GCertificate::Leaf(WheelSpec::simple(k))
    }

    #[test]
    fn certificate_json_shape() {
        let c = GCertificate::Node {
            left: Box::new(leaf(5)),
            right: WheelSpec { k: 3, mults: vec![3, 1, 1] },
            u: 5,
            v: 0,
            theta: vec![0, 1, 2, 3, 4],
        };
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.starts_with(r#"{"node":{"left":{"leaf":{"k":5,"mults":[1,1,1,1,1]}}"#));
        let back: GCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.level(), 2);
    }

    #[test]
    fn leaves() {
        assert!(is_isomorphic(&verify_certificate(&leaf(5)).unwrap(), &make_wheel(&WheelSpec::simple(5)).unwrap()));
        assert!(verify_certificate(&leaf(3)).is_ok());
        assert_eq!(
            verify_certificate(&leaf(4)),
            Err(Error::ConditionViolated { level: 1, condition: "odd wheel".into() })
        );
    }

    #[test]
    fn node_conditions() {
        // W5 at its hub with a W3 whose rim vertex 0 has a tripled spoke
        let ok = GCertificate::Node {
            left: Box::new(leaf(5)),
            right: WheelSpec { k: 3, mults: vec![3, 1, 1] },
            u: 5,
            v: 0,
            theta: vec![0, 2, 1, 3, 4],
        };
        let g = verify_certificate(&ok).unwrap();
        assert_eq!(g.n(), 8);
        // a four-vertex left graph is rejected before the size clause
        let small = GCertificate::Node {
            left: Box::new(leaf(3)),
            right: WheelSpec::simple(3),
            u: 0,
            v: 0,
            theta: vec![0, 1, 2],
        };
        assert_eq!(
            verify_certificate(&small),
            Err(Error::ConditionViolated { level: 2, condition: "left graph has at least 6 vertices".into() })
        );
        // K4 spliced at the hub of W5: u ∈ U(G) is forbidden for K4
        let k4_at_hub = GCertificate::Node {
            left: Box::new(leaf(5)),
            right: WheelSpec::simple(3),
            u: 5,
            v: 0,
            theta: vec![0, 1, 2],
        };
        assert!(verify_certificate(&k4_at_hub).is_err());
    }

    #[test]
    fn site_enumeration() {
        // K4 marked at one vertex: one class
        assert_eq!(wheel_sites(3, 1, 1, None).len(), 1);
        // W5: hub, or rim vertex with spoke 1
        assert_eq!(wheel_sites(5, 1, 1, None).len(), 2);
        // K4 with spokes up to 2: classes of (multigraph, marked vertex)
        let sites = wheel_sites(3, 2, 2, None);
        let forms: HashSet<_> = sites
            .iter()
            .map(|(s, v)| {
                let mut c = vec![0u32; 4];
                c[*v] = 1;
                canonize(&make_wheel(s).unwrap(), Some(&c)).form
            })
            .collect();
        assert_eq!(forms.len(), sites.len());
    }

    #[test]
    fn closure_to_eight() {
        let c = g_closure(ClosureOptions { max_n: 8, mult_bound: 1, bricks_only: false }).unwrap();
        // every member rebuilds and verifies, and larger bricks satisfy the
        // unique-hub properties
        for m in &c.members {
            let g = verify_certificate(&m.cert).unwrap();
            assert_eq!(canonical_form(&g), m.form);
            if g.n() > 4 && is_brick(&g) {
                let u = max_degree_set(&g);
                assert_eq!(u.len(), 1);
                assert!(hub_edges_removable(&g, u.first().unwrap()));
            }
        }
        assert!(c.find(&make_wheel(&WheelSpec::simple(7)).unwrap()).is_some());
        assert!(c.members.iter().any(|m| m.cert.level() == 2));
    }
}
