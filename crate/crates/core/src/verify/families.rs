//! Campaigns over wheels, splices and the family 𝒢.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::campaigns::has_nonadjacent_pair;
use super::{connected_graphs, Acc, CampaignParams, Outcome};
use crate::canon::{canonical_form, canonize, is_isomorphic, orbits};
use crate::decomposition::is_solid;
use crate::error::{Error, Result};
use crate::family::{g_closure_cached, verify_certificate, ClosureOptions};
use crate::format::encode_graph6;
use crate::generate::{all_graphs, multigraph_variants};
use crate::graph::{Multigraph, VertexId};
use crate::mc::{is_brick, is_near_bipartite, removable_edges};
use crate::wheels::{
    check_odd_wheel_splice, hub_edges_removable, make_wheel, max_degree_set, splice, theta_orbits, wheel_hubs_of_brick,
    wheel_specs, SpliceSpec, WheelSpec,
};

/// Longest rim accepted by the splice campaign.
const MAX_SPLICE_RIM: usize = 7;

fn is_w5_with_hub_parallels(g: &Multigraph, w5: &Multigraph) -> bool {
    let simple = g.underlying_simple();
    if !is_isomorphic(&simple, w5) {
        return false;
    }
    let hub = (0..6).find(|&v| simple.degree(v) == 5).unwrap();
    g.parallel_classes().iter().all(|&(a, b, m)| m == 1 || a == hub || b == hub)
}

/// Six-vertex bricks with every edge multiplicity at most `mult_bound`.
fn six_vertex_bricks(mult_bound: usize) -> Result<Vec<Multigraph>> {
    let mut out = Vec::new();
    for g in all_graphs(6)?.iter().filter(|g| is_brick(g)) {
        out.extend(multigraph_variants(g, mult_bound, |_, _| true));
    }
    Ok(out)
}

pub(super) fn six_vertex_wheel_like(p: &CampaignParams) -> Result<Acc> {
    let mut acc = Acc::new();
    let w5 = make_wheel(&WheelSpec::simple(5))?;
    let graphs = six_vertex_bricks(p.mult_bound)?;
    acc.run(&graphs, |g| {
        let mut o = Outcome::subject();
        let hubs = wheel_hubs_of_brick(g);
        let wheel_like = !hubs.is_empty();
        let expected = is_w5_with_hub_parallels(g, &w5);
        o.prop("wheel_like", wheel_like);
        o.prop("w5_hub_parallels", expected);
        if wheel_like {
            o.count("wheel_like");
            // parallel classes touch every hub
            let touch = g
                .parallel_classes()
                .iter()
                .all(|&(a, b, m)| m == 1 || hubs.iter().all(|h| h == a || h == b));
            o.check(touch, || "a parallel class misses a hub".into());
        }
        o.check(wheel_like == expected, || {
            format!("wheel-like is {wheel_like} but W5-with-hub-parallels is {expected}")
        });
        Ok(o)
    })?;
    Ok(acc)
}

fn vertex_orbit_reps(g: &Multigraph) -> Vec<VertexId> {
    let orb = orbits(g.n(), &canonize(g, None).generators);
    (0..g.n()).filter(|&v| orb[v] == v).collect()
}

fn spec_label(s: &WheelSpec) -> String {
    let m: Vec<String> = s.mults.iter().map(|x| x.to_string()).collect();
    format!("W{}[{}]", s.k, m.join(","))
}

struct SpliceSite {
    g: WheelSpec,
    u: VertexId,
    h: WheelSpec,
    v: VertexId,
    supplement: bool,
}

struct SiteResult {
    props: BTreeMap<String, Value>,
    thetas: u64,
    bricks: u64,
    wheel_like: u64,
    holds: u64,
    failures: Vec<(Multigraph, String)>,
}

fn evaluate_site(site: &SpliceSite) -> Result<SiteResult> {
    let g = make_wheel(&site.g)?;
    let h = make_wheel(&site.h)?;
    let thetas = theta_orbits(&g, site.u, &h, site.v, None)?;
    let mut r = SiteResult {
        props: BTreeMap::new(),
        thetas: thetas.len() as u64,
        bricks: 0,
        wheel_like: 0,
        holds: 0,
        failures: Vec::new(),
    };
    for theta in thetas {
        let s = splice(&SpliceSpec {
            g: g.clone(),
            u: site.u,
            h: h.clone(),
            v: site.v,
            theta: theta.clone(),
        })?;
        if !is_brick(&s) {
            continue;
        }
        r.bricks += 1;
        let wheel_like = !wheel_hubs_of_brick(&s).is_empty();
        let report = check_odd_wheel_splice(&site.g, &site.h, site.u, site.v, &theta)?;
        r.wheel_like += wheel_like as u64;
        r.holds += report.holds as u64;
        if wheel_like != report.holds {
            r.failures.push((
                s,
                format!(
                    "{} at {} with {} at {}, theta {:?}: wheel-like {} but conditions {} (violated {:?})",
                    spec_label(&site.g),
                    site.u,
                    spec_label(&site.h),
                    site.v,
                    theta,
                    wheel_like,
                    report.holds,
                    report.violated
                ),
            ));
        }
    }
    r.props.insert("theta_orbits".into(), json!(r.thetas));
    r.props.insert("bricks".into(), json!(r.bricks));
    r.props.insert("wheel_like".into(), json!(r.wheel_like));
    r.props.insert("conditions_hold".into(), json!(r.holds));
    r.props.insert("supplement".into(), json!(site.supplement));
    Ok(r)
}

fn splice_sites(p: &CampaignParams) -> Result<Vec<SpliceSite>> {
    if let Some(&k) = p.wheels.iter().find(|&&k| k > MAX_SPLICE_RIM) {
        return Err(Error::BoundExceeded { what: "splice wheel rim length", value: k, limit: MAX_SPLICE_RIM });
    }
    let ks: Vec<usize> = p.wheels.iter().copied().filter(|k| k % 2 == 1 && *k >= 3).collect();
    let specs = wheel_specs(&ks, p.mult_bound);
    let wheels: Vec<(WheelSpec, Multigraph, Vec<VertexId>)> = specs
        .iter()
        .map(|s| {
            let g = make_wheel(s).unwrap();
            let reps = vertex_orbit_reps(&g);
            (s.clone(), g, reps)
        })
        .collect();
    let mut sites = Vec::new();
    for (i, (gs, g, gr)) in wheels.iter().enumerate() {
        for (hs, h, hr) in &wheels[i..] {
            if g.n() + h.n() - 2 > p.max_n {
                continue;
            }
            for &u in gr {
                for &v in hr {
                    if gs == hs && v < u {
                        continue;
                    }
                    if g.degree(u) == h.degree(v) {
                        sites.push(SpliceSite { g: gs.clone(), u, h: hs.clone(), v, supplement: false });
                    }
                }
            }
        }
    }
    // Rim vertices whose spoke is heavier than the bound, matched with hubs
    // of the larger wheels: the only place the conditions can all hold.
    for (gs, g, _) in wheels.iter().filter(|w| w.0.k >= 5) {
        let d = g.degree(gs.k);
        if d < 3 || d - 2 <= p.mult_bound {
            continue;
        }
        for &k in &ks {
            if g.n() + k + 1 - 2 > p.max_n {
                continue;
            }
            let mut seen = std::collections::HashSet::new();
            for rest in wheel_specs(&[k], p.mult_bound).into_iter().flat_map(|s| rotations(&s)) {
                let mut mults = vec![d - 2];
                mults.extend_from_slice(&rest.mults[1..]);
                let reflected: Vec<usize> = [vec![mults[0]], mults[1..].iter().rev().copied().collect()].concat();
                if !seen.insert(mults.clone().min(reflected)) {
                    continue;
                }
                sites.push(SpliceSite {
                    g: gs.clone(),
                    u: gs.k,
                    h: WheelSpec { k, mults },
                    v: 0,
                    supplement: true,
                });
            }
        }
    }
    Ok(sites)
}

fn rotations(s: &WheelSpec) -> Vec<WheelSpec> {
    (0..s.k)
        .map(|r| WheelSpec {
            k: s.k,
            mults: (0..s.k).map(|i| s.mults[(i + r) % s.k]).collect(),
        })
        .collect()
}

pub(super) fn odd_wheel_splices(p: &CampaignParams) -> Result<Acc> {
    let mut acc = Acc::new();
    let sites = splice_sites(p)?;
    let results: Vec<SiteResult> = sites.par_iter().map(evaluate_site).collect::<Result<_>>()?;
    for (site, r) in sites.iter().zip(results) {
        acc.examined(1);
        acc.count("theta_orbits", r.thetas);
        acc.count("brick_results", r.bricks);
        acc.count("wheel_like_results", r.wheel_like);
        acc.count("conditions_hold", r.holds);
        if site.supplement {
            acc.count("supplement_sites", 1);
        }
        for (g, reason) in r.failures {
            acc.fail(&g, reason);
        }
        let id = format!("{}@{} x {}@{}", spec_label(&site.g), site.u, spec_label(&site.h), site.v);
        acc.verdict(id, site.g.k + site.h.k, r.props);
    }
    Ok(acc)
}

pub(super) fn wheel_like_in_family(p: &CampaignParams) -> Result<Acc> {
    let mut acc = Acc::new();
    let closure = g_closure_cached(ClosureOptions::new(p.max_n, p.mult_bound.max(1)))?;
    acc.set_count("closure_members", closure.len() as u64);

    let mut targets: Vec<Multigraph> = Vec::new();
    if p.max_n >= 6 {
        targets.extend(six_vertex_bricks(p.mult_bound.max(1))?.into_iter().filter(|g| !wheel_hubs_of_brick(g).is_empty()));
    }
    for g in connected_graphs(4, p.max_n)? {
        if g.n() % 2 == 0 && g.n() != 6 && is_brick(&g) && !wheel_hubs_of_brick(&g).is_empty() {
            targets.push(g);
        }
    }
    if p.max_n >= 6 {
        // simple six-vertex ones already came with the variants
    }
    acc.run(&targets, |g| {
        let mut o = Outcome::subject();
        o.count("wheel_like_bricks");
        match closure.find(g) {
            None => o.failures.push("wheel-like brick with no certificate in the closure".into()),
            Some(m) => {
                let built = verify_certificate(&m.cert)?;
                o.check(is_isomorphic(&built, g), || "certificate builds a different graph".into());
                o.prop("level", m.cert.level());
                o.prop("certificate", serde_json::to_value(&m.cert).unwrap());
            }
        }
        Ok(o)
    })?;

    // unique hub and removable hub edges on every brick member
    let members: Vec<Multigraph> = closure.members.iter().map(|m| m.graph.clone()).collect();
    let prev = acc.keep_verdicts;
    acc.keep_verdicts = false;
    let outcomes: Vec<(bool, bool)> = members
        .par_iter()
        .map(|g| {
            if g.n() <= 4 || !is_brick(g) {
                return (true, true);
            }
            let u = max_degree_set(g);
            let one = u.len() == 1;
            (one, one && hub_edges_removable(g, u.first().unwrap()))
        })
        .collect();
    for (g, (one, removable)) in members.iter().zip(outcomes) {
        if g.n() > 4 && is_brick(g) {
            acc.count("members_hub_checked", 1);
        }
        if !one {
            acc.fail(g, "closure member with more than one vertex of maximum degree".into());
        } else if !removable {
            acc.fail(g, "closure member with a nonremovable edge at its hub".into());
        }
    }
    acc.keep_verdicts = prev;
    Ok(acc)
}

pub(super) fn figures(p: &CampaignParams) -> Result<Acc> {
    let mut acc = Acc::new();

    // bricks lacking two nonadjacent removable edges among simple
    // near-bipartite ones
    let k4 = Multigraph::complete(4);
    let prism = Multigraph::prism();
    let bricks: Vec<Multigraph> = connected_graphs(4, 8)?
        .into_iter()
        .filter(|g| g.n() % 2 == 0 && is_brick(g))
        .collect();
    let flags: Vec<Option<(bool, bool)>> = bricks
        .par_iter()
        .map(|g| -> Result<Option<(bool, bool)>> {
            if is_near_bipartite(g)?.is_none() {
                return Ok(None);
            }
            let rem = removable_edges(g)?;
            Ok(Some((has_nonadjacent_pair(g, &rem), !wheel_hubs_of_brick(g).is_empty())))
        })
        .collect::<Result<_>>()?;
    let mut r8 = Vec::new();
    for (g, f) in bricks.iter().zip(flags) {
        acc.examined(1);
        let Some((two, wheel_like)) = f else { continue };
        acc.count("near_bipartite_bricks", 1);
        let is_k4 = is_isomorphic(g, &k4);
        if wheel_like != is_k4 {
            acc.fail(g, format!("near-bipartite brick: wheel-like {wheel_like} but K4 {is_k4}"));
        }
        if !two {
            if g.n() == 8 {
                r8.push(g.clone());
            } else if !is_k4 && !is_isomorphic(g, &prism) {
                acc.fail(g, "near-bipartite brick without two nonadjacent removable edges".into());
            }
        }
    }
    acc.set_count("r8_candidates", r8.len() as u64);
    if r8.len() != 1 {
        let report = r8.first().cloned().unwrap_or_else(|| Multigraph::empty(8));
        acc.fail(&report, format!("{} eight-vertex candidates instead of one", r8.len()));
    }
    for g in &r8 {
        let mut props = BTreeMap::new();
        props.insert("figure".into(), json!("r8"));
        props.insert("graph6".into(), json!(encode_graph6(g)?));
        acc.verdict(canonical_form(g).to_hex(), g.n(), props);
    }

    // six-vertex simple bricks that are nonsolid and nonplanar
    let mut nonsolid_nonplanar = 0;
    let w5 = make_wheel(&WheelSpec::simple(5))?;
    for g in all_graphs(6)?.iter().filter(|g| is_brick(g)) {
        let solid = is_solid(g)?;
        let planar = g.is_planar_small()?;
        let wheel_like = !wheel_hubs_of_brick(g).is_empty();
        let is_w5 = is_isomorphic(g, &w5);
        if solid && !is_w5 {
            acc.fail(g, "solid six-vertex brick other than W5".into());
        }
        if planar && wheel_like != is_w5 {
            acc.fail(g, format!("planar six-vertex brick: wheel-like {wheel_like} but W5 {is_w5}"));
        }
        if solid || planar {
            continue;
        }
        nonsolid_nonplanar += 1;
        if wheel_like {
            acc.fail(g, "nonsolid nonplanar six-vertex brick is wheel-like".into());
        }
        let mut props = BTreeMap::new();
        props.insert("figure".into(), json!("nonsolid-nonplanar-6"));
        props.insert("graph6".into(), json!(encode_graph6(g)?));
        props.insert("removable_edges".into(), json!(removable_edges(g)?.len()));
        acc.verdict(canonical_form(g).to_hex(), 6, props);
    }
    acc.set_count("six_vertex_nonsolid_nonplanar", nonsolid_nonplanar);
    if nonsolid_nonplanar == 0 {
        acc.fail(&Multigraph::empty(6), "no nonsolid nonplanar six-vertex brick".into());
    }

    // third-level family members that are bricks but not wheel-like
    let closure = g_closure_cached(ClosureOptions::new(p.max_n, 1))?;
    let third: Vec<_> = closure.members.iter().filter(|m| m.cert.level() == 3).collect();
    let flags: Vec<bool> = third
        .par_iter()
        .map(|m| is_brick(&m.graph) && wheel_hubs_of_brick(&m.graph).is_empty())
        .collect();
    let mut third_level = 0;
    for (m, hit) in third.iter().zip(flags) {
        if !hit {
            continue;
        }
        third_level += 1;
        if third_level == 1 {
            let mut props = BTreeMap::new();
            props.insert("figure".into(), json!("family-level-3-not-wheel-like"));
            props.insert("certificate".into(), serde_json::to_value(&m.cert).unwrap());
            acc.verdict(m.form.to_hex(), m.graph.n(), props);
        }
    }
    acc.set_count("third_level_not_wheel_like", third_level);
    if third_level == 0 {
        acc.fail(&Multigraph::empty(1), "no third-level family brick that is not wheel-like".into());
    }
    Ok(acc)
}
