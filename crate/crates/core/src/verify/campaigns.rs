//! Campaigns that walk a list of graphs and test one statement per graph.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{connected_graphs, Acc, CampaignParams, Outcome};
use crate::bipartite::{all_p_sets, check_certificate, search_certificate, Bipartition};
use crate::canon::is_isomorphic;
use crate::decomposition::{find_nontrivial_tight_cut, tight_cut_decomposition, tight_cut_decomposition_with, CutChoice};
use crate::error::Result;
use crate::generate::{multigraph_variants, random_bipartite_graph, random_connected_graph};
use crate::graph::{EdgeId, Multigraph, VertexSet};
use crate::matching::max_matching;
use crate::mc::{is_bicritical, is_brick, is_matching_covered, is_minimal_mc, removable_classes, removable_edges, RemovableClass};
use crate::wheels::{make_wheel, WheelSpec};

fn source(corpus: Option<&[Multigraph]>, lo: usize, hi: usize) -> Result<Vec<Multigraph>> {
    match corpus {
        Some(c) => Ok(c.to_vec()),
        None => connected_graphs(lo, hi),
    }
}

/// Maximum matching size by trying both options for the lowest free vertex.
fn brute_force_matching_size(adj: &[u64], free: u64) -> usize {
    if free == 0 {
        return 0;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut best = brute_force_matching_size(adj, rest);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + brute_force_matching_size(adj, rest & !(1 << w)));
    }
    best
}

fn matching_outcome(g: &Multigraph) -> Outcome {
    let mut o = Outcome::subject();
    let m = max_matching(g);
    let mut seen = VertexSet::EMPTY;
    let mut valid = true;
    for &e in &m.edges {
        let (a, b) = g.endpoints(e);
        valid &= !seen.contains(a) && !seen.contains(b);
        seen.insert(a);
        seen.insert(b);
    }
    let expected = brute_force_matching_size(&g.adjacency(), g.vertices().0);
    o.check(valid, || "returned edges are not a matching".into());
    o.check(m.len() == expected, || format!("matching size {} but optimum is {}", m.len(), expected));
    o
}

pub(super) fn matching_oracle(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    acc.keep_verdicts = false;
    if let Some(c) = corpus {
        acc.run(c, |g| Ok(matching_outcome(g)))?;
        acc.count("corpus_graphs", c.len() as u64);
        return Ok(acc);
    }
    let exhaustive = connected_graphs(1, p.max_n.min(6))?;
    acc.run(&exhaustive, |g| Ok(matching_outcome(g)))?;
    acc.count("exhaustive_graphs", exhaustive.len() as u64);
    for n in 1..=p.max_n {
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed.wrapping_mul(1_000_003).wrapping_add(n as u64));
        let sample: Vec<Multigraph> = (0..p.samples).map(|_| random_connected_graph(n, &mut rng)).collect();
        acc.run(&sample, |g| Ok(matching_outcome(g)))?;
        acc.count("sampled_graphs", sample.len() as u64);
    }
    Ok(acc)
}

fn class_counts(classes: &[RemovableClass]) -> (usize, usize) {
    let singles = classes.iter().filter(|c| matches!(c, RemovableClass::Single(_))).count();
    (singles, classes.len() - singles)
}

pub(super) fn golden() -> Result<Acc> {
    let mut acc = Acc::new();
    let w5 = make_wheel(&WheelSpec::simple(5))?;
    let w7 = make_wheel(&WheelSpec::simple(7))?;
    // (name, graph, singles, doubletons, rim edges that must be nonremovable)
    let cases: Vec<(&str, Multigraph, usize, usize, Vec<EdgeId>)> = vec![
        ("K4", Multigraph::complete(4), 0, 3, vec![]),
        ("prism", Multigraph::prism(), 0, 3, vec![]),
        ("W5", w5, 5, 0, (0..5).collect()),
        ("W7", w7, 7, 0, (0..7).collect()),
    ];
    for (name, g, singles, doubletons, rim) in cases {
        let classes = removable_classes(&g)?;
        let (s, d) = class_counts(&classes);
        let removable = removable_edges(&g)?;
        let mut o = Outcome::subject();
        o.prop("name", name);
        o.prop("singles", s);
        o.prop("doubletons", d);
        o.check(s == singles && d == doubletons, || {
            format!("{name}: {s} singles and {d} doubletons, expected {singles} and {doubletons}")
        });
        let rim_removable = rim.iter().filter(|e| removable.contains(e)).count();
        o.check(rim_removable == 0, || format!("{name}: {rim_removable} rim edges removable"));
        acc.record(&g, o);
    }
    Ok(acc)
}

pub(super) fn removable_class_count(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = source(corpus, 4, p.max_n)?;
    let k4 = Multigraph::complete(4);
    let prism = Multigraph::prism();
    acc.run(&graphs, |g| {
        if g.n() % 2 == 1 || !is_brick(g) {
            return Ok(Outcome::skip());
        }
        let mut o = Outcome::subject();
        let classes = removable_classes(g)?;
        let (singles, _) = class_counts(&classes);
        let delta = g.max_degree();
        o.prop("max_degree", delta);
        o.prop("classes", classes.len());
        o.prop("removable_edges", singles);
        o.check(classes.len() >= delta, || {
            format!("{} removable classes but maximum degree {}", classes.len(), delta)
        });
        if singles + 2 < delta {
            if is_isomorphic(g, &k4) || is_isomorphic(g, &prism) {
                o.prop("edge_count_exception", true);
                o.count("edge_count_exceptions");
            } else {
                o.failures.push(format!("{singles} removable edges, fewer than maximum degree {delta} minus 2"));
            }
        }
        Ok(o)
    })?;
    Ok(acc)
}

fn min_degree_outcome(g: &Multigraph, key: &'static str) -> Outcome {
    if g.n() < 4 || !is_minimal_mc(g) {
        return Outcome::skip();
    }
    let mut o = Outcome::subject();
    let d = g.min_degree();
    o.prop("min_degree", d);
    o.count(key);
    o.check(d == 2 || d == 3, || format!("minimal matching covered with minimum degree {d}"));
    o
}

pub(super) fn minimal_min_degree(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = source(corpus, 2, p.max_n)?;
    acc.run(&graphs, |g| Ok(min_degree_outcome(g, "minimal_simple")))?;
    if corpus.is_none() && p.mult_bound > 1 {
        // multigraphs over every matching covered underlying graph on ≤ 6 vertices
        let bases: Vec<Multigraph> = connected_graphs(2, p.max_n.min(6))?
            .into_iter()
            .filter(is_matching_covered)
            .collect();
        for base in &bases {
            let variants: Vec<Multigraph> = multigraph_variants(base, p.mult_bound, |_, _| true)
                .into_iter()
                .filter(|h| !h.is_simple())
                .collect();
            acc.count("multigraphs", variants.len() as u64);
            acc.run(&variants, |g| Ok(min_degree_outcome(g, "minimal_multigraph")))?;
        }
    }
    Ok(acc)
}

fn bipartite_mc_graphs(corpus: Option<&[Multigraph]>, max_n: usize) -> Result<Vec<Multigraph>> {
    Ok(source(corpus, 2, max_n.min(8))?
        .into_iter()
        .filter(|g| g.is_bipartite() && is_matching_covered(g))
        .collect())
}

fn removable_mask(g: &Multigraph) -> Vec<bool> {
    (0..g.m())
        .map(|e| g.delete_edges(&[e]).map(|h| is_matching_covered(&h)).unwrap_or(false))
        .collect()
}

/// Bipartite matching covered graphs, plus multigraph variants of those on at
/// most six vertices and random ten-vertex samples with minimum degree 3.
fn bipartite_mc_extended(p: &CampaignParams, corpus: Option<&[Multigraph]>, acc: &mut Acc) -> Result<Vec<Multigraph>> {
    let mut graphs = bipartite_mc_graphs(corpus, p.max_n)?;
    if corpus.is_some() {
        return Ok(graphs);
    }
    if p.mult_bound > 1 {
        let bases: Vec<Multigraph> = graphs.iter().filter(|g| g.n() >= 4 && g.n() <= 6).cloned().collect();
        let mut added = 0;
        for base in &bases {
            for h in multigraph_variants(base, p.mult_bound, |_, _| true) {
                if !h.is_simple() {
                    graphs.push(h);
                    added += 1;
                }
            }
        }
        acc.count("multigraphs", added);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut sampled = 0;
    let mut tries = 0;
    while sampled < p.samples && tries < 1000 * p.samples {
        tries += 1;
        let g = random_bipartite_graph(5, 5, 0.6, &mut rng);
        if g.min_degree() >= 3 && is_matching_covered(&g) {
            graphs.push(g);
            sampled += 1;
        }
    }
    acc.count("sampled_graphs", sampled as u64);
    Ok(graphs)
}

pub(super) fn bipartite_certificates(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let mut graphs = bipartite_mc_graphs(corpus, p.max_n)?;
    if corpus.is_none() && p.max_n >= 10 {
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        let mut sampled = 0;
        while sampled < p.samples {
            let g = random_bipartite_graph(5, 5, 0.5, &mut rng);
            if is_matching_covered(&g) {
                graphs.push(g);
                sampled += 1;
            }
        }
        acc.count("sampled_graphs", sampled as u64);
    }
    acc.run(&graphs, |g| {
        // the characterisation needs at least two edges
        if g.m() < 2 {
            return Ok(Outcome::skip());
        }
        let mut o = Outcome::subject();
        let removable = removable_mask(g);
        let mut nonremovable = 0;
        for (e, &r) in removable.iter().enumerate() {
            let cert = search_certificate(g, e)?;
            if let Some(c) = cert {
                o.check(check_certificate(g, e, c)?, || format!("edge {e}: certificate found but fails its own check"));
            }
            if !r {
                nonremovable += 1;
            }
            o.check(r != cert.is_some(), || {
                if r {
                    format!("edge {e} is removable but has a certificate")
                } else {
                    format!("edge {e} is not removable but has no certificate")
                }
            });
        }
        o.prop("edges", g.m());
        o.prop("nonremovable", nonremovable);
        o.counts.push(("edges_checked", g.m() as u64));
        Ok(o)
    })?;
    Ok(acc)
}

pub(super) fn minimum_p_set_edges(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = bipartite_mc_extended(p, corpus, &mut acc)?;
    acc.run(&graphs, |g| {
        if g.n() < 4 || g.min_degree() < 3 {
            return Ok(Outcome::skip());
        }
        let mut o = Outcome::subject();
        let sets = all_p_sets(g)?;
        let Some(min) = sets.iter().map(|s| s.set.len()).min() else {
            o.count("no_p_set");
            o.prop("minimum_p_sets", 0);
            return Ok(o);
        };
        let minimum: Vec<VertexSet> = sets.iter().filter(|s| s.set.len() == min).map(|s| s.set).collect();
        let removable = removable_mask(g);
        for x in &minimum {
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                if x.contains(a) && x.contains(b) {
                    o.check(removable[e], || format!("edge {e} inside minimum P-set {:?} is not removable", x.to_vec()));
                }
            }
        }
        o.prop("minimum_p_set_size", min);
        o.prop("minimum_p_sets", minimum.len());
        Ok(o)
    })?;
    Ok(acc)
}

pub(super) fn has_nonadjacent_pair(g: &Multigraph, edges: &[EdgeId]) -> bool {
    edges.iter().enumerate().any(|(i, &e)| {
        let (a, b) = g.endpoints(e);
        edges[i + 1..].iter().any(|&f| {
            let (c, d) = g.endpoints(f);
            a != c && a != d && b != c && b != d
        })
    })
}

pub(super) fn bipartite_two_removable(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = bipartite_mc_extended(p, corpus, &mut acc)?;
    acc.run(&graphs, |g| {
        if g.n() < 4 {
            return Ok(Outcome::skip());
        }
        let part = Bipartition::of(g).expect("bipartite");
        let mut o = Outcome::skip();
        let removable = removable_mask(g);
        let rem: Vec<EdgeId> = (0..g.m()).filter(|&e| removable[e]).collect();
        let two = has_nonadjacent_pair(g, &rem);
        for (a, b) in [(part.a, part.b), (part.b, part.a)] {
            if !a.iter().all(|x| g.degree(x) >= 3) {
                continue;
            }
            o.subject = true;
            let pair = b.iter().any(|v| g.degree(v) == 2)
                && (0..g.n()).any(|u| g.degree(u) >= 4 && g.incident_edges(u).iter().all(|&e| removable[e]));
            o.check(two || pair, || {
                format!("colour class {:?} has degrees ≥ 3 but neither conclusion holds", a.to_vec())
            });
            if two {
                o.count("two_nonadjacent");
            } else {
                o.count("degree_two_pair");
            }
        }
        o.prop("removable_edges", rem.len());
        o.prop("two_nonadjacent", two);
        Ok(o)
    })?;
    Ok(acc)
}

pub(super) fn no_removable_degree_three(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = source(corpus, 4, p.max_n)?;
    acc.run(&graphs, |g| {
        if g.n() % 2 == 1 || !is_bicritical(g) || !removable_edges(g)?.is_empty() {
            return Ok(Outcome::skip());
        }
        let mut o = Outcome::subject();
        let cubic = (0..g.n()).filter(|&v| g.degree(v) == 3).count();
        o.prop("degree_three_vertices", cubic);
        o.check(cubic >= 4, || format!("only {cubic} vertices of degree three"));
        Ok(o)
    })?;
    Ok(acc)
}

pub(super) fn removable_at_one_vertex(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = source(corpus, 4, p.max_n)?;
    acc.run(&graphs, |g| {
        if g.n() % 2 == 1 || !is_bicritical(g) {
            return Ok(Outcome::skip());
        }
        let rem = removable_edges(g)?;
        if rem.is_empty() {
            return Ok(Outcome::skip());
        }
        let common = rem.iter().fold(g.vertices(), |acc, &e| {
            let (a, b) = g.endpoints(e);
            acc.intersection(VertexSet::singleton(a).with(b))
        });
        if common.is_empty() {
            return Ok(Outcome::skip());
        }
        let mut o = Outcome::subject();
        if is_brick(g) {
            o.count("bricks");
        }
        for h in common.iter() {
            let all_removable = g.incident_edges(h).iter().all(|e| rem.contains(e));
            let cubic_elsewhere = (0..g.n()).any(|v| v != h && g.degree(v) == 3);
            o.check(all_removable || cubic_elsewhere, || {
                format!("removable edges all meet vertex {h} but neither conclusion holds")
            });
        }
        o.prop("removable_edges", rem.len());
        o.prop("common_vertices", common.len());
        Ok(o)
    })?;
    Ok(acc)
}

pub(super) fn decomposition_unique(p: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<Acc> {
    let mut acc = Acc::new();
    let graphs = source(corpus, 2, p.max_n)?;
    acc.run(&graphs, |g| {
        if g.n() % 2 == 1 || !is_matching_covered(g) || find_nontrivial_tight_cut(g)?.is_none() {
            return Ok(Outcome::skip());
        }
        let mut o = Outcome::subject();
        let base = tight_cut_decomposition(g)?;
        let sig = base.simple_signature();
        for i in 0..p.seeds as u64 {
            let seed = p.seed.wrapping_add(i);
            let other = tight_cut_decomposition_with(g, CutChoice::Seeded(seed))?;
            o.check(other.simple_signature() == sig, || format!("seed {seed} gives a different component multiset"));
        }
        o.prop("components", base.components.len());
        o.prop("bricks", base.brick_count());
        Ok(o)
    })?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_oracle() {
        let k4 = Multigraph::complete(4);
        assert_eq!(brute_force_matching_size(&k4.adjacency(), k4.vertices().0), 2);
        let p5 = Multigraph::path(5);
        assert_eq!(brute_force_matching_size(&p5.adjacency(), p5.vertices().0), 2);
        let star = Multigraph::complete_bipartite(1, 4);
        assert_eq!(brute_force_matching_size(&star.adjacency(), star.vertices().0), 1);
    }

    #[test]
    fn nonadjacent_pairs() {
        let c4 = Multigraph::cycle(4);
        assert!(has_nonadjacent_pair(&c4, &[0, 2]));
        assert!(!has_nonadjacent_pair(&c4, &[0, 1]));
    }
}
