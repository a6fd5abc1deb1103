//! Tight cut decomposition into bricks and braces, and the classifications
//! built on it (brace, near-brick, solid).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::cuts::{candidate_shores, pairings, separating_unchecked, tight_given};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::limits::Limits;
use crate::mc::is_matching_covered;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Brick,
    Brace,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompComponent {
    pub graph: Multigraph,
    pub kind: ComponentKind,
    /// `origin[v]` is the set of vertices of the input graph that vertex `v`
    /// of this component stands for.
    pub origin: Vec<VertexSet>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompResult {
    pub components: Vec<DecompComponent>,
    /// Shores of the cuts used, in input-graph vertices, in the order the
    /// splits were made.
    pub cut_trace: Vec<VertexSet>,
}

impl DecompResult {
    pub fn brick_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Brick)
            .count()
    }

    pub fn bricks(&self) -> impl Iterator<Item = &DecompComponent> {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Brick)
    }

    /// The component multiset as sorted `(kind, canonical form)` pairs.
    pub fn signature(&self) -> Vec<(ComponentKind, CanonicalForm)> {
        let mut s: Vec<_> = self
            .components
            .iter()
            .map(|c| (c.kind, canonical_form(&c.graph)))
            .collect();
        s.sort();
        s
    }

    /// Like [`signature`](Self::signature) but on underlying simple graphs.
    /// Different cut orders can leave different edge multiplicities in the
    /// same brick or brace, so this is the invariant one.
    pub fn simple_signature(&self) -> Vec<(ComponentKind, CanonicalForm)> {
        let mut s: Vec<_> = self
            .components
            .iter()
            .map(|c| (c.kind, canonical_form(&c.graph.underlying_simple())))
            .collect();
        s.sort();
        s
    }
}

/// How the next nontrivial tight cut is picked when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutChoice {
    /// The shore (containing vertex 0) with the least mask.
    Least,
    /// Uniformly at random from a generator seeded with the given value.
    Seeded(u64),
}

fn require_mc(g: &Multigraph) -> Result<()> {
    if is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

fn tight_shores(g: &Multigraph) -> Result<Vec<VertexSet>> {
    let shores = candidate_shores(g)?;
    if shores.is_empty() {
        return Ok(shores);
    }
    let p = pairings(g)?;
    Ok(shores.into_iter().filter(|&x| tight_given(&p, x)).collect())
}

/// The least nontrivial tight shore, if `g` is neither a brick nor a brace.
pub fn find_nontrivial_tight_cut(g: &Multigraph) -> Result<Option<VertexSet>> {
    require_mc(g)?;
    Ok(tight_shores(g)?.into_iter().next())
}

pub fn tight_cut_decomposition(g: &Multigraph) -> Result<DecompResult> {
    tight_cut_decomposition_with(g, CutChoice::Least)
}

pub fn tight_cut_decomposition_with(g: &Multigraph, choice: CutChoice) -> Result<DecompResult> {
    require_mc(g)?;
    let mut rng = match choice {
        CutChoice::Least => None,
        CutChoice::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
    };
    let mut stack = vec![(g.clone(), (0..g.n()).map(VertexSet::singleton).collect::<Vec<_>>())];
    let mut components = Vec::new();
    let mut cut_trace = Vec::new();
    while let Some((piece, origin)) = stack.pop() {
        let shores = tight_shores(&piece)?;
        let pick = match rng.as_mut() {
            None => shores.first().copied(),
            Some(r) => shores.choose(r).copied(),
        };
        let Some(x) = pick else {
            let kind = if piece.is_bipartite() {
                ComponentKind::Brace
            } else {
                ComponentKind::Brick
            };
            components.push(DecompComponent {
                graph: piece,
                kind,
                origin,
            });
            continue;
        };
        let expand = |s: VertexSet| -> VertexSet {
            s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(origin[v]))
        };
        cut_trace.push(expand(x));
        // Shrinking one shore leaves a piece for the other side.
        let y = x.complement(piece.n());
        for s in [y, x] {
            let c = piece.contract(s)?;
            let mut o = vec![VertexSet::EMPTY; c.graph.n()];
            for v in 0..piece.n() {
                let w = c.vertex_map[v];
                o[w] = o[w].union(origin[v]);
            }
            stack.push((c.graph, o));
        }
    }
    Ok(DecompResult {
        components,
        cut_trace,
    })
}

/// Bipartite, matching covered and free of nontrivial tight cuts.
pub fn is_brace(g: &Multigraph) -> Result<bool> {
    require_mc(g)?;
    Ok(g.is_bipartite() && tight_shores(g)?.is_empty())
}

pub fn brick_count(g: &Multigraph) -> Result<usize> {
    Ok(tight_cut_decomposition(g)?.brick_count())
}

pub fn is_near_brick(g: &Multigraph) -> Result<bool> {
    Ok(brick_count(g)? == 1)
}

fn check_solid_bound(n: usize) -> Result<()> {
    let limit = Limits::get().max_shore_vertices;
    if n > limit {
        return Err(Error::BoundExceeded {
            what: "solidity test vertices",
            value: n,
            limit,
        });
    }
    Ok(())
}

/// Shores (containing vertex 0) of the separating cuts that are not tight.
pub fn separating_nontight_shores(g: &Multigraph) -> Result<Vec<VertexSet>> {
    require_mc(g)?;
    check_solid_bound(g.n())?;
    let shores = candidate_shores(g)?;
    if shores.is_empty() {
        return Ok(shores);
    }
    let p = pairings(g)?;
    Ok(shores
        .into_iter()
        .filter(|&x| !tight_given(&p, x) && separating_unchecked(g, x))
        .collect())
}

/// Every separating cut is tight.
pub fn is_solid(g: &Multigraph) -> Result<bool> {
    Ok(separating_nontight_shores(g)?.is_empty())
}

/// Shores (containing vertex 0) of the robust cuts: separating, not tight,
/// and with both contractions near-bricks.
pub fn robust_cut_shores(g: &Multigraph) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for x in separating_nontight_shores(g)? {
        let a = g.contract(x)?.graph;
        let b = g.contract(x.complement(g.n()))?.graph;
        if is_near_brick(&a)? && is_near_brick(&b)? {
            out.push(x);
        }
    }
    Ok(out)
}
