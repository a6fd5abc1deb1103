//! Verification campaigns: exhaustive and sampled checks of structural
//! statements, reported in a stable JSON shape.

mod campaigns;
mod families;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::format::encode_mg;
use crate::generate::{all_graphs, check_bound};
use crate::graph::Multigraph;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest order accepted for graphs read from a corpus.
pub const MAX_CORPUS_N: usize = 10;

pub const CAMPAIGNS: &[&str] = &[
    "matching-oracle",
    "golden",
    "removable-classes",
    "wheel-like-family",
    "minimal-degree",
    "bipartite-certificates",
    "p-set-edges",
    "bipartite-nonadjacent",
    "six-vertex-wheel-like",
    "wheel-splices",
    "cubic-vertices",
    "removable-at-vertex",
    "decomp-unique",
    "figures",
];

/// Campaigns that accept a corpus in place of their enumerated graphs.
pub const CORPUS_CAMPAIGNS: &[&str] = &[
    "matching-oracle",
    "removable-classes",
    "minimal-degree",
    "bipartite-certificates",
    "p-set-edges",
    "bipartite-nonadjacent",
    "cubic-vertices",
    "removable-at-vertex",
    "decomp-unique",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub max_n: usize,
    pub mult_bound: usize,
    pub seeds: usize,
    pub seed: u64,
    pub samples: usize,
    pub wheels: Vec<usize>,
    pub corpus: Option<String>,
}

impl CampaignParams {
    /// The bounds each campaign runs with unless overridden.
    pub fn defaults(campaign: &str) -> Result<Self> {
        let base = CampaignParams {
            max_n: 8,
            mult_bound: 1,
            seeds: 0,
            seed: 0,
            samples: 0,
            wheels: Vec::new(),
            corpus: None,
        };
        Ok(match campaign {
            "matching-oracle" => CampaignParams { samples: 10_000, seed: 1, ..base },
            "golden" => CampaignParams { max_n: 8, ..base },
            "removable-classes" | "cubic-vertices" | "removable-at-vertex" => base,
            "p-set-edges" | "bipartite-nonadjacent" => CampaignParams { mult_bound: 2, samples: 200, seed: 1, ..base },
            "wheel-like-family" => CampaignParams { mult_bound: 2, ..base },
            "minimal-degree" => CampaignParams { mult_bound: 2, ..base },
            "bipartite-certificates" => CampaignParams { max_n: 10, samples: 200, seed: 1, ..base },
            "six-vertex-wheel-like" => CampaignParams { max_n: 6, mult_bound: 2, ..base },
            "wheel-splices" => CampaignParams { max_n: 16, mult_bound: 2, wheels: vec![3, 5, 7], ..base },
            "decomp-unique" => CampaignParams { seeds: 20, ..base },
            "figures" => CampaignParams { max_n: 10, ..base },
            other => return Err(Error::UnknownCampaign(other.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub status: Status,
    /// Graphs (or splice sites) looked at.
    pub examined: u64,
    /// Those the statement applies to.
    pub subjects: u64,
    pub counterexamples: u64,
    pub counts: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    /// Canonical form (hex) for graphs, a descriptor otherwise.
    pub id: String,
    pub n: usize,
    pub props: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub reason: String,
    pub form: String,
    /// The graph in `.mg` text, replayable through `analyze`.
    pub mg: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema: u32,
    pub campaign: String,
    pub params: CampaignParams,
    pub summary: Summary,
    pub verdicts: Vec<Verdict>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u64>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.summary.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its timing, for byte-for-byte comparison.
    pub fn payload_json(&self) -> String {
        let mut r = self.clone();
        r.wall_clock_ms = None;
        r.to_json()
    }
}

/// Result of evaluating one graph.
#[derive(Default)]
pub(crate) struct Outcome {
    pub subject: bool,
    pub props: BTreeMap<String, Value>,
    pub failures: Vec<String>,
    pub counts: Vec<(&'static str, u64)>,
}

impl Outcome {
    pub fn skip() -> Self {
        Outcome::default()
    }

    pub fn subject() -> Self {
        Outcome {
            subject: true,
            ..Outcome::default()
        }
    }

    pub fn prop(&mut self, key: &str, v: impl Into<Value>) {
        self.props.insert(key.to_string(), v.into());
    }

    pub fn check(&mut self, ok: bool, reason: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(reason());
        }
    }

    pub fn count(&mut self, key: &'static str) {
        self.counts.push((key, 1));
    }
}

#[derive(Default)]
pub(crate) struct Acc {
    examined: u64,
    subjects: u64,
    counts: BTreeMap<String, u64>,
    verdicts: Vec<Verdict>,
    counterexamples: Vec<Counterexample>,
    /// Verdicts are kept only when the statement applies to the graph.
    pub keep_verdicts: bool,
}

impl Acc {
    pub fn new() -> Self {
        Acc {
            keep_verdicts: true,
            ..Acc::default()
        }
    }

    pub fn count(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn set_count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn examined(&mut self, by: u64) {
        self.examined += by;
    }

    pub fn fail(&mut self, g: &Multigraph, reason: String) {
        self.counterexamples.push(Counterexample {
            reason,
            form: canonical_form(g).to_hex(),
            mg: encode_mg(g),
        });
    }

    pub fn verdict(&mut self, id: String, n: usize, props: BTreeMap<String, Value>) {
        self.subjects += 1;
        if self.keep_verdicts {
            self.verdicts.push(Verdict { id, n, props });
        }
    }

    pub fn record(&mut self, g: &Multigraph, o: Outcome) {
        self.examined += 1;
        for (k, v) in o.counts {
            self.count(k, v);
        }
        if !o.subject {
            return;
        }
        for f in o.failures {
            self.fail(g, f);
        }
        self.verdict(canonical_form(g).to_hex(), g.n(), o.props);
    }

    /// Evaluates `f` on every graph in parallel and merges in input order.
    pub fn run<F>(&mut self, graphs: &[Multigraph], f: F) -> Result<()>
    where
        F: Fn(&Multigraph) -> Result<Outcome> + Sync,
    {
        let outcomes: Vec<Outcome> = graphs.par_iter().map(&f).collect::<Result<_>>()?;
        for (g, o) in graphs.iter().zip(outcomes) {
            self.record(g, o);
        }
        Ok(())
    }

    fn finish(mut self, campaign: &str, params: CampaignParams, started: Instant) -> CampaignReport {
        self.verdicts
            .sort_by(|a, b| (a.n, &a.id).cmp(&(b.n, &b.id)));
        self.counterexamples
            .sort_by(|a, b| (a.form.len(), &a.form, &a.reason).cmp(&(b.form.len(), &b.form, &b.reason)));
        self.counterexamples.dedup();
        let status = if self.counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        CampaignReport {
            schema: SCHEMA_VERSION,
            campaign: campaign.to_string(),
            params,
            summary: Summary {
                status,
                examined: self.examined,
                subjects: self.subjects,
                counterexamples: self.counterexamples.len() as u64,
                counts: self.counts,
            },
            verdicts: self.verdicts,
            counterexamples: self.counterexamples,
            wall_clock_ms: Some(started.elapsed().as_millis() as u64),
        }
    }
}

/// Connected simple graphs with `lo ≤ n ≤ hi` vertices, by order then form.
pub(crate) fn connected_graphs(lo: usize, hi: usize) -> Result<Vec<Multigraph>> {
    check_bound(hi)?;
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(all_graphs(n)?.iter().filter(|g| g.is_connected()).cloned());
    }
    Ok(out)
}

/// Checks corpus graphs against the corpus ceiling.
pub fn check_corpus(graphs: &[Multigraph]) -> Result<()> {
    for g in graphs {
        if g.n() > MAX_CORPUS_N {
            return Err(Error::BoundExceeded {
                what: "corpus graph vertices",
                value: g.n(),
                limit: MAX_CORPUS_N,
            });
        }
    }
    Ok(())
}

/// Runs `campaign` with `params`. A corpus replaces the enumerated graphs
/// for the campaigns in [`CORPUS_CAMPAIGNS`] and is ignored by the rest.
pub fn run_campaign(campaign: &str, params: &CampaignParams, corpus: Option<&[Multigraph]>) -> Result<CampaignReport> {
    let started = Instant::now();
    if let Some(c) = corpus {
        check_corpus(c)?;
    }
    let corpus = corpus.filter(|_| CORPUS_CAMPAIGNS.contains(&campaign));
    let p = params;
    let acc = match campaign {
        "matching-oracle" => campaigns::matching_oracle(p, corpus)?,
        "golden" => campaigns::golden()?,
        "removable-classes" => campaigns::removable_class_count(p, corpus)?,
        "minimal-degree" => campaigns::minimal_min_degree(p, corpus)?,
        "bipartite-certificates" => campaigns::bipartite_certificates(p, corpus)?,
        "p-set-edges" => campaigns::minimum_p_set_edges(p, corpus)?,
        "bipartite-nonadjacent" => campaigns::bipartite_two_removable(p, corpus)?,
        "cubic-vertices" => campaigns::no_removable_degree_three(p, corpus)?,
        "removable-at-vertex" => campaigns::removable_at_one_vertex(p, corpus)?,
        "decomp-unique" => campaigns::decomposition_unique(p, corpus)?,
        "six-vertex-wheel-like" => families::six_vertex_wheel_like(p)?,
        "wheel-splices" => families::odd_wheel_splices(p)?,
        "wheel-like-family" => families::wheel_like_in_family(p)?,
        "figures" => families::figures(p)?,
        other => return Err(Error::UnknownCampaign(other.to_string())),
    };
    Ok(acc.finish(campaign, params.clone(), started))
}
