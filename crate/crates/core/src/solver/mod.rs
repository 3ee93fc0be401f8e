//! Exact maximum intersecting subfamilies of `I_G^(r)` and the r-EKR decision.
//!
//! The search runs on the compatibility graph whose vertices are the
//! independent r-sets and whose edges join intersecting pairs: an
//! intersecting family is a clique there. Branch and bound starts from the
//! best star as incumbent. Before branching, the root colouring bound and an
//! eigenvalue bound on the graph of disjoint pairs are tried; either one
//! matching the star size proves the star optimal without search.

mod bits;
mod clique;
mod spectral;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{independent_rsets, Family, VertexSet};
use crate::graphcore::{independence_number, Graph};
use bits::Bits;

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;
pub const DEFAULT_MAX_MS: u64 = 60_000;
pub const BUDGET_ENV: &str = "EKRLAB_BUDGET_MS";

/// Per-(G, r) search limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_ms: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: DEFAULT_MAX_NODES, max_ms: DEFAULT_MAX_MS }
    }
}

impl Budget {
    /// Defaults, with the time limit taken from `EKRLAB_BUDGET_MS` when set.
    pub fn from_env() -> Self {
        let max_ms = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_MS);
        Budget { max_ms, ..Budget::default() }
    }

    pub fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX, max_ms: u64::MAX }
    }

    fn limits(&self, start: Instant) -> clique::Limits {
        clique::Limits {
            max_nodes: self.max_nodes,
            deadline: start.checked_add(Duration::from_millis(self.max_ms)),
        }
    }
}

/// Outcome of one maximum-intersecting-family computation.
#[derive(Debug, Clone, Serialize)]
pub struct EkrVerdict {
    pub graph: String,
    pub r: usize,
    /// `|I_G^(r)|`.
    pub family_size: usize,
    pub max_intersecting: usize,
    pub max_star: usize,
    pub star_centre: usize,
    pub star_centre_label: String,
    pub is_ekr: bool,
    /// False when the budget ran out; `max_intersecting` is then only a lower bound.
    pub exact: bool,
    /// How optimality was settled: "colouring", "spectral", "search", or "budget".
    pub proof: &'static str,
    pub nodes_explored: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
    #[serde(serialize_with = "family_lines")]
    pub witness: Family,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

pub(crate) fn family_lines<S: Serializer>(f: &Family, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(f.iter().map(|set| set.to_string()))
}

pub(crate) fn graph_name(g: &Graph) -> String {
    g.composition().map_or_else(|| "<derived>".to_string(), |c| c.to_string())
}

/// Largest star of `I_G^(r)` and its lowest-index centre.
pub fn max_star(g: &Graph, r: usize) -> Result<(usize, usize)> {
    if r == 0 {
        return Err(Error::RankOutOfRange { r, max: g.n() });
    }
    Ok(best_star(&independent_rsets(g, r), g.n()))
}

fn best_star(family: &Family, n: usize) -> (usize, usize) {
    let mut counts = vec![0usize; n];
    for s in family {
        for v in s {
            counts[v] += 1;
        }
    }
    let mut best = (0, 0);
    for (v, &c) in counts.iter().enumerate() {
        if c > best.0 {
            best = (c, v);
        }
    }
    best
}

fn compatibility(members: &[VertexSet]) -> Vec<Bits> {
    let m = members.len();
    let mut adj = vec![Bits::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if members[i].intersects(members[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

/// Exact maximum intersecting subfamily of `I_G^(r)` for `1 ≤ r ≤ α(G)`.
pub fn max_intersecting(g: &Graph, r: usize, budget: Budget) -> Result<EkrVerdict> {
    let alpha = independence_number(g);
    if r == 0 || r > alpha {
        return Err(Error::RankOutOfRange { r, max: alpha });
    }
    let start = Instant::now();
    let family = independent_rsets(g, r);
    let members = family.sets();
    let (star_size, centre) = best_star(&family, g.n());
    let incumbent: Vec<usize> = (0..members.len()).filter(|&i| members[i].contains(centre)).collect();

    let adj = compatibility(members);
    let all = Bits::full(adj.len());
    let (best, nodes, exact, proof) = if clique::colour_bound(&adj, &all) <= star_size {
        (incumbent, 0, true, "colouring")
    } else if spectral::complement_independence_bound(&adj).is_some_and(|b| b <= star_size) {
        (incumbent, 0, true, "spectral")
    } else {
        let out = clique::max_clique(&adj, incumbent, budget.limits(start));
        let proof = if out.exact { "search" } else { "budget" };
        (out.best, out.nodes, out.exact, proof)
    };

    let witness = Family::uniform(r, best.iter().map(|&i| members[i])).expect("members are r-sets");
    debug_assert!(witness.is_intersecting());
    Ok(EkrVerdict {
        graph: graph_name(g),
        r,
        family_size: members.len(),
        max_intersecting: witness.len(),
        max_star: star_size,
        star_centre: centre,
        star_centre_label: g.label(centre).to_string(),
        is_ekr: witness.len() == star_size,
        exact,
        proof,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        witness,
    })
}

/// One verdict per `r = 1..=α(G)`, computed concurrently. A budget running
/// out on one `r` leaves the others intact; check `exact` on each.
pub fn ekr_sweep(g: &Graph, budget: Budget) -> Result<Vec<EkrVerdict>> {
    ekr_sweep_upto(g, usize::MAX, budget)
}

/// [`ekr_sweep`] restricted to `r ≤ r_max`.
pub fn ekr_sweep_upto(g: &Graph, r_max: usize, budget: Budget) -> Result<Vec<EkrVerdict>> {
    let top = independence_number(g).min(r_max);
    (1..=top).into_par_iter().map(|r| max_intersecting(g, r, budget)).collect()
}

/// Maximal intersecting subfamilies of `I_G^(r)` (maximal cliques of the
/// compatibility graph) in a fixed order, at most `limit` of them. The flag
/// reports whether the list is complete.
pub fn maximal_intersecting_families(g: &Graph, r: usize, limit: usize) -> (Vec<Family>, bool) {
    let family = independent_rsets(g, r);
    let members = family.sets();
    if members.is_empty() {
        return (Vec::new(), true);
    }
    let (cliques, complete) = clique::maximal_cliques(&compatibility(members), limit);
    let families = cliques
        .into_iter()
        .map(|c| Family::uniform(r, c.into_iter().map(|i| members[i])).expect("members are r-sets"))
        .collect();
    (families, complete)
}
