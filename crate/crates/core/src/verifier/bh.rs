//! Intersection properties that survive a `Δ_{u,v}` compression.

use super::report::{show, AuditReport};
use crate::error::{Error, Result};
use crate::families::{compress_family, Family};
use crate::graphcore::Graph;
use crate::solver::graph_name;

/// The split of `B = Δ_{u,v}(A)` by membership of `v`.
#[derive(Debug, Clone)]
pub struct CompressionSplit {
    pub compressed: Family,
    /// Members of `B` without `v`.
    pub without_v: Family,
    /// Members of `B` containing `v`.
    pub with_v: Family,
    /// `with_v` with `v` removed.
    pub with_v_stripped: Family,
    /// `N(u) \ ({v} ∪ N(v))`.
    pub private_neighbours: Vec<usize>,
}

pub fn split_compression(g: &Graph, u: usize, v: usize, a: &Family) -> Result<CompressionSplit> {
    let compressed = compress_family(g, u, v, a)?;
    if let Some((x, y)) = a.disjoint_pair() {
        return Err(Error::Hypothesis(format!("family is not intersecting: {x:?} and {y:?} are disjoint")));
    }
    let without_v = compressed.filter(|s| !s.contains(v));
    let with_v = compressed.filter(|s| s.contains(v));
    let with_v_stripped = with_v.remove_vertex(v);
    let private_neighbours = g.neighbours(u).difference(g.neighbours(v).with(v)).to_vec();
    Ok(CompressionSplit { compressed, without_v, with_v, with_v_stripped, private_neighbours })
}

fn pair_witness(f: &Family) -> String {
    let (x, y) = f.disjoint_pair().expect("called on a failing family");
    format!("{x:?} and {y:?} are disjoint")
}

/// Checks the three intersection statements for `Δ_{u,v}(A)`, each only when
/// its neighbourhood hypothesis holds, plus `|Δ_{u,v}(A)| = |A|`.
pub fn verify_bh_lemma(g: &Graph, u: usize, v: usize, a: &Family) -> Result<AuditReport> {
    let sp = split_compression(g, u, v, a)?;
    let mut rep = AuditReport::new("compression-lemma", graph_name(g));
    if let Some(r) = a.uniform_size() {
        rep = rep.with_r(r);
    }
    rep.check("|compressed| = |A|", true, sp.compressed.len() == a.len(), || {
        format!("A = {} compresses to {}", show(a), show(&sp.compressed))
    });
    rep.check("(i) members without v intersect", true, sp.without_v.is_intersecting(), || {
        pair_witness(&sp.without_v)
    });
    let private = sp.private_neighbours.len();
    if private <= 1 {
        rep.check("(ii) members with v, v removed, intersect", true, sp.with_v_stripped.is_intersecting(), || {
            pair_witness(&sp.with_v_stripped)
        });
    }
    if private == 0 {
        let joint = sp.without_v.union(&sp.with_v_stripped);
        rep.check("(iii) both families together intersect", true, joint.is_intersecting(), || pair_witness(&joint));
    }
    Ok(rep)
}
