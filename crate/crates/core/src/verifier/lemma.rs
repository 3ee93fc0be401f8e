//! The decomposition of an intersecting family over a complete distinguished
//! component `K_p` plus cycle powers, and the counting chain it supports.
//!
//! Members are split by which vertex of `[p]` they use (at most one, since
//! `[p]` is a clique). The parts not meeting `[p]` are replaced by their
//! shadow, part `i` is stripped of `i` and rotated `i` steps, and everything
//! is lifted back into the star of vertex 0.

use serde::Serialize;

use super::report::{show, AuditReport};
use crate::error::{Error, Result};
use crate::families::{rotate_family, star, Family};
use crate::graphcore::{Graph, Kind};
use crate::solver::graph_name;

#[derive(Debug, Clone, Serialize)]
pub struct LemmaDecomposition {
    pub graph: String,
    pub r: usize,
    /// Size of the distinguished clique.
    pub p: usize,
    /// Smallest clique number over the other components.
    pub min_cycle_clique: Option<usize>,
    #[serde(serialize_with = "crate::solver::family_lines")]
    pub base: Family,
    /// `A_0 … A_p`: members missing `[p]`, then members meeting it in vertex `i − 1`.
    #[serde(serialize_with = "family_list")]
    pub parts: Vec<Family>,
    /// `A_0` unchanged, then `A_i` with its clique vertex removed.
    #[serde(serialize_with = "family_list")]
    pub stripped: Vec<Family>,
    #[serde(serialize_with = "crate::solver::family_lines")]
    pub shadow: Family,
    /// `f(∂A_0), A'_1, f²(A'_2), …, f^p(A'_p)`.
    #[serde(serialize_with = "family_list")]
    pub rotated: Vec<Family>,
    /// The rotated families with vertex 0 added back; `A_1*` is `A_1`.
    #[serde(serialize_with = "family_list")]
    pub lifted: Vec<Family>,
}

fn family_list<S: serde::Serializer>(fs: &[Family], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(fs.iter().map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

impl LemmaDecomposition {
    /// Whether the other components all have clique number above `p`.
    pub fn strict(&self) -> bool {
        self.min_cycle_clique.map_or(true, |m| m > self.p)
    }

    /// Every intermediate family with a descriptive name, in construction order.
    pub fn named_families(&self) -> Vec<(String, &Family)> {
        let mut out = vec![("A".to_string(), &self.base)];
        let groups = [("part", &self.parts), ("stripped", &self.stripped)];
        for (name, fs) in groups {
            out.extend(fs.iter().enumerate().map(|(i, f)| (format!("{name}_{i}"), f)));
        }
        out.push(("shadow_0".to_string(), &self.shadow));
        for (name, fs) in [("rotated", &self.rotated), ("lifted", &self.lifted)] {
            out.extend(fs.iter().enumerate().map(|(i, f)| (format!("{name}_{i}"), f)));
        }
        out
    }
}

/// Checks that `a` is an intersecting subfamily of `I_G^(r)`.
pub(crate) fn check_family(g: &Graph, r: usize, a: &Family) -> Result<()> {
    for s in a {
        g.check_set(s)?;
        if s.len() != r {
            return Err(Error::Hypothesis(format!("member {s:?} does not have {r} elements")));
        }
        if !g.is_independent(s) {
            return Err(Error::NotIndependent(format!("{s:?}")));
        }
    }
    if let Some((x, y)) = a.disjoint_pair() {
        return Err(Error::Hypothesis(format!("family is not intersecting: {x:?} and {y:?} are disjoint")));
    }
    Ok(())
}

pub fn build_lemma_decomposition(g: &Graph, r: usize, a: &Family) -> Result<LemmaDecomposition> {
    let layout = g.require_layout()?;
    let head = layout[0];
    if !head.spec.is_complete() {
        return Err(Error::Hypothesis(format!("distinguished component {} is not complete", head.spec)));
    }
    if let Some(other) = layout[1..].iter().find(|c| c.spec.kind != Kind::Cycle) {
        return Err(Error::Hypothesis(format!("component {} is not a cycle power", other.spec)));
    }
    if r == 0 {
        return Err(Error::RankOutOfRange { r, max: g.n() });
    }
    check_family(g, r, a)?;

    let p = head.spec.size;
    let clique = head.vertices();
    let mut parts = vec![a.filter(|s| !s.intersects(clique))];
    parts.extend((0..p).map(|v| a.filter(|s| s.contains(v))));

    let stripped: Vec<Family> = std::iter::once(parts[0].clone())
        .chain((1..=p).map(|i| parts[i].remove_vertex(i - 1)))
        .collect();
    let shadow = parts[0].shadow()?;

    let mut rotated = vec![rotate_family(g, &shadow, 1)?, stripped[1].clone()];
    for (i, part) in stripped.iter().enumerate().skip(2) {
        rotated.push(rotate_family(g, part, i as i64)?);
    }
    let lifted = rotated
        .iter()
        .enumerate()
        .map(|(i, f)| if i == 1 { parts[1].clone() } else { f.add_vertex(0) })
        .collect();

    Ok(LemmaDecomposition {
        graph: graph_name(g),
        r,
        p,
        min_cycle_clique: layout[1..].iter().map(|c| c.spec.clique_number()).min(),
        base: a.clone(),
        parts,
        stripped,
        shadow,
        rotated,
        lifted,
    })
}

fn rotated_name(i: usize) -> String {
    match i {
        0 => "f(shadow_0)".to_string(),
        1 => "stripped_1".to_string(),
        _ => format!("f^{i}(stripped_{i})"),
    }
}

/// Pairwise disjointness of the rotated families. Asserted only when every
/// other component has clique number above `p`.
pub fn verify_claim1(d: &LemmaDecomposition) -> AuditReport {
    let mut rep = AuditReport::new("complete-base-disjointness", &d.graph).with_r(d.r);
    let asserted = d.strict();
    for i in 0..d.rotated.len() {
        for j in i + 1..d.rotated.len() {
            let common = d.rotated[i].intersection(&d.rotated[j]);
            rep.check(
                format!("{} and {} are disjoint", rotated_name(i), rotated_name(j)),
                asserted,
                common.is_empty(),
                || format!("common member {:?}", common.sets()[0]),
            );
        }
    }
    rep
}

/// Each link of `|A| = Σ|A_i| = |A_0| + Σ_{i≥1}|A_i*| ≤ Σ|A_i*| ≤ |I_G^(r)(0)|`.
pub fn verify_lemma_main_chain(d: &LemmaDecomposition, g: &Graph, r: usize) -> Result<AuditReport> {
    let mut rep = AuditReport::new("complete-base-chain", &d.graph).with_r(r);
    let centre = star(g, r, 0)?;
    let asserted = d.strict();
    let sizes: Vec<usize> = d.parts.iter().map(Family::len).collect();
    let lifted: Vec<usize> = d.lifted.iter().map(Family::len).collect();

    let union = d.parts.iter().fold(Family::empty(Some(r)), |acc, f| acc.union(f));
    let total: usize = sizes.iter().sum();
    rep.check("parts partition A", true, total == d.base.len() && union == d.base, || {
        format!("part sizes {sizes:?} sum to {total}, |A| = {}", d.base.len())
    });
    rep.check("|A_0| <= |shadow(A_0)|", true, sizes[0] <= d.shadow.len(), || {
        format!("A_0 = {} has shadow {}", show(&d.parts[0]), show(&d.shadow))
    });
    rep.check("|shadow(A_0)| = |A_0*|", true, d.shadow.len() == lifted[0], || {
        format!("|shadow| = {}, |A_0*| = {}", d.shadow.len(), lifted[0])
    });
    for i in 1..=d.p {
        rep.check(format!("|A_{i}| = |A_{i}*|"), true, sizes[i] == lifted[i], || {
            format!("A_{i} = {}, A_{i}* = {}", show(&d.parts[i]), show(&d.lifted[i]))
        });
    }
    for (i, f) in d.lifted.iter().enumerate() {
        let outside = f.iter().find(|&s| !centre.contains(s));
        rep.check(format!("A_{i}* lies in the star of vertex 0"), true, outside.is_none(), || {
            format!("{:?} is not in I_G^(r)(0)", outside.unwrap())
        });
    }
    let lifted_total: usize = lifted.iter().sum();
    rep.check("sum |A_i*| <= |star(0)|", asserted, lifted_total <= centre.len(), || {
        format!("sum = {lifted_total} > {} (lifted sizes {lifted:?})", centre.len())
    });
    rep.check("|A| <= |star(0)|", asserted, d.base.len() <= centre.len(), || {
        format!("|A| = {} > {}: A = {}", d.base.len(), centre.len(), show(&d.base))
    });
    Ok(rep)
}
