//! The Talbot-map decomposition of an intersecting family when the
//! distinguished component is a non-complete cycle power `C_{c*}^{k*}`.
//!
//! Two smaller graphs take part: `F` shrinks the distinguished cycle by one
//! vertex, `H` by `k* + 1`. Vertex 0 of `G` is vertex 0 of both.

use serde::Serialize;

use super::lemma::check_family;
use super::report::{show, AuditReport};
use crate::error::{Error, Result};
use crate::families::{star, talbot_family, talbot_map, Family, VertexSet};
use crate::graphcore::{realize, ComponentSpec, Composition, Graph, Kind};
use crate::solver::{family_lines, graph_name};

/// `F` and `H` for a composition whose distinguished component is a cycle
/// power `C_{c*}^{k*}` with `c* ≥ 2k* + 2`. When `H`'s cycle would have two
/// vertices it is the single edge `K_2`.
pub fn derived_compositions(comp: &Composition) -> Result<(Composition, Composition)> {
    let head = *comp.distinguished();
    if head.kind != Kind::Cycle || head.is_complete() {
        return Err(Error::Hypothesis(format!("distinguished component {head} is not a non-complete cycle power")));
    }
    let (c, k) = (head.size, head.power);
    let f = comp.with_distinguished(ComponentSpec::cycle(c - 1, k))?;
    let h_size = c - k - 1;
    let h_head = if h_size >= 3 { ComponentSpec::cycle(h_size, k) } else { ComponentSpec::complete(h_size) };
    Ok((f, comp.with_distinguished(h_head)?))
}

/// Star sizes at vertex 0 in `G`, `F` (rank `r`) and `H` (rank `r − 1`).
pub fn star_split_counts(comp: &Composition, r: usize) -> Result<(usize, usize, usize)> {
    if r < 2 {
        return Err(Error::RankOutOfRange { r, max: comp.vertex_count() });
    }
    let (f, h) = derived_compositions(comp)?;
    let count = |c: &Composition, r| -> Result<usize> { Ok(star(&realize(c)?, r, 0)?.len()) };
    Ok((count(comp, r)?, count(&f, r)?, count(&h, r - 1)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleDecomposition {
    pub graph: String,
    pub r: usize,
    pub c_star: usize,
    pub k_star: usize,
    pub min_cycle_clique: Option<usize>,
    pub f_graph: String,
    pub h_graph: String,
    #[serde(serialize_with = "family_lines")]
    pub base: Family,
    /// Members avoiding vertex 0 whose Talbot image is independent in `F`.
    #[serde(serialize_with = "family_lines")]
    pub b: Family,
    /// Members containing vertex 0 whose Talbot image is independent in `F`.
    #[serde(serialize_with = "family_lines")]
    pub c: Family,
    /// `D_0` holds `{0, k*+1}`, `D_i` holds `{c*−i, k*+1−i}`.
    #[serde(serialize_with = "family_list")]
    pub d: Vec<Family>,
    /// `f(B) ∩ f(C)`.
    #[serde(serialize_with = "family_lines")]
    pub e: Family,
    /// `f(B ∪ C)`, in `G`'s indices.
    #[serde(serialize_with = "family_lines")]
    pub image: Family,
    /// The `(r−1)`-family bound by `H`, in `G`'s indices.
    #[serde(serialize_with = "family_lines")]
    pub remainder: Family,
    #[serde(skip)]
    f_layout: Composition,
    #[serde(skip)]
    h_layout: Composition,
}

fn family_list<S: serde::Serializer>(fs: &[Family], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(fs.iter().map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

impl CycleDecomposition {
    pub fn strict(&self) -> bool {
        self.min_cycle_clique.map_or(true, |m| m > 2 * self.k_star + 1)
    }

    pub fn f_composition(&self) -> &Composition {
        &self.f_layout
    }

    pub fn h_composition(&self) -> &Composition {
        &self.h_layout
    }

    /// `G`'s indices to `F`'s: the distinguished cycle keeps its indices and
    /// everything after it moves down by one. Expects a Talbot image that
    /// avoids vertex `c* − 1`.
    pub fn to_f(&self, s: VertexSet) -> VertexSet {
        into_f(s, self.c_star)
    }

    /// `G`'s indices to `H`'s: the distinguished cycle drops vertex 0 and
    /// moves down by one; everything after it moves down by `k* + 1`.
    /// `None` when the set contains vertex 0 or runs past `H`'s cycle.
    pub fn to_h(&self, s: VertexSet) -> Option<VertexSet> {
        let h_size = self.c_star - self.k_star - 1;
        let mut out = VertexSet::EMPTY;
        for x in s {
            let y = if x < self.c_star {
                if x == 0 || x > h_size {
                    return None;
                }
                x - 1
            } else {
                x - self.k_star - 1
            };
            out = out.with(y);
        }
        Some(out)
    }

    pub fn named_families(&self) -> Vec<(String, &Family)> {
        let mut out = vec![("A".to_string(), &self.base), ("B".to_string(), &self.b), ("C".to_string(), &self.c)];
        out.extend(self.d.iter().enumerate().map(|(i, f)| (format!("D_{i}"), f)));
        out.push(("E".to_string(), &self.e));
        out.push(("image".to_string(), &self.image));
        out.push(("remainder".to_string(), &self.remainder));
        out
    }
}

fn into_f(s: VertexSet, c_star: usize) -> VertexSet {
    s.iter().map(|x| if x < c_star { x } else { x - 1 }).collect()
}

pub fn build_cycle_decomposition(g: &Graph, r: usize, a: &Family) -> Result<CycleDecomposition> {
    let comp = g.composition().ok_or(Error::DerivedGraph)?;
    if let Some(other) = comp.others().find(|c| c.kind != Kind::Cycle) {
        return Err(Error::Hypothesis(format!("component {other} is not a cycle power")));
    }
    let (f_layout, h_layout) = derived_compositions(comp)?;
    if r < 2 {
        return Err(Error::Hypothesis("the cycle decomposition needs r >= 2".into()));
    }
    check_family(g, r, a)?;
    let f_graph = realize(&f_layout)?;
    let head = *comp.distinguished();
    let (c_star, k_star) = (head.size, head.power);

    let mut d = CycleDecomposition {
        graph: graph_name(g),
        r,
        c_star,
        k_star,
        min_cycle_clique: comp.others().map(|c| c.clique_number()).min(),
        f_graph: f_layout.to_string(),
        h_graph: h_layout.to_string(),
        base: a.clone(),
        b: Family::empty(Some(r)),
        c: Family::empty(Some(r)),
        d: Vec::new(),
        e: Family::empty(Some(r)),
        image: Family::empty(Some(r)),
        remainder: Family::empty(Some(r - 1)),
        f_layout,
        h_layout,
    };

    let fits_f = |s: VertexSet| -> bool {
        let t = talbot_map(g, s, 1).expect("set lies in G");
        t.len() == r && f_graph.is_independent(into_f(t, c_star))
    };
    d.b = a.filter(|s| !s.contains(0) && fits_f(s));
    d.c = a.filter(|s| s.contains(0) && fits_f(s));
    d.d = std::iter::once(a.filter(|s| s.contains(0) && s.contains(k_star + 1)))
        .chain((1..=k_star).map(|i| a.filter(|s| s.contains(c_star - i) && s.contains(k_star + 1 - i))))
        .collect();

    let fb = talbot_family(g, &d.b, 1)?;
    let fc = talbot_family(g, &d.c, 1)?;
    d.e = fb.intersection(&fc);
    d.image = fb.union(&fc);
    let mut remainder = talbot_family(g, &d.e, k_star - 1)?.remove_vertex(0);
    for di in &d.d {
        remainder = remainder.union(&talbot_family(g, di, k_star)?.remove_vertex(0));
    }
    d.remainder = remainder;
    Ok(d)
}

/// Checks the partition of `A` and the four statements of the cycle step.
/// The counting identity for stars is always asserted; the three family
/// statements only when every other cycle has clique number above `2k* + 1`.
pub fn verify_claim_final(d: &CycleDecomposition, g: &Graph, r: usize) -> Result<AuditReport> {
    let mut rep = AuditReport::new("talbot-split", &d.graph).with_r(r);
    let asserted = d.strict();

    let mut parts = vec![&d.b, &d.c];
    parts.extend(d.d.iter());
    let stray = d.base.iter().find(|&s| parts.iter().filter(|f| f.contains(s)).count() != 1);
    rep.check("B, C, D_0..D_k partition A", true, stray.is_none(), || {
        let s = stray.unwrap();
        let n = parts.iter().filter(|f| f.contains(s)).count();
        format!("{s:?} lies in {n} of the parts")
    });

    let lhs = d.base.len();
    let rhs = d.image.len() + d.remainder.len();
    rep.check("(i) |A| = |f(B u C)| + |remainder|", asserted, lhs == rhs, || {
        format!("{lhs} != {} + {}", d.image.len(), d.remainder.len())
    });

    let f_graph = realize(d.f_composition())?;
    let outside_f = d.image.iter().find(|&s| s.len() != r || !f_graph.is_independent(d.to_f(s)));
    let ok_ii = d.image.is_intersecting() && outside_f.is_none();
    rep.check("(ii) f(B u C) is an intersecting subfamily of I_F^(r)", asserted, ok_ii, || match outside_f {
        Some(s) => format!("{s:?} is not an independent {r}-set of F"),
        None => {
            let (x, y) = d.image.disjoint_pair().unwrap();
            format!("{x:?} and {y:?} are disjoint")
        }
    });

    let h_graph = realize(d.h_composition())?;
    let outside_h = d
        .remainder
        .iter()
        .find(|&s| s.len() != r - 1 || !d.to_h(s).is_some_and(|t| h_graph.is_independent(t)));
    let ok_iii = d.remainder.is_intersecting() && outside_h.is_none();
    rep.check("(iii) remainder is an intersecting subfamily of I_H^(r-1)", asserted, ok_iii, || {
        match outside_h {
            Some(s) => format!("{s:?} is not an independent {}-set of H", r - 1),
            None => format!("remainder {} is not intersecting", show(&d.remainder)),
        }
    });

    let sg = star(g, r, 0)?.len();
    let sf = star(&f_graph, r, 0)?.len();
    let sh = star(&h_graph, r - 1, 0)?.len();
    rep.check("(iv) |I_G^(r)(0)| = |I_F^(r)(0)| + |I_H^(r-1)(0)|", true, sg == sf + sh, || {
        format!("{sg} != {sf} + {sh}")
    });
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{graph_from_dsl, parse_composition};

    #[test]
    fn worked_counting_instance() {
        let comp = parse_composition("*C(5)^1 + C(5)^2").unwrap();
        assert_eq!(star_split_counts(&comp, 2).unwrap(), (7, 6, 1));
        let (f, h) = derived_compositions(&comp).unwrap();
        assert_eq!(f.to_string(), "C(4)^1 + C(5)^2");
        assert_eq!(h.to_string(), "C(3)^1 + C(5)^2");
    }

    #[test]
    fn degenerate_h_is_an_edge() {
        let comp = parse_composition("C(4)^1 + C(5)^1").unwrap();
        let (_, h) = derived_compositions(&comp).unwrap();
        assert_eq!(*h.distinguished(), ComponentSpec::path(2, 1));
    }

    #[test]
    fn star_family_has_empty_b() {
        let g = graph_from_dsl("*C(5)^1 + C(5)^2").unwrap();
        let a = star(&g, 2, 0).unwrap();
        let d = build_cycle_decomposition(&g, 2, &a).unwrap();
        assert!(d.b.is_empty());
        let rep = verify_claim_final(&d, &g, 2).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn d1_membership() {
        // c* = 6, k* = 1: D_1 holds the members containing 5 and 1
        let g = graph_from_dsl("*C(6)^1 + C(5)^2").unwrap();
        let a = star(&g, 2, 5).unwrap();
        let d = build_cycle_decomposition(&g, 2, &a).unwrap();
        assert_eq!(d.d[1], Family::new([[1, 5].into_iter().collect()]));
        assert!(verify_claim_final(&d, &g, 2).unwrap().ok());
    }

    #[test]
    fn empty_family_passes() {
        let g = graph_from_dsl("C(8)^2 + C(7)^3").unwrap();
        let d = build_cycle_decomposition(&g, 3, &Family::empty(Some(3))).unwrap();
        assert!(verify_claim_final(&d, &g, 3).unwrap().ok());
    }

    #[test]
    fn hypotheses() {
        let g = graph_from_dsl("C(5)^2 + C(7)").unwrap();
        assert!(build_cycle_decomposition(&g, 2, &Family::empty(Some(2))).is_err());
        let g = graph_from_dsl("C(6)").unwrap();
        assert!(build_cycle_decomposition(&g, 1, &Family::empty(Some(1))).is_err());
    }
}
