use super::{Family, VertexSet};
use crate::error::{Error, Result};
use crate::graphcore::{Graph, Kind};

/// `I_G^(r)`: all independent r-sets of `g` in canonical order. `r = 0`
/// gives `{∅}`.
pub fn independent_rsets(g: &Graph, r: usize) -> Family {
    let mut out = Vec::new();
    collect_independent(g, r, VertexSet::EMPTY, g.vertices(), &mut out);
    out.sort_unstable();
    Family::from_sorted(out, Some(r))
}

fn collect_independent(
    g: &Graph,
    r: usize,
    chosen: VertexSet,
    candidates: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if chosen.len() == r {
        out.push(chosen);
        return;
    }
    if candidates.len() < r - chosen.len() {
        return;
    }
    let mut rest = candidates;
    while let Some(v) = rest.first() {
        rest = rest.without(v);
        collect_independent(g, r, chosen.with(v), rest.difference(g.neighbours(v)), out);
    }
}

/// Number of independent r-sets, without materializing them.
pub fn count_independent(g: &Graph, r: usize) -> u64 {
    fn go(g: &Graph, need: usize, candidates: VertexSet) -> u64 {
        if need == 0 {
            return 1;
        }
        let mut total = 0;
        let mut rest = candidates;
        while rest.len() >= need {
            let v = rest.first().expect("non-empty");
            rest = rest.without(v);
            total += go(g, need - 1, rest.difference(g.neighbours(v)));
        }
        total
    }
    go(g, r, g.vertices())
}

/// `I_G^(r)(x)`: the star with centre `x`.
pub fn star(g: &Graph, r: usize, x: usize) -> Result<Family> {
    g.check_vertex(x)?;
    if r == 0 {
        return Ok(Family::empty(Some(0)));
    }
    let mut out = Vec::new();
    collect_independent(
        g,
        r - 1,
        VertexSet::EMPTY,
        g.vertices().difference(g.neighbours(x)).without(x),
        &mut out,
    );
    Ok(Family::new(out.into_iter().map(|s| s.with(x))).with_rank(r))
}

pub fn is_intersecting(f: &Family) -> bool {
    f.is_intersecting()
}

pub fn shadow(f: &Family) -> Result<Family> {
    f.shadow()
}

impl Family {
    fn with_rank(self, r: usize) -> Family {
        Family::from_sorted(self.sets().to_vec(), Some(r))
    }
}

/// Applies the cyclic shift `f^t` (one step sends local vertex `j` to
/// `j + 1`, the last vertex back to the first) to every rotating cycle
/// component. Paths and a complete distinguished component stay fixed.
/// Negative `t` rotates the other way; `t = 0` is the identity.
pub fn rotate(g: &Graph, s: VertexSet, t: i64) -> Result<VertexSet> {
    g.check_set(s)?;
    let mut out = s;
    for comp in g.rotating_components()? {
        let part = s.intersection(comp.vertices());
        if part.is_empty() {
            continue;
        }
        let c = comp.spec.size as i64;
        let moved: VertexSet = part
            .iter()
            .map(|v| comp.start + ((v - comp.start) as i64 + t).rem_euclid(c) as usize)
            .collect();
        out = out.difference(part).union(moved);
    }
    Ok(out)
}

pub fn rotate_family(g: &Graph, f: &Family, t: i64) -> Result<Family> {
    let sets = f.iter().map(|s| rotate(g, s, t)).collect::<Result<Vec<_>>>()?;
    Ok(Family::from_sorted(sorted(sets), f.uniform_size()))
}

/// `t` iterations of the Talbot map on a distinguished cycle: its first
/// vertex is fixed and every other vertex steps one place towards it.
/// Other components are fixed. The image can be smaller than `s`.
pub fn talbot_map(g: &Graph, s: VertexSet, t: usize) -> Result<VertexSet> {
    g.check_set(s)?;
    let cyc = g.distinguished()?;
    if cyc.spec.kind != Kind::Cycle {
        return Err(Error::Hypothesis("the Talbot map needs a distinguished cycle".into()));
    }
    let part = s.intersection(cyc.vertices());
    let moved: VertexSet = part.iter().map(|v| cyc.start + (v - cyc.start).saturating_sub(t)).collect();
    Ok(s.difference(part).union(moved))
}

pub fn talbot_family(g: &Graph, f: &Family, t: usize) -> Result<Family> {
    let sets = f.iter().map(|s| talbot_map(g, s, t)).collect::<Result<Vec<_>>>()?;
    Ok(Family::new(sets))
}

fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge { u, v })
    }
}

fn check_independent(g: &Graph, a: VertexSet) -> Result<()> {
    g.check_set(a)?;
    if g.is_independent(a) {
        Ok(())
    } else {
        Err(Error::NotIndependent(format!("{a:?}")))
    }
}

fn delta(g: &Graph, u: usize, v: usize, a: VertexSet) -> VertexSet {
    if a.contains(v) && !a.contains(u) {
        let b = a.without(v).with(u);
        if g.is_independent(b) {
            return b;
        }
    }
    a
}

/// `δ_{u,v}(A)`: replace `v` by `u` when that keeps `A` independent.
pub fn compress_set(g: &Graph, u: usize, v: usize, a: VertexSet) -> Result<VertexSet> {
    check_edge(g, u, v)?;
    check_independent(g, a)?;
    Ok(delta(g, u, v, a))
}

/// `Δ_{u,v}(F) = {δ(A) : A ∈ F} ∪ {A ∈ F : δ(A) ∈ F}`.
pub fn compress_family(g: &Graph, u: usize, v: usize, f: &Family) -> Result<Family> {
    check_edge(g, u, v)?;
    for a in f {
        check_independent(g, a)?;
    }
    let moved = f.iter().map(|a| delta(g, u, v, a));
    let kept = f.iter().filter(|&a| f.contains(delta(g, u, v, a)));
    let sets = sorted(moved.chain(kept).collect());
    Ok(Family::from_sorted(sets, f.uniform_size()))
}

fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{edgeless, graph_from_dsl};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn fam(sets: &[&[usize]]) -> Family {
        Family::new(sets.iter().map(|s| set(s)))
    }

    fn g(text: &str) -> Graph {
        graph_from_dsl(text).unwrap()
    }

    /// Brute-force filter over all r-subsets.
    fn naive_rsets(g: &Graph, r: usize) -> Vec<VertexSet> {
        (0u64..(1u64 << g.n()))
            .map(VertexSet::from_bits)
            .filter(|s| s.len() == r && g.is_independent(*s))
            .collect()
    }

    #[test]
    fn independent_rsets_examples() {
        assert_eq!(independent_rsets(&g("P(4)"), 2), fam(&[&[0, 2], &[0, 3], &[1, 3]]));
        assert_eq!(independent_rsets(&edgeless(4).unwrap(), 2).len(), 6);
        let c72 = independent_rsets(&g("C(7)^2"), 2);
        let expect = fam(&(0..7).map(|i| vec![i, (i + 3) % 7]).collect::<Vec<_>>().iter().map(|v| v.as_slice()).collect::<Vec<_>>());
        assert_eq!(c72, expect);
        assert_eq!(independent_rsets(&g("P(4)"), 0).sets(), &[VertexSet::EMPTY]);
        assert!(independent_rsets(&g("P(4)"), 3).is_empty());
    }

    #[test]
    fn independent_rsets_match_brute_force() {
        for text in ["P(6)^2 + C(5)", "C(9)^2 + C(3)", "P(1) + C(4) + C(5)^2"] {
            let gr = g(text);
            for r in 0..=gr.n() {
                let fam = independent_rsets(&gr, r);
                assert_eq!(fam.sets(), naive_rsets(&gr, r).as_slice(), "{text} r={r}");
                assert_eq!(count_independent(&gr, r), fam.len() as u64);
            }
        }
    }

    #[test]
    fn stars() {
        assert_eq!(star(&g("P(4)"), 2, 0).unwrap(), fam(&[&[0, 2], &[0, 3]]));
        assert_eq!(star(&g("K(5)"), 1, 2).unwrap(), fam(&[&[2]]));
        assert_eq!(star(&g("C(6)"), 2, 0).unwrap(), fam(&[&[0, 2], &[0, 3], &[0, 4]]));
        assert!(star(&g("C(6)"), 2, 6).is_err());
        let s = star(&g("K(3)"), 2, 0).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.uniform_size(), Some(2));
    }

    #[test]
    fn rotations() {
        let gr = g("P(3)^2 + C(5)^1");
        assert_eq!(rotate(&gr, set(&[0, 3]), 1).unwrap(), set(&[0, 4]));
        assert_eq!(rotate(&gr, set(&[1, 7]), 1).unwrap(), set(&[1, 3]));
        assert_eq!(rotate(&gr, set(&[1, 3]), -1).unwrap(), set(&[1, 7]));
        assert_eq!(rotate(&gr, set(&[2, 5]), 0).unwrap(), set(&[2, 5]));
        assert_eq!(rotate(&g("C(5)"), set(&[4]), 1).unwrap(), set(&[0]));
        let derived = gr.delete_vertex(0).unwrap();
        assert_eq!(rotate(&derived, set(&[0]), 1), Err(Error::DerivedGraph));
        // a complete distinguished cycle is held fixed, a non-complete one turns
        let gr = g("C(3) + C(4)");
        assert_eq!(rotate(&gr, set(&[0, 3]), 1).unwrap(), set(&[0, 4]));
    }

    #[test]
    fn talbot() {
        let gr = g("*C(5)^1 + C(5)^2");
        assert_eq!(talbot_map(&gr, set(&[2]), 1).unwrap(), set(&[1]));
        for t in 0..6 {
            assert_eq!(talbot_map(&gr, set(&[0]), t).unwrap(), set(&[0]));
        }
        assert_eq!(talbot_map(&gr, set(&[1]), 1).unwrap(), set(&[0]));
        assert_eq!(talbot_map(&gr, set(&[0, 3, 6]), 2).unwrap(), set(&[0, 1, 6]));
        assert_eq!(talbot_map(&gr, set(&[0, 2]), 2).unwrap(), set(&[0]));
        assert!(matches!(talbot_map(&g("P(3) + C(5)"), set(&[0]), 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn compress_set_cases() {
        let p4 = g("P(4)");
        assert_eq!(compress_set(&p4, 2, 3, set(&[0, 3])).unwrap(), set(&[0, 2]));
        assert_eq!(compress_set(&p4, 2, 3, set(&[1, 3])).unwrap(), set(&[1, 3]));
        assert_eq!(compress_set(&p4, 2, 3, set(&[0, 2])).unwrap(), set(&[0, 2]));
        assert_eq!(compress_set(&p4, 2, 3, set(&[0])).unwrap(), set(&[0]));
        assert_eq!(compress_set(&p4, 0, 3, set(&[0])), Err(Error::NotAnEdge { u: 0, v: 3 }));
        assert!(matches!(compress_set(&p4, 2, 3, set(&[0, 1])), Err(Error::NotIndependent(_))));
    }

    #[test]
    fn compress_family_cases() {
        let p4 = g("P(4)");
        assert_eq!(
            compress_family(&p4, 2, 3, &fam(&[&[0, 3], &[1, 3]])).unwrap(),
            fam(&[&[0, 2], &[1, 3]])
        );
        assert_eq!(
            compress_family(&p4, 2, 3, &fam(&[&[0, 3], &[0, 2]])).unwrap(),
            fam(&[&[0, 2], &[0, 3]])
        );
        let fixed = fam(&[&[0, 2], &[1, 3]]);
        assert_eq!(compress_family(&p4, 2, 3, &fixed).unwrap(), fixed);
    }
}
