use proptest::prelude::*;

use ekrlab::families::{
    compress_family, count_independent, independent_rsets, rotate, star, Family, VertexSet,
};
use ekrlab::graphcore::{
    edgeless, independence_number, min_maximal_independent, realize, ComponentSpec, Composition, Graph,
};
use ekrlab::solver::{max_intersecting, max_star, Budget};
use ekrlab::verifier::random;

/// A distinguished path or cycle power plus up to two cycle powers.
fn composition() -> impl Strategy<Value = Composition> {
    let head = (any::<bool>(), 1usize..=6, 1usize..=4).prop_map(|(cycle, size, power)| {
        if cycle {
            ComponentSpec::cycle(size.max(3), power)
        } else {
            ComponentSpec::path(size, power)
        }
    });
    let cycles = prop::collection::vec((3usize..=7, 1usize..=3), 0..=2);
    (head, cycles).prop_map(|(head, cycles)| {
        let mut comps = vec![head];
        comps.extend(cycles.into_iter().map(|(n, k)| ComponentSpec::cycle(n, k)));
        Composition::new(comps, 0).unwrap()
    })
}

fn graph_and_rank() -> impl Strategy<Value = (Graph, usize)> {
    composition().prop_flat_map(|c| {
        let g = realize(&c).unwrap();
        let alpha = independence_number(&g);
        (Just(g), 1..=alpha)
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Largest pairwise-intersecting subfamily by checking every subset.
fn subset_oracle(members: &[VertexSet]) -> usize {
    let m = members.len();
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let chosen: Vec<VertexSet> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        let ok = chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| a.intersects(*b)));
        if ok {
            best = best.max(chosen.len());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn compression_keeps_cardinality((g, r) in graph_and_rank(), seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let pool = independent_rsets(&g, r);
        let f = random::random_subfamily(&mut random::rng(seed), &pool);
        for (a, b) in [(u, v), (v, u)] {
            let out = compress_family(&g, a, b, &f).unwrap();
            prop_assert_eq!(out.len(), f.len());
            prop_assert!(out.is_subfamily_of(&pool));
        }
    }

    #[test]
    fn shadow_bound_for_intersecting((g, r) in graph_and_rank(), seed in any::<u64>()) {
        let a = random::random_intersecting(&mut random::rng(seed), &independent_rsets(&g, r));
        prop_assert!(a.is_intersecting());
        prop_assert!(a.len() <= a.shadow().unwrap().len());
    }

    #[test]
    fn rotation_is_a_bijection((g, r) in graph_and_rank(), t in -12i64..=12) {
        let family = independent_rsets(&g, r);
        let mut images = Vec::new();
        for s in &family {
            let moved = rotate(&g, s, t).unwrap();
            prop_assert_eq!(moved.len(), s.len());
            prop_assert_eq!(rotate(&g, moved, -t).unwrap(), s);
            prop_assert!(g.is_independent(moved));
            images.push(moved);
        }
        prop_assert_eq!(Family::new(images), family);
    }

    #[test]
    fn stars_are_intersecting((g, r) in graph_and_rank(), x in any::<prop::sample::Index>()) {
        let s = star(&g, r, x.index(g.n())).unwrap();
        prop_assert!(s.is_intersecting());
        prop_assert!(s.len() <= max_star(&g, r).unwrap().0);
    }

    #[test]
    fn rsets_empty_exactly_beyond_alpha(c in composition()) {
        let g = realize(&c).unwrap();
        let alpha = independence_number(&g);
        prop_assert!(!independent_rsets(&g, alpha).is_empty());
        prop_assert!(independent_rsets(&g, alpha + 1).is_empty());
        prop_assert!(min_maximal_independent(&g) <= alpha && alpha <= g.n());
    }

    #[test]
    fn raising_the_power_never_adds_independent_sets(n in 3usize..=10, k in 1usize..=4, r in 1usize..=4) {
        let lo = realize(&Composition::single(ComponentSpec::cycle(n, k)).unwrap()).unwrap();
        let hi = realize(&Composition::single(ComponentSpec::cycle(n, k + 1)).unwrap()).unwrap();
        prop_assert!(lo.edges().iter().all(|&(a, b)| hi.has_edge(a, b)));
        prop_assert!(count_independent(&hi, r) <= count_independent(&lo, r));
    }

    #[test]
    fn edgeless_counts_are_binomial(n in 1usize..=12, r in 0usize..=12) {
        let g = edgeless(n).unwrap();
        prop_assert_eq!(count_independent(&g, r), binomial(n as u64, r as u64));
        if r >= 1 && r <= n {
            prop_assert_eq!(star(&g, r, 0).unwrap().len() as u64, binomial(n as u64 - 1, r as u64 - 1));
        }
    }

    #[test]
    fn solver_matches_subset_oracle((g, r) in graph_and_rank()) {
        let family = independent_rsets(&g, r);
        prop_assume!(family.len() <= 16);
        let v = max_intersecting(&g, r, Budget::default()).unwrap();
        prop_assert!(v.exact);
        prop_assert_eq!(v.max_intersecting, subset_oracle(family.sets()));
        prop_assert!(v.witness.is_intersecting() && v.witness.is_subfamily_of(&family));
        prop_assert_eq!(v.is_ekr, v.max_intersecting == v.max_star);
        prop_assert!(v.max_star <= v.max_intersecting);
        if r == 1 {
            prop_assert_eq!(v.max_intersecting, 1);
        }
    }
}
