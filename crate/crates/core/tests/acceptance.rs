//! End-to-end acceptance run: each criterion prints one PASS/FAIL line and the
//! process exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ekrlab::families::{independent_rsets, Family, VertexSet};
use ekrlab::graphcore::{
    compositions, edgeless, independence_number, realize, ComponentSpec, Composition, Graph, Kind, Shape,
};
use ekrlab::solver::{max_intersecting, maximal_intersecting_families, Budget};
use ekrlab::verifier::{
    build_lemma_decomposition, check_condition, random, star_split_counts, theorem_audit, verify_claim1,
    verify_lemma_main_chain, AuditReport, ConditionClass,
};

const SEED: u64 = 20_240_601;
/// Maximal intersecting families examined per (G, r) in the decomposition sweep.
const MAXIMAL_CAP: usize = 50_000;

struct Outcome {
    ok: bool,
    summary: String,
}

fn pass(summary: impl Into<String>) -> Outcome {
    Outcome { ok: true, summary: summary.into() }
}

fn fail(summary: impl Into<String>) -> Outcome {
    Outcome { ok: false, summary: summary.into() }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn first_failure(rep: &AuditReport) -> String {
    rep.failures()
        .next()
        .map(|c| format!("{} [{}]: {}", rep.instance, c.assertion, c.witness.as_deref().unwrap_or("")))
        .unwrap_or_default()
}

fn edgeless_baseline() -> Outcome {
    let mut cases = 0;
    for n in 2..=12u64 {
        let g = edgeless(n as usize).unwrap();
        for r in 1..=n / 2 {
            let v = max_intersecting(&g, r as usize, Budget::default()).unwrap();
            let expected = binomial(n - 1, r - 1) as usize;
            if !v.exact || v.max_intersecting != expected {
                return fail(format!("n={n} r={r}: got {} (exact={}), expected {expected}", v.max_intersecting, v.exact));
            }
            cases += 1;
        }
    }
    pass(format!("{cases} (n, r) pairs equal C(n-1, r-1)"))
}

fn single_cycle_powers() -> Outcome {
    let mut cases = 0;
    for n in 3..=12 {
        for k in 1..=n {
            let g = realize(&Composition::single(ComponentSpec::cycle(n, k)).unwrap()).unwrap();
            for r in 1..=independence_number(&g) {
                let v = max_intersecting(&g, r, Budget::default()).unwrap();
                if !(v.exact && v.is_ekr) {
                    return fail(format!("C({n})^{k} r={r}: max {} vs star {}", v.max_intersecting, v.max_star));
                }
                cases += 1;
            }
        }
    }
    pass(format!("{cases} (n, k, r) triples are r-EKR"))
}

fn strict_theorem_sweep(kind: Kind) -> Outcome {
    let comps = compositions(Shape { distinguished: kind, min_cycles: 1, max_cycles: 2, max_n: 12 });
    let mut audited = 0;
    let mut ranks = 0;
    for comp in comps {
        if check_condition(&comp).unwrap().class != ConditionClass::StrictlySatisfied {
            continue;
        }
        let rep = theorem_audit(&comp, usize::MAX, Budget::default()).unwrap();
        if !rep.ok() || rep.summary.budget_exhausted > 0 {
            return fail(format!("{}: {}", comp, first_failure(&rep)));
        }
        audited += 1;
        ranks += rep.verdicts.len();
    }
    pass(format!("{audited} strict compositions, {ranks} ranks, all r-EKR with the star of vertex 0 largest"))
}

fn random_audit(rep: AuditReport, label: &str) -> Outcome {
    if rep.ok() {
        let details: Vec<String> =
            rep.checks.iter().map(|c| format!("{} ({})", c.assertion, c.detail.as_deref().unwrap_or(""))).collect();
        pass(format!("{label}: {}", details.join("; ")))
    } else {
        fail(first_failure(&rep))
    }
}

fn bh_audit() -> Outcome {
    let rep = random::bh_audit(SEED, 500, 12).unwrap();
    for stmt in ["(i)", "(ii)", "(iii)"] {
        if !rep.checks.iter().any(|c| c.assertion.starts_with(stmt)) {
            return fail(format!("no sampled case satisfied the hypothesis of {stmt}"));
        }
    }
    random_audit(rep, "500 cases")
}

fn complete_base_sweep() -> Outcome {
    let mut instances = 0;
    let mut families = 0;
    let mut truncated = 0;
    for p in 1..=11 {
        let head = ComponentSpec::complete(p);
        let comps = compositions(Shape { distinguished: Kind::Path, min_cycles: 1, max_cycles: 3, max_n: 12 });
        for comp in comps.into_iter().filter(|c| *c.distinguished() == head) {
            if check_condition(&comp).unwrap().class != ConditionClass::StrictlySatisfied {
                continue;
            }
            let g = realize(&comp).unwrap();
            for r in 1..=independence_number(&g) {
                let (mut fams, complete) = maximal_intersecting_families(&g, r, MAXIMAL_CAP);
                if !complete {
                    truncated += 1;
                }
                fams.push(max_intersecting(&g, r, Budget::default()).unwrap().witness);
                for a in &fams {
                    let d = build_lemma_decomposition(&g, r, a).unwrap();
                    for rep in [verify_claim1(&d), verify_lemma_main_chain(&d, &g, r).unwrap()] {
                        if !rep.ok() {
                            return fail(format!("{comp} r={r}: {}", first_failure(&rep)));
                        }
                    }
                    families += 1;
                }
                instances += 1;
            }
        }
    }
    pass(format!(
        "{instances} (G, r) instances, {families} families; {truncated} instances capped at {MAXIMAL_CAP} maximal families"
    ))
}

fn star_split_identity() -> Outcome {
    let comps = compositions(Shape { distinguished: Kind::Cycle, min_cycles: 0, max_cycles: 5, max_n: 14 });
    let mut cases = 0;
    for comp in comps.into_iter().filter(|c| !c.distinguished().is_complete()) {
        let alpha = independence_number(&realize(&comp).unwrap());
        for r in 2..=alpha {
            let (g, f, h) = star_split_counts(&comp, r).unwrap();
            if g != f + h {
                return fail(format!("{comp} r={r}: {g} != {f} + {h}"));
            }
            cases += 1;
        }
    }
    let worked = star_split_counts(&comp("*C(5)^1 + C(5)^2"), 2).unwrap();
    if worked != (7, 6, 1) {
        return fail(format!("worked instance gave {worked:?}"));
    }
    pass(format!("{cases} (G, r) instances; *C(5)^1 + C(5)^2 at r=2 gives 7 = 6 + 1"))
}

fn comp(text: &str) -> Composition {
    ekrlab::graphcore::parse_composition(text).unwrap()
}

/// Largest clique of the compatibility graph by plain Bron–Kerbosch, with no
/// pivoting, ordering or bounds.
fn naive_max_intersecting(members: &[VertexSet]) -> usize {
    fn extend(members: &[VertexSet], size: usize, cand: Vec<usize>, mut excluded: Vec<usize>, best: &mut usize) {
        if cand.is_empty() && excluded.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.pop() {
            let meets = |&w: &usize| members[w].intersects(members[v]);
            let next_c = cand.iter().copied().filter(|w| meets(w)).collect();
            let next_x = excluded.iter().copied().filter(|w| meets(w)).collect();
            extend(members, size + 1, next_c, next_x, best);
            excluded.push(v);
        }
    }
    let mut best = 0;
    extend(members, 0, (0..members.len()).collect(), Vec::new(), &mut best);
    best
}

fn solver_oracle() -> Outcome {
    let mut graphs: Vec<Graph> = random::composition_pool(12).iter().map(|c| realize(c).unwrap()).collect();
    graphs.extend((1..=12).map(|n| edgeless(n).unwrap()));
    let mut cases = 0;
    for g in &graphs {
        for r in 1..=independence_number(g) {
            let family: Family = independent_rsets(g, r);
            if family.len() > 20 {
                continue;
            }
            let expected = naive_max_intersecting(family.sets());
            let v = max_intersecting(g, r, Budget::default()).unwrap();
            if v.max_intersecting != expected || !v.exact {
                let name = g.composition().map(|c| c.to_string()).unwrap_or_default();
                return fail(format!("{name} r={r}: solver {} vs oracle {expected}", v.max_intersecting));
            }
            cases += 1;
        }
    }
    pass(format!("{cases} instances with |I_G^(r)| <= 20 agree"))
}

fn strip_timing(mut v: serde_json::Value) -> serde_json::Value {
    match &mut v {
        serde_json::Value::Object(map) => {
            map.remove("elapsed_ms");
            for (_, x) in map.iter_mut() {
                *x = strip_timing(x.take());
            }
        }
        serde_json::Value::Array(xs) => {
            for x in xs.iter_mut() {
                *x = strip_timing(x.take());
            }
        }
        _ => {}
    }
    v
}

fn determinism() -> Outcome {
    let run = || -> String {
        let reports = vec![
            theorem_audit(&comp("*C(5)^1 + C(5)^2"), 3, Budget::default()).unwrap(),
            theorem_audit(&comp("P(3)^2 + C(7)^2"), 10, Budget::default()).unwrap(),
            random::katona_audit(SEED, 200, 12).unwrap(),
            random::bh_audit(SEED, 100, 12).unwrap(),
            random::lemma_chain_audit(&comp("K(2) + C(7)^2"), SEED, 100).unwrap(),
        ];
        strip_timing(serde_json::to_value(&reports).unwrap()).to_string()
    };
    let (a, b) = (run(), run());
    if a == b {
        pass(format!("two runs gave identical {}-byte reports", a.len()))
    } else {
        fail("reports differ between runs")
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        ("edgeless baseline", Duration::from_secs(10), Box::new(edgeless_baseline)),
        ("single cycle powers", Duration::from_secs(300), Box::new(single_cycle_powers)),
        ("path-headed unions, strict", Duration::from_secs(1800), Box::new(|| strict_theorem_sweep(Kind::Path))),
        ("cycle-headed unions, strict", Duration::from_secs(1800), Box::new(|| strict_theorem_sweep(Kind::Cycle))),
        (
            "shadow inequality",
            Duration::from_secs(60),
            Box::new(|| random_audit(random::katona_audit(SEED, 1000, 14).unwrap(), "1000 cases")),
        ),
        (
            "compression cardinality",
            Duration::from_secs(60),
            Box::new(|| random_audit(random::compression_audit(SEED, 1000, 14).unwrap(), "1000 cases")),
        ),
        ("compression lemma", Duration::from_secs(120), Box::new(bh_audit)),
        ("complete-base decomposition", Duration::from_secs(1800), Box::new(complete_base_sweep)),
        ("star split identity", Duration::from_secs(300), Box::new(star_split_identity)),
        ("solver vs oracle", Duration::from_secs(600), Box::new(solver_oracle)),
        ("determinism", Duration::from_secs(600), Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if out.ok && took > *limit {
            out = fail(format!("took {took:.1?}, limit {limit:?}"));
        }
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2} {name} [{took:.2?}]: {}", i + 1, out.summary);
        failed += usize::from(!out.ok);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
