//! Seeded randomized audits. Every case is drawn from a ChaCha8 stream keyed
//! by the seed stored in the report, so a report can be regenerated exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bh::verify_bh_lemma;
use super::cycle::{build_cycle_decomposition, verify_claim_final};
use super::lemma::{build_lemma_decomposition, verify_claim1, verify_lemma_main_chain};
use super::report::{show, AuditReport, Check, Status};
use crate::error::Result;
use crate::families::{compress_family, independent_rsets, Family, VertexSet};
use crate::graphcore::{compositions, independence_number, realize, Composition, Graph, Kind, Shape};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random intersecting subfamily of `pool`: a random first member, then
/// every other member in shuffled order that meets all chosen so far. Half
/// of the time the result is cut to a random non-empty prefix.
pub fn random_intersecting<R: Rng>(rng: &mut R, pool: &Family) -> Family {
    let mut order: Vec<VertexSet> = pool.iter().collect();
    order.shuffle(rng);
    let mut chosen: Vec<VertexSet> = Vec::new();
    for s in order {
        if chosen.iter().all(|&c| c.intersects(s)) {
            chosen.push(s);
        }
    }
    if !chosen.is_empty() && rng.gen_bool(0.5) {
        let keep = rng.gen_range(1..=chosen.len());
        chosen.truncate(keep);
    }
    rebuild(pool, chosen)
}

/// Each member of `pool` kept independently with a random probability.
pub fn random_subfamily<R: Rng>(rng: &mut R, pool: &Family) -> Family {
    let p: f64 = rng.gen();
    let chosen = pool.iter().filter(|_| rng.gen_bool(p)).collect();
    rebuild(pool, chosen)
}

fn rebuild(pool: &Family, chosen: Vec<VertexSet>) -> Family {
    match pool.uniform_size() {
        Some(r) => Family::uniform(r, chosen).expect("drawn from a uniform pool"),
        None => Family::new(chosen),
    }
}

/// Compositions with a distinguished path or cycle power and up to three
/// further cycle powers, at most `max_n` vertices.
pub fn composition_pool(max_n: usize) -> Vec<Composition> {
    [Kind::Path, Kind::Cycle]
        .into_iter()
        .flat_map(|k| compositions(Shape { distinguished: k, min_cycles: 0, max_cycles: 3, max_n }))
        .collect()
}

/// One random instance: graph, rank and the whole of `I_G^(r)`.
struct Instance {
    comp: Composition,
    graph: Graph,
    r: usize,
    pool: Family,
}

fn draw_instance<R: Rng>(rng: &mut R, comps: &[Composition]) -> Result<Instance> {
    let comp = comps.choose(rng).expect("non-empty pool").clone();
    let graph = realize(&comp)?;
    let r = rng.gen_range(1..=independence_number(&graph));
    let pool = independent_rsets(&graph, r);
    Ok(Instance { comp, graph, r, pool })
}

/// Pass/fail counts for one assertion over many cases, keeping the first
/// failure as the witness.
struct Tally {
    assertion: String,
    cases: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(assertion: &str) -> Self {
        Tally { assertion: assertion.to_string(), cases: 0, failures: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn emit(self, rep: &mut AuditReport) {
        let failed = self.failures > 0;
        rep.push(Check {
            assertion: self.assertion,
            status: if failed { Status::Fail } else { Status::Pass },
            asserted: true,
            detail: Some(format!("{} of {} cases failed", self.failures, self.cases)),
            witness: self.witness,
        });
    }
}

/// `|A| ≤ |∂A|` for random intersecting uniform families.
pub fn katona_audit(seed: u64, cases: usize, max_n: usize) -> Result<AuditReport> {
    let comps = composition_pool(max_n);
    let mut rng = rng(seed);
    let mut tally = Tally::new("|A| <= |shadow(A)| for intersecting A");
    for _ in 0..cases {
        let inst = draw_instance(&mut rng, &comps)?;
        let a = random_intersecting(&mut rng, &inst.pool);
        let sh = a.shadow()?;
        tally.record(a.len() <= sh.len(), || {
            format!("{} r={}: A = {} has shadow {}", inst.comp, inst.r, show(&a), show(&sh))
        });
    }
    let mut rep = AuditReport::new("katona-shadow", format!("random, n <= {max_n}")).with_seed(seed);
    tally.emit(&mut rep);
    Ok(rep)
}

fn random_edge<R: Rng>(rng: &mut R, g: &Graph) -> Option<(usize, usize)> {
    let edges = g.edges();
    let &(a, b) = edges.choose(rng)?;
    Some(if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
}

/// `|Δ_{u,v}(F)| = |F|` for random edges and random subfamilies.
pub fn compression_audit(seed: u64, cases: usize, max_n: usize) -> Result<AuditReport> {
    let comps = composition_pool(max_n);
    let mut rng = rng(seed);
    let mut size = Tally::new("|compress(F)| = |F|");
    let mut inside = Tally::new("compress(F) stays in I_G^(r)");
    let mut done = 0;
    while done < cases {
        let inst = draw_instance(&mut rng, &comps)?;
        let Some((u, v)) = random_edge(&mut rng, &inst.graph) else { continue };
        let f = random_subfamily(&mut rng, &inst.pool);
        let b = compress_family(&inst.graph, u, v, &f)?;
        let ctx = || format!("{} r={} u={u} v={v}: F = {}", inst.comp, inst.r, show(&f));
        size.record(b.len() == f.len(), || format!("{}, compressed {}", ctx(), show(&b)));
        inside.record(b.is_subfamily_of(&inst.pool), || format!("{}, compressed {}", ctx(), show(&b)));
        done += 1;
    }
    let mut rep = AuditReport::new("compression-cardinality", format!("random, n <= {max_n}")).with_seed(seed);
    size.emit(&mut rep);
    inside.emit(&mut rep);
    Ok(rep)
}

/// The compression lemma on random edges and random intersecting families.
/// Each statement's tally counts only the cases where its hypothesis held.
pub fn bh_audit(seed: u64, cases: usize, max_n: usize) -> Result<AuditReport> {
    let comps = composition_pool(max_n);
    let mut rng = rng(seed);
    let mut tallies: Vec<Tally> = Vec::new();
    let mut done = 0;
    while done < cases {
        let inst = draw_instance(&mut rng, &comps)?;
        let Some((u, v)) = random_edge(&mut rng, &inst.graph) else { continue };
        let a = random_intersecting(&mut rng, &inst.pool);
        let sub = verify_bh_lemma(&inst.graph, u, v, &a)?;
        fold_into(&mut tallies, sub, || format!("{} r={} u={u} v={v}, A = {}", inst.comp, inst.r, show(&a)));
        done += 1;
    }
    tallies.sort_by(|a, b| a.assertion.cmp(&b.assertion));
    let mut rep = AuditReport::new("compression-lemma", format!("random, n <= {max_n}")).with_seed(seed);
    for t in tallies {
        t.emit(&mut rep);
    }
    Ok(rep)
}

fn fold_into(tallies: &mut Vec<Tally>, sub: AuditReport, context: impl Fn() -> String) {
    for c in sub.checks {
        // unasserted checks do not count against the audit
        if !c.asserted {
            continue;
        }
        let idx = match tallies.iter().position(|t| t.assertion == c.assertion) {
            Some(i) => i,
            None => {
                tallies.push(Tally::new(&c.assertion));
                tallies.len() - 1
            }
        };
        let witness = c.witness.clone().unwrap_or_default();
        tallies[idx].record(c.status == Status::Pass, || format!("{}: {witness}", context()));
    }
}

/// The complete-component decomposition on random intersecting families of
/// one composition, at a random rank per case.
pub fn lemma_chain_audit(comp: &Composition, seed: u64, cases: usize) -> Result<AuditReport> {
    let g = realize(comp)?;
    let alpha = independence_number(&g);
    let pools: Vec<Family> = (1..=alpha).map(|r| independent_rsets(&g, r)).collect();
    let mut rng = rng(seed);
    let mut tallies = Vec::new();
    for _ in 0..cases {
        let r = rng.gen_range(1..=alpha);
        let a = random_intersecting(&mut rng, &pools[r - 1]);
        let d = build_lemma_decomposition(&g, r, &a)?;
        let ctx = || format!("r={r}, A = {}", show(&a));
        fold_into(&mut tallies, verify_claim1(&d), ctx);
        fold_into(&mut tallies, verify_lemma_main_chain(&d, &g, r)?, ctx);
    }
    let mut rep = AuditReport::new("complete-base-chain", comp.to_string()).with_seed(seed);
    for t in tallies {
        t.emit(&mut rep);
    }
    Ok(rep)
}

/// The Talbot split on random intersecting families of one composition,
/// at a random rank `r ≥ 2` per case.
pub fn cycle_split_audit(comp: &Composition, seed: u64, cases: usize) -> Result<AuditReport> {
    let g = realize(comp)?;
    let alpha = independence_number(&g);
    let mut rep = AuditReport::new("talbot-split", comp.to_string()).with_seed(seed);
    if alpha < 2 {
        return Ok(rep);
    }
    let pools: Vec<Family> = (2..=alpha).map(|r| independent_rsets(&g, r)).collect();
    let mut rng = rng(seed);
    let mut tallies = Vec::new();
    for _ in 0..cases {
        let r = rng.gen_range(2..=alpha);
        let a = random_intersecting(&mut rng, &pools[r - 2]);
        let d = build_cycle_decomposition(&g, r, &a)?;
        fold_into(&mut tallies, verify_claim_final(&d, &g, r)?, || format!("r={r}, A = {}", show(&a)));
    }
    for t in tallies {
        t.emit(&mut rep);
    }
    Ok(rep)
}
