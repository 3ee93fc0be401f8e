use super::condition::{check_condition, ConditionClass};
use super::report::{show, AuditReport};
use crate::error::Result;
use crate::families::star;
use crate::graphcore::{realize, Composition, Graph, Kind};
use crate::solver::{ekr_sweep_upto, Budget};

fn target_name(comp: &Composition) -> &'static str {
    let single = comp.components().len() == 1;
    match (comp.distinguished().kind, single) {
        (Kind::Path, true) => "ekr-path-power",
        (Kind::Path, false) => "ekr-path-union",
        (Kind::Cycle, true) => "ekr-cycle-power",
        (Kind::Cycle, false) => "ekr-cycle-union",
    }
}

/// Classifies the clique-number hypothesis, solves every `r ≤ min(r_max, α)`
/// and checks that `G` is r-EKR with the star of vertex 0 among the largest
/// intersecting families. The checks are asserted only when the hypothesis
/// holds strictly; otherwise they are recorded as findings.
pub fn theorem_audit(comp: &Composition, r_max: usize, budget: Budget) -> Result<AuditReport> {
    theorem_audit_graph(&realize(comp)?, r_max, budget)
}

/// [`theorem_audit`] on an already realized graph.
pub fn theorem_audit_graph(g: &Graph, r_max: usize, budget: Budget) -> Result<AuditReport> {
    let comp = g.composition().ok_or(crate::Error::DerivedGraph)?;
    let condition = check_condition(comp)?;
    let asserted = condition.class == ConditionClass::StrictlySatisfied;
    let mut rep = AuditReport::new(target_name(comp), comp.to_string());
    let verdicts = ekr_sweep_upto(g, r_max, budget)?;
    let head = g.distinguished()?;
    // the far end of a distinguished path is reported, never asserted
    let other_end = (head.spec.kind == Kind::Path && head.spec.size > 1).then(|| head.spec.size - 1);

    for v in &verdicts {
        let r = v.r;
        if !v.exact {
            rep.budget(
                format!("r={r}: r-EKR"),
                format!("search stopped after {} nodes; best found {}", v.nodes_explored, v.max_intersecting),
            );
            continue;
        }
        rep.check(format!("r={r}: r-EKR"), asserted, v.is_ekr, || {
            format!(
                "intersecting family of size {} beats the largest star ({}): {}",
                v.max_intersecting,
                v.max_star,
                show(&v.witness)
            )
        });
        let at_zero = star(g, r, 0)?.len();
        rep.check(format!("r={r}: star of vertex 0 is largest"), asserted, at_zero == v.max_intersecting, || {
            format!(
                "star of vertex 0 has {at_zero} members, intersecting family has {}: {}",
                v.max_intersecting,
                show(&v.witness)
            )
        });
        if let Some(x) = other_end {
            let at_x = star(g, r, x)?.len();
            rep.check(
                format!("r={r}: star of path end {} is largest", g.label(x)),
                false,
                at_x == v.max_intersecting,
                || format!("star of vertex {x} has {at_x} members, maximum is {}", v.max_intersecting),
            );
        }
    }
    rep.condition = Some(condition);
    rep.verdicts = verdicts;
    Ok(rep)
}
