use std::fmt::Write as _;

use anyhow::Result;
use serde_json::json;

use ekrlab::families::{write_family, Family};
use ekrlab::solver::EkrVerdict;
use ekrlab::verifier::{AuditReport, Status};

use crate::Format;

/// Witness sets shown per verdict in table output.
pub const TABLE_WITNESS_LIMIT: usize = 20;

fn json_text<T: serde::Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn witness_lines(f: &Family, out: &mut String) {
    for s in f.iter().take(TABLE_WITNESS_LIMIT) {
        let _ = writeln!(out, "    {{{s}}}");
    }
    if f.len() > TABLE_WITNESS_LIMIT {
        let _ = writeln!(out, "    ... truncated: {} more sets (use --format json for all)", f.len() - TABLE_WITNESS_LIMIT);
    }
}

/// `single` renders a lone verdict as an object rather than an array.
pub fn verdicts(vs: &[EkrVerdict], format: Format, single: bool) -> Result<String> {
    match format {
        Format::Json if single => json_text(&vs[0]),
        Format::Json => json_text(vs),
        Format::Csv => csv_text(
            &["r", "family_size", "max_star", "max_intersecting", "is_ekr", "exact", "nodes", "ms"],
            vs.iter()
                .map(|v| {
                    vec![
                        v.r.to_string(),
                        v.family_size.to_string(),
                        v.max_star.to_string(),
                        v.max_intersecting.to_string(),
                        v.is_ekr.to_string(),
                        v.exact.to_string(),
                        v.nodes_explored.to_string(),
                        v.elapsed.as_millis().to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Table => {
            let mut out = String::new();
            if let Some(v) = vs.first() {
                let _ = writeln!(out, "graph {}", v.graph);
            }
            let _ = writeln!(
                out,
                "{:>3} {:>8} {:>6} {:>6} {:>5} {:>5} {:>10} {:>10} {:>8}",
                "r", "|I|", "star", "max", "ekr", "exact", "proof", "nodes", "ms"
            );
            for v in vs {
                let _ = writeln!(
                    out,
                    "{:>3} {:>8} {:>6} {:>6} {:>5} {:>5} {:>10} {:>10} {:>8}",
                    v.r,
                    v.family_size,
                    v.max_star,
                    v.max_intersecting,
                    v.is_ekr,
                    v.exact,
                    v.proof,
                    v.nodes_explored,
                    v.elapsed.as_millis()
                );
            }
            for v in vs {
                let _ = writeln!(
                    out,
                    "r={} star centre {} (label {}), witness of {} sets:",
                    v.r,
                    v.star_centre,
                    v.star_centre_label,
                    v.witness.len()
                );
                witness_lines(&v.witness, &mut out);
            }
            Ok(out)
        }
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Budget => "budget",
    }
}

pub fn reports(reports: &[AuditReport], format: Format) -> Result<String> {
    match format {
        Format::Json => json_text(reports),
        Format::Csv => csv_text(
            &["target", "instance", "r", "seed", "assertion", "status", "asserted", "detail", "witness"],
            reports
                .iter()
                .flat_map(|rep| {
                    rep.checks.iter().map(move |c| {
                        vec![
                            rep.target.clone(),
                            rep.instance.clone(),
                            rep.r.map(|r| r.to_string()).unwrap_or_default(),
                            rep.seed.map(|s| s.to_string()).unwrap_or_default(),
                            c.assertion.clone(),
                            status_name(c.status).to_string(),
                            c.asserted.to_string(),
                            c.detail.clone().unwrap_or_default(),
                            c.witness.clone().unwrap_or_default(),
                        ]
                    })
                })
                .collect(),
        ),
        Format::Table => {
            let mut out = String::new();
            for rep in reports {
                let s = rep.summary;
                let _ = writeln!(
                    out,
                    "{} on {}: {} checks, {} passed, {} failed, {} reported, {} out of budget",
                    rep.target, rep.instance, s.total, s.passed, s.failed, s.reported, s.budget_exhausted
                );
                if let Some(c) = &rep.condition {
                    let _ = writeln!(
                        out,
                        "  condition {:?}: threshold {} ({:?}), min cycle clique {}",
                        c.class,
                        c.threshold_value,
                        c.threshold,
                        c.min_cycle_clique.map_or("-".to_string(), |m| m.to_string())
                    );
                }
                for c in &rep.checks {
                    let mark = match (c.status, c.asserted) {
                        (Status::Pass, _) => "ok  ",
                        (Status::Fail, true) => "FAIL",
                        (Status::Fail, false) => "note",
                        (Status::Budget, _) => "BUDG",
                    };
                    let _ = write!(out, "  [{mark}] {}", c.assertion);
                    if let Some(d) = &c.detail {
                        let _ = write!(out, " ({d})");
                    }
                    let _ = writeln!(out);
                    if let Some(w) = &c.witness {
                        let _ = writeln!(out, "         witness: {w}");
                    }
                }
            }
            Ok(out)
        }
    }
}

pub fn trace(graph: &str, r: usize, named: &[(String, Family)], reports: &[AuditReport], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let families: Vec<_> = named
                .iter()
                .map(|(name, f)| json!({ "name": name, "sets": f.iter().map(|s| s.to_string()).collect::<Vec<_>>() }))
                .collect();
            json_text(&json!({ "graph": graph, "r": r, "families": families, "reports": reports }))
        }
        Format::Csv => csv_text(
            &["family", "set"],
            named
                .iter()
                .flat_map(|(name, f)| f.iter().map(move |s| vec![name.clone(), s.to_string()]))
                .collect(),
        ),
        Format::Table => {
            let mut out = String::new();
            for (name, f) in named {
                let meta = [("graph", graph.to_string()), ("r", r.to_string()), ("family", name.clone()), ("size", f.len().to_string())];
                out.push_str(&write_family(f, &meta));
            }
            for rep in reports {
                for c in &rep.checks {
                    let _ = writeln!(out, "# check: {} = {}", c.assertion, status_name(c.status));
                }
            }
            Ok(out)
        }
    }
}
