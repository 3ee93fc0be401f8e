//! `ekrlab`: solve, sweep, audit and trace EKR instances given in the
//! composition DSL, e.g. `"P(3)^2 + C(7)^2"` or `"*C(5)^1 + C(5)^2"`.
//!
//! Exit codes: 0 when every asserted check passes, 1 on an assertion
//! failure, 2 on usage or input errors, 3 when a search budget ran out.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ekrlab::families::{compress_family, parse_family, Family};
use ekrlab::graphcore::{parse_composition, realize, Graph, Kind};
use ekrlab::solver::{ekr_sweep_upto, max_intersecting, Budget, DEFAULT_MAX_MS, DEFAULT_MAX_NODES};
use ekrlab::verifier::{
    build_cycle_decomposition, build_lemma_decomposition, random, theorem_audit_graph, to_junit, verify_bh_lemma,
    verify_claim1, verify_claim_final, verify_lemma_main_chain, AuditReport,
};

#[derive(Parser, Debug)]
#[command(name = "ekrlab", version, about = "EKR workbench for disjoint unions of path and cycle powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Largest intersecting family of independent r-sets versus the best star.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: usize,
    },
    /// `check` for every r up to the independence number (or --rmax).
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// Theorem audit plus randomized decomposition audits where they apply.
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        rmax: Option<usize>,
        /// Random families per decomposition audit.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Also write a JUnit XML report here.
        #[arg(long)]
        junit: Option<PathBuf>,
    },
    /// Dump every intermediate family of the decomposition that applies.
    Trace {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: usize,
        /// Family file to decompose; defaults to a largest intersecting family.
        #[arg(long)]
        family: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Composition, e.g. "P(3)^2 + C(7)^2"; `*` marks the distinguished term.
    #[arg(long)]
    graph: String,
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    budget_nodes: u64,
    #[arg(long, env = "EKRLAB_BUDGET_MS", default_value_t = DEFAULT_MAX_MS)]
    budget_ms: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Table,
}

impl Common {
    fn graph(&self) -> Result<Graph> {
        let comp = parse_composition(&self.graph).context("parsing --graph")?;
        Ok(realize(&comp)?)
    }

    fn budget(&self) -> Budget {
        Budget { max_nodes: self.budget_nodes, max_ms: self.budget_ms }
    }

    fn emit(&self, text: String) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Verdict {
    Ok,
    Budget,
    Failed,
}

impl Verdict {
    fn code(self) -> ExitCode {
        match self {
            Verdict::Ok => ExitCode::SUCCESS,
            Verdict::Failed => ExitCode::from(1),
            Verdict::Budget => ExitCode::from(3),
        }
    }

    fn of_reports(reports: &[AuditReport]) -> Verdict {
        reports
            .iter()
            .map(|r| {
                if !r.ok() {
                    Verdict::Failed
                } else if r.summary.budget_exhausted > 0 {
                    Verdict::Budget
                } else {
                    Verdict::Ok
                }
            })
            .max()
            .unwrap_or(Verdict::Ok)
    }
}

fn check(common: &Common, r: usize) -> Result<Verdict> {
    let g = common.graph()?;
    let v = max_intersecting(&g, r, common.budget())?;
    let exact = v.exact;
    common.emit(output::verdicts(std::slice::from_ref(&v), common.format, true)?)?;
    Ok(if exact { Verdict::Ok } else { Verdict::Budget })
}

fn sweep(common: &Common, rmax: Option<usize>) -> Result<Verdict> {
    let g = common.graph()?;
    let vs = ekr_sweep_upto(&g, rmax.unwrap_or(usize::MAX), common.budget())?;
    let exact = vs.iter().all(|v| v.exact);
    common.emit(output::verdicts(&vs, common.format, false)?)?;
    Ok(if exact { Verdict::Ok } else { Verdict::Budget })
}

fn audit(common: &Common, rmax: Option<usize>, samples: usize, junit: Option<&PathBuf>) -> Result<Verdict> {
    let g = common.graph()?;
    let comp = g.composition().expect("realized graphs keep their composition").clone();
    let mut reports = vec![theorem_audit_graph(&g, rmax.unwrap_or(usize::MAX), common.budget())?];
    let head = *comp.distinguished();
    if samples > 0 {
        if head.is_complete() {
            reports.push(random::lemma_chain_audit(&comp, common.seed, samples)?);
        } else if head.kind == Kind::Cycle {
            reports.push(random::cycle_split_audit(&comp, common.seed, samples)?);
        }
    }
    common.emit(output::reports(&reports, common.format)?)?;
    if let Some(path) = junit {
        std::fs::write(path, to_junit(&reports)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Verdict::of_reports(&reports))
}

fn load_family(path: &PathBuf, r: usize) -> Result<Family> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (family, _) = parse_family(&text)?;
    if family.iter().any(|s| s.len() != r) {
        bail!("{} does not hold a family of {r}-sets", path.display());
    }
    Ok(Family::uniform(r, family.iter())?)
}

fn trace(common: &Common, r: usize, family: Option<&PathBuf>) -> Result<Verdict> {
    let g = common.graph()?;
    let a = match family {
        Some(path) => load_family(path, r)?,
        None => max_intersecting(&g, r, common.budget())?.witness,
    };
    let head = g.distinguished()?.spec;
    let mut named: Vec<(String, Family)> = Vec::new();
    let mut reports = Vec::new();
    if head.is_complete() {
        let d = build_lemma_decomposition(&g, r, &a)?;
        named.extend(d.named_families().into_iter().map(|(n, f)| (n, f.clone())));
        reports.push(verify_claim1(&d));
        reports.push(verify_lemma_main_chain(&d, &g, r)?);
    } else if head.kind == Kind::Cycle {
        let d = build_cycle_decomposition(&g, r, &a)?;
        named.extend(d.named_families().into_iter().map(|(n, f)| (n, f.clone())));
        reports.push(verify_claim_final(&d, &g, r)?);
    } else {
        // a non-complete path: compress its last vertex into the one before
        let (u, v) = (head.size - 2, head.size - 1);
        let b = compress_family(&g, u, v, &a)?;
        named.push(("A".into(), a.clone()));
        named.push((format!("compressed_{u}_{v}"), b.clone()));
        named.push(("without_v".into(), b.filter(|s| !s.contains(v))));
        named.push(("with_v_stripped".into(), b.filter(|s| s.contains(v)).remove_vertex(v)));
        reports.push(verify_bh_lemma(&g, u, v, &a)?);
    }
    common.emit(output::trace(&common.graph, r, &named, &reports, common.format)?)?;
    Ok(Verdict::of_reports(&reports))
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Check { common, r } => check(&common, r),
        Command::Sweep { common, rmax } => sweep(&common, rmax),
        Command::Audit { common, rmax, samples, junit } => audit(&common, rmax, samples, junit.as_ref()),
        Command::Trace { common, r, family } => trace(&common, r, family.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => v.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
