mod args;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::Parser;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use args::{BackendArg, Cli, Command, Common, FormatArg, GenKind, OrderArg, VerifyKind};
use rigcore::bounds::{counterexample_hunt, s_d_estimate, s_d_star_search, upper_bound_check, SdMode};
use rigcore::covers::analyze_cover;
use rigcore::generators::{complete_graph, double_k5, double_k5_with_shared_edge, k5_flower, random_gnp, seeded_rng};
use rigcore::io::{parse_auto, serialize_graph, Format};
use rigcore::rank::{generic_rank, maxwell_check, subset_rank};
use rigcore::sparsity::{critical_components, is_d_sparse, maximal_sparse_subgraph};
use rigcore::suite::{run_criterion, time_limit, CRITERIA};
use rigcore::{canon, Backend, Edge, EdgeOrder, Error, Graph, SparsityParams};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// What a command produced: a JSON payload, optionally a graph for DOT
/// output, and whether the checked property held.
struct Outcome {
    payload: Value,
    graph: Option<Graph>,
    holds: bool,
}

impl Outcome {
    fn report<T: Serialize>(value: &T, holds: bool) -> anyhow::Result<Self> {
        Ok(Outcome {
            payload: serde_json::to_value(value)?,
            graph: None,
            holds,
        })
    }

    fn graph(g: Graph) -> Self {
        let payload = serde_json::from_slice(&serialize_graph(&g, Format::Json)).expect("graph json");
        Outcome {
            payload,
            graph: Some(g),
            holds: true,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("rigctl: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Inconsistency(_)) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let common = cli.common;
    rayon::ThreadPoolBuilder::new()
        .num_threads(common.threads.max(1))
        .build_global()
        .context("configuring the thread pool")?;
    let outcome = execute(&cli.command, &common)?;
    let mut out = io::stdout().lock();
    write_outcome(&mut out, &outcome, common.format)?;
    out.flush()?;
    Ok(if outcome.holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn params(common: &Common) -> anyhow::Result<SparsityParams> {
    let p = SparsityParams::new(common.dim)?;
    if p.beyond_proven_range() {
        log::warn!(
            "d = {} is outside the range where the rank bound is proven (d <= 5)",
            common.dim
        );
    }
    Ok(p)
}

fn backend(common: &Common) -> Backend {
    match common.backend {
        BackendArg::Brute => Backend::Brute,
        BackendArg::Flow => Backend::Flow,
        BackendArg::Both => Backend::Both,
    }
}

fn read_graph(common: &Common) -> anyhow::Result<Graph> {
    let bytes = if common.input.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).context("reading standard input")?;
        buf
    } else {
        fs::read(&common.input).with_context(|| format!("reading {}", common.input.display()))?
    };
    Ok(parse_auto(&bytes)?)
}

fn echo_seed(common: &Common) {
    eprintln!("rigctl: seed {}", common.seed);
}

fn order(kind: OrderArg, common: &Common) -> EdgeOrder {
    match kind {
        OrderArg::Given => EdgeOrder::Given,
        OrderArg::Random => {
            echo_seed(common);
            EdgeOrder::Random(common.seed)
        }
    }
}

fn parse_edges(specs: &[String]) -> anyhow::Result<Vec<Edge>> {
    specs
        .iter()
        .map(|s| {
            let (u, v) = s
                .split_once('-')
                .ok_or_else(|| anyhow!("edge `{s}` is not of the form u-v"))?;
            let u: usize = u.trim().parse().with_context(|| format!("edge `{s}`"))?;
            let v: usize = v.trim().parse().with_context(|| format!("edge `{s}`"))?;
            Ok(canon(u, v))
        })
        .collect()
}

fn execute(command: &Command, common: &Common) -> anyhow::Result<Outcome> {
    match command {
        Command::Gen { kind } => generate(kind, common).map(Outcome::graph),
        Command::Sparse => {
            let g = read_graph(common)?;
            let verdict = is_d_sparse(&g, params(common)?, backend(common))?;
            Outcome::report(&verdict, verdict.is_sparse)
        }
        Command::Maximal { order: kind } => {
            let g = read_graph(common)?;
            let r = maximal_sparse_subgraph(&g, params(common)?, &order(*kind, common))?;
            let mut out = Outcome::report(&r, true)?;
            out.graph = Some(r.subgraph());
            Ok(out)
        }
        Command::Components => {
            let h = read_graph(common)?;
            let p = params(common)?;
            let verdict = is_d_sparse(&h, p, backend(common))?;
            if !verdict.is_sparse {
                eprintln!("rigctl: input is not {}-sparse", p.d());
                return Outcome::report(&verdict, false);
            }
            let comps = critical_components(&h, p, backend(common))?;
            Outcome::report(&json!({ "components": comps }), true)
        }
        Command::Cover { order: kind } => {
            let g = read_graph(common)?;
            let p = params(common)?;
            let h = maximal_sparse_subgraph(&g, p, &order(*kind, common))?;
            let report = analyze_cover(&g, &h, p)?;
            let holds = report.pass();
            Outcome::report(&report, holds)
        }
        Command::Rank => {
            let g = read_graph(common)?;
            echo_seed(common);
            let r = generic_rank(&g, params(common)?, common.trials, common.seed)?;
            Outcome::report(&r, true)
        }
        Command::Independent { edges } => {
            let g = read_graph(common)?;
            let f = if edges.is_empty() {
                g.sorted_edges()
            } else {
                parse_edges(edges)?
            };
            echo_seed(common);
            let r = subset_rank(&g, &f, params(common)?, common.trials, common.seed)?;
            let report = json!({ "independent": r.rank == f.len(), "size": f.len(), "rank": r.rank });
            Outcome::report(&report, true)
        }
        Command::Sd { exhaustive } => {
            let g = read_graph(common)?;
            let mode = if *exhaustive {
                SdMode::Exhaustive
            } else {
                echo_seed(common);
                SdMode::Heuristic {
                    samples: common.samples.unwrap_or(200),
                    seed: common.seed,
                    pivots: true,
                }
            };
            let est = s_d_estimate(&g, params(common)?, mode)?;
            Outcome::report(&est, true)
        }
        Command::Sdstar { budget } => {
            let g = read_graph(common)?;
            echo_seed(common);
            let r = s_d_star_search(&g, params(common)?, *budget, common.samples.unwrap_or(5), common.seed)?;
            let holds = r.pass;
            Outcome::report(&r, holds)
        }
        Command::Verify { check } => verify(check, common),
    }
}

fn generate(kind: &GenKind, common: &Common) -> anyhow::Result<Graph> {
    Ok(match kind {
        GenKind::DoubleK5 => double_k5().0,
        GenKind::DoubleK5Plus => double_k5_with_shared_edge(),
        GenKind::K5Flower => k5_flower(),
        GenKind::Complete { n } => complete_graph(*n)?,
        GenKind::Random { n, p } => {
            if !(0.0..=1.0).contains(p) {
                bail!("edge probability {p} is outside [0, 1]");
            }
            echo_seed(common);
            random_gnp(*n, *p, &mut seeded_rng(common.seed))
        }
    })
}

fn verify(check: &VerifyKind, common: &Common) -> anyhow::Result<Outcome> {
    match check {
        VerifyKind::Theorem4 => {
            let g = read_graph(common)?;
            echo_seed(common);
            let r = upper_bound_check(&g, params(common)?, common.samples.unwrap_or(5), common.seed)?;
            let holds = r.pass();
            Outcome::report(&r, holds)
        }
        VerifyKind::Lemmas { order: kind } => {
            let g = read_graph(common)?;
            let p = params(common)?;
            let h = maximal_sparse_subgraph(&g, p, &order(*kind, common))?;
            let report = analyze_cover(&g, &h, p)?;
            let holds = report.pass();
            Outcome::report(&report, holds)
        }
        VerifyKind::Maxwell => {
            let g = read_graph(common)?;
            let p = params(common)?;
            echo_seed(common);
            let mut rng = seeded_rng(common.seed);
            let mut sampled = Vec::new();
            let mut holds = true;
            for _ in 0..common.samples.unwrap_or(20) {
                let mut f = g.sorted_edges();
                f.shuffle(&mut rng);
                f.truncate(rng.gen_range(0..=f.len()));
                f.sort_unstable();
                let r = maxwell_check(&g, &f, p, common.trials, common.seed)?;
                holds &= r.pass;
                sampled.push(
                    json!({ "edges": f.len(), "independent": r.independent, "sparse": r.sparse, "pass": r.pass }),
                );
            }
            Outcome::report(&json!({ "samples": sampled, "pass": holds }), holds)
        }
        VerifyKind::Laman => {
            let g = read_graph(common)?;
            if common.dim != 2 {
                log::warn!("laman check always uses d = 2");
            }
            echo_seed(common);
            let r = upper_bound_check(&g, SparsityParams::new(2)?, common.samples.unwrap_or(5), common.seed)?;
            let holds = r.samples.iter().all(|&s| s == r.rank);
            Outcome::report(&json!({ "rank": r.rank, "samples": r.samples, "pass": holds }), holds)
        }
        VerifyKind::Hunt { n_max } => {
            let p = params(common)?;
            echo_seed(common);
            let r = counterexample_hunt(p, *n_max, common.samples.unwrap_or(100), common.seed)?;
            if !r.candidates.is_empty() {
                log::warn!("{} candidate counterexamples found", r.candidates.len());
            }
            Outcome::report(&r, true)
        }
        VerifyKind::All { only } => {
            let ids: Vec<u8> = if only.is_empty() {
                CRITERIA.iter().map(|c| c.0).collect()
            } else {
                only.clone()
            };
            echo_seed(common);
            let mut reports = Vec::new();
            let mut holds = true;
            for id in ids {
                let start = Instant::now();
                let r = run_criterion(id, common.seed)?;
                let elapsed = start.elapsed();
                let in_time = time_limit(id).is_none_or(|l| elapsed <= l);
                eprintln!(
                    "rigctl: criterion {id} {} in {:.2?}{}",
                    if r.pass { "PASS" } else { "FAIL" },
                    elapsed,
                    if in_time { "" } else { " (over time limit)" }
                );
                holds &= r.pass && in_time;
                reports.push(r);
            }
            Outcome::report(&json!({ "criteria": reports, "pass": holds }), holds)
        }
    }
}

fn write_outcome(out: &mut impl Write, outcome: &Outcome, format: FormatArg) -> anyhow::Result<()> {
    match format {
        FormatArg::Json => {
            serde_json::to_writer(&mut *out, &outcome.payload)?;
            writeln!(out)?;
        }
        FormatArg::Text => match (&outcome.graph, &outcome.payload) {
            (Some(g), _) if outcome.payload.get("kept_edges").is_none() => {
                out.write_all(&serialize_graph(g, Format::EdgeList))?
            }
            (_, Value::Object(map)) => {
                for (k, v) in map {
                    writeln!(out, "{k}: {v}")?;
                }
            }
            (_, v) => writeln!(out, "{v}")?,
        },
        FormatArg::Dot => {
            let g = outcome
                .graph
                .as_ref()
                .ok_or_else(|| Error::Input("dot output needs a graph-valued command".into()))?;
            out.write_all(&serialize_graph(g, Format::Dot))?;
        }
    }
    Ok(())
}
