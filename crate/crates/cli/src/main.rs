//! `tfx`: generate, measure and search triangle-free graphs from the command line.

mod selftest;

use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tfx_core::bounds::BoundId;
use tfx_core::constructions::{self as cons, GFamilyParams, GVariant};
use tfx_core::graph6::parse_lines;
use tfx_core::lemmas::{classify_nu3, greedy_bipartization_with, verify_verdict, DeletionPolicy};
use tfx_core::report::{
    exit, invariant_report, BoundTable, ErrorItem, Report, ReportItem, RunConfig,
};
use tfx_core::search::{
    count_triangle_free, enumerate_triangle_free, search_report, verify_theorem, Predicate,
    SearchConfig, DEFAULT_ENUMERATE_CEILING, DEFAULT_MAX_EDGES_CEILING,
};
use tfx_core::{to_graph6, Error, Graph};

#[derive(Parser, Debug)]
#[command(name = "tfx", version, about = "Extremal triangle-free graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Worker threads for searches (output does not depend on this).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Largest order for full enumeration.
    #[arg(long, global = true, env = "TFX_CEILING")]
    ceiling: Option<usize>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Seed for randomised checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    G6,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    Grotzsch,
    Turan,
    H0,
    GFamily,
    Hn,
    Cycle,
    Complete,
    Path,
}

#[derive(Args, Debug, Clone)]
struct GraphSource {
    /// graph6 file (one graph per line); standard input when omitted.
    input: Option<String>,
    /// Build the graph from a named construction instead of reading graph6.
    #[arg(long, value_enum)]
    graph: Option<Construction>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Policy {
    MinDegree,
    LowestIndex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    MaxEdges,
    Enumerate,
    Count,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named construction as graph6.
    Gen {
        #[arg(value_enum)]
        name: Construction,
        #[arg(long)]
        n: Option<usize>,
        /// Number of parts for `turan`.
        #[arg(long)]
        r: Option<usize>,
        /// Every member of the Grötzsch blow-up family instead of the most balanced one.
        #[arg(long)]
        all: bool,
    },
    /// Invariants with certificates for each input graph.
    Inv(GraphSource),
    /// Table of closed-form bounds.
    Bound {
        /// Bound name, or `all`.
        #[arg(long, default_value = "all")]
        bound: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Exhaustive search over triangle-free graphs on `n` vertices.
    Search {
        #[arg(long)]
        n: usize,
        /// Conjunction such as `non-bipartite,chi>=4`; triangle-freeness is implied.
        #[arg(long, default_value = "triangle-free")]
        pred: String,
        #[arg(long, value_enum, default_value = "max-edges")]
        mode: Mode,
    },
    /// Compare exact extremal numbers with a bound over a range of orders.
    Verify {
        #[arg(long)]
        bound: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Greedy low-degree deletion until the residual is bipartite.
    Bipartize {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value = "min-degree")]
        policy: Policy,
    },
    /// Structure of triangle-free graphs with matching number 3 and cover number at least 4.
    #[command(name = "classify-nu3")]
    ClassifyNu3(GraphSource),
    /// Quick end-to-end consistency checks.
    Selftest,
}

/// Failure that aborts a command before a report exists.
struct Fatal {
    code: i32,
    message: String,
}

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => exit::CAPACITY,
            Error::Internal(_) => exit::INTERNAL,
            _ => exit::USAGE,
        };
        Fatal {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Fatal {
    Fatal {
        code: exit::USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("tfx: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}

fn search_config(g: &Global) -> SearchConfig {
    let enumerate_ceiling = g.ceiling.unwrap_or(DEFAULT_ENUMERATE_CEILING);
    SearchConfig {
        enumerate_ceiling,
        max_edges_ceiling: DEFAULT_MAX_EDGES_CEILING.max(enumerate_ceiling),
        jobs: g.jobs.max(1),
        split_depth: None,
    }
}

fn run_config(cli: &Cli, params: BTreeMap<String, String>) -> RunConfig {
    let cfg = search_config(&cli.global);
    let name = match &cli.command {
        Command::Gen { .. } => "gen",
        Command::Inv(_) => "inv",
        Command::Bound { .. } => "bound",
        Command::Search { .. } => "search",
        Command::Verify { .. } => "verify",
        Command::Bipartize { .. } => "bipartize",
        Command::ClassifyNu3(_) => "classify-nu3",
        Command::Selftest => "selftest",
    };
    RunConfig {
        command: name.to_string(),
        params,
        jobs: cfg.jobs,
        enumerate_ceiling: cfg.enumerate_ceiling,
        max_edges_ceiling: cfg.max_edges_ceiling,
        out: cli.global.out.clone(),
        seed: cli.global.seed,
    }
}

fn params<const N: usize>(pairs: [(&str, Option<String>); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
}

fn emit(global: &Global, text: &str) -> Result<(), Fatal> {
    match &global.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| usage(format!("cannot write {path}: {e}")))
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Fatal {
                code: exit::INTERNAL,
                message: e.to_string(),
            })
        }
    }
}

fn emit_report(global: &Global, mut report: Report, started: Instant) -> Result<i32, Fatal> {
    report.finish(started.elapsed().as_secs_f64() * 1e3);
    let mut text = serde_json::to_string_pretty(&report).map_err(|e| Fatal {
        code: exit::INTERNAL,
        message: e.to_string(),
    })?;
    text.push('\n');
    emit(global, &text)?;
    Ok(report.summary.exit_code)
}

fn require_n(n: Option<usize>, what: &str) -> Result<usize, Fatal> {
    n.ok_or_else(|| usage(format!("{what} needs --n")))
}

fn build(
    name: Construction,
    n: Option<usize>,
    r: Option<usize>,
    all: bool,
) -> Result<Vec<(String, Graph)>, Fatal> {
    let label = |s: &str| s.to_string();
    Ok(match name {
        Construction::Grotzsch => vec![(label("grotzsch"), cons::grotzsch())],
        Construction::Turan => {
            let n = require_n(n, "turan")?;
            vec![(label("turan"), cons::turan_graph(n, r.unwrap_or(2))?)]
        }
        Construction::H0 => vec![(label("h0"), cons::h0(require_n(n, "h0")?)?)],
        Construction::Hn => vec![(label("hn"), cons::h_n(require_n(n, "hn")?)?)],
        Construction::Cycle => vec![(label("cycle"), cons::cycle(require_n(n, "cycle")?)?)],
        Construction::Complete => {
            vec![(label("complete"), cons::complete(require_n(n, "complete")?))]
        }
        Construction::Path => vec![(label("path"), cons::path(require_n(n, "path")?))],
        Construction::GFamily => {
            let n = require_n(n, "g-family")?;
            let members: Vec<GFamilyParams> = cons::g_family_members(n).collect();
            if members.is_empty() {
                return Err(usage(format!(
                    "g-family has no members at n = {n} (needs n >= 12)"
                )));
            }
            let chosen: Vec<&GFamilyParams> = if all {
                members.iter().collect()
            } else {
                // the most balanced split of V, first in generation order on ties
                let spread = |p: &GFamilyParams| {
                    p.v_parts.iter().max().unwrap() - p.v_parts.iter().min().unwrap()
                };
                members
                    .iter()
                    .min_by_key(|p| spread(p))
                    .into_iter()
                    .collect()
            };
            chosen
                .into_iter()
                .map(|p| {
                    let tag = match p.variant {
                        GVariant::FloorV => "floor",
                        GVariant::CeilV => "ceil",
                    };
                    let parts: Vec<String> = p.v_parts.iter().map(|x| x.to_string()).collect();
                    Ok((
                        format!("g-family:{tag}:{}:{}", parts.join("-"), p.w_size),
                        cons::g_family(p)?,
                    ))
                })
                .collect::<Result<_, Error>>()?
        }
    })
}

fn load_graphs(source: &GraphSource) -> Result<Vec<(String, Graph)>, Fatal> {
    if let Some(name) = source.graph {
        return build(name, source.n, source.r, false);
    }
    let text = match &source.input {
        Some(path) if path != "-" => {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let graphs = parse_lines(&text)?;
    if graphs.is_empty() {
        return Err(usage("no graphs in input"));
    }
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("input:{}", i + 1), g))
        .collect())
}

fn source_params(s: &GraphSource) -> BTreeMap<String, String> {
    params([
        ("input", s.input.clone()),
        (
            "graph",
            s.graph
                .and_then(|g| g.to_possible_value())
                .map(|v| v.get_name().to_string()),
        ),
        ("n", s.n.map(|n| n.to_string())),
        ("r", s.r.map(|r| r.to_string())),
    ])
}

fn parse_bound(name: &str) -> Result<BoundId, Fatal> {
    name.parse::<BoundId>().map_err(|e| usage(e.to_string()))
}

fn check_format(global: &Global, allowed: &[Format]) -> Result<Format, Fatal> {
    let f = global.format.unwrap_or(allowed[0]);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(
            format!("format {:?} is not available for this command", f).to_lowercase(),
        ))
    }
}

fn run(cli: &Cli) -> Result<i32, Fatal> {
    let started = Instant::now();
    let global = &cli.global;
    let cfg = search_config(global);
    match &cli.command {
        Command::Gen { name, n, r, all } => {
            let format = check_format(global, &[Format::G6, Format::Json])?;
            let graphs = build(*name, *n, *r, *all)?;
            if format == Format::G6 {
                let text: String = graphs.iter().map(|(_, g)| to_graph6(g) + "\n").collect();
                emit(global, &text)?;
                return Ok(exit::SUCCESS);
            }
            let name_str = name.to_possible_value().map(|v| v.get_name().to_string());
            let mut report = Report::new(run_config(
                cli,
                params([
                    ("name", name_str),
                    ("n", n.map(|x| x.to_string())),
                    ("r", r.map(|x| x.to_string())),
                    ("all", Some(all.to_string())),
                ]),
            ));
            for (label, g) in graphs {
                report.push(ReportItem::Graph {
                    name: label,
                    graph: to_graph6(&g),
                    n: g.n(),
                    e: g.edge_count(),
                });
            }
            emit_report(global, report, started)
        }
        Command::Inv(source) => {
            check_format(global, &[Format::Json])?;
            let graphs = load_graphs(source)?;
            let mut report = Report::new(run_config(cli, source_params(source)));
            for (_, g) in graphs {
                report.push(ReportItem::Invariants(invariant_report(&g)));
            }
            emit_report(global, report, started)
        }
        Command::Bound { bound, from, to, r } => {
            let format = check_format(global, &[Format::Csv, Format::Json])?;
            if from > to {
                return Err(usage("--from must not exceed --to"));
            }
            let ids = if bound == "all" {
                BoundId::ALL.to_vec()
            } else {
                vec![parse_bound(bound)?]
            };
            let table = BoundTable::new(ids, *r, *from..=*to);
            if format == Format::Csv {
                emit(global, &table.to_csv())?;
                return Ok(exit::SUCCESS);
            }
            let mut report = Report::new(run_config(
                cli,
                params([
                    ("bound", Some(bound.clone())),
                    ("from", Some(from.to_string())),
                    ("to", Some(to.to_string())),
                    ("r", r.map(|x| x.to_string())),
                ]),
            ));
            report.push(ReportItem::BoundTable(table));
            emit_report(global, report, started)
        }
        Command::Search { n, pred, mode } => {
            let predicate: Predicate = pred.parse().map_err(|e: Error| usage(e.to_string()))?;
            let mode_name = mode.to_possible_value().map(|v| v.get_name().to_string());
            let p = params([
                ("n", Some(n.to_string())),
                ("pred", Some(predicate.to_string())),
                ("mode", mode_name),
            ]);
            match mode {
                Mode::Enumerate => {
                    let format = check_format(global, &[Format::G6, Format::Json])?;
                    let graphs = enumerate_triangle_free(*n, &predicate, &cfg)?;
                    if format == Format::G6 {
                        let text: String = graphs.iter().map(|g| to_graph6(g) + "\n").collect();
                        emit(global, &text)?;
                        return Ok(exit::SUCCESS);
                    }
                    let mut report = Report::new(run_config(cli, p));
                    for (i, g) in graphs.iter().enumerate() {
                        report.push(ReportItem::Graph {
                            name: format!("class:{}", i + 1),
                            graph: to_graph6(g),
                            n: g.n(),
                            e: g.edge_count(),
                        });
                    }
                    emit_report(global, report, started)
                }
                Mode::Count => {
                    check_format(global, &[Format::Json])?;
                    let count = count_triangle_free(*n, &predicate, &cfg)?;
                    let mut report = Report::new(run_config(cli, p));
                    report.push(ReportItem::Check {
                        name: "classes".into(),
                        passed: true,
                        detail: count.to_string(),
                    });
                    emit_report(global, report, started)
                }
                Mode::MaxEdges => {
                    let format = check_format(global, &[Format::Json, Format::G6])?;
                    let mut report = Report::new(run_config(cli, p));
                    match search_report(*n, &predicate, &cfg) {
                        Ok(r) if format == Format::G6 => {
                            let text: String =
                                r.witnesses.iter().map(|w| w.clone() + "\n").collect();
                            emit(global, &text)?;
                            return Ok(exit::SUCCESS);
                        }
                        Ok(r) => report.push(ReportItem::Search(r)),
                        Err(e) => report.push(ReportItem::Error(ErrorItem::new(Some(*n), &e))),
                    }
                    emit_report(global, report, started)
                }
            }
        }
        Command::Verify { bound, from, to, r } => {
            check_format(global, &[Format::Json])?;
            if from > to {
                return Err(usage("--from must not exceed --to"));
            }
            let id = parse_bound(bound)?;
            let mut report = Report::new(run_config(
                cli,
                params([
                    ("bound", Some(id.name().to_string())),
                    ("from", Some(from.to_string())),
                    ("to", Some(to.to_string())),
                    ("r", r.map(|x| x.to_string())),
                ]),
            ));
            for (n, outcome) in verify_theorem(id, *r, *from..=*to, &cfg) {
                report.push(match outcome {
                    Ok(rep) => ReportItem::Search(rep),
                    Err(e) => ReportItem::Error(ErrorItem::new(Some(n), &e)),
                });
            }
            emit_report(global, report, started)
        }
        Command::Bipartize { source, policy } => {
            check_format(global, &[Format::Json])?;
            let policy = match policy {
                Policy::MinDegree => DeletionPolicy::MinDegree,
                Policy::LowestIndex => DeletionPolicy::LowestIndex,
            };
            let mut p = source_params(source);
            p.insert("policy".into(), format!("{policy:?}"));
            let mut report = Report::new(run_config(cli, p));
            for (_, g) in load_graphs(source)? {
                report.push(match greedy_bipartization_with(&g, policy) {
                    Ok(trace) => ReportItem::Bipartization {
                        graph: to_graph6(&g),
                        trace,
                    },
                    Err(e) => ReportItem::Error(ErrorItem::new(Some(g.n()), &e)),
                });
            }
            emit_report(global, report, started)
        }
        Command::ClassifyNu3(source) => {
            check_format(global, &[Format::Json])?;
            let mut report = Report::new(run_config(cli, source_params(source)));
            for (_, g) in load_graphs(source)? {
                report.push(match classify_nu3(&g) {
                    Ok(verdict) => {
                        let verified = verify_verdict(&g, &verdict).is_ok();
                        ReportItem::Classification {
                            graph: to_graph6(&g),
                            verdict,
                            verified,
                        }
                    }
                    Err(e) => ReportItem::Error(ErrorItem::new(Some(g.n()), &e)),
                });
            }
            emit_report(global, report, started)
        }
        Command::Selftest => {
            check_format(global, &[Format::Json])?;
            let seed = global.seed.unwrap_or(0x7f4a_7c15);
            let mut config = run_config(cli, BTreeMap::new());
            config.seed = Some(seed);
            let mut report = Report::new(config);
            for item in selftest::run(seed, &cfg) {
                report.push(item);
            }
            emit_report(global, report, started)
        }
    }
}
