//! `transversal` command-line tool.
//!
//! Exit codes: 0 for success (or a yes / equal answer), 1 for a no /
//! mismatch answer, 2 for usage and input errors.

mod bench;

use std::fs;
use std::io::{self, Read, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use transversal::cliques::{
    enumerate_maximal_cliques, enumerate_maximal_hypercliques, enumerate_maximal_independent_sets,
};
use transversal::conformal::{check_k_conformal, conformal_degree, Conformality};
use transversal::enumeration::{enumerate, EnumOptions, Method};
use transversal::extension::{extend, ExtensionOutcome};
use transversal::format::{parse, serialize};
use transversal::hitting::minimize_with_stats;
use transversal::oracle::{Oracle, DEFAULT_CAP};
use transversal::rank::{rank_at_least, transversal_rank, Certificate, RankMethod};
use transversal::verify::{verify_tr_with, VerifyOutcome};
use transversal::{Hypergraph, VertexSet};

const CAP_VAR: &str = "TRANSVERSAL_ORACLE_CAP";

#[derive(Parser)]
#[command(name = "transversal", version, about = "Minimal hitting sets, transversal rank and conformality")]
struct Cli {
    /// Print one JSON object {command, input, answer, witness?, stats?}.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Hypergraph in .hg format; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Stream all minimal hitting sets, one per line.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = MethodArg::Tree)]
        method: MethodArg,
        #[arg(long)]
        limit: Option<usize>,
        /// Write delay statistics as JSON to this file.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Emit the 0- and 1-extensions of X avoiding Y and report HALT or CONTINUE.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
    },
    /// Decide whether some minimal hitting set has at least K vertices.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, required_unless_present = "exact", conflicts_with = "exact")]
        k: Option<usize>,
        /// Print the transversal rank instead.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value_t = RankArg::Lookahead)]
        method: RankArg,
    },
    /// Decide K-conformality or compute the conformal degree.
    Conformal {
        #[command(flatten)]
        input: Input,
        #[arg(long, required_unless_present = "degree", conflicts_with = "degree")]
        k: Option<usize>,
        #[arg(long)]
        degree: bool,
    },
    /// Maximal cliques of a uniform hypergraph (graph enumerator when r = 2).
    Cliques {
        #[command(flatten)]
        input: Input,
        /// List maximal independent sets instead.
        #[arg(long)]
        independent: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Uniformity; defaults to the largest edge size.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Check whether G is exactly the set of minimal hitting sets of H.
    Verify {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long, value_enum, default_value_t = RankArg::Lookahead)]
        method: RankArg,
    },
    /// Shrink the hitting set S to a minimal one.
    Minimize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        s: String,
    },
    /// Print the K-section.
    Section {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Print the edge complement, or the uniform complement with --uniform R.
    Complement {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        uniform: Option<usize>,
    },
    /// Brute-force reference answers (universe size capped by TRANSVERSAL_ORACLE_CAP).
    Oracle {
        #[arg(value_enum)]
        query: OracleQuery,
        #[command(flatten)]
        input: Input,
        /// Uniformity for `cliques`; defaults to the largest edge size.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Time enumeration on random instance families and write CSV.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Tree,
    Incremental,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankArg {
    Lookahead,
    Bd,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleQuery {
    Tr,
    Rank,
    Conformal,
    Cliques,
}

impl From<RankArg> for RankMethod {
    fn from(m: RankArg) -> Self {
        match m {
            RankArg::Lookahead => RankMethod::Lookahead,
            RankArg::Bd => RankMethod::Bd,
            RankArg::Oracle => RankMethod::Oracle,
        }
    }
}

/// What a subcommand produced.
struct Report {
    command: &'static str,
    input: String,
    answer: Value,
    witness: Option<Value>,
    stats: Option<Value>,
    /// Plain-text rendering.
    lines: Vec<String>,
    code: u8,
}

impl Report {
    fn new(command: &'static str, input: String, answer: Value) -> Self {
        Report {
            command,
            input,
            answer,
            witness: None,
            stats: None,
            lines: Vec::new(),
            code: 0,
        }
    }

    fn print(&self, as_json: bool) -> io::Result<()> {
        let mut out = io::stdout().lock();
        if as_json {
            let mut obj = json!({
                "command": self.command,
                "input": self.input,
                "answer": self.answer,
            });
            if let Some(w) = &self.witness {
                obj["witness"] = w.clone();
            }
            if let Some(s) = &self.stats {
                obj["stats"] = s.clone();
            }
            writeln!(out, "{obj}")
        } else {
            for line in &self.lines {
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
    }
}

fn oracle() -> Result<Oracle, String> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .parse()
            .map(Oracle::with_cap)
            .map_err(|_| format!("{CAP_VAR} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(Oracle { cap: DEFAULT_CAP }),
    }
}

fn describe(path: &Option<PathBuf>) -> String {
    match path {
        Some(p) if p != Path::new("-") => p.display().to_string(),
        _ => "-".to_string(),
    }
}

fn read_text(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn load(path: &Option<PathBuf>) -> Result<Hypergraph, String> {
    let text = read_text(path)?;
    let parsed = parse(&text).map_err(|e| format!("{}: {e}", describe(path)))?;
    if parsed.duplicates > 0 {
        eprintln!("warning: dropped {} duplicate edge(s)", parsed.duplicates);
    }
    Ok(parsed.hypergraph)
}

fn names(h: &Hypergraph, s: &VertexSet) -> Value {
    Value::Array(s.iter().map(|v| Value::String(h.vertex_name(v))).collect())
}

fn family(h: &Hypergraph, sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| names(h, s)).collect())
}

fn edge_lists(h: &Hypergraph, edges: &[usize]) -> Vec<String> {
    edges.iter().map(|&e| format!("{{{}}}", h.format_set(h.edge(e)))).collect()
}

fn run(cli: Cli) -> Result<Report, String> {
    let err = |e: transversal::Error| e.to_string();
    match cli.command {
        Command::Enumerate {
            input,
            method,
            limit,
            stats,
        } => {
            let h = load(&input.input)?;
            let method = match method {
                MethodArg::Tree => Method::Tree,
                MethodArg::Incremental => Method::Incremental,
            };
            let opts = EnumOptions {
                limit,
                record_timestamps: stats.is_some() || cli.json,
            };
            let mut found = Vec::new();
            let mut out = io::stdout().lock();
            let streaming = !cli.json;
            let mut write_error = None;
            let delay = enumerate(&h, method, opts, &mut |t| {
                if streaming {
                    if let Err(e) = writeln!(out, "{}", h.format_set(t)) {
                        write_error = Some(e);
                        return ControlFlow::Break(());
                    }
                } else {
                    found.push(t.clone());
                }
                ControlFlow::Continue(())
            });
            if let Some(e) = write_error {
                return Err(format!("cannot write output: {e}"));
            }
            let stats_value = serde_json::to_value(&delay).expect("stats serialize");
            if let Some(path) = stats {
                fs::write(&path, serde_json::to_string_pretty(&stats_value).expect("json"))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let mut report = Report::new("enumerate", describe(&input.input), family(&h, &found));
            report.stats = Some(stats_value);
            Ok(report)
        }
        Command::Extend { input, x, y } => {
            let h = load(&input.input)?;
            let x = h.parse_set(&x).map_err(err)?;
            let y = h.parse_set(&y).map_err(err)?;
            let mut emitted = Vec::new();
            let r = extend(&h, &x, &y, &mut |t| emitted.push(t.clone())).map_err(err)?;
            let mut lines: Vec<String> = emitted.iter().map(|t| h.format_set(t)).collect();
            let (verdict, skip) = match &r.outcome {
                ExtensionOutcome::Halt => ("halt", None),
                ExtensionOutcome::ContinueWith(yp) => ("continue", Some(yp)),
            };
            lines.push(match skip {
                Some(yp) => format!("CONTINUE {}", h.format_set(yp)),
                None => "HALT".to_string(),
            });
            let mut report = Report::new(
                "extend",
                describe(&input.input),
                json!({"extensions": family(&h, &emitted), "outcome": verdict}),
            );
            report.witness = skip.map(|yp| json!({"y_plus": names(&h, yp)}));
            report.stats = Some(json!({
                "product_iterations": r.product_iterations,
                "product_size": r.product_size.to_string(),
            }));
            report.lines = lines;
            Ok(report)
        }
        Command::Rank {
            input,
            k,
            exact,
            method,
        } => {
            let h = load(&input.input)?;
            let method = RankMethod::from(method);
            if exact {
                let kstar = transversal_rank(&h, method).map_err(err)?;
                let mut report = Report::new("rank", describe(&input.input), json!(kstar));
                report.lines = vec![kstar.to_string()];
                return Ok(report);
            }
            let k = k.expect("clap enforces --k or --exact");
            let answer = rank_at_least(&h, k, method).map_err(err)?;
            let mut report = Report::new(
                "rank",
                describe(&input.input),
                json!(if answer.is_some() { "yes" } else { "no" }),
            );
            match answer {
                None => {
                    report.lines = vec!["no".into()];
                    report.code = 1;
                }
                Some(w) => {
                    report.lines = vec!["yes".into(), h.format_set(&w.transversal)];
                    let certificate = match &w.certificate {
                        Certificate::Trivial => json!({"kind": "trivial"}),
                        Certificate::Exhaustive => json!({"kind": "exhaustive"}),
                        Certificate::Lookahead {
                            x,
                            private_edges,
                            shared,
                            search_space,
                        } => {
                            let edges: Vec<usize> = private_edges.iter().map(|&(_, e)| e).collect();
                            report.lines.push(format!("edges: {}", edge_lists(&h, &edges).join(" ")));
                            json!({
                                "kind": "lookahead",
                                "x": names(&h, x),
                                "private_edges": family(&h, &edges.iter().map(|&e| h.edge(e).clone()).collect::<Vec<_>>()),
                                "shared": names(&h, shared),
                                "search_space": names(&h, search_space),
                            })
                        }
                        Certificate::Overlap { edges, overlap } => {
                            report.lines.push(format!("edges: {}", edge_lists(&h, edges).join(" ")));
                            json!({
                                "kind": "overlap",
                                "edges": family(&h, &edges.iter().map(|&e| h.edge(e).clone()).collect::<Vec<_>>()),
                                "overlap": names(&h, overlap),
                            })
                        }
                    };
                    report.witness = Some(json!({
                        "transversal": names(&h, &w.transversal),
                        "certificate": certificate,
                    }));
                }
            }
            Ok(report)
        }
        Command::Conformal { input, k, degree } => {
            let h = load(&input.input)?;
            if degree {
                let d = conformal_degree(&h).map_err(err)?;
                let mut report = Report::new("conformal", describe(&input.input), json!(d));
                report.lines = vec![d.to_string()];
                return Ok(report);
            }
            let k = k.expect("clap enforces --k or --degree");
            let (outcome, stats) = check_k_conformal(&h, k).map_err(err)?;
            let mut report = Report::new(
                "conformal",
                describe(&input.input),
                json!(outcome.is_conformal()),
            );
            report.stats = Some(json!({
                "section_edges": stats.section_edges,
                "cliques_examined": stats.cliques_examined,
            }));
            match outcome {
                Conformality::Conformal => report.lines = vec!["conformal".into()],
                Conformality::Counterexample(s) => {
                    report.lines = vec!["not conformal".into(), h.format_set(&s)];
                    report.witness = Some(names(&h, &s));
                    report.code = 1;
                }
            }
            Ok(report)
        }
        Command::Cliques {
            input,
            independent,
            limit,
            r,
        } => {
            let h = load(&input.input)?;
            let r = r.unwrap_or_else(|| h.rank());
            let mut found = Vec::new();
            let sink = |c: &VertexSet| found.push(c.clone());
            if independent {
                enumerate_maximal_independent_sets(&h, r, limit, sink).map_err(err)?;
            } else if r == 2 {
                enumerate_maximal_cliques(&h, limit, sink).map_err(err)?;
            } else {
                enumerate_maximal_hypercliques(&h, r, limit, sink).map_err(err)?;
            }
            let mut report = Report::new("cliques", describe(&input.input), family(&h, &found));
            report.lines = found.iter().map(|c| h.format_set(c)).collect();
            Ok(report)
        }
        Command::Verify { g, h, method } => {
            let gh = load(&Some(g.clone()))?;
            let hh = load(&Some(h.clone()))?;
            let (gh, hh) = align(&gh, &hh).map_err(err)?;
            let (outcome, stats) = verify_tr_with(&gh, &hh, method.into()).map_err(err)?;
            let mut report = Report::new(
                "verify",
                format!("{} {}", g.display(), h.display()),
                json!(if outcome == VerifyOutcome::Equal { "equal" } else { "mismatch" }),
            );
            report.stats = Some(json!({
                "condition2_candidates": stats.condition2_candidates,
                "condition2_hits": stats.condition2_hits,
                "condition3_checked": stats.condition3_checked,
            }));
            match outcome {
                VerifyOutcome::Equal => report.lines = vec!["equal".into()],
                VerifyOutcome::NotSubset(bad) => {
                    report.lines = vec![
                        "mismatch: edge of G is not a minimal hitting set of H".into(),
                        hh.format_set(&bad),
                    ];
                    report.witness = Some(json!({"not_minimal": names(&hh, &bad)}));
                    report.code = 1;
                }
                VerifyOutcome::MissingSolution { s, t } => {
                    report.lines = vec![
                        "mismatch: missing minimal hitting set".into(),
                        hh.format_set(&t),
                    ];
                    report.witness = Some(json!({"s": names(&hh, &s), "missing": names(&hh, &t)}));
                    report.code = 1;
                }
            }
            Ok(report)
        }
        Command::Minimize { input, s } => {
            let h = load(&input.input)?;
            let s = h.parse_set(&s).map_err(err)?;
            let (t, stats) = minimize_with_stats(&h, &s).map_err(err)?;
            let mut report = Report::new("minimize", describe(&input.input), names(&h, &t));
            report.stats = Some(json!({
                "incidences": stats.incidences,
                "adjacency_touches": stats.adjacency_touches,
            }));
            report.lines = vec![h.format_set(&t)];
            Ok(report)
        }
        Command::Section { input, k } => {
            let h = load(&input.input)?;
            let section = h.k_section(k).map_err(err)?;
            Ok(hypergraph_report("section", &input.input, &section))
        }
        Command::Complement { input, uniform } => {
            let h = load(&input.input)?;
            let out = match uniform {
                Some(r) => h.uniform_complement(r).map_err(err)?,
                None => h.edge_complement(),
            };
            Ok(hypergraph_report("complement", &input.input, &out))
        }
        Command::Oracle { query, input, r } => {
            let h = load(&input.input)?;
            let o = oracle()?;
            let (answer, lines) = match query {
                OracleQuery::Tr => {
                    let sets = o.tr(&h).map_err(err)?;
                    (family(&h, &sets), sets.iter().map(|s| h.format_set(s)).collect())
                }
                OracleQuery::Rank => {
                    let k = o.rank(&h).map_err(err)?;
                    (json!(k), vec![k.to_string()])
                }
                OracleQuery::Conformal => {
                    let d = o.conformal_degree(&h).map_err(err)?;
                    (json!(d), vec![d.to_string()])
                }
                OracleQuery::Cliques => {
                    let sets = o.max_cliques(&h, r.unwrap_or_else(|| h.rank())).map_err(err)?;
                    (family(&h, &sets), sets.iter().map(|s| h.format_set(s)).collect())
                }
            };
            let mut report = Report::new("oracle", describe(&input.input), answer);
            report.lines = lines;
            Ok(report)
        }
        Command::Bench(args) => {
            let rows = bench::run(&args)?;
            let mut report = Report::new(
                "bench",
                args.family_name().to_string(),
                Value::Array(rows.iter().map(bench::Row::to_json).collect()),
            );
            report.lines = bench::csv(&rows);
            if let Some(path) = &args.out {
                fs::write(path, report.lines.join("\n") + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                report.lines.clear();
            }
            Ok(report)
        }
    }
}

/// Puts both hypergraphs on one universe: the vertices of `h` in order,
/// followed by any vertex that only `g` mentions.
fn align(g: &Hypergraph, h: &Hypergraph) -> transversal::Result<(Hypergraph, Hypergraph)> {
    let mut universe = h.vertex_names();
    for name in g.vertex_names() {
        if !universe.contains(&name) {
            universe.push(name);
        }
    }
    Ok((g.over_universe(&universe)?, h.over_universe(&universe)?))
}

fn hypergraph_report(command: &'static str, input: &Option<PathBuf>, h: &Hypergraph) -> Report {
    let mut report = Report::new(command, describe(input), family(h, h.edges()));
    report.lines = serialize(h).lines().map(str::to_string).collect();
    report
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let as_json = cli.json;
    match run(cli) {
        Ok(report) => {
            if let Err(e) = report.print(as_json) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
