//! Command-line front end. Results go to stdout, diagnostics to stderr.
//! Exit status: 0 no violations, 1 violations found, 2 usage or input error.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use tough_cycles::extension::{greedy_extend_with, GreedyConfig};
use tough_cycles::graph::{parse_edge_list, parse_graph6, Cycle, Graph};
use tough_cycles::harness::{sweep, verify, Status, SweepConfig, SweepSource, TheoremId};
use tough_cycles::invariants::{longest_path_outside, InvariantReport};
use tough_cycles::structure::{decompose, run_suite, SuiteConfig};

const WORKERS_ENV: &str = "TOUGH_CYCLES_WORKERS";

#[derive(Parser)]
#[command(name = "tough-cycles", version, about = "Exact invariants and long-cycle bound checks for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant report of each graph as a JSON line.
    Invariants {
        /// A graph6 string, or a file of graph6 lines or an edge list.
        input: String,
    },
    /// Decompose a longest cycle and print every segment-check verdict.
    Analyze { graph6: String },
    /// Check the circumference bounds on one graph.
    Verify {
        graph6: String,
        /// A, B or T1; all three when omitted.
        #[arg(long)]
        theorem: Option<TheoremId>,
    },
    /// Check the bounds over many graphs and print a JSON report.
    Sweep {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Read graph6 records from this file instead of enumerating.
        #[arg(long)]
        from_file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "A,B,T1")]
        theorems: Vec<TheoremId>,
        /// Also run the segment checks on every graph.
        #[arg(long)]
        lemmas: bool,
        /// Overridden by the TOUGH_CYCLES_WORKERS environment variable.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Skip graphs with a vertex of larger degree.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Keep only regular graphs of this degree.
        #[arg(long)]
        regular: Option<usize>,
        /// Write the report here; stdout then gets the CSV summary.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the per-n CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Allow an unrestricted sweep at 10 vertices.
        #[arg(long = "i-know-this-is-slow")]
        allow_slow: bool,
    },
    /// Greedily lengthen a cycle by rewiring.
    Extend {
        graph6: String,
        #[arg(long, default_value_t = 64)]
        budget: usize,
        /// Starting cycle as comma-separated vertices; a shortest cycle by default.
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<usize>>,
        #[arg(long)]
        best_improvement: bool,
    },
}

/// Input problems map to exit status 2.
struct InputError(anyhow::Error);

fn input<T>(r: Result<T>) -> std::result::Result<T, InputError> {
    r.map_err(InputError)
}

fn read_graph(text: &str) -> Result<Graph> {
    parse_graph6(text.trim()).with_context(|| format!("not a graph6 record: {:?}", text.trim()))
}

fn read_graphs(arg: &str) -> Result<Vec<Graph>> {
    let path = std::path::Path::new(arg);
    if !path.is_file() {
        return Ok(vec![read_graph(arg)?]);
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if let Ok(gs) = lines.iter().map(|l| parse_graph6(l)).collect::<Result<Vec<_>, _>>() {
        if !gs.is_empty() {
            return Ok(gs);
        }
    }
    Ok(vec![parse_edge_list(&text).with_context(|| format!("{arg} is neither graph6 lines nor an edge list"))?])
}

fn json_line(out: &mut impl Write, v: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn workers(flag: usize) -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&w| w > 0).ok_or_else(|| anyhow!("{WORKERS_ENV}={v:?} is not a positive integer")),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> std::result::Result<bool, InputError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: anyhow::Error| InputError(e);
    match cli.command {
        Command::Invariants { input: arg } => {
            for g in input(read_graphs(&arg))? {
                json_line(&mut out, &InvariantReport::compute(&g)).map_err(io)?;
            }
            Ok(false)
        }
        Command::Analyze { graph6 } => {
            let g = input(read_graph(&graph6))?;
            let report = InvariantReport::compute(&g);
            if report.circumference >= 3 && g.is_connected() {
                if let Some(p) = longest_path_outside(&g, &report.circumference_witness) {
                    if let Ok(d) = decompose(&g, &report.circumference_witness, &p) {
                        json_line(&mut out, &serde_json::json!({ "decomposition": d })).map_err(io)?;
                    }
                }
            }
            let outcome = run_suite(&g, &report, SuiteConfig::default());
            let code = graph6.trim();
            let mut violated = false;
            for v in &outcome.verdicts {
                violated |= v.is_violation();
                writeln!(out, "{}", v.to_json_line(code)).map_err(|e| io(e.into()))?;
            }
            if outcome.sampled {
                eprintln!("note: enumeration cap reached; verdicts cover a sample of pairs");
            }
            Ok(violated)
        }
        Command::Verify { graph6, theorem } => {
            let g = input(read_graph(&graph6))?;
            let theorems = theorem.map_or(TheoremId::ALL.to_vec(), |t| vec![t]);
            let mut violated = false;
            for t in theorems {
                let v = verify(&g, t);
                violated |= v.status == Status::Violation;
                json_line(&mut out, &v).map_err(io)?;
            }
            Ok(violated)
        }
        Command::Sweep { max_n, min_n, from_file, theorems, lemmas, workers: w, max_degree, regular, out: report_path, csv, allow_slow } => {
            let source = match from_file {
                Some(path) => {
                    let f = input(std::fs::File::open(&path).with_context(|| format!("opening {}", path.display())))?;
                    input(SweepSource::from_reader(BufReader::new(f), path.display().to_string()).map_err(Into::into))?
                }
                None => SweepSource::Internal { min_n, max_n, max_degree, regular },
            };
            let mut cfg = SweepConfig::new(source, theorems);
            cfg.lemmas = lemmas;
            cfg.workers = input(workers(w))?;
            cfg.allow_slow = allow_slow;
            let report = input(sweep(cfg).map_err(Into::into))?;
            for r in &report.rejected {
                eprintln!("rejected line {}: {}", r.line, r.reason);
            }
            let json = serde_json::to_string_pretty(&report).map_err(|e| io(e.into()))?;
            if let Some(path) = &csv {
                input(std::fs::write(path, report.to_csv()).with_context(|| format!("writing {}", path.display())))?;
            }
            match report_path {
                Some(path) => {
                    input(std::fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display())))?;
                    write!(out, "{}", report.to_csv()).map_err(|e| io(e.into()))?;
                }
                None => writeln!(out, "{json}").map_err(|e| io(e.into()))?,
            }
            eprintln!(
                "processed {} graphs, rejected {}, violations {}, exceptions {} in {} ms",
                report.processed,
                report.rejected.len(),
                report.violation_count(),
                report.exceptions.len(),
                report.elapsed_ms
            );
            Ok(report.violation_count() + report.unconfirmed.len() > 0)
        }
        Command::Extend { graph6, budget, start, best_improvement } => {
            let g = input(read_graph(&graph6))?;
            let start = match start {
                Some(vs) => input(Cycle::new(&g, vs).map_err(|e| anyhow!("bad start cycle: {e}")))?,
                None => input(g.shortest_cycle().ok_or_else(|| anyhow!("the graph has no cycle")))?,
            };
            let cfg = GreedyConfig { budget, best_improvement, ..GreedyConfig::default() };
            let outcome = input(greedy_extend_with(&g, &start, cfg).map_err(Into::into))?;
            json_line(&mut out, &outcome).map_err(io)?;
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(InputError(e)) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}


fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe))
}
