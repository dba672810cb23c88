use super::enumerate::{enumerate_connected_graphs_with, par_for_each_connected_graph, EnumerationError, EnumerationOptions};
use super::verify::{verify_with_oracles, Facts, Status, TheoremId, TheoremVerdict};
use crate::graph::{parse_graph6, write_graph6, Graph};
use crate::invariants::InvariantReport;
use crate::rational::ExactRational;
use crate::structure::{run_suite, LemmaId, SuiteConfig};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::BufRead;
use std::sync::Mutex;
use std::time::Instant;
use thiserror::Error;

pub const REPORT_SCHEMA: u32 = 1;

/// Largest order swept without an explicit opt-in.
pub const DEFAULT_MAX_N: usize = 9;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("cannot read graph stream: {0}")]
    Io(#[from] std::io::Error),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("no theorems selected")]
    NoTheorems,
    #[error("an unrestricted sweep at n = {0} takes hours; opt in explicitly")]
    SlowSweep(usize),
    #[error("min n {min} exceeds max n {max}")]
    EmptyRange { min: usize, max: usize },
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepSource {
    /// Connected graphs from the internal enumerator.
    Internal {
        min_n: usize,
        max_n: usize,
        max_degree: Option<usize>,
        /// Keep only `d`-regular graphs.
        regular: Option<usize>,
    },
    /// One graph6 record per line.
    Graph6 {
        #[serde(skip)]
        lines: Vec<String>,
        label: String,
    },
}

impl SweepSource {
    pub fn internal(max_n: usize) -> Self {
        SweepSource::Internal { min_n: 1, max_n, max_degree: None, regular: None }
    }

    pub fn cubic(n: usize) -> Self {
        SweepSource::Internal { min_n: n, max_n: n, max_degree: Some(3), regular: Some(3) }
    }

    pub fn from_reader(r: impl BufRead, label: impl Into<String>) -> Result<Self, SweepError> {
        let lines = r.lines().collect::<Result<Vec<_>, _>>()?;
        Ok(SweepSource::Graph6 { lines, label: label.into() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub source: SweepSource,
    pub theorems: Vec<TheoremId>,
    /// Also run the segment checks on every graph.
    pub lemmas: bool,
    pub workers: usize,
    /// Permits unrestricted internal sweeps beyond [`DEFAULT_MAX_N`].
    pub allow_slow: bool,
    #[serde(skip)]
    pub suite: SuiteConfig,
}

impl SweepConfig {
    pub fn new(source: SweepSource, theorems: Vec<TheoremId>) -> Self {
        SweepConfig { source, theorems, lemmas: false, workers: 1, allow_slow: false, suite: SuiteConfig::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub seen: usize,
    pub vacuous: usize,
    pub holds: usize,
    pub exceptions: usize,
    pub violations: usize,
    /// Graphs with `τ = 1` exactly; vacuous for T1 but in scope for B.
    pub tau_exactly_one: usize,
    /// Graphs ruled out by the connectivity prefilter alone.
    pub prefiltered: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub theorem: TheoremId,
    pub n: usize,
    #[serde(flatten)]
    pub counts: TheoremCounts,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaCounts {
    pub instances: usize,
    pub non_vacuous: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub lemma: LemmaId,
    #[serde(flatten)]
    pub counts: LemmaCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RejectedRecord {
    /// 1-based line number in the stream.
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub config: SweepConfig,
    pub processed: usize,
    pub rejected: Vec<RejectedRecord>,
    pub counts: Vec<CountRow>,
    /// Confirmed violations, sorted.
    pub violations: Vec<TheoremVerdict>,
    /// Verdicts the fast path called violations but the oracles did not.
    pub unconfirmed: Vec<TheoremVerdict>,
    pub exceptions: Vec<String>,
    pub lemmas: Vec<LemmaRow>,
    pub lemma_pairs: usize,
    /// Verdict JSON lines of failed segment checks, sorted.
    pub lemma_violations: Vec<String>,
    /// Graphs whose cycle or path enumeration hit its cap.
    pub lemma_sampled: Vec<String>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn violation_count(&self) -> usize {
        self.violations.len() + self.lemma_violations.len()
    }

    pub fn totals(&self, theorem: TheoremId) -> TheoremCounts {
        let mut t = TheoremCounts::default();
        for row in self.counts.iter().filter(|r| r.theorem == theorem) {
            t.merge(&row.counts);
        }
        t
    }

    pub fn lemma(&self, id: LemmaId) -> LemmaCounts {
        self.lemmas.iter().find(|r| r.lemma == id).map(|r| r.counts.clone()).unwrap_or_default()
    }

    /// `theorem,n,seen,vacuous,holds,exceptions,violations` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,n,seen,vacuous,holds,exceptions,violations\n");
        for r in &self.counts {
            let c = &r.counts;
            out.push_str(&format!("{},{},{},{},{},{},{}\n", r.theorem, r.n, c.seen, c.vacuous, c.holds, c.exceptions, c.violations));
        }
        out
    }

    /// Everything except timing, for comparing runs.
    pub fn fingerprint(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        copy.config.workers = 0;
        serde_json::to_string(&copy).expect("reports serialize")
    }
}

impl TheoremCounts {
    fn merge(&mut self, o: &TheoremCounts) {
        self.seen += o.seen;
        self.vacuous += o.vacuous;
        self.holds += o.holds;
        self.exceptions += o.exceptions;
        self.violations += o.violations;
        self.tau_exactly_one += o.tau_exactly_one;
        self.prefiltered += o.prefiltered;
    }
}

#[derive(Default)]
struct Partial {
    processed: usize,
    counts: BTreeMap<(TheoremId, usize), TheoremCounts>,
    violations: Vec<TheoremVerdict>,
    unconfirmed: Vec<TheoremVerdict>,
    exceptions: Vec<String>,
    lemmas: BTreeMap<LemmaId, LemmaCounts>,
    lemma_pairs: usize,
    lemma_violations: Vec<String>,
    lemma_sampled: Vec<String>,
}

impl Partial {
    fn merge(mut self, o: Partial) -> Partial {
        self.processed += o.processed;
        for (k, v) in o.counts {
            self.counts.entry(k).or_default().merge(&v);
        }
        self.violations.extend(o.violations);
        self.unconfirmed.extend(o.unconfirmed);
        self.exceptions.extend(o.exceptions);
        for (k, v) in o.lemmas {
            let e = self.lemmas.entry(k).or_default();
            e.instances += v.instances;
            e.non_vacuous += v.non_vacuous;
            e.violations += v.violations;
        }
        self.lemma_pairs += o.lemma_pairs;
        self.lemma_violations.extend(o.lemma_violations);
        self.lemma_sampled.extend(o.lemma_sampled);
        self
    }

    fn add_graph(&mut self, g: &Graph, cfg: &SweepConfig) {
        self.processed += 1;
        let facts = Facts::new(g);
        for &theorem in &cfg.theorems {
            let c = self.counts.entry((theorem, g.n())).or_default();
            c.seen += 1;
            if facts.prefiltered(theorem) {
                c.prefiltered += 1;
            }
            let v = facts.verdict(theorem);
            if theorem == TheoremId::T1 && !facts.prefiltered(theorem) && facts.tau() == ExactRational::ONE {
                c.tau_exactly_one += 1;
            }
            match v.status {
                Status::Holds => c.holds += 1,
                Status::Vacuous => c.vacuous += 1,
                Status::ExceptionPetersen => {
                    c.exceptions += 1;
                    self.exceptions.push(v.graph6);
                }
                Status::Violation => {
                    if verify_with_oracles(g, theorem).status == Status::Violation {
                        c.violations += 1;
                        self.violations.push(v);
                    } else {
                        self.unconfirmed.push(v);
                    }
                }
            }
        }
        if cfg.lemmas {
            let report = InvariantReport::compute(g);
            let outcome = run_suite(g, &report, cfg.suite);
            self.lemma_pairs += outcome.pairs;
            let code = write_graph6(g);
            if outcome.sampled {
                self.lemma_sampled.push(code.clone());
            }
            for v in &outcome.verdicts {
                let e = self.lemmas.entry(v.lemma).or_default();
                e.instances += 1;
                if v.hypothesis_met {
                    e.non_vacuous += 1;
                }
                if v.is_violation() {
                    e.violations += 1;
                    self.lemma_violations.push(v.to_json_line(&code));
                }
            }
        }
    }

    fn finish(mut self, cfg: SweepConfig, rejected: Vec<RejectedRecord>, started: Instant) -> SweepReport {
        let by_code = |a: &TheoremVerdict, b: &TheoremVerdict| (a.theorem, &a.graph6).cmp(&(b.theorem, &b.graph6));
        self.violations.sort_by(by_code);
        self.unconfirmed.sort_by(by_code);
        self.exceptions.sort();
        self.lemma_violations.sort();
        self.lemma_sampled.sort();
        let lemmas = if cfg.lemmas {
            LemmaId::ALL.iter().map(|&id| LemmaRow { lemma: id, counts: self.lemmas.remove(&id).unwrap_or_default() }).collect()
        } else {
            Vec::new()
        };
        SweepReport {
            schema: REPORT_SCHEMA,
            processed: self.processed,
            rejected,
            counts: self.counts.into_iter().map(|((theorem, n), counts)| CountRow { theorem, n, counts }).collect(),
            violations: self.violations,
            unconfirmed: self.unconfirmed,
            exceptions: self.exceptions,
            lemmas,
            lemma_pairs: self.lemma_pairs,
            lemma_violations: self.lemma_violations,
            lemma_sampled: self.lemma_sampled,
            elapsed_ms: started.elapsed().as_millis() as u64,
            config: cfg,
        }
    }
}

fn fold_graphs<'a, I>(graphs: I, cfg: &SweepConfig) -> Partial
where
    I: IntoParallelIterator<Item = &'a Graph>,
{
    graphs
        .into_par_iter()
        .fold(Partial::default, |mut p, g| {
            p.add_graph(g, cfg);
            p
        })
        .reduce(Partial::default, Partial::merge)
}

/// Verifies the selected bounds on every graph of the source. The report is
/// independent of the worker count apart from `elapsed_ms`.
pub fn sweep(cfg: SweepConfig) -> Result<SweepReport, SweepError> {
    if cfg.workers == 0 {
        return Err(SweepError::NoWorkers);
    }
    if cfg.theorems.is_empty() && !cfg.lemmas {
        return Err(SweepError::NoTheorems);
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().map_err(|e| SweepError::Pool(e.to_string()))?;
    let mut theorems = cfg.theorems.clone();
    theorems.sort();
    theorems.dedup();
    let cfg = SweepConfig { theorems, ..cfg };
    let (partial, rejected) = pool.install(|| match &cfg.source {
        SweepSource::Internal { min_n, max_n, max_degree, regular } => {
            if min_n > max_n {
                return Err(SweepError::EmptyRange { min: *min_n, max: *max_n });
            }
            let cap = match (max_degree, regular) {
                (Some(a), Some(b)) => Some((*a).min(*b)),
                (a, b) => a.or(*b),
            };
            if *max_n > DEFAULT_MAX_N && cap.is_none() && !cfg.allow_slow {
                return Err(SweepError::SlowSweep(*max_n));
            }
            let opts = EnumerationOptions { max_degree: cap };
            let keep = |g: &Graph| regular.map_or(true, |d| g.is_regular(d));
            let mut total = Partial::default();
            for n in (*min_n).max(1)..=*max_n {
                if n > DEFAULT_MAX_N && cap.is_none() {
                    let acc = Mutex::new(Partial::default());
                    par_for_each_connected_graph(n, opts, |g| {
                        if keep(&g) {
                            let mut p = Partial::default();
                            p.add_graph(&g, &cfg);
                            let mut guard = acc.lock().expect("no panics while merging");
                            *guard = std::mem::take(&mut *guard).merge(p);
                        }
                    })?;
                    total = total.merge(acc.into_inner().expect("no panics while merging"));
                } else {
                    let graphs: Vec<Graph> = enumerate_connected_graphs_with(n, opts)?.into_iter().filter(keep).collect();
                    total = total.merge(fold_graphs(&graphs, &cfg));
                }
            }
            Ok((total, Vec::new()))
        }
        SweepSource::Graph6 { lines, .. } => {
            let mut graphs = Vec::new();
            let mut rejected = Vec::new();
            for (i, line) in lines.iter().enumerate() {
                let record = line.trim();
                if record.is_empty() {
                    continue;
                }
                match parse_graph6(record) {
                    Ok(g) => graphs.push(g),
                    Err(e) => rejected.push(RejectedRecord { line: i + 1, reason: e.to_string() }),
                }
            }
            Ok((fold_graphs(&graphs, &cfg), rejected))
        }
    })?;
    Ok(partial.finish(cfg, rejected, started))
}
