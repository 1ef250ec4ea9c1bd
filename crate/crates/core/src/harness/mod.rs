//! Running enumerators on files: component splitting, timeouts, reports, and
//! cross-algorithm comparison.

mod guard;
mod report;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter};
use std::path::PathBuf;
use std::time::Duration;

pub use guard::{TimeoutGuard, POLL_INTERVAL};
pub use report::{Algorithm, Diagnostics, RunReport};

use crate::bottomup::{self, Pick};
use crate::error::{Error, Result};
use crate::graph::{load_graph_file, Backend, Format, Graph, Label, LoadOptions};
use crate::oracle;
use crate::sink::{SinkMode, SubgraphSink};
use crate::topdown;

/// Switches for the pruning rules and the debug state checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Stop expanding siblings once a child produced nothing (bottom-up).
    pub has_int_leaf: bool,
    /// Stop once fewer than `k` unguarded vertices remain (VSimple).
    pub k_component: bool,
    /// Emit the guarding set directly once it has `k` vertices (top-down).
    pub look_ahead: bool,
    /// Snapshot the enumeration state at every node entry and compare at
    /// exit. O(n) per node.
    pub check_restore: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { has_int_leaf: true, k_component: true, look_ahead: true, check_restore: false }
    }
}

impl EnumOptions {
    pub fn checked() -> Self {
        EnumOptions { check_restore: true, ..Self::default() }
    }
}

/// Runs one algorithm on a connected graph.
pub fn enumerate(
    g: &Graph,
    algorithm: Algorithm,
    k: usize,
    backend: Backend,
    sink: &mut SubgraphSink<'_>,
    options: &EnumOptions,
    guard: &mut TimeoutGuard<'_>,
) -> Result<RunReport> {
    match algorithm {
        Algorithm::Simple => bottomup::simple(g, k, sink, Pick::Back, options, guard),
        Algorithm::SimpleForward => bottomup::simple(g, k, sink, Pick::Front, options, guard),
        Algorithm::VSimple => bottomup::vsimple(g, k, sink, options, guard),
        Algorithm::TopDown => topdown::topdown(g, k, sink, backend, options, guard),
        Algorithm::Oracle => oracle::enumerate_oracle(g, k, sink, oracle::DEFAULT_LIMIT, guard),
    }
}

/// Runs one algorithm on every connected component with at least `k`
/// vertices and aggregates the reports. In collect mode the collected sets
/// are expressed in `g`'s vertex ids.
pub fn run_graph(
    g: &Graph,
    algorithm: Algorithm,
    k: usize,
    backend: Backend,
    sink: &mut SubgraphSink<'_>,
    options: &EnumOptions,
    guard: &mut TimeoutGuard<'_>,
) -> Result<RunReport> {
    if k == 0 {
        return Err(Error::OrderOutOfRange { k, n: g.n() });
    }
    let backend = if algorithm == Algorithm::TopDown { backend } else { Backend::List };
    let mut total = RunReport::empty(algorithm, backend, k);
    let components = g.components();
    if components.len() == 1 {
        if g.n() >= k {
            total.merge(&enumerate(g, algorithm, k, backend, sink, options, guard)?);
        }
        return Ok(total);
    }
    for comp in components.iter().filter(|c| c.len() >= k) {
        if guard.expired() {
            total.timed_out = true;
            break;
        }
        let sub = g.induced_subgraph(comp)?;
        let before = sink.collected().len();
        let report = enumerate(&sub, algorithm, k, backend, sink, options, guard)?;
        if sink.mode() == SinkMode::Collect {
            let mut sets = sink.take_collected();
            for set in &mut sets[before..] {
                for v in set.iter_mut() {
                    *v = comp[*v];
                }
                set.sort_unstable();
            }
            sink.restore_collected(sets);
        }
        total.merge(&report);
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Count,
    Stdout,
    File(PathBuf),
    Collect,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: Format,
    pub algorithm: Algorithm,
    pub backend: Backend,
    pub k: usize,
    pub output: Output,
    pub timeout: Option<Duration>,
    pub options: EnumOptions,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, format: Format, algorithm: Algorithm, k: usize) -> Self {
        RunConfig {
            input: input.into(),
            format,
            algorithm,
            backend: Backend::List,
            k,
            output: Output::Count,
            timeout: None,
            options: EnumOptions::default(),
        }
    }

    pub fn load(&self) -> Result<Graph> {
        let bit_matrix = self.algorithm == Algorithm::TopDown && self.backend == Backend::BitMatrix;
        load_graph_file(&self.input, LoadOptions { format: self.format, bit_matrix })
    }
}

/// Canonical form of an enumeration: labels sorted within each set, sets
/// sorted lexicographically.
pub type CanonicalSets = Vec<Vec<Label>>;

/// Result of [`run`]; `sets` is filled only for [`Output::Collect`].
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub report: RunReport,
    pub sets: Option<CanonicalSets>,
}

pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    let g = config.load()?;
    run_loaded(&g, config)
}

/// Like [`run`] on an already loaded graph.
pub fn run_loaded(g: &Graph, config: &RunConfig) -> Result<RunOutcome> {
    let mut guard = TimeoutGuard::new(config.timeout);
    let mut sets = None;
    let report = match &config.output {
        Output::Count => {
            let mut sink = SubgraphSink::count();
            run_graph(g, config.algorithm, config.k, config.backend, &mut sink, &config.options, &mut guard)?
        }
        Output::Stdout => {
            let stdout = io::stdout();
            let mut sink = SubgraphSink::writer(BufWriter::new(stdout.lock()));
            let r = run_graph(g, config.algorithm, config.k, config.backend, &mut sink, &config.options, &mut guard)?;
            sink.flush()?;
            r
        }
        Output::File(path) => {
            let mut sink = SubgraphSink::writer(BufWriter::new(File::create(path)?));
            let r = run_graph(g, config.algorithm, config.k, config.backend, &mut sink, &config.options, &mut guard)?;
            sink.flush()?;
            r
        }
        Output::Collect => {
            let mut sink = SubgraphSink::collect();
            let r = run_graph(g, config.algorithm, config.k, config.backend, &mut sink, &config.options, &mut guard)?;
            sets = Some(canonicalize_ids(g, sink.collected()));
            r
        }
    };
    Ok(RunOutcome { report, sets })
}

pub fn canonicalize_ids(g: &Graph, sets: &[Vec<usize>]) -> CanonicalSets {
    let mut out: CanonicalSets = sets
        .iter()
        .map(|s| {
            let mut labels: Vec<Label> = s.iter().map(|&v| g.label(v).clone()).collect();
            labels.sort();
            labels
        })
        .collect();
    out.sort();
    out
}

/// Reads a write-mode output file back into canonical form.
pub fn canonicalize_lines(reader: impl BufRead) -> Result<CanonicalSets> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let mut labels: Vec<Label> = line.split_whitespace().map(Label::parse).collect();
        if labels.is_empty() {
            continue;
        }
        labels.sort();
        out.push(labels);
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub reports: Vec<RunReport>,
    /// Canonical output of the first run.
    pub reference: CanonicalSets,
    /// Algorithms whose canonical output differs from the first run's.
    pub mismatches: Vec<Algorithm>,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs every config and checks that all canonical outputs coincide.
/// Configs must share input and `k` and use collect or file output.
pub fn compare_runs(configs: &[RunConfig]) -> Result<Comparison> {
    let first = configs.first().ok_or_else(|| Error::Config("nothing to compare".into()))?;
    if configs.iter().any(|c| c.input != first.input || c.k != first.k) {
        return Err(Error::Config("compared runs must share input and k".into()));
    }
    let mut reports = Vec::with_capacity(configs.len());
    let mut reference = None;
    let mut mismatches = Vec::new();
    for config in configs {
        let outcome = run(config)?;
        let sets = match (&config.output, outcome.sets) {
            (Output::Collect, Some(sets)) => sets,
            (Output::File(path), _) => canonicalize_lines(BufReader::new(File::open(path)?))?,
            _ => return Err(Error::Config("compare needs collect or file output".into())),
        };
        match &reference {
            None => reference = Some(sets),
            Some(r) if *r != sets => mismatches.push(config.algorithm),
            Some(_) => {}
        }
        reports.push(outcome.report);
    }
    Ok(Comparison { reports, reference: reference.unwrap_or_default(), mismatches })
}
