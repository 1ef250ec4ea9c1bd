//! Python bindings: load or build graphs, enumerate connected induced
//! subgraphs of order k with any of the algorithms, compare algorithms.

use std::path::PathBuf;
use std::thread;
use std::time::Duration;

use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use cise::graph::{self as cg, Format, GraphBuilder, LoadOptions};
use cise::harness::{self, Output, RunConfig};
use cise::oracle;
use cise::{Algorithm, Backend, EnumOptions, Error, Label, RunReport, SubgraphSink, TimeoutGuard};

// top-down recursion is as deep as n - k
const STACK_SIZE: usize = 1 << 30;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        Error::DeletableBound { .. } | Error::NothingToRestore | Error::IdentityFailed { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse<T: std::str::FromStr>(what: &str, s: &str) -> PyResult<T> {
    s.parse().map_err(|_| PyValueError::new_err(format!("unknown {what} {s:?}")))
}

#[derive(IntoPyObject)]
enum PyLabel {
    Int(i64),
    Text(String),
}

impl From<&Label> for PyLabel {
    fn from(l: &Label) -> Self {
        match l {
            Label::Int(i) => PyLabel::Int(*i),
            Label::Text(s) => PyLabel::Text(s.clone()),
        }
    }
}

#[derive(FromPyObject)]
enum LabelArg {
    Int(i64),
    Text(String),
}

impl From<LabelArg> for Label {
    fn from(a: LabelArg) -> Self {
        match a {
            LabelArg::Int(i) => Label::Int(i),
            LabelArg::Text(s) => Label::Text(s),
        }
    }
}

/// Undirected simple graph. Vertices are numbered 0..n in order of first
/// appearance; `labels()` gives the names they had in the input.
#[pyclass(name = "Graph", module = "cise", frozen)]
struct PyGraph {
    inner: cg::Graph,
}

#[pymethods]
impl PyGraph {
    /// Builds a graph from an iterable of (u, v) pairs of ints or strings.
    #[new]
    fn new(edges: Vec<(LabelArg, LabelArg)>) -> PyResult<Self> {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(u.into(), v.into());
        }
        Ok(PyGraph { inner: b.build().map_err(to_py)? })
    }

    /// Reads an edge list or MatrixMarket file. `format` is "edges" or
    /// "mtx"; by default it follows the file extension.
    #[staticmethod]
    #[pyo3(signature = (path, format=None))]
    fn load(path: PathBuf, format: Option<&str>) -> PyResult<Self> {
        let format = match format {
            Some(f) => parse::<Format>("format", f)?,
            None => Format::from_path(&path),
        };
        let inner = cg::load_graph_file(&path, LoadOptions::new(format)).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.checked_neighbors(v).map_err(to_py)?.to_vec())
    }

    fn labels(&self) -> Vec<PyLabel> {
        self.inner.labels().iter().map(PyLabel::from).collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Vertices whose removal keeps the graph connected.
    fn non_articulation_points(&self) -> PyResult<Vec<usize>> {
        if !self.inner.is_connected() {
            return Err(to_py(Error::Disconnected));
        }
        Ok(cg::non_articulation_points(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Outcome of one enumeration run.
#[pyclass(name = "Report", module = "cise", frozen, get_all)]
struct PyReport {
    algorithm: String,
    backend: String,
    k: usize,
    count: u64,
    seconds: f64,
    nodes_visited: u64,
    timed_out: bool,
    restore_violations: u64,
    invariant_violations: u64,
    line: String,
}

impl From<&RunReport> for PyReport {
    fn from(r: &RunReport) -> Self {
        PyReport {
            algorithm: r.algorithm.name().to_string(),
            backend: r.backend.name().to_string(),
            k: r.k,
            count: r.count,
            seconds: r.seconds,
            nodes_visited: r.nodes_visited,
            timed_out: r.timed_out,
            restore_violations: r.diagnostics.restore_violations,
            invariant_violations: r.diagnostics.invariant_violations,
            line: r.line(),
        }
    }
}

#[pymethods]
impl PyReport {
    fn __str__(&self) -> String {
        self.line.clone()
    }

    fn __repr__(&self) -> String {
        format!("Report({})", self.line)
    }
}

/// Runs `f` on a thread with a deep stack, without holding the GIL.
fn off_thread<T: Send>(py: Python<'_>, f: impl FnOnce() -> T + Send) -> PyResult<T> {
    py.detach(|| {
        thread::scope(|s| {
            thread::Builder::new()
                .stack_size(STACK_SIZE)
                .spawn_scoped(s, f)
                .map_err(|e| PyOSError::new_err(e.to_string()))?
                .join()
                .map_err(|_| PyRuntimeError::new_err("enumeration thread panicked"))
        })
    })
}

fn timeout(seconds: Option<f64>) -> PyResult<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| PyValueError::new_err(format!("invalid timeout {s}"))))
        .transpose()
}

/// Enumerates the connected induced subgraphs of order `k` of every
/// component. Returns `(report, sets)`; `sets` holds label lists in
/// emission order, or is None with `count_only=True`.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (graph, k, algorithm="topdown", backend="list", count_only=false, timeout=None, checked=false))]
fn enumerate(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    backend: &str,
    count_only: bool,
    timeout: Option<f64>,
    checked: bool,
) -> PyResult<(PyReport, Option<Vec<Vec<PyLabel>>>)> {
    let algorithm: Algorithm = parse("algorithm", algorithm)?;
    let backend: Backend = parse("backend", backend)?;
    let budget = self::timeout(timeout)?;
    let options = if checked { EnumOptions::checked() } else { EnumOptions::default() };
    let g = &graph.inner;
    let (report, sets) = off_thread(py, || {
        let mut sink = if count_only { SubgraphSink::count() } else { SubgraphSink::collect() };
        let mut guard = TimeoutGuard::new(budget);
        harness::run_graph(g, algorithm, k, backend, &mut sink, &options, &mut guard)
            .map(|r| (r, sink.take_collected()))
    })?
    .map_err(to_py)?;
    let sets = (!count_only).then(|| {
        sets.iter()
            .map(|set| {
                let mut labels: Vec<&Label> = set.iter().map(|&v| g.label(v)).collect();
                labels.sort();
                labels.into_iter().map(PyLabel::from).collect()
            })
            .collect()
    });
    Ok((PyReport::from(&report), sets))
}

/// Number of connected induced subgraphs of order `k`.
#[pyfunction]
#[pyo3(signature = (graph, k, algorithm="topdown", backend="list"))]
fn count(py: Python<'_>, graph: &PyGraph, k: usize, algorithm: &str, backend: &str) -> PyResult<u64> {
    let (report, _) = enumerate(py, graph, k, algorithm, backend, true, None, false)?;
    Ok(report.count)
}

/// Brute-force reference: sorted vertex-id sets, in lexicographic order.
#[pyfunction]
#[pyo3(signature = (graph, k, limit=oracle::DEFAULT_LIMIT))]
fn brute_force(graph: &PyGraph, k: usize, limit: usize) -> PyResult<Vec<Vec<usize>>> {
    Ok(oracle::brute_force_cise_with_limit(&graph.inner, k, limit).map_err(to_py)?.sets)
}

/// Loads `path` and runs one algorithm in count mode, like the command
/// line tool with `--count-only`.
#[pyfunction]
#[pyo3(signature = (path, k, algorithm="topdown", backend="list", format=None, timeout=None))]
fn run(
    py: Python<'_>,
    path: PathBuf,
    k: usize,
    algorithm: &str,
    backend: &str,
    format: Option<&str>,
    timeout: Option<f64>,
) -> PyResult<PyReport> {
    let format = match format {
        Some(f) => parse("format", f)?,
        None => Format::from_path(&path),
    };
    let mut config = RunConfig::new(path, format, parse("algorithm", algorithm)?, k);
    config.backend = parse("backend", backend)?;
    config.timeout = self::timeout(timeout)?;
    config.output = Output::Count;
    let outcome = off_thread(py, || harness::run(&config))?.map_err(to_py)?;
    Ok(PyReport::from(&outcome.report))
}

/// Runs several algorithms on `path` and checks that they produce the same
/// sets. Returns `(equal, reports)`.
#[pyfunction]
#[pyo3(signature = (path, k, algorithms=vec!["simple".to_string(), "simple-forward".to_string(), "vsimple".to_string(), "topdown".to_string()], format=None))]
fn compare(
    py: Python<'_>,
    path: PathBuf,
    k: usize,
    algorithms: Vec<String>,
    format: Option<&str>,
) -> PyResult<(bool, Vec<PyReport>)> {
    let format = match format {
        Some(f) => parse("format", f)?,
        None => Format::from_path(&path),
    };
    let configs = algorithms
        .iter()
        .map(|a| Ok(RunConfig { output: Output::Collect, ..RunConfig::new(&path, format, parse("algorithm", a)?, k) }))
        .collect::<PyResult<Vec<_>>>()?;
    let cmp = off_thread(py, || harness::compare_runs(&configs))?.map_err(to_py)?;
    Ok((cmp.equal(), cmp.reports.iter().map(PyReport::from).collect()))
}

#[pymodule]
#[pyo3(name = "cise")]
fn cise_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add("ALGORITHMS", ["simple", "simple-forward", "vsimple", "topdown", "oracle"])?;
    Ok(())
}
