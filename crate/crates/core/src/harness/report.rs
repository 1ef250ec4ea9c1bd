use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::Backend;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Simple,
    SimpleForward,
    VSimple,
    TopDown,
    Oracle,
}

impl Algorithm {
    pub const ENUMERATORS: [Algorithm; 4] =
        [Algorithm::Simple, Algorithm::SimpleForward, Algorithm::VSimple, Algorithm::TopDown];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Simple => "simple",
            Algorithm::SimpleForward => "simple-forward",
            Algorithm::VSimple => "vsimple",
            Algorithm::TopDown => "topdown",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "simple" => Ok(Algorithm::Simple),
            "simple-forward" => Ok(Algorithm::SimpleForward),
            "vsimple" => Ok(Algorithm::VSimple),
            "topdown" => Ok(Algorithm::TopDown),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(Error::Config(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Counters filled in when [`EnumOptions::check_restore`](super::EnumOptions)
/// is on, plus the per-level deletable-set growth observed by the top-down
/// enumerator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Node exits whose state was compared against the entry snapshot.
    pub restore_checks: u64,
    pub restore_violations: u64,
    /// Nodes where the sets were not pairwise disjoint or a candidate was
    /// not adjacent to the current subgraph.
    pub invariant_violations: u64,
    /// Largest number of vertices that became deletable after one deletion.
    pub max_added_per_level: usize,
    /// Number of delete/update levels pushed by the top-down enumerator.
    pub delta_levels: u64,
    /// Sets the top-down enumerator emitted from a full guarding set rather
    /// than from a leaf.
    pub look_ahead_emits: u64,
}

impl Diagnostics {
    pub fn merge(&mut self, other: &Diagnostics) {
        self.restore_checks += other.restore_checks;
        self.restore_violations += other.restore_violations;
        self.invariant_violations += other.invariant_violations;
        self.max_added_per_level = self.max_added_per_level.max(other.max_added_per_level);
        self.delta_levels += other.delta_levels;
        self.look_ahead_emits += other.look_ahead_emits;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub backend: Backend,
    pub k: usize,
    /// Emitted sets. A lower bound when `timed_out` is set.
    pub count: u64,
    /// Enumeration time only; graph loading is excluded.
    pub seconds: f64,
    pub nodes_visited: u64,
    pub timed_out: bool,
    pub diagnostics: Diagnostics,
}

impl RunReport {
    pub fn empty(algorithm: Algorithm, backend: Backend, k: usize) -> Self {
        RunReport {
            algorithm,
            backend,
            k,
            count: 0,
            seconds: 0.0,
            nodes_visited: 0,
            timed_out: false,
            diagnostics: Diagnostics::default(),
        }
    }

    pub fn merge(&mut self, other: &RunReport) {
        self.count += other.count;
        self.seconds += other.seconds;
        self.nodes_visited += other.nodes_visited;
        self.timed_out |= other.timed_out;
        self.diagnostics.merge(&other.diagnostics);
    }

    /// `algo=<name> k=<int> count=<int> nodes=<int> seconds=<float> timeout=<bool>`
    pub fn line(&self) -> String {
        format!(
            "algo={} k={} count={} nodes={} seconds={:.6} timeout={}",
            self.algorithm, self.k, self.count, self.nodes_visited, self.seconds, self.timed_out
        )
    }

    pub fn summary(&self) -> String {
        let partial = if self.timed_out { " (partial: timed out)" } else { "" };
        format!(
            "{} [{}] k={}: {} connected induced subgraphs{} in {:.3}s, {} enumeration nodes",
            self.algorithm, self.backend, self.k, self.count, partial, self.seconds, self.nodes_visited
        )
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}
