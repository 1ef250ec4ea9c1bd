//! Bottom-up enumerators: subgraphs grow one neighbor at a time from a
//! single root vertex until they reach order `k`.
//!
//! All three keep their working sets in flat arrays that are only appended
//! to while descending; each recursion level remembers the end positions and
//! truncates back on the way out, so undoing a level costs exactly what
//! building it cost.

mod simple;
mod vsimple;

pub use simple::simple;
pub use vsimple::{vsimple, EnumerationState};

use crate::error::Result;
use crate::graph::Graph;
use crate::harness::{EnumOptions, RunReport, TimeoutGuard};
use crate::sink::SubgraphSink;

/// Which end of the extension set the extension-set enumerator consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pick {
    /// Take the most recently added candidate (plain Simple).
    Back,
    /// Take the oldest candidate (Simple-Forward).
    Front,
}

pub fn enumerate_vsimple(g: &Graph, k: usize, sink: &mut SubgraphSink<'_>) -> Result<RunReport> {
    vsimple(g, k, sink, &EnumOptions::default(), &mut TimeoutGuard::unlimited())
}

pub fn enumerate_simple(g: &Graph, k: usize, sink: &mut SubgraphSink<'_>, pick: Pick) -> Result<RunReport> {
    simple(g, k, sink, pick, &EnumOptions::default(), &mut TimeoutGuard::unlimited())
}
