//! Enumeration of connected induced subgraphs of a fixed order `k`.
//!
//! Four enumerators share one graph representation:
//!
//! * [`bottomup::vsimple`] grows subgraphs from single vertices, using a
//!   guarding set of already-considered vertices to avoid duplicates.
//! * [`bottomup::simple`] is the extension-set enumerator (pick from the back
//!   of the extension set, or from the front for the forward variant).
//! * [`topdown::topdown`] starts from the whole graph and repeatedly deletes
//!   non-articulation vertices until `k` remain.
//! * [`oracle::brute_force_cise`] scans every `k`-subset; it is the reference
//!   used by the test suites.
//!
//! All enumerators report into a [`SubgraphSink`] and return a [`RunReport`].
//! The [`harness`] module adds file loading, component splitting, timeouts,
//! and cross-algorithm comparison.

pub mod bottomup;
pub mod error;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod sink;
pub mod topdown;

mod context;

pub use error::{Error, Result};
pub use graph::{Backend, Graph, Label, MutableView, VertexSetView};
pub use harness::{Algorithm, Diagnostics, EnumOptions, RunConfig, RunReport, TimeoutGuard};
pub use sink::{SinkMode, SubgraphSink};
