use std::io;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Backend, Graph};
use crate::harness::{Algorithm, Diagnostics, RunReport, TimeoutGuard};
use crate::sink::SubgraphSink;

/// Rejects `k` outside `1..=n` and disconnected graphs.
pub(crate) fn validate(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.n() {
        return Err(Error::OrderOutOfRange { k, n: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Per-run bookkeeping shared by every enumerator: node counting, timeout
/// polling, sink errors.
pub(crate) struct Ctx<'a, 'w, 'g> {
    pub sink: &'a mut SubgraphSink<'w>,
    guard: &'a mut TimeoutGuard<'g>,
    pub nodes: u64,
    pub stopped: bool,
    pub diag: Diagnostics,
    io_error: Option<io::Error>,
    started: Instant,
    emitted_before: u64,
}

impl<'a, 'w, 'g> Ctx<'a, 'w, 'g> {
    pub fn new(sink: &'a mut SubgraphSink<'w>, guard: &'a mut TimeoutGuard<'g>) -> Self {
        let emitted_before = sink.emitted();
        let stopped = guard.expired();
        Ctx {
            sink,
            guard,
            nodes: 0,
            stopped,
            diag: Diagnostics::default(),
            io_error: None,
            started: Instant::now(),
            emitted_before,
        }
    }

    /// Counts a new enumeration-tree node. Returns false once the run must
    /// unwind.
    #[inline]
    pub fn enter(&mut self) -> bool {
        self.nodes += 1;
        if self.guard.tick(self.nodes) {
            self.stopped = true;
        }
        !self.stopped
    }

    #[inline]
    pub fn emit(&mut self, g: &Graph, set: &[usize]) {
        if let Err(e) = self.sink.emit(g, set) {
            self.io_error = Some(e);
            self.stopped = true;
        }
    }

    /// Emits a set that is only built when the sink looks at members.
    #[inline]
    pub fn emit_lazy(&mut self, g: &Graph, buf: &mut Vec<usize>, fill: impl FnOnce(&mut Vec<usize>)) {
        if self.sink.needs_members() {
            buf.clear();
            fill(buf);
            self.emit(g, buf);
        } else {
            self.sink.emit_uncounted_members();
        }
    }

    pub fn finish(self, algorithm: Algorithm, backend: Backend, k: usize) -> Result<RunReport> {
        let seconds = self.started.elapsed().as_secs_f64();
        if let Some(e) = self.io_error {
            return Err(Error::Io(e));
        }
        Ok(RunReport {
            algorithm,
            backend,
            k,
            count: self.sink.emitted() - self.emitted_before,
            seconds,
            nodes_visited: self.nodes,
            timed_out: self.guard.expired(),
            diagnostics: self.diag,
        })
    }
}
