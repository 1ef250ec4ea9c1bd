//! Consumers for enumerated vertex sets.

use std::io::{self, Write};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SinkMode {
    Count,
    Write,
    Collect,
}

/// Receives every enumerated set.
///
/// * count mode only counts;
/// * write mode writes one line per set: the original labels, ascending,
///   separated by single spaces;
/// * collect mode keeps a sorted copy of the internal ids.
pub struct SubgraphSink<'w> {
    mode: SinkMode,
    emitted: u64,
    writer: Option<Box<dyn Write + 'w>>,
    collected: Vec<Vec<usize>>,
    scratch: Vec<usize>,
    line: Vec<u8>,
}

impl<'w> SubgraphSink<'w> {
    pub fn count() -> Self {
        Self::with_mode(SinkMode::Count, None)
    }

    pub fn collect() -> Self {
        Self::with_mode(SinkMode::Collect, None)
    }

    pub fn writer(out: impl Write + 'w) -> Self {
        Self::with_mode(SinkMode::Write, Some(Box::new(out)))
    }

    fn with_mode(mode: SinkMode, writer: Option<Box<dyn Write + 'w>>) -> Self {
        SubgraphSink { mode, emitted: 0, writer, collected: Vec::new(), scratch: Vec::new(), line: Vec::new() }
    }

    pub fn mode(&self) -> SinkMode {
        self.mode
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Whether `emit` looks at the members at all. Count sinks do not, which
    /// lets enumerators skip materializing the set.
    pub fn needs_members(&self) -> bool {
        self.mode != SinkMode::Count
    }

    pub fn emit(&mut self, g: &Graph, set: &[usize]) -> io::Result<()> {
        match self.mode {
            SinkMode::Count => {}
            SinkMode::Collect => {
                let mut copy = set.to_vec();
                copy.sort_unstable();
                self.collected.push(copy);
            }
            SinkMode::Write => {
                self.scratch.clear();
                self.scratch.extend_from_slice(set);
                self.scratch.sort_unstable_by(|&a, &b| g.label(a).cmp(g.label(b)));
                self.line.clear();
                for (i, &v) in self.scratch.iter().enumerate() {
                    if i > 0 {
                        self.line.push(b' ');
                    }
                    write!(self.line, "{}", g.label(v))?;
                }
                self.line.push(b'\n');
                if let Some(w) = self.writer.as_mut() {
                    w.write_all(&self.line)?;
                }
            }
        }
        self.emitted += 1;
        Ok(())
    }

    /// Counts a set without inspecting it. Only valid in count mode.
    pub(crate) fn emit_uncounted_members(&mut self) {
        debug_assert_eq!(self.mode, SinkMode::Count);
        self.emitted += 1;
    }

    pub fn collected(&self) -> &[Vec<usize>] {
        &self.collected
    }

    pub fn take_collected(&mut self) -> Vec<Vec<usize>> {
        std::mem::take(&mut self.collected)
    }

    pub(crate) fn restore_collected(&mut self, sets: Vec<Vec<usize>>) {
        self.collected = sets;
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match self.writer.as_mut() {
            Some(w) => w.flush(),
            None => Ok(()),
        }
    }
}
