use super::Pick;
use crate::context::{validate, Ctx};
use crate::error::Result;
use crate::graph::{Backend, Graph, VertexSetView};
use crate::harness::{Algorithm, EnumOptions, RunReport, TimeoutGuard};
use crate::sink::SubgraphSink;

/// Extension-set enumerator. Every subgraph is grown from its smallest
/// vertex `root`; a newly absorbed vertex `w` contributes only its exclusive
/// neighbors (larger than `root`, outside the closed neighborhood of the
/// current subgraph) to the extension set.
///
/// The extension set of a node is the window `ext[lo..hi]`. A child's window
/// is the parent's unconsumed part followed by the exclusive neighbors of the
/// consumed vertex, written in place. Front picks write past the window;
/// back picks overwrite the consumed slot and what follows it, so those
/// writes are recorded in `undo` and rolled back after the child returns.
#[derive(Clone, PartialEq, Eq)]
struct State {
    current: VertexSetView,
    ext: Vec<usize>,
    undo: Vec<(usize, usize)>,
    closed: Vec<bool>,
    closed_log: Vec<usize>,
}

struct Simple<'g, 'o> {
    g: &'g Graph,
    options: &'o EnumOptions,
    k: usize,
    pick: Pick,
    root: usize,
    st: State,
}

impl Simple<'_, '_> {
    fn run(&mut self, ctx: &mut Ctx<'_, '_, '_>) {
        for v in 0..self.g.n() {
            if ctx.stopped {
                break;
            }
            self.root = v;
            self.st.current.push(v);
            self.close(v);
            for &w in self.g.neighbors(v) {
                self.close(w);
                if w > v {
                    self.st.ext.push(w);
                }
            }
            let hi = self.st.ext.len();
            self.node(ctx, 0, hi);
            self.st.ext.clear();
            self.reopen(0);
            self.st.current.pop();
        }
    }

    #[inline]
    fn close(&mut self, v: usize) {
        if !self.st.closed[v] {
            self.st.closed[v] = true;
            self.st.closed_log.push(v);
        }
    }

    fn reopen(&mut self, mark: usize) {
        for &v in &self.st.closed_log[mark..] {
            self.st.closed[v] = false;
        }
        self.st.closed_log.truncate(mark);
    }

    /// Writes the exclusive neighbors of `w` starting at `pos`; returns the
    /// end of the written run.
    fn write_exclusive(&mut self, pos: usize, w: usize) -> usize {
        let st = &mut self.st;
        let mut p = pos;
        for &x in self.g.neighbors(w) {
            if x > self.root && !st.closed[x] {
                if p < st.ext.len() {
                    st.undo.push((p, st.ext[p]));
                    st.ext[p] = x;
                } else {
                    st.ext.push(x);
                }
                p += 1;
            }
        }
        p
    }

    fn node(&mut self, ctx: &mut Ctx<'_, '_, '_>, lo: usize, hi: usize) -> bool {
        if !ctx.enter() {
            return false;
        }
        if self.st.current.len() == self.k {
            ctx.emit(self.g, self.st.current.as_slice());
            return true;
        }
        let snapshot = self.options.check_restore.then(|| {
            self.check_invariants(ctx, lo, hi);
            self.st.clone()
        });

        let mut has_int_leaf = false;
        for step in 0..hi - lo {
            if ctx.stopped {
                break;
            }
            let (i, write_at, child_lo) = match self.pick {
                Pick::Front => (lo + step, hi, lo + step + 1),
                Pick::Back => (hi - 1 - step, hi - 1 - step, lo),
            };
            let w = self.st.ext[i];
            let old_len = self.st.ext.len();
            let undo_mark = self.st.undo.len();
            let closed_mark = self.st.closed_log.len();

            let end = self.write_exclusive(write_at, w);
            for &x in self.g.neighbors(w) {
                self.close(x);
            }
            self.st.current.push(w);

            let produced = self.node(ctx, child_lo, end);

            self.st.current.pop();
            self.reopen(closed_mark);
            let st = &mut self.st;
            st.ext.truncate(old_len);
            while st.undo.len() > undo_mark {
                let (p, x) = st.undo.pop().unwrap();
                st.ext[p] = x;
            }

            if produced {
                has_int_leaf = true;
            } else if self.options.has_int_leaf {
                break;
            }
        }

        if let Some(before) = snapshot {
            ctx.diag.restore_checks += 1;
            if before != self.st {
                ctx.diag.restore_violations += 1;
            }
        }
        has_int_leaf
    }

    /// Extension set disjoint from C, duplicate free, above the root, and
    /// inside the closed neighborhood of C.
    fn check_invariants(&self, ctx: &mut Ctx<'_, '_, '_>, lo: usize, hi: usize) {
        let st = &self.st;
        let window = &st.ext[lo..hi];
        let mut sorted = window.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let ok = sorted.len() == window.len()
            && window.iter().all(|&x| {
                x > self.root
                    && !st.current.contains(x)
                    && st.closed[x]
                    && self.g.neighbors(x).iter().any(|&c| st.current.contains(c))
            });
        if !ok {
            ctx.diag.invariant_violations += 1;
        }
    }
}

/// Extension-set enumeration of every connected induced subgraph of order
/// `k` of the connected graph `g`. [`Pick::Front`] gives the forward variant.
pub fn simple(
    g: &Graph,
    k: usize,
    sink: &mut SubgraphSink<'_>,
    pick: Pick,
    options: &EnumOptions,
    guard: &mut TimeoutGuard<'_>,
) -> Result<RunReport> {
    validate(g, k)?;
    let n = g.n();
    let mut ctx = Ctx::new(sink, guard);
    let mut e = Simple {
        g,
        options,
        k,
        pick,
        root: 0,
        st: State {
            current: VertexSetView::new(n),
            ext: Vec::new(),
            undo: Vec::new(),
            closed: vec![false; n],
            closed_log: Vec::new(),
        },
    };
    e.run(&mut ctx);
    let algorithm = match pick {
        Pick::Back => Algorithm::Simple,
        Pick::Front => Algorithm::SimpleForward,
    };
    ctx.finish(algorithm, Backend::List, k)
}
