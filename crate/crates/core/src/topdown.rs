//! Top-down enumeration: start from the whole graph and delete deletable
//! (non-articulation) vertices until `k` remain.
//!
//! A guarding set `Y` holds the vertices that every subgraph in the current
//! subtree must keep. After the branch that deletes `u` is finished, `u` is
//! guarded for the remaining siblings, so no subgraph is reached twice. Once
//! `|Y| = k` the only remaining candidate is `Y` itself, which is emitted
//! directly if it is connected (look-ahead).
//!
//! Deleting one deletable vertex turns at most one articulation point into a
//! deletable vertex. The candidate list of a child is therefore the parent's
//! list minus some vertices plus at most one; [`DeltaLog`] records exactly
//! that difference per level.

use crate::context::{validate, Ctx};
use crate::error::{Error, Result};
use crate::graph::{ArticulationScratch, Backend, Graph, MutableView, SubsetScratch, VertexSetView};
use crate::harness::{Algorithm, EnumOptions, RunReport, TimeoutGuard};
use crate::sink::SubgraphSink;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct LevelMark {
    deleted: usize,
    removed_start: usize,
    added_start: usize,
    parent_lo: usize,
}

/// Per-level changes of the deletable candidate list along the current
/// root-to-node path.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaLog {
    removed: Vec<usize>,
    added: Vec<usize>,
    levels: Vec<LevelMark>,
}

/// One level of a [`DeltaLog`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelDelta<'a> {
    pub deleted: usize,
    /// Former candidates that became articulation points.
    pub removed: &'a [usize],
    /// The former articulation point that became deletable, if any.
    pub added: Option<usize>,
}

impl DeltaLog {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, i: usize) -> LevelDelta<'_> {
        let mark = self.levels[i];
        let removed_end = self.levels.get(i + 1).map_or(self.removed.len(), |m| m.removed_start);
        let added_end = self.levels.get(i + 1).map_or(self.added.len(), |m| m.added_start);
        LevelDelta {
            deleted: mark.deleted,
            removed: &self.removed[mark.removed_start..removed_end],
            added: self.added[mark.added_start..added_end].first().copied(),
        }
    }

    pub fn path_removed(&self) -> usize {
        self.removed.len()
    }

    pub fn path_added(&self) -> usize {
        self.added.len()
    }
}

/// Mutable state of a top-down run: the current subgraph as a deletion view,
/// the stacked candidate windows, the guarding set, and the delta log.
#[derive(Clone, Debug)]
pub struct TopDownState<'g> {
    k: usize,
    view: MutableView<'g>,
    windows: Vec<usize>,
    lo: usize,
    guarded: VertexSetView,
    delta: DeltaLog,
    tarjan: ArticulationScratch,
    deletable: Vec<usize>,
    deletable_stamp: Vec<u32>,
    parent_stamp: Vec<u32>,
    epoch: u32,
}

impl<'g> TopDownState<'g> {
    /// State at the root: the whole graph, its deletable vertices as
    /// candidates, nothing guarded.
    pub fn new(g: &'g Graph, k: usize, backend: Backend) -> Result<Self> {
        validate(g, k)?;
        let n = g.n();
        let view = MutableView::new(g, backend);
        let mut tarjan = ArticulationScratch::default();
        let mut windows = Vec::with_capacity(2 * n);
        tarjan.non_articulation_points(&view, &mut windows);
        Ok(TopDownState {
            k,
            view,
            windows,
            lo: 0,
            guarded: VertexSetView::new(n),
            delta: DeltaLog::default(),
            tarjan,
            deletable: Vec::new(),
            deletable_stamp: vec![0; n],
            parent_stamp: vec![0; n],
            epoch: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn view(&self) -> &MutableView<'g> {
        &self.view
    }

    /// Deletable, unguarded vertices of the current subgraph, in iteration
    /// order.
    pub fn candidates(&self) -> &[usize] {
        &self.windows[self.lo..]
    }

    pub fn guarded(&self) -> &VertexSetView {
        &self.guarded
    }

    pub fn guard(&mut self, v: usize) {
        self.guarded.push(v);
    }

    pub fn guard_mark(&self) -> usize {
        self.guarded.mark()
    }

    pub fn restore_guarded(&mut self, mark: usize) {
        self.guarded.restore(mark);
    }

    pub fn delta_log(&self) -> &DeltaLog {
        &self.delta
    }

    fn next_epoch(&mut self) -> u32 {
        if self.epoch == u32::MAX {
            self.deletable_stamp.fill(0);
            self.parent_stamp.fill(0);
            self.epoch = 0;
        }
        self.epoch += 1;
        self.epoch
    }

    /// Deletes candidate `u` and builds the child candidate list.
    pub fn delete_candidate(&mut self, u: usize) -> Result<LevelDelta<'_>> {
        if !self.candidates().contains(&u) {
            return Err(Error::NotDeletable(u));
        }
        self.view.delete(u)?;
        self.update_deletable_incremental(u)
    }

    /// After `u` was deleted from the view: recomputes the deletable set,
    /// keeps the surviving parent candidates in their order, appends the at
    /// most one newly deletable vertex, and pushes the difference as a new
    /// delta level.
    pub fn update_deletable_incremental(&mut self, u: usize) -> Result<LevelDelta<'_>> {
        if self.view.last_deleted() != Some(u) {
            return Err(Error::Config(format!("vertex {u} was not the last deletion")));
        }
        self.tarjan.non_articulation_points(&self.view, &mut self.deletable);
        let epoch = self.next_epoch();
        for &x in &self.deletable {
            self.deletable_stamp[x] = epoch;
        }
        let hi = self.windows.len();
        let removed_start = self.delta.removed.len();
        let added_start = self.delta.added.len();
        for j in self.lo..hi {
            let v = self.windows[j];
            self.parent_stamp[v] = epoch;
            if v == u || self.guarded.contains(v) {
                continue;
            }
            if self.deletable_stamp[v] == epoch {
                self.windows.push(v);
            } else {
                self.delta.removed.push(v);
            }
        }
        for &x in &self.deletable {
            if self.parent_stamp[x] != epoch && !self.guarded.contains(x) {
                self.delta.added.push(x);
            }
        }
        let added = self.delta.added.len() - added_start;
        if added > 1 {
            self.windows.truncate(hi);
            self.delta.removed.truncate(removed_start);
            self.delta.added.truncate(added_start);
            return Err(Error::DeletableBound { deleted: u, added });
        }
        if let Some(&a) = self.delta.added.get(added_start) {
            self.windows.push(a);
        }
        self.delta.levels.push(LevelMark { deleted: u, removed_start, added_start, parent_lo: self.lo });
        self.lo = hi;
        Ok(self.delta.level(self.delta.depth() - 1))
    }

    /// Pops one delta level and undoes the matching deletion.
    pub fn restore_level(&mut self) -> Result<usize> {
        let mark = self.delta.levels.pop().ok_or(Error::NothingToRestore)?;
        self.windows.truncate(self.lo);
        self.lo = mark.parent_lo;
        self.delta.removed.truncate(mark.removed_start);
        self.delta.added.truncate(mark.added_start);
        let v = self.view.restore_last()?;
        debug_assert_eq!(v, mark.deleted);
        Ok(v)
    }

    /// Comparable snapshot of everything a node must leave unchanged.
    fn snapshot(&self) -> Snapshot {
        Snapshot {
            alive: self.view.alive_mask().to_vec(),
            rows: self.view.bit_rows().cloned(),
            windows: self.windows.clone(),
            lo: self.lo,
            guarded: self.guarded.clone(),
            delta: self.delta.clone(),
        }
    }
}

#[derive(PartialEq, Eq)]
struct Snapshot {
    alive: Vec<bool>,
    rows: Option<crate::graph::BitMatrix>,
    windows: Vec<usize>,
    lo: usize,
    guarded: VertexSetView,
    delta: DeltaLog,
}

struct TopDown<'g, 'o> {
    g: &'g Graph,
    options: &'o EnumOptions,
    st: TopDownState<'g>,
    connectivity: SubsetScratch,
    out: Vec<usize>,
    error: Option<Error>,
}

impl TopDown<'_, '_> {
    fn node(&mut self, ctx: &mut Ctx<'_, '_, '_>) {
        if !ctx.enter() {
            return;
        }
        let k = self.st.k;
        if self.st.view.alive_count() == k {
            if self.options.check_restore && !self.st.view.is_connected() {
                ctx.diag.invariant_violations += 1;
            }
            let view = &self.st.view;
            ctx.emit_lazy(self.g, &mut self.out, |buf| buf.extend(view.alive_vertices()));
            return;
        }
        let snapshot = self.options.check_restore.then(|| {
            self.check_invariants(ctx);
            self.st.snapshot()
        });

        let lo = self.st.lo;
        let hi = self.st.windows.len();
        let guard_mark = self.st.guard_mark();
        for i in lo..hi {
            if ctx.stopped {
                break;
            }
            let u = self.st.windows[i];
            if let Err(e) = self.st.view.delete(u) {
                self.fail(ctx, e);
                break;
            }
            match self.st.update_deletable_incremental(u) {
                Ok(level) => {
                    let added = usize::from(level.added.is_some());
                    ctx.diag.max_added_per_level = ctx.diag.max_added_per_level.max(added);
                    ctx.diag.delta_levels += 1;
                }
                Err(e) => {
                    let _ = self.st.view.restore_last();
                    self.fail(ctx, e);
                    break;
                }
            }

            self.node(ctx);

            if let Err(e) = self.st.restore_level() {
                self.fail(ctx, e);
                break;
            }
            self.st.guard(u);
            if self.options.look_ahead && self.st.guarded.len() == k {
                if self.connectivity.is_connected(self.g, self.st.guarded.as_slice()) {
                    ctx.emit(self.g, self.st.guarded.as_slice());
                    ctx.diag.look_ahead_emits += 1;
                }
                break;
            }
        }
        self.st.restore_guarded(guard_mark);

        if let Some(before) = snapshot {
            ctx.diag.restore_checks += 1;
            if before != self.st.snapshot() {
                ctx.diag.restore_violations += 1;
            }
        }
    }

    fn fail(&mut self, ctx: &mut Ctx<'_, '_, '_>, e: Error) {
        ctx.stopped = true;
        self.error.get_or_insert(e);
    }

    /// Connected view, guarded vertices alive and at most `k`, every
    /// candidate alive, deletable, unguarded.
    fn check_invariants(&mut self, ctx: &mut Ctx<'_, '_, '_>) {
        let st = &self.st;
        let deletable = st.view.non_articulation_points();
        let ok = st.view.is_connected()
            && st.guarded.len() <= st.k
            && st.guarded.as_slice().iter().all(|&y| st.view.is_alive(y))
            && st
                .candidates()
                .iter()
                .all(|&v| st.view.is_alive(v) && !st.guarded.contains(v) && deletable.binary_search(&v).is_ok());
        if !ok {
            ctx.diag.invariant_violations += 1;
        }
    }
}

/// Top-down enumeration of every connected induced subgraph of order `k` of
/// the connected graph `g`.
pub fn topdown(
    g: &Graph,
    k: usize,
    sink: &mut SubgraphSink<'_>,
    backend: Backend,
    options: &EnumOptions,
    guard: &mut TimeoutGuard<'_>,
) -> Result<RunReport> {
    let st = TopDownState::new(g, k, backend)?;
    let mut ctx = Ctx::new(sink, guard);
    let mut e = TopDown { g, options, st, connectivity: SubsetScratch::new(g.n()), out: Vec::new(), error: None };
    e.node(&mut ctx);
    if let Some(err) = e.error {
        return Err(err);
    }
    ctx.finish(Algorithm::TopDown, backend, k)
}

pub fn enumerate_topdown(g: &Graph, k: usize, sink: &mut SubgraphSink<'_>, backend: Backend) -> Result<RunReport> {
    topdown(g, k, sink, backend, &EnumOptions::default(), &mut TimeoutGuard::unlimited())
}
