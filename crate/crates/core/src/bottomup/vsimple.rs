use crate::context::{validate, Ctx};
use crate::error::Result;
use crate::graph::{Backend, Graph, VertexSetView};
use crate::harness::{Algorithm, EnumOptions, RunReport, TimeoutGuard};
use crate::sink::SubgraphSink;

/// Working sets of the guarded bottom-up enumerator.
///
/// `candidates` is one flat array shared by the whole recursion. A node owns
/// the window `candidates[lo..]` as it was on entry; it consumes that window
/// front to back, appends the newly discovered neighbors of each chosen
/// vertex for its child, and truncates them again when the child returns.
/// Vertices consumed by a node go to `guarded`, which the node rolls back to
/// its entry mark before returning, at which point the consumed vertices
/// become candidates again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationState {
    k: usize,
    current: VertexSetView,
    candidates: Vec<usize>,
    in_candidates: Vec<bool>,
    guarded: VertexSetView,
}

impl EnumerationState {
    pub fn new(n: usize, k: usize) -> Self {
        EnumerationState {
            k,
            current: VertexSetView::new(n),
            candidates: Vec::new(),
            in_candidates: vec![false; n],
            guarded: VertexSetView::new(n),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// C: the subgraph being grown.
    pub fn current(&self) -> &VertexSetView {
        &self.current
    }

    /// N: backing array of the candidate windows.
    pub fn candidates(&self) -> &[usize] {
        &self.candidates
    }

    /// Y: vertices excluded from further expansion.
    pub fn guarded(&self) -> &VertexSetView {
        &self.guarded
    }
}

struct VSimple<'g, 'o> {
    g: &'g Graph,
    options: &'o EnumOptions,
    st: EnumerationState,
}

impl VSimple<'_, '_> {
    fn run(&mut self, ctx: &mut Ctx<'_, '_, '_>) {
        let n = self.g.n();
        let k = self.st.k;
        for v in 0..n {
            if ctx.stopped {
                break;
            }
            let st = &mut self.st;
            st.current.push(v);
            for &w in self.g.neighbors(v) {
                if !st.guarded.contains(w) {
                    st.candidates.push(w);
                    st.in_candidates[w] = true;
                }
            }
            self.node(ctx, 0);
            let st = &mut self.st;
            for &w in &st.candidates {
                st.in_candidates[w] = false;
            }
            st.candidates.clear();
            st.current.pop();
            st.guarded.push(v);
            if self.options.k_component && n - st.guarded.len() < k {
                break;
            }
        }
    }

    /// Returns whether the subtree rooted here produced an order-`k` set.
    fn node(&mut self, ctx: &mut Ctx<'_, '_, '_>, lo: usize) -> bool {
        if !ctx.enter() {
            return false;
        }
        if self.st.current.len() == self.st.k {
            ctx.emit(self.g, self.st.current.as_slice());
            return true;
        }
        let snapshot = self.options.check_restore.then(|| {
            self.check_invariants(ctx, lo);
            self.st.clone()
        });

        let n = self.g.n();
        let k = self.st.k;
        let hi = self.st.candidates.len();
        let guard_mark = self.st.guarded.mark();
        let mut has_int_leaf = false;
        let mut next = lo;
        while next < hi && !ctx.stopped {
            let u = self.st.candidates[next];
            next += 1;

            let st = &mut self.st;
            st.in_candidates[u] = false;
            st.current.push(u);
            for &w in self.g.neighbors(u) {
                if !st.current.contains(w) && !st.guarded.contains(w) && !st.in_candidates[w] {
                    st.candidates.push(w);
                    st.in_candidates[w] = true;
                }
            }

            let produced = self.node(ctx, next);

            let st = &mut self.st;
            for &w in &st.candidates[hi..] {
                st.in_candidates[w] = false;
            }
            st.candidates.truncate(hi);
            st.current.pop();

            if produced {
                has_int_leaf = true;
            } else if self.options.has_int_leaf {
                break;
            }
            st.guarded.push(u);
            if self.options.k_component && n - st.guarded.len() < k {
                break;
            }
        }

        let st = &mut self.st;
        st.guarded.restore(guard_mark);
        for &u in &st.candidates[lo..next] {
            st.in_candidates[u] = true;
        }

        if let Some(before) = snapshot {
            ctx.diag.restore_checks += 1;
            if before != self.st {
                ctx.diag.restore_violations += 1;
            }
        }
        has_int_leaf
    }

    /// C, N, Y pairwise disjoint; every candidate adjacent to C.
    fn check_invariants(&self, ctx: &mut Ctx<'_, '_, '_>, lo: usize) {
        let st = &self.st;
        let window = &st.candidates[lo..];
        let mut ok = st.current.as_slice().iter().all(|&v| !st.guarded.contains(v));
        ok &= window.iter().all(|&v| {
            st.in_candidates[v]
                && !st.current.contains(v)
                && !st.guarded.contains(v)
                && self.g.neighbors(v).iter().any(|&w| st.current.contains(w))
        });
        ok &= st.in_candidates.iter().filter(|&&b| b).count() == window.len();
        if !ok {
            ctx.diag.invariant_violations += 1;
        }
    }
}

/// Guarded bottom-up enumeration of every connected induced subgraph of
/// order `k` of the connected graph `g`.
pub fn vsimple(
    g: &Graph,
    k: usize,
    sink: &mut SubgraphSink<'_>,
    options: &EnumOptions,
    guard: &mut TimeoutGuard<'_>,
) -> Result<RunReport> {
    validate(g, k)?;
    let mut ctx = Ctx::new(sink, guard);
    let mut e = VSimple { g, options, st: EnumerationState::new(g.n(), k) };
    e.run(&mut ctx);
    ctx.finish(Algorithm::VSimple, Backend::List, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bottomup::enumerate_vsimple;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn diamond_order_three() {
        let g = diamond();
        let mut sink = SubgraphSink::collect();
        let report = enumerate_vsimple(&g, 3, &mut sink).unwrap();
        assert_eq!(report.count, 4);
        let mut sets = sink.take_collected();
        sets.sort();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn singletons() {
        let g = diamond();
        let mut sink = SubgraphSink::count();
        assert_eq!(enumerate_vsimple(&g, 1, &mut sink).unwrap().count, 4);
    }

    #[test]
    fn rejects_bad_input() {
        let g = diamond();
        let mut sink = SubgraphSink::count();
        assert!(enumerate_vsimple(&g, 0, &mut sink).is_err());
        assert!(enumerate_vsimple(&g, 5, &mut sink).is_err());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(enumerate_vsimple(&split, 2, &mut sink), Err(crate::Error::Disconnected)));
    }

    #[test]
    fn checked_run_is_clean() {
        let g = diamond();
        let mut sink = SubgraphSink::count();
        let r = vsimple(&g, 2, &mut sink, &EnumOptions::checked(), &mut TimeoutGuard::unlimited()).unwrap();
        assert_eq!(r.count, 5);
        assert!(r.diagnostics.restore_checks > 0);
        assert_eq!(r.diagnostics.restore_violations, 0);
        assert_eq!(r.diagnostics.invariant_violations, 0);
    }
}
