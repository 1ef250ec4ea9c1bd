use super::{Backend, Graph, MutableView};

/// Buffers for the low-link pass, reused across calls so that repeated
/// queries on a shrinking view do not allocate.
#[derive(Clone, Debug, Default)]
pub struct ArticulationScratch {
    disc: Vec<u32>,
    low: Vec<u32>,
    cut: Vec<bool>,
    // (vertex, neighbor cursor, parent)
    stack: Vec<(usize, usize, usize)>,
}

impl ArticulationScratch {
    /// Writes the alive vertices of `view` that are not articulation points of
    /// the alive-induced subgraph into `out`, ascending.
    ///
    /// The alive subgraph must be connected. A single alive vertex is its own
    /// deletable vertex.
    pub fn non_articulation_points(&mut self, view: &MutableView<'_>, out: &mut Vec<usize>) {
        out.clear();
        let n = view.base().n();
        self.disc.clear();
        self.disc.resize(n, 0);
        self.low.resize(n, 0);
        self.cut.clear();
        self.cut.resize(n, false);

        let Some(root) = view.alive_vertices().next() else {
            return;
        };
        let mut time = 1;
        self.disc[root] = time;
        self.low[root] = time;
        let mut root_children = 0;
        let mut visited = 1;
        self.stack.clear();
        self.stack.push((root, 0, usize::MAX));

        while let Some(top) = self.stack.last_mut() {
            let (v, pos, parent) = *top;
            match view.next_neighbor(v, pos) {
                Some((w, next)) => {
                    top.1 = next;
                    if self.disc[w] == 0 {
                        time += 1;
                        visited += 1;
                        self.disc[w] = time;
                        self.low[w] = time;
                        if v == root {
                            root_children += 1;
                        }
                        self.stack.push((w, 0, v));
                    } else if w != parent && self.disc[w] < self.low[v] {
                        self.low[v] = self.disc[w];
                    }
                }
                None => {
                    self.stack.pop();
                    if parent != usize::MAX {
                        if self.low[v] < self.low[parent] {
                            self.low[parent] = self.low[v];
                        }
                        if parent != root && self.low[v] >= self.disc[parent] {
                            self.cut[parent] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            self.cut[root] = true;
        }
        debug_assert_eq!(visited, view.alive_count(), "alive subgraph is disconnected");

        out.extend(view.alive_vertices().filter(|&v| !self.cut[v]));
    }
}

/// Deletable vertices of a connected graph, ascending.
pub fn non_articulation_points(g: &Graph) -> Vec<usize> {
    MutableView::new(g, Backend::List).non_articulation_points()
}
