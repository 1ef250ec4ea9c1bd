use std::fmt;
use std::str::FromStr;

use super::{BitMatrix, Graph};
use crate::error::{Error, Result};

/// Storage used by a [`MutableView`] to answer neighborhood queries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Base adjacency lists filtered through the alive bit-array.
    #[default]
    List,
    /// Private copy of the adjacency bit matrix; deletions clear the row and
    /// column of the deleted vertex.
    BitMatrix,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::List => "list",
            Backend::BitMatrix => "bitmatrix",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "list" => Ok(Backend::List),
            "bitmatrix" | "bit-matrix" => Ok(Backend::BitMatrix),
            other => Err(Error::Config(format!("unknown backend {other:?}"))),
        }
    }
}

/// Deletion-aware view over an immutable [`Graph`]. Deletions are undone in
/// LIFO order with [`MutableView::restore_last`].
#[derive(Clone, Debug)]
pub struct MutableView<'g> {
    base: &'g Graph,
    alive: Vec<bool>,
    alive_count: usize,
    deletion_stack: Vec<usize>,
    rows: Option<BitMatrix>,
}

impl<'g> MutableView<'g> {
    pub fn new(base: &'g Graph, backend: Backend) -> Self {
        let rows = match backend {
            Backend::List => None,
            Backend::BitMatrix => {
                Some(base.bit_matrix().cloned().unwrap_or_else(|| BitMatrix::from_adjacency(&base.adjacency)))
            }
        };
        MutableView { base, alive: vec![true; base.n()], alive_count: base.n(), deletion_stack: Vec::new(), rows }
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn backend(&self) -> Backend {
        if self.rows.is_some() {
            Backend::BitMatrix
        } else {
            Backend::List
        }
    }

    #[inline]
    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn alive_mask(&self) -> &[bool] {
        &self.alive
    }

    pub fn bit_rows(&self) -> Option<&BitMatrix> {
        self.rows.as_ref()
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    pub fn deletion_depth(&self) -> usize {
        self.deletion_stack.len()
    }

    pub fn last_deleted(&self) -> Option<usize> {
        self.deletion_stack.last().copied()
    }

    pub fn delete(&mut self, v: usize) -> Result<()> {
        let n = self.base.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !self.alive[v] {
            return Err(Error::VertexDeleted(v));
        }
        self.alive[v] = false;
        self.alive_count -= 1;
        self.deletion_stack.push(v);
        if let Some(rows) = &mut self.rows {
            for &w in self.base.neighbors(v) {
                if self.alive[w] {
                    rows.remove(w, v);
                    rows.remove(v, w);
                }
            }
        }
        Ok(())
    }

    /// Undoes the most recent deletion and returns the restored vertex.
    pub fn restore_last(&mut self) -> Result<usize> {
        let v = self.deletion_stack.pop().ok_or(Error::NothingToRestore)?;
        self.alive[v] = true;
        self.alive_count += 1;
        if let Some(rows) = &mut self.rows {
            for &w in self.base.neighbors(v) {
                if self.alive[w] {
                    rows.insert(w, v);
                    rows.insert(v, w);
                }
            }
        }
        Ok(v)
    }

    /// Next alive neighbor of `v` at or after cursor `pos`, with the cursor to
    /// resume from. Cursors are backend-specific; start from 0.
    #[inline]
    pub fn next_neighbor(&self, v: usize, pos: usize) -> Option<(usize, usize)> {
        match &self.rows {
            Some(rows) => rows.next_in_row(v, pos).map(|w| (w, w + 1)),
            None => {
                let list = self.base.neighbors(v);
                let mut i = pos;
                while i < list.len() {
                    let w = list[i];
                    i += 1;
                    if self.alive[w] {
                        return Some((w, i));
                    }
                }
                None
            }
        }
    }

    /// Alive neighbors of an alive vertex, ascending. Empty for dead vertices.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        if !self.alive[v] {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pos = 0;
        while let Some((w, next)) = self.next_neighbor(v, pos) {
            out.push(w);
            pos = next;
        }
        out
    }

    /// Whether the alive vertices induce a connected subgraph.
    pub fn is_connected(&self) -> bool {
        let alive: Vec<usize> = self.alive_vertices().collect();
        self.base.is_connected_subset(&alive)
    }

    /// Deletable (non-articulation) alive vertices, ascending.
    pub fn non_articulation_points(&self) -> Vec<usize> {
        let mut out = Vec::new();
        super::ArticulationScratch::default().non_articulation_points(self, &mut out);
        out
    }
}

/// Ordered vertex set with O(1) membership test and mark/restore.
///
/// `mark()` returns the current end position; `restore(mark)` drops every
/// member appended since and clears its membership bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSetView {
    members: Vec<usize>,
    membership: Vec<bool>,
}

impl VertexSetView {
    pub fn new(n: usize) -> Self {
        VertexSetView { members: Vec::new(), membership: vec![false; n] }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.membership[v]
    }

    #[inline]
    pub fn push(&mut self, v: usize) {
        debug_assert!(!self.membership[v], "vertex {v} already a member");
        self.membership[v] = true;
        self.members.push(v);
    }

    pub fn pop(&mut self) -> Option<usize> {
        let v = self.members.pop()?;
        self.membership[v] = false;
        Some(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn mark(&self) -> usize {
        self.members.len()
    }

    pub fn restore(&mut self, mark: usize) {
        for &v in &self.members[mark..] {
            self.membership[v] = false;
        }
        self.members.truncate(mark);
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn membership(&self) -> &[bool] {
        &self.membership
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn delete_and_restore_round_trip() {
        let g = diamond();
        for backend in [Backend::List, Backend::BitMatrix] {
            let mut view = MutableView::new(&g, backend);
            let rows = view.bit_rows().cloned();
            view.delete(0).unwrap();
            assert_eq!(view.alive_vertices().collect::<Vec<_>>(), vec![1, 2, 3]);
            assert_eq!(view.neighbors(1), vec![2, 3]);
            assert!(view.is_connected());
            assert_eq!(view.restore_last().unwrap(), 0);
            assert_eq!(view.alive_count(), 4);
            assert_eq!(view.bit_rows().cloned(), rows);
            assert_eq!(view.neighbors(1), vec![0, 2, 3]);
        }
    }

    #[test]
    fn path_splits_after_middle_deletion() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut view = MutableView::new(&g, Backend::BitMatrix);
        view.delete(1).unwrap();
        assert!(!view.is_connected());
        assert!(!g.is_connected_subset(&[0, 2]));
        assert!(view.neighbors(0).is_empty());
    }

    #[test]
    fn delete_errors() {
        let g = diamond();
        let mut view = MutableView::new(&g, Backend::List);
        assert!(matches!(view.restore_last(), Err(Error::NothingToRestore)));
        view.delete(2).unwrap();
        assert!(matches!(view.delete(2), Err(Error::VertexDeleted(2))));
        assert!(matches!(view.delete(9), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn vertex_set_mark_restore() {
        let mut s = VertexSetView::new(5);
        s.push(3);
        let mark = s.mark();
        s.push(1);
        s.push(4);
        assert!(s.contains(4));
        s.restore(mark);
        assert_eq!(s.as_slice(), &[3]);
        assert!(!s.contains(1) && !s.contains(4) && s.contains(3));
    }
}
