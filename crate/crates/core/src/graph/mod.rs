//! Undirected simple graphs, deletion-aware views, and the connectivity
//! primitives the enumerators are built on.

mod articulation;
mod bitmatrix;
mod io;
mod view;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

pub use articulation::{non_articulation_points, ArticulationScratch};
pub use bitmatrix::BitMatrix;
pub use io::{load_graph, load_graph_file, load_graph_with, Format, LoadOptions};
pub use view::{Backend, MutableView, VertexSetView};

use crate::error::{Error, Result};

/// Original vertex name as read from the input file.
///
/// Tokens that round-trip through `i64` are kept as integers so that they
/// order numerically; anything else is kept verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Int(i64),
    Text(String),
}

impl Label {
    pub fn parse(token: &str) -> Label {
        match token.parse::<i64>() {
            Ok(i) if i.to_string() == token => Label::Int(i),
            _ => Label::Text(token.to_string()),
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Int(a), Label::Int(b)) => a.cmp(b),
            (Label::Int(_), Label::Text(_)) => Ordering::Less,
            (Label::Text(_), Label::Int(_)) => Ordering::Greater,
            (Label::Text(a), Label::Text(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Label {
    fn from(i: i64) -> Self {
        Label::Int(i)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::parse(s)
    }
}

/// Immutable undirected simple graph on dense vertex ids `0..n`.
///
/// Adjacency lists are sorted ascending. The optional bit matrix mirrors the
/// adjacency lists exactly and is only built on request.
#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<Label>,
    edge_count: usize,
    max_degree: usize,
    bitrows: Option<BitMatrix>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n`. Self-loops are dropped
    /// and repeated edges collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
        }
        let labels = (0..n as i64).map(Label::Int).collect();
        Graph::from_parts(labels, edges.iter().copied())
    }

    fn from_parts(labels: Vec<Label>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        let mut twice_m = 0;
        let mut max_degree = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            list.shrink_to_fit();
            twice_m += list.len();
            max_degree = max_degree.max(list.len());
        }
        Ok(Graph { adjacency, labels, edge_count: twice_m / 2, max_degree, bitrows: None })
    }

    /// Materializes the bit-matrix backend alongside the adjacency lists.
    pub fn with_bit_matrix(mut self) -> Graph {
        if self.bitrows.is_none() {
            self.bitrows = Some(BitMatrix::from_adjacency(&self.adjacency));
        }
        self
    }

    pub fn bit_matrix(&self) -> Option<&BitMatrix> {
        self.bitrows.as_ref()
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in ascending id order. Panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn checked_neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adjacency.get(v).map(Vec::as_slice).ok_or(Error::VertexOutOfRange { vertex: v, n: self.n() })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Internal id of the vertex named `label`, if any.
    pub fn vertex_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Open neighborhood of a set: every vertex adjacent to a member of `set`
    /// that is not itself in `set`. Returned ascending.
    pub fn set_neighbors(&self, set: &[usize]) -> Result<Vec<usize>> {
        let n = self.n();
        let mut in_set = vec![false; n];
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            in_set[v] = true;
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for &v in set {
            for &w in &self.adjacency[v] {
                if !in_set[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Whether the subgraph induced by `set` is connected. The empty set is
    /// reported as not connected.
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        SubsetScratch::new(self.n()).is_connected(self, set)
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n()).collect();
        self.is_connected_subset(&all)
    }

    /// Connected components, each sorted ascending, ordered by their smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes id `i` and
    /// keeps its label.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            index.insert(v, i);
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adjacency[v] {
                if let Some(&j) = index.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let g = Graph::from_parts(labels, edges)?;
        Ok(if self.bitrows.is_some() { g.with_bit_matrix() } else { g })
    }
}

/// Interns labels by first appearance and collects edges.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    index: HashMap<Label, usize>,
    labels: Vec<Label>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: Label) -> usize {
        if let Some(&id) = self.index.get(&label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.clone());
        self.index.insert(label, id);
        id
    }

    pub fn add_edge(&mut self, a: Label, b: Label) {
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        self.edges.push((u, v));
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Result<Graph> {
        Graph::from_parts(self.labels, self.edges)
    }
}

/// Reusable buffers for induced-connectivity checks.
#[derive(Clone, Debug, Default)]
pub struct SubsetScratch {
    stamp: Vec<u32>,
    epoch: u32,
    stack: Vec<usize>,
}

impl SubsetScratch {
    pub fn new(n: usize) -> Self {
        SubsetScratch { stamp: vec![0; n], epoch: 0, stack: Vec::new() }
    }

    fn next_epoch(&mut self, n: usize) -> u32 {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
        }
        // two stamps per check: epoch = member, epoch + 1 = visited
        if self.epoch >= u32::MAX - 2 {
            self.stamp.fill(0);
            self.epoch = 0;
        }
        self.epoch += 2;
        self.epoch
    }

    /// Depth-first traversal of `G(set)`, O(|set| * max degree).
    pub fn is_connected(&mut self, g: &Graph, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let member = self.next_epoch(g.n());
        let visited = member + 1;
        for &v in set {
            self.stamp[v] = member;
        }
        self.stack.clear();
        self.stack.push(start);
        self.stamp[start] = visited;
        while let Some(v) = self.stack.pop() {
            for &w in g.neighbors(v) {
                if self.stamp[w] == member {
                    self.stamp[w] = visited;
                    self.stack.push(w);
                }
            }
        }
        set.iter().all(|&v| self.stamp[v] == visited)
    }
}
