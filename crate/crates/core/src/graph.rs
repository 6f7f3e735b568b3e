use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph on the dense vertex set `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Neighbour lists are
/// the symmetric closure of the edge list, each sorted ascending. A `Graph` is
/// immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Checked constructor. Rejects self-loops, duplicate edges (in either
    /// orientation) and endpoints outside `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    e.0, e.1
                )));
            }
        }
        Ok(Self::from_sorted_unique(n, seen.into_iter().collect()))
    }

    /// Builds from a list already known to be sorted, loop-free, deduplicated
    /// and normalised to `u < v`.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Index of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Neighbourhood bitmasks, one `u64` per vertex. `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Subgraph induced on `subset`, relabelled so that the i-th listed vertex
    /// becomes vertex `i`.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<Graph> {
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in subset.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} out of range 0..{}",
                    self.n
                )));
            }
            if label[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("vertex {v} listed twice")));
            }
            label[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] != usize::MAX && label[v] != usize::MAX)
            .map(|&(u, v)| {
                let (a, b) = (label[u], label[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Ok(Self::from_sorted_unique(subset.len(), edges))
    }

    /// Graph with the same vertices and only the edges accepted by `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        Self::from_sorted_unique(self.n, edges)
    }

    /// Whether the graph contains `r` pairwise adjacent vertices.
    ///
    /// Exact branch and bound: a partial clique is extended only by common
    /// neighbours of its members, and a branch is cut as soon as the remaining
    /// candidates cannot fill it up to `r`.
    pub fn has_clique(&self, r: usize) -> bool {
        if r == 0 {
            return true;
        }
        if r > self.n {
            return false;
        }
        let all: Vec<Vertex> = self.vertices().collect();
        self.extend_clique(r, &all)
    }

    fn extend_clique(&self, need: usize, candidates: &[Vertex]) -> bool {
        if need == 0 {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                return false;
            }
            let next = intersect_sorted(&candidates[i + 1..], &self.adj[v]);
            if next.len() + 1 >= need && self.extend_clique(need - 1, &next) {
                return true;
            }
        }
        false
    }

    /// Size of the largest clique (0 for the empty graph).
    pub fn clique_number(&self) -> usize {
        let mut r = 0;
        while self.has_clique(r + 1) {
            r += 1;
        }
        r
    }

    pub fn is_triangle_free(&self) -> bool {
        !self.has_clique(3)
    }
}

fn intersect_sorted(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Checks that `order` lists every vertex of a graph on `n` vertices exactly once.
pub fn check_permutation(n: usize, order: &[Vertex]) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidArgument(format!(
            "ordering has {} entries, graph has {n} vertices",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(Error::InvalidArgument(format!("vertex {v} out of range 0..{n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!("vertex {v} appears twice")));
        }
    }
    Ok(())
}
