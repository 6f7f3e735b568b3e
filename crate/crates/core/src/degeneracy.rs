//! k-cores, degeneracy and degeneracy orderings.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{check_permutation, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    /// Core number of every vertex.
    pub core_number: Vec<usize>,
    pub degeneracy: usize,
    /// Reverse of the min-degree removal order. Every vertex has at most
    /// `degeneracy` neighbours placed before it.
    pub ordering: Vec<Vertex>,
}

impl CoreDecomposition {
    /// Order in which the peeling removed vertices. Every vertex has at most
    /// `degeneracy` neighbours placed after it.
    pub fn removal_order(&self) -> Vec<Vertex> {
        self.ordering.iter().rev().copied().collect()
    }
}

/// Maximal induced subgraph of minimum degree at least `k`, obtained by
/// repeatedly deleting vertices of degree below `k`. Returns the core relabelled
/// to `0..len` together with the surviving original vertex ids (ascending).
pub fn k_core(g: &Graph, k: usize) -> (Graph, Vec<Vertex>) {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    alive[w] = false;
                    stack.push(w);
                }
            }
        }
    }
    let survivors: Vec<Vertex> = g.vertices().filter(|&v| alive[v]).collect();
    let core = g.induced_subgraph(&survivors).expect("survivors are valid vertices");
    (core, survivors)
}

/// Bucket-queue peeling. Always removes a vertex of current minimum degree,
/// the smallest id among ties.
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    let mut deg = g.degrees();
    let max_deg = g.max_degree();
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); max_deg + 1];
    for v in g.vertices() {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut core_number = vec![0; n];
    let mut removal = Vec::with_capacity(n);
    let mut level = 0;
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("bucket is nonempty");
        level = level.max(low);
        core_number[v] = level;
        removed[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
            }
        }
        low = low.saturating_sub(1);
    }
    removal.reverse();
    CoreDecomposition {
        degeneracy: core_number.iter().copied().max().unwrap_or(0),
        core_number,
        ordering: removal,
    }
}

pub fn degeneracy(g: &Graph) -> usize {
    core_decomposition(g).degeneracy
}

/// Colours vertices in the given order, each with the smallest colour not
/// already used by a coloured neighbour.
pub fn greedy_color(g: &Graph, ordering: &[Vertex]) -> Result<Vec<usize>> {
    check_permutation(g.n(), ordering)?;
    let mut color = vec![usize::MAX; g.n()];
    let mut used = Vec::new();
    for &v in ordering {
        used.clear();
        used.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if color[w] < used.len() {
                used[color[w]] = true;
            }
        }
        color[v] = used.iter().position(|&u| !u).expect("degree + 1 slots");
    }
    Ok(color)
}

pub fn color_count(coloring: &[usize]) -> usize {
    coloring.iter().map(|&c| c + 1).max().unwrap_or(0)
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    coloring.len() == g.n() && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}
