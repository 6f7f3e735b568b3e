//! Streaming enumeration of small labelled graphs and labelled trees.

use crate::generators::tree_from_prufer;
use crate::graph::{Graph, Vertex};

/// Largest vertex count whose labelled graphs can be indexed by a `u64`.
pub const MAX_LABELED_N: usize = 11;

/// Number of labelled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    assert!(n <= MAX_LABELED_N);
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labelled graph whose edge set is given by the bits of `index`, pairs
/// taken in lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if index >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_sorted_unique(n, edges)
}

pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_graph_count(n)).map(move |i| labeled_graph(n, i))
}

/// All `n^(n-2)` labelled trees on `n >= 1` vertices, in Prüfer-sequence order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1);
    let len = n.saturating_sub(2);
    let total = (n as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq: Vec<Vertex> = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        tree_from_prufer(n, &seq).expect("valid Prüfer sequence")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(labeled_graphs(5).count(), 1024);
        assert_eq!(labeled_graphs(0).count(), 1);
        let g: HashSet<_> = labeled_graphs(4).collect();
        assert_eq!(g.len(), 64);
    }

    #[test]
    fn cayley_formula() {
        for n in 1..=6 {
            let trees: HashSet<_> = labeled_trees(n).collect();
            assert_eq!(trees.len() as u64, (n as u64).pow(n.saturating_sub(2) as u32));
            assert!(trees.iter().all(Graph::is_tree));
        }
    }
}
