//! Graph families used as test inputs and as extremal examples.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const MAX_HYPERCUBE_DIM: u32 = 20;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_sorted_unique(n, edges)
}

pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_sorted_unique(n, edges)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`. Needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Graph::from_sorted_unique(n, edges)
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_sorted_unique(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen graph is simple")
}

/// Complete multipartite graph with the given part sizes, parts laid out as
/// consecutive blocks of vertex ids.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let class: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .collect();
    let n = class.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| class[u] != class[v])
        .collect();
    Graph::from_sorted_unique(n, edges)
}

/// Part sizes of the most balanced `k`-partition of `n`: `n mod k` parts of
/// size `ceil(n/k)` first, the rest of size `floor(n/k)`.
pub fn turan_part_sizes(n: usize, k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::InvalidParameter("Turán graph needs k >= 1".into()));
    }
    Ok((0..k).map(|c| n / k + usize::from(c < n % k)).collect())
}

/// Turán graph `Tur(n, k)`: complete `k`-partite, parts as equal as possible.
pub fn turan(n: usize, k: usize) -> Result<Graph> {
    Ok(complete_multipartite(&turan_part_sizes(n, k)?))
}

/// Modular presentation of `Tur(n, k)`: `a ~ b` iff `a mod k != b mod k`.
/// Isomorphic to [`turan`] and comes with the identity as its natural order.
pub fn turan_modular(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("Turán graph needs k >= 1".into()));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u % k != v % k)
        .collect();
    Ok(Graph::from_sorted_unique(n, edges))
}

pub fn hypercube(d: u32) -> Result<Graph> {
    if d > MAX_HYPERCUBE_DIM {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension {d} exceeds {MAX_HYPERCUBE_DIM}"
        )));
    }
    let n = 1usize << d;
    let mut edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    edges.sort_unstable();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Erdős–Rényi `G(n, p)`: every pair tried once in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted_unique(n, edges)
}

/// Random graph whose vertices are split uniformly at random into `parts`
/// classes, each cross-class pair kept with probability `p`. Never contains
/// `K_{parts+1}`.
pub fn random_multipartite(n: usize, parts: usize, p: f64, seed: u64) -> Result<Graph> {
    if parts == 0 {
        return Err(Error::InvalidParameter("need at least one part".into()));
    }
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let class: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labelled tree.
pub fn tree_from_prufer(n: usize, seq: &[Vertex]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a tree needs n >= 1".into()));
    }
    if n == 1 {
        return if seq.is_empty() {
            Ok(Graph::empty(1))
        } else {
            Err(Error::InvalidParameter("Prüfer sequence for n = 1 must be empty".into()))
        };
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence for n = {n} must have length {}",
            n - 2
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidParameter(format!("Prüfer entry {bad} out of range")));
    }
    let mut remaining = vec![1usize; n];
    for &v in seq {
        remaining[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf.min(v), leaf.max(v)));
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    edges.sort_unstable();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Uniform random labelled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<Vertex> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(n, &seq)
}
