//! Linear orderings, cut profiles and cutwidth solvers.

mod brute;
mod dp;
mod heuristic;
mod turan;

use serde::{Deserialize, Serialize};

pub use brute::{exact_cutwidth_bruteforce, BRUTE_FORCE_MAX_N};
pub use dp::{exact_cutwidth_dp, exact_cutwidth_dp_with_limit, DEFAULT_DP_MAX_N, DP_HARD_MAX_N};
pub use heuristic::{heuristic_cutwidth, heuristic_cutwidth_with, HeuristicConfig};
pub use turan::{turan_crossing_bound, turan_crossing_bound_max, turan_natural_ordering};

use crate::error::Result;
use crate::graph::{check_permutation, Graph, Vertex};

/// A vertex ordering `x_1 < ... < x_n` with its cut profile: `profile[i]` is
/// the number of edges with one endpoint among the first `i + 1` vertices
/// and the other after them. The last entry is always 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearOrdering {
    pub order: Vec<Vertex>,
    pub profile: Vec<usize>,
}

impl LinearOrdering {
    /// Cutwidth of this ordering, the largest profile entry.
    pub fn width(&self) -> usize {
        self.profile.iter().copied().max().unwrap_or(0)
    }

    /// `positions()[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactDp,
    BruteForce,
    Heuristic,
}

impl Method {
    pub fn is_exact(self) -> bool {
        !matches!(self, Method::Heuristic)
    }

    pub fn label(self) -> &'static str {
        match self {
            Method::ExactDp => "exact-dp",
            Method::BruteForce => "brute-force",
            Method::Heuristic => "heuristic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutwidthResult {
    pub value: usize,
    pub witness: LinearOrdering,
    pub method: Method,
}

/// Cut profile of `order`. Each edge adds one to the gaps between its two
/// endpoint positions.
pub fn cut_profile(g: &Graph, order: &[Vertex]) -> Result<LinearOrdering> {
    check_permutation(g.n(), order)?;
    Ok(LinearOrdering { order: order.to_vec(), profile: profile_unchecked(g, order) })
}

pub(crate) fn profile_unchecked(g: &Graph, order: &[Vertex]) -> Vec<usize> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut delta = vec![0isize; n + 1];
    for &(u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        delta[a] += 1;
        delta[b] -= 1;
    }
    let mut running = 0isize;
    delta[..n]
        .iter()
        .map(|d| {
            running += d;
            running as usize
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gnp, path};
    use proptest::prelude::*;

    /// Profile recomputed by growing the prefix one vertex at a time.
    fn incremental_profile(g: &Graph, order: &[Vertex]) -> Vec<usize> {
        let mut placed = vec![false; g.n()];
        let mut cut = 0isize;
        order
            .iter()
            .map(|&v| {
                let inside = g.neighbors(v).iter().filter(|&&w| placed[w]).count() as isize;
                cut += g.degree(v) as isize - 2 * inside;
                placed[v] = true;
                cut as usize
            })
            .collect()
    }

    #[test]
    fn profile_examples() {
        let p = cut_profile(&path(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.profile, vec![1, 1, 1, 0]);
        assert_eq!(p.width(), 1);
        assert_eq!(cut_profile(&complete(4), &[3, 1, 0, 2]).unwrap().profile, vec![3, 4, 3, 0]);
        // C_4 = 0-1-2-3-0 in order 0,2,1,3: after {0}: 01,03; after {0,2}: all four;
        // after {0,2,1}: 23,03
        assert_eq!(cut_profile(&cycle(4), &[0, 2, 1, 3]).unwrap().profile, vec![2, 4, 2, 0]);
        assert_eq!(cut_profile(&Graph::empty(1), &[0]).unwrap().width(), 0);
        assert_eq!(cut_profile(&Graph::empty(0), &[]).unwrap().width(), 0);
        assert!(cut_profile(&path(3), &[0, 0, 1]).is_err());
    }

    proptest! {
        #[test]
        fn profile_invariants(n in 1usize..14, p in 0.0f64..=1.0, seed in any::<u64>(), rot in 0usize..14) {
            let g = gnp(n, p, seed);
            let mut order: Vec<_> = (0..n).collect();
            order.rotate_left(rot % n);
            order.swap(0, n / 2);
            let lo = cut_profile(&g, &order).unwrap();
            prop_assert_eq!(&lo.profile, &incremental_profile(&g, &order));
            prop_assert_eq!(*lo.profile.last().unwrap(), 0);
            let mut prev = 0usize;
            for (i, &x) in lo.profile.iter().enumerate() {
                prop_assert!(x.abs_diff(prev) <= g.degree(lo.order[i]));
                prev = x;
            }
            let reversed: Vec<_> = order.iter().rev().copied().collect();
            prop_assert_eq!(cut_profile(&g, &reversed).unwrap().width(), lo.width());
        }
    }
}
