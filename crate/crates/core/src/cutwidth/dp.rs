use super::{profile_unchecked, CutwidthResult, LinearOrdering, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_DP_MAX_N: usize = 22;
/// Absolute ceiling on the configurable limit; beyond this the two state
/// tables no longer fit in desk memory.
pub const DP_HARD_MAX_N: usize = 30;

pub fn exact_cutwidth_dp(g: &Graph) -> Result<CutwidthResult> {
    exact_cutwidth_dp_with_limit(g, DEFAULT_DP_MAX_N)
}

/// Exact cutwidth by dynamic programming over vertex subsets.
///
/// The cut after a prefix depends only on the prefix set `S`, so
/// `best[S] = max(cut(S), min_{v in S} best[S - v])` is the smallest possible
/// largest cut over orderings that start with `S`. `cut(S)` is extended from
/// `cut(S - v)` with `v` the lowest vertex of `S`.
pub fn exact_cutwidth_dp_with_limit(g: &Graph, limit: usize) -> Result<CutwidthResult> {
    let n = g.n();
    let limit = limit.min(DP_HARD_MAX_N);
    if n > limit {
        return Err(Error::Capacity {
            solver: "exact cutwidth DP",
            what: "n",
            size: n,
            limit,
            hint: "use the heuristic solver for larger graphs",
        });
    }
    let adj = g.adjacency_masks().expect("n <= 30");
    let deg: Vec<u16> = g.degrees().into_iter().map(|d| d as u16).collect();
    let full: usize = (1usize << n) - 1;

    let mut cut = vec![0u16; full + 1];
    let mut best = vec![0u16; full + 1];
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let inside = (adj[low] & rest as u64).count_ones() as u16;
        cut[s] = cut[rest] + deg[low] - 2 * inside;

        let mut m = u16::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            m = m.min(best[s ^ (1 << v)]);
        }
        best[s] = m.max(cut[s]);
    }
    let value = best[full];

    // Forward reconstruction. The cuts still to come after a prefix are the
    // cuts of suffixes of the remaining set, so `best[remaining - v]` bounds
    // them; the smallest feasible `v` is placed next.
    let mut order = Vec::with_capacity(n);
    let mut remaining = full;
    while remaining != 0 {
        let v = (0..n)
            .find(|&v| remaining >> v & 1 == 1 && best[remaining ^ (1 << v)] <= value)
            .expect("some continuation attains the optimum");
        order.push(v);
        remaining ^= 1 << v;
    }
    let profile = profile_unchecked(g, &order);
    debug_assert_eq!(profile.iter().copied().max().unwrap_or(0), value as usize);
    Ok(CutwidthResult {
        value: value as usize,
        witness: LinearOrdering { order, profile },
        method: Method::ExactDp,
    })
}
