//! λ-sparsity and (ρ, λ)-uniform sparsity.
//!
//! A graph on `n` vertices is λ-sparse when `m <= n(n-1) / (2λ)`, and
//! (ρ, λ)-uniformly sparse when every subgraph on at least `ρn` vertices is
//! λ-sparse. For a fixed vertex set the induced subgraph has the most edges,
//! so only induced subgraphs are checked.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{ceil_times, from_usize, int, Rational};

pub const DEFAULT_SUBSET_MAX_N: usize = 18;
/// Largest `n` the subset scan accepts, whatever limit is requested.
pub const SUBSET_HARD_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityParams {
    #[serde(with = "crate::rational::serde_str")]
    pub rho: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub lambda: Rational,
}

impl SparsityParams {
    pub fn new(rho: Rational, lambda: Rational) -> Result<Self> {
        if rho < int(0) || rho > int(1) {
            return Err(Error::InvalidParameter(format!("rho = {rho} outside [0, 1]")));
        }
        if lambda < int(1) {
            return Err(Error::InvalidParameter(format!("lambda = {lambda} is below 1")));
        }
        Ok(SparsityParams { rho, lambda })
    }

    /// (0, 1): every graph satisfies it.
    pub fn trivial() -> Self {
        SparsityParams { rho: int(0), lambda: int(1) }
    }
}

/// Largest λ for which a graph is (ρ, λ)-uniformly sparse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum UniformLambda {
    Finite(Rational),
    /// Every qualifying subgraph is edgeless.
    Unbounded,
}

impl UniformLambda {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            UniformLambda::Finite(q) => Some(q),
            UniformLambda::Unbounded => None,
        }
    }
}

/// `s (s - 1) / (2 m)` edges-to-λ conversion: the largest λ for which `m`
/// edges on `s` vertices are λ-sparse.
fn lambda_for(s: usize, m: usize) -> Rational {
    Rational::new(BigInt::from(s * s.saturating_sub(1)), BigInt::from(2 * m))
}

pub fn is_lambda_sparse(g: &Graph, lambda: &Rational) -> Result<bool> {
    if *lambda < int(1) {
        return Err(Error::InvalidParameter(format!("lambda = {lambda} is below 1")));
    }
    let n = g.n();
    Ok(lambda * from_usize(2 * g.m()) <= from_usize(n * n.saturating_sub(1)))
}

/// For every subset size, the densest induced subgraph of that size, found by
/// scanning all `2^n` vertex subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityProfile {
    n: usize,
    /// `max_edges[s]`: most edges induced by any `s` vertices.
    max_edges: Vec<usize>,
    /// A subset (bitmask) attaining `max_edges[s]`, smallest mask first.
    witness: Vec<u64>,
}

impl DensityProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        Self::compute_with_limit(g, DEFAULT_SUBSET_MAX_N)
    }

    pub fn compute_with_limit(g: &Graph, limit: usize) -> Result<Self> {
        let n = g.n();
        let limit = limit.min(SUBSET_HARD_MAX_N);
        if n > limit {
            return Err(Error::Capacity {
                solver: "exhaustive subset scan",
                what: "n",
                size: n,
                limit,
                hint: "uniform sparsity is only certified exhaustively for small graphs",
            });
        }
        let adj = g.adjacency_masks().expect("n <= 24");
        let full = (1usize << n) - 1;
        let mut edges = vec![0u16; full + 1];
        let mut max_edges = vec![0usize; n + 1];
        let mut witness = vec![0u64; n + 1];
        let mut seen = vec![false; n + 1];
        seen[0] = true;
        for s in 1..=full {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            edges[s] = edges[rest] + (adj[low] & rest as u64).count_ones() as u16;
            let size = s.count_ones() as usize;
            let e = edges[s] as usize;
            if !seen[size] || e > max_edges[size] {
                seen[size] = true;
                max_edges[size] = e;
                witness[size] = s as u64;
            }
        }
        Ok(DensityProfile { n, max_edges, witness })
    }

    pub fn max_edges(&self) -> &[usize] {
        &self.max_edges
    }

    fn subset(&self, size: usize) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.witness[size] >> v & 1 == 1).collect()
    }

    pub fn max_lambda(&self, rho: &Rational) -> UniformLambda {
        let from = ceil_times(rho, self.n);
        (from..=self.n)
            .filter(|&s| self.max_edges[s] > 0)
            .map(|s| lambda_for(s, self.max_edges[s]))
            .min()
            .map_or(UniformLambda::Unbounded, UniformLambda::Finite)
    }

    /// `None` when uniformly sparse, otherwise a violating vertex subset.
    pub fn violation(&self, params: &SparsityParams) -> Option<Vec<Vertex>> {
        let from = ceil_times(&params.rho, self.n);
        (from..=self.n)
            .find(|&s| {
                &params.lambda * from_usize(2 * self.max_edges[s])
                    > from_usize(s * s.saturating_sub(1))
            })
            .map(|s| self.subset(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformSparsity {
    pub holds: bool,
    /// Vertex set whose induced subgraph is too dense, when `holds` is false.
    pub witness: Option<Vec<Vertex>>,
}

pub fn is_uniformly_sparse(g: &Graph, params: &SparsityParams) -> Result<UniformSparsity> {
    let witness = DensityProfile::compute(g)?.violation(params);
    Ok(UniformSparsity { holds: witness.is_none(), witness })
}

pub fn max_uniform_lambda(g: &Graph, rho: &Rational) -> Result<UniformLambda> {
    Ok(DensityProfile::compute(g)?.max_lambda(rho))
}

/// Sparsity guaranteed for any `K_{k+1}`-free graph on `s` vertices by Turán's
/// theorem (`m <= (1 - 1/k) s^2 / 2`): `λ = k (s - 1) / ((k - 1) s)`.
pub fn turan_sparsity_lambda(k: usize, s: usize) -> Result<Rational> {
    if k < 2 || s < 2 {
        return Err(Error::InvalidParameter(format!(
            "Turán sparsity needs k >= 2 and s >= 2, got k = {k}, s = {s}"
        )));
    }
    Ok(Rational::new(BigInt::from(k * (s - 1)), BigInt::from((k - 1) * s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::labeled_graphs;
    use crate::generators::{complete, cycle, gnp};
    use crate::rational::ratio;

    /// Straight subset enumeration with per-subset edge counting.
    fn oracle_max_lambda(g: &Graph, rho: &Rational) -> UniformLambda {
        let n = g.n();
        let from = ceil_times(rho, n);
        let mut best: Option<Rational> = None;
        for mask in 0u32..(1 << n) {
            let s = mask.count_ones() as usize;
            if s < from {
                continue;
            }
            let m = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .count();
            if m > 0 {
                let l = lambda_for(s, m);
                if best.as_ref().is_none_or(|b| l < *b) {
                    best = Some(l);
                }
            }
        }
        best.map_or(UniformLambda::Unbounded, UniformLambda::Finite)
    }

    #[test]
    fn lambda_sparsity_examples() {
        assert!(!is_lambda_sparse(&complete(2), &ratio(11, 10)).unwrap());
        for seed in 0..10 {
            assert!(is_lambda_sparse(&gnp(8, 0.6, seed), &int(1)).unwrap());
        }
        assert!(is_lambda_sparse(&cycle(5), &int(2)).unwrap());
        assert!(is_lambda_sparse(&complete(2), &ratio(1, 2)).is_err());
    }

    #[test]
    fn uniform_sparsity_examples() {
        for seed in 0..10 {
            assert!(is_uniformly_sparse(&gnp(7, 0.7, seed), &SparsityParams::trivial()).unwrap().holds);
        }
        let r = is_uniformly_sparse(&complete(5), &SparsityParams::new(int(0), int(2)).unwrap())
            .unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 2);
        // C_5 on three consecutive vertices has 2 edges: 3*2/(2*2) = 3/2 < 2
        let c5 = is_uniformly_sparse(&cycle(5), &SparsityParams::new(ratio(3, 5), int(2)).unwrap())
            .unwrap();
        assert!(!c5.holds);
        let w = c5.witness.unwrap();
        let sub = cycle(5).induced_subgraph(&w).unwrap();
        assert!(!is_lambda_sparse(&sub, &int(2)).unwrap());
        assert!(is_uniformly_sparse(&Graph::empty(19), &SparsityParams::trivial()).is_err());
    }

    #[test]
    fn max_lambda_examples() {
        for n in 2..8 {
            assert_eq!(max_uniform_lambda(&complete(n), &int(0)).unwrap(), UniformLambda::Finite(int(1)));
        }
        assert_eq!(max_uniform_lambda(&Graph::empty(5), &ratio(1, 2)).unwrap(), UniformLambda::Unbounded);
        assert_eq!(max_uniform_lambda(&cycle(6), &ratio(1, 2)).unwrap(), UniformLambda::Finite(ratio(3, 2)));
        assert_eq!(max_uniform_lambda(&cycle(5), &ratio(3, 5)).unwrap(), UniformLambda::Finite(ratio(3, 2)));
    }

    #[test]
    fn max_lambda_matches_oracle_and_is_monotone() {
        for g in labeled_graphs(5).step_by(7).chain((0..20).map(|s| gnp(9, 0.5, s))) {
            let profile = DensityProfile::compute(&g).unwrap();
            let mut prev: Option<UniformLambda> = None;
            for j in 0..=g.n() {
                let rho = ratio(j as i64, g.n() as i64);
                let got = profile.max_lambda(&rho);
                assert_eq!(got, oracle_max_lambda(&g, &rho));
                if let UniformLambda::Finite(l) = &got {
                    assert!(*l >= int(1));
                    let params = SparsityParams::new(rho.clone(), l.clone()).unwrap();
                    assert!(profile.violation(&params).is_none());
                }
                if let Some(p) = prev {
                    assert!(got >= p);
                }
                prev = Some(got);
            }
        }
    }

    #[test]
    fn turan_lambda() {
        assert_eq!(turan_sparsity_lambda(2, 10).unwrap(), ratio(9, 5));
        assert_eq!(turan_sparsity_lambda(2, 2).unwrap(), int(1));
        assert_eq!(turan_sparsity_lambda(3, 4).unwrap(), ratio(9, 8));
        assert!(turan_sparsity_lambda(1, 4).is_err());
        assert!(turan_sparsity_lambda(2, 1).is_err());
        for g in labeled_graphs(6).filter(Graph::is_triangle_free).step_by(13) {
            assert!(is_lambda_sparse(&g, &turan_sparsity_lambda(2, 6).unwrap()).unwrap());
        }
    }
}
