use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{profile_unchecked, CutwidthResult, LinearOrdering, Method};
use crate::graph::{Graph, Vertex};

/// Annealing schedule. Only the upper-bound contract of the result matters;
/// these numbers just steer how quickly a good ordering is found.
#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicConfig {
    pub iterations: usize,
    pub initial_temperature: f64,
    /// Geometric factor applied once per iteration.
    pub cooling: f64,
    /// Probability of a relocation move; otherwise an adjacent swap.
    pub relocation_probability: f64,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            iterations: 20_000,
            initial_temperature: 2.0,
            cooling: 0.9995,
            relocation_probability: 0.5,
        }
    }
}

pub fn heuristic_cutwidth(g: &Graph, iterations: usize, seed: u64) -> CutwidthResult {
    let cfg = HeuristicConfig { iterations, ..HeuristicConfig::default() };
    heuristic_cutwidth_with(g, &cfg, seed)
}

/// Simulated annealing over vertex orderings. The reported value is always the
/// width of the returned witness, hence an upper bound on the cutwidth.
pub fn heuristic_cutwidth_with(g: &Graph, cfg: &HeuristicConfig, seed: u64) -> CutwidthResult {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut current: Vec<Vertex> = (0..n).collect();
    let mut current_energy = energy(g, &current);
    let mut best = current.clone();
    let mut best_energy = current_energy;
    let mut temperature = cfg.initial_temperature;

    if n >= 2 {
        let mut candidate = current.clone();
        for _ in 0..cfg.iterations {
            candidate.copy_from_slice(&current);
            if rng.gen_bool(cfg.relocation_probability.clamp(0.0, 1.0)) {
                let from = rng.gen_range(0..n);
                let to = rng.gen_range(0..n);
                let v = candidate.remove(from);
                candidate.insert(to, v);
            } else {
                let i = rng.gen_range(0..n - 1);
                candidate.swap(i, i + 1);
            }
            let e = energy(g, &candidate);
            let accept = e <= current_energy
                || (temperature > 0.0
                    && rng.gen::<f64>() < ((current_energy - e) / temperature).exp());
            if accept {
                std::mem::swap(&mut current, &mut candidate);
                current_energy = e;
                if e < best_energy {
                    best_energy = e;
                    best.copy_from_slice(&current);
                }
            }
            temperature *= cfg.cooling;
        }
    }

    let profile = profile_unchecked(g, &best);
    let value = profile.iter().copied().max().unwrap_or(0);
    CutwidthResult { value, witness: LinearOrdering { order: best, profile }, method: Method::Heuristic }
}

/// Width first; the number of gaps at full width and the total cut break ties
/// so the search has a gradient on plateaus.
fn energy(g: &Graph, order: &[Vertex]) -> f64 {
    let profile = profile_unchecked(g, order);
    let width = profile.iter().copied().max().unwrap_or(0);
    let at_width = profile.iter().filter(|&&c| c == width).count();
    let total: usize = profile.iter().sum();
    let scale = (g.n() * g.m()).max(1) as f64;
    width as f64 + 0.5 * at_width as f64 / (g.n().max(1) as f64) + 0.25 * total as f64 / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutwidth::exact_cutwidth_bruteforce;
    use crate::generators::{complete, gnp};

    #[test]
    fn upper_bounds_exact_value() {
        for seed in 0..30 {
            let g = gnp(8, 0.45, seed);
            let h = heuristic_cutwidth(&g, 3_000, seed);
            let exact = exact_cutwidth_bruteforce(&g).unwrap().value;
            assert!(h.value >= exact);
            assert_eq!(h.witness.width(), h.value);
        }
    }

    #[test]
    fn complete_graph_is_reached() {
        let h = heuristic_cutwidth_with(&complete(10), &HeuristicConfig::default(), 1);
        assert_eq!(h.value, 25);
    }

    #[test]
    fn seed_determinism() {
        let g = gnp(15, 0.3, 9);
        let a = heuristic_cutwidth(&g, 2_000, 5);
        let b = heuristic_cutwidth(&g, 2_000, 5);
        assert_eq!(a, b);
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(heuristic_cutwidth(&Graph::empty(1), 100, 0).value, 0);
        assert_eq!(heuristic_cutwidth(&Graph::empty(0), 100, 0).value, 0);
    }
}
