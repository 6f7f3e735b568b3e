//! Invariants of a single graph, for the `compute` subcommand.

use std::fmt::Write as _;

use cwkit_core::circular::{exact_circular_cutwidth_with, CircularCaps, CircularLayout};
use cwkit_core::cutwidth::{exact_cutwidth_dp_with_limit, heuristic_cutwidth, Method, DEFAULT_DP_MAX_N};
use cwkit_core::degeneracy::core_decomposition;
use cwkit_core::{Error, Graph, Vertex};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Exact when within the DP cap, heuristic otherwise.
    #[default]
    Auto,
    Exact,
    Heuristic,
}

#[derive(Debug, Clone)]
pub struct ComputeOptions {
    pub mode: Mode,
    pub dp_max_n: usize,
    pub heuristic_iterations: usize,
    pub seed: u64,
    /// Fail instead of skipping when circular cutwidth is out of reach.
    pub require_circular: bool,
    pub circular_caps: CircularCaps,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            mode: Mode::Auto,
            dp_max_n: DEFAULT_DP_MAX_N,
            heuristic_iterations: 20_000,
            seed: 0,
            require_circular: false,
            circular_caps: CircularCaps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cutwidth {
    pub value: usize,
    pub method: Method,
    pub ordering: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circular {
    pub value: usize,
    pub layout: CircularLayout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    pub core_numbers: Vec<usize>,
    pub cutwidth: Cutwidth,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circular: Option<Circular>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circular_skipped: Option<String>,
    pub clique_number: usize,
    pub triangle_free: bool,
}

pub fn compute(g: &Graph, opts: &ComputeOptions) -> Result<Invariants> {
    let cd = core_decomposition(g);
    let cw = match opts.mode {
        Mode::Heuristic => heuristic_cutwidth(g, opts.heuristic_iterations, opts.seed),
        Mode::Exact => exact_cutwidth_dp_with_limit(g, opts.dp_max_n)?,
        Mode::Auto => match exact_cutwidth_dp_with_limit(g, opts.dp_max_n) {
            Err(Error::Capacity { .. }) => heuristic_cutwidth(g, opts.heuristic_iterations, opts.seed),
            r => r?,
        },
    };
    let (circular, circular_skipped) = match exact_circular_cutwidth_with(g, opts.circular_caps) {
        Ok(r) => (Some(Circular { value: r.value, layout: r.witness }), None),
        Err(e @ Error::Capacity { .. }) if !opts.require_circular => (None, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    Ok(Invariants {
        n: g.n(),
        m: g.m(),
        degeneracy: cd.degeneracy,
        core_numbers: cd.core_number,
        cutwidth: Cutwidth { value: cw.value, method: cw.method, ordering: cw.witness.order },
        circular,
        circular_skipped,
        clique_number: g.clique_number(),
        triangle_free: g.is_triangle_free(),
    })
}

pub fn render(inv: &Invariants) -> String {
    let mut s = String::new();
    let cores: Vec<String> = inv.core_numbers.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "n: {}", inv.n);
    let _ = writeln!(s, "m: {}", inv.m);
    let _ = writeln!(s, "degeneracy: {}", inv.degeneracy);
    let _ = writeln!(s, "core numbers: {}", cores.join(" "));
    let bound = if inv.cutwidth.method.is_exact() { "" } else { " (upper bound)" };
    let _ = writeln!(s, "cutwidth: {} ({}){bound}", inv.cutwidth.value, inv.cutwidth.method.label());
    match (&inv.circular, &inv.circular_skipped) {
        (Some(c), _) => {
            let _ = writeln!(s, "circular cutwidth: {}", c.value);
        }
        (None, Some(why)) => {
            let _ = writeln!(s, "circular cutwidth: skipped ({why})");
        }
        (None, None) => {}
    }
    let _ = writeln!(s, "clique number: {}", inv.clique_number);
    let _ = writeln!(s, "triangle-free: {}", if inv.triangle_free { "yes" } else { "no" });
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use cwkit_core::generators::complete;

    #[test]
    fn k5_and_single_vertex() {
        let inv = compute(&complete(5), &ComputeOptions::default()).unwrap();
        assert_eq!((inv.degeneracy, inv.cutwidth.value, inv.cutwidth.method), (4, 6, Method::ExactDp));
        assert_eq!(inv.circular.as_ref().unwrap().value, 3);
        let one = compute(&Graph::empty(1), &ComputeOptions::default()).unwrap();
        assert_eq!((one.m, one.degeneracy, one.cutwidth.value, one.clique_number), (0, 0, 0, 1));
        assert_eq!(one.core_numbers, vec![0]);
        assert!(render(&one).contains("cutwidth: 0 (exact-dp)"));
    }

    #[test]
    fn exact_mode_respects_cap() {
        let opts = ComputeOptions { mode: Mode::Exact, ..ComputeOptions::default() };
        let err = compute(&Graph::empty(30), &opts).unwrap_err();
        assert!(err.to_string().contains("exceeds the limit"));
        let auto = compute(&Graph::empty(30), &ComputeOptions { heuristic_iterations: 10, ..ComputeOptions::default() });
        assert_eq!(auto.unwrap().cutwidth.method, Method::Heuristic);
    }
}
