//! Circular cutwidth.
//!
//! Vertices sit on a circle in `cyclic_order`; gap `g` lies between cyclic
//! positions `g` and `g + 1 (mod n)`. Each edge is drawn as one of its two
//! arcs, and an arc running clockwise from position `p` to position `q`
//! crosses gaps `p, p + 1, ..., q - 1 (mod n)`. The congestion of a layout is
//! the largest number of arcs crossing a single gap.

use serde::{Deserialize, Serialize};

use crate::cutwidth::LinearOrdering;
use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph, Vertex};

pub const DEFAULT_CIRCULAR_MAX_N: usize = 8;
pub const DEFAULT_CIRCULAR_MAX_M: usize = 16;

/// Direction in which an edge `(u, v)`, `u < v`, is drawn: clockwise means
/// the arc leaves `u` clockwise and ends at `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arc {
    Clockwise,
    Counterclockwise,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularLayout {
    pub cyclic_order: Vec<Vertex>,
    /// One entry per edge, aligned with [`Graph::edges`].
    pub arcs: Vec<Arc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congestion {
    pub value: usize,
    /// `loads[g]` is the number of arcs crossing gap `g`.
    pub loads: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularResult {
    pub value: usize,
    pub witness: CircularLayout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircularCaps {
    pub max_n: usize,
    pub max_m: usize,
}

impl Default for CircularCaps {
    fn default() -> Self {
        CircularCaps { max_n: DEFAULT_CIRCULAR_MAX_N, max_m: DEFAULT_CIRCULAR_MAX_M }
    }
}

impl CircularLayout {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_permutation(g.n(), &self.cyclic_order)?;
        if self.arcs.len() != g.m() {
            return Err(Error::InvalidArgument(format!(
                "layout has {} arc choices, graph has {} edges",
                self.arcs.len(),
                g.m()
            )));
        }
        Ok(())
    }

    /// Same layout read from a different starting vertex.
    pub fn rotated(&self, by: usize) -> CircularLayout {
        let mut cyclic_order = self.cyclic_order.clone();
        if !cyclic_order.is_empty() {
            let len = cyclic_order.len();
            cyclic_order.rotate_left(by % len);
        }
        CircularLayout { cyclic_order, arcs: self.arcs.clone() }
    }
}

fn add_arc(loads: &mut [usize], from: usize, to: usize) {
    let n = loads.len();
    let mut gap = from;
    while gap != to {
        loads[gap] += 1;
        gap = (gap + 1) % n;
    }
}

pub fn circular_congestion(g: &Graph, layout: &CircularLayout) -> Result<Congestion> {
    layout.validate(g)?;
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in layout.cyclic_order.iter().enumerate() {
        pos[v] = i;
    }
    let mut loads = vec![0; n];
    for (&(u, v), &arc) in g.edges().iter().zip(&layout.arcs) {
        match arc {
            Arc::Clockwise => add_arc(&mut loads, pos[u], pos[v]),
            Arc::Counterclockwise => add_arc(&mut loads, pos[v], pos[u]),
        }
    }
    let value = loads.iter().copied().max().unwrap_or(0);
    Ok(Congestion { value, loads })
}

/// Wraps a linear ordering around the circle, drawing every edge on the side
/// that avoids the gap between the last and the first vertex. Gap loads then
/// coincide with the cut profile.
pub fn line_layout_embed(g: &Graph, ordering: &LinearOrdering) -> Result<CircularLayout> {
    check_permutation(g.n(), &ordering.order)?;
    let pos = ordering.positions();
    let arcs = g
        .edges()
        .iter()
        .map(|&(u, v)| if pos[u] < pos[v] { Arc::Clockwise } else { Arc::Counterclockwise })
        .collect();
    Ok(CircularLayout { cyclic_order: ordering.order.clone(), arcs })
}

pub fn exact_circular_cutwidth(g: &Graph) -> Result<CircularResult> {
    exact_circular_cutwidth_with(g, CircularCaps::default())
}

/// Exhaustive search over cyclic orders (vertex 0 pinned at position 0,
/// reflections removed by requiring the second vertex to be smaller than the
/// last) and, per order, branch and bound over arc choices.
pub fn exact_circular_cutwidth_with(g: &Graph, caps: CircularCaps) -> Result<CircularResult> {
    let n = g.n();
    if n > caps.max_n {
        return Err(Error::Capacity {
            solver: "exact circular cutwidth",
            what: "n",
            size: n,
            limit: caps.max_n,
            hint: "circular cutwidth is only computed exactly for small graphs",
        });
    }
    if g.m() > caps.max_m {
        return Err(Error::Capacity {
            solver: "exact circular cutwidth",
            what: "m",
            size: g.m(),
            limit: caps.max_m,
            hint: "circular cutwidth is only computed exactly for small graphs",
        });
    }
    if n == 0 {
        return Ok(CircularResult {
            value: 0,
            witness: CircularLayout { cyclic_order: vec![], arcs: vec![] },
        });
    }

    let mut search = Search { g, best: usize::MAX, best_layout: None };
    let mut order = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    search.orders(&mut order, &mut used);
    let witness = search.best_layout.expect("at least one layout is examined");
    Ok(CircularResult { value: search.best, witness })
}

struct Search<'a> {
    g: &'a Graph,
    best: usize,
    best_layout: Option<CircularLayout>,
}

/// Both ways of drawing one edge, as gap spans.
struct EdgeArcs {
    edge: usize,
    clockwise: (usize, usize),
    counter: (usize, usize),
    cw_len: usize,
    ccw_len: usize,
}

impl Search<'_> {
    fn orders(&mut self, order: &mut Vec<Vertex>, used: &mut [bool]) {
        let n = self.g.n();
        if self.best == self.floor() {
            return;
        }
        if order.len() == n {
            if n < 3 || order[1] < order[n - 1] {
                self.arcs_for(order);
            }
            return;
        }
        for v in 1..n {
            if !used[v] {
                used[v] = true;
                order.push(v);
                self.orders(order, used);
                order.pop();
                used[v] = false;
            }
        }
    }

    /// No layout beats one arc per gap once an edge exists.
    fn floor(&self) -> usize {
        usize::from(self.g.m() > 0)
    }

    fn arcs_for(&mut self, order: &[Vertex]) {
        let n = order.len();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<EdgeArcs> = self
            .g
            .edges()
            .iter()
            .enumerate()
            .map(|(edge, &(u, v))| {
                let (p, q) = (pos[u], pos[v]);
                let cw_len = (q + n - p) % n;
                EdgeArcs { edge, clockwise: (p, q), counter: (q, p), cw_len, ccw_len: n - cw_len }
            })
            .collect();
        // every arc crosses at least its shorter length worth of gaps
        let total_min: usize = edges.iter().map(|e| e.cw_len.min(e.ccw_len)).sum();
        if total_min.div_ceil(n) >= self.best {
            return;
        }
        edges.sort_by_key(|e| std::cmp::Reverse(e.cw_len.abs_diff(e.ccw_len)));
        let mut loads = vec![0; n];
        let mut choice = vec![Arc::Clockwise; edges.len()];
        self.assign(order, &edges, 0, &mut loads, &mut choice);
    }

    fn assign(
        &mut self,
        order: &[Vertex],
        edges: &[EdgeArcs],
        depth: usize,
        loads: &mut Vec<usize>,
        choice: &mut Vec<Arc>,
    ) {
        let width = loads.iter().copied().max().unwrap_or(0);
        if width >= self.best {
            return;
        }
        if depth == edges.len() {
            self.best = width;
            self.best_layout = Some(CircularLayout { cyclic_order: order.to_vec(), arcs: choice.clone() });
            return;
        }
        let e = &edges[depth];
        let options = if e.cw_len <= e.ccw_len {
            [(Arc::Clockwise, e.clockwise), (Arc::Counterclockwise, e.counter)]
        } else {
            [(Arc::Counterclockwise, e.counter), (Arc::Clockwise, e.clockwise)]
        };
        for (arc, (from, to)) in options {
            let saved = loads.clone();
            add_arc(loads, from, to);
            choice[e.edge] = arc;
            self.assign(order, edges, depth + 1, loads, choice);
            *loads = saved;
            if self.best == self.floor() {
                return;
            }
        }
    }
}
