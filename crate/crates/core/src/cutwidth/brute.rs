use super::{profile_unchecked, CutwidthResult, LinearOrdering, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const BRUTE_FORCE_MAX_N: usize = 9;

/// Exact cutwidth by scanning every ordering. Kept deliberately separate from
/// the subset DP so the two can check each other.
pub fn exact_cutwidth_bruteforce(g: &Graph) -> Result<CutwidthResult> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::Capacity {
            solver: "brute-force cutwidth",
            what: "n",
            size: n,
            limit: BRUTE_FORCE_MAX_N,
            hint: "use the subset DP",
        });
    }
    let mut search = Search {
        g,
        placed: vec![false; n],
        prefix: Vec::with_capacity(n),
        best: usize::MAX,
        best_order: (0..n).collect(),
    };
    search.run(0, 0);
    let order = search.best_order;
    let profile = profile_unchecked(g, &order);
    Ok(CutwidthResult {
        value: search.best,
        witness: LinearOrdering { order, profile },
        method: Method::BruteForce,
    })
}

struct Search<'a> {
    g: &'a Graph,
    placed: Vec<bool>,
    prefix: Vec<Vertex>,
    best: usize,
    best_order: Vec<Vertex>,
}

impl Search<'_> {
    fn run(&mut self, cut: usize, width: usize) {
        // orderings through this prefix can only tie or lose
        if width >= self.best {
            return;
        }
        let n = self.g.n();
        if self.prefix.len() == n {
            self.best = width;
            self.best_order = self.prefix.clone();
            return;
        }
        for v in 0..n {
            if self.placed[v] {
                continue;
            }
            let inside = self.g.neighbors(v).iter().filter(|&&w| self.placed[w]).count();
            let next = cut + self.g.degree(v) - 2 * inside;
            self.placed[v] = true;
            self.prefix.push(v);
            self.run(next, width.max(next));
            self.prefix.pop();
            self.placed[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, star};

    #[test]
    fn small_cases() {
        assert_eq!(exact_cutwidth_bruteforce(&Graph::empty(5)).unwrap().value, 0);
        assert_eq!(exact_cutwidth_bruteforce(&complete(2)).unwrap().value, 1);
        assert_eq!(exact_cutwidth_bruteforce(&star(4)).unwrap().value, 2);
        assert_eq!(exact_cutwidth_bruteforce(&cycle(6)).unwrap().value, 2);
        for n in 4..=8 {
            assert_eq!(exact_cutwidth_bruteforce(&cycle(n)).unwrap().value, 2);
        }
        assert_eq!(exact_cutwidth_bruteforce(&Graph::empty(0)).unwrap().value, 0);
        assert!(exact_cutwidth_bruteforce(&Graph::empty(10)).is_err());
    }

    #[test]
    fn witness_profile_matches() {
        let r = exact_cutwidth_bruteforce(&complete(5)).unwrap();
        assert_eq!((r.value, r.witness.width()), (6, 6));
    }
}
