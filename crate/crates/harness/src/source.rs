//! Graph streams for each sweep family. Streams are lazy so the exhaustive
//! family never holds more than one chunk of graphs in memory.

use std::fs;

use cwkit_core::enumerate::{labeled_graph, labeled_graph_count};
use cwkit_core::generators::{complete, gnp, hypercube, random_tree, turan, turan_modular};
use cwkit_core::io::{parse_edge_list, parse_graph6};
use cwkit_core::Graph;

use crate::config::{Family, Span, SweepConfig};
use crate::error::{HarnessError, Result};

/// One sweep input. `k` is set for Turán instances.
#[derive(Debug, Clone)]
pub struct Input {
    pub id: String,
    pub graph: Graph,
    pub turan_k: Option<usize>,
}

pub type InputStream = Box<dyn Iterator<Item = Result<Input>> + Send>;

fn plain(id: String, graph: Graph) -> Result<Input> {
    Ok(Input { id, graph, turan_k: None })
}

fn sizes(span: Option<Span>) -> impl Iterator<Item = usize> + Clone + Send {
    span.expect("validated").iter().map(|v| v as usize)
}

/// Parses a graph file: an edge list (first meaningful character is a digit)
/// or one graph6 string per non-empty line.
pub fn read_graph_file(path: &std::path::Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.starts_with(|c: char| c.is_ascii_digit())) {
        return Ok(vec![parse_edge_list(&text)?]);
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l).map_err(HarnessError::from))
        .collect()
}

pub fn stream(cfg: &SweepConfig) -> Result<InputStream> {
    let seeds = cfg.seeds;
    Ok(match cfg.family {
        Family::Complete => Box::new(sizes(cfg.n).map(|n| plain(format!("K{n}"), complete(n)))),
        Family::Turan | Family::TuranModular => {
            let modular = cfg.family == Family::TuranModular;
            let ks = cfg.k.expect("validated");
            Box::new(sizes(cfg.n).flat_map(move |n| {
                ks.iter().map(move |k| {
                    let k = k as usize;
                    let g = if modular { turan_modular(n, k)? } else { turan(n, k)? };
                    Ok(Input { id: format!("Tur({n},{k})"), graph: g, turan_k: Some(k) })
                })
            }))
        }
        Family::Hypercube => {
            Box::new(sizes(cfg.n).map(|d| plain(format!("Q{d}"), hypercube(d as u32)?)))
        }
        Family::Tree => {
            let seeds = seeds.expect("validated");
            Box::new(sizes(cfg.n).flat_map(move |n| {
                seeds.iter().map(move |s| plain(format!("tree-n{n}-s{s}"), random_tree(n, s)?))
            }))
        }
        Family::Gnp => {
            let seeds = seeds.expect("validated");
            let ps = cfg.p.clone();
            Box::new(sizes(cfg.n).flat_map(move |n| {
                let ps = ps.clone();
                ps.into_iter().flat_map(move |p| {
                    seeds.iter().map(move |s| plain(format!("gnp-n{n}-p{p}-s{s}"), gnp(n, p, s)))
                })
            }))
        }
        Family::Exhaustive => Box::new(sizes(cfg.n).flat_map(|n| {
            (0..labeled_graph_count(n)).map(move |i| plain(format!("labeled-n{n}-{i}"), labeled_graph(n, i)))
        })),
        Family::File => {
            let mut inputs = Vec::new();
            for path in &cfg.files {
                let graphs = read_graph_file(path)?;
                let single = graphs.len() == 1;
                for (i, g) in graphs.into_iter().enumerate() {
                    let id = if single { path.display().to_string() } else { format!("{}:{}", path.display(), i + 1) };
                    inputs.push(plain(id, g));
                }
            }
            Box::new(inputs.into_iter())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Check;

    fn count(cfg: &SweepConfig) -> usize {
        stream(cfg).unwrap().collect::<Result<Vec<_>>>().unwrap().len()
    }

    #[test]
    fn family_sizes() {
        let mut cfg = SweepConfig::new(Family::Exhaustive);
        cfg.n = Some(Span::new(1, 4));
        assert_eq!(count(&cfg), 1 + 2 + 8 + 64);
        let mut cfg = SweepConfig::new(Family::Turan);
        cfg.n = Some(Span::new(4, 14));
        cfg.k = Some(Span::new(2, 4));
        assert_eq!(count(&cfg), 33);
        let mut cfg = SweepConfig::new(Family::Gnp);
        cfg.n = Some(Span::new(5, 6));
        cfg.p = vec![0.2, 0.8];
        cfg.seeds = Some(Span::new(1, 10));
        cfg.checks = vec![Check::Coloring];
        assert_eq!(count(&cfg), 40);
    }
}
