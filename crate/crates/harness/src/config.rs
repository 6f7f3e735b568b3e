//! Sweep configuration, as read from a JSON file or assembled from flags.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cwkit_core::cutwidth::{BRUTE_FORCE_MAX_N, DEFAULT_DP_MAX_N, DP_HARD_MAX_N};
use cwkit_core::circular::{DEFAULT_CIRCULAR_MAX_M, DEFAULT_CIRCULAR_MAX_N};
use cwkit_core::report::CertificateScope;
use cwkit_core::sparsity::{DEFAULT_SUBSET_MAX_N, SUBSET_HARD_MAX_N};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// Upper limits accepted for the circular solver caps.
pub const CIRCULAR_HARD_MAX_N: usize = 10;
pub const CIRCULAR_HARD_MAX_M: usize = 30;
/// Largest `n` for the exhaustive family.
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    Turan,
    TuranModular,
    /// `n` ranges over dimensions.
    Hypercube,
    Tree,
    Gnp,
    Exhaustive,
    File,
}

impl Family {
    pub fn is_random(self) -> bool {
        matches!(self, Family::Tree | Family::Gnp)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Cutwidth,
    Circular,
    Sparsity,
    Bounds,
    Coloring,
    TreeTheorem,
}

impl Check {
    pub fn label(self) -> &'static str {
        match self {
            Check::Cutwidth => "cutwidth",
            Check::Circular => "circular",
            Check::Sparsity => "sparsity",
            Check::Bounds => "bounds",
            Check::Coloring => "coloring",
            Check::TreeTheorem => "tree-theorem",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Which per-graph records end up in the result file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Keep {
    #[default]
    All,
    Violations,
}

/// Inclusive integer range, written `a..b` or as a single number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub from: u64,
    pub to: u64,
}

impl Span {
    pub fn new(from: u64, to: u64) -> Self {
        Span { from, to }
    }

    pub fn iter(self) -> impl Iterator<Item = u64> + Clone {
        self.from..=self.to
    }

    pub fn len(self) -> u64 {
        if self.to < self.from {
            0
        } else {
            self.to - self.from + 1
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.from == self.to {
            write!(f, "{}", self.from)
        } else {
            write!(f, "{}..{}", self.from, self.to)
        }
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad range {s:?}: {e}"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                Span::new(v, v)
            }
        };
        if span.is_empty() {
            return Err(format!("empty range {s:?}"));
        }
        Ok(span)
    }
}

impl Serialize for Span {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Span {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            One(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::One(v) => Ok(Span::new(v, v)),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", default, deny_unknown_fields)]
pub struct Caps {
    pub dp_max_n: usize,
    pub brute_max_n: usize,
    pub circular_max_n: usize,
    pub circular_max_m: usize,
    pub subset_max_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dp_max_n: DEFAULT_DP_MAX_N,
            brute_max_n: 8,
            circular_max_n: DEFAULT_CIRCULAR_MAX_N,
            circular_max_m: DEFAULT_CIRCULAR_MAX_M,
            subset_max_n: DEFAULT_SUBSET_MAX_N,
        }
    }
}

impl Caps {
    fn validate(&self) -> Result<()> {
        for (name, value, max) in [
            ("dp-max-n", self.dp_max_n, DP_HARD_MAX_N),
            ("brute-max-n", self.brute_max_n, BRUTE_FORCE_MAX_N),
            ("circular-max-n", self.circular_max_n, CIRCULAR_HARD_MAX_N),
            ("circular-max-m", self.circular_max_m, CIRCULAR_HARD_MAX_M),
            ("subset-max-n", self.subset_max_n, SUBSET_HARD_MAX_N),
        ] {
            if value > max {
                return Err(HarnessError::Config(format!("{name} = {value} exceeds the maximum of {max}")));
            }
        }
        Ok(())
    }
}

fn default_checks() -> Vec<Check> {
    vec![Check::Bounds]
}

fn default_heuristic_iterations() -> usize {
    20_000
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct SweepConfig {
    pub family: Family,
    /// Vertex counts (dimensions for `hypercube`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Span>,
    /// Part counts for the Turán families.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Span>,
    /// Edge probabilities for `gnp`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub p: Vec<f64>,
    /// One graph per seed and parameter point for the random families.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seeds: Option<Span>,
    /// Inputs for `file`: an edge list, or one graph6 string per line.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub files: Vec<PathBuf>,
    #[serde(default)]
    pub caps: Caps,
    #[serde(default = "default_checks")]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub certificate_scope: CertificateScope,
    #[serde(default = "yes")]
    pub heuristic_fallback: bool,
    #[serde(default = "default_heuristic_iterations")]
    pub heuristic_iterations: usize,
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub keep: Keep,
    /// Worker threads; 0 picks one per core.
    #[serde(default)]
    pub threads: usize,
}

impl SweepConfig {
    pub fn new(family: Family) -> Self {
        SweepConfig {
            family,
            n: None,
            k: None,
            p: Vec::new(),
            seeds: None,
            files: Vec::new(),
            caps: Caps::default(),
            checks: default_checks(),
            certificate_scope: CertificateScope::default(),
            heuristic_fallback: true,
            heuristic_iterations: default_heuristic_iterations(),
            format: Format::default(),
            output: None,
            keep: Keep::default(),
            threads: 0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SweepConfig = serde_json::from_str(text).map_err(|e| HarnessError::json("config", e))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn has(&self, check: Check) -> bool {
        self.checks.contains(&check)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(HarnessError::Config(m));
        self.caps.validate()?;
        if self.checks.is_empty() {
            return bad("no checks selected".into());
        }
        if self.family.is_random() && self.seeds.is_none() {
            return bad(format!("family {:?} is randomized and needs seeds", self.family));
        }
        match self.family {
            Family::File => {
                if self.files.is_empty() {
                    return bad("family file needs at least one input file".into());
                }
            }
            _ if self.n.is_none() => return bad("n range is required".into()),
            _ => {}
        }
        if matches!(self.family, Family::Turan | Family::TuranModular) {
            match self.k {
                None => return bad("Turán families need a k range".into()),
                Some(k) if k.from < 1 => return bad("k must be at least 1".into()),
                _ => {}
            }
        }
        if self.family == Family::Gnp {
            if self.p.is_empty() {
                return bad("gnp needs at least one p".into());
            }
            if let Some(p) = self.p.iter().find(|p| !(0.0..=1.0).contains(*p)) {
                return bad(format!("p = {p} outside [0, 1]"));
            }
        }
        if let Some(n) = self.n {
            let max = match self.family {
                Family::Exhaustive => EXHAUSTIVE_MAX_N as u64,
                Family::Hypercube => cwkit_core::generators::MAX_HYPERCUBE_DIM as u64,
                _ => 1 << 16,
            };
            if n.to > max {
                return bad(format!("n = {} exceeds the {:?} family limit of {max}", n.to, self.family));
            }
        }
        Ok(())
    }
}
