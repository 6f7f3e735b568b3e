//! Runs the configured checks over a graph stream.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use cwkit_core::circular::{
    circular_congestion, exact_circular_cutwidth_with, line_layout_embed, CircularCaps, CircularLayout,
};
use cwkit_core::cutwidth::{cut_profile, exact_cutwidth_bruteforce};
use cwkit_core::degeneracy::{color_count, core_decomposition, greedy_color, is_proper_coloring, k_core};
use cwkit_core::io::serialize_graph6;
use cwkit_core::report::{
    certificates, cutwidth_with_fallback, verify_theorem_on_graph, BoundReport, VerifyOptions,
};
use cwkit_core::sparsity::DensityProfile;
use cwkit_core::{Error, Vertex};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Check, Keep, SweepConfig};
use crate::error::{HarnessError, Result};
use crate::source::{stream, Input};

pub const SCHEMA_VERSION: u32 = 1;
const CHUNK: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

/// Data needed to reproduce a check outcome by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layout: Option<CircularLayout>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    fn new(check: Check, status: Status, detail: impl Into<String>) -> Self {
        CheckOutcome { check, status, detail: detail.into(), witness: None }
    }

    fn with(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: u64,
    pub report: BoundReport,
    pub checks: Vec<CheckOutcome>,
}

impl GraphRecord {
    pub fn failed(&self) -> bool {
        self.report.has_failure() || self.checks.iter().any(|c| c.status == Status::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: u64,
    pub id: String,
    pub graph6: String,
    /// `check` or `bounds/<kind>/<certificate source>`.
    pub what: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// File holding this violation on its own, once written.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub index: u64,
    pub id: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs_processed: u64,
    pub violations: Vec<Violation>,
    /// Violation counts keyed like [`Violation::what`].
    pub violation_counts: BTreeMap<String, usize>,
    /// Bound entries met with equality at their integer threshold.
    pub tight_cases: usize,
    pub capacity_skips: Vec<Skip>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    /// The only field that varies between identical runs.
    pub generated_at_unix: u64,
    pub config: SweepConfig,
    pub graphs: Vec<GraphRecord>,
    pub summary: Summary,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.summary.violations.is_empty()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: SweepResult = serde_json::from_str(text).map_err(|e| HarnessError::json("sweep result", e))?;
        if r.schema != SCHEMA_VERSION {
            return Err(HarnessError::Config(format!("unsupported result schema {}", r.schema)));
        }
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("results serialize")
    }
}

fn verify_options(cfg: &SweepConfig) -> VerifyOptions {
    VerifyOptions {
        dp_max_n: cfg.caps.dp_max_n,
        subset_max_n: cfg.caps.subset_max_n,
        heuristic_fallback: cfg.heuristic_fallback,
        heuristic_iterations: cfg.heuristic_iterations,
        heuristic_seed: 0,
        scope: cfg.certificate_scope,
    }
}

fn base_report(input: &Input, opts: &VerifyOptions, want_cw: bool) -> BoundReport {
    let g = &input.graph;
    let delta = core_decomposition(g).degeneracy;
    let mut skipped = Vec::new();
    let cutwidth = want_cw.then(|| cutwidth_with_fallback(g, opts, &mut skipped)).flatten();
    BoundReport {
        id: input.id.clone(),
        graph6: serialize_graph6(g),
        n: g.n(),
        m: g.m(),
        degeneracy: delta,
        core_size: k_core(g, delta).0.n(),
        clique_number: g.clique_number(),
        cutwidth,
        certificates: Vec::new(),
        entries: Vec::new(),
        skipped,
    }
}

fn capacity_or(e: Error, check: Check) -> Result<CheckOutcome> {
    match e {
        Error::Capacity { .. } => Ok(CheckOutcome::new(check, Status::Skipped, e.to_string())),
        other => Err(other.into()),
    }
}

fn exact_cw(report: &BoundReport) -> Option<(usize, &[Vertex])> {
    report
        .cutwidth
        .as_ref()
        .filter(|c| c.method.is_exact())
        .map(|c| (c.value, c.witness.as_slice()))
}

fn no_exact(check: Check, report: &BoundReport) -> CheckOutcome {
    let why = match &report.cutwidth {
        Some(c) => format!("only a {} cutwidth value is available", c.method.label()),
        None => "no cutwidth value is available".to_string(),
    };
    CheckOutcome::new(check, Status::Skipped, why)
}

fn check_cutwidth(input: &Input, report: &BoundReport, cfg: &SweepConfig) -> Result<CheckOutcome> {
    let g = &input.graph;
    let Some((cw, order)) = exact_cw(report) else {
        return Ok(no_exact(Check::Cutwidth, report));
    };
    let witness = Witness { ordering: Some(order.to_vec()), ..Witness::default() };
    let width = cut_profile(g, order)?.width();
    if width != cw {
        return Ok(CheckOutcome::new(Check::Cutwidth, Status::Fail, format!("witness ordering has width {width}, reported {cw}"))
            .with(witness));
    }
    if g.n() > cfg.caps.brute_max_n {
        return Ok(CheckOutcome::new(Check::Cutwidth, Status::Pass, format!("cw = {cw}; witness checked, brute force beyond cap")));
    }
    let brute = exact_cutwidth_bruteforce(g)?;
    if brute.value != cw {
        let w = Witness { ordering: Some(if brute.value < cw { brute.witness.order } else { order.to_vec() }), ..Witness::default() };
        return Ok(CheckOutcome::new(Check::Cutwidth, Status::Fail, format!("dp = {cw}, brute force = {}", brute.value)).with(w));
    }
    Ok(CheckOutcome::new(Check::Cutwidth, Status::Pass, format!("cw = {cw}; dp agrees with brute force")))
}

/// Exact circular cutwidth with its witness congestion re-checked.
fn circular(input: &Input, cfg: &SweepConfig) -> Result<std::result::Result<(usize, CircularLayout), Error>> {
    let caps = CircularCaps { max_n: cfg.caps.circular_max_n, max_m: cfg.caps.circular_max_m };
    match exact_circular_cutwidth_with(&input.graph, caps) {
        Ok(r) => {
            let congestion = circular_congestion(&input.graph, &r.witness)?.value;
            if congestion != r.value {
                return Err(HarnessError::Inconsistent(format!(
                    "circular witness congestion {congestion} disagrees with value {}",
                    r.value
                )));
            }
            Ok(Ok((r.value, r.witness)))
        }
        Err(e) => Ok(Err(e)),
    }
}

fn check_circular(input: &Input, report: &BoundReport, cfg: &SweepConfig, tree_only: bool) -> Result<CheckOutcome> {
    let check = if tree_only { Check::TreeTheorem } else { Check::Circular };
    if tree_only && !input.graph.is_tree() {
        return Ok(CheckOutcome::new(check, Status::NotApplicable, "not a tree"));
    }
    let Some((cw, order)) = exact_cw(report) else {
        return Ok(no_exact(check, report));
    };
    let (ccw, layout) = match circular(input, cfg)? {
        Ok(r) => r,
        Err(e) => return capacity_or(e, check),
    };
    let embedded = line_layout_embed(&input.graph, &cut_profile(&input.graph, order)?)?;
    let ok = if tree_only { ccw == cw } else { ccw <= cw };
    let relation = if tree_only { "=" } else { "<=" };
    let detail = format!("ccw = {ccw}, cw = {cw} (expected ccw {relation} cw)");
    if ok {
        return Ok(CheckOutcome::new(check, Status::Pass, detail));
    }
    // when ccw > cw the embedded line layout beats the solver; otherwise the
    // circular layout beats every line ordering
    let witness = if ccw > cw {
        Witness { ordering: Some(order.to_vec()), layout: Some(embedded), ..Witness::default() }
    } else {
        Witness { ordering: Some(order.to_vec()), layout: Some(layout), ..Witness::default() }
    };
    Ok(CheckOutcome::new(check, Status::Fail, detail).with(witness))
}

fn check_sparsity(input: &Input, report: &BoundReport, cfg: &SweepConfig) -> Result<CheckOutcome> {
    let g = &input.graph;
    let density = match DensityProfile::compute_with_limit(g, cfg.caps.subset_max_n) {
        Ok(d) => d,
        Err(e) => return capacity_or(e, Check::Sparsity),
    };
    let certs = certificates(g, report.clique_number, Some(&density), None);
    for cert in &certs {
        if let Some(subset) = density.violation(&cert.params) {
            let detail = format!(
                "{:?} certificate (ρ = {}, λ = {}) violated by a {}-vertex subset",
                cert.source,
                cwkit_core::rational::to_canonical(&cert.params.rho),
                cwkit_core::rational::to_canonical(&cert.params.lambda),
                subset.len()
            );
            return Ok(CheckOutcome::new(Check::Sparsity, Status::Fail, detail)
                .with(Witness { subset: Some(subset), ..Witness::default() }));
        }
    }
    Ok(CheckOutcome::new(Check::Sparsity, Status::Pass, format!("{} certificates hold", certs.len())))
}

fn check_coloring(input: &Input) -> Result<CheckOutcome> {
    let g = &input.graph;
    let cd = core_decomposition(g);
    let colors = greedy_color(g, &cd.ordering)?;
    let used = color_count(&colors);
    let proper = is_proper_coloring(g, &colors);
    let detail = format!("{used} colors, degeneracy {}", cd.degeneracy);
    if proper && used <= cd.degeneracy + 1 {
        return Ok(CheckOutcome::new(Check::Coloring, Status::Pass, detail));
    }
    let detail = if proper { detail } else { format!("{detail}; coloring is not proper") };
    Ok(CheckOutcome::new(Check::Coloring, Status::Fail, detail)
        .with(Witness { ordering: Some(cd.ordering), colors: Some(colors), ..Witness::default() }))
}

fn check_bounds(report: &BoundReport) -> CheckOutcome {
    let failed = report.failures().count();
    let audit = report.audit();
    if !audit.is_empty() {
        return CheckOutcome::new(Check::Bounds, Status::Fail, format!("stored verdicts disagree with recomputation at entries {audit:?}"));
    }
    let status = if failed > 0 { Status::Fail } else { Status::Pass };
    CheckOutcome::new(Check::Bounds, status, format!("{} entries, {failed} failing", report.entries.len()))
}

pub fn process(index: u64, input: &Input, cfg: &SweepConfig) -> Result<GraphRecord> {
    let opts = verify_options(cfg);
    let want_cw = [Check::Cutwidth, Check::Circular, Check::TreeTheorem].iter().any(|&c| cfg.has(c));
    let mut report = if cfg.has(Check::Bounds) {
        let mut r = verify_theorem_on_graph(&input.graph, &input.id, &opts);
        if let Some(k) = input.turan_k.filter(|&k| k >= 2) {
            r.add_turan_envelope(k)?;
        }
        r
    } else {
        base_report(input, &opts, want_cw)
    };
    report.id = input.id.clone();
    let mut checks = Vec::new();
    let mut selected = cfg.checks.clone();
    selected.sort();
    selected.dedup();
    for check in selected {
        checks.push(match check {
            Check::Cutwidth => check_cutwidth(input, &report, cfg)?,
            Check::Circular => check_circular(input, &report, cfg, false)?,
            Check::TreeTheorem => check_circular(input, &report, cfg, true)?,
            Check::Sparsity => check_sparsity(input, &report, cfg)?,
            Check::Coloring => check_coloring(input)?,
            Check::Bounds => check_bounds(&report),
        });
    }
    Ok(GraphRecord { index, report, checks })
}

fn collect_violations(rec: &GraphRecord, summary: &mut Summary) {
    let r = &rec.report;
    let mut push = |what: String, detail: String, witness: Option<Witness>| {
        *summary.violation_counts.entry(what.clone()).or_default() += 1;
        summary.violations.push(Violation {
            index: rec.index,
            id: r.id.clone(),
            graph6: r.graph6.clone(),
            what,
            detail,
            witness,
            reproducer: None,
        });
    };
    let cw_witness = r.cutwidth.as_ref().map(|c| Witness { ordering: Some(c.witness.clone()), ..Witness::default() });
    for e in r.failures() {
        let source = e.certificate.as_ref().map_or("none".to_string(), |c| {
            serde_json::to_value(c.source).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
        });
        let params = e.certificate.as_ref().map_or(String::new(), |c| {
            format!(
                " at ρ = {}, λ = {}, n = {}",
                cwkit_core::rational::to_canonical(&c.params.rho),
                cwkit_core::rational::to_canonical(&c.params.lambda),
                c.n
            )
        });
        let cw = r.cutwidth.as_ref().map_or(0, |c| c.value);
        push(
            format!("bounds/{}/{source}", e.kind.label()),
            format!("{} bound {}{params} vs cw {cw}", e.kind.label(), cwkit_core::rational::to_canonical(&e.bound)),
            cw_witness.clone(),
        );
    }
    for c in &rec.checks {
        // bound failures are itemized above
        if c.status == Status::Fail && !(c.check == Check::Bounds && r.has_failure()) {
            push(c.check.label().to_string(), c.detail.clone(), c.witness.clone());
        }
    }
    summary.tight_cases += r.entries.iter().filter(|e| e.tight).count();
    for reason in r.skipped.iter().chain(rec.checks.iter().filter(|c| c.status == Status::Skipped).map(|c| &c.detail)) {
        summary.capacity_skips.push(Skip { index: rec.index, id: r.id.clone(), reason: reason.clone() });
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build()?;
    let mut inputs = stream(cfg)?;
    let mut summary = Summary::default();
    let mut graphs = Vec::new();
    let mut index = 0u64;
    loop {
        let chunk = inputs.by_ref().take(CHUNK).collect::<Result<Vec<_>>>()?;
        if chunk.is_empty() {
            break;
        }
        let first = index;
        index += chunk.len() as u64;
        let records = pool.install(|| {
            chunk
                .par_iter()
                .enumerate()
                .map(|(i, input)| process(first + i as u64, input, cfg))
                .collect::<Result<Vec<_>>>()
        })?;
        for rec in records {
            collect_violations(&rec, &mut summary);
            if cfg.keep == Keep::All || rec.failed() {
                graphs.push(rec);
            }
        }
    }
    summary.graphs_processed = index;
    let generated_at_unix = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    Ok(SweepResult {
        schema: SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        generated_at_unix,
        config: cfg.clone(),
        graphs,
        summary,
    })
}

/// Writes one JSON file per violation into `dir` and records the paths.
pub fn write_reproducers(result: &mut SweepResult, dir: &Path) -> Result<Vec<PathBuf>> {
    if result.summary.violations.is_empty() {
        return Ok(Vec::new());
    }
    fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let mut paths = Vec::new();
    for (i, v) in result.summary.violations.iter_mut().enumerate() {
        let name = format!("{:06}-{}-{}.json", v.index, i, v.what.replace('/', "_"));
        let path = dir.join(name);
        let text = serde_json::to_string_pretty(&*v).expect("violation serializes");
        fs::write(&path, text).map_err(|e| HarnessError::io(&path, e))?;
        v.reproducer = Some(path.clone());
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Family, Span};

    #[test]
    fn parallel_order_matches_index() {
        let mut cfg = SweepConfig::new(Family::Exhaustive);
        cfg.n = Some(Span::new(4, 4));
        cfg.checks = vec![Check::Coloring];
        cfg.threads = 3;
        let r = run_sweep(&cfg).unwrap();
        assert_eq!(r.summary.graphs_processed, 64);
        assert!(r.graphs.iter().enumerate().all(|(i, g)| g.index == i as u64));
        assert!(r.passed());
    }

    #[test]
    fn whole_graph_certificates_are_reported() {
        let mut cfg = SweepConfig::new(Family::Exhaustive);
        cfg.n = Some(Span::new(4, 4));
        let r = run_sweep(&cfg).unwrap();
        assert!(!r.passed());
        assert!(r.summary.violation_counts.keys().all(|k| k.ends_with("/exhaustive")));
        cfg.certificate_scope = cwkit_core::report::CertificateScope::Core;
        assert!(run_sweep(&cfg).unwrap().passed());
    }
}
