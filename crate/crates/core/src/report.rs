//! Per-graph bound certification.
//!
//! [`verify_theorem_on_graph`] computes the degeneracy and cutwidth of a graph,
//! collects every sparsity certificate it can justify, evaluates each bound at
//! those parameters, and compares against the cutwidth. Every entry stores the
//! raw inputs of its verdict so the verdict can be recomputed by
//! [`BoundEntry::recompute_verdict`].

use serde::{Deserialize, Serialize};

use crate::bounds::{
    bound_clique_free, bound_eq_main, bound_eq_main2, bound_general, bound_triangle_free,
    eq_main_epsilon, guard_eq_main, turan_envelope,
};
use crate::cutwidth::{exact_cutwidth_dp_with_limit, heuristic_cutwidth, Method, DEFAULT_DP_MAX_N};
use crate::degeneracy::{core_decomposition, k_core};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::serialize_graph6;
use crate::rational::{ceil_int, from_usize, ratio, strict_ceil_int, Rational};
use crate::sparsity::{
    turan_sparsity_lambda, DensityProfile, SparsityParams, UniformLambda, DEFAULT_SUBSET_MAX_N,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub dp_max_n: usize,
    pub subset_max_n: usize,
    /// Use the heuristic when the DP is out of reach.
    pub heuristic_fallback: bool,
    pub heuristic_iterations: usize,
    pub heuristic_seed: u64,
    pub scope: CertificateScope,
}

/// Which graph the exhaustive sparsity certificates are computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateScope {
    /// The input graph, as the uniform-sparsity hypothesis is stated.
    Whole,
    /// The δ-core only.
    Core,
    #[default]
    Both,
    /// No exhaustive certificates.
    None,
}

impl CertificateScope {
    pub fn whole(self) -> bool {
        matches!(self, CertificateScope::Whole | CertificateScope::Both)
    }

    pub fn core(self) -> bool {
        matches!(self, CertificateScope::Core | CertificateScope::Both)
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            dp_max_n: DEFAULT_DP_MAX_N,
            subset_max_n: DEFAULT_SUBSET_MAX_N,
            heuristic_fallback: true,
            heuristic_iterations: 20_000,
            heuristic_seed: 0,
            scope: CertificateScope::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `cw >= c(δ - (c-1)/λ)`, `c = ceil(ρn)`.
    EqMain2,
    /// `cw > (δλ+1)^2/(4λ) - 1/λ` under the guard `2nρ <= δλ - 1`.
    EqMain,
    General,
    TriangleFree,
    CliqueFree,
    TuranLower,
    TuranUpper,
}

impl BoundKind {
    pub fn label(self) -> &'static str {
        match self {
            BoundKind::EqMain2 => "eq-main2",
            BoundKind::EqMain => "eq-main",
            BoundKind::General => "general",
            BoundKind::TriangleFree => "triangle-free",
            BoundKind::CliqueFree => "clique-free",
            BoundKind::TuranLower => "turan-lower",
            BoundKind::TuranUpper => "turan-upper",
        }
    }
}

/// How the cutwidth must compare with the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    AtLeast,
    Greater,
    AtMost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Only a heuristic upper bound on the cutwidth was available and it does
    /// not settle the comparison.
    Undecided,
    /// Guard of a conditional bound is false.
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateSource {
    /// (0, 1), valid for every graph.
    Trivial,
    /// From Turán's theorem for the clique number.
    Turan,
    /// Largest λ found by scanning all vertex subsets of the graph.
    Exhaustive,
    /// Largest λ found by scanning all vertex subsets of the δ-core; `ρ`
    /// then refers to the core's vertex count.
    CoreExhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub source: CertificateSource,
    /// Vertex count that `ρ` is measured against.
    pub n: usize,
    #[serde(flatten)]
    pub params: SparsityParams,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutwidthValue {
    pub value: usize,
    pub method: Method,
    pub witness: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub kind: BoundKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(with = "crate::rational::serde_str")]
    pub bound: Rational,
    pub relation: Relation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guard: Option<bool>,
    /// Fractional part of `(δλ+1)/2` for the strict bound.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::rational::serde_str_opt")]
    pub epsilon: Option<Rational>,
    pub verdict: Verdict,
    /// True when a strict inequality was checked against an exact cutwidth.
    pub strict_checked: bool,
    /// Cutwidth is exact and sits on the integer threshold of the bound.
    pub tight: bool,
}

impl BoundEntry {
    fn new(kind: BoundKind, bound: Rational, relation: Relation, cw: Option<&CutwidthValue>) -> Self {
        let mut e = BoundEntry {
            kind,
            certificate: None,
            k: None,
            bound,
            relation,
            guard: None,
            epsilon: None,
            verdict: Verdict::Undecided,
            strict_checked: false,
            tight: false,
        };
        e.settle(cw);
        e
    }

    fn settle(&mut self, cw: Option<&CutwidthValue>) {
        let (verdict, strict, tight) = self.recompute_verdict(cw);
        self.verdict = verdict;
        self.strict_checked = strict;
        self.tight = tight;
    }

    /// Verdict, strictness flag and tightness flag from the stored fields and
    /// a cutwidth value.
    pub fn recompute_verdict(&self, cw: Option<&CutwidthValue>) -> (Verdict, bool, bool) {
        if self.guard == Some(false) {
            return (Verdict::NotApplicable, false, false);
        }
        let Some(cw) = cw else {
            return (Verdict::Undecided, false, false);
        };
        let value = from_usize(cw.value);
        let exact = cw.method.is_exact();
        let b = &self.bound;
        match self.relation {
            Relation::AtLeast => {
                if value < *b {
                    (Verdict::Fail, false, false)
                } else if exact {
                    (Verdict::Pass, false, ceil_int(b) == value.to_integer())
                } else {
                    (Verdict::Undecided, false, false)
                }
            }
            Relation::Greater => {
                if value <= *b {
                    (Verdict::Fail, exact, false)
                } else if exact {
                    (Verdict::Pass, true, strict_ceil_int(b) == value.to_integer())
                } else {
                    (Verdict::Undecided, false, false)
                }
            }
            Relation::AtMost => {
                if value <= *b {
                    (Verdict::Pass, false, exact && value.to_integer() == b.floor().to_integer())
                } else if exact {
                    (Verdict::Fail, false, false)
                } else {
                    (Verdict::Undecided, false, false)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    /// Vertex count of the δ-core.
    pub core_size: usize,
    pub clique_number: usize,
    pub cutwidth: Option<CutwidthValue>,
    pub certificates: Vec<Certificate>,
    pub entries: Vec<BoundEntry>,
    /// Parts of the report that were skipped for capacity reasons.
    pub skipped: Vec<String>,
}

impl BoundReport {
    pub fn failures(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }

    /// Re-derives every verdict from the stored data; returns the indices of
    /// entries whose stored verdict disagrees.
    pub fn audit(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                let (v, s, t) = e.recompute_verdict(self.cutwidth.as_ref());
                (v, s, t) != (e.verdict, e.strict_checked, e.tight)
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn entry(&self, kind: BoundKind) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.kind == kind)
    }

    /// Adds the Turán envelope entries, for a graph known to be `Tur(n, k)`.
    pub fn add_turan_envelope(&mut self, k: usize) -> Result<()> {
        let env = turan_envelope(self.n, k)?;
        for (kind, bound, relation) in [
            (BoundKind::TuranLower, env.lower, Relation::AtLeast),
            (BoundKind::TuranUpper, env.upper, Relation::AtMost),
        ] {
            let mut e = BoundEntry::new(kind, bound, relation, self.cutwidth.as_ref());
            e.k = Some(k);
            self.entries.push(e);
        }
        Ok(())
    }
}

/// Every sparsity certificate the graph admits: the trivial one, the Turán
/// ones for its clique number, and (for small graphs, per `scope`) the
/// exhaustive largest λ at each `ρ = j/n` of the whole graph and of its
/// δ-core.
pub fn certificates(
    g: &Graph,
    clique_number: usize,
    whole: Option<&DensityProfile>,
    core: Option<(usize, &DensityProfile)>,
) -> Vec<Certificate> {
    let n = g.n();
    let mut out = vec![Certificate {
        source: CertificateSource::Trivial,
        n,
        params: SparsityParams::trivial(),
    }];
    if n == 0 {
        return out;
    }
    if g.m() > 0 {
        let k = clique_number.max(2);
        // λ_s grows with s, so λ_s covers every subgraph of at least s vertices
        for s in k..=n {
            let lambda = turan_sparsity_lambda(k, s).expect("k, s >= 2");
            let rho = ratio(s as i64, n as i64);
            out.push(Certificate {
                source: CertificateSource::Turan,
                n,
                params: SparsityParams::new(rho, lambda).expect("λ_s >= 1 for s >= k"),
            });
        }
    }
    let exhaustive = whole
        .map(|d| (CertificateSource::Exhaustive, n, d))
        .into_iter()
        .chain(core.filter(|(nc, _)| *nc > 0).map(|(nc, d)| (CertificateSource::CoreExhaustive, nc, d)));
    for (source, size, density) in exhaustive {
        for j in 0..=size {
            let rho = ratio(j as i64, size as i64);
            if let UniformLambda::Finite(lambda) = density.max_lambda(&rho) {
                out.push(Certificate {
                    source,
                    n: size,
                    params: SparsityParams::new(rho, lambda).expect("max λ is at least 1"),
                });
            }
        }
    }
    out
}

/// Exact cutwidth when the DP is within `opts.dp_max_n`, otherwise the
/// heuristic value if fallback is enabled. Capacity misses are pushed onto
/// `skipped`.
pub fn cutwidth_with_fallback(g: &Graph, opts: &VerifyOptions, skipped: &mut Vec<String>) -> Option<CutwidthValue> {
    match exact_cutwidth_dp_with_limit(g, opts.dp_max_n) {
        Ok(r) => Some(r),
        Err(e @ Error::Capacity { .. }) => {
            skipped.push(format!("exact cutwidth: {e}"));
            opts.heuristic_fallback
                .then(|| heuristic_cutwidth(g, opts.heuristic_iterations, opts.heuristic_seed))
        }
        Err(e) => {
            skipped.push(format!("cutwidth: {e}"));
            None
        }
    }
    .map(|r| CutwidthValue { value: r.value, method: r.method, witness: r.witness.order })
}

pub fn verify_theorem_on_graph(g: &Graph, id: &str, opts: &VerifyOptions) -> BoundReport {
    let n = g.n();
    let cd = core_decomposition(g);
    let delta = cd.degeneracy;
    let clique_number = g.clique_number();
    let mut skipped = Vec::new();

    let cutwidth = cutwidth_with_fallback(g, opts, &mut skipped);
    let cw = cutwidth.as_ref();

    let mut density = |graph: &Graph, what: &str| match DensityProfile::compute_with_limit(graph, opts.subset_max_n) {
        Ok(d) => Some(d),
        Err(e) => {
            skipped.push(format!("exhaustive sparsity ({what}): {e}"));
            None
        }
    };
    let whole = opts.scope.whole().then(|| density(g, "whole graph")).flatten();
    let core_graph = k_core(g, delta).0;
    let core = opts.scope.core().then(|| density(&core_graph, "core")).flatten();

    let certs = certificates(g, clique_number, whole.as_ref(), core.as_ref().map(|d| (core_graph.n(), d)));
    let mut entries = Vec::new();
    for cert in &certs {
        let mut e2 = BoundEntry::new(
            BoundKind::EqMain2,
            bound_eq_main2(cert.n, delta, &cert.params),
            Relation::AtLeast,
            cw,
        );
        e2.certificate = Some(cert.clone());
        entries.push(e2);

        let guard = guard_eq_main(cert.n, delta, &cert.params);
        let mut e1 = BoundEntry {
            certificate: Some(cert.clone()),
            guard: Some(guard),
            epsilon: Some(eq_main_epsilon(delta, &cert.params.lambda)),
            ..BoundEntry::new(BoundKind::EqMain, bound_eq_main(delta, &cert.params.lambda), Relation::Greater, None)
        };
        e1.settle(cw);
        entries.push(e1);
    }

    entries.push(BoundEntry::new(BoundKind::General, bound_general(delta).value, Relation::AtLeast, cw));
    if clique_number <= 2 {
        entries.push(BoundEntry::new(BoundKind::TriangleFree, bound_triangle_free(delta), Relation::AtLeast, cw));
    }
    let k = clique_number.max(2);
    let mut ek = BoundEntry::new(
        BoundKind::CliqueFree,
        bound_clique_free(delta, k).expect("k >= 2"),
        Relation::AtLeast,
        None,
    );
    ek.k = Some(k);
    ek.settle(cw);
    entries.push(ek);

    BoundReport {
        id: id.to_string(),
        graph6: serialize_graph6(g),
        n,
        m: g.m(),
        degeneracy: delta,
        core_size: core_graph.n(),
        clique_number,
        cutwidth,
        certificates: certs,
        entries,
        skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, gnp, random_tree, turan};
    use crate::rational::int;

    #[test]
    fn k5_report() {
        let r = verify_theorem_on_graph(&complete(5), "K5", &VerifyOptions::default());
        assert_eq!((r.degeneracy, r.cutwidth.as_ref().unwrap().value), (4, 6));
        let strict = r
            .entries
            .iter()
            .find(|e| e.kind == BoundKind::EqMain && e.certificate.as_ref().unwrap().source == CertificateSource::Trivial)
            .unwrap();
        assert_eq!(strict.bound, ratio(21, 4));
        assert_eq!((strict.verdict, strict.strict_checked), (Verdict::Pass, true));
        let general = r.entry(BoundKind::General).unwrap();
        assert_eq!(general.bound, int(6));
        assert!(general.tight);
        assert!(!r.has_failure());
        assert!(r.audit().is_empty());
    }

    #[test]
    fn tree_report() {
        let t = random_tree(9, 4).unwrap();
        let r = verify_theorem_on_graph(&t, "tree", &VerifyOptions::default());
        assert_eq!(r.degeneracy, 1);
        let general = r.entry(BoundKind::General).unwrap();
        assert_eq!(general.bound, ratio(3, 4));
        assert_eq!(general.verdict, Verdict::Pass);
        assert!(r.entry(BoundKind::TriangleFree).is_some());
    }

    fn source(e: &BoundEntry) -> Option<CertificateSource> {
        e.certificate.as_ref().map(|c| c.source)
    }

    #[test]
    fn random_graphs_fail_only_on_whole_graph_exhaustive_certificates() {
        for seed in 0..40 {
            let g = gnp(8, [0.2, 0.5, 0.8][seed as usize % 3], seed);
            let r = verify_theorem_on_graph(&g, "gnp", &VerifyOptions::default());
            for e in r.failures() {
                assert_eq!(source(e), Some(CertificateSource::Exhaustive), "{e:?}");
                // only possible when the core is smaller than the certified prefix
                let c = e.certificate.as_ref().unwrap();
                assert!(crate::rational::ceil_times(&c.params.rho, c.n) > r.core_size, "{r:?}");
            }
            assert!(r.audit().is_empty());
            let core_only = VerifyOptions { scope: CertificateScope::Core, ..VerifyOptions::default() };
            assert!(!verify_theorem_on_graph(&g, "gnp", &core_only).has_failure());
        }
    }

    #[test]
    fn whole_graph_certificate_counterexample() {
        // K_2 plus four isolated vertices: λ* = 15 at ρ = 1, cutwidth 1
        let g = Graph::new(6, vec![(0, 1)]).unwrap();
        let r = verify_theorem_on_graph(&g, "K2+4K1", &VerifyOptions::default());
        assert_eq!((r.degeneracy, r.core_size), (1, 2));
        let fail = r
            .failures()
            .find(|e| e.kind == BoundKind::EqMain2 && e.certificate.as_ref().unwrap().params.rho == int(1))
            .unwrap();
        assert_eq!(fail.certificate.as_ref().unwrap().params.lambda, int(15));
        assert_eq!(fail.bound, int(4));
        let strict = r
            .failures()
            .find(|e| e.kind == BoundKind::EqMain && e.certificate.as_ref().unwrap().params.rho == int(1))
            .unwrap();
        assert_eq!(strict.bound, ratio(21, 5));
        assert_eq!(strict.guard, Some(true));
        let core_only = VerifyOptions { scope: CertificateScope::Core, ..VerifyOptions::default() };
        assert!(!verify_theorem_on_graph(&g, "K2+4K1", &core_only).has_failure());
    }

    #[test]
    fn heuristic_fallback_is_flagged() {
        let opts = VerifyOptions { dp_max_n: 6, heuristic_iterations: 500, ..VerifyOptions::default() };
        let r = verify_theorem_on_graph(&complete(8), "K8", &opts);
        assert_eq!(r.cutwidth.as_ref().unwrap().method, Method::Heuristic);
        assert!(!r.skipped.is_empty());
        let strict = r.entries.iter().find(|e| e.kind == BoundKind::EqMain).unwrap();
        assert!(!strict.strict_checked);
        let no_fallback = VerifyOptions { heuristic_fallback: false, ..opts };
        let r = verify_theorem_on_graph(&complete(8), "K8", &no_fallback);
        assert!(r.cutwidth.is_none());
        assert!(r.entries.iter().all(|e| matches!(e.verdict, Verdict::Undecided | Verdict::NotApplicable)));
    }

    #[test]
    fn turan_envelope_entries() {
        let mut r = verify_theorem_on_graph(&turan(12, 3).unwrap(), "tur", &VerifyOptions::default());
        r.add_turan_envelope(3).unwrap();
        assert_eq!(r.entry(BoundKind::TuranLower).unwrap().verdict, Verdict::Pass);
        assert_eq!(r.entry(BoundKind::TuranUpper).unwrap().verdict, Verdict::Pass);
        assert!(r.audit().is_empty());
    }

    #[test]
    fn recompute_flags_failures() {
        let cw = CutwidthValue { value: 3, method: Method::ExactDp, witness: vec![] };
        let e = BoundEntry::new(BoundKind::General, int(4), Relation::AtLeast, Some(&cw));
        assert_eq!(e.verdict, Verdict::Fail);
        let e = BoundEntry::new(BoundKind::EqMain, int(3), Relation::Greater, Some(&cw));
        assert_eq!((e.verdict, e.strict_checked), (Verdict::Fail, true));
        let h = CutwidthValue { value: 5, method: Method::Heuristic, witness: vec![] };
        let e = BoundEntry::new(BoundKind::General, int(4), Relation::AtLeast, Some(&h));
        assert_eq!(e.verdict, Verdict::Undecided);
        let e = BoundEntry::new(BoundKind::TuranUpper, int(5), Relation::AtMost, Some(&h));
        assert_eq!(e.verdict, Verdict::Pass);
    }
}
