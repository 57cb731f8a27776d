//! Executable checks of the known results on arithmetic labelings of
//! associated graphs.
//!
//! Each registered claim is run per instance graph. Labelings come from the
//! constructors and from the oracle ([`collect_witnesses`]); transfers that
//! break injectivity or leave an isolated vertex are counted as skipped, not
//! as failures. Claims about biarithmetic labelings come in two readings:
//! the default one only considers identical-biarithmetic labelings, the
//! `-literal` variant considers every biarithmetic labeling.

use serde::Serialize;

use crate::construct::{construct_bi_bipartite, construct_bi_path, construct_iso_uniform};
use crate::error::{IasiError, Result};
use crate::graph::{EdgeId, Graph};
use crate::labeling::{classify, Labeling, Verdict};
use crate::oracle::{collect_witnesses, search_labeling, SearchBounds};
use crate::transfer::{
    transfer_contract, transfer_line, transfer_reduce, transfer_subdivide, transfer_total, Transferred,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremConfig {
    /// Ranges for oracle searches; the class is chosen per claim.
    pub bounds: SearchBounds,
    /// Maximum number of oracle witnesses drawn per class and instance.
    pub witness_limit: usize,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        TheoremConfig { bounds: SearchBounds::default(), witness_limit: 25 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The claim's hypothesis never applies to this instance.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub status: Status,
    /// Number of individual checks that ran.
    pub checked: usize,
    /// Transfers dropped because of a collision or a degenerate result.
    pub skipped: usize,
    pub detail: String,
    pub counterexample: Option<Labeling>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub claim: String,
    pub passed: bool,
    pub instances: Vec<InstanceResult>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Reading {
    Identical,
    Literal,
}

impl Reading {
    fn classes(self) -> &'static [Verdict] {
        match self {
            Reading::Identical => &[Verdict::IdenticalBiarithmetic],
            Reading::Literal => &[Verdict::IdenticalBiarithmetic, Verdict::Biarithmetic],
        }
    }
}

type Check = fn(&Graph, &TheoremConfig, Reading) -> Result<Tally>;

pub struct Theorem {
    pub id: &'static str,
    pub claim: &'static str,
    reading: Reading,
    /// Holds when some instance demonstrates it, rather than on every instance.
    existential: bool,
    check: Check,
}

macro_rules! theorem {
    ($id:expr, $claim:expr, $check:expr) => {
        theorem!($id, $claim, $check, Reading::Identical)
    };
    ($id:expr, $claim:expr, $check:expr, $reading:expr) => {
        Theorem { id: $id, claim: $claim, reading: $reading, existential: false, check: $check }
    };
    (exists $id:expr, $claim:expr, $check:expr) => {
        Theorem { id: $id, claim: $claim, reading: Reading::Identical, existential: true, check: $check }
    };
}

pub static THEOREMS: &[Theorem] = &[
    theorem!("contract-preserves-iso", "contracting an edge of an isoarithmetic graph, with the merged vertex labeled by the edge label, stays isoarithmetic", check_iso_contract),
    theorem!("reduce-preserves-iso", "elementary topological reductions preserve isoarithmetic labelings", check_iso_reduce),
    theorem!("subdivide-preserves-iso", "subdividing edges of an isoarithmetic graph, labeling new vertices by the edge labels, stays isoarithmetic", check_iso_subdivide),
    theorem!("line-preserves-iso", "the line graph of an isoarithmetic graph is isoarithmetic under the edge labels", check_iso_line),
    theorem!("total-preserves-iso", "the total graph of an isoarithmetic graph is isoarithmetic under the element labels", check_iso_total),
    theorem!("line-iso-iff-bipartite", "for a biarithmetic graph, the line graph admits an isoarithmetic labeling exactly when the graph is bipartite", check_line_bipartite, Reading::Literal),
    theorem!("line-bi-implies-acyclic", "if the line graph of an identical-biarithmetic graph is biarithmetic, the graph is acyclic", check_line_acyclic),
    theorem!("line-bi-implies-acyclic-literal", "if the line graph of a biarithmetic graph is biarithmetic, the graph is acyclic", check_line_acyclic, Reading::Literal),
    theorem!("line-bi-iff-path", "the line graph of an identical-biarithmetic graph is biarithmetic exactly when the graph is a path", check_line_path),
    theorem!("line-bi-iff-path-literal", "the line graph of a biarithmetic graph is biarithmetic exactly when the graph is a path", check_line_path, Reading::Literal),
    theorem!("k-overflow-line-non-ap", "an edge whose ratio exceeds the smaller label's cardinality has a non-AP label, which the line graph inherits", check_k_overflow),
    theorem!("total-arithmetic", "the total graph of an identical-biarithmetic graph is arithmetic", check_total_arithmetic),
    theorem!("total-arithmetic-literal", "the total graph of a biarithmetic graph is arithmetic", check_total_arithmetic, Reading::Literal),
    theorem!("total-not-bi", "the total graph of a graph with an edge admits no identical-biarithmetic labeling", check_total_not_bi),
    theorem!("total-not-bi-literal", "the total graph of a graph with an edge admits no biarithmetic labeling", check_total_not_bi, Reading::Literal),
    theorem!(exists "contract-not-bi", "contracting an edge of an identical-biarithmetic graph need not give a biarithmetic graph", check_contract_not_bi),
    theorem!("reduce-not-bi", "topological reductions of an identical-biarithmetic graph are not biarithmetic", check_reduce_not_bi),
    theorem!("subdivide-not-bi", "subdivisions of a biarithmetic graph are not biarithmetic", check_subdivide_not_bi, Reading::Literal),
    theorem!("semi-contract", "contracting any edge of a semi-arithmetic graph gives neither an arithmetic nor a semi-arithmetic labeling", check_semi_contract),
    theorem!("semi-reduce", "topological reductions of a semi-arithmetic graph give neither an arithmetic nor a semi-arithmetic labeling", check_semi_reduce),
    theorem!("semi-subdivide", "subdivisions of a semi-arithmetic graph give neither an arithmetic nor a semi-arithmetic labeling", check_semi_subdivide),
    theorem!("semi-line", "the line graph of a semi-arithmetic graph gets neither an arithmetic nor a semi-arithmetic labeling", check_semi_line),
    theorem!("semi-total", "the total graph of a semi-arithmetic graph gets neither an arithmetic nor a semi-arithmetic labeling", check_semi_total),
];

pub fn lookup(id: &str) -> Result<&'static Theorem> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| IasiError::UnknownTheorem(id.to_string()))
}

/// Instance names used when none are given.
pub const DEFAULT_INSTANCES: &[&str] = &["P2", "P3", "P4", "K1,3", "C3", "C4", "C5", "K4"];

/// Runs a claim over named fixture graphs (see [`Graph::fixture`]).
pub fn verify_theorem(id: &str, instances: &[&str], config: &TheoremConfig) -> Result<TheoremReport> {
    let graphs = instances
        .iter()
        .map(|name| Ok((name.to_string(), Graph::fixture(name)?)))
        .collect::<Result<Vec<_>>>()?;
    verify_theorem_on(id, &graphs, config)
}

/// Runs a claim over explicit graphs.
pub fn verify_theorem_on(id: &str, instances: &[(String, Graph)], config: &TheoremConfig) -> Result<TheoremReport> {
    let theorem = lookup(id)?;
    let mut results = Vec::with_capacity(instances.len());
    for (name, g) in instances {
        let tally = (theorem.check)(g, config, theorem.reading)?;
        results.push(tally.finish(name));
    }
    Ok(TheoremReport {
        theorem: theorem.id.to_string(),
        claim: theorem.claim.to_string(),
        passed: results.iter().all(|r| r.status != Status::Fail)
            && (!theorem.existential || results.iter().any(|r| r.status == Status::Pass)),
        instances: results,
    })
}

/// Accumulates the checks made on one instance.
#[derive(Default)]
struct Tally {
    checked: usize,
    skipped: usize,
    failures: usize,
    notes: Vec<String>,
    counterexample: Option<Labeling>,
    /// For existential claims: whether a demonstrating case was seen.
    witnessed: Option<bool>,
    not_applicable: Option<String>,
}

impl Tally {
    fn not_applicable(reason: impl Into<String>) -> Self {
        Tally { not_applicable: Some(reason.into()), ..Default::default() }
    }

    fn pass(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, f: &Labeling, note: String) {
        self.checked += 1;
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(f.clone());
            self.notes.push(note);
        }
    }

    fn expect(&mut self, ok: bool, f: &Labeling, note: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(f, note())
        }
    }

    /// Unwraps a transfer, counting degenerate outcomes as skipped.
    fn attempt(&mut self, r: Result<Transferred>) -> Result<Option<Transferred>> {
        match r {
            Ok(t) => Ok(Some(t)),
            Err(IasiError::TransferCollision(_) | IasiError::IsolatedVertex(_) | IasiError::EmptyLineGraph) => {
                self.skipped += 1;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self, instance: &str) -> InstanceResult {
        let mut status = if self.failures > 0 {
            Status::Fail
        } else if self.witnessed == Some(false) {
            Status::Skipped
        } else if self.checked == 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        let mut detail = format!("{} checked, {} skipped", self.checked, self.skipped);
        if let Some(reason) = &self.not_applicable {
            status = Status::Skipped;
            detail = reason.clone();
        }
        if self.failures > 0 {
            detail.push_str(&format!(", {} failed", self.failures));
        }
        if self.witnessed == Some(false) && self.failures == 0 {
            detail.push_str(", no demonstrating case found");
        }
        for n in &self.notes {
            detail.push_str("; ");
            detail.push_str(n);
        }
        InstanceResult {
            instance: instance.to_string(),
            status,
            checked: self.checked,
            skipped: self.skipped,
            detail,
            counterexample: self.counterexample,
        }
    }
}

fn oracle_witnesses(g: &Graph, config: &TheoremConfig, class: Verdict) -> Result<Vec<Labeling>> {
    if g.vertex_count() > config.bounds.vertex_cap {
        return Ok(Vec::new());
    }
    collect_witnesses(g, &config.bounds.with_class(Some(class)), config.witness_limit)
}

fn push_unique(out: &mut Vec<Labeling>, f: Labeling) {
    if !out.contains(&f) {
        out.push(f);
    }
}

fn iso_labelings(g: &Graph, config: &TheoremConfig) -> Result<Vec<Labeling>> {
    let mut out = Vec::new();
    for d in 1..=3 {
        for size in [3, 4] {
            if let Ok(f) = construct_iso_uniform(g, d, size) {
                push_unique(&mut out, f);
            }
        }
    }
    for f in oracle_witnesses(g, config, Verdict::Isoarithmetic)? {
        push_unique(&mut out, f);
    }
    Ok(out)
}

fn bi_labelings(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Vec<Labeling>> {
    let mut out = Vec::new();
    for k in [2, 3] {
        if let Ok(f) = construct_bi_bipartite(g, 1, k) {
            push_unique(&mut out, f);
        }
    }
    if g.structural_predicates().path && g.edge_count() > 1 {
        for k in [2, 3] {
            for size in [3, 4] {
                if let Ok(f) = construct_bi_path(g, 1, k, &vec![size; g.vertex_count()]) {
                    push_unique(&mut out, f);
                }
            }
        }
    }
    for &class in reading.classes() {
        for f in oracle_witnesses(g, config, class)? {
            push_unique(&mut out, f);
        }
    }
    Ok(out)
}

fn semi_labelings(g: &Graph, config: &TheoremConfig) -> Result<Vec<Labeling>> {
    oracle_witnesses(g, config, Verdict::SemiArithmetic)
}

fn reducible_vertices(g: &Graph) -> Vec<String> {
    g.vertices()
        .filter(|v| g.reduction_neighbors(v).is_ok())
        .map(str::to_string)
        .collect()
}

fn outside_ap_family(v: Verdict) -> bool {
    !v.is_arithmetic() && v != Verdict::SemiArithmetic
}

fn check_iso_contract(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in iso_labelings(g, config)? {
        for e in g.edges() {
            if let Some(out) = t.attempt(transfer_contract(g, &f, e))? {
                let v = out.report.verdict;
                t.expect(v == Verdict::Isoarithmetic, &f, || format!("contracting {e} gives {v}"));
            }
        }
    }
    Ok(t)
}

fn check_iso_reduce(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let vertices = reducible_vertices(g);
    if vertices.is_empty() {
        return Ok(Tally::not_applicable("no vertex admits a topological reduction"));
    }
    let mut t = Tally::default();
    for f in iso_labelings(g, config)? {
        for v in &vertices {
            if let Some(out) = t.attempt(transfer_reduce(g, &f, v))? {
                let verdict = out.report.verdict;
                t.expect(verdict == Verdict::Isoarithmetic, &f, || format!("reducing {v} gives {verdict}"));
            }
        }
    }
    Ok(t)
}

fn check_iso_subdivide(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in iso_labelings(g, config)? {
        let mut selections: Vec<Option<Vec<EdgeId>>> = vec![None];
        selections.extend(g.edges().map(|e| Some(vec![e.clone()])));
        for sel in &selections {
            if let Some(out) = t.attempt(transfer_subdivide(g, &f, sel.as_deref()))? {
                let v = out.report.verdict;
                t.expect(v == Verdict::Isoarithmetic, &f, || format!("subdividing {sel:?} gives {v}"));
            }
        }
    }
    Ok(t)
}

fn check_iso_line(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in iso_labelings(g, config)? {
        if let Some(out) = t.attempt(transfer_line(g, &f))? {
            let v = out.report.verdict;
            t.expect(v == Verdict::Isoarithmetic, &f, || format!("line graph is {v}"));
        }
    }
    Ok(t)
}

fn check_iso_total(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in iso_labelings(g, config)? {
        if let Some(out) = t.attempt(transfer_total(g, &f))? {
            let v = out.report.verdict;
            t.expect(v == Verdict::Isoarithmetic, &f, || format!("total graph is {v}"));
        }
    }
    Ok(t)
}

fn check_line_bipartite(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    let bipartite = g.structural_predicates().bipartite;
    let mut t = Tally::default();
    if bipartite {
        // Existence: the two-index construction.
        for k in [2, 3] {
            let f = construct_bi_bipartite(g, 1, k)?;
            if let Some(out) = t.attempt(transfer_line(g, &f))? {
                let v = out.report.verdict;
                t.expect(v == Verdict::Isoarithmetic, &f, || format!("line graph of the k={k} construction is {v}"));
            }
        }
    }
    // Converse: an isoarithmetic line graph forces a bipartite graph.
    for f in bi_labelings(g, config, reading)? {
        if let Some(out) = t.attempt(transfer_line(g, &f))? {
            let v = out.report.verdict;
            t.expect(bipartite || v != Verdict::Isoarithmetic, &f, || {
                "isoarithmetic line graph on a non-bipartite graph".to_string()
            });
        }
    }
    Ok(t)
}

fn check_line_acyclic(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    if g.structural_predicates().acyclic {
        return Ok(Tally::not_applicable("graph is acyclic"));
    }
    let mut t = Tally::default();
    for f in bi_labelings(g, config, reading)? {
        if let Some(out) = t.attempt(transfer_line(g, &f))? {
            let v = out.report.verdict;
            t.expect(!v.is_biarithmetic(), &f, || format!("line graph of a cyclic graph is {v}"));
        }
    }
    Ok(t)
}

fn check_line_path(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    if g.structural_predicates().path {
        if g.edge_count() < 2 {
            return Ok(Tally::not_applicable("line graph is a single vertex"));
        }
        let n = g.vertex_count();
        for k in [2, 3] {
            let f = construct_bi_path(g, 1, k, &vec![3; n])?;
            if let Some(out) = t.attempt(transfer_line(g, &f))? {
                let v = out.report.verdict;
                t.expect(v.is_biarithmetic(), &f, || format!("line graph of the k={k} path construction is {v}"));
            }
        }
    } else {
        for f in bi_labelings(g, config, reading)? {
            if let Some(out) = t.attempt(transfer_line(g, &f))? {
                let v = out.report.verdict;
                t.expect(!v.is_biarithmetic(), &f, || format!("line graph of a non-path is {v}"));
            }
        }
    }
    Ok(t)
}

fn check_k_overflow(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in semi_labelings(g, config)? {
        let report = classify(g, &f)?;
        let overflow: Vec<&EdgeId> = report
            .per_edge
            .iter()
            .filter(|r| r.k_factor.as_ref().is_some_and(|k| !k.within_bound))
            .map(|r| &r.edge)
            .collect();
        if overflow.is_empty() {
            continue;
        }
        for e in &overflow {
            let label = f.induced_edge_label(e)?;
            t.expect(!label.is_ap(), &f, || format!("overflowing edge {e} has AP label {label}"));
        }
        if let Some(out) = t.attempt(transfer_line(g, &f))? {
            let non_ap = overflow
                .iter()
                .all(|e| out.labeling.get(&e.to_string()).is_some_and(|s| !s.is_ap()));
            let v = out.report.verdict;
            t.expect(non_ap && v == Verdict::IasiNonAp, &f, || format!("line graph is {v}"));
        }
    }
    Ok(t)
}

fn check_total_arithmetic(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in bi_labelings(g, config, reading)? {
        if let Some(out) = t.attempt(transfer_total(g, &f))? {
            let v = out.report.verdict;
            t.expect(v.is_arithmetic(), &f, || format!("total graph is {v}"));
        }
    }
    Ok(t)
}

fn check_total_not_bi(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    if g.edge_count() == 0 {
        return Ok(Tally::not_applicable("graph has no edge"));
    }
    let mut t = Tally::default();
    for f in bi_labelings(g, config, reading)? {
        if let Some(out) = t.attempt(transfer_total(g, &f))? {
            let v = out.report.verdict;
            t.expect(!v.is_biarithmetic(), &f, || format!("transferred total graph labeling is {v}"));
        }
    }
    let total = g.total_graph()?;
    if total.vertex_count() <= config.bounds.vertex_cap {
        for &class in reading.classes() {
            let out = search_labeling(&total, &config.bounds.with_class(Some(class)))?;
            match out.witness {
                Some(w) => t.fail(&w, format!("oracle found a {class} labeling of the total graph")),
                None if out.exhausted => t.pass(),
                None => t.notes.push(format!("{class} search not exhausted")),
            }
        }
    } else {
        t.notes.push(format!(
            "total graph has {} vertices, above the oracle cap",
            total.vertex_count()
        ));
    }
    Ok(t)
}

fn check_contract_not_bi(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    let mut t = Tally { witnessed: Some(false), ..Default::default() };
    for f in bi_labelings(g, config, reading)? {
        for e in g.edges() {
            if let Some(out) = t.attempt(transfer_contract(g, &f, e))? {
                t.pass();
                if !out.report.verdict.is_biarithmetic() {
                    t.witnessed = Some(true);
                }
            }
        }
    }
    if t.checked == 0 {
        return Ok(Tally::not_applicable("no contraction leaves a valid labeling"));
    }
    Ok(t)
}

fn check_reduce_not_bi(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    let vertices = reducible_vertices(g);
    if vertices.is_empty() {
        return Ok(Tally::not_applicable("no vertex admits a topological reduction"));
    }
    let mut t = Tally::default();
    for f in bi_labelings(g, config, reading)? {
        for v in &vertices {
            if let Some(out) = t.attempt(transfer_reduce(g, &f, v))? {
                let verdict = out.report.verdict;
                t.expect(!verdict.is_biarithmetic(), &f, || format!("reducing {v} gives {verdict}"));
            }
        }
    }
    Ok(t)
}

fn check_subdivide_not_bi(g: &Graph, config: &TheoremConfig, reading: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in bi_labelings(g, config, reading)? {
        let mut selections: Vec<Option<Vec<EdgeId>>> = vec![None];
        selections.extend(g.edges().map(|e| Some(vec![e.clone()])));
        for sel in &selections {
            if let Some(out) = t.attempt(transfer_subdivide(g, &f, sel.as_deref()))? {
                let v = out.report.verdict;
                t.expect(!v.is_biarithmetic(), &f, || format!("subdividing {sel:?} gives {v}"));
            }
        }
    }
    Ok(t)
}

fn check_semi_contract(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in semi_labelings(g, config)? {
        for e in g.edges() {
            if let Some(out) = t.attempt(transfer_contract(g, &f, e))? {
                let v = out.report.verdict;
                t.expect(outside_ap_family(v), &f, || format!("contracting {e} gives {v}"));
            }
        }
    }
    Ok(t)
}

fn check_semi_reduce(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let vertices = reducible_vertices(g);
    if vertices.is_empty() {
        return Ok(Tally::not_applicable("no vertex admits a topological reduction"));
    }
    let mut t = Tally::default();
    for f in semi_labelings(g, config)? {
        for v in &vertices {
            if let Some(out) = t.attempt(transfer_reduce(g, &f, v))? {
                let verdict = out.report.verdict;
                t.expect(outside_ap_family(verdict), &f, || format!("reducing {v} gives {verdict}"));
            }
        }
    }
    Ok(t)
}

fn check_semi_subdivide(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in semi_labelings(g, config)? {
        if let Some(out) = t.attempt(transfer_subdivide(g, &f, None))? {
            let v = out.report.verdict;
            t.expect(outside_ap_family(v), &f, || format!("subdivision is {v}"));
        }
    }
    Ok(t)
}

fn check_semi_line(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in semi_labelings(g, config)? {
        if let Some(out) = t.attempt(transfer_line(g, &f))? {
            let v = out.report.verdict;
            t.expect(outside_ap_family(v), &f, || format!("line graph is {v}"));
        }
    }
    Ok(t)
}

fn check_semi_total(g: &Graph, config: &TheoremConfig, _: Reading) -> Result<Tally> {
    let mut t = Tally::default();
    for f in semi_labelings(g, config)? {
        if let Some(out) = t.attempt(transfer_total(g, &f))? {
            let v = out.report.verdict;
            t.expect(outside_ap_family(v), &f, || format!("total graph is {v}"));
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn status_of(report: &TheoremReport, instance: &str) -> Status {
        report.instances.iter().find(|r| r.instance == instance).unwrap().status
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<&str> = THEOREMS.iter().map(|t| t.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), THEOREMS.len());
        assert!(matches!(lookup("nope"), Err(IasiError::UnknownTheorem(_))));
    }

    #[test]
    fn path_law_separates_paths_from_stars_and_cycles() {
        let config = TheoremConfig::default();
        let r = verify_theorem("line-bi-iff-path", &["P2", "P3", "P4", "K1,3", "C4"], &config).unwrap();
        assert_eq!(status_of(&r, "P2"), Status::Skipped);
        assert_eq!(status_of(&r, "P3"), Status::Pass);
        assert_eq!(status_of(&r, "P4"), Status::Pass);
        assert_eq!(status_of(&r, "K1,3"), Status::Pass);
        assert_eq!(status_of(&r, "C4"), Status::Pass);
        assert!(r.passed);
    }

    #[test]
    fn contraction_of_c4_is_not_biarithmetic() {
        let r = verify_theorem("contract-not-bi", &["C4"], &TheoremConfig::default()).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn total_graphs_of_p2_p3_have_no_identical_labeling() {
        let r = verify_theorem("total-not-bi", &["P2", "P3"], &TheoremConfig::default()).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert!(matches!(
            verify_theorem("line-preserves-iso", &["X9"], &TheoremConfig::default()),
            Err(IasiError::UnknownFixture(_))
        ));
    }
}
