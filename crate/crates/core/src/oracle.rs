//! Exhaustive witness search over bounded AP labelings.
//!
//! Every vertex ranges over the AP profiles `(a, d, n)` with `a <= a_max`,
//! `1 <= d <= d_max` and `n_min <= n <= n_max`, in lexicographic order.
//! Vertices are assigned in id order, so the first witness found is the
//! lexicographically least one. Partial assignments are pruned as soon as two
//! vertex labels or two edge labels coincide, or an edge breaks the per-edge
//! requirement of the target class. Complete assignments are handed to
//! [`classify`] and only reported when the verdict matches the target.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{IasiError, Result};
use crate::graph::Graph;
use crate::labeling::{classify, Labeling, Verdict};
use crate::set::{IntSet, MIN_LABEL_LEN};

pub const DEFAULT_VERTEX_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub a_max: u64,
    pub d_max: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Target verdict; `None` accepts every IASI whose vertex labels are admissible AP-sets.
    pub class: Option<Verdict>,
    pub vertex_cap: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            a_max: 6,
            d_max: 6,
            n_min: 3,
            n_max: 5,
            class: None,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl SearchBounds {
    pub fn for_class(class: Verdict) -> Self {
        SearchBounds { class: Some(class), ..Default::default() }
    }

    pub fn with_class(mut self, class: Option<Verdict>) -> Self {
        self.class = class;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.d_max < 1 {
            return Err(IasiError::InvalidBounds("d_max must be at least 1".into()));
        }
        if self.n_min < MIN_LABEL_LEN || self.n_min > self.n_max {
            return Err(IasiError::InvalidBounds(format!(
                "need {MIN_LABEL_LEN} <= n_min <= n_max, got {}..{}",
                self.n_min, self.n_max
            )));
        }
        if let Some(v) = self.class {
            if matches!(v, Verdict::NotIasi | Verdict::IasiNonAp) {
                return Err(IasiError::InvalidBounds(format!(
                    "class {v} cannot be reached with AP vertex labels"
                )));
            }
        }
        Ok(())
    }

    /// Number of profiles available to a single vertex.
    pub fn profiles_per_vertex(&self) -> u64 {
        (self.a_max + 1) * self.d_max * (self.n_max - self.n_min + 1) as u64
    }

    /// Raw candidate-space size `profiles^|V|`, saturating.
    pub fn space_size(&self, vertices: usize) -> u64 {
        let p = self.profiles_per_vertex();
        (0..vertices).fold(1u64, |acc, _| acc.saturating_mul(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub found: bool,
    /// True only when the whole space was scanned; a negative answer means
    /// nothing without it.
    pub exhausted: bool,
    pub space_size: u64,
    pub witness: Option<Labeling>,
}

#[derive(Debug, Clone)]
struct Candidate {
    d: u64,
    set: IntSet,
}

fn candidates(bounds: &SearchBounds) -> Result<Vec<Candidate>> {
    let mut out = Vec::with_capacity(bounds.profiles_per_vertex() as usize);
    for a in 0..=bounds.a_max {
        for d in 1..=bounds.d_max {
            for n in bounds.n_min..=bounds.n_max {
                out.push(Candidate { d, set: IntSet::arithmetic(a, d, n)? });
            }
        }
    }
    Ok(out)
}

/// Depth-first assignment over per-vertex candidate lists.
struct Dfs<'a> {
    graph: &'a Graph,
    names: Vec<&'a str>,
    earlier: Vec<Vec<usize>>,
    later: Vec<Vec<usize>>,
    /// Distinct differences available to every vertex.
    diffs: Vec<u64>,
    lists: Vec<&'a [Candidate]>,
    class: Option<Verdict>,
    chosen: Vec<usize>,
    vertex_seen: HashSet<&'a IntSet>,
    edge_seen: HashSet<IntSet>,
    edge_stack: Vec<Vec<IntSet>>,
    /// Common ratio fixed by the first edge (identical-biarithmetic target).
    common_k: Vec<Option<u64>>,
}

impl<'a> Dfs<'a> {
    fn new(graph: &'a Graph, lists: Vec<&'a [Candidate]>, class: Option<Verdict>) -> Self {
        let names: Vec<&str> = graph.vertices().collect();
        let earlier = names
            .iter()
            .enumerate()
            .map(|(i, v)| {
                graph
                    .neighbors(v)
                    .map(|n| names.binary_search(&n).unwrap())
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect::<Vec<Vec<usize>>>();
        let mut later = vec![Vec::new(); names.len()];
        for (i, before) in earlier.iter().enumerate() {
            for &j in before {
                later[j].push(i);
            }
        }
        let mut diffs: Vec<u64> = lists.iter().flat_map(|l| l.iter().map(|c| c.d)).collect();
        diffs.sort_unstable();
        diffs.dedup();
        Dfs {
            graph,
            names,
            earlier,
            later,
            diffs,
            lists,
            class,
            chosen: Vec::new(),
            vertex_seen: HashSet::new(),
            edge_seen: HashSet::new(),
            edge_stack: Vec::new(),
            common_k: vec![None],
        }
    }

    fn candidate(&self, vertex: usize, idx: usize) -> &'a Candidate {
        &self.lists[vertex][idx]
    }

    /// Per-edge requirement of the target class. Sumset AP status is read
    /// directly off the enumerated sumset.
    fn edge_ok(&self, low: &Candidate, high: &Candidate, sum: &IntSet, k_slot: &mut Option<u64>) -> bool {
        let class = match self.class {
            None | Some(Verdict::SemiArithmetic) => return true,
            Some(c) => c,
        };
        if !sum.is_ap() {
            return false;
        }
        let (lo, hi) = if low.d <= high.d { (low, high) } else { (high, low) };
        let ratio = (hi.d % lo.d == 0).then_some(hi.d / lo.d);
        match class {
            Verdict::Isoarithmetic => ratio == Some(1),
            Verdict::Biarithmetic => ratio.is_some_and(|k| k > 1),
            Verdict::IdenticalBiarithmetic => match (ratio, *k_slot) {
                (Some(k), Some(fixed)) => k == fixed,
                (Some(k), None) if k > 1 => {
                    *k_slot = Some(k);
                    true
                }
                _ => false,
            },
            _ => true,
        }
    }

    /// Tries candidate `idx` for the next vertex; on success pushes state.
    fn push(&mut self, idx: usize) -> Result<bool> {
        let i = self.chosen.len();
        let cand = self.candidate(i, idx);
        if self.vertex_seen.contains(&cand.set) {
            return Ok(false);
        }
        if self.class == Some(Verdict::Isoarithmetic) && i > 0 {
            if cand.d != self.candidate(0, self.chosen[0]).d {
                return Ok(false);
            }
        }
        let mut k_slot = *self.common_k.last().unwrap();
        let mut new_edges: Vec<IntSet> = Vec::with_capacity(self.earlier[i].len());
        for &j in &self.earlier[i] {
            let other = self.candidate(j, self.chosen[j]);
            let sum = cand.set.sumset(&other.set)?;
            if self.edge_seen.contains(&sum) || new_edges.contains(&sum) {
                return Ok(false);
            }
            if !self.edge_ok(cand, other, &sum, &mut k_slot) {
                return Ok(false);
            }
            new_edges.push(sum);
        }
        self.vertex_seen.insert(&cand.set);
        for s in &new_edges {
            self.edge_seen.insert(s.clone());
        }
        self.edge_stack.push(new_edges);
        self.common_k.push(k_slot);
        self.chosen.push(idx);
        if !self.differences_feasible(i) {
            self.pop();
            return Ok(false);
        }
        Ok(true)
    }

    /// Forward check on differences alone: every unassigned neighbor of vertex
    /// `i` must still have a difference compatible with all its assigned
    /// neighbors under the target class.
    fn differences_feasible(&self, i: usize) -> bool {
        let class = match self.class {
            Some(c @ (Verdict::Isoarithmetic | Verdict::Biarithmetic | Verdict::IdenticalBiarithmetic)) => c,
            _ => return true,
        };
        let fixed_k = *self.common_k.last().unwrap();
        let ratio = |x: u64, y: u64| {
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            (hi % lo == 0).then_some(hi / lo)
        };
        self.later[i].iter().all(|&w| {
            let assigned: Vec<u64> = self.earlier[w]
                .iter()
                .filter(|&&j| j <= i)
                .map(|&j| self.candidate(j, self.chosen[j]).d)
                .collect();
            self.diffs.iter().any(|&d| {
                let mut k_seen = fixed_k;
                assigned.iter().all(|&other| match (class, ratio(d, other)) {
                    (Verdict::Isoarithmetic, r) => r == Some(1),
                    (Verdict::Biarithmetic, r) => r.is_some_and(|k| k > 1),
                    (_, Some(k)) if k > 1 => match k_seen {
                        Some(fixed) => k == fixed,
                        None => {
                            k_seen = Some(k);
                            true
                        }
                    },
                    _ => false,
                })
            })
        })
    }

    fn pop(&mut self) {
        let i = self.chosen.len() - 1;
        let idx = self.chosen.pop().unwrap();
        let set = &self.lists[i][idx].set;
        self.vertex_seen.remove(set);
        for s in self.edge_stack.pop().unwrap() {
            self.edge_seen.remove(&s);
        }
        self.common_k.pop();
    }

    fn labeling(&self) -> Labeling {
        self.names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.to_string(), self.candidate(i, self.chosen[i]).set.clone()))
            .collect()
    }

    fn accepts(&self, f: &Labeling) -> Result<bool> {
        let verdict = classify(self.graph, f)?.verdict;
        Ok(match self.class {
            Some(target) => verdict == target,
            None => verdict != Verdict::NotIasi && verdict != Verdict::IasiNonAp,
        })
    }

    fn walk<F>(&mut self, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(Labeling) -> ControlFlow<()>,
    {
        let i = self.chosen.len();
        if i == self.names.len() {
            let f = self.labeling();
            if self.accepts(&f)? {
                return Ok(visit(f));
            }
            return Ok(ControlFlow::Continue(()));
        }
        for idx in 0..self.lists[i].len() {
            if self.push(idx)? {
                let flow = self.walk(visit)?;
                self.pop();
                if flow.is_break() {
                    return Ok(flow);
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn first(&mut self) -> Result<Option<Labeling>> {
        let mut found = None;
        let _ = self.walk(&mut |f| {
            found = Some(f);
            ControlFlow::Break(())
        })?;
        Ok(found)
    }
}

fn check_input(g: &Graph, bounds: &SearchBounds) -> Result<()> {
    bounds.validate()?;
    if g.vertex_count() > bounds.vertex_cap {
        return Err(IasiError::SearchTooLarge { vertices: g.vertex_count(), cap: bounds.vertex_cap });
    }
    g.require_no_isolated()
}

/// Returns the lexicographically least labeling of the target class, or an
/// exhaustion certificate.
///
/// The first vertex's candidates are split across worker threads; the result
/// is the first witness in candidate order, so it does not depend on scheduling.
pub fn search_labeling(g: &Graph, bounds: &SearchBounds) -> Result<SearchOutcome> {
    check_input(g, bounds)?;
    let cands = candidates(bounds)?;
    let space_size = bounds.space_size(g.vertex_count());
    let lists = vec![cands.as_slice(); g.vertex_count()];

    let witness = (0..cands.len())
        .into_par_iter()
        .map(|first| -> Result<Option<Labeling>> {
            let mut dfs = Dfs::new(g, lists.clone(), bounds.class);
            if !dfs.push(first)? {
                return Ok(None);
            }
            dfs.first()
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();

    Ok(SearchOutcome {
        found: witness.is_some(),
        exhausted: witness.is_none(),
        space_size,
        witness,
    })
}

/// Statistics of a full enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub visited: usize,
    /// False when the visitor stopped the walk early.
    pub exhausted: bool,
}

/// Calls `visit` on every labeling of the target class, in lexicographic order.
pub fn enumerate_labelings<F>(g: &Graph, bounds: &SearchBounds, mut visit: F) -> Result<Enumeration>
where
    F: FnMut(&Labeling) -> ControlFlow<()>,
{
    check_input(g, bounds)?;
    let cands = candidates(bounds)?;
    let lists = vec![cands.as_slice(); g.vertex_count()];
    let mut dfs = Dfs::new(g, lists, bounds.class);
    let mut visited = 0;
    let flow = dfs.walk(&mut |f| {
        visited += 1;
        visit(&f)
    })?;
    Ok(Enumeration { visited, exhausted: flow.is_continue() })
}

/// Collects at most `limit` witnesses of the target class.
pub fn collect_witnesses(g: &Graph, bounds: &SearchBounds, limit: usize) -> Result<Vec<Labeling>> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    enumerate_labelings(g, bounds, |f| {
        out.push(f.clone());
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// For every assignment of `(d, n)` shapes to the vertices, visits the
/// lexicographically least choice of first terms that yields a labeling of the
/// target class (shapes with no such choice are skipped).
///
/// Membership of the sumset in the AP family does not depend on first terms,
/// so this reaches every combination of differences and sizes at a fraction of
/// the cost of [`enumerate_labelings`].
pub fn enumerate_shape_representatives<F>(g: &Graph, bounds: &SearchBounds, mut visit: F) -> Result<Enumeration>
where
    F: FnMut(&Labeling) -> ControlFlow<()>,
{
    check_input(g, bounds)?;
    let mut by_shape: Vec<Vec<Candidate>> = Vec::new();
    for d in 1..=bounds.d_max {
        for n in bounds.n_min..=bounds.n_max {
            let list = (0..=bounds.a_max)
                .map(|a| Ok(Candidate { d, set: IntSet::arithmetic(a, d, n)? }))
                .collect::<Result<Vec<_>>>()?;
            by_shape.push(list);
        }
    }
    let vcount = g.vertex_count();
    let mut shape_of = vec![0usize; vcount];
    let mut visited = 0;
    loop {
        let lists = shape_of.iter().map(|&s| by_shape[s].as_slice()).collect();
        let mut dfs = Dfs::new(g, lists, bounds.class);
        if let Some(f) = dfs.first()? {
            visited += 1;
            if visit(&f).is_break() {
                return Ok(Enumeration { visited, exhausted: false });
            }
        }
        // Odometer over shape indices, last vertex fastest.
        let mut pos = vcount;
        loop {
            if pos == 0 {
                return Ok(Enumeration { visited, exhausted: true });
            }
            pos -= 1;
            shape_of[pos] += 1;
            if shape_of[pos] < by_shape.len() {
                break;
            }
            shape_of[pos] = 0;
        }
    }
}
