//! Constructors for isoarithmetic and identical-biarithmetic labelings.
//!
//! Each vertex gets a fixed difference and length; only the first terms are
//! searched, by a greedy scan in vertex-id order that backtracks when a choice
//! leaves no injective continuation.

use std::collections::{BTreeMap, HashSet};

use crate::error::{IasiError, Result};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::set::{IntSet, MIN_LABEL_LEN};

/// Default first-term bound: `10 * |V| * max size`.
pub fn default_first_term_bound(g: &Graph, max_size: usize) -> u64 {
    10 * g.vertex_count() as u64 * max_size as u64
}

struct Scan<'a> {
    order: Vec<&'a str>,
    /// Neighbors that come earlier in `order`.
    earlier: Vec<Vec<usize>>,
    shapes: Vec<(u64, usize)>,
    bound: u64,
    labels: Vec<IntSet>,
    vertex_seen: HashSet<IntSet>,
    edge_seen: HashSet<IntSet>,
}

impl<'a> Scan<'a> {
    fn run(&mut self) -> Result<bool> {
        let i = self.labels.len();
        if i == self.order.len() {
            return Ok(true);
        }
        let (diff, len) = self.shapes[i];
        for first in 0..=self.bound {
            let label = IntSet::arithmetic(first, diff, len)?;
            if self.vertex_seen.contains(&label) {
                continue;
            }
            let mut new_edges = Vec::with_capacity(self.earlier[i].len());
            let mut ok = true;
            for &j in &self.earlier[i] {
                let s = label.sumset(&self.labels[j])?;
                if self.edge_seen.contains(&s) || new_edges.contains(&s) {
                    ok = false;
                    break;
                }
                new_edges.push(s);
            }
            if !ok {
                continue;
            }
            self.vertex_seen.insert(label.clone());
            self.edge_seen.extend(new_edges.iter().cloned());
            self.labels.push(label);
            if self.run()? {
                return Ok(true);
            }
            let label = self.labels.pop().unwrap();
            self.vertex_seen.remove(&label);
            for s in &new_edges {
                self.edge_seen.remove(s);
            }
        }
        Ok(false)
    }
}

/// Finds first terms so that the AP labels with the given `(diff, len)` per
/// vertex form an injective labeling.
pub fn scan_first_terms(g: &Graph, shapes: &BTreeMap<String, (u64, usize)>, bound: u64) -> Result<Labeling> {
    g.require_no_isolated()?;
    let order: Vec<&str> = g.vertices().collect();
    let position: BTreeMap<&str, usize> = order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut shape_list = Vec::with_capacity(order.len());
    for v in &order {
        let &(diff, len) = shapes
            .get(*v)
            .ok_or_else(|| IasiError::InvalidParameter(format!("no size given for vertex `{v}`")))?;
        if diff == 0 {
            return Err(IasiError::InvalidParameter("differences must be positive".into()));
        }
        if len < MIN_LABEL_LEN {
            return Err(IasiError::InvalidParameter(format!(
                "size {len} for `{v}` is below {MIN_LABEL_LEN}"
            )));
        }
        shape_list.push((diff, len));
    }
    let earlier = order
        .iter()
        .enumerate()
        .map(|(i, v)| {
            g.neighbors(v)
                .map(|n| position[n])
                .filter(|&j| j < i)
                .collect()
        })
        .collect();
    let mut scan = Scan {
        order,
        earlier,
        shapes: shape_list,
        bound,
        labels: Vec::new(),
        vertex_seen: HashSet::new(),
        edge_seen: HashSet::new(),
    };
    if scan.run()? {
        Ok(scan
            .order
            .iter()
            .zip(scan.labels)
            .map(|(v, s)| (v.to_string(), s))
            .collect())
    } else {
        Err(IasiError::ConstructionFailed { bound })
    }
}

/// Isoarithmetic labeling: every vertex uses difference `d`, sizes per vertex.
pub fn construct_iso(g: &Graph, d: u64, sizes: &BTreeMap<String, usize>) -> Result<Labeling> {
    if d == 0 {
        return Err(IasiError::InvalidParameter("d must be positive".into()));
    }
    let shapes = sizes.iter().map(|(v, &n)| (v.clone(), (d, n))).collect();
    let max_size = sizes.values().copied().max().unwrap_or(MIN_LABEL_LEN);
    scan_first_terms(g, &shapes, default_first_term_bound(g, max_size))
}

/// [`construct_iso`] with one size for every vertex.
pub fn construct_iso_uniform(g: &Graph, d: u64, size: usize) -> Result<Labeling> {
    let sizes = g.vertices().map(|v| (v.to_string(), size)).collect();
    construct_iso(g, d, &sizes)
}

/// Identical-biarithmetic labeling of a bipartite graph: part `X` gets
/// difference `d`, part `Y` gets `k*d`, every label has `max(3, k)` terms.
pub fn construct_bi_bipartite(g: &Graph, d: u64, k: u64) -> Result<Labeling> {
    if d == 0 {
        return Err(IasiError::InvalidParameter("d must be positive".into()));
    }
    if k < 2 {
        return Err(IasiError::InvalidParameter("k must exceed 1".into()));
    }
    let (x, y) = g
        .structural_predicates()
        .bipartition
        .ok_or_else(|| IasiError::NotApplicable("graph is not bipartite".into()))?;
    let size = usize::try_from(k).unwrap_or(usize::MAX).max(MIN_LABEL_LEN);
    let high = k.checked_mul(d).ok_or(IasiError::Overflow("difference"))?;
    let shapes = x
        .into_iter()
        .map(|v| (v, (d, size)))
        .chain(y.into_iter().map(|v| (v, (high, size))))
        .collect();
    scan_first_terms(g, &shapes, default_first_term_bound(g, size))
}

/// Identical-biarithmetic labeling of a path `v1 ... vn` with `d_i = k^(i-1) * d1`.
/// `sizes` are given in path order (see [`Graph::path_order`]).
pub fn construct_bi_path(g: &Graph, d1: u64, k: u64, sizes: &[usize]) -> Result<Labeling> {
    let order = g.path_order()?;
    if d1 == 0 {
        return Err(IasiError::InvalidParameter("d1 must be positive".into()));
    }
    if k < 2 {
        return Err(IasiError::InvalidParameter("k must exceed 1".into()));
    }
    if sizes.len() != order.len() {
        return Err(IasiError::InvalidParameter(format!(
            "{} sizes given for a path on {} vertices",
            sizes.len(),
            order.len()
        )));
    }
    let min_size = *sizes.iter().min().unwrap();
    if (min_size as u64) < k {
        return Err(IasiError::InvalidParameter(format!(
            "k = {k} exceeds the smallest size {min_size}"
        )));
    }
    let mut shapes = BTreeMap::new();
    let mut diff = d1;
    for (i, (v, &n)) in order.iter().zip(sizes).enumerate() {
        if i > 0 {
            diff = diff.checked_mul(k).ok_or(IasiError::Overflow("difference"))?;
        }
        shapes.insert(v.clone(), (diff, n));
    }
    let max_size = *sizes.iter().max().unwrap();
    scan_first_terms(g, &shapes, default_first_term_bound(g, max_size))
}
