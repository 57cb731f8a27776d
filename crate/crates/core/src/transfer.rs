//! Carrying a labeling over to an associated graph.
//!
//! Every transfer copies existing labels and gives each new vertex the label of
//! the edge it stands for. Injectivity of the result is re-checked rather than
//! assumed; a clash is reported as [`IasiError::TransferCollision`].

use serde::Serialize;

use crate::error::{IasiError, Result};
use crate::graph::{contracted_vertex, subdivision_vertex, EdgeId, Graph};
use crate::labeling::{classify, verify_iasi, ClassReport, Labeling};

/// A transformed graph, its transferred labeling and the labeling's classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transferred {
    pub graph: Graph,
    pub labeling: Labeling,
    pub report: ClassReport,
}

fn finish(graph: Graph, labeling: Labeling) -> Result<Transferred> {
    let check = verify_iasi(&graph, &labeling)?;
    if let Some((a, b)) = check.vertex_collision {
        return Err(IasiError::TransferCollision(format!(
            "vertices {a} and {b} both carry {}",
            labeling.label(&a)?
        )));
    }
    if let Some((a, b)) = check.edge_collision {
        return Err(IasiError::TransferCollision(format!(
            "edges {a} and {b} both carry {}",
            labeling.induced_edge_label(&a)?
        )));
    }
    let report = classify(&graph, &labeling)?;
    Ok(Transferred { graph, labeling, report })
}

/// Contracts `e`; the merged vertex carries `f+(e)`.
pub fn transfer_contract(g: &Graph, f: &Labeling, e: &EdgeId) -> Result<Transferred> {
    f.check_total(g)?;
    let merged_label = f.induced_edge_label(e)?;
    let graph = g.contract_edge(e, None)?;
    let merged = contracted_vertex(e);
    let mut labeling: Labeling = f
        .iter()
        .filter(|(v, _)| !e.has_endpoint(v))
        .map(|(v, s)| (v.to_string(), s.clone()))
        .collect();
    labeling.insert(merged, merged_label);
    finish(graph, labeling)
}

/// Topological reduction at `v`; surviving vertices keep their labels.
pub fn transfer_reduce(g: &Graph, f: &Labeling, v: &str) -> Result<Transferred> {
    f.check_total(g)?;
    let graph = g.topological_reduce(v)?;
    let labeling = f.restrict(&graph)?;
    finish(graph, labeling)
}

/// Subdivides the selected edges (all when `None`); each new vertex `s:u~v`
/// carries `f+(uv)`.
pub fn transfer_subdivide(g: &Graph, f: &Labeling, edges: Option<&[EdgeId]>) -> Result<Transferred> {
    f.check_total(g)?;
    let graph = g.subdivide(edges)?;
    let mut labeling = f.clone();
    let selected: Vec<&EdgeId> = match edges {
        Some(list) => list.iter().collect(),
        None => g.edges().collect(),
    };
    for e in selected {
        labeling.insert(subdivision_vertex(e), f.induced_edge_label(e)?);
    }
    finish(graph, labeling)
}

/// Line graph; vertex `u~v` carries `f+(uv)`.
pub fn transfer_line(g: &Graph, f: &Labeling) -> Result<Transferred> {
    f.check_total(g)?;
    let graph = g.line_graph()?;
    let labeling = f
        .induced_edge_labels(g)?
        .into_iter()
        .map(|(e, s)| (e.to_string(), s))
        .collect();
    finish(graph, labeling)
}

/// Total graph; `v:x` carries `f(x)` and `e:u~v` carries `f+(uv)`.
pub fn transfer_total(g: &Graph, f: &Labeling) -> Result<Transferred> {
    f.check_total(g)?;
    let graph = g.total_graph()?;
    let mut labeling: Labeling = f.iter().map(|(v, s)| (format!("v:{v}"), s.clone())).collect();
    for (e, s) in f.induced_edge_labels(g)? {
        labeling.insert(format!("e:{e}"), s);
    }
    finish(graph, labeling)
}

/// The five transfers, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferKind {
    Contract,
    Reduce,
    Subdivide,
    Line,
    Total,
}

impl TransferKind {
    pub const ALL: [TransferKind; 5] = [
        TransferKind::Contract,
        TransferKind::Reduce,
        TransferKind::Subdivide,
        TransferKind::Line,
        TransferKind::Total,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TransferKind::Contract => "contract",
            TransferKind::Reduce => "reduce",
            TransferKind::Subdivide => "subdivide",
            TransferKind::Line => "line",
            TransferKind::Total => "total",
        }
    }
}
