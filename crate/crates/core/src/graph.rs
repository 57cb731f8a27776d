//! Finite simple undirected graphs with string vertex ids, the associated-graph
//! constructions (line, total, subdivision, contraction, topological reduction)
//! and the structural predicates used by the theorems.
//!
//! Transformed graphs get deterministic ids:
//!
//! | construction   | new vertex id          |
//! |----------------|------------------------|
//! | line graph     | `u~v` (edge id)        |
//! | total graph    | `v:<id>`, `e:u~v`      |
//! | subdivision    | `s:u~v`                |
//! | contraction    | `u*v` unless renamed   |

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IasiError, Result};

/// Canonical unordered edge `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    u: String,
    v: String,
}

impl EdgeId {
    pub fn new(a: &str, b: &str) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(IasiError::InvalidGraph("vertex ids must be non-empty".into()));
        }
        match a.cmp(b) {
            std::cmp::Ordering::Less => Ok(EdgeId { u: a.into(), v: b.into() }),
            std::cmp::Ordering::Greater => Ok(EdgeId { u: b.into(), v: a.into() }),
            std::cmp::Ordering::Equal => Err(IasiError::InvalidGraph(format!("self-loop at `{a}`"))),
        }
    }

    /// Parses `u~v`.
    pub fn parse(text: &str) -> Result<Self> {
        let (a, b) = text
            .split_once('~')
            .ok_or_else(|| IasiError::Parse(format!("edge id `{text}` is not of the form u~v")))?;
        EdgeId::new(a, b)
    }

    pub fn u(&self) -> &str {
        &self.u
    }

    pub fn v(&self) -> &str {
        &self.v
    }

    pub fn endpoints(&self) -> (&str, &str) {
        (&self.u, &self.v)
    }

    pub fn has_endpoint(&self, x: &str) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: &str) -> Option<&str> {
        if self.u == x {
            Some(&self.v)
        } else if self.v == x {
            Some(&self.u)
        } else {
            None
        }
    }

    pub fn shares_endpoint(&self, other: &EdgeId) -> bool {
        self.has_endpoint(&other.u) || self.has_endpoint(&other.v)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}", self.u, self.v)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for EdgeId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EdgeId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        EdgeId::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Wire form: `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// A finite simple undirected graph.
///
/// Isolated vertices are allowed here; labeling and classification reject them.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct Graph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<EdgeId>,
    adjacency: BTreeMap<String, BTreeSet<String>>,
}

impl TryFrom<GraphDoc> for Graph {
    type Error = IasiError;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        Graph::new(doc.vertices, doc.edges)
    }
}

impl From<Graph> for GraphDoc {
    fn from(g: Graph) -> Self {
        GraphDoc {
            vertices: g.vertices.into_iter().collect(),
            edges: g.edges.into_iter().map(|e| (e.u, e.v)).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Result of [`Graph::structural_predicates`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub bipartite: bool,
    pub acyclic: bool,
    pub path: bool,
    /// `(X, Y)` with the least vertex id of each component placed in `X`.
    pub bipartition: Option<(BTreeSet<String>, BTreeSet<String>)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges, empty ids and undeclared endpoints.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut vs = BTreeSet::new();
        for v in vertices {
            let v = v.as_ref();
            if v.is_empty() {
                return Err(IasiError::InvalidGraph("vertex ids must be non-empty".into()));
            }
            if !vs.insert(v.to_string()) {
                return Err(IasiError::InvalidGraph(format!("vertex `{v}` declared twice")));
            }
        }
        let mut es = BTreeSet::new();
        for (a, b) in edges {
            let e = EdgeId::new(a.as_ref(), b.as_ref())?;
            for x in [&e.u, &e.v] {
                if !vs.contains(x) {
                    return Err(IasiError::InvalidGraph(format!(
                        "edge {e} uses undeclared vertex `{x}`"
                    )));
                }
            }
            if es.contains(&e) {
                return Err(IasiError::InvalidGraph(format!("parallel edge {e}")));
            }
            es.insert(e);
        }
        Ok(Self::from_parts(vs, es))
    }

    /// Builds a graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let vertices: BTreeSet<&str> = edges
            .iter()
            .flat_map(|(a, b)| [a.as_ref(), b.as_ref()])
            .collect();
        Graph::new(vertices, edges.iter().map(|(a, b)| (a.as_ref(), b.as_ref())))
    }

    fn from_parts(vertices: BTreeSet<String>, edges: BTreeSet<EdgeId>) -> Self {
        let mut adjacency: BTreeMap<String, BTreeSet<String>> =
            vertices.iter().map(|v| (v.clone(), BTreeSet::new())).collect();
        for e in &edges {
            adjacency.get_mut(&e.u).unwrap().insert(e.v.clone());
            adjacency.get_mut(&e.v).unwrap().insert(e.u.clone());
        }
        Graph { vertices, edges, adjacency }
    }

    /// Parses a plain-text edge list: one `u v` pair per line, a lone token
    /// declares a vertex, `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut vertices = BTreeSet::new();
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [v] => {
                    vertices.insert(v.to_string());
                }
                [a, b] => {
                    vertices.insert(a.to_string());
                    vertices.insert(b.to_string());
                    edges.push((a.to_string(), b.to_string()));
                }
                _ => {
                    return Err(IasiError::Parse(format!(
                        "line {}: expected `u v`, got `{line}`",
                        lineno + 1
                    )))
                }
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &EdgeId> + '_ {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, e: &EdgeId) -> bool {
        self.edges.contains(e)
    }

    pub fn is_adjacent(&self, a: &str, b: &str) -> bool {
        self.adjacency.get(a).is_some_and(|n| n.contains(b))
    }

    pub fn neighbors(&self, v: &str) -> impl Iterator<Item = &str> + '_ {
        self.adjacency.get(v).into_iter().flatten().map(String::as_str)
    }

    pub fn degree(&self, v: &str) -> usize {
        self.adjacency.get(v).map_or(0, BTreeSet::len)
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.adjacency
            .iter()
            .filter(|(_, n)| n.is_empty())
            .map(|(v, _)| v.as_str())
    }

    /// Errors with the first isolated vertex, if any.
    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertices().next() {
            Some(v) => Err(IasiError::IsolatedVertex(v.to_string())),
            None => Ok(()),
        }
    }

    /// Looks up the edge between `a` and `b`.
    pub fn edge(&self, a: &str, b: &str) -> Result<EdgeId> {
        let e = EdgeId::new(a, b)?;
        if self.edges.contains(&e) {
            Ok(e)
        } else {
            Err(IasiError::UnknownEdge(e.to_string()))
        }
    }

    /// Subgraph on the given edges and their endpoints.
    pub fn edge_subgraph<'a, I: IntoIterator<Item = &'a EdgeId>>(&self, edges: I) -> Result<Graph> {
        let mut es = BTreeSet::new();
        for e in edges {
            if !self.edges.contains(e) {
                return Err(IasiError::UnknownEdge(e.to_string()));
            }
            es.insert(e.clone());
        }
        let vs = es.iter().flat_map(|e| [e.u.clone(), e.v.clone()]).collect();
        Ok(Graph::from_parts(vs, es))
    }

    /// Subgraph induced by a vertex subset.
    pub fn induced_subgraph<'a, I: IntoIterator<Item = &'a str>>(&self, vertices: I) -> Result<Graph> {
        let mut vs = BTreeSet::new();
        for v in vertices {
            if !self.vertices.contains(v) {
                return Err(IasiError::UnknownVertex(v.to_string()));
            }
            vs.insert(v.to_string());
        }
        let es = self
            .edges
            .iter()
            .filter(|e| vs.contains(&e.u) && vs.contains(&e.v))
            .cloned()
            .collect();
        Ok(Graph::from_parts(vs, es))
    }

    /// Line graph: one vertex `u~v` per edge, adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        if self.edges.is_empty() {
            return Err(IasiError::EmptyLineGraph);
        }
        let vertices = self.edges.iter().map(EdgeId::to_string).collect();
        let mut edges = BTreeSet::new();
        // Edges sharing an endpoint are exactly the pairs drawn from one neighborhood.
        for (v, nbrs) in &self.adjacency {
            let incident: Vec<String> = nbrs
                .iter()
                .map(|w| EdgeId::new(v, w).unwrap().to_string())
                .collect();
            for (i, a) in incident.iter().enumerate() {
                for b in &incident[i + 1..] {
                    edges.insert(EdgeId::new(a, b)?);
                }
            }
        }
        Ok(Graph::from_parts(vertices, edges))
    }

    /// Total graph on the vertex-points `v:<id>` and edge-points `e:u~v`.
    pub fn total_graph(&self) -> Result<Graph> {
        if self.vertices.is_empty() {
            return Err(IasiError::InvalidGraph("the total graph of an empty graph".into()));
        }
        let vp = |v: &str| format!("v:{v}");
        let ep = |e: &str| format!("e:{e}");
        let mut vertices: BTreeSet<String> = self.vertices.iter().map(|v| vp(v)).collect();
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            vertices.insert(ep(&e.to_string()));
            edges.insert(EdgeId::new(&vp(&e.u), &vp(&e.v))?);
            edges.insert(EdgeId::new(&vp(&e.u), &ep(&e.to_string()))?);
            edges.insert(EdgeId::new(&vp(&e.v), &ep(&e.to_string()))?);
        }
        if !self.edges.is_empty() {
            for le in self.line_graph()?.edges() {
                edges.insert(EdgeId::new(&ep(&le.u), &ep(&le.v))?);
            }
        }
        Ok(Graph::from_parts(vertices, edges))
    }

    /// Inserts a fresh vertex `s:u~v` into every selected edge (all edges when `None`).
    pub fn subdivide(&self, selected: Option<&[EdgeId]>) -> Result<Graph> {
        let chosen: BTreeSet<EdgeId> = match selected {
            None => self.edges.clone(),
            Some(list) => {
                for e in list {
                    if !self.edges.contains(e) {
                        return Err(IasiError::UnknownEdge(e.to_string()));
                    }
                }
                list.iter().cloned().collect()
            }
        };
        let mut vertices = self.vertices.clone();
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            if chosen.contains(e) {
                let w = subdivision_vertex(e);
                if !vertices.insert(w.clone()) {
                    return Err(IasiError::InvalidGraph(format!("vertex id `{w}` already in use")));
                }
                edges.insert(EdgeId::new(&e.u, &w)?);
                edges.insert(EdgeId::new(&w, &e.v)?);
            } else {
                edges.insert(e.clone());
            }
        }
        Ok(Graph::from_parts(vertices, edges))
    }

    /// Contracts `e` into one vertex (`u*v` unless `new_name` is given).
    /// Parallel edges created by the merge collapse; the contracted edge itself disappears.
    pub fn contract_edge(&self, e: &EdgeId, new_name: Option<&str>) -> Result<Graph> {
        if !self.edges.contains(e) {
            return Err(IasiError::UnknownEdge(e.to_string()));
        }
        let merged = new_name.map_or_else(|| contracted_vertex(e), str::to_string);
        if merged.is_empty() {
            return Err(IasiError::InvalidGraph("vertex ids must be non-empty".into()));
        }
        if merged != e.u && merged != e.v && self.vertices.contains(&merged) {
            return Err(IasiError::InvalidGraph(format!("vertex id `{merged}` already in use")));
        }
        let rename = |x: &str| -> String {
            if e.has_endpoint(x) {
                merged.clone()
            } else {
                x.to_string()
            }
        };
        let mut vertices: BTreeSet<String> = self
            .vertices
            .iter()
            .filter(|v| !e.has_endpoint(v))
            .cloned()
            .collect();
        vertices.insert(merged.clone());
        let mut edges = BTreeSet::new();
        for f in &self.edges {
            let (a, b) = (rename(&f.u), rename(&f.v));
            if a != b {
                edges.insert(EdgeId::new(&a, &b)?);
            }
        }
        Ok(Graph::from_parts(vertices, edges))
    }

    /// Neighbors `(u, w)` of a reducible vertex, or why it is not reducible.
    pub fn reduction_neighbors(&self, v: &str) -> Result<(String, String)> {
        let nbrs = self
            .adjacency
            .get(v)
            .ok_or_else(|| IasiError::UnknownVertex(v.to_string()))?;
        let not_applicable = |reason: String| IasiError::ReductionNotApplicable {
            vertex: v.to_string(),
            reason,
        };
        if nbrs.len() != 2 {
            return Err(not_applicable(format!("degree is {}, not 2", nbrs.len())));
        }
        let mut it = nbrs.iter();
        let (u, w) = (it.next().unwrap(), it.next().unwrap());
        if self.is_adjacent(u, w) {
            return Err(not_applicable(format!("neighbors `{u}` and `{w}` are adjacent")));
        }
        Ok((u.clone(), w.clone()))
    }

    /// Elementary topological reduction: delete the degree-2 vertex `v` and join its
    /// two non-adjacent neighbors.
    pub fn topological_reduce(&self, v: &str) -> Result<Graph> {
        let (u, w) = self.reduction_neighbors(v)?;
        let mut vertices = self.vertices.clone();
        vertices.remove(v);
        let mut edges: BTreeSet<EdgeId> = self
            .edges
            .iter()
            .filter(|e| !e.has_endpoint(v))
            .cloned()
            .collect();
        edges.insert(EdgeId::new(&u, &w)?);
        Ok(Graph::from_parts(vertices, edges))
    }

    /// Vertices in BFS order per component, components ordered by least id.
    fn components(&self) -> Vec<Vec<&str>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in &self.vertices {
            if seen.contains(start.as_str()) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start.as_str()]);
            seen.insert(start.as_str());
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Bipartiteness (with a witness bipartition), acyclicity and path-ness.
    pub fn structural_predicates(&self) -> Structure {
        let components = self.components();

        let mut side: BTreeMap<&str, bool> = BTreeMap::new();
        let mut bipartite = true;
        'outer: for comp in &components {
            side.insert(comp[0], false);
            let mut queue = VecDeque::from([comp[0]]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x];
                for y in self.neighbors(x) {
                    match side.get(y) {
                        Some(&sy) if sy == sx => {
                            bipartite = false;
                            break 'outer;
                        }
                        Some(_) => {}
                        None => {
                            side.insert(y, !sx);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        let bipartition = bipartite.then(|| {
            let mut x = BTreeSet::new();
            let mut y = BTreeSet::new();
            for (v, s) in side {
                if s { y.insert(v.to_string()) } else { x.insert(v.to_string()) };
            }
            (x, y)
        });

        // A forest has exactly |V| - c edges.
        let acyclic = self.edges.len() + components.len() == self.vertices.len();
        let path = acyclic
            && components.len() == 1
            && self.adjacency.values().all(|n| n.len() <= 2);

        Structure { bipartite, acyclic, path, bipartition }
    }

    /// Vertices of a path graph from one end to the other, starting at the
    /// endpoint with the smaller id.
    pub fn path_order(&self) -> Result<Vec<String>> {
        if !self.structural_predicates().path {
            return Err(IasiError::NotApplicable("graph is not a path".into()));
        }
        let start = self
            .adjacency
            .iter()
            .find(|(_, n)| n.len() <= 1)
            .map(|(v, _)| v.as_str())
            .expect("a path has an endpoint");
        let mut order = vec![start.to_string()];
        let mut prev: Option<&str> = None;
        let mut cur = start;
        while let Some(next) = self.neighbors(cur).find(|&n| Some(n) != prev) {
            order.push(next.to_string());
            prev = Some(cur);
            cur = next;
        }
        Ok(order)
    }
}

pub fn subdivision_vertex(e: &EdgeId) -> String {
    format!("s:{e}")
}

pub fn contracted_vertex(e: &EdgeId) -> String {
    format!("{}*{}", e.u, e.v)
}

/// Brute-force isomorphism test with degree pruning; meant for small graphs.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut gd: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return false;
    }
    let gv: Vec<&str> = g.vertices().collect();
    let hv: Vec<&str> = h.vertices().collect();
    let mut image: Vec<usize> = Vec::with_capacity(gv.len());
    let mut used = vec![false; hv.len()];

    fn extend(
        g: &Graph,
        h: &Graph,
        gv: &[&str],
        hv: &[&str],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = image.len();
        if i == gv.len() {
            return true;
        }
        for j in 0..hv.len() {
            if used[j] || g.degree(gv[i]) != h.degree(hv[j]) {
                continue;
            }
            let consistent = image
                .iter()
                .enumerate()
                .all(|(p, &q)| g.is_adjacent(gv[i], gv[p]) == h.is_adjacent(hv[j], hv[q]));
            if consistent {
                used[j] = true;
                image.push(j);
                if extend(g, h, gv, hv, image, used) {
                    return true;
                }
                image.pop();
                used[j] = false;
            }
        }
        false
    }

    extend(g, h, &gv, &hv, &mut image, &mut used)
}

fn letter_name(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < LETTERS.len() {
        (LETTERS[i] as char).to_string()
    } else {
        format!("v{i}")
    }
}

impl Graph {
    /// Path `a-b-c-...` on `n >= 1` vertices.
    pub fn path(n: usize) -> Graph {
        assert!(n >= 1, "a path needs a vertex");
        let names: Vec<String> = (0..n).map(letter_name).collect();
        let edges: Vec<(String, String)> =
            names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Graph::new(names.iter(), edges.iter().map(|(a, b)| (a, b))).unwrap()
    }

    /// Cycle `a-b-...-a` on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs three vertices");
        let names: Vec<String> = (0..n).map(letter_name).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (names[i].clone(), names[(i + 1) % n].clone()))
            .collect();
        Graph::new(names.iter(), edges.iter().map(|(a, b)| (a, b))).unwrap()
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Graph {
        assert!(n >= 1);
        let names: Vec<String> = (0..n).map(letter_name).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
        Graph::new(names.iter(), edges.iter().map(|(a, b)| (a, b))).unwrap()
    }

    /// Star `K_{1,n}` with center `c` and leaves `x, y, z, ...`.
    pub fn star(n: usize) -> Graph {
        const LEAVES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
        let leaves: Vec<String> = (0..n)
            .map(|i| LEAVES.get(i).map_or_else(|| format!("l{i}"), |s| s.to_string()))
            .collect();
        let edges: Vec<(String, String)> = leaves.iter().map(|l| ("c".to_string(), l.clone())).collect();
        Graph::from_edges(&edges).unwrap()
    }

    /// Named fixture graphs: `P<n>`, `C<n>`, `K<n>` and stars `K1,<n>` / `K1<n>`.
    pub fn fixture(name: &str) -> Result<Graph> {
        let unknown = || IasiError::UnknownFixture(name.to_string());
        let (kind, rest) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
        let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match kind {
            "P" => match num(rest)? {
                n @ 1..=26 => Ok(Graph::path(n)),
                _ => Err(unknown()),
            },
            "C" => match num(rest)? {
                n @ 3..=26 => Ok(Graph::cycle(n)),
                _ => Err(unknown()),
            },
            "K" => {
                if let Some(leaves) = rest.strip_prefix("1,") {
                    return match num(leaves)? {
                        n @ 1..=26 => Ok(Graph::star(n)),
                        _ => Err(unknown()),
                    };
                }
                if rest.len() >= 2 && rest.starts_with('1') {
                    return match num(&rest[1..])? {
                        n @ 1..=26 => Ok(Graph::star(n)),
                        _ => Err(unknown()),
                    };
                }
                match num(rest)? {
                    n @ 1..=26 => Ok(Graph::complete(n)),
                    _ => Err(unknown()),
                }
            }
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: &str, b: &str) -> EdgeId {
        EdgeId::new(a, b).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Graph::new(["a"], [("a", "a")]).is_err());
        assert!(Graph::new(["a", "b"], [("a", "b"), ("b", "a")]).is_err());
        assert!(Graph::new(["a"], [("a", "b")]).is_err());
        assert!(Graph::new([""], Vec::<(&str, &str)>::new()).is_err());
        assert!(Graph::new(["a", "a"], Vec::<(&str, &str)>::new()).is_err());
    }

    #[test]
    fn isolated_vertices_are_tolerated_structurally() {
        let g = Graph::new(["a", "b", "z"], [("a", "b")]).unwrap();
        assert_eq!(g.isolated_vertices().collect::<Vec<_>>(), vec!["z"]);
        assert_eq!(g.require_no_isolated(), Err(IasiError::IsolatedVertex("z".into())));
    }

    #[test]
    fn line_graph_examples() {
        let p3 = Graph::path(3);
        let l = p3.line_graph().unwrap();
        assert_eq!(l.vertices().collect::<Vec<_>>(), vec!["a~b", "b~c"]);
        assert_eq!(l.edges().cloned().collect::<Vec<_>>(), vec![e("a~b", "b~c")]);

        let l = Graph::star(3).line_graph().unwrap();
        assert_eq!(l.vertices().collect::<Vec<_>>(), vec!["c~x", "c~y", "c~z"]);
        assert!(is_isomorphic(&l, &Graph::complete(3)));

        assert!(is_isomorphic(&Graph::cycle(4).line_graph().unwrap(), &Graph::cycle(4)));

        let edgeless = Graph::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(edgeless.line_graph(), Err(IasiError::EmptyLineGraph));
    }

    /// Edge count of the total graph straight from the adjacency rules over
    /// all pairs of elements.
    fn total_edge_count_by_rules(g: &Graph) -> usize {
        #[derive(Clone)]
        enum Element {
            V(String),
            E(EdgeId),
        }
        let elements: Vec<Element> = g
            .vertices()
            .map(|v| Element::V(v.to_string()))
            .chain(g.edges().cloned().map(Element::E))
            .collect();
        let mut count = 0;
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let adjacent = match (&elements[i], &elements[j]) {
                    (Element::V(a), Element::V(b)) => g.is_adjacent(a, b),
                    (Element::E(a), Element::E(b)) => a.shares_endpoint(b),
                    (Element::V(v), Element::E(e)) | (Element::E(e), Element::V(v)) => e.has_endpoint(v),
                };
                count += adjacent as usize;
            }
        }
        count
    }

    #[test]
    fn total_graph_examples() {
        let t = Graph::path(2).total_graph().unwrap();
        assert_eq!(t.vertices().collect::<Vec<_>>(), vec!["e:a~b", "v:a", "v:b"]);
        assert!(is_isomorphic(&t, &Graph::complete(3)));

        // Frozen from total_edge_count_by_rules: 7 for P3, 12 for K3.
        let p3 = Graph::path(3);
        assert_eq!(total_edge_count_by_rules(&p3), 7);
        let t = p3.total_graph().unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (5, 7));

        let k3 = Graph::complete(3);
        assert_eq!(total_edge_count_by_rules(&k3), 12);
        let t = k3.total_graph().unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (6, 12));

        for g in [Graph::star(3), Graph::cycle(5), Graph::complete(4)] {
            assert_eq!(g.total_graph().unwrap().edge_count(), total_edge_count_by_rules(&g));
        }
    }

    #[test]
    fn subdivide_examples() {
        let s = Graph::path(2).subdivide(None).unwrap();
        assert!(is_isomorphic(&s, &Graph::path(3)));
        assert!(s.contains_vertex("s:a~b"));

        assert!(is_isomorphic(&Graph::cycle(3).subdivide(None).unwrap(), &Graph::cycle(6)));

        let one = [e("a", "b")];
        assert!(is_isomorphic(
            &Graph::cycle(4).subdivide(Some(&one)).unwrap(),
            &Graph::cycle(5)
        ));

        let missing = [e("a", "c")];
        assert!(matches!(
            Graph::cycle(4).subdivide(Some(&missing)),
            Err(IasiError::UnknownEdge(_))
        ));
    }

    #[test]
    fn contract_examples() {
        let c3 = Graph::cycle(4).contract_edge(&e("a", "b"), None).unwrap();
        assert!(is_isomorphic(&c3, &Graph::cycle(3)));
        assert!(c3.contains_vertex("a*b"));

        let p2 = Graph::path(3).contract_edge(&e("a", "b"), Some("w")).unwrap();
        assert!(is_isomorphic(&p2, &Graph::path(2)));
        assert!(p2.contains_vertex("w"));

        let k3 = Graph::complete(3).contract_edge(&e("b", "c"), None).unwrap();
        assert_eq!(k3.edge_count(), 1);
        assert!(is_isomorphic(&k3, &Graph::path(2)));

        assert!(matches!(
            Graph::path(3).contract_edge(&e("a", "c"), None),
            Err(IasiError::UnknownEdge(_))
        ));
        assert!(Graph::path(3).contract_edge(&e("a", "b"), Some("c")).is_err());
    }

    #[test]
    fn reduce_examples() {
        let r = Graph::path(3).topological_reduce("b").unwrap();
        assert_eq!(r.edges().cloned().collect::<Vec<_>>(), vec![e("a", "c")]);

        for v in ["a", "b", "c", "d"] {
            let r = Graph::cycle(4).topological_reduce(v).unwrap();
            assert!(is_isomorphic(&r, &Graph::cycle(3)));
        }
        assert!(matches!(
            Graph::cycle(3).topological_reduce("a"),
            Err(IasiError::ReductionNotApplicable { .. })
        ));
        assert!(matches!(
            Graph::path(3).topological_reduce("a"),
            Err(IasiError::ReductionNotApplicable { .. })
        ));
    }

    #[test]
    fn predicate_examples() {
        let s = Graph::cycle(4).structural_predicates();
        assert!(s.bipartite && !s.acyclic && !s.path);
        let (x, y) = s.bipartition.unwrap();
        assert_eq!(x.into_iter().collect::<Vec<_>>(), vec!["a", "c"]);
        assert_eq!(y.into_iter().collect::<Vec<_>>(), vec!["b", "d"]);

        let s = Graph::path(5).structural_predicates();
        assert!(s.bipartite && s.acyclic && s.path);

        let s = Graph::complete(3).structural_predicates();
        assert!(!s.bipartite && !s.acyclic && !s.path);
        assert!(s.bipartition.is_none());

        let s = Graph::star(3).structural_predicates();
        assert!(s.bipartite && s.acyclic && !s.path);

        let two_k2 = Graph::from_edges(&[("a", "b"), ("c", "d")]).unwrap();
        let s = two_k2.structural_predicates();
        assert!(s.bipartite && s.acyclic && !s.path);
    }

    #[test]
    fn path_order_walks_from_smallest_endpoint() {
        let g = Graph::from_edges(&[("m", "b"), ("b", "z"), ("z", "q")]).unwrap();
        assert_eq!(g.path_order().unwrap(), vec!["m", "b", "z", "q"]);
        assert!(Graph::cycle(3).path_order().is_err());
    }

    #[test]
    fn fixtures_parse() {
        assert!(is_isomorphic(&Graph::fixture("K1,3").unwrap(), &Graph::star(3)));
        assert!(is_isomorphic(&Graph::fixture("K13").unwrap(), &Graph::star(3)));
        assert_eq!(Graph::fixture("K4").unwrap().edge_count(), 6);
        assert_eq!(Graph::fixture("C5").unwrap().edge_count(), 5);
        assert_eq!(Graph::fixture("P6").unwrap().edge_count(), 5);
        assert!(Graph::fixture("Q3").is_err());
        assert!(Graph::fixture("C2").is_err());
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::parse_edge_list("# triangle\na b\nb c # middle\nc a\n\nd\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(Graph::parse_edge_list("a b c\n").is_err());
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let text = r#"{"vertices":["b","a","c"],"edges":[["c","b"],["a","b"]]}"#;
        let g: Graph = serde_json::from_str(text).unwrap();
        let out = serde_json::to_string(&g).unwrap();
        assert_eq!(out, r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#);
        let again: Graph = serde_json::from_str(&out).unwrap();
        assert_eq!(again, g);
    }
}
