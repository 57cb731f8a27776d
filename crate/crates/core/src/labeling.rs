//! Set-labelings of graphs, the induced sumset edge labels, injectivity checks
//! and the arithmetic classification hierarchy.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IasiError, Result};
use crate::graph::{EdgeId, Graph};
use crate::set::IntSet;

/// Vertex id to label set. JSON form: `{"a": [0,1,2], ...}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(BTreeMap<String, IntSet>);

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, vertex: impl Into<String>, label: IntSet) -> Option<IntSet> {
        self.0.insert(vertex.into(), label)
    }

    pub fn get(&self, vertex: &str) -> Option<&IntSet> {
        self.0.get(vertex)
    }

    pub fn label(&self, vertex: &str) -> Result<&IntSet> {
        self.0
            .get(vertex)
            .ok_or_else(|| IasiError::PartialLabeling(vertex.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &IntSet)> + '_ {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Errors unless `self` labels exactly the vertices of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if let Some(v) = g.vertices().find(|v| !self.0.contains_key(*v)) {
            return Err(IasiError::PartialLabeling(v.to_string()));
        }
        if let Some(v) = self.0.keys().find(|v| !g.contains_vertex(v)) {
            return Err(IasiError::UnknownLabeledVertex(v.clone()));
        }
        Ok(())
    }

    /// Restriction of the labeling to the vertices of `g`.
    pub fn restrict(&self, g: &Graph) -> Result<Labeling> {
        g.vertices()
            .map(|v| Ok((v.to_string(), self.label(v)?.clone())))
            .collect::<Result<BTreeMap<_, _>>>()
            .map(Labeling)
    }

    /// `f+(uv) = f(u) + f(v)`.
    pub fn induced_edge_label(&self, e: &EdgeId) -> Result<IntSet> {
        let (u, v) = e.endpoints();
        self.label(u)?.sumset(self.label(v)?)
    }

    pub fn induced_edge_labels(&self, g: &Graph) -> Result<BTreeMap<EdgeId, IntSet>> {
        g.edges()
            .map(|e| Ok((e.clone(), self.induced_edge_label(e)?)))
            .collect()
    }
}

impl FromIterator<(String, IntSet)> for Labeling {
    fn from_iter<T: IntoIterator<Item = (String, IntSet)>>(iter: T) -> Self {
        Labeling(iter.into_iter().collect())
    }
}

/// Result of the two injectivity checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IasiCheck {
    pub is_iasi: bool,
    pub vertex_collision: Option<(String, String)>,
    pub edge_collision: Option<(EdgeId, EdgeId)>,
}

fn first_collision<'a, K: Clone>(items: impl Iterator<Item = (K, &'a IntSet)>) -> Option<(K, K)> {
    let mut seen: HashMap<&IntSet, K> = HashMap::new();
    for (key, set) in items {
        if let Some(prev) = seen.get(set) {
            return Some((prev.clone(), key));
        }
        seen.insert(set, key);
    }
    None
}

fn check_host(g: &Graph, f: &Labeling) -> Result<()> {
    f.check_total(g)?;
    g.require_no_isolated()
}

/// Checks injectivity of `f` on vertices and of `f+` on edges, independently.
pub fn verify_iasi(g: &Graph, f: &Labeling) -> Result<IasiCheck> {
    check_host(g, f)?;
    let edge_labels = f.induced_edge_labels(g)?;
    Ok(injectivity(f, &edge_labels))
}

fn injectivity(f: &Labeling, edge_labels: &BTreeMap<EdgeId, IntSet>) -> IasiCheck {
    let vertex_collision =
        first_collision(f.iter().map(|(v, s)| (v.to_string(), s)));
    let edge_collision = first_collision(edge_labels.iter().map(|(e, s)| (e.clone(), s)));
    IasiCheck {
        is_iasi: vertex_collision.is_none() && edge_collision.is_none(),
        vertex_collision,
        edge_collision,
    }
}

/// The integer ratio between the deterministic indices of an edge's endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFactor {
    pub low_vertex: String,
    pub high_vertex: String,
    pub k: u64,
    /// Whether `k <= |f(low_vertex)|`.
    pub within_bound: bool,
}

/// Computes the k-factor of an edge whose endpoints carry admissible AP labels.
pub fn edge_k_factor(f: &Labeling, e: &EdgeId) -> Result<KFactor> {
    let (u, v) = e.endpoints();
    let (lu, lv) = (f.label(u)?, f.label(v)?);
    let (du, dv) = (lu.deterministic_index()?, lv.deterministic_index()?);
    // Ties keep id order: EdgeId already has u < v.
    let (low, high, dl, dh, low_len) = if du <= dv {
        (u, v, du, dv, lu.len())
    } else {
        (v, u, dv, du, lv.len())
    };
    if dh % dl != 0 {
        return Err(IasiError::NoKFactor {
            edge: e.to_string(),
            low_index: dl,
            high_index: dh,
        });
    }
    let k = dh / dl;
    Ok(KFactor {
        low_vertex: low.to_string(),
        high_vertex: high.to_string(),
        k,
        within_bound: k <= low_len as u64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NotIasi,
    IasiNonAp,
    SemiArithmetic,
    ArithmeticMixed,
    Isoarithmetic,
    Biarithmetic,
    IdenticalBiarithmetic,
}

impl Verdict {
    pub const ALL: [Verdict; 7] = [
        Verdict::NotIasi,
        Verdict::IasiNonAp,
        Verdict::SemiArithmetic,
        Verdict::ArithmeticMixed,
        Verdict::Isoarithmetic,
        Verdict::Biarithmetic,
        Verdict::IdenticalBiarithmetic,
    ];

    /// Every vertex and edge label is an AP-set.
    pub fn is_arithmetic(self) -> bool {
        matches!(
            self,
            Verdict::ArithmeticMixed
                | Verdict::Isoarithmetic
                | Verdict::Biarithmetic
                | Verdict::IdenticalBiarithmetic
        )
    }

    pub fn is_biarithmetic(self) -> bool {
        matches!(self, Verdict::Biarithmetic | Verdict::IdenticalBiarithmetic)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotIasi => "not-iasi",
            Verdict::IasiNonAp => "iasi-non-ap",
            Verdict::SemiArithmetic => "semi-arithmetic",
            Verdict::ArithmeticMixed => "arithmetic-mixed",
            Verdict::Isoarithmetic => "isoarithmetic",
            Verdict::Biarithmetic => "biarithmetic",
            Verdict::IdenticalBiarithmetic => "identical-biarithmetic",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Verdict {
    type Err = IasiError;

    fn from_str(s: &str) -> Result<Self> {
        Verdict::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| IasiError::Parse(format!("unknown verdict `{s}`")))
    }
}

/// Per-edge classification diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub edge: EdgeId,
    pub k_factor: Option<KFactor>,
    pub edge_ap: bool,
    pub edge_index: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub verdict: Verdict,
    pub per_edge: Vec<EdgeReport>,
    pub uniform_l: Option<usize>,
    pub failures: Vec<String>,
}

/// `Some(l)` when every vertex label has cardinality `l`.
pub fn is_l_uniform(g: &Graph, f: &Labeling) -> Result<Option<usize>> {
    f.check_total(g)?;
    let sizes: BTreeSet<usize> = f.iter().map(|(_, s)| s.len()).collect();
    Ok(if sizes.len() == 1 { sizes.into_iter().next() } else { None })
}

/// Classifies a labeling into the IASI hierarchy.
///
/// The verdict is decided in order: injectivity, vertex labels being admissible
/// AP-sets, edge labels being AP-sets, and finally the pattern of k-factors.
/// An all-`k = 1` labeling whose components use different differences is
/// reported as `arithmetic-mixed`, since isoarithmetic needs one common index.
pub fn classify(g: &Graph, f: &Labeling) -> Result<ClassReport> {
    check_host(g, f)?;
    let uniform_l = is_l_uniform(g, f)?;
    let edge_labels = f.induced_edge_labels(g)?;
    let mut failures = Vec::new();

    let check = injectivity(f, &edge_labels);
    if let Some((a, b)) = &check.vertex_collision {
        failures.push(format!("vertices {a} and {b} share the label {}", f.label(a)?));
    }
    if let Some((a, b)) = &check.edge_collision {
        failures.push(format!("edges {a} and {b} share the label {}", edge_labels[a]));
    }

    let mut vertex_index = BTreeMap::new();
    for (v, s) in f.iter() {
        match s.deterministic_index() {
            Ok(d) => {
                vertex_index.insert(v, d);
            }
            Err(_) => failures.push(format!("vertex {v} label {s} is not an admissible AP-set")),
        }
    }
    let all_vertices_ap = vertex_index.len() == f.len();

    let mut per_edge = Vec::new();
    if all_vertices_ap {
        for (e, label) in &edge_labels {
            let profile = label.ap_profile();
            let k_factor = match edge_k_factor(f, e) {
                Ok(k) => Some(k),
                Err(IasiError::NoKFactor { .. }) => None,
                Err(other) => return Err(other),
            };
            if profile.is_none() {
                failures.push(format!("edge {e} label {label} is not an AP-set"));
            }
            per_edge.push(EdgeReport {
                edge: e.clone(),
                k_factor,
                edge_ap: profile.is_some(),
                edge_index: profile.map(|p| p.diff),
            });
        }
    }

    let verdict = if !check.is_iasi {
        Verdict::NotIasi
    } else if !all_vertices_ap {
        Verdict::IasiNonAp
    } else if per_edge.iter().any(|r| !r.edge_ap) {
        Verdict::SemiArithmetic
    } else {
        let ks: Vec<u64> = per_edge
            .iter()
            .map(|r| r.k_factor.as_ref().map_or(0, |k| k.k))
            .collect();
        let indices: BTreeSet<u64> = vertex_index.values().copied().collect();
        if ks.iter().all(|&k| k == 1) {
            if indices.len() == 1 {
                Verdict::Isoarithmetic
            } else {
                Verdict::ArithmeticMixed
            }
        } else if ks.iter().all(|&k| k > 1) {
            if ks.windows(2).all(|w| w[0] == w[1]) {
                Verdict::IdenticalBiarithmetic
            } else {
                Verdict::Biarithmetic
            }
        } else {
            Verdict::ArithmeticMixed
        }
    };

    Ok(ClassReport { verdict, per_edge, uniform_l, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> IntSet {
        IntSet::new(v.iter().copied()).unwrap()
    }

    fn labeling(pairs: &[(&str, &[u64])]) -> Labeling {
        pairs.iter().map(|(v, s)| (v.to_string(), set(s))).collect()
    }

    fn e(a: &str, b: &str) -> EdgeId {
        EdgeId::new(a, b).unwrap()
    }

    #[test]
    fn induced_edge_label_examples() {
        let f = labeling(&[("a", &[0, 1, 2]), ("b", &[3, 4, 5])]);
        assert_eq!(f.induced_edge_label(&e("a", "b")).unwrap(), set(&[3, 4, 5, 6, 7]));

        let f = labeling(&[("a", &[0, 2, 4]), ("b", &[0, 4, 8])]);
        assert_eq!(
            f.induced_edge_label(&e("a", "b")).unwrap(),
            set(&[0, 2, 4, 6, 8, 10, 12])
        );

        let f = labeling(&[("a", &[0, 2, 4]), ("b", &[0, 8, 16])]);
        let label = f.induced_edge_label(&e("a", "b")).unwrap();
        assert_eq!(label, set(&[0, 2, 4, 8, 10, 12, 16, 18, 20]));
        assert!(!label.is_ap());

        let f = labeling(&[("a", &[0, 2, 4])]);
        assert_eq!(
            f.induced_edge_label(&e("a", "b")),
            Err(IasiError::PartialLabeling("b".into()))
        );
    }

    #[test]
    fn verify_iasi_examples() {
        let p2 = Graph::path(2);
        let ok = verify_iasi(&p2, &labeling(&[("a", &[1, 2, 3]), ("b", &[4, 5, 6])])).unwrap();
        assert!(ok.is_iasi);

        let bad = verify_iasi(&p2, &labeling(&[("a", &[1, 2, 3]), ("b", &[1, 2, 3])])).unwrap();
        assert!(!bad.is_iasi);
        assert_eq!(bad.vertex_collision, Some(("a".into(), "b".into())));

        let star = Graph::star(2);
        let f = labeling(&[("c", &[0, 1, 2]), ("x", &[0, 2, 4]), ("y", &[1, 3, 5])]);
        assert!(verify_iasi(&star, &f).unwrap().is_iasi);
        assert_eq!(f.induced_edge_label(&e("c", "x")).unwrap(), IntSet::new(0..=6).unwrap());
        assert_eq!(f.induced_edge_label(&e("c", "y")).unwrap(), IntSet::new(1..=7).unwrap());
    }

    #[test]
    fn verify_iasi_detects_edge_collisions_independently() {
        let star = Graph::star(2);
        let f = labeling(&[("c", &[0, 1, 2]), ("x", &[0, 2, 4]), ("y", &[0, 1, 2, 3, 4])]);
        // {0,1,2}+{0,2,4} = {0..6} = {0,1,2}+{0..4}
        let check = verify_iasi(&star, &f).unwrap();
        assert!(check.vertex_collision.is_none());
        assert_eq!(check.edge_collision, Some((e("c", "x"), e("c", "y"))));
        assert!(!check.is_iasi);
    }

    #[test]
    fn verify_iasi_errors() {
        let p2 = Graph::path(2);
        assert_eq!(
            verify_iasi(&p2, &labeling(&[("a", &[1, 2, 3])])),
            Err(IasiError::PartialLabeling("b".into()))
        );
        let f = labeling(&[("a", &[1, 2, 3]), ("b", &[4, 5, 6]), ("q", &[9, 10, 11])]);
        assert_eq!(verify_iasi(&p2, &f), Err(IasiError::UnknownLabeledVertex("q".into())));
        let g = Graph::new(["a", "b", "z"], [("a", "b")]).unwrap();
        let f = labeling(&[("a", &[1, 2, 3]), ("b", &[4, 5, 6]), ("z", &[9, 10, 11])]);
        assert_eq!(verify_iasi(&g, &f), Err(IasiError::IsolatedVertex("z".into())));
    }

    #[test]
    fn k_factor_examples() {
        let f = labeling(&[("a", &[0, 1, 2, 3]), ("b", &[0, 2, 4])]);
        let k = edge_k_factor(&f, &e("a", "b")).unwrap();
        assert_eq!((k.low_vertex.as_str(), k.high_vertex.as_str(), k.k), ("a", "b", 2));
        assert!(k.within_bound);

        let f = labeling(&[("a", &[0, 2, 4]), ("b", &[1, 3, 5])]);
        let k = edge_k_factor(&f, &e("a", "b")).unwrap();
        assert_eq!((k.low_vertex.as_str(), k.high_vertex.as_str(), k.k), ("a", "b", 1));

        // Orientation follows the index, not the id order.
        let f = labeling(&[("a", &[0, 4, 8]), ("b", &[0, 1, 2])]);
        let k = edge_k_factor(&f, &e("a", "b")).unwrap();
        assert_eq!((k.low_vertex.as_str(), k.k, k.within_bound), ("b", 4, false));

        let f = labeling(&[("a", &[0, 2, 4]), ("b", &[0, 3, 6])]);
        assert!(matches!(
            edge_k_factor(&f, &e("a", "b")),
            Err(IasiError::NoKFactor { low_index: 2, high_index: 3, .. })
        ));

        let f = labeling(&[("a", &[0, 1, 3]), ("b", &[0, 3, 6])]);
        assert!(matches!(
            edge_k_factor(&f, &e("a", "b")),
            Err(IasiError::NotAdmissible { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let p2 = Graph::path(2);
        let r = classify(&p2, &labeling(&[("a", &[1, 2, 3]), ("b", &[4, 5, 6])])).unwrap();
        assert_eq!(r.verdict, Verdict::Isoarithmetic);
        assert_eq!(r.per_edge[0].edge_index, Some(1));
        assert_eq!(r.uniform_l, Some(3));

        let p3 = Graph::path(3);
        let f = labeling(&[("a", &[0, 1, 2, 3]), ("b", &[0, 2, 4]), ("c", &[1, 5, 9])]);
        let r = classify(&p3, &f).unwrap();
        assert_eq!(r.verdict, Verdict::IdenticalBiarithmetic);
        assert!(r.per_edge.iter().all(|p| p.k_factor.as_ref().unwrap().k == 2));
        assert_eq!(r.uniform_l, None);

        let k3 = Graph::complete(3);
        let f = labeling(&[("a", &[0, 1, 2, 3]), ("b", &[0, 2, 4]), ("c", &[1, 5, 9])]);
        let r = classify(&k3, &f).unwrap();
        assert_eq!(r.verdict, Verdict::Biarithmetic);
        let ks: Vec<u64> = r.per_edge.iter().map(|p| p.k_factor.as_ref().unwrap().k).collect();
        assert_eq!(ks, vec![2, 4, 2]);
    }

    #[test]
    fn classify_lower_verdicts() {
        let p2 = Graph::path(2);
        let r = classify(&p2, &labeling(&[("a", &[1, 2, 3]), ("b", &[1, 2, 3])])).unwrap();
        assert_eq!(r.verdict, Verdict::NotIasi);
        assert!(!r.failures.is_empty());
        // Labels are AP-sets, so diagnostics are still populated.
        assert_eq!(r.per_edge.len(), 1);

        let r = classify(&p2, &labeling(&[("a", &[0, 1, 3]), ("b", &[4, 5, 6])])).unwrap();
        assert_eq!(r.verdict, Verdict::IasiNonAp);
        assert!(r.per_edge.is_empty());

        let r = classify(&p2, &labeling(&[("a", &[0, 1]), ("b", &[4, 5, 6])])).unwrap();
        assert_eq!(r.verdict, Verdict::IasiNonAp);

        let r = classify(&p2, &labeling(&[("a", &[0, 2, 4]), ("b", &[0, 8, 16])])).unwrap();
        assert_eq!(r.verdict, Verdict::SemiArithmetic);
        assert!(!r.per_edge[0].edge_ap);
        assert!(!r.per_edge[0].k_factor.as_ref().unwrap().within_bound);

        // k = 1 on one edge, k = 2 on the other.
        let p3 = Graph::path(3);
        let f = labeling(&[("a", &[0, 1, 2]), ("b", &[5, 6, 7]), ("c", &[0, 2, 4])]);
        assert_eq!(classify(&p3, &f).unwrap().verdict, Verdict::ArithmeticMixed);
    }

    #[test]
    fn isoarithmetic_needs_one_common_index() {
        let g = Graph::from_edges(&[("a", "b"), ("c", "d")]).unwrap();
        let f = labeling(&[
            ("a", &[0, 1, 2]),
            ("b", &[3, 4, 5]),
            ("c", &[0, 2, 4]),
            ("d", &[1, 3, 5]),
        ]);
        let r = classify(&g, &f).unwrap();
        assert!(r.per_edge.iter().all(|p| p.k_factor.as_ref().unwrap().k == 1));
        assert_eq!(r.verdict, Verdict::ArithmeticMixed);
    }

    #[test]
    fn l_uniform_examples() {
        let p3 = Graph::path(3);
        let f = labeling(&[("a", &[0, 1, 2]), ("b", &[3, 4, 5]), ("c", &[7, 8, 9])]);
        assert_eq!(is_l_uniform(&p3, &f).unwrap(), Some(3));
        let f = labeling(&[("a", &[0, 1, 2]), ("b", &[3, 4, 5, 6]), ("c", &[7, 8, 9])]);
        assert_eq!(is_l_uniform(&p3, &f).unwrap(), None);
        let f = labeling(&[("a", &[0, 1, 2, 3, 4]), ("b", &[5, 6, 7, 8, 9])]);
        assert_eq!(is_l_uniform(&Graph::path(2), &f).unwrap(), Some(5));
    }

    #[test]
    fn verdict_strings_round_trip() {
        for v in Verdict::ALL {
            assert_eq!(v.as_str().parse::<Verdict>().unwrap(), v);
            assert_eq!(serde_json::to_string(&v).unwrap(), format!("\"{v}\""));
        }
    }
}
