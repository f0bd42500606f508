use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::formation::{Edge, Formation, RawFormation, VertexId};
use super::undirected::UndirectedView;
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::rigidity::{check_rigidity, OracleConfig};

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawMeta {
    meta_vertices: Vec<Formation>,
    inter_edges: Vec<(VertexId, VertexId)>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawDoc {
    meta_vertices: Vec<RawFormation>,
    inter_edges: Vec<(VertexId, VertexId)>,
}

/// Disjoint formations (meta-vertices) joined by directed inter-edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MetaFormation {
    meta_vertices: Vec<Formation>,
    inter_edges: Vec<Edge>,
    #[serde(skip)]
    owner: HashMap<VertexId, usize>,
}

impl<'de> Deserialize<'de> for MetaFormation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMeta::deserialize(d)?;
        let edges = raw.inter_edges.into_iter().map(Edge::from).collect();
        MetaFormation::new(raw.meta_vertices, edges).map_err(serde::de::Error::custom)
    }
}

impl MetaFormation {
    pub fn new(meta_vertices: Vec<Formation>, inter_edges: Vec<Edge>) -> Result<Self> {
        if meta_vertices.is_empty() {
            return Err(Error::input("metaVertices", "no meta-vertices"));
        }
        let mut owner = HashMap::new();
        for (i, m) in meta_vertices.iter().enumerate() {
            for &v in m.vertices() {
                if let Some(prev) = owner.insert(v, i) {
                    return Err(Error::input(
                        format!("metaVertices[{i}]"),
                        format!("vertex {v} already belongs to meta-vertex {prev}"),
                    ));
                }
            }
        }
        let mut pairs = BTreeSet::new();
        for (k, e) in inter_edges.iter().enumerate() {
            let at = format!("interEdges[{k}]");
            let (Some(&a), Some(&b)) = (owner.get(&e.tail), owner.get(&e.head)) else {
                let missing = if owner.contains_key(&e.tail) { e.head } else { e.tail };
                return Err(Error::input(at, format!("undeclared endpoint {missing}")));
            };
            if a == b {
                return Err(Error::input(at, format!("both endpoints lie in meta-vertex {a}")));
            }
            if !pairs.insert(e.pair()) {
                return Err(Error::input(at, "duplicate unordered pair"));
            }
        }
        Ok(MetaFormation { meta_vertices, inter_edges, owner })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDoc = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        let metas = raw
            .meta_vertices
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                let edges = f.edges.into_iter().map(Edge::from).collect();
                Formation::validated(f.vertices, edges, &format!("metaVertices[{i}]"))
            })
            .collect::<Result<Vec<_>>>()?;
        MetaFormation::new(metas, raw.inter_edges.into_iter().map(Edge::from).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("meta-formation serializes")
    }

    pub fn meta_vertices(&self) -> &[Formation] {
        &self.meta_vertices
    }

    pub fn inter_edges(&self) -> &[Edge] {
        &self.inter_edges
    }

    /// Index of the meta-vertex holding `v`.
    pub fn owner(&self, v: VertexId) -> Option<usize> {
        self.owner.get(&v).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.meta_vertices.iter().map(Formation::vertex_count).sum()
    }

    /// Same meta-vertices with another inter-edge set.
    pub fn with_inter_edges(&self, inter_edges: Vec<Edge>) -> Result<Self> {
        MetaFormation::new(self.meta_vertices.clone(), inter_edges)
    }

    /// Same inter-edges with meta-vertex `i` replaced.
    pub fn with_meta_vertex(&self, i: usize, m: Formation) -> Result<Self> {
        let mut metas = self.meta_vertices.clone();
        metas[i] = m;
        MetaFormation::new(metas, self.inter_edges.clone())
    }

    /// Union of all meta-vertices plus the inter-edges, internal edges first.
    pub fn flatten(&self) -> Formation {
        let vertices = self.meta_vertices.iter().flat_map(|m| m.vertices().iter().copied()).collect();
        let edges = self
            .meta_vertices
            .iter()
            .flat_map(|m| m.edges().iter().copied())
            .chain(self.inter_edges.iter().copied())
            .collect();
        Formation::new(vertices, edges).expect("disjoint union of valid formations is valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MetaKind {
    /// Rigid, at least 2 (2D) or 3 (3D) vertices.
    N,
    /// Two connected vertices (3D only).
    D,
    /// Single vertex.
    S,
}

/// Partition of meta-vertex indices into N, D and S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaClass {
    pub dim: Dim,
    pub n: Vec<usize>,
    pub d: Vec<usize>,
    pub s: Vec<usize>,
    #[serde(skip)]
    kinds: Vec<MetaKind>,
}

impl MetaClass {
    pub fn kind(&self, i: usize) -> MetaKind {
        self.kinds[i]
    }

    pub fn kinds(&self) -> &[MetaKind] {
        &self.kinds
    }

    /// Inter-edge count of an edge-optimal rigid merging:
    /// `3|N| + 2|S| - 3` in 2D, `6|N| + 5|D| + 3|S| - 6` in 3D, with the
    /// two-singleton case giving a single edge.
    pub fn required_inter_edges(&self, sizes: &[usize]) -> usize {
        required_inter_edges(self.dim, sizes)
    }
}

/// Rank of the union minus the ranks of the parts, for parts of the
/// given sizes.
pub fn required_inter_edges(dim: Dim, sizes: &[usize]) -> usize {
    let total: usize = sizes.iter().sum();
    let internal: usize = sizes.iter().map(|&n| dim.rigid_rank(n)).sum();
    dim.rigid_rank(total) - internal
}

/// Partition meta-vertices by class, checking that each is rigid.
pub fn classify(meta: &MetaFormation, dim: Dim, cfg: &OracleConfig) -> Result<MetaClass> {
    let mut class = MetaClass {
        dim,
        n: Vec::new(),
        d: Vec::new(),
        s: Vec::new(),
        kinds: Vec::with_capacity(meta.meta_vertices.len()),
    };
    for (i, m) in meta.meta_vertices.iter().enumerate() {
        let kind = match (dim, m.vertex_count()) {
            (_, 1) => MetaKind::S,
            (Dim::Three, 2) => {
                if m.edge_count() == 1 {
                    MetaKind::D
                } else {
                    return Err(Error::NotRigidMetaVertex { index: i, dim: 3 });
                }
            }
            _ => {
                if !check_rigidity(&UndirectedView::of(m), dim, cfg).rigid {
                    return Err(Error::NotRigidMetaVertex { index: i, dim: dim.value() as u8 });
                }
                MetaKind::N
            }
        };
        match kind {
            MetaKind::N => class.n.push(i),
            MetaKind::D => class.d.push(i),
            MetaKind::S => class.s.push(i),
        }
        class.kinds.push(kind);
    }
    Ok(class)
}
