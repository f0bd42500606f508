use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// A directed distance constraint: `tail` is responsible for keeping its
/// distance to `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(VertexId, VertexId)", into = "(VertexId, VertexId)")]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub const fn new(tail: VertexId, head: VertexId) -> Self {
        Edge { tail, head }
    }

    pub fn reversed(self) -> Self {
        Edge::new(self.head, self.tail)
    }

    /// Unordered key of the pair.
    pub fn pair(self) -> (VertexId, VertexId) {
        if self.tail <= self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }

    pub fn touches(self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((t, h): (VertexId, VertexId)) -> Self {
        Edge::new(t, h)
    }
}

impl From<Edge> for (VertexId, VertexId) {
    fn from(e: Edge) -> Self {
        (e.tail, e.head)
    }
}

#[derive(Deserialize)]
pub(crate) struct RawFormation {
    pub(crate) vertices: Vec<VertexId>,
    pub(crate) edges: Vec<(VertexId, VertexId)>,
}

/// A directed formation graph. Vertex and edge order is the declared order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Formation {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    #[serde(skip)]
    index: HashMap<VertexId, usize>,
}

impl<'de> Deserialize<'de> for Formation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFormation::deserialize(d)?;
        let edges = raw.edges.into_iter().map(Edge::from).collect();
        Formation::new(raw.vertices, edges).map_err(serde::de::Error::custom)
    }
}

impl Formation {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self> {
        Self::validated(vertices, edges, "formation")
    }

    pub(crate) fn validated(vertices: Vec<VertexId>, edges: Vec<Edge>, loc: &str) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input(loc, "formation has no vertices"));
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::input(format!("{loc}.vertices[{i}]"), format!("duplicate vertex {v}")));
            }
        }
        let mut pairs = BTreeSet::new();
        for (i, e) in edges.iter().enumerate() {
            let at = format!("{loc}.edges[{i}]");
            if e.tail == e.head {
                return Err(Error::input(at, format!("self-loop on vertex {}", e.tail)));
            }
            for v in [e.tail, e.head] {
                if !index.contains_key(&v) {
                    return Err(Error::input(at, format!("undeclared endpoint {v}")));
                }
            }
            if !pairs.insert(e.pair()) {
                return Err(Error::input(at, format!("duplicate unordered pair {{{}, {}}}", e.pair().0, e.pair().1)));
            }
        }
        Ok(Formation { vertices, edges, index })
    }

    pub fn from_pairs(vertices: &[VertexId], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::new(vertices.to_vec(), edges.iter().map(|&p| Edge::from(p)).collect())
    }

    pub fn singleton(v: VertexId) -> Self {
        Self::new(vec![v], Vec::new()).expect("singleton is valid")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn has_pair(&self, a: VertexId, b: VertexId) -> bool {
        let key = Edge::new(a, b).pair();
        self.edges.iter().any(|e| e.pair() == key)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.tail == v).count()
    }

    /// Out-degrees in declared vertex order.
    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[self.index[&e.tail]] += 1;
        }
        deg
    }

    /// Same vertices, different edge set.
    pub fn with_edges(&self, edges: Vec<Edge>) -> Result<Self> {
        Self::new(self.vertices.clone(), edges)
    }

    /// Same vertices with a subset of the current edges.
    pub(crate) fn sub_edges(&self, edges: Vec<Edge>) -> Self {
        Formation { vertices: self.vertices.clone(), edges, index: self.index.clone() }
    }

    pub fn without_edge(&self, edge: Edge) -> Self {
        let edges = self.edges.iter().copied().filter(|&e| e != edge).collect();
        Formation { vertices: self.vertices.clone(), edges, index: self.index.clone() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFormation = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        Formation::new(raw.vertices, raw.edges.into_iter().map(Edge::from).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("formation serializes")
    }
}
