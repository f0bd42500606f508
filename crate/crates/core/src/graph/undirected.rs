use std::collections::BTreeSet;

use super::formation::{Edge, Formation, VertexId};

/// Direction-forgetting view of a formation. Vertices are addressed by
/// their position in the declared order; each edge is stored once as
/// `(low index, high index)` in the formation's edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedView {
    ids: Vec<VertexId>,
    edges: Vec<(usize, usize)>,
}

impl UndirectedView {
    pub fn of(f: &Formation) -> Self {
        let edges = f
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (f.index_of(e.tail).unwrap(), f.index_of(e.head).unwrap());
                (a.min(b), a.max(b))
            })
            .collect();
        UndirectedView { ids: f.vertices().to_vec(), edges }
    }

    /// View on vertices `0..n` (ids equal to indices). Duplicate pairs and
    /// loops are dropped.
    pub fn from_index_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                continue;
            }
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push(key);
            }
        }
        UndirectedView { ids: (0..n as VertexId).collect(), edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, index: usize) -> VertexId {
        self.ids[index]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge `i` expressed with vertex ids, low id first.
    pub fn edge_ids(&self, i: usize) -> Edge {
        let (a, b) = self.edges[i];
        let (x, y) = (self.ids[a], self.ids[b]);
        Edge::new(x.min(y), x.max(y))
    }

    pub fn with_edges(&self, edges: Vec<(usize, usize)>) -> Self {
        UndirectedView { ids: self.ids.clone(), edges }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.ids.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}
