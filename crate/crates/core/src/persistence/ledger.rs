use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::graph::{Formation, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VertexDof {
    pub vertex: VertexId,
    pub out_degree: usize,
    pub dof: usize,
}

/// Out-degree and DOF bookkeeping of a formation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DofLedger {
    pub dim: Dim,
    pub vertices: Vec<VertexDof>,
    pub leaders: Vec<VertexId>,
    pub total_dof: usize,
}

impl DofLedger {
    pub fn dof_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().find(|x| x.vertex == v).map(|x| x.dof)
    }

    pub fn out_degree_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().find(|x| x.vertex == v).map(|x| x.out_degree)
    }

    /// Positive DOF counts, largest first.
    pub fn allocation(&self) -> Vec<usize> {
        let mut a: Vec<usize> = self.vertices.iter().map(|x| x.dof).filter(|&d| d > 0).collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        a
    }

    /// Vertices carrying at least one DOF.
    pub fn free_vertices(&self) -> Vec<VertexId> {
        self.vertices.iter().filter(|x| x.dof > 0).map(|x| x.vertex).collect()
    }
}

pub fn ledger(f: &Formation, dim: Dim) -> DofLedger {
    let d = dim.value();
    let vertices: Vec<VertexDof> = f
        .vertices()
        .iter()
        .zip(f.out_degrees())
        .map(|(&vertex, out_degree)| VertexDof { vertex, out_degree, dof: d.saturating_sub(out_degree) })
        .collect();
    let leaders = vertices.iter().filter(|x| x.out_degree == 0).map(|x| x.vertex).collect();
    let total_dof = vertices.iter().map(|x| x.dof).sum();
    DofLedger { dim, vertices, leaders, total_dof }
}
