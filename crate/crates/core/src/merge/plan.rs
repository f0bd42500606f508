use serde::{Deserialize, Serialize};

use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Edge, Formation, MetaFormation};
use crate::rigidity::OracleConfig;

/// Construction rule that produced a planned edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    #[serde(rename = "2d-pair")]
    Pair2d,
    OpV,
    OpE,
    SmallGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlannedEdge {
    pub edge: Edge,
    pub rule: Rule,
    /// Index of the pairwise merge that emitted the edge.
    pub step: usize,
    /// Oriented against the stored pattern direction.
    pub reversed: bool,
}

/// One pairwise merge: the members already merged on the left, one new
/// member on the right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MergeStep {
    pub step: usize,
    pub left: Vec<usize>,
    pub right: usize,
    pub edges: usize,
    pub missing_dof_left: usize,
    pub missing_dof_right: usize,
    pub missing_dof_merged: usize,
    /// Selected DOFs per side, largest first, and the pattern used.
    pub allocation: Option<Allocation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Allocation {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub partition: String,
    pub pattern: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MergePlan {
    pub dim: Dim,
    pub edges: Vec<PlannedEdge>,
    pub steps: Vec<MergeStep>,
    pub oracle: OracleConfig,
}

impl MergePlan {
    pub fn inter_edges(&self) -> Vec<Edge> {
        self.edges.iter().map(|p| p.edge).collect()
    }

    /// The merged meta-formation with the members as meta-vertices.
    pub fn apply(&self, collection: &[Formation]) -> Result<MetaFormation> {
        for e in &self.edges {
            for v in [e.edge.tail, e.edge.head] {
                if !collection.iter().any(|f| f.contains(v)) {
                    return Err(Error::DanglingVertex(v));
                }
            }
        }
        MetaFormation::new(collection.to_vec(), self.inter_edges())
    }
}
