use serde::{Deserialize, Serialize};

use super::feasibility::missing_unchecked;
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{required_inter_edges, Edge, Formation, MetaFormation};
use crate::meta::edge_optimal_persistent;
use crate::persistence::{ledger, local_dof_compliance, merged_persistence, DofLedger};
use crate::rigidity::OracleConfig;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlanReport {
    pub persistent: bool,
    pub structurally_persistent: bool,
    pub edge_optimal_persistent: bool,
    pub missing_dof_conserved: bool,
    pub tails_have_local_dof: bool,
    pub dofs_not_all_on_leaders: bool,
    pub edges: usize,
    pub required_edges: usize,
    pub criterion: String,
    pub ledger: DofLedger,
    pub oracle: OracleConfig,
}

impl PlanReport {
    pub fn passed(&self) -> bool {
        self.persistent
            && self.structurally_persistent
            && self.edge_optimal_persistent
            && self.missing_dof_conserved
            && self.tails_have_local_dof
    }
}

/// Applies `edges` to the collection and checks the merged formation.
pub fn verify_plan(collection: &[Formation], edges: &[Edge], dim: Dim, cfg: &OracleConfig) -> Result<PlanReport> {
    for e in edges {
        for v in [e.tail, e.head] {
            if !collection.iter().any(|f| f.contains(v)) {
                return Err(Error::DanglingVertex(v));
            }
        }
    }
    let meta = MetaFormation::new(collection.to_vec(), edges.to_vec())?;
    let verdict = merged_persistence(&meta, dim, cfg)?;
    let flat = meta.flatten();
    let optimal = edge_optimal_persistent(&meta, dim, cfg)?;
    let before: usize = collection.iter().map(|f| missing_unchecked(f, dim)).sum();
    let l = ledger(&flat, dim);
    let dofs_not_all_on_leaders = l.total_dof == 0 || l.vertices.iter().any(|x| x.dof > 0 && x.out_degree > 0);
    let sizes: Vec<usize> = collection.iter().map(Formation::vertex_count).collect();
    Ok(PlanReport {
        persistent: verdict.persistent,
        structurally_persistent: verdict.structurally_persistent,
        edge_optimal_persistent: optimal,
        missing_dof_conserved: verdict.persistent && missing_unchecked(&flat, dim) == before,
        tails_have_local_dof: local_dof_compliance(&meta, dim).compliant,
        dofs_not_all_on_leaders,
        edges: edges.len(),
        required_edges: required_inter_edges(dim, &sizes),
        criterion: verdict.criterion,
        ledger: l,
        oracle: *cfg,
    })
}
