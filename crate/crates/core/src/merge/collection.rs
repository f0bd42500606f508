use super::feasibility::{feasibility, lone_leader, missing_unchecked};
use super::pair2d::pair_edges_2d;
use super::pair3d::pair_edges_3d;
use super::plan::{MergePlan, MergeStep};
use crate::dim::Dim;
use crate::error::{Error, Result};
use crate::graph::{Formation, MetaFormation};
use crate::persistence::ledger;
use crate::rigidity::OracleConfig;

/// Order in which members join the running merge: ascending missing DOF,
/// with a DOF-free member, or else one lone-leader member, held back to
/// the end in space.
pub fn merge_order(collection: &[Formation], dim: Dim) -> Vec<usize> {
    let mut order: Vec<usize> = (0..collection.len()).collect();
    order.sort_by_key(|&i| missing_unchecked(&collection[i], dim));
    if dim == Dim::Three {
        let zero = order.iter().position(|&i| ledger(&collection[i], dim).total_dof == 0);
        let lone = order.iter().position(|&i| lone_leader(&collection[i], dim));
        if let Some(p) = zero.or(lone) {
            let m = order.remove(p);
            order.push(m);
        }
    }
    order
}

/// Merges a collection pairwise into one persistent formation.
pub fn plan_collection(collection: &[Formation], dim: Dim, cfg: &OracleConfig) -> Result<MergePlan> {
    if collection.is_empty() {
        return Err(Error::InvalidOperation("empty collection".into()));
    }
    MetaFormation::new(collection.to_vec(), Vec::new())?;
    let gate = feasibility(collection, dim, cfg)?;
    if !gate.feasible {
        return Err(Error::Infeasible(gate.reason.code().into()));
    }
    let order = merge_order(collection, dim);
    let mut acc = collection[order[0]].clone();
    let mut left = vec![order[0]];
    let mut plan = MergePlan { dim, edges: Vec::new(), steps: Vec::new(), oracle: *cfg };
    for (step, &j) in order.iter().enumerate().skip(1).map(|(k, j)| (k - 1, j)) {
        let member = &collection[j];
        let (edges, allocation) = match dim {
            Dim::Two => (pair_edges_2d(&acc, member, cfg, step)?, None),
            Dim::Three => {
                let (e, a) = pair_edges_3d(&acc, member, cfg, step)?;
                (e, Some(a))
            }
        };
        let merged =
            MetaFormation::new(vec![acc.clone(), member.clone()], edges.iter().map(|p| p.edge).collect())?.flatten();
        let s = MergeStep {
            step,
            left: left.clone(),
            right: j,
            edges: edges.len(),
            missing_dof_left: missing_unchecked(&acc, dim),
            missing_dof_right: missing_unchecked(member, dim),
            missing_dof_merged: missing_unchecked(&merged, dim),
            allocation,
        };
        if s.missing_dof_merged != s.missing_dof_left + s.missing_dof_right {
            return Err(Error::InvalidOperation(format!("missing DOFs not conserved at step {step}")));
        }
        plan.steps.push(s);
        plan.edges.extend(edges);
        left.push(j);
        acc = merged;
    }
    Ok(plan)
}
