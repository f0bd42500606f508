//! Feasibility and construction of persistent mergings.

mod collection;
mod feasibility;
mod ops;
mod pair2d;
mod pair3d;
mod plan;
mod verify;

pub use collection::{merge_order, plan_collection};
pub use feasibility::{feasibility, missing_dof, Feasibility, Reason};
pub use ops::{base_patterns, op_e, op_v, SlotEdge, SlotPlan, TARGET_SLOTS};
pub use pair2d::plan_pair_2d;
pub use pair3d::plan_pair_3d;
pub use plan::{Allocation, MergePlan, MergeStep, PlannedEdge, Rule};
pub use verify::{verify_plan, PlanReport};
