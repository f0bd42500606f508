//! Rigidity and edge-optimality of meta-formations.

mod count;
mod rigid;

pub use count::{meta_count, meta_count_violation_3d, MetaCount, MetaCountViolation};
pub use rigid::{
    edge_optimal_persistent, edge_optimal_rigid, meta_rigid, meta_rigid_2d, meta_rigid_3d, substitute, Counting,
    MetaVerdict, MetaWitness, DEFAULT_META_SUBSET_CAP,
};
