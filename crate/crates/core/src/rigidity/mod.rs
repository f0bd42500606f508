//! Undirected generic rigidity in the plane and in space.

mod connectivity;
pub mod field;
pub mod matrix;
mod oracle;
pub mod pebble;
mod spanning;
mod sparsity;
mod verdict;

pub use connectivity::{three_connectivity, ConnectivityReport};
pub use matrix::{RigidityMatrix, RowBasis};
pub use oracle::{generic_rank, independent_edges, OracleConfig, COORD_MAX};
pub use spanning::{independent_in_order, minimally_rigid_spanning};
pub use sparsity::next_combination;
pub use sparsity::{sparsity_violation, SparsityParams, Violation, DEFAULT_SUBSET_CAP};
pub use verdict::{check_rigidity, laman_check_2d, rigid_3d_check, RigidityVerdict, Witness};
