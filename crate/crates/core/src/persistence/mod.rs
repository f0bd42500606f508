//! Directed analysis: DOF bookkeeping and the persistence criterion.

mod ledger;
mod terminal;
mod verdict;

pub use ledger::{ledger, DofLedger, VertexDof};
pub use terminal::{first_terminal, terminal_subgraphs, TerminalSubgraph, DEFAULT_TERMINAL_CAP};
pub use verdict::{
    is_persistent, is_persistent_with_cap, local_dof_compliance, merged_persistence, ComplianceReport,
    PersistenceVerdict, PersistenceWitness,
};
