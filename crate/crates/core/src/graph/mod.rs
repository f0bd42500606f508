//! Formation and meta-formation data model.

mod dot;
mod formation;
mod meta;
mod undirected;

pub use dot::{formation_to_dot, meta_to_dot};
pub use formation::{Edge, Formation, VertexId};
pub use meta::{classify, required_inter_edges, MetaClass, MetaFormation, MetaKind};
pub use undirected::UndirectedView;
