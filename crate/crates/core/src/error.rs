use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or invariant-violating input document.
    #[error("input error at {location}: {message}")]
    Input { location: String, message: String },

    /// A configurable search or enumeration limit was hit.
    #[error("resource limit exceeded: {what} (cap {cap})")]
    Resource { what: String, cap: usize },

    #[error("meta-vertex {index} is not rigid in {dim}D")]
    NotRigidMetaVertex { index: usize, dim: u8 },

    #[error("formation {index} is not persistent in {dim}D")]
    NotPersistent { index: usize, dim: u8 },

    #[error("graph is not rigid in {dim}D")]
    NotRigid { dim: u8 },

    #[error("fixed edge sets are not independent")]
    FixedNotIndependent,

    #[error("vertex {0} does not belong to any formation")]
    DanglingVertex(VertexId),

    #[error("not enough local DOFs: {available} available, {required} required")]
    InsufficientDof { available: usize, required: usize },

    #[error("inter-edges cannot reach the required incidence: {0}")]
    UnsatisfiableIncidence(String),

    #[error("merging is infeasible: {0}")]
    Infeasible(String),

    #[error("no construction found for DOF allocation {0}")]
    CatalogMiss(String),

    #[error("invalid operation: {0}")]
    InvalidOperation(String),
}

impl Error {
    pub(crate) fn input(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input { location: location.into(), message: message.into() }
    }
}
