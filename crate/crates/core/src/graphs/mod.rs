//! Graphs, the studied families, and torus quotients of the plane tilings.

mod families;
mod graph;
mod torus;

use alloc::string::String;

pub use families::{build_family, FamilyDescriptor, Tiling};
pub use graph::Graph;
pub use torus::{build_torus_quotient, tiling_classes};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not finitely realizable")]
    NotFinitelyRealizable(&'static str),
    #[error("quotient too small: {0}")]
    QuotientTooSmall(String),
    #[error("expected {expected} vertex names, found {found}")]
    NameCount { expected: usize, found: usize },
}
