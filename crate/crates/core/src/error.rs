use thiserror::Error;

use crate::network::{LayerId, NodeId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("unknown layer {0}")]
    UnknownLayer(LayerId),
    #[error("node {node} does not occur in layer {layer}")]
    MissingOccurrence { node: NodeId, layer: LayerId },
    #[error("self-loop on node {node} in layer {layer}")]
    SelfLoop { node: NodeId, layer: LayerId },
    #[error("coupling of node {0} joins a layer with itself")]
    DegenerateCoupling(NodeId),
    #[error("node {0} has no occurrence in any layer")]
    NodeWithoutOccurrence(NodeId),
    #[error("invalid label {0:?}: labels must be non-empty and contain no whitespace or commas")]
    InvalidLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("network invariant violated: {0}")]
    Invariant(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid assignment pair (contact {contact}, layer {layer}): {reason}")]
    InvalidAssignment {
        contact: NodeId,
        layer: LayerId,
        reason: String,
    },
    #[error("search space of {states} states exceeds the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u128 },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
