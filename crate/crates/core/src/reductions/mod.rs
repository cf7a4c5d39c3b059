//! Instance generators from SAT, Hamiltonian path and vertex cover, with witness extraction.
//!
//! Each generator returns a [`ReductionArtifact`]: the generated network, a map from source
//! objects to the users or channels standing for them, and the source instance so that
//! extracted witnesses can be checked.

mod cnf;
mod construct;
mod extract;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::model::CognitiveRadioNetwork;

pub use cnf::{clause_polarity, sat_to_uniform, CnfFormula, UniformCnfFormula, VariableMap};
pub use construct::{
    hamiltonian_to_crn, pad_channels, uniform_to_speccon, uniform_to_two_channel,
    vertex_cover_to_crn,
};
pub use extract::{extract_hamiltonian, extract_sat, extract_vertex_cover};

/// Which construction produced an artifact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "construction")]
pub enum ReductionKind {
    /// Uniform SAT to `β + 1` channels with uniform budget `β`.
    UniformSat { beta: usize },
    /// Uniform SAT to two channels with mixed budgets.
    TwoChannel,
    /// Hamiltonian path to a complete potential graph with budget 2.
    Hamiltonian,
    /// Vertex cover of size `r` to a star potential graph.
    VertexCover { r: usize },
}

/// What a source object is mapped to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapTarget {
    User(usize),
    Channel(usize),
}

/// The instance a construction started from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionSource {
    Formula(UniformCnfFormula),
    Graph(Graph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub network: CognitiveRadioNetwork,
    /// Source labels (`x1`, `c2`, `v0`, `e0-1`, …) to generated ids.
    pub forward_map: BTreeMap<String, MapTarget>,
    pub kind: ReductionKind,
    pub source: ReductionSource,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("clause {0} mixes positive and negative literals")]
    NotUniform(usize),
    #[error("budget must be at least 2, got {0}")]
    BetaTooSmall(usize),
    #[error("padding target {target} must exceed the current {current} channels")]
    PadTarget { current: usize, target: usize },
    #[error("the construction needs {0} channels, more than the supported maximum")]
    TooManyChannels(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("cover size bound must be at least 1")]
    CoverBound,
    #[error("artifact from a {0:?} construction cannot be used here")]
    WrongKind(ReductionKind),
    #[error("witness does not connect the generated network")]
    NotConnecting,
    #[error("extracted witness fails the source check: {0}")]
    ExtractionFailed(String),
}
