//! File formats and instance generation.

mod dimacs;
mod edgelist;
mod instance;
mod random;
mod reduction;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use instance::{
    parse_instance, serialize_instance, InstanceDocument, PotentialGraphDoc, StatsDoc, UserDoc,
    VerdictDocument, WitnessEntry,
};
pub use random::{gen_random, GenParams};
pub use reduction::{NamedTarget, ReductionDocument};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("user '{user}' references undeclared channel '{channel}'")]
    UnknownChannel { user: String, channel: String },
    #[error("edge references undeclared user '{0}'")]
    UnknownUser(String),
    #[error("duplicate user '{0}'")]
    DuplicateUser(String),
    #[error("duplicate channel '{0}'")]
    DuplicateChannel(String),
    #[error("{0} channels declared; at most 62 are supported")]
    TooManyChannels(usize),
    #[error("potential_graph: expected \"complete\" or {{\"edges\": [...]}}, got \"{0}\"")]
    PotentialGraph(String),
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0}")]
pub struct GenError(pub String);
