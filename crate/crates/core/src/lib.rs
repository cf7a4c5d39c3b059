//! Exact decision procedures for spectrum connectivity in cognitive radio networks.
//!
//! A network has secondary users, each with a spectrum map (available channels) and an
//! antenna budget (how many channels it may open), and a potential graph of user pairs
//! that can talk when they open a common channel. The question is whether some spectrum
//! assignment makes the realized graph connected.
//!
//! * [`model`]: instances, assignments, realization and connectivity.
//! * [`solvers`]: exhaustive search, the polynomial special cases, spanning-tree search,
//!   the complete-graph solver, tree and tree-decomposition dynamic programs, and a
//!   dispatcher.
//! * [`treedecomp`]: tree decompositions and their binary rooted form.
//! * [`reductions`]: instance generators from SAT, Hamiltonian path and vertex cover, with
//!   witness extraction back to the source problem.
//! * [`io`]: instance documents, DIMACS, edge lists and random instances.
//!
//! By convention a network with zero or one users is connectable (with nothing opened).

pub mod channels;
pub mod graph;
pub mod io;
pub mod model;
pub mod reductions;
pub mod solvers;
pub mod treedecomp;
pub mod verdict;

pub use channels::{Channel, ChannelSet, MAX_CHANNELS};
pub use graph::Graph;
pub use model::{
    connects, is_connected, realize, validate, CognitiveRadioNetwork, RealizationGraph,
    SecondaryUser, SpectrumAssignment, ValidationReport,
};
pub use verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};
