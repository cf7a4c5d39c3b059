//! Solver results, counters and errors.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::model::{SpectrumAssignment, ValidationReport};

/// Identifies which decision procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    BruteForce,
    BetaOne,
    FullOpen,
    SpanningTree,
    Complete,
    TreeDp,
    TreewidthDp,
    TreewidthLiteral,
    /// Answered before any solver ran (disconnected potential graph, at most one user).
    Trivial,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::BruteForce => "brute-force",
            SolverKind::BetaOne => "beta-one",
            SolverKind::FullOpen => "full-open",
            SolverKind::SpanningTree => "spanning-tree",
            SolverKind::Complete => "complete",
            SolverKind::TreeDp => "tree-dp",
            SolverKind::TreewidthDp => "treewidth-dp",
            SolverKind::TreewidthLiteral => "treewidth-literal",
            SolverKind::Trivial => "trivial",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "brute" | "brute-force" => SolverKind::BruteForce,
            "beta-one" => SolverKind::BetaOne,
            "full-open" => SolverKind::FullOpen,
            "spanning" | "spanning-tree" => SolverKind::SpanningTree,
            "complete" => SolverKind::Complete,
            "tree" | "tree-dp" => SolverKind::TreeDp,
            "treewidth" | "treewidth-dp" => SolverKind::TreewidthDp,
            "treewidth-literal" => SolverKind::TreewidthLiteral,
            other => return Err(format!("unknown solver '{other}'")),
        })
    }
}

/// Work counters collected during a solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Search nodes (partial assignments) visited by brute force.
    pub nodes_explored: u64,
    /// Spanning trees handed to the tree DP.
    pub trees_enumerated: u64,
    /// Entries written to DP tables.
    pub dp_entries: u64,
    /// Spectrum-graph families examined by the complete-graph solver.
    pub families_examined: u64,
    pub elapsed: Duration,
}

/// The answer of a solver. A connectable verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub connectable: bool,
    pub witness: Option<SpectrumAssignment>,
    pub solver: SolverKind,
    pub stats: Stats,
}

impl Verdict {
    pub fn yes(solver: SolverKind, witness: SpectrumAssignment, stats: Stats) -> Self {
        Verdict {
            connectable: true,
            witness: Some(witness),
            solver,
            stats,
        }
    }

    pub fn no(solver: SolverKind, stats: Stats) -> Self {
        Verdict {
            connectable: false,
            witness: None,
            solver,
            stats,
        }
    }
}

/// Knobs shared by all solvers.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Brute force refuses when the product of per-user admissible-set counts exceeds this.
    pub brute_force_cap: u128,
    /// The complete-graph solver refuses above this many channels.
    pub complete_max_channels: usize,
    /// Largest treewidth for which the dispatcher uses the bag DP.
    pub treewidth_bound: usize,
    /// Cooperative deadline; solvers return [`SolverError::Timeout`] once it passes.
    pub deadline: Option<Instant>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            brute_force_cap: 1 << 24,
            complete_max_channels: 5,
            treewidth_bound: 3,
            deadline: None,
        }
    }
}

impl SolverConfig {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_deadline(&self) -> Result<(), SolverError> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(SolverError::Timeout),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("invalid network: {0}")]
    InvalidNetwork(ValidationReport),
    #[error("{solver} not applicable: {reason}")]
    Precondition { solver: SolverKind, reason: String },
    #[error("{solver} refused: {detail}")]
    CapExceeded { solver: SolverKind, detail: String },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("time limit reached")]
    Timeout,
}
