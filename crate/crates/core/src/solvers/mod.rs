//! Decision procedures for spectrum connectivity.
//!
//! Every solver validates its input, rejects instances outside its precondition, and
//! answers the trivial cases (at most one user, disconnected potential graph) up front.
//! A connectable verdict always carries a witness assignment.

mod auto;
mod brute;
mod complete;
mod fast;
mod matching;
mod spanning;
mod tree_dp;
mod treewidth_dp;

use std::time::Instant;

pub use auto::{predicted_exponents, solve_auto, solve_auto_with};
pub use brute::{solve_brute_force, solve_brute_force_with};
pub use complete::{solve_complete, solve_complete_with, SpectrumGraph};
pub use fast::{solve_beta_one, solve_k_le_beta};
pub use matching::{max_bipartite_matching, Matching};
pub use spanning::{enumerate_spanning_trees, solve_spanning_tree, solve_spanning_tree_with, SpanningTrees};
pub use tree_dp::{solve_tree_dp, solve_tree_dp_with, tree_dp_tables, TreeDpTable};
pub use treewidth_dp::{
    solve_treewidth_dp, solve_treewidth_dp_with, solve_treewidth_literal,
    solve_treewidth_literal_with,
};

use crate::graph::Graph;
use crate::model::{validate, CognitiveRadioNetwork, SpectrumAssignment};
use crate::verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};

/// Runs the named solver. [`SolverKind::TreewidthDp`] and [`SolverKind::TreewidthLiteral`]
/// build their own decomposition within `config.treewidth_bound`; [`SolverKind::Trivial`]
/// dispatches like [`solve_auto`].
pub fn solve_with(
    kind: SolverKind,
    network: &CognitiveRadioNetwork,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    match kind {
        SolverKind::BruteForce => solve_brute_force_with(network, config),
        SolverKind::BetaOne => solve_beta_one(network),
        SolverKind::FullOpen => solve_k_le_beta(network),
        SolverKind::SpanningTree => solve_spanning_tree_with(network, config),
        SolverKind::Complete => solve_complete_with(network, config),
        SolverKind::TreeDp => solve_tree_dp_with(network, config),
        SolverKind::TreewidthDp | SolverKind::TreewidthLiteral => {
            let ntd = treewidth_dp::decomposition_for(network, config.treewidth_bound)?;
            if kind == SolverKind::TreewidthDp {
                solve_treewidth_dp_with(network, &ntd, config)
            } else {
                solve_treewidth_literal_with(network, &ntd, config)
            }
        }
        SolverKind::Trivial => solve_auto_with(network, config),
    }
}

pub(crate) enum Prelude {
    Done(Verdict),
    Continue(Graph),
}

/// Validation plus the answers every solver shares: at most one user is connectable with
/// the empty assignment, a disconnected potential graph is never connectable.
pub(crate) fn prelude(
    network: &CognitiveRadioNetwork,
    solver: SolverKind,
    started: Instant,
) -> Result<Prelude, SolverError> {
    check_valid(network)?;
    let n = network.user_count();
    let stats = Stats {
        elapsed: started.elapsed(),
        ..Stats::default()
    };
    if n <= 1 {
        return Ok(Prelude::Done(Verdict::yes(
            solver,
            SpectrumAssignment::empty(n),
            stats,
        )));
    }
    let pg = network.potential_graph();
    if !pg.is_connected() {
        return Ok(Prelude::Done(Verdict::no(solver, stats)));
    }
    Ok(Prelude::Continue(pg))
}

pub(crate) fn check_valid(network: &CognitiveRadioNetwork) -> Result<(), SolverError> {
    let report = validate(network);
    if report.is_valid() {
        Ok(())
    } else {
        Err(SolverError::InvalidNetwork(report))
    }
}

pub(crate) fn finish(mut verdict: Verdict, started: Instant) -> Verdict {
    verdict.stats.elapsed = started.elapsed();
    verdict
}
