//! Structure-aware dispatch.

use std::time::Instant;

use super::brute::search_space;
use super::treewidth_dp::decomposition_for;
use super::{
    finish, prelude, solve_beta_one, solve_brute_force_with, solve_complete_with, solve_k_le_beta,
    solve_spanning_tree_with, solve_tree_dp_with, solve_treewidth_dp_with, Prelude,
};
use crate::model::CognitiveRadioNetwork;
use crate::verdict::{SolverConfig, SolverError, SolverKind, Verdict};

/// Log-2 cost exponents `(k·n, k + n·log2 n)` of exhaustive search and spanning-tree search.
pub fn predicted_exponents(network: &CognitiveRadioNetwork) -> (f64, f64) {
    let n = network.user_count() as f64;
    let k = network.channel_count as f64;
    let nlogn = if n > 1.0 { n * n.log2() } else { 0.0 };
    (k * n, k + nlogn)
}

pub fn solve_auto(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    solve_auto_with(network, &SolverConfig::default())
}

/// Picks the cheapest applicable solver:
/// disconnected or single-user → answered directly; unit budgets → beta-one; every budget
/// at least `k` → full-open; tree → tree-dp; complete with few channels → complete; small
/// treewidth with small bag tables → treewidth-dp; otherwise brute force or spanning-tree,
/// whichever has the smaller predicted exponent (spanning-tree if brute force would refuse).
pub fn solve_auto_with(
    network: &CognitiveRadioNetwork,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    let pg = match prelude(network, SolverKind::Trivial, started)? {
        Prelude::Done(v) => return Ok(finish(v, started)),
        Prelude::Continue(pg) => pg,
    };
    let k = network.channel_count;
    if network.users.iter().all(|u| u.budget == 1) {
        return solve_beta_one(network);
    }
    if network.min_budget().is_some_and(|b| k <= b) {
        return solve_k_le_beta(network);
    }
    if pg.is_tree() {
        return solve_tree_dp_with(network, config);
    }
    if network.is_complete() && k <= config.complete_max_channels {
        return solve_complete_with(network, config);
    }
    if let Ok(ntd) = decomposition_for(network, config.treewidth_bound) {
        let widest = network
            .users
            .iter()
            .map(|u| u.admissible_count())
            .max()
            .unwrap_or(1) as f64;
        let table_exponent = 2.0 * (ntd.width() + 1) as f64 * widest.log2();
        if table_exponent <= 24.0 {
            return solve_treewidth_dp_with(network, &ntd, config);
        }
    }
    let (brute, spanning) = predicted_exponents(network);
    if brute <= spanning && search_space(network) <= config.brute_force_cap {
        solve_brute_force_with(network, config)
    } else {
        solve_spanning_tree_with(network, config)
    }
}
