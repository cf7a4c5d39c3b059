//! Polynomial cases: every budget is one, or every budget covers the whole channel universe.

use std::time::Instant;

use super::{check_valid, finish, prelude, Prelude};
use crate::channels::ChannelSet;
use crate::model::{realize, CognitiveRadioNetwork, SpectrumAssignment};
use crate::verdict::{SolverError, SolverKind, Stats, Verdict};

/// With unit budgets each realized edge joins users on the same single channel, so a
/// connected realization puts everyone on one channel: connectable iff the potential graph
/// is connected and some channel lies in every spectrum map.
pub fn solve_beta_one(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    check_valid(network)?;
    if let Some((i, u)) = network.users.iter().enumerate().find(|(_, u)| u.budget != 1) {
        return Err(SolverError::Precondition {
            solver: SolverKind::BetaOne,
            reason: format!("user {i} ({}) has budget {}", u.name, u.budget),
        });
    }
    if let Prelude::Done(v) = prelude(network, SolverKind::BetaOne, started)? {
        return Ok(v);
    }
    let common = network
        .users
        .iter()
        .fold(ChannelSet::full(network.channel_count), |acc, u| {
            acc.intersection(u.spectrum_map)
        });
    let verdict = match common.first() {
        Some(c) => Verdict::yes(
            SolverKind::BetaOne,
            SpectrumAssignment::new(vec![ChannelSet::single(c); network.user_count()]),
            Stats::default(),
        ),
        None => Verdict::no(SolverKind::BetaOne, Stats::default()),
    };
    Ok(finish(verdict, started))
}

/// When every budget is at least `k`, opening each full spectrum map is allowed and
/// realizes a superset of any other assignment's edges.
pub fn solve_k_le_beta(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    check_valid(network)?;
    let k = network.channel_count;
    if let Some((i, u)) = network.users.iter().enumerate().find(|(_, u)| u.budget < k) {
        return Err(SolverError::Precondition {
            solver: SolverKind::FullOpen,
            reason: format!("user {i} ({}) has budget {} < k = {k}", u.name, u.budget),
        });
    }
    if let Prelude::Done(v) = prelude(network, SolverKind::FullOpen, started)? {
        return Ok(v);
    }
    let witness = network.full_opening();
    let connected = realize(network, &witness)
        .map_err(|e| SolverError::Inconsistent(e.to_string()))?
        .is_connected();
    let verdict = if connected {
        Verdict::yes(SolverKind::FullOpen, witness, Stats::default())
    } else {
        Verdict::no(SolverKind::FullOpen, Stats::default())
    };
    Ok(finish(verdict, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(cs: &[usize]) -> ChannelSet {
        cs.iter().copied().collect()
    }

    #[test]
    fn star_shares_channel_one() {
        let net = CognitiveRadioNetwork::new(
            3,
            [(set(&[0, 1]), 1), (set(&[1]), 1), (set(&[1, 2]), 1)],
            [(0, 1), (0, 2)],
        );
        let v = solve_beta_one(&net).unwrap();
        assert!(v.connectable);
        assert_eq!(v.witness.unwrap().opened, vec![set(&[1]); 3]);
    }

    #[test]
    fn empty_intersection_fails() {
        let net = CognitiveRadioNetwork::new(2, [(set(&[0]), 1), (set(&[1]), 1)], [(0, 1)]);
        assert!(!solve_beta_one(&net).unwrap().connectable);
    }

    #[test]
    fn disconnected_potential_graph_fails() {
        let net = CognitiveRadioNetwork::new(1, [(set(&[0]), 1); 3], [(0, 1)]);
        assert!(!solve_beta_one(&net).unwrap().connectable);
    }

    #[test]
    fn beta_one_rejects_larger_budgets() {
        let net = CognitiveRadioNetwork::new(2, [(set(&[0]), 2), (set(&[0]), 1)], [(0, 1)]);
        assert!(matches!(
            solve_beta_one(&net),
            Err(SolverError::Precondition { .. })
        ));
    }

    #[test]
    fn full_open_triangle() {
        let net = CognitiveRadioNetwork::new_complete(2, [(set(&[0, 1]), 2); 3]);
        assert!(solve_k_le_beta(&net).unwrap().connectable);
    }

    #[test]
    fn full_open_disjoint_maps() {
        let net = CognitiveRadioNetwork::new(2, [(set(&[0]), 2), (set(&[1]), 2)], [(0, 1)]);
        assert!(!solve_k_le_beta(&net).unwrap().connectable);
    }

    #[test]
    fn full_open_single_user() {
        let net = CognitiveRadioNetwork::new(3, [(set(&[0, 1, 2]), 3)], []);
        assert!(solve_k_le_beta(&net).unwrap().connectable);
        let low = CognitiveRadioNetwork::new(3, [(set(&[0]), 2)], []);
        assert!(solve_k_le_beta(&low).is_err());
    }
}
