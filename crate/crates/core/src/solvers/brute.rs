//! Exhaustive search over spectrum assignments.

use std::time::Instant;

use super::{finish, prelude, Prelude};
use crate::channels::ChannelSet;
use crate::graph::{self, Graph};
use crate::model::{CognitiveRadioNetwork, SpectrumAssignment};
use crate::verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};

pub fn solve_brute_force(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    solve_brute_force_with(network, &SolverConfig::default())
}

/// Depth-first enumeration of assignments, users in id order and each user's non-empty
/// admissible sets in ascending bitmask order, so the first success is the lexicographically
/// first connecting assignment.
///
/// A partial assignment is abandoned once the graph realized by letting every unassigned user
/// open its whole spectrum map is disconnected: any completion realizes a subgraph of it.
pub fn solve_brute_force_with(
    network: &CognitiveRadioNetwork,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    let pg = match prelude(network, SolverKind::BruteForce, started)? {
        Prelude::Done(v) => return Ok(v),
        Prelude::Continue(pg) => pg,
    };
    let space = search_space(network);
    if space > config.brute_force_cap {
        return Err(SolverError::CapExceeded {
            solver: SolverKind::BruteForce,
            detail: format!(
                "{space} candidate assignments exceed the cap of {}",
                config.brute_force_cap
            ),
        });
    }

    let mut search = Search {
        pg: &pg,
        choices: network.users.iter().map(|u| u.admissible_sets()).collect(),
        opened: network.users.iter().map(|u| u.spectrum_map).collect(),
        maps: network.users.iter().map(|u| u.spectrum_map).collect(),
        stats: Stats::default(),
        config,
    };
    let found = search.descend(0)?;
    let stats = search.stats;
    Ok(finish(
        if found {
            Verdict::yes(
                SolverKind::BruteForce,
                SpectrumAssignment::new(search.opened),
                stats,
            )
        } else {
            Verdict::no(SolverKind::BruteForce, stats)
        },
        started,
    ))
}

/// Product of the per-user admissible-set counts (saturating).
pub(crate) fn search_space(network: &CognitiveRadioNetwork) -> u128 {
    network
        .users
        .iter()
        .map(|u| u.admissible_count())
        .fold(1u128, |acc, c| acc.saturating_mul(c))
}

struct Search<'a> {
    pg: &'a Graph,
    choices: Vec<Vec<ChannelSet>>,
    opened: Vec<ChannelSet>,
    maps: Vec<ChannelSet>,
    stats: Stats,
    config: &'a SolverConfig,
}

impl Search<'_> {
    fn descend(&mut self, user: usize) -> Result<bool, SolverError> {
        if user == self.opened.len() {
            return Ok(true);
        }
        for idx in 0..self.choices[user].len() {
            self.stats.nodes_explored += 1;
            if self.stats.nodes_explored.is_multiple_of(4096) {
                self.config.check_deadline()?;
            }
            self.opened[user] = self.choices[user][idx];
            if self.relaxed_connected() && self.descend(user + 1)? {
                return Ok(true);
            }
        }
        self.opened[user] = self.maps[user];
        Ok(false)
    }

    fn relaxed_connected(&self) -> bool {
        let realized: Vec<_> = self
            .pg
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.opened[u].intersects(self.opened[v]))
            .collect();
        graph::is_connected(self.pg.vertex_count(), &realized)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::connects;

    fn set(cs: &[usize]) -> ChannelSet {
        cs.iter().copied().collect()
    }

    #[test]
    fn disjoint_maps_not_connectable() {
        let net = CognitiveRadioNetwork::new(2, [(set(&[0]), 1), (set(&[1]), 1)], [(0, 1)]);
        assert!(!solve_brute_force(&net).unwrap().connectable);
    }

    #[test]
    fn forced_shared_channel_witness() {
        let net = CognitiveRadioNetwork::new(2, [(set(&[0, 1]), 1), (set(&[1]), 1)], [(0, 1)]);
        let v = solve_brute_force(&net).unwrap();
        assert!(v.connectable);
        assert_eq!(v.witness.unwrap().opened, vec![set(&[1]), set(&[1])]);
    }

    #[test]
    fn path_needs_two_channel_middle() {
        let net = CognitiveRadioNetwork::new(
            2,
            [(set(&[0]), 1), (set(&[0, 1]), 2), (set(&[1]), 1)],
            [(0, 1), (1, 2)],
        );
        let v = solve_brute_force(&net).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.opened[1], set(&[0, 1]));
        assert!(connects(&net, &w));
    }

    #[test]
    fn cap_refuses() {
        let net = CognitiveRadioNetwork::new_complete(10, (0..8).map(|_| (ChannelSet::full(10), 10)));
        let config = SolverConfig {
            brute_force_cap: 1000,
            ..SolverConfig::default()
        };
        assert!(matches!(
            solve_brute_force_with(&net, &config),
            Err(SolverError::CapExceeded { .. })
        ));
    }

    #[test]
    fn single_user_is_connectable_with_nothing_open() {
        let net = CognitiveRadioNetwork::new(1, [(set(&[0]), 1)], []);
        let v = solve_brute_force(&net).unwrap();
        assert!(v.connectable);
        assert_eq!(v.witness.unwrap().opened, vec![ChannelSet::EMPTY]);
    }
}
