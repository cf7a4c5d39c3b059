//! Solver for complete potential graphs, searching over spectrum graphs.
//!
//! With a complete potential graph only the family of distinct opened sets matters: users
//! opening the same set are adjacent, and two sets' users are adjacent iff the sets meet.
//! So the network is connectable iff some family `V` of non-empty channel sets has a
//! connected intersection graph and can be realized: every user can open some member of `V`,
//! and a matching in the user/member bipartite graph covers every member.

use std::time::Instant;

use super::matching::max_bipartite_matching;
use super::{finish, prelude, Prelude};
use crate::channels::ChannelSet;
use crate::graph::UnionFind;
use crate::model::{CognitiveRadioNetwork, SpectrumAssignment};
use crate::verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};

/// Intersection graph on a family of distinct non-empty channel sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumGraph {
    pub vertices: Vec<ChannelSet>,
}

impl SpectrumGraph {
    pub fn new(vertices: Vec<ChannelSet>) -> Self {
        SpectrumGraph { vertices }
    }

    /// Index pairs of intersecting members.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.vertices.len();
        (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| self.vertices[a].intersects(self.vertices[b]))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        for (a, b) in self.edges() {
            uf.union(a, b);
        }
        uf.set_count() <= 1
    }
}

pub fn solve_complete(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    solve_complete_with(network, &SolverConfig::default())
}

/// Families are enumerated by size, then lexicographically over the ascending list of sets
/// that at least one user can open; other sets could never be covered by the matching.
/// Families larger than the number of users are skipped for the same reason.
pub fn solve_complete_with(
    network: &CognitiveRadioNetwork,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    super::check_valid(network)?;
    if !network.is_complete() {
        return Err(SolverError::Precondition {
            solver: SolverKind::Complete,
            reason: "potential graph is not complete".into(),
        });
    }
    let k = network.channel_count;
    if k > config.complete_max_channels {
        return Err(SolverError::CapExceeded {
            solver: SolverKind::Complete,
            detail: format!(
                "k = {k} exceeds the complete-graph cap of {} channels",
                config.complete_max_channels
            ),
        });
    }
    if let Prelude::Done(v) = prelude(network, SolverKind::Complete, started)? {
        return Ok(v);
    }

    let n = network.user_count();
    let openable: Vec<ChannelSet> = ChannelSet::full(k)
        .nonempty_subsets_up_to(k)
        .filter(|&s| network.users.iter().any(|u| u.admits(s)))
        .collect();
    let mut stats = Stats::default();
    for size in 1..=openable.len().min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            stats.families_examined += 1;
            if stats.families_examined % 1024 == 0 {
                config.check_deadline()?;
            }
            let family: Vec<ChannelSet> = combo.iter().map(|&i| openable[i]).collect();
            if let Some(w) = realize_family(network, &family) {
                return Ok(finish(Verdict::yes(SolverKind::Complete, w, stats), started));
            }
            if !next_combination(&mut combo, openable.len()) {
                break;
            }
        }
    }
    Ok(finish(Verdict::no(SolverKind::Complete, stats), started))
}

/// An assignment whose distinct opened sets are exactly `family`, if the family's spectrum
/// graph is connected and such an assignment exists.
fn realize_family(network: &CognitiveRadioNetwork, family: &[ChannelSet]) -> Option<SpectrumAssignment> {
    if !SpectrumGraph::new(family.to_vec()).is_connected() {
        return None;
    }
    let adj: Vec<Vec<usize>> = network
        .users
        .iter()
        .map(|u| (0..family.len()).filter(|&j| u.admits(family[j])).collect())
        .collect();
    if adj.iter().any(Vec::is_empty) {
        return None;
    }
    let matching = max_bipartite_matching(&adj, family.len());
    if matching.size < family.len() {
        return None;
    }
    let opened = adj
        .iter()
        .zip(&matching.left_to_right)
        .map(|(nbrs, m)| family[m.unwrap_or(nbrs[0])])
        .collect();
    Some(SpectrumAssignment::new(opened))
}

/// Advances `combo` to the next `combo.len()`-subset of `0..universe` in lexicographic order.
fn next_combination(combo: &mut [usize], universe: usize) -> bool {
    let r = combo.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if combo[i] < universe - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
