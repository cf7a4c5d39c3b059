//! Dynamic programming over a tree-shaped potential graph.
//!
//! Rooted at user 0. For each user `v` and admissible set `S` (`S ⊆ SpecMap(v)`,
//! `1 ≤ |S| ≤ β(v)`), `f(v, S)` holds iff the subtree of `v` can be connected with `v`
//! opening exactly `S`; `g(v, c)` holds iff some `S ∋ c` has `f(v, S)`. Then
//! `f(v, S)` holds iff every child `w` has some `c ∈ S` with `g(w, c)`.

use std::time::Instant;

use super::{finish, prelude, Prelude};
use crate::channels::ChannelSet;
use crate::graph::Graph;
use crate::model::{CognitiveRadioNetwork, SpectrumAssignment};
use crate::verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};

/// Filled `f`/`g` tables for one rooted tree.
#[derive(Clone, Debug)]
pub struct TreeDpTable {
    pub root: usize,
    pub children: Vec<Vec<usize>>,
    /// Admissible sets per user, ascending by bitmask.
    pub sets: Vec<Vec<ChannelSet>>,
    /// `f[v][i]` is `f(v, sets[v][i])`.
    pub f: Vec<Vec<bool>>,
    /// `g[v]` holds exactly the channels `c` with `g(v, c) = 1`.
    pub g: Vec<ChannelSet>,
}

impl TreeDpTable {
    /// Smallest set at the root with `f = 1`.
    pub fn root_choice(&self) -> Option<ChannelSet> {
        first_true(&self.sets[self.root], &self.f[self.root], |_| true)
    }

    /// Top-down reconstruction: each child takes the smallest channel of its parent's set it
    /// can connect through, then its smallest feasible set containing that channel.
    pub fn witness(&self) -> Option<SpectrumAssignment> {
        let n = self.sets.len();
        let mut opened = vec![ChannelSet::EMPTY; n];
        opened[self.root] = self.root_choice()?;
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            for &w in &self.children[v] {
                let c = opened[v].intersection(self.g[w]).first()?;
                opened[w] = first_true(&self.sets[w], &self.f[w], |s| s.contains(c))?;
                stack.push(w);
            }
        }
        Some(SpectrumAssignment::new(opened))
    }

    pub fn entry_count(&self) -> u64 {
        self.f.iter().map(|row| row.len() as u64).sum()
    }
}

fn first_true(
    sets: &[ChannelSet],
    f: &[bool],
    pred: impl Fn(ChannelSet) -> bool,
) -> Option<ChannelSet> {
    sets.iter()
        .zip(f)
        .find(|&(&s, &ok)| ok && pred(s))
        .map(|(&s, _)| s)
}

/// Fills the tables for `tree` (a spanning tree over the network's users) rooted at user 0.
pub(crate) fn fill_tables(network: &CognitiveRadioNetwork, tree: &Graph) -> TreeDpTable {
    let n = network.user_count();
    let root = 0;
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    if n > 0 {
        seen[root] = true;
        order.push(root);
    }
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                children[v].push(w);
                order.push(w);
            }
        }
    }

    let sets: Vec<Vec<ChannelSet>> = network
        .users
        .iter()
        .map(|u| {
            if n == 1 {
                u.spectrum_map
                    .subsets()
                    .filter(|s| s.len() <= u.budget)
                    .collect()
            } else {
                u.admissible_sets()
            }
        })
        .collect();
    let mut f: Vec<Vec<bool>> = sets.iter().map(|s| vec![false; s.len()]).collect();
    let mut g = vec![ChannelSet::EMPTY; n];
    for &v in order.iter().rev() {
        for (i, &s) in sets[v].iter().enumerate() {
            if children[v].iter().all(|&w| s.intersects(g[w])) {
                f[v][i] = true;
                g[v] = g[v].union(s);
            }
        }
    }
    TreeDpTable {
        root,
        children,
        sets,
        f,
        g,
    }
}

/// Computes the tables for a network whose potential graph is a tree.
pub fn tree_dp_tables(network: &CognitiveRadioNetwork) -> Result<TreeDpTable, SolverError> {
    super::check_valid(network)?;
    let pg = network.potential_graph();
    if !pg.is_tree() {
        return Err(not_a_tree(&pg));
    }
    Ok(fill_tables(network, &pg))
}

pub fn solve_tree_dp(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    solve_tree_dp_with(network, &SolverConfig::default())
}

pub fn solve_tree_dp_with(
    network: &CognitiveRadioNetwork,
    _config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    super::check_valid(network)?;
    let pg = network.potential_graph();
    // Disconnected inputs fall through to the prelude's "not connectable".
    if pg.vertex_count() > 1 && pg.is_connected() && !pg.is_tree() {
        return Err(not_a_tree(&pg));
    }
    let pg = match prelude(network, SolverKind::TreeDp, started)? {
        Prelude::Done(v) => return Ok(v),
        Prelude::Continue(pg) => pg,
    };
    let mut stats = Stats::default();
    let witness = tree_dp_witness(network, &pg, &mut stats);
    let verdict = match witness {
        Some(w) => Verdict::yes(SolverKind::TreeDp, w, stats),
        None => Verdict::no(SolverKind::TreeDp, stats),
    };
    Ok(finish(verdict, started))
}

/// Runs the DP on `tree` and returns the reconstructed witness, if any.
pub(crate) fn tree_dp_witness(
    network: &CognitiveRadioNetwork,
    tree: &Graph,
    stats: &mut Stats,
) -> Option<SpectrumAssignment> {
    let table = fill_tables(network, tree);
    stats.dp_entries += table.entry_count() + (network.user_count() * network.channel_count) as u64;
    table.witness()
}

fn not_a_tree(pg: &Graph) -> SolverError {
    SolverError::Precondition {
        solver: SolverKind::TreeDp,
        reason: format!(
            "potential graph with {} users and {} edges is not a tree",
            pg.vertex_count(),
            pg.edge_count()
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::connects;

    fn set(cs: &[usize]) -> ChannelSet {
        cs.iter().copied().collect()
    }

    fn star(center_budget: usize) -> CognitiveRadioNetwork {
        CognitiveRadioNetwork::new(
            3,
            [
                (set(&[0, 1, 2]), center_budget),
                (set(&[0]), 1),
                (set(&[1]), 1),
                (set(&[2]), 1),
            ],
            [(0, 1), (0, 2), (0, 3)],
        )
    }

    #[test]
    fn star_center_budget_two_fails() {
        assert!(!solve_tree_dp(&star(2)).unwrap().connectable);
    }

    #[test]
    fn star_center_budget_three_succeeds() {
        let net = star(3);
        let v = solve_tree_dp(&net).unwrap();
        assert!(v.connectable);
        assert!(connects(&net, v.witness.as_ref().unwrap()));
    }

    #[test]
    fn single_edge_forced_channel() {
        let net = CognitiveRadioNetwork::new(2, [(set(&[0, 1]), 1), (set(&[1]), 1)], [(0, 1)]);
        let v = solve_tree_dp(&net).unwrap();
        assert_eq!(v.witness.unwrap().opened, vec![set(&[1]), set(&[1])]);
    }

    #[test]
    fn rejects_cycles() {
        let net = CognitiveRadioNetwork::new_complete(1, [(set(&[0]), 1); 3]);
        assert!(matches!(
            solve_tree_dp(&net),
            Err(SolverError::Precondition { .. })
        ));
    }

    #[test]
    fn disconnected_forest_is_not_connectable() {
        let net = CognitiveRadioNetwork::new(1, [(set(&[0]), 1); 3], [(0, 1)]);
        assert!(!solve_tree_dp(&net).unwrap().connectable);
    }

    #[test]
    fn g_matches_f_by_scan() {
        let net = star(3);
        let t = tree_dp_tables(&net).unwrap();
        for v in 0..net.user_count() {
            for c in 0..net.channel_count {
                let scan = t.sets[v]
                    .iter()
                    .zip(&t.f[v])
                    .any(|(s, &ok)| ok && s.contains(c));
                assert_eq!(t.g[v].contains(c), scan);
            }
        }
    }
}
