//! Network instances, spectrum assignments and realization graphs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::channels::{ChannelSet, MAX_CHANNELS};
use crate::graph::{self, ordered, Graph};

/// A secondary user: the channels available at its location and how many it may open at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondaryUser {
    pub name: String,
    pub spectrum_map: ChannelSet,
    pub budget: usize,
}

impl SecondaryUser {
    pub fn new(name: impl Into<String>, spectrum_map: ChannelSet, budget: usize) -> Self {
        SecondaryUser {
            name: name.into(),
            spectrum_map,
            budget,
        }
    }

    /// Whether this user may open exactly `set`.
    pub fn admits(&self, set: ChannelSet) -> bool {
        set.is_subset(self.spectrum_map) && set.len() <= self.budget
    }

    /// Non-empty openable channel sets, ascending by bitmask.
    pub fn admissible_sets(&self) -> Vec<ChannelSet> {
        self.spectrum_map
            .nonempty_subsets_up_to(self.budget)
            .collect()
    }

    /// Number of non-empty openable sets, computed without enumerating them.
    pub fn admissible_count(&self) -> u128 {
        let t = self.spectrum_map.len();
        let mut total: u128 = 0;
        let mut binom: u128 = 1;
        for j in 1..=self.budget.min(t) {
            binom = binom * (t - j + 1) as u128 / j as u128;
            total += binom;
        }
        total
    }
}

/// A cognitive radio network: users, a channel universe `0..k` and the potential graph.
///
/// User ids are positions in `users`. When `complete` is set the potential graph is the
/// complete graph and `edges` is ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CognitiveRadioNetwork {
    pub users: Vec<SecondaryUser>,
    pub channel_count: usize,
    pub channel_names: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub complete: bool,
}

impl CognitiveRadioNetwork {
    /// Network with default names (`u0, u1, ...` for users, `0, 1, ...` for channels).
    pub fn new(
        channel_count: usize,
        users: impl IntoIterator<Item = (ChannelSet, usize)>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let users = users
            .into_iter()
            .enumerate()
            .map(|(i, (map, budget))| SecondaryUser::new(format!("u{i}"), map, budget))
            .collect();
        CognitiveRadioNetwork {
            users,
            channel_count,
            channel_names: (0..channel_count).map(|c| c.to_string()).collect(),
            edges: edges.into_iter().collect(),
            complete: false,
        }
    }

    /// Network whose potential graph is complete.
    pub fn new_complete(
        channel_count: usize,
        users: impl IntoIterator<Item = (ChannelSet, usize)>,
    ) -> Self {
        let mut net = Self::new(channel_count, users, []);
        net.complete = true;
        net
    }

    pub fn user_count(&self) -> usize {
        self.users.len()
    }

    /// The potential graph. Out-of-range endpoints and self-loops are skipped; run
    /// [`validate`] first to have them reported.
    pub fn potential_graph(&self) -> Graph {
        let n = self.users.len();
        if self.complete {
            return Graph::complete(n);
        }
        Graph::new(
            n,
            self.edges
                .iter()
                .copied()
                .filter(|&(u, v)| u < n && v < n && u != v),
        )
    }

    /// Complete flag set, or every pair present in the edge list.
    pub fn is_complete(&self) -> bool {
        self.complete || self.potential_graph().is_complete()
    }

    pub fn min_budget(&self) -> Option<usize> {
        self.users.iter().map(|u| u.budget).min()
    }

    /// Largest spectrum-map size.
    pub fn max_map_size(&self) -> usize {
        self.users.iter().map(|u| u.spectrum_map.len()).max().unwrap_or(0)
    }

    /// Copy of the network with the potential graph replaced by `edges`.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        CognitiveRadioNetwork {
            edges: edges.into_iter().collect(),
            complete: false,
            ..self.clone()
        }
    }

    /// Assignment opening every user's full spectrum map (ignores budgets).
    pub fn full_opening(&self) -> SpectrumAssignment {
        SpectrumAssignment::new(self.users.iter().map(|u| u.spectrum_map).collect())
    }
}

/// One violated invariant of a network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooManyChannels { channel_count: usize },
    ChannelNameCount { names: usize, channel_count: usize },
    BudgetZero { user: usize },
    MapOutOfRange { user: usize, channel: usize },
    SelfLoop { user: usize },
    EndpointOutOfRange { edge: (usize, usize) },
    DuplicateEdge { edge: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyChannels { channel_count } => {
                write!(f, "channel count {channel_count} exceeds {MAX_CHANNELS}")
            }
            Violation::ChannelNameCount {
                names,
                channel_count,
            } => write!(f, "{names} channel names for {channel_count} channels"),
            Violation::BudgetZero { user } => write!(f, "user {user}: budget ≥ 1 violated"),
            Violation::MapOutOfRange { user, channel } => {
                write!(f, "user {user}: spectrum map contains unknown channel {channel}")
            }
            Violation::SelfLoop { user } => write!(f, "self-loop at user {user}"),
            Violation::EndpointOutOfRange { edge } => {
                write!(f, "edge ({}, {}) has an endpoint out of range", edge.0, edge.1)
            }
            Violation::DuplicateEdge { edge } => {
                write!(f, "duplicate edge ({}, {})", edge.0, edge.1)
            }
        }
    }
}

/// Outcome of [`validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Human-readable messages, one per violation.
    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.messages().join("; "))
    }
}

/// Lists every violated invariant of `network`.
pub fn validate(network: &CognitiveRadioNetwork) -> ValidationReport {
    let mut violations = Vec::new();
    let k = network.channel_count;
    let n = network.users.len();
    if k > MAX_CHANNELS {
        violations.push(Violation::TooManyChannels { channel_count: k });
    }
    if network.channel_names.len() != k {
        violations.push(Violation::ChannelNameCount {
            names: network.channel_names.len(),
            channel_count: k,
        });
    }
    let universe = ChannelSet::full(k.min(MAX_CHANNELS));
    for (i, user) in network.users.iter().enumerate() {
        if user.budget == 0 {
            violations.push(Violation::BudgetZero { user: i });
        }
        for c in user.spectrum_map.iter().filter(|&c| !universe.contains(c)) {
            violations.push(Violation::MapOutOfRange { user: i, channel: c });
        }
    }
    if !network.complete {
        let mut seen = BTreeSet::new();
        for &(u, v) in &network.edges {
            if u >= n || v >= n {
                violations.push(Violation::EndpointOutOfRange { edge: (u, v) });
            } else if u == v {
                violations.push(Violation::SelfLoop { user: u });
            } else if !seen.insert(ordered(u, v)) {
                violations.push(Violation::DuplicateEdge { edge: (u, v) });
            }
        }
    }
    ValidationReport { violations }
}

/// The channels opened by each user.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectrumAssignment {
    pub opened: Vec<ChannelSet>,
}

impl SpectrumAssignment {
    pub fn new(opened: Vec<ChannelSet>) -> Self {
        SpectrumAssignment { opened }
    }

    /// Every user opens nothing.
    pub fn empty(n: usize) -> Self {
        SpectrumAssignment {
            opened: vec![ChannelSet::EMPTY; n],
        }
    }

    /// Checks `opened(u) ⊆ SpecMap(u)` and `|opened(u)| ≤ β(u)` for every user.
    pub fn check(&self, network: &CognitiveRadioNetwork) -> Result<(), ModelError> {
        if self.opened.len() != network.users.len() {
            return Err(ModelError::AssignmentLength {
                expected: network.users.len(),
                found: self.opened.len(),
            });
        }
        for (i, (&set, user)) in self.opened.iter().zip(&network.users).enumerate() {
            if !set.is_subset(user.spectrum_map) {
                return Err(ModelError::OutsideSpectrumMap {
                    user: i,
                    name: user.name.clone(),
                });
            }
            if set.len() > user.budget {
                return Err(ModelError::OverBudget {
                    user: i,
                    name: user.name.clone(),
                    opened: set.len(),
                    budget: user.budget,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("assignment covers {found} users, network has {expected}")]
    AssignmentLength { expected: usize, found: usize },
    #[error("user {user} ({name}) opens a channel outside its spectrum map")]
    OutsideSpectrumMap { user: usize, name: String },
    #[error("user {user} ({name}) opens {opened} channels, budget is {budget}")]
    OverBudget {
        user: usize,
        name: String,
        opened: usize,
        budget: usize,
    },
}

/// The spanning subgraph of the potential graph made of realized edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationGraph {
    pub vertex_count: usize,
    pub realized_edges: Vec<(usize, usize)>,
}

impl RealizationGraph {
    pub fn is_connected(&self) -> bool {
        is_connected(self)
    }
}

/// Keeps exactly the potential edges whose endpoints open a common channel.
pub fn realize(
    network: &CognitiveRadioNetwork,
    sa: &SpectrumAssignment,
) -> Result<RealizationGraph, ModelError> {
    sa.check(network)?;
    Ok(realize_unchecked(&network.potential_graph(), &sa.opened))
}

pub(crate) fn realize_unchecked(pg: &Graph, opened: &[ChannelSet]) -> RealizationGraph {
    RealizationGraph {
        vertex_count: pg.vertex_count(),
        realized_edges: pg
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| opened[u].intersects(opened[v]))
            .collect(),
    }
}

/// One connected component over all `vertex_count` vertices; 0 and 1 vertices count as connected.
pub fn is_connected(g: &RealizationGraph) -> bool {
    graph::is_connected(g.vertex_count, &g.realized_edges)
}

/// Whether `sa` is valid for `network` and realizes a connected graph.
pub fn connects(network: &CognitiveRadioNetwork, sa: &SpectrumAssignment) -> bool {
    realize(network, sa).map(|g| g.is_connected()).unwrap_or(false)
}
