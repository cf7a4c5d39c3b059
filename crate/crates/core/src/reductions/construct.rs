use std::collections::BTreeMap;

use super::{
    MapTarget, ReductionArtifact, ReductionError, ReductionKind, ReductionSource,
    UniformCnfFormula,
};
use crate::channels::{ChannelSet, MAX_CHANNELS};
use crate::graph::Graph;
use crate::model::{CognitiveRadioNetwork, SecondaryUser};

fn network(
    channel_count: usize,
    users: Vec<SecondaryUser>,
    edges: Vec<(usize, usize)>,
    complete: bool,
    channel_names: Vec<String>,
) -> CognitiveRadioNetwork {
    CognitiveRadioNetwork {
        users,
        channel_count,
        channel_names,
        edges,
        complete,
    }
}

fn numeric_names(k: usize) -> Vec<String> {
    (0..k).map(|c| c.to_string()).collect()
}

/// Uniform SAT with budget `β ≥ 2` to a network on channels `{0, …, β}`.
///
/// Users, in id order: `X_i` (every channel) per variable, `C_j` (`{1}` for a positive clause,
/// `{0}` for a negative one) per clause, the hub `Y2` (`{2}`), then `Y{i}_{l}` (`{l}`) for each
/// variable `i` and `2 ≤ l ≤ β`. All budgets are `β`. Edges join `X_i` to the clauses it occurs
/// in, `Y2` to every `X_i`, and `X_i` to each of its `Y{i}_{l}`, which forces `X_i` to spend
/// `β − 1` antennas on channels `2..=β` and leaves one for its truth value.
pub fn uniform_to_speccon(
    f: &UniformCnfFormula,
    beta: usize,
) -> Result<ReductionArtifact, ReductionError> {
    if beta < 2 {
        return Err(ReductionError::BetaTooSmall(beta));
    }
    let k = beta + 1;
    if k > MAX_CHANNELS {
        return Err(ReductionError::TooManyChannels(k));
    }
    let formula = f.formula();
    let n = formula.variable_count();
    let mut users = Vec::new();
    let mut forward = BTreeMap::new();
    for i in 1..=n {
        forward.insert(format!("x{i}"), MapTarget::User(users.len()));
        users.push(SecondaryUser::new(format!("X{i}"), ChannelSet::full(k), beta));
    }
    let clause_base = users.len();
    for (j, positive) in f.polarities().into_iter().enumerate() {
        forward.insert(format!("c{}", j + 1), MapTarget::User(users.len()));
        let p = usize::from(positive);
        users.push(SecondaryUser::new(format!("C{}", j + 1), ChannelSet::single(p), beta));
    }
    let hub = users.len();
    users.push(SecondaryUser::new("Y2", ChannelSet::single(2), beta));

    let mut edges = Vec::new();
    for (j, clause) in formula.clauses().iter().enumerate() {
        for &lit in clause {
            edges.push((lit.unsigned_abs() as usize - 1, clause_base + j));
        }
    }
    for i in 0..n {
        edges.push((hub, i));
    }
    for i in 0..n {
        for l in 2..=beta {
            edges.push((i, users.len()));
            users.push(SecondaryUser::new(
                format!("Y{}_{l}", i + 1),
                ChannelSet::single(l),
                beta,
            ));
        }
    }
    Ok(ReductionArtifact {
        network: network(k, users, edges, false, numeric_names(k)),
        forward_map: forward,
        kind: ReductionKind::UniformSat { beta },
        source: ReductionSource::Formula(f.clone()),
    })
}

/// Adds channels `k..k_target` to the spectrum map of user 0. A channel known to a single
/// user can never realize an edge, so connectability is unchanged.
pub fn pad_channels(
    art: &ReductionArtifact,
    k_target: usize,
) -> Result<ReductionArtifact, ReductionError> {
    let k = art.network.channel_count;
    if k_target <= k {
        return Err(ReductionError::PadTarget {
            current: k,
            target: k_target,
        });
    }
    if k_target > MAX_CHANNELS {
        return Err(ReductionError::TooManyChannels(k_target));
    }
    let mut padded = art.clone();
    let net = &mut padded.network;
    net.channel_count = k_target;
    net.channel_names.extend((k..k_target).map(|c| c.to_string()));
    if let Some(first) = net.users.first_mut() {
        for c in k..k_target {
            first.spectrum_map.insert(c);
        }
    }
    Ok(padded)
}

/// Uniform SAT to two channels: `X_i` (`{0,1}`, budget 1) per variable, `C_j` (`{p_j}`,
/// budget 1) per clause, and `Y` (`{0,1}`, budget 2) adjacent to every `X_i`.
pub fn uniform_to_two_channel(f: &UniformCnfFormula) -> Result<ReductionArtifact, ReductionError> {
    let formula = f.formula();
    let n = formula.variable_count();
    let both = ChannelSet::full(2);
    let mut users = Vec::new();
    let mut forward = BTreeMap::new();
    for i in 1..=n {
        forward.insert(format!("x{i}"), MapTarget::User(users.len()));
        users.push(SecondaryUser::new(format!("X{i}"), both, 1));
    }
    let clause_base = users.len();
    for (j, positive) in f.polarities().into_iter().enumerate() {
        forward.insert(format!("c{}", j + 1), MapTarget::User(users.len()));
        let p = usize::from(positive);
        users.push(SecondaryUser::new(format!("C{}", j + 1), ChannelSet::single(p), 1));
    }
    let hub = users.len();
    users.push(SecondaryUser::new("Y", both, 2));
    let mut edges = Vec::new();
    for (j, clause) in formula.clauses().iter().enumerate() {
        for &lit in clause {
            edges.push((lit.unsigned_abs() as usize - 1, clause_base + j));
        }
    }
    edges.extend((0..n).map(|i| (hub, i)));
    Ok(ReductionArtifact {
        network: network(2, users, edges, false, numeric_names(2)),
        forward_map: forward,
        kind: ReductionKind::TwoChannel,
        source: ReductionSource::Formula(f.clone()),
    })
}

/// One user per vertex, one channel per edge; each user's map is its incident edges, budget 2,
/// complete potential graph.
pub fn hamiltonian_to_crn(g: &Graph) -> Result<ReductionArtifact, ReductionError> {
    let n = g.vertex_count();
    if n >= 2 {
        if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
            return Err(ReductionError::IsolatedVertex(v));
        }
    }
    let k = g.edge_count();
    if k > MAX_CHANNELS {
        return Err(ReductionError::TooManyChannels(k));
    }
    let mut maps = vec![ChannelSet::EMPTY; n];
    let mut forward = BTreeMap::new();
    let mut names = Vec::with_capacity(k);
    for (c, &(u, v)) in g.edges().iter().enumerate() {
        maps[u].insert(c);
        maps[v].insert(c);
        forward.insert(format!("e{u}-{v}"), MapTarget::Channel(c));
        names.push(format!("e{u}-{v}"));
    }
    let users = maps
        .into_iter()
        .enumerate()
        .map(|(v, map)| {
            forward.insert(format!("v{v}"), MapTarget::User(v));
            SecondaryUser::new(format!("v{v}"), map, 2)
        })
        .collect();
    Ok(ReductionArtifact {
        network: network(k, users, Vec::new(), true, names),
        forward_map: forward,
        kind: ReductionKind::Hamiltonian,
        source: ReductionSource::Graph(g.clone()),
    })
}

/// One channel `c_v` per vertex; one user `U_e` (`{c_u, c_v}`, budget 2) per edge `e = {u, v}`,
/// then the center `M` (all channels, budget `r`); the potential graph is a star around `M`.
pub fn vertex_cover_to_crn(g: &Graph, r: usize) -> Result<ReductionArtifact, ReductionError> {
    if r < 1 {
        return Err(ReductionError::CoverBound);
    }
    let k = g.vertex_count();
    if k > MAX_CHANNELS {
        return Err(ReductionError::TooManyChannels(k));
    }
    let mut forward = BTreeMap::new();
    let mut users = Vec::with_capacity(g.edge_count() + 1);
    for v in 0..k {
        forward.insert(format!("v{v}"), MapTarget::Channel(v));
    }
    for &(u, v) in g.edges() {
        forward.insert(format!("e{u}-{v}"), MapTarget::User(users.len()));
        users.push(SecondaryUser::new(
            format!("U{u}-{v}"),
            ChannelSet::from_iter([u, v]),
            2,
        ));
    }
    let center = users.len();
    users.push(SecondaryUser::new("M", ChannelSet::full(k), r));
    let edges = (0..center).map(|j| (j, center)).collect();
    Ok(ReductionArtifact {
        network: network(k, users, edges, false, (0..k).map(|v| format!("c{v}")).collect()),
        forward_map: forward,
        kind: ReductionKind::VertexCover { r },
        source: ReductionSource::Graph(g.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate;
    use crate::reductions::CnfFormula;

    fn uniform(n: usize, clauses: Vec<Vec<i32>>) -> UniformCnfFormula {
        UniformCnfFormula::new(CnfFormula::new(n, clauses).unwrap()).unwrap()
    }

    #[test]
    fn uniform_sat_counts() {
        let f = uniform(2, vec![vec![1, 2], vec![-1, -2]]);
        let art = uniform_to_speccon(&f, 2).unwrap();
        assert_eq!(art.network.user_count(), 7);
        assert_eq!(art.network.channel_count, 3);
        assert!(validate(&art.network).is_valid());
        assert!(art.network.users.iter().all(|u| u.budget == 2));
        let names: Vec<&str> = art.network.users.iter().map(|u| u.name.as_str()).collect();
        assert_eq!(names, ["X1", "X2", "C1", "C2", "Y2", "Y1_2", "Y2_2"]);
    }

    #[test]
    fn uniform_sat_every_auxiliary_has_an_edge() {
        let f = uniform(3, vec![vec![1]]);
        let art = uniform_to_speccon(&f, 4).unwrap();
        let pg = art.network.potential_graph();
        assert!((0..pg.vertex_count()).all(|v| pg.degree(v) > 0));
    }

    #[test]
    fn beta_below_two_rejected() {
        let f = uniform(1, vec![vec![1]]);
        assert_eq!(uniform_to_speccon(&f, 1), Err(ReductionError::BetaTooSmall(1)));
    }

    #[test]
    fn padding_touches_one_map() {
        let f = uniform(1, vec![vec![1]]);
        let art = uniform_to_speccon(&f, 2).unwrap();
        let padded = pad_channels(&art, 5).unwrap();
        assert_eq!(padded.network.channel_count, 5);
        for c in 3..5 {
            let holders = padded
                .network
                .users
                .iter()
                .filter(|u| u.spectrum_map.contains(c))
                .count();
            assert_eq!(holders, 1);
            assert!(padded.network.users[0].spectrum_map.contains(c));
        }
        assert!(matches!(pad_channels(&art, 3), Err(ReductionError::PadTarget { .. })));
    }

    #[test]
    fn two_channel_counts() {
        let f = uniform(3, vec![vec![1, 2], vec![-3], vec![-1, -2]]);
        let art = uniform_to_two_channel(&f).unwrap();
        assert_eq!(art.network.user_count(), 3 + 3 + 1);
        assert_eq!(art.network.users[6].budget, 2);
    }

    #[test]
    fn hamiltonian_shape() {
        let g = Graph::new(3, [(0, 1), (1, 2)]);
        let art = hamiltonian_to_crn(&g).unwrap();
        assert_eq!(art.network.user_count(), 3);
        assert_eq!(art.network.channel_count, 2);
        assert!(art.network.complete);
        assert_eq!(art.network.users[1].spectrum_map, ChannelSet::full(2));
        let isolated = Graph::new(3, [(0, 1)]);
        assert_eq!(hamiltonian_to_crn(&isolated), Err(ReductionError::IsolatedVertex(2)));
    }

    #[test]
    fn vertex_cover_shape() {
        let g = Graph::complete(3);
        let art = vertex_cover_to_crn(&g, 2).unwrap();
        assert_eq!(art.network.user_count(), 4);
        assert!(art.network.potential_graph().is_tree());
        assert_eq!(art.network.users[3].budget, 2);
        assert_eq!(vertex_cover_to_crn(&g, 0), Err(ReductionError::CoverBound));
    }
}
