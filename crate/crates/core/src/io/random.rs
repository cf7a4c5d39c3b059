//! Seeded random networks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GenError;
use crate::channels::{ChannelSet, MAX_CHANNELS};
use crate::model::CognitiveRadioNetwork;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub n: usize,
    pub k: usize,
    pub beta: usize,
    /// Edge probability of the potential graph.
    pub p: f64,
    /// Probability that a channel is in a user's spectrum map.
    pub q: f64,
    pub seed: u64,
}

/// Each pair `u < v` becomes an edge with probability `p`, drawn in lexicographic order; then
/// each user draws its map channel by channel with probability `q`, redrawing once if empty.
/// Every budget is `beta`; requires `n ≥ 1` and `1 ≤ beta ≤ k`. With `p ≥ 1` the network is flagged complete.
pub fn gen_random(params: GenParams) -> Result<CognitiveRadioNetwork, GenError> {
    let GenParams { n, k, beta, p, q, seed } = params;
    if k == 0 || k > MAX_CHANNELS {
        return Err(GenError(format!("k must be in 1..={MAX_CHANNELS}, got {k}")));
    }
    if n == 0 {
        return Err(GenError("n must be at least 1".into()));
    }
    if beta == 0 || beta > k {
        return Err(GenError(format!("beta must be in 1..={k}, got {beta}")));
    }
    for (name, x) in [("p", p), ("q", q)] {
        if !(0.0..=1.0).contains(&x) {
            return Err(GenError(format!("{name} must be in [0, 1], got {x}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let draw = |rng: &mut ChaCha8Rng| {
        (0..k).filter(|_| rng.gen_bool(q)).collect::<ChannelSet>()
    };
    let users: Vec<(ChannelSet, usize)> = (0..n)
        .map(|_| {
            let mut map = draw(&mut rng);
            if map.is_empty() {
                map = draw(&mut rng);
            }
            (map, beta)
        })
        .collect();
    let mut net = CognitiveRadioNetwork::new(k, users, edges);
    if p >= 1.0 {
        net.complete = true;
        net.edges.clear();
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate;

    fn params(seed: u64) -> GenParams {
        GenParams { n: 8, k: 4, beta: 2, p: 0.5, q: 0.5, seed }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(gen_random(params(7)).unwrap(), gen_random(params(7)).unwrap());
        assert_ne!(gen_random(params(7)).unwrap(), gen_random(params(8)).unwrap());
    }

    #[test]
    fn valid_and_in_range() {
        for seed in 0..50 {
            let net = gen_random(params(seed)).unwrap();
            assert!(validate(&net).is_valid());
            assert!(net.users.iter().all(|u| u.spectrum_map.is_subset(ChannelSet::full(4))));
        }
    }

    #[test]
    fn full_density_gives_full_maps() {
        let net = gen_random(GenParams { q: 1.0, ..params(3) }).unwrap();
        assert!(net.users.iter().all(|u| u.spectrum_map == ChannelSet::full(4)));
    }

    #[test]
    fn complete_flag() {
        let net = gen_random(GenParams { p: 1.0, ..params(1) }).unwrap();
        assert!(net.complete);
        assert_eq!(net.potential_graph().edge_count(), 28);
    }

    #[test]
    fn bad_params() {
        assert!(gen_random(GenParams { k: 0, ..params(0) }).is_err());
        assert!(gen_random(GenParams { q: 1.5, ..params(0) }).is_err());
        assert!(gen_random(GenParams { beta: 0, ..params(0) }).is_err());
        assert!(gen_random(GenParams { beta: 5, ..params(0) }).is_err());
        assert!(gen_random(GenParams { n: 0, ..params(0) }).is_err());
    }
}
