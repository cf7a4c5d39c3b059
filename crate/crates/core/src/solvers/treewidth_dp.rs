//! Dynamic programming over a binary tree decomposition of the potential graph.
//!
//! Two recurrences share the same tables of bag tuples `(S_1, …, S_t)`, one admissible set per
//! bag vertex:
//!
//! * [`solve_treewidth_literal`] marks a tuple true when the bag's own induced realized graph
//!   is connected and each child has a true tuple agreeing on the shared vertices. This is
//!   sound but not complete: a bag whose vertices are only joined through vertices outside it
//!   (e.g. a 4-cycle whose chord-side bag holds two non-adjacent users) is never accepted.
//! * [`solve_treewidth_dp`] additionally records how the bag is partitioned into components
//!   of the realized graph on everything below, and only discards states in which some
//!   component has lost contact with the bag. It is exact.
//!
//! Both re-check their witness with `realize` + `is_connected` before answering yes.

use std::collections::HashMap;
use std::time::Instant;

use super::{check_valid, finish, prelude, Prelude};
use crate::channels::ChannelSet;
use crate::graph::{Graph, UnionFind};
use crate::model::{connects, CognitiveRadioNetwork, SpectrumAssignment};
use crate::treedecomp::{decompose, to_nice, verify, NiceTreeDecomposition};
use crate::verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};

/// Row ids keyed by a projected tuple.
type RowIndex = HashMap<Vec<ChannelSet>, Vec<usize>>;

/// Decomposes the potential graph within `bound` and binarizes the result.
pub(crate) fn decomposition_for(
    network: &CognitiveRadioNetwork,
    bound: usize,
) -> Result<NiceTreeDecomposition, SolverError> {
    check_valid(network)?;
    let pg = network.potential_graph();
    let td = decompose(&pg, bound.max(1))
        .map_err(|e| SolverError::InvalidDecomposition(e.to_string()))?
        .ok_or_else(|| SolverError::Precondition {
            solver: SolverKind::TreewidthDp,
            reason: format!("no tree decomposition of width ≤ {bound} found"),
        })?;
    to_nice(&pg, &td).map_err(|e| SolverError::InvalidDecomposition(e.to_string()))
}

pub fn solve_treewidth_dp(
    network: &CognitiveRadioNetwork,
    ntd: &NiceTreeDecomposition,
) -> Result<Verdict, SolverError> {
    solve_treewidth_dp_with(network, ntd, &SolverConfig::default())
}

/// Exact bag DP tracking the bag partition induced by the realized graph below each node.
pub fn solve_treewidth_dp_with(
    network: &CognitiveRadioNetwork,
    ntd: &NiceTreeDecomposition,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    run(network, ntd, config, SolverKind::TreewidthDp)
}

pub fn solve_treewidth_literal(
    network: &CognitiveRadioNetwork,
    ntd: &NiceTreeDecomposition,
) -> Result<Verdict, SolverError> {
    solve_treewidth_literal_with(network, ntd, &SolverConfig::default())
}

/// Bag DP requiring every bag's induced realized graph to be connected.
pub fn solve_treewidth_literal_with(
    network: &CognitiveRadioNetwork,
    ntd: &NiceTreeDecomposition,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    run(network, ntd, config, SolverKind::TreewidthLiteral)
}

fn run(
    network: &CognitiveRadioNetwork,
    ntd: &NiceTreeDecomposition,
    config: &SolverConfig,
    kind: SolverKind,
) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    check_valid(network)?;
    check_shape(&network.potential_graph(), ntd)?;
    let pg = match prelude(network, kind, started)? {
        Prelude::Done(v) => return Ok(v),
        Prelude::Continue(pg) => pg,
    };
    let mut dp = BagDp::new(network, &pg, ntd, config, kind == SolverKind::TreewidthLiteral);
    let witness = dp.solve()?;
    let stats = dp.stats;
    let verdict = match witness {
        Some(w) => {
            if !connects(network, &w) {
                return Err(SolverError::Inconsistent(format!(
                    "{kind} reconstructed a witness that does not connect the network"
                )));
            }
            Verdict::yes(kind, w, stats)
        }
        None => Verdict::no(kind, stats),
    };
    Ok(finish(verdict, started))
}

fn check_shape(pg: &Graph, ntd: &NiceTreeDecomposition) -> Result<(), SolverError> {
    let invalid = |m: String| Err(SolverError::InvalidDecomposition(m));
    let count = ntd.nodes.len();
    if count == 0 {
        return if pg.vertex_count() == 0 {
            Ok(())
        } else {
            invalid("empty decomposition".into())
        };
    }
    if ntd.root >= count {
        return invalid(format!("root {} out of range", ntd.root));
    }
    let mut parents = vec![0usize; count];
    for node in &ntd.nodes {
        if let Some((l, r)) = node.children {
            if l >= count || r >= count || l == r {
                return invalid(format!("bad child pair ({l}, {r})"));
            }
            parents[l] += 1;
            parents[r] += 1;
        }
    }
    if parents[ntd.root] != 0 || parents.iter().enumerate().any(|(i, &p)| i != ntd.root && p != 1) {
        return invalid("nodes do not form a rooted binary tree".into());
    }
    if ntd.postorder().len() != count {
        return invalid("some nodes are unreachable from the root".into());
    }
    verify(pg, &ntd.to_decomposition()).map_err(|v| SolverError::InvalidDecomposition(v.to_string()))
}

/// One table row: a bag tuple, the induced bag partition (unused by the literal recurrence),
/// and the child rows it was derived from.
#[derive(Clone, Debug)]
struct Row {
    tuple: Vec<ChannelSet>,
    partition: Vec<u8>,
    from: Option<(usize, usize)>,
}

struct BagDp<'a> {
    network: &'a CognitiveRadioNetwork,
    pg: &'a Graph,
    ntd: &'a NiceTreeDecomposition,
    config: &'a SolverConfig,
    literal: bool,
    choices: Vec<Vec<ChannelSet>>,
    tables: Vec<Vec<Row>>,
    stats: Stats,
}

impl<'a> BagDp<'a> {
    fn new(
        network: &'a CognitiveRadioNetwork,
        pg: &'a Graph,
        ntd: &'a NiceTreeDecomposition,
        config: &'a SolverConfig,
        literal: bool,
    ) -> Self {
        BagDp {
            network,
            pg,
            ntd,
            config,
            literal,
            choices: network.users.iter().map(|u| u.admissible_sets()).collect(),
            tables: vec![Vec::new(); ntd.nodes.len()],
            stats: Stats::default(),
        }
    }

    fn solve(&mut self) -> Result<Option<SpectrumAssignment>, SolverError> {
        for i in self.ntd.postorder() {
            self.config.check_deadline()?;
            let rows = match self.ntd.nodes[i].children {
                None => self.leaf(i),
                Some((l, r)) => self.internal(i, l, r),
            };
            self.stats.dp_entries += rows.len() as u64;
            self.tables[i] = rows;
        }
        let root = self.ntd.root;
        let accepted = self.tables[root]
            .iter()
            .position(|row| row.partition.iter().all(|&b| b == 0));
        Ok(accepted.map(|idx| self.reconstruct(idx)))
    }

    fn bag(&self, i: usize) -> &'a [usize] {
        &self.ntd.nodes[i].bag
    }

    /// Position pairs of potential edges inside a bag.
    fn bag_edges(&self, bag: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..bag.len() {
            for b in a + 1..bag.len() {
                if self.pg.has_edge(bag[a], bag[b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All tuples on `bag`, lexicographic with the first (smallest) vertex outermost.
    fn tuples(&self, bag: &[usize]) -> Vec<Vec<ChannelSet>> {
        let mut out = vec![Vec::with_capacity(bag.len())];
        for &v in bag {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    self.choices[v].iter().map(move |&s| {
                        let mut t = prefix.clone();
                        t.push(s);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Partition of bag positions by realized edges inside the bag, canonically labeled.
    fn bag_partition(tuple: &[ChannelSet], edges: &[(usize, usize)]) -> Vec<u8> {
        let mut uf = UnionFind::new(tuple.len());
        for &(a, b) in edges {
            if tuple[a].intersects(tuple[b]) {
                uf.union(a, b);
            }
        }
        canonical(&mut uf, 0..tuple.len())
    }

    fn leaf(&self, i: usize) -> Vec<Row> {
        let bag = self.bag(i);
        let edges = self.bag_edges(bag);
        self.tuples(bag)
            .into_iter()
            .filter_map(|tuple| {
                let partition = Self::bag_partition(&tuple, &edges);
                if self.literal && partition.iter().any(|&b| b != 0) {
                    return None;
                }
                Some(Row {
                    tuple,
                    partition,
                    from: None,
                })
            })
            .collect()
    }

    /// Child rows grouped by their tuple restricted to the vertices shared with the parent.
    fn index_child(&self, parent: &[usize], child: usize) -> (Vec<(usize, usize)>, RowIndex) {
        let cbag = self.bag(child);
        let shared: Vec<(usize, usize)> = parent
            .iter()
            .enumerate()
            .filter_map(|(pi, v)| cbag.binary_search(v).ok().map(|ci| (pi, ci)))
            .collect();
        let mut index: HashMap<Vec<ChannelSet>, Vec<usize>> = HashMap::new();
        for (idx, row) in self.tables[child].iter().enumerate() {
            let key = shared.iter().map(|&(_, ci)| row.tuple[ci]).collect();
            let bucket = index.entry(key).or_default();
            // The literal recurrence only asks whether some agreeing row exists.
            if !self.literal || bucket.is_empty() {
                bucket.push(idx);
            }
        }
        (shared, index)
    }

    fn internal(&self, i: usize, l: usize, r: usize) -> Vec<Row> {
        let bag = self.bag(i);
        let edges = self.bag_edges(bag);
        let (shared_l, index_l) = self.index_child(bag, l);
        let (shared_r, index_r) = self.index_child(bag, r);
        let mut rows = Vec::new();
        let mut seen: HashMap<(Vec<ChannelSet>, Vec<u8>), ()> = HashMap::new();
        for tuple in self.tuples(bag) {
            let key_l: Vec<ChannelSet> = shared_l.iter().map(|&(pi, _)| tuple[pi]).collect();
            let key_r: Vec<ChannelSet> = shared_r.iter().map(|&(pi, _)| tuple[pi]).collect();
            let (Some(cand_l), Some(cand_r)) = (index_l.get(&key_l), index_r.get(&key_r)) else {
                continue;
            };
            if self.literal {
                let partition = Self::bag_partition(&tuple, &edges);
                if partition.iter().all(|&b| b == 0) {
                    rows.push(Row {
                        tuple,
                        partition,
                        from: Some((cand_l[0], cand_r[0])),
                    });
                }
                continue;
            }
            for &a in cand_l {
                for &b in cand_r {
                    if let Some(partition) = self.join(bag, &tuple, &edges, l, a, r, b) {
                        if seen.insert((tuple.clone(), partition.clone()), ()).is_none() {
                            rows.push(Row {
                                tuple: tuple.clone(),
                                partition,
                                from: Some((a, b)),
                            });
                        }
                    }
                }
            }
        }
        rows
    }

    /// Merges the children's component structure with the bag's own realized edges. Returns
    /// the resulting bag partition, or `None` when a component no longer meets the bag.
    #[allow(clippy::too_many_arguments)]
    fn join(
        &self,
        bag: &[usize],
        tuple: &[ChannelSet],
        edges: &[(usize, usize)],
        l: usize,
        a: usize,
        r: usize,
        b: usize,
    ) -> Option<Vec<u8>> {
        // Local ids: bag positions first, then forgotten child vertices.
        let mut ids: Vec<usize> = bag.to_vec();
        let mut uf_size = bag.len();
        let mut child_ids = |child_bag: &[usize]| -> Vec<usize> {
            child_bag
                .iter()
                .map(|v| match bag.binary_search(v) {
                    Ok(p) => p,
                    Err(_) => {
                        ids.push(*v);
                        uf_size += 1;
                        uf_size - 1
                    }
                })
                .collect()
        };
        let local_l = child_ids(self.bag(l));
        let local_r = child_ids(self.bag(r));
        let mut uf = UnionFind::new(uf_size);
        for (local, row) in [(&local_l, &self.tables[l][a]), (&local_r, &self.tables[r][b])] {
            let mut first_of_block: Vec<Option<usize>> = vec![None; local.len()];
            for (pos, &block) in row.partition.iter().enumerate() {
                match first_of_block[block as usize] {
                    None => first_of_block[block as usize] = Some(local[pos]),
                    Some(rep) => {
                        uf.union(rep, local[pos]);
                    }
                }
            }
        }
        for &(x, y) in edges {
            if tuple[x].intersects(tuple[y]) {
                uf.union(x, y);
            }
        }
        let mut touches = vec![false; uf_size];
        for p in 0..bag.len() {
            let root = uf.find(p);
            touches[root] = true;
        }
        for q in bag.len()..uf_size {
            if !touches[uf.find(q)] {
                return None;
            }
        }
        Some(canonical(&mut uf, 0..bag.len()))
    }

    fn reconstruct(&self, root_row: usize) -> SpectrumAssignment {
        let mut opened = vec![ChannelSet::EMPTY; self.network.user_count()];
        let mut stack = vec![(self.ntd.root, root_row)];
        while let Some((i, idx)) = stack.pop() {
            let row = &self.tables[i][idx];
            for (&v, &s) in self.bag(i).iter().zip(&row.tuple) {
                opened[v] = s;
            }
            if let (Some((l, r)), Some((a, b))) = (self.ntd.nodes[i].children, row.from) {
                stack.push((l, a));
                stack.push((r, b));
            }
        }
        SpectrumAssignment::new(opened)
    }
}

fn canonical(uf: &mut UnionFind, members: std::ops::Range<usize>) -> Vec<u8> {
    let mut label: HashMap<usize, u8> = HashMap::new();
    members
        .map(|p| {
            let root = uf.find(p);
            let next = label.len() as u8;
            *label.entry(root).or_insert(next)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedecomp::TreeDecomposition;

    fn set(cs: &[usize]) -> ChannelSet {
        cs.iter().copied().collect()
    }

    fn c4(users: [(ChannelSet, usize); 4]) -> CognitiveRadioNetwork {
        CognitiveRadioNetwork::new(2, users, [(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    fn nice_for(net: &CognitiveRadioNetwork, bound: usize) -> NiceTreeDecomposition {
        decomposition_for(net, bound).unwrap()
    }

    #[test]
    fn cycle_all_same_channel() {
        let net = c4([(set(&[0]), 1); 4]);
        let ntd = nice_for(&net, 2);
        assert!(solve_treewidth_dp(&net, &ntd).unwrap().connectable);
        assert!(solve_treewidth_literal(&net, &ntd).unwrap().connectable);
    }

    #[test]
    fn literal_recurrence_misses_connection_through_outside_vertex() {
        // 0:{a} 1:{b} 2:{a,b} 3:{a}; edge 0-1 can never be realized, yet 1-2-3-0 is a path.
        let net = c4([
            (set(&[0]), 1),
            (set(&[1]), 1),
            (set(&[0, 1]), 2),
            (set(&[0]), 1),
        ]);
        let ntd = nice_for(&net, 2);
        assert!(solve_treewidth_dp(&net, &ntd).unwrap().connectable);
        assert!(!solve_treewidth_literal(&net, &ntd).unwrap().connectable);
    }

    #[test]
    fn single_bag_behaves_like_exhaustive_search() {
        let net = c4([
            (set(&[0]), 1),
            (set(&[1]), 1),
            (set(&[0, 1]), 2),
            (set(&[0]), 1),
        ]);
        let pg = net.potential_graph();
        let td = TreeDecomposition::new(vec![vec![0, 1, 2, 3]], vec![]);
        let ntd = to_nice(&pg, &td).unwrap();
        let expected = super::super::solve_brute_force(&net).unwrap();
        assert_eq!(solve_treewidth_dp(&net, &ntd).unwrap().connectable, expected.connectable);
        assert_eq!(
            solve_treewidth_literal(&net, &ntd).unwrap().connectable,
            expected.connectable
        );
    }

    #[test]
    fn rejects_decomposition_of_another_graph() {
        let net = c4([(set(&[0]), 1); 4]);
        let other = Graph::new(4, [(0, 1), (1, 2), (2, 3)]);
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2)],
        );
        let ntd = to_nice(&other, &td).unwrap();
        assert!(matches!(
            solve_treewidth_dp(&net, &ntd),
            Err(SolverError::InvalidDecomposition(_))
        ));
    }
}
