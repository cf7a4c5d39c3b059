//! Spanning-tree enumeration and the solver that runs the tree DP on every spanning tree.

use std::time::Instant;

use super::tree_dp::tree_dp_witness;
use super::{finish, prelude, Prelude};
use crate::graph::{Graph, UnionFind};
use crate::model::CognitiveRadioNetwork;
use crate::verdict::{SolverConfig, SolverError, SolverKind, Stats, Verdict};

/// Lazy enumeration of the spanning trees of a graph, each exactly once.
///
/// Binary partition on the sorted edge list: edge `i` is either taken (if it closes no cycle)
/// or skipped (if the remaining edges still connect the graph). Both checks guarantee that
/// every open branch contains at least one tree, so the work per tree is bounded by a
/// polynomial in the graph size.
pub struct SpanningTrees {
    n: usize,
    edges: Vec<(usize, usize)>,
    stack: Vec<(usize, Vec<usize>)>,
    disconnected: bool,
}

/// Spanning trees of `graph`, as sorted edge lists. Yields nothing for a disconnected or
/// empty graph (see [`SpanningTrees::is_disconnected`]).
pub fn enumerate_spanning_trees(graph: &Graph) -> SpanningTrees {
    let n = graph.vertex_count();
    let disconnected = !graph.is_connected();
    let stack = if n == 0 || disconnected {
        Vec::new()
    } else {
        vec![(0, Vec::new())]
    };
    SpanningTrees {
        n,
        edges: graph.edges().to_vec(),
        stack,
        disconnected,
    }
}

impl SpanningTrees {
    pub fn is_disconnected(&self) -> bool {
        self.disconnected
    }

    fn forest(&self, chosen: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for &e in chosen {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        uf
    }

    fn connected_without(&self, chosen: &[usize], skip: usize) -> bool {
        let mut uf = self.forest(chosen);
        for &(u, v) in &self.edges[skip + 1..] {
            uf.union(u, v);
        }
        uf.set_count() == 1
    }
}

impl Iterator for SpanningTrees {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some((i, chosen)) = self.stack.pop() {
            if chosen.len() + 1 == self.n {
                return Some(chosen.iter().map(|&e| self.edges[e]).collect());
            }
            let (u, v) = self.edges[i];
            if self.connected_without(&chosen, i) {
                self.stack.push((i + 1, chosen.clone()));
            }
            if !self.forest(&chosen).same(u, v) {
                let mut taken = chosen;
                taken.push(i);
                self.stack.push((i + 1, taken));
            }
        }
        None
    }
}

pub fn solve_spanning_tree(network: &CognitiveRadioNetwork) -> Result<Verdict, SolverError> {
    solve_spanning_tree_with(network, &SolverConfig::default())
}

/// Connectable iff some spanning tree of the potential graph is connectable on its own, so
/// the tree DP runs on each enumerated tree until one succeeds.
pub fn solve_spanning_tree_with(
    network: &CognitiveRadioNetwork,
    config: &SolverConfig,
) -> Result<Verdict, SolverError> {
    let started = Instant::now();
    let pg = match prelude(network, SolverKind::SpanningTree, started)? {
        Prelude::Done(v) => return Ok(v),
        Prelude::Continue(pg) => pg,
    };
    let mut stats = Stats::default();
    for tree_edges in enumerate_spanning_trees(&pg) {
        config.check_deadline()?;
        stats.trees_enumerated += 1;
        let tree = Graph::new(pg.vertex_count(), tree_edges);
        if let Some(w) = tree_dp_witness(network, &tree, &mut stats) {
            return Ok(finish(Verdict::yes(SolverKind::SpanningTree, w, stats), started));
        }
    }
    Ok(finish(Verdict::no(SolverKind::SpanningTree, stats), started))
}
