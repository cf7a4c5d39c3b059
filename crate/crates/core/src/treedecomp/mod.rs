//! Tree decompositions: construction, verification and binarization.

mod decompose;
mod nice;
mod pace;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, UnionFind};

pub use decompose::{decompose, elimination_decomposition, exact_treewidth_order, EXACT_LIMIT};
pub use nice::{to_nice, NiceNode, NiceTreeDecomposition};
pub use pace::{parse_td, write_td};

/// Bags `X_i` on the nodes of a tree. Bags hold sorted vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree_edges }
    }

    /// Largest bag size minus one (0 for no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }
}

/// The first property a decomposition fails.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TdViolation {
    #[error("bag {bag} contains vertex {vertex} outside the graph")]
    VertexOutOfRange { bag: usize, vertex: usize },
    #[error("vertex {0} uncovered")]
    VertexUncovered(usize),
    #[error("edge {{{0},{1}}} uncovered")]
    EdgeUncovered(usize, usize),
    #[error("decomposition tree is not a tree: {0}")]
    NotATree(String),
    #[error("connected-subtree violated for vertex {0}")]
    DisconnectedOccurrences(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TdError {
    #[error("width bound must be at least 1, got {0}")]
    WidthBound(usize),
    #[error("invalid decomposition: {0}")]
    Invalid(TdViolation),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Checks vertex coverage, edge coverage, that the nodes form a tree, and that each vertex's
/// bags induce a connected subtree, in that order.
pub fn verify(graph: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let n = graph.vertex_count();
    let nodes = td.bags.len();
    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(TdViolation::VertexOutOfRange { bag: i, vertex: v });
            }
            occurs[v].push(i);
        }
    }
    if let Some(v) = occurs.iter().position(Vec::is_empty) {
        return Err(TdViolation::VertexUncovered(v));
    }
    for &(u, v) in graph.edges() {
        let covered = occurs[u]
            .iter()
            .any(|&i| td.bags[i].binary_search(&v).is_ok());
        if !covered {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }
    if nodes == 0 {
        return Ok(());
    }
    if td.tree_edges.len() != nodes - 1 {
        return Err(TdViolation::NotATree(format!(
            "{} edges on {nodes} nodes",
            td.tree_edges.len()
        )));
    }
    let mut uf = UnionFind::new(nodes);
    for &(a, b) in &td.tree_edges {
        if a >= nodes || b >= nodes {
            return Err(TdViolation::NotATree(format!("edge ({a},{b}) names a missing node")));
        }
        if !uf.union(a, b) {
            return Err(TdViolation::NotATree(format!("edge ({a},{b}) closes a cycle")));
        }
    }
    // Within one vertex's occurrence set, count tree edges joining two occurrences; the
    // occurrences are connected iff that count is one less than their number.
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &td.tree_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut member = vec![false; nodes];
    for (v, occ) in occurs.iter().enumerate() {
        for &i in occ {
            member[i] = true;
        }
        let mut seen = vec![occ[0]];
        let mut stack = vec![occ[0]];
        let mut visited = vec![false; nodes];
        visited[occ[0]] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if member[j] && !visited[j] {
                    visited[j] = true;
                    seen.push(j);
                    stack.push(j);
                }
            }
        }
        for &i in occ {
            member[i] = false;
        }
        if seen.len() != occ.len() {
            return Err(TdViolation::DisconnectedOccurrences(v));
        }
    }
    Ok(())
}

impl fmt::Display for TreeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_td(self, 0))
    }
}
