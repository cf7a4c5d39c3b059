//! Small undirected simple graphs over dense vertex ids.

use std::collections::BTreeSet;

/// Normalizes an unordered pair so that the smaller endpoint comes first.
pub fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are normalized and deduplicated,
    /// self-loops are dropped; endpoints must be `< n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| {
                assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
                ordered(u, v)
            })
            .collect();
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Graph { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&ordered(u, v)).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.n, &self.edges)
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Subgraph induced on `vertices`, with vertex `vertices[i]` renamed to `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (a, b) = (index[u], index[v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b))
        });
        Graph::new(vertices.len(), edges)
    }
}

/// Breadth-first connectivity check on `0..n`. The empty graph counts as connected.
pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_basics() {
        assert!(is_connected(0, &[]));
        assert!(is_connected(1, &[]));
        assert!(!is_connected(3, &[(0, 1)]));
        assert!(is_connected(3, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn graph_normalizes_edges() {
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 2), (2, 1)]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.is_tree());
        assert!(g.has_edge(2, 1));
        assert!(!Graph::new(3, [(0, 1)]).is_tree());
        assert!(Graph::complete(4).is_complete());
    }

    #[test]
    fn induced_renames() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let h = g.induced(&[3, 0, 2]);
        assert_eq!(h.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn union_find_counts_sets() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(!uf.union(1, 0));
        uf.union(2, 3);
        assert_eq!(uf.set_count(), 2);
        assert!(!uf.same(0, 3));
    }
}
