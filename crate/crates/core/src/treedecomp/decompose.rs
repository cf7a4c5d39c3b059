//! Building tree decompositions from elimination orderings.

use std::collections::{BTreeSet, HashSet};

use super::{verify, TdError, TreeDecomposition};
use crate::graph::Graph;

/// Graphs up to this many vertices are decomposed exactly; larger ones use min-fill-in.
pub const EXACT_LIMIT: usize = 20;

/// A decomposition of width at most `width_bound`, or `None` if none was found.
///
/// Trees always get the width-1 decomposition with one bag per edge. Otherwise graphs with at
/// most [`EXACT_LIMIT`] vertices are searched exactly, so `None` means the treewidth exceeds
/// the bound; larger graphs use the min-fill-in heuristic, which may miss a decomposition.
pub fn decompose(graph: &Graph, width_bound: usize) -> Result<Option<TreeDecomposition>, TdError> {
    if width_bound < 1 {
        return Err(TdError::WidthBound(width_bound));
    }
    if graph.is_tree() {
        return Ok(Some(tree_decomposition(graph)));
    }
    let order = if graph.vertex_count() <= EXACT_LIMIT {
        match exact_treewidth_order(graph, width_bound) {
            Some(order) => order,
            None => return Ok(None),
        }
    } else {
        min_fill_order(graph)
    };
    let td = elimination_decomposition(graph, &order);
    if td.width() > width_bound {
        return Ok(None);
    }
    verify(graph, &td).map_err(TdError::Invalid)?;
    Ok(Some(td))
}

/// One bag `{parent(v), v}` per non-root vertex, rooted at vertex 0. Bags of the root's
/// children are chained through the first of them.
fn tree_decomposition(graph: &Graph) -> TreeDecomposition {
    let n = graph.vertex_count();
    if n <= 1 {
        return TreeDecomposition::new((0..n).map(|v| vec![v]).collect(), vec![]);
    }
    let mut parent = vec![usize::MAX; n];
    let mut bag_of = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut bags = Vec::with_capacity(n - 1);
    let mut edges = Vec::with_capacity(n.saturating_sub(2));
    let mut hub = None;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in graph.neighbors(v) {
            if parent[w] != usize::MAX {
                continue;
            }
            parent[w] = v;
            bag_of[w] = bags.len();
            bags.push(vec![v, w]);
            order.push(w);
            if v == 0 {
                match hub {
                    None => hub = Some(bag_of[w]),
                    Some(h) => edges.push((h, bag_of[w])),
                }
            } else {
                edges.push((bag_of[v], bag_of[w]));
            }
        }
    }
    TreeDecomposition::new(bags, edges)
}

/// An elimination ordering of width at most `width_bound`, if one exists (`n ≤ 64`).
///
/// The cost of eliminating `v` after a set `S` depends only on `S`: it is the number of
/// vertices outside `S ∪ {v}` reachable from `v` through `S`. The search therefore memoizes
/// failed sets.
pub fn exact_treewidth_order(graph: &Graph, width_bound: usize) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    assert!(n <= 64, "exact search supports at most 64 vertices");
    let adj: Vec<u64> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut order = Vec::with_capacity(n);
    let mut failed = HashSet::new();
    if search(&adj, n, width_bound, 0, &mut order, &mut failed) {
        let placed: u64 = order.iter().fold(0, |m, &v| m | 1 << v);
        order.extend((0..n).filter(|&v| placed >> v & 1 == 0));
        Some(order)
    } else {
        None
    }
}

fn search(
    adj: &[u64],
    n: usize,
    bound: usize,
    eliminated: u64,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> bool {
    let remaining = n - eliminated.count_ones() as usize;
    if remaining <= bound + 1 {
        return true;
    }
    if failed.contains(&eliminated) {
        return false;
    }
    for v in 0..n {
        if eliminated >> v & 1 == 1 {
            continue;
        }
        if reach_outside(adj, eliminated, v).count_ones() as usize <= bound {
            order.push(v);
            if search(adj, n, bound, eliminated | 1 << v, order, failed) {
                return true;
            }
            order.pop();
        }
    }
    failed.insert(eliminated);
    false
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` by paths whose interior lies in
/// `eliminated`.
fn reach_outside(adj: &[u64], eliminated: u64, v: usize) -> u64 {
    let mut inside = 1u64 << v;
    let mut frontier = 1u64 << v;
    let mut outside = 0u64;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nbrs = adj[u] & !inside & !outside & !(1u64 << v);
        outside |= nbrs & !eliminated;
        let grow = nbrs & eliminated;
        inside |= grow;
        frontier |= grow;
    }
    outside
}

/// Greedy ordering: repeatedly eliminate the vertex whose neighborhood needs the fewest fill
/// edges (ties: smaller degree, then smaller id).
fn min_fill_order(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| graph.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        let v = *alive
            .iter()
            .min_by_key(|&&v| {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0;
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if !adj[a].contains(&b) {
                            fill += 1;
                        }
                    }
                }
                (fill, nb.len(), v)
            })
            .unwrap();
        eliminate(&mut adj, v);
        alive.remove(&v);
        order.push(v);
    }
    order
}

fn eliminate(adj: &mut [BTreeSet<usize>], v: usize) -> Vec<usize> {
    let nb: Vec<usize> = adj[v].iter().copied().collect();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj[a].remove(&v);
    }
    adj[v].clear();
    nb
}

/// The decomposition induced by an elimination ordering: eliminating `v` creates the bag
/// `{v} ∪ N(v)`, attached to the bag of whichever neighbor is eliminated next. Bags contained
/// in a neighboring bag are then merged away.
pub fn elimination_decomposition(graph: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = graph.vertex_count();
    assert_eq!(order.len(), n, "ordering must list every vertex");
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| graph.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent_vertex = vec![None; n];
    for &v in order {
        let nb = eliminate(&mut adj, v);
        parent_vertex[v] = nb.iter().copied().min_by_key(|&w| position[w]);
        let mut bag = nb;
        bag.push(v);
        bags.push(bag);
    }
    // Bag i belongs to order[i]; roots of separate components are chained together.
    let mut edges = Vec::new();
    let mut last_root: Option<usize> = None;
    for (i, &v) in order.iter().enumerate() {
        match parent_vertex[v] {
            Some(p) => edges.push((i, position[p])),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    simplify(TreeDecomposition::new(bags, edges))
}

/// Contracts tree edges whose one bag is a subset of the other.
fn simplify(td: TreeDecomposition) -> TreeDecomposition {
    let mut bags: Vec<Option<Vec<usize>>> = td.bags.into_iter().map(Some).collect();
    let mut edges = td.tree_edges;
    loop {
        let found = edges.iter().enumerate().find_map(|(e, &(a, b))| {
            let (ba, bb) = (bags[a].as_ref()?, bags[b].as_ref()?);
            if is_subset(ba, bb) {
                Some((e, a, b))
            } else if is_subset(bb, ba) {
                Some((e, b, a))
            } else {
                None
            }
        });
        let Some((e, gone, keep)) = found else { break };
        edges.swap_remove(e);
        bags[gone] = None;
        for edge in edges.iter_mut() {
            if edge.0 == gone {
                edge.0 = keep;
            }
            if edge.1 == gone {
                edge.1 = keep;
            }
        }
    }
    let mut remap = vec![usize::MAX; bags.len()];
    let mut kept = Vec::new();
    for (i, b) in bags.into_iter().enumerate() {
        if let Some(b) = b {
            remap[i] = kept.len();
            kept.push(b);
        }
    }
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (remap[a], remap[b]))
        .collect();
    edges.sort_unstable();
    TreeDecomposition::new(kept, edges)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_gets_edge_bags() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]);
        let td = decompose(&g, 1).unwrap().unwrap();
        assert_eq!(td.bags, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(td.width(), 1);
        assert_eq!(verify(&g, &td), Ok(()));
    }

    #[test]
    fn k4_has_no_width_two_decomposition() {
        assert!(decompose(&Graph::complete(4), 2).unwrap().is_none());
        let td = decompose(&Graph::complete(4), 3).unwrap().unwrap();
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn cycle_has_width_two() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(decompose(&g, 1).unwrap().is_none());
        let td = decompose(&g, 2).unwrap().unwrap();
        assert_eq!(td.width(), 2);
        assert_eq!(td.node_count(), 2);
        assert_eq!(verify(&g, &td), Ok(()));
    }

    #[test]
    fn zero_bound_rejected() {
        assert_eq!(
            decompose(&Graph::new(1, []), 0),
            Err(TdError::WidthBound(0))
        );
    }

    #[test]
    fn star_with_many_leaves() {
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]);
        let td = decompose(&g, 1).unwrap().unwrap();
        assert_eq!(td.node_count(), 4);
        assert_eq!(verify(&g, &td), Ok(()));
    }

    #[test]
    fn disconnected_graph_decomposes() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4)]);
        let td = decompose(&g, 2).unwrap().unwrap();
        assert_eq!(verify(&g, &td), Ok(()));
    }

    #[test]
    fn min_fill_handles_large_grid() {
        let side = 5;
        let idx = |r: usize, c: usize| r * side + c;
        let mut edges = Vec::new();
        for r in 0..side {
            for c in 0..side {
                if c + 1 < side {
                    edges.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < side {
                    edges.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        let g = Graph::new(side * side, edges);
        let td = decompose(&g, 6).unwrap().expect("5x5 grid has treewidth 5");
        assert!(td.width() <= 6);
        assert_eq!(verify(&g, &td), Ok(()));
    }
}
