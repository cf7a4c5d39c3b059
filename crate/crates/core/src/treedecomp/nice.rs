//! Rooted binary form of a tree decomposition.

use super::{verify, TdError, TreeDecomposition};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub bag: Vec<usize>,
    /// `(left, right)` for internal nodes, `None` for leaves.
    pub children: Option<(usize, usize)>,
}

/// A rooted tree decomposition in which every internal node has exactly two children.
/// Missing children are filled with copies of the parent's bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_some()).count()
    }

    /// Node ids with every child listed before its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![(self.root, false)];
        while let Some((i, expanded)) = stack.pop() {
            match (expanded, self.nodes[i].children) {
                (false, Some((l, r))) => {
                    stack.push((i, true));
                    stack.push((r, false));
                    stack.push((l, false));
                }
                _ => out.push(i),
            }
        }
        out
    }

    /// The underlying unrooted decomposition.
    pub fn to_decomposition(&self) -> TreeDecomposition {
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| n.children.map(|(l, r)| [(i, l), (i, r)]))
            .flatten()
            .collect();
        TreeDecomposition::new(self.nodes.iter().map(|n| n.bag.clone()).collect(), edges)
    }
}

/// Roots `td` at node 0 and binarizes it. A node with one child gets a duplicate-bag leaf as
/// second child; a node with `c ≥ 3` children keeps its first child and hands the rest to a
/// duplicate of itself.
pub fn to_nice(graph: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition, TdError> {
    verify(graph, td).map_err(TdError::Invalid)?;
    let count = td.bags.len();
    if count == 0 {
        return Ok(NiceTreeDecomposition {
            nodes: Vec::new(),
            root: 0,
        });
    }
    let mut adj = vec![Vec::new(); count];
    for &(a, b) in &td.tree_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut children = vec![Vec::new(); count];
    let mut seen = vec![false; count];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        let mut nbrs = adj[i].clone();
        nbrs.sort_unstable();
        for j in nbrs {
            if !seen[j] {
                seen[j] = true;
                children[i].push(j);
                stack.push(j);
            }
        }
    }

    // Original nodes keep their ids; duplicates are appended.
    let mut nodes: Vec<NiceNode> = td
        .bags
        .iter()
        .map(|b| NiceNode {
            bag: b.clone(),
            children: None,
        })
        .collect();
    for i in 0..count {
        let mut holder = i;
        let mut rest: &[usize] = &children[i];
        loop {
            match rest {
                [] => break,
                [only] => {
                    let dummy = push_copy(&mut nodes, holder);
                    nodes[holder].children = Some((*only, dummy));
                    break;
                }
                [a, b] => {
                    nodes[holder].children = Some((*a, *b));
                    break;
                }
                [first, tail @ ..] => {
                    let copy = push_copy(&mut nodes, holder);
                    nodes[holder].children = Some((*first, copy));
                    holder = copy;
                    rest = tail;
                }
            }
        }
    }
    Ok(NiceTreeDecomposition { nodes, root: 0 })
}

fn push_copy(nodes: &mut Vec<NiceNode>, of: usize) -> usize {
    nodes.push(NiceNode {
        bag: nodes[of].bag.clone(),
        children: None,
    });
    nodes.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_bag_is_already_nice() {
        let g = Graph::complete(3);
        let td = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        let nice = to_nice(&g, &td).unwrap();
        assert_eq!(nice.nodes.len(), 1);
        assert_eq!(nice.internal_count(), 0);
    }

    #[test]
    fn path_keeps_width() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]);
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2)],
        );
        let nice = to_nice(&g, &td).unwrap();
        assert_eq!(nice.width(), 1);
        for node in &nice.nodes {
            if let Some((l, r)) = node.children {
                assert_ne!(l, r);
            }
        }
        assert_eq!(verify(&g, &nice.to_decomposition()), Ok(()));
    }

    #[test]
    fn three_children_binarized_with_duplicate() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]);
        let td = TreeDecomposition::new(
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]],
            vec![(0, 1), (0, 2), (0, 3)],
        );
        let nice = to_nice(&g, &td).unwrap();
        assert_eq!(nice.nodes.len(), 5);
        assert_eq!(nice.nodes[4].bag, vec![0]);
        assert_eq!(nice.nodes[0].children, Some((1, 4)));
        assert_eq!(nice.nodes[4].children, Some((2, 3)));
        assert_eq!(verify(&g, &nice.to_decomposition()), Ok(()));
    }

    #[test]
    fn invalid_input_names_property() {
        let g = Graph::new(3, [(0, 1), (1, 2)]);
        let td = TreeDecomposition::new(vec![vec![0, 1]], vec![]);
        let err = to_nice(&g, &td).unwrap_err();
        assert!(err.to_string().contains("vertex 2 uncovered"));
    }

    #[test]
    fn postorder_visits_children_first() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]);
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2)],
        );
        let nice = to_nice(&g, &td).unwrap();
        let order = nice.postorder();
        assert_eq!(order.len(), nice.nodes.len());
        assert_eq!(*order.last().unwrap(), nice.root);
    }
}
