//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

/// A matching between left vertices `0..left` and right vertices `0..right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
    pub size: usize,
}

const INF: usize = usize::MAX;

/// Maximum matching; `adj[l]` lists the right neighbors of left vertex `l`.
/// Neighbors are tried in the given order, so the result is deterministic.
pub fn max_bipartite_matching(adj: &[Vec<usize>], right: usize) -> Matching {
    let left = adj.len();
    let mut hk = HopcroftKarp {
        adj,
        left_to_right: vec![None; left],
        right_to_left: vec![None; right],
        dist: vec![INF; left],
    };
    let mut size = 0;
    while hk.bfs() {
        for l in 0..left {
            if hk.left_to_right[l].is_none() && hk.dfs(l) {
                size += 1;
            }
        }
    }
    Matching {
        left_to_right: hk.left_to_right,
        right_to_left: hk.right_to_left,
        size,
    }
}

struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    left_to_right: Vec<Option<usize>>,
    right_to_left: Vec<Option<usize>>,
    dist: Vec<usize>,
}

impl HopcroftKarp<'_> {
    /// Layers free left vertices; true if some augmenting path exists.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for l in 0..self.adj.len() {
            if self.left_to_right[l].is_none() {
                self.dist[l] = 0;
                queue.push_back(l);
            } else {
                self.dist[l] = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.adj[l] {
                match self.right_to_left[r] {
                    None => found = true,
                    Some(next) if self.dist[next] == INF => {
                        self.dist[next] = self.dist[l] + 1;
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, l: usize) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            let ok = match self.right_to_left[r] {
                None => true,
                Some(next) => self.dist[next] == self.dist[l] + 1 && self.dfs(next),
            };
            if ok {
                self.left_to_right[l] = Some(r);
                self.right_to_left[r] = Some(l);
                return true;
            }
        }
        self.dist[l] = INF;
        false
    }
}
