//! Independent reference answers, written from the definitions without library solver code.
#![allow(dead_code)]

use speccon::{CognitiveRadioNetwork, SpectrumAssignment};

pub struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    pub fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut d = Dsu::new(n);
    for &(u, v) in edges {
        d.join(u, v);
    }
    let r = d.find(0);
    (1..n).all(|v| d.find(v) == r)
}

/// Potential edges straight from the instance fields, loops dropped.
pub fn potential_edges(net: &CognitiveRadioNetwork) -> Vec<(usize, usize)> {
    let n = net.users.len();
    if net.complete {
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
    } else {
        net.edges.iter().copied().filter(|&(u, v)| u != v).collect()
    }
}

/// Opened sets as raw masks, budget and map respected, realized graph connected.
pub fn witness_ok(net: &CognitiveRadioNetwork, w: &SpectrumAssignment) -> bool {
    if w.opened.len() != net.users.len() {
        return false;
    }
    for (u, set) in net.users.iter().zip(&w.opened) {
        let (s, m) = (set.bits(), u.spectrum_map.bits());
        if s & !m != 0 || s.count_ones() as usize > u.budget {
            return false;
        }
    }
    let realized: Vec<(usize, usize)> = potential_edges(net)
        .into_iter()
        .filter(|&(u, v)| w.opened[u].bits() & w.opened[v].bits() != 0)
        .collect();
    connected(net.users.len(), &realized)
}

/// Subsets of the map of size exactly `min(budget, |map|)`. Opening more channels never removes
/// a realized edge, so some connecting assignment uses only these if any does.
fn maximal_sets(map: u64, budget: usize) -> Vec<u64> {
    let size = (map.count_ones() as usize).min(budget);
    let mut out = Vec::new();
    let mut sub = map;
    loop {
        if sub.count_ones() as usize == size {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & map;
    }
    out
}

/// Exhaustive search over maximal assignments with a mixed-radix counter.
pub fn oracle_connectable(net: &CognitiveRadioNetwork) -> bool {
    let n = net.users.len();
    if n <= 1 {
        return true;
    }
    let edges = potential_edges(net);
    if !connected(n, &edges) {
        return false;
    }
    let choices: Vec<Vec<u64>> = net
        .users
        .iter()
        .map(|u| maximal_sets(u.spectrum_map.bits(), u.budget))
        .collect();
    let mut digit = vec![0usize; n];
    let mut realized = Vec::with_capacity(edges.len());
    loop {
        realized.clear();
        realized.extend(
            edges
                .iter()
                .copied()
                .filter(|&(u, v)| choices[u][digit[u]] & choices[v][digit[v]] != 0),
        );
        if connected(n, &realized) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            digit[i] += 1;
            if digit[i] < choices[i].len() {
                break;
            }
            digit[i] = 0;
            i += 1;
        }
    }
}

/// Truth-table satisfiability over DIMACS-style literals.
pub fn satisfiable(vars: usize, clauses: &[Vec<i32>]) -> bool {
    (0u32..1 << vars).any(|row| {
        clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let value = row >> (l.unsigned_abs() - 1) & 1 == 1;
                value == (l > 0)
            })
        })
    })
}

pub fn satisfies(assignment: &[bool], clauses: &[Vec<i32>]) -> bool {
    clauses
        .iter()
        .all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, visit) {
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Some vertex ordering with consecutive vertices adjacent.
pub fn has_hamiltonian_path(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let adj = adjacency(n, edges);
    let mut order: Vec<usize> = (0..n).collect();
    permutations(&mut order, 0, &mut |p| p.windows(2).all(|w| adj[w[0]][w[1]]))
}

pub fn is_hamiltonian_path(n: usize, edges: &[(usize, usize)], path: &[usize]) -> bool {
    let adj = adjacency(n, edges);
    let mut seen = vec![false; n];
    path.len() == n
        && path.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && path.windows(2).all(|w| adj[w[0]][w[1]])
}

/// Some vertex set of size at most `r` touching every edge.
pub fn has_vertex_cover(n: usize, edges: &[(usize, usize)], r: usize) -> bool {
    (0u32..1 << n).any(|s| {
        s.count_ones() as usize <= r && edges.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)
    })
}

/// Spanning-tree count as a cofactor of the Laplacian, by fraction-free elimination.
pub fn kirchhoff(n: usize, edges: &[(usize, usize)]) -> i128 {
    if n <= 1 {
        return 1;
    }
    let m = n - 1;
    let mut a = vec![vec![0i128; m]; m];
    for &(u, v) in edges {
        if u == v {
            continue;
        }
        if u < m {
            a[u][u] += 1;
        }
        if v < m {
            a[v][v] += 1;
        }
        if u < m && v < m {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..m {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..m).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[m - 1][m - 1]
}

/// All labelled simple graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}
