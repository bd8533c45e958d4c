//! Brute-force reference computations. Nothing here calls the library's
//! enumeration, product or canonicalization code.
#![allow(dead_code)]

use std::collections::HashSet;

use wellcover::{generate_all_graphs, Graph};

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn is_independent(adj: &[Vec<bool>], set: &[usize]) -> bool {
    set.iter()
        .all(|&u| set.iter().all(|&v| u == v || !adj[u][v]))
}

pub fn is_maximal_independent(adj: &[Vec<bool>], set: &[usize]) -> bool {
    is_independent(adj, set)
        && (0..adj.len()).all(|v| set.contains(&v) || set.iter().any(|&u| adj[u][v]))
}

/// Every maximal independent set, by filtering all `2^n` subsets, sorted
/// lexicographically as ascending sequences.
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let n = g.order();
    let mut out: Vec<_> = (0..1u64 << n)
        .map(|m| members(m, n))
        .filter(|s| is_maximal_independent(&adj, s))
        .collect();
    out.sort();
    out
}

/// Vertices `x` with some independent `M` such that `G - N[M] = {x}`, by
/// trying every subset.
pub fn isolatable(g: &Graph) -> Vec<usize> {
    let adj = adjacency(g);
    let n = g.order();
    let mut found = vec![false; n];
    for m in 0..1u64 << n {
        let set = members(m, n);
        if !is_independent(&adj, &set) {
            continue;
        }
        let rest: Vec<_> = (0..n)
            .filter(|&v| !set.contains(&v) && !set.iter().any(|&u| adj[u][v]))
            .collect();
        if rest.len() == 1 {
            found[rest[0]] = true;
        }
    }
    (0..n).filter(|&v| found[v]).collect()
}

/// Product adjacency straight from the definition, on `(g, h)` pairs.
pub struct ProductOracle {
    g: Vec<Vec<bool>>,
    h: Vec<Vec<bool>>,
}

impl ProductOracle {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        ProductOracle {
            g: adjacency(g),
            h: adjacency(h),
        }
    }

    pub fn adjacent(&self, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> bool {
        (g1 == g2 && self.h[h1][h2]) || (h1 == h2 && self.g[g1][g2])
    }

    pub fn is_maximal_independent(&self, set: &[(usize, usize)]) -> bool {
        let independent = set
            .iter()
            .all(|&p| set.iter().all(|&q| p == q || !self.adjacent(p, q)));
        let dominating = (0..self.g.len()).all(|a| {
            (0..self.h.len()).all(|b| {
                set.contains(&(a, b)) || set.iter().any(|&q| self.adjacent((a, b), q))
            })
        });
        independent && dominating
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes on `n` vertices: canonicalize every labeled
/// graph (edge masks over row-major pairs) by minimizing over all relabelings.
pub fn isomorphism_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for code in 0..1u64 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| code >> k & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << index(p[a], p[b]))
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

/// Every graph on seven vertices up to isomorphism appears in this list: each
/// order-6 class extended by a seventh vertex in all 64 ways.
pub fn order7_cover() -> Vec<Graph> {
    let mut out = Vec::new();
    for base in generate_all_graphs(6).unwrap() {
        for nbrs in 0..64u32 {
            let mut edges: Vec<_> = base.edges().collect();
            edges.extend((0..6).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v, 6)));
            out.push(Graph::from_edges(7, &edges).unwrap());
        }
    }
    out
}
