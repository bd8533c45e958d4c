//! Isomorphism-free generation of small graphs by brute-force canonical forms.
//!
//! The canonical form of a graph is the relabeling whose graph6 adjacency
//! bit-string (`x(0,1); x(0,2), x(1,2); ...`) is lexicographically least.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Largest order accepted by [`generate_all_graphs`].
pub const MAX_GENERATED_ORDER: usize = 6;
/// Largest order [`canonical_form`] will try (it visits all `n!` labelings).
pub const MAX_CANONICAL_ORDER: usize = 9;

struct Labelings {
    n: usize,
    // position of x(i,j) in the bit-string, for i < j
    position: Vec<Vec<u32>>,
    bits: u32,
    perms: Vec<Vec<usize>>,
}

impl Labelings {
    #[allow(clippy::needless_range_loop)]
    fn new(n: usize) -> Self {
        let mut position = vec![vec![0; n]; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                position[i][j] = k;
                position[j][i] = k;
                k += 1;
            }
        }
        Labelings {
            n,
            position,
            bits: k,
            perms: permutations(n),
        }
    }

    /// Bit-string as an integer, first bit most significant.
    fn code(&self, edges: &[(usize, usize)], perm: Option<&[usize]>) -> u64 {
        edges.iter().fold(0, |acc, &(u, v)| {
            let (u, v) = match perm {
                Some(p) => (p[u], p[v]),
                None => (u, v),
            };
            acc | 1 << (self.bits - 1 - self.position[u][v])
        })
    }

    fn decode(&self, code: u64) -> Graph {
        let mut g = Graph::empty(self.n);
        for j in 1..self.n {
            for i in 0..j {
                if code >> (self.bits - 1 - self.position[i][j]) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// The relabeling of `g` with the lexicographically least adjacency bit-string.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(Error::CapExceeded {
            what: "canonical form",
            size: g.order(),
            cap: MAX_CANONICAL_ORDER,
        });
    }
    let lab = Labelings::new(g.order());
    let edges: Vec<_> = g.edges().collect();
    let best = lab
        .perms
        .iter()
        .map(|p| lab.code(&edges, Some(p)))
        .min()
        .unwrap_or(0);
    Ok(lab.decode(best))
}

pub fn canonical_graph6(g: &Graph) -> Result<String> {
    to_graph6(&canonical_form(g)?)
}

/// One canonical representative per isomorphism class of simple graphs on
/// `n` vertices, sorted by graph6 encoding.
pub fn generate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange(n));
    }
    let lab = Labelings::new(n);
    let mut out = Vec::new();
    // ascending codes give ascending graph6 strings
    for code in 0..1u64 << lab.bits {
        let g = lab.decode(code);
        let edges: Vec<_> = g.edges().collect();
        if lab.perms.iter().all(|p| lab.code(&edges, Some(p)) >= code) {
            out.push(g);
        }
    }
    Ok(out)
}
