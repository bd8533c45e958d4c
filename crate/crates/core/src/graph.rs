//! Simple undirected graphs over `0..n`, induced subgraphs and the Cartesian product.

use std::fmt;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph. `adj[v]` is the open neighborhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if !g.try_add_edge(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_n`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Adds `uv`, returning whether it was new. Rejects loops and out-of-range endpoints.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        VertexSet::from_vertices(self.n, vertices)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adjacency rows as single words, when the graph has at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.adj.iter().map(|s| s.as_mask().unwrap_or(0)).collect())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in &self.adj[u] {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.len() == self.n
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub(crate) fn is_independent_unchecked(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidPermutation(n));
        }
    }
    Ok(())
}

/// Tracks vertex identity from a host graph into one of its induced subgraphs.
///
/// `kept` is ascending, so the relabeling preserves vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphMap {
    host: usize,
    kept: Vec<usize>,
    forward: Vec<Option<usize>>,
}

impl SubgraphMap {
    fn new(host: usize, kept: Vec<usize>) -> Self {
        let mut forward = vec![None; host];
        for (i, &v) in kept.iter().enumerate() {
            forward[v] = Some(i);
        }
        SubgraphMap { host, kept, forward }
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Original vertex for a subgraph vertex.
    pub fn original(&self, v: usize) -> usize {
        self.kept[v]
    }

    /// Subgraph vertex for an original vertex, if it survived.
    pub fn forward(&self, v: usize) -> Option<usize> {
        self.forward.get(v).copied().flatten()
    }

    /// Lifts a set of subgraph vertices back into the host.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.host);
        for v in s {
            out.insert(self.kept[v]);
        }
        out
    }

    /// Restricts a host set to the surviving vertices, in subgraph labels.
    pub fn restrict(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.kept.len());
        for v in s {
            if let Some(i) = self.forward(v) {
                out.insert(i);
            }
        }
        out
    }
}

/// Row-major numbering of the product vertex set: `(g, h) -> g * n_h + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductIndexMap {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductIndexMap {
    pub fn new(n_g: usize, n_h: usize) -> Self {
        ProductIndexMap { n_g, n_h }
    }

    pub fn order(&self) -> usize {
        self.n_g * self.n_h
    }

    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        debug_assert!(v < self.order());
        (v / self.n_h, v % self.n_h)
    }

    /// The product set `S x T`.
    pub fn product_set(&self, s: &VertexSet, t: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.order());
        for g in s {
            for h in t {
                out.insert(self.encode(g, h));
            }
        }
        out
    }

    pub fn pairs(&self, s: &VertexSet) -> Vec<(usize, usize)> {
        s.iter().map(|v| self.decode(v)).collect()
    }
}

/// `S ∪ N(S)`.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    s.check_host(g.order())?;
    let mut out = s.clone();
    for v in s {
        out.union_with(g.neighbors(v));
    }
    Ok(out)
}

/// The subgraph induced by `s`, relabeled in ascending order of the kept vertices.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, SubgraphMap)> {
    s.check_host(g.order())?;
    let map = SubgraphMap::new(g.order(), s.to_vec());
    let mut sub = Graph::empty(map.kept.len());
    for (i, &u) in map.kept.iter().enumerate() {
        for v in g.neighbors(u).intersection(s).iter() {
            let j = map.forward[v].expect("neighbor inside kept set");
            if i < j {
                sub.add_edge(i, j);
            }
        }
    }
    Ok((sub, map))
}

/// `G - N[S]` for an independent set `S`.
pub fn delete_closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<(Graph, SubgraphMap)> {
    s.check_host(g.order())?;
    if !g.is_independent_unchecked(s) {
        return Err(Error::NotIndependent);
    }
    let remaining = closed_neighborhood(g, s)?.complement();
    induced_subgraph(g, &remaining)
}

/// `G □ H` with row-major vertex numbering.
pub fn cartesian_product(g: &Graph, h: &Graph, caps: &Caps) -> Result<(Graph, ProductIndexMap)> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyFactor);
    }
    let map = ProductIndexMap::new(g.order(), h.order());
    if map.order() > caps.product {
        return Err(Error::CapExceeded {
            what: "product",
            size: map.order(),
            cap: caps.product,
        });
    }
    let mut p = Graph::empty(map.order());
    for x in 0..g.order() {
        for (a, b) in h.edges() {
            p.add_edge(map.encode(x, a), map.encode(x, b));
        }
    }
    for (a, b) in g.edges() {
        for y in 0..h.order() {
            p.add_edge(map.encode(a, y), map.encode(b, y));
        }
    }
    Ok((p, map))
}

pub fn is_clique(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.check_host(g.order())?;
    Ok(s.iter().all(|v| {
        let mut others = s.clone();
        others.remove(v);
        others.is_subset(g.neighbors(v))
    }))
}
