use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{check_permutation, induced_subgraph, Graph, ProductIndexMap};
use crate::vertex_set::VertexSet;

use super::mis::enumerate_maximal_independent_sets;

/// Ordered partition `A_1, .., A_t` of `V(G)` in which each block is a maximal
/// independent set of the graph left after deleting the earlier blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyDecomposition {
    #[serde(skip)]
    host: usize,
    blocks: Vec<VertexSet>,
}

impl GreedyDecomposition {
    /// Wraps blocks without checking; see [`GreedyDecomposition::validate`].
    pub fn from_blocks(host: usize, blocks: Vec<VertexSet>) -> Self {
        GreedyDecomposition { host, blocks }
    }

    pub fn host_size(&self) -> usize {
        self.host
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The same blocks with the first two exchanged.
    pub fn swap_first_two(&self) -> Option<GreedyDecomposition> {
        (self.blocks.len() >= 2).then(|| {
            let mut blocks = self.blocks.clone();
            blocks.swap(0, 1);
            GreedyDecomposition::from_blocks(self.host, blocks)
        })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.host != g.order() {
            return Err(Error::HostMismatch {
                expected: g.order(),
                found: self.host,
            });
        }
        let mut residual = g.vertices();
        for (i, block) in self.blocks.iter().enumerate() {
            block.check_host(g.order())?;
            if block.is_empty() {
                return bad(format!("block {} is empty", i + 1));
            }
            if !block.is_subset(&residual) {
                return bad(format!("block {} overlaps an earlier block", i + 1));
            }
            if !g.is_independent_unchecked(block) {
                return bad(format!("block {} is not independent", i + 1));
            }
            residual.difference_with(block);
            let undominated = residual
                .iter()
                .find(|&v| !g.neighbors(v).intersects(block));
            if let Some(v) = undominated {
                return bad(format!(
                    "block {} is not maximal in its residual graph (vertex {v})",
                    i + 1
                ));
            }
        }
        if !residual.is_empty() {
            return bad(format!("vertices {:?} are not covered", residual));
        }
        Ok(())
    }
}

/// Builds each block by scanning the remaining vertices in `order` and taking
/// every vertex not adjacent to the block so far.
pub fn greedy_decomposition(g: &Graph, order: &[usize]) -> Result<GreedyDecomposition> {
    check_permutation(order, g.order())?;
    let mut residual = g.vertices();
    let mut blocks = Vec::new();
    while !residual.is_empty() {
        let mut block = VertexSet::new(g.order());
        for &v in order {
            if residual.contains(v) && !g.neighbors(v).intersects(&block) {
                block.insert(v);
            }
        }
        residual.difference_with(&block);
        blocks.push(block);
    }
    Ok(GreedyDecomposition::from_blocks(g.order(), blocks))
}

/// All greedy decompositions (as ordered lists), up to `limit`, by
/// backtracking over the maximal independent sets of each residual graph in
/// lexicographic order.
pub fn enumerate_greedy_decompositions(
    g: &Graph,
    limit: usize,
    caps: &Caps,
) -> Result<Vec<GreedyDecomposition>> {
    if g.order() > caps.greedy {
        return Err(Error::CapExceeded {
            what: "greedy decomposition enumeration",
            size: g.order(),
            cap: caps.greedy,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_decompositions(g, &g.vertices(), &mut prefix, limit, caps, &mut out)?;
    Ok(out)
}

fn extend_decompositions(
    g: &Graph,
    residual: &VertexSet,
    prefix: &mut Vec<VertexSet>,
    limit: usize,
    caps: &Caps,
    out: &mut Vec<GreedyDecomposition>,
) -> Result<()> {
    if out.len() >= limit {
        return Ok(());
    }
    if residual.is_empty() {
        out.push(GreedyDecomposition::from_blocks(g.order(), prefix.clone()));
        return Ok(());
    }
    let (sub, map) = induced_subgraph(g, residual)?;
    for m in enumerate_maximal_independent_sets(&sub, caps)? {
        let block = map.lift(&m);
        let rest = residual.difference(&block);
        prefix.push(block);
        extend_decompositions(g, &rest, prefix, limit, caps, out)?;
        prefix.pop();
        if out.len() >= limit {
            break;
        }
    }
    Ok(())
}

/// `⋃_{i ≤ min(s,t)} A_i × B_i` in product coordinates.
pub fn diagonal_set(
    dg: &GreedyDecomposition,
    dh: &GreedyDecomposition,
    map: &ProductIndexMap,
) -> Result<VertexSet> {
    for (found, expected) in [(dg.host, map.n_g), (dh.host, map.n_h)] {
        if found != expected {
            return Err(Error::HostMismatch { expected, found });
        }
    }
    let mut out = VertexSet::new(map.order());
    for (a, b) in dg.blocks.iter().zip(&dh.blocks) {
        out.union_with(&map.product_set(a, b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cartesian_product;
    use crate::independence::is_maximal_independent;

    fn blocks(d: &GreedyDecomposition) -> Vec<Vec<usize>> {
        d.blocks().iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn greedy_examples() {
        let p3 = Graph::path(3);
        assert_eq!(blocks(&greedy_decomposition(&p3, &[0, 1, 2]).unwrap()), vec![vec![0, 2], vec![1]]);
        assert_eq!(blocks(&greedy_decomposition(&p3, &[1, 0, 2]).unwrap()), vec![vec![1], vec![0, 2]]);
        let k3 = Graph::complete(3);
        assert_eq!(
            blocks(&greedy_decomposition(&k3, &[0, 1, 2]).unwrap()),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            greedy_decomposition(&p3, &[0, 0, 2]),
            Err(Error::InvalidPermutation(3))
        );
        assert_eq!(greedy_decomposition(&p3, &[0, 1]), Err(Error::InvalidPermutation(3)));
    }

    #[test]
    fn enumeration_examples() {
        let caps = Caps::default();
        let all = |g: &Graph| -> Vec<Vec<Vec<usize>>> {
            enumerate_greedy_decompositions(g, usize::MAX, &caps)
                .unwrap()
                .iter()
                .map(blocks)
                .collect()
        };
        assert_eq!(all(&Graph::path(3)), vec![vec![vec![0, 2], vec![1]], vec![vec![1], vec![0, 2]]]);
        assert_eq!(all(&Graph::complete(2)), vec![vec![vec![0], vec![1]], vec![vec![1], vec![0]]]);
        assert_eq!(all(&Graph::empty(1)), vec![vec![vec![0]]]);
        assert_eq!(enumerate_greedy_decompositions(&Graph::complete(4), 5, &caps).unwrap().len(), 5);
        assert!(matches!(
            enumerate_greedy_decompositions(&Graph::empty(11), 1, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn validation_catches_broken_partitions() {
        let p3 = Graph::path(3);
        let s = |v: &[usize]| VertexSet::from_vertices(3, v.iter().copied()).unwrap();
        let ok = GreedyDecomposition::from_blocks(3, vec![s(&[1]), s(&[0, 2])]);
        ok.validate(&p3).unwrap();
        for bad in [
            vec![s(&[0]), s(&[1]), s(&[2])],
            vec![s(&[0, 2])],
            vec![s(&[0, 1]), s(&[2])],
            vec![s(&[0, 2]), s(&[1]), s(&[1])],
        ] {
            assert!(GreedyDecomposition::from_blocks(3, bad).validate(&p3).is_err());
        }
    }

    #[test]
    fn diagonal_examples() {
        let caps = Caps::default();
        let p3 = Graph::path(3);
        let (grid, map) = cartesian_product(&p3, &p3, &caps).unwrap();
        let d = greedy_decomposition(&p3, &[0, 1, 2]).unwrap();
        let diag = diagonal_set(&d, &d, &map).unwrap();
        assert_eq!(diag.len(), 5);
        assert_eq!(diag.to_vec(), vec![0, 2, 4, 6, 8]);
        assert!(is_maximal_independent(&grid, &diag).unwrap());

        let k2 = Graph::complete(2);
        let (c4, map) = cartesian_product(&k2, &k2, &caps).unwrap();
        let d = greedy_decomposition(&k2, &[0, 1]).unwrap();
        let diag = diagonal_set(&d, &d, &map).unwrap();
        assert_eq!(map.pairs(&diag), vec![(0, 0), (1, 1)]);
        assert!(is_maximal_independent(&c4, &diag).unwrap());

        let k1 = Graph::empty(1);
        let (_, map) = cartesian_product(&k1, &p3, &caps).unwrap();
        let d1 = greedy_decomposition(&k1, &[0]).unwrap();
        let dh = greedy_decomposition(&p3, &[1, 0, 2]).unwrap();
        assert_eq!(diagonal_set(&d1, &dh, &map).unwrap().to_vec(), vec![1]);
        assert!(matches!(diagonal_set(&dh, &d1, &map), Err(Error::HostMismatch { .. })));
    }
}
