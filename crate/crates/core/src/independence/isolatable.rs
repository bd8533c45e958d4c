use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{closed_neighborhood, delete_closed_neighborhood, Graph};
use crate::vertex_set::VertexSet;

use super::mis::enumerate_maximal_independent_sets;

/// An independent set `set` with `G - N[set] = {x}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatableWitness {
    pub x: usize,
    pub set: VertexSet,
}

impl IsolatableWitness {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let invalid = || Error::InvalidIsolatable {
            vertex: self.x,
            set: self.set.to_vec(),
        };
        g.check_vertex(self.x)?;
        self.set.check_host(g.order())?;
        if !g.is_independent_unchecked(&self.set) {
            return Err(invalid());
        }
        let rest = closed_neighborhood(g, &self.set)?.complement();
        if rest.len() == 1 && rest.contains(self.x) {
            Ok(())
        } else {
            Err(invalid())
        }
    }
}

/// Every isolatable vertex in ascending order, each with the first certificate
/// found.
///
/// A certificate for `x` is exactly a maximal independent set of `G - N[x]`
/// that also dominates `N(x)`, so only those are searched, in lexicographic
/// order.
pub fn isolatable_vertices(g: &Graph, caps: &Caps) -> Result<Vec<IsolatableWitness>> {
    let mut out = Vec::new();
    for x in 0..g.order() {
        let mut center = VertexSet::new(g.order());
        center.insert(x);
        let (rest, map) = delete_closed_neighborhood(g, &center)?;
        let neighbors = g.neighbors(x);
        for m in enumerate_maximal_independent_sets(&rest, caps)? {
            let m = map.lift(&m);
            let covered = neighbors.iter().all(|u| g.neighbors(u).intersects(&m));
            if covered {
                out.push(IsolatableWitness { x, set: m });
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(g: &Graph) -> Vec<(usize, Vec<usize>)> {
        isolatable_vertices(g, &Caps::default())
            .unwrap()
            .into_iter()
            .map(|w| (w.x, w.set.to_vec()))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(summary(&Graph::path(3)), vec![(0, vec![2]), (2, vec![0])]);
        assert!(summary(&Graph::cycle(5)).is_empty());
        assert_eq!(summary(&Graph::empty(1)), vec![(0, vec![])]);
        assert!(summary(&Graph::complete(2)).is_empty());
        // opposite corner isolates each vertex of C4
        assert_eq!(
            summary(&Graph::cycle(4)),
            vec![(0, vec![2]), (1, vec![3]), (2, vec![0]), (3, vec![1])]
        );
    }

    #[test]
    fn witnesses_validate() {
        for g in [Graph::path(5), Graph::cycle(6), Graph::empty(3)] {
            for w in isolatable_vertices(&g, &Caps::default()).unwrap() {
                w.validate(&g).unwrap();
            }
        }
        let bogus = IsolatableWitness {
            x: 1,
            set: VertexSet::new(3),
        };
        assert!(bogus.validate(&Graph::path(3)).is_err());
    }
}
