use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{delete_closed_neighborhood, Graph, SubgraphMap};
use crate::vertex_set::VertexSet;

use super::{independence_number, is_maximal_independent};

/// `G - N[I - {x}]` for a maximum independent set `I` and `x ∈ I`.
///
/// `x` always survives. When no vertex of `G` is isolatable the remainder is a
/// clique on at least two vertices.
pub fn clique_remainder(
    g: &Graph,
    i: &VertexSet,
    x: usize,
    caps: &Caps,
) -> Result<(Graph, SubgraphMap)> {
    i.check_host(g.order())?;
    g.check_vertex(x)?;
    if !i.contains(x) {
        return Err(Error::NotMember(x));
    }
    if !is_maximal_independent(g, i)? {
        return Err(Error::NotMaximalIndependent);
    }
    let alpha = independence_number(g, caps)?;
    if i.len() != alpha {
        return Err(Error::NotMaximum { size: i.len(), alpha });
    }
    let mut rest = i.clone();
    rest.remove(x);
    delete_closed_neighborhood(g, &rest)
}

/// Replaces `v` in the maximum independent set `I` by another vertex `w` of the
/// remainder `F = G - N[I - {v}]`, giving `I' = (I - {v}) ∪ {w}`.
///
/// `w` is the least vertex of `F - {v}` outside `J`. Such a vertex exists
/// whenever `v ∈ J`, and then `|I' ∩ J| = |I ∩ J| - 1`. If `v ∉ J` and the
/// only other vertex of `F` lies in `J`, the least vertex of `F - {v}` is used.
pub fn swap_step(
    g: &Graph,
    i: &VertexSet,
    v: usize,
    j: &VertexSet,
    caps: &Caps,
) -> Result<VertexSet> {
    j.check_host(g.order())?;
    if !is_maximal_independent(g, j)? {
        return Err(Error::NotMaximalIndependent);
    }
    let (remainder, map) = clique_remainder(g, i, v, caps)?;
    if remainder.order() < 2 {
        return Err(Error::RemainderTooSmall {
            vertex: v,
            order: remainder.order(),
        });
    }
    let others = || map.kept().iter().copied().filter(|&u| u != v);
    let w = others()
        .find(|&u| !j.contains(u))
        .or_else(|| others().next())
        .expect("remainder has a second vertex");
    let mut swapped = i.clone();
    swapped.remove(v);
    swapped.insert(w);
    Ok(swapped)
}
