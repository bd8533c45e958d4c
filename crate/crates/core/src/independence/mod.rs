//! Independent sets: enumeration, well-coveredness, isolatable vertices,
//! greedy independent decompositions and diagonal sets.

mod exchange;
mod greedy;
mod isolatable;
mod mis;

pub use exchange::{clique_remainder, swap_step};
pub use greedy::{
    diagonal_set, enumerate_greedy_decompositions, greedy_decomposition, GreedyDecomposition,
};
pub use isolatable::{isolatable_vertices, IsolatableWitness};
pub use mis::{
    check_well_covered, enumerate_maximal_independent_sets, independence_number,
    is_well_covered, maximal_size_histogram, MaximalIndependentSets, WellCoveredReport,
};

use crate::error::Result;
use crate::graph::{closed_neighborhood, Graph};
use crate::vertex_set::VertexSet;

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.check_host(g.order())?;
    Ok(g.is_independent_unchecked(s))
}

/// Independent and dominating.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    Ok(is_independent(g, s)? && closed_neighborhood(g, s)?.len() == g.order())
}

/// Extends an independent set to a maximal one by scanning vertices in
/// ascending order and adding every vertex not yet dominated.
pub fn extend_to_maximal(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if !is_independent(g, s)? {
        return Err(crate::Error::NotIndependent);
    }
    let mut out = s.clone();
    let mut dominated = closed_neighborhood(g, s)?;
    for v in 0..g.order() {
        if !dominated.contains(v) {
            out.insert(v);
            dominated.insert(v);
            dominated.union_with(g.neighbors(v));
        }
    }
    Ok(out)
}
