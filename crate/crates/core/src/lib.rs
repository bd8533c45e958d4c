//! Well-covered graphs and Cartesian products.
//!
//! A graph is well-covered when all of its maximal independent sets have the
//! same size. This crate decides well-coveredness by exhaustive enumeration,
//! builds the objects used to reason about products (greedy independent
//! decompositions, diagonal sets, isolatable vertices) and verifies, pair by
//! pair, that a well-covered product `G □ H` always has a well-covered factor.

pub mod caps;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod scan;
pub mod theorem;
pub mod vertex_set;

pub use caps::Caps;
pub use error::{Error, Result};
pub use generate::{canonical_form, canonical_graph6, generate_all_graphs};
pub use graph::{
    cartesian_product, closed_neighborhood, delete_closed_neighborhood, induced_subgraph,
    is_clique, Graph, ProductIndexMap, SubgraphMap,
};
pub use graph6::{from_graph6, to_graph6};
pub use independence::{
    clique_remainder, diagonal_set, enumerate_greedy_decompositions,
    enumerate_maximal_independent_sets, extend_to_maximal, greedy_decomposition,
    independence_number, is_independent, is_maximal_independent, is_well_covered,
    isolatable_vertices, swap_step, GreedyDecomposition, IsolatableWitness, WellCoveredReport,
};
pub use theorem::{
    build_product_witness, check_lemma_3_2, theorem31_applies, verify_main_theorem,
    Lemma32Report, PairVerdict, ProductWitness,
};
pub use vertex_set::VertexSet;
