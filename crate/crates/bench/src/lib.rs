//! Fixtures shared by the criterion benches.

use wellcover::{cartesian_product, Caps, Graph};

/// `G □ H` with default caps.
pub fn product(g: &Graph, h: &Graph) -> Graph {
    cartesian_product(g, h, &Caps::default()).expect("fixture within caps").0
}

/// The `rows x cols` grid graph.
pub fn grid(rows: usize, cols: usize) -> Graph {
    product(&Graph::path(rows), &Graph::path(cols))
}
