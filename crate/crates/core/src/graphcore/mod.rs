//! Compositions of path and cycle powers, realized as graphs, and the exact
//! invariants (distance, ω, α, μ) the EKR statements quantify over.

mod composition;
mod dsl;
mod enumerate;
mod graph;
mod invariants;

pub use composition::{ComponentSpec, Composition, Kind};
pub use dsl::parse_composition;
pub use enumerate::{compositions, cycle_specs, path_specs, Shape};
pub use graph::{realize, Graph, Placed};
pub use invariants::{clique_number, independence_number, min_maximal_independent};

/// Parses and realizes a DSL string in one step.
pub fn graph_from_dsl(text: &str) -> crate::Result<Graph> {
    realize(&parse_composition(text)?)
}

/// The graph on `n` vertices with no edges.
pub fn edgeless(n: usize) -> crate::Result<Graph> {
    realize(&Composition::edgeless(n)?)
}
