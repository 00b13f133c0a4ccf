//! k,d-independence, chromatic, clique and domination numbers of graphs,
//! computed on the geodesic hypergraph whose edges are the k-subsets lying
//! on a common shortest path of length at most d.
//!
//! Exact solvers work for any small graph; closed forms cover paths, cycles
//! and powers of paths; [`perfection`] decides k,d-perfection and [`bounds`]
//! evaluates the known inequalities between the invariants.

pub mod bounds;
pub mod catalogue;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod perfection;
pub mod solvers;

pub use bounds::BoundReport;
pub use error::{KdError, Result};
pub use graph::{
    complete_graph, cycle_graph, is_isometric_embedding, path_graph, star_graph, DistanceMatrix,
    Graph, Params, VertexSet,
};
pub use hypergraph::{
    build_geodesic_hypergraph, enumerate_geodesics_up_to, is_geodesic_subset, GeodesicHypergraph,
    Hypergraph, HypergraphBudget,
};
pub use perfection::PerfectionVerdict;
pub use solvers::{
    compute_all, ColoringAssignment, InvariantReport, InvariantSelection, SolverBudget, Witness,
};
