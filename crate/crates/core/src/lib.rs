//! Line consistency of signed multigraphs.
//!
//! A signed graph is *line consistent* when every circle of its line graph,
//! with each line-graph vertex marked by the sign of the edge it stands for,
//! has positive vertex-sign product. This crate decides the property four
//! independent ways (see [`analysis`]), checks it by brute force over circles
//! (see [`cycles`]), and cross-checks the two (see [`crosscheck`]).

pub mod analysis;
pub mod crosscheck;
pub mod cycles;
pub mod generate;
pub mod graph;
pub mod io;
pub mod linegraph;

pub use analysis::{
    blocks, check_bridgeless, check_condition_i, check_condition_ii, check_condition_iii, check_simple_criterion,
    check_structure, classify_structure, find_isthmi, find_witness, AnalysisError, Block, Clause, Method,
    StructureReport, Verdict,
};
pub use cycles::{
    circle_vertex_sign, enumerate_circles, is_balanced_fast, is_balanced_oracle, is_consistent_oracle, CycleError,
    OracleVerdict,
};
pub use graph::{Circle, Edge, GraphError, MarkedGraph, Multigraph, Sign, SignedEdge, SignedGraph, Walk};
pub use linegraph::{line_graph, vertex_triangles};
