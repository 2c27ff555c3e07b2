//! Kernelization toolkit for Multiple Hitting Set: every edge `e` of a
//! hypergraph carries a demand `f(e)`, and a solution is a vertex set meeting
//! each edge in at least `f(e)` vertices.
//!
//! The crate provides the instance model and text format, the reduction
//! rules (full edge, superset edge, demand-pushing supersedence, multiple
//! domination, lower bound), a data-parallel and an incremental sequential
//! engine for the supersedence/domination pair, graph parameters of the
//! incidence graph, and an exact solver.

pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod incidence;
pub mod ingest;
pub mod instances;
pub mod matching;
pub mod parallel;
pub mod params;
pub mod pipeline;
pub mod report;
pub mod rules;
pub mod sequential;
pub mod solver;
pub mod stats;

pub use error::{
    GenerateError, GraphError, HypergraphError, IngestError, ParseError, ParseErrorKind, RuleError,
    SolveError,
};
pub use generate::generate_random;
pub use hypergraph::{Feasibility, Hypergraph, Kernel};
pub use incidence::{BitRows, CountMatrix, IncidenceMatrix};
pub use parallel::{par_kernelize, par_reduce_edges, par_reduce_vertices, ParallelEngine};
pub use params::{
    dilworth_number, incidence_graph, kernel_bound, matching_number, neighborhood_diversity, Graph,
    IncidenceGraph,
};
pub use pipeline::{run_pipeline, EngineKind, LpOracle, Phase, PipelineSpec};
pub use report::{KernelReport, RuleCounts};
pub use rules::{LowerBound, MaxDemandBound, Residual, RuleOutcome};
pub use sequential::{seq_kernelize, ReductionState};
pub use solver::{solve_opt, verify_solution, ExactBound, Solution, Status};
