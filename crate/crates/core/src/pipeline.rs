//! Configurable reduction pipelines: an ordered list of rule phases, run once
//! or repeated until a full pass changes nothing.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, Kernel};
use crate::parallel::ParallelEngine;
use crate::params::{incidence_graph, kernel_bound};
use crate::report::KernelReport;
use crate::rules::{LowerBound, MaxDemandBound, Residual};
use crate::sequential::ReductionState;
use crate::solver::{ExactBound, DEFAULT_NODE_LIMIT};

/// Lower-bound provider for the LP rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpOracle {
    /// Exact optimum of the pushed sub-instance.
    Exact,
    /// Largest single pushed demand.
    PushedMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Fe,
    Se,
    Dp,
    Md,
    Lp(LpOracle),
}

impl Phase {
    pub fn name(&self) -> &'static str {
        match self {
            Phase::Fe => "fe",
            Phase::Se => "se",
            Phase::Dp => "dp",
            Phase::Md => "md",
            Phase::Lp(_) => "lp",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::Lp(LpOracle::PushedMax) => f.write_str("lp:pushed-max"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("unknown rule `{0}` (expected fe, se, dp, md, lp, lp:exact or lp:pushed-max)")]
    UnknownRule(String),
    #[error("a pipeline needs at least one rule")]
    Empty,
}

impl FromStr for Phase {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "fe" => Phase::Fe,
            "se" => Phase::Se,
            "dp" => Phase::Dp,
            "md" => Phase::Md,
            "lp" | "lp:exact" => Phase::Lp(LpOracle::Exact),
            "lp:pushed-max" => Phase::Lp(LpOracle::PushedMax),
            _ => return Err(PipelineError::UnknownRule(s.to_string())),
        })
    }
}

/// Parses a comma-separated rule list such as `fe,dp,md`.
pub fn parse_phases(list: &str) -> Result<Vec<Phase>, PipelineError> {
    let phases = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<_>, _>>()?;
    if phases.is_empty() {
        return Err(PipelineError::Empty);
    }
    Ok(phases)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Sequential,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineSpec {
    pub phases: Vec<Phase>,
    pub engine: EngineKind,
    pub looped: bool,
    /// Worker threads for the parallel engine; 0 means one per core.
    pub workers: usize,
    /// Compute `2α∇(I(H))` and `ν(I(H))` for the report.
    pub compute_bounds: bool,
    /// Search node limit for the exact LP oracle.
    pub node_limit: u64,
}

impl PipelineSpec {
    pub fn new(phases: Vec<Phase>, engine: EngineKind) -> Result<Self, PipelineError> {
        if phases.is_empty() {
            return Err(PipelineError::Empty);
        }
        Ok(PipelineSpec {
            phases,
            engine,
            looped: false,
            workers: 0,
            compute_bounds: false,
            node_limit: DEFAULT_NODE_LIMIT,
        })
    }

    pub fn looped(mut self, looped: bool) -> Self {
        self.looped = looped;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_bounds(mut self, compute: bool) -> Self {
        self.compute_bounds = compute;
        self
    }
}

/// Runs `spec` on `h`. Infeasibility (on input or after FE) stops the
/// pipeline and is reported through `KernelReport::infeasible`.
pub fn run_pipeline(h: &Hypergraph, spec: &PipelineSpec) -> (Kernel, KernelReport) {
    let start = Instant::now();
    let mut report = KernelReport::start(h);
    if spec.compute_bounds {
        let t = Instant::now();
        report.bound_2_alpha_nabla = Some(kernel_bound(h));
        report.matching_bound = Some(incidence_graph(h).matching_number());
        report.add_time("bounds", t.elapsed());
    }

    let mut res = Residual::new(h);
    if !res.check_feasibility().is_feasible() {
        report.infeasible = true;
        report.finish(&res, start.elapsed());
        return (res.to_kernel(), report);
    }

    let parallel = (spec.engine == EngineKind::Parallel).then(|| ParallelEngine::new(spec.workers));
    // Incremental DP/MD state; dropped whenever another rule edits the instance.
    let mut state: Option<ReductionState<'_>> = None;

    'passes: loop {
        report.rounds += 1;
        let mut changed = false;
        for phase in &spec.phases {
            let t = Instant::now();
            let deleted = match *phase {
                Phase::Fe => {
                    state = None;
                    let out = res.apply_full_edges();
                    report.deleted_by_rule.fe +=
                        out.deleted_edges.len() + out.deleted_vertices.len();
                    if out.infeasible {
                        report.infeasible = true;
                        report.add_time(phase.name(), t.elapsed());
                        break 'passes;
                    }
                    out.deleted_edges.len() + out.deleted_vertices.len()
                }
                Phase::Se => {
                    state = None;
                    let n = res.apply_superset_edges().len();
                    report.deleted_by_rule.se += n;
                    n
                }
                Phase::Lp(oracle) => {
                    state = None;
                    let exact = ExactBound {
                        node_limit: spec.node_limit,
                    };
                    let bound: &dyn LowerBound = match oracle {
                        LpOracle::Exact => &exact,
                        LpOracle::PushedMax => &MaxDemandBound,
                    };
                    let n = res.apply_lower_bound_rule(bound).len();
                    report.deleted_by_rule.lp += n;
                    n
                }
                Phase::Dp => {
                    let n = match &parallel {
                        Some(engine) => engine.edge_phase(&mut res).len(),
                        None => {
                            let st =
                                state.get_or_insert_with(|| ReductionState::from_residual(&res));
                            let n = st.reduce_edges(res.demands()).len();
                            st.write_back(&mut res);
                            n
                        }
                    };
                    report.deleted_by_rule.dp += n;
                    n
                }
                Phase::Md => {
                    let n = match &parallel {
                        Some(engine) => engine.vertex_phase(&mut res).len(),
                        None => {
                            let st =
                                state.get_or_insert_with(|| ReductionState::from_residual(&res));
                            let n = st.reduce_vertices(res.demands()).len();
                            st.write_back(&mut res);
                            n
                        }
                    };
                    report.deleted_by_rule.md += n;
                    n
                }
            };
            report.add_time(phase.name(), t.elapsed());
            changed |= deleted > 0;
        }
        if !spec.looped || !changed {
            break;
        }
    }

    report.finish(&res, start.elapsed());
    (res.to_kernel(), report)
}
