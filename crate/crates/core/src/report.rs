use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

use crate::hypergraph::Hypergraph;
use crate::rules::Residual;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RuleCounts {
    pub fe: usize,
    pub se: usize,
    pub dp: usize,
    pub md: usize,
    pub lp: usize,
}

/// Summary of one reduction run. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelReport {
    pub n_before: usize,
    pub m_before: usize,
    pub size_before: usize,
    pub n_after: usize,
    pub m_after: usize,
    pub size_after: usize,
    pub rounds: usize,
    pub deleted_by_rule: RuleCounts,
    pub budget_delta: usize,
    pub infeasible: bool,
    pub bound_2_alpha_nabla: Option<usize>,
    pub matching_bound: Option<usize>,
    pub wall_times_ms: BTreeMap<String, f64>,
}

impl KernelReport {
    /// A report with the "before" fields filled from `h`.
    pub fn start(h: &Hypergraph) -> Self {
        KernelReport {
            n_before: h.num_vertices(),
            m_before: h.num_edges(),
            size_before: h.size(),
            n_after: h.num_vertices(),
            m_after: h.num_edges(),
            size_after: h.size(),
            rounds: 0,
            deleted_by_rule: RuleCounts::default(),
            budget_delta: 0,
            infeasible: false,
            bound_2_alpha_nabla: None,
            matching_bound: None,
            wall_times_ms: BTreeMap::new(),
        }
    }

    pub fn add_time(&mut self, phase: &str, elapsed: Duration) {
        *self.wall_times_ms.entry(phase.to_string()).or_insert(0.0) += elapsed.as_secs_f64() * 1e3;
    }

    /// Fills the "after" fields from the final residual state.
    pub fn finish(&mut self, res: &Residual<'_>, total: Duration) {
        self.n_after = res.num_alive_vertices();
        self.m_after = res.num_alive_edges();
        self.size_after = res.size();
        self.budget_delta = res.budget_delta();
        self.add_time("total", total);
    }

    /// `n_after + m_after ≤ 2α∇(I(H))`, when the bound was computed.
    pub fn within_kernel_bound(&self) -> Option<bool> {
        self.bound_2_alpha_nabla
            .map(|b| self.n_after + self.m_after <= b)
    }

    /// `rounds ≤ ν(I(H)) + 1`, when the matching number was computed.
    pub fn within_round_bound(&self) -> Option<bool> {
        self.matching_bound.map(|nu| self.rounds <= nu + 1)
    }
}
