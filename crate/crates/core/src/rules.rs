//! Data reduction rules for Multiple Hitting Set.
//!
//! * **FE** (full edge): an edge with `|e| = f(e)` forces all its vertices into
//!   the solution.
//! * **SE** (superedge): `e_i ⊆ e_j` and `f(e_i) ≥ f(e_j)` make `e_j` redundant.
//! * **DP** (demand pushing): `e_i` supersedes `e_j` when
//!   `f(e_i) − |e_i \ e_j| ≥ f(e_j)`; then `e_j` is redundant.
//! * **LP** (lower bound): `e_j` is redundant when the demand the other edges
//!   push into it already requires `f(e_j)` of its vertices.
//! * **MD** (multiple domination): `v_j` may go once it has at least
//!   `max_{e ∋ v_j} f(e)` dominators, i.e. vertices `v_i` with
//!   `E(v_j) ⊆ E(v_i)`.
//!
//! All rules act on a [`Residual`]: the input hypergraph plus tombstones and
//! the current demands. Indices are never renumbered.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::RuleError;
use crate::hypergraph::{Feasibility, Hypergraph, Kernel};
use crate::incidence::IncidenceMatrix;

/// Current state of a hypergraph under reduction.
#[derive(Debug, Clone)]
pub struct Residual<'a> {
    graph: &'a Hypergraph,
    incidences: Vec<Vec<usize>>,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    demands: Vec<u32>,
    sizes: Vec<usize>,
    budget_delta: usize,
}

/// Alive part of a [`Residual`] as a dense incidence matrix. Row and column
/// order follows the original indices, so index comparisons in the compacted
/// view agree with comparisons of original indices.
#[derive(Debug, Clone)]
pub struct Compacted {
    pub matrix: IncidenceMatrix,
    pub demands: Vec<u32>,
    pub vertex_ids: Vec<usize>,
    pub edge_ids: Vec<usize>,
}

/// What an exhaustive rule application changed. All indices are original.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub deleted_edges: Vec<usize>,
    pub deleted_vertices: Vec<usize>,
    pub demand_decrements: BTreeMap<usize, u32>,
    /// Vertices forced into the solution.
    pub budget_delta: usize,
    pub infeasible: bool,
}

/// Provides a lower bound on the size of a minimum multiple hitting set.
pub trait LowerBound {
    /// `None` when no bound could be obtained.
    fn lower_bound(&self, h: &Hypergraph) -> Option<usize>;
}

/// The largest single demand: any solution hits that edge often enough.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxDemandBound;

impl LowerBound for MaxDemandBound {
    fn lower_bound(&self, h: &Hypergraph) -> Option<usize> {
        Some(h.alpha() as usize)
    }
}

impl<'a> Residual<'a> {
    pub fn new(graph: &'a Hypergraph) -> Self {
        Residual {
            graph,
            incidences: graph.vertex_incidences(),
            vertex_alive: vec![true; graph.num_vertices()],
            edge_alive: vec![true; graph.num_edges()],
            demands: graph.demands().to_vec(),
            sizes: graph.edges().iter().map(Vec::len).collect(),
            budget_delta: 0,
        }
    }

    pub fn graph(&self) -> &'a Hypergraph {
        self.graph
    }

    pub fn vertex_alive(&self) -> &[bool] {
        &self.vertex_alive
    }

    pub fn edge_alive(&self) -> &[bool] {
        &self.edge_alive
    }

    pub fn is_vertex_alive(&self, v: usize) -> bool {
        self.vertex_alive[v]
    }

    pub fn is_edge_alive(&self, e: usize) -> bool {
        self.edge_alive[e]
    }

    pub fn alive_vertices(&self) -> Vec<usize> {
        (0..self.vertex_alive.len())
            .filter(|&v| self.vertex_alive[v])
            .collect()
    }

    pub fn alive_edges(&self) -> Vec<usize> {
        (0..self.edge_alive.len())
            .filter(|&e| self.edge_alive[e])
            .collect()
    }

    pub fn num_alive_vertices(&self) -> usize {
        self.vertex_alive.iter().filter(|&&a| a).count()
    }

    pub fn num_alive_edges(&self) -> usize {
        self.edge_alive.iter().filter(|&&a| a).count()
    }

    /// `|V| + Σ|e|` over alive items.
    pub fn size(&self) -> usize {
        self.num_alive_vertices()
            + (0..self.sizes.len())
                .filter(|&e| self.edge_alive[e])
                .map(|e| self.sizes[e])
                .sum::<usize>()
    }

    pub fn demands(&self) -> &[u32] {
        &self.demands
    }

    pub fn demand(&self, e: usize) -> u32 {
        self.demands[e]
    }

    /// Number of alive vertices in `e`.
    pub fn live_size(&self, e: usize) -> usize {
        self.sizes[e]
    }

    pub fn live_edge(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph
            .edge(e)
            .iter()
            .copied()
            .filter(|&v| self.vertex_alive[v])
    }

    /// Alive edges containing `v`.
    pub fn live_incidence(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidences[v]
            .iter()
            .copied()
            .filter(|&e| self.edge_alive[e])
    }

    /// All edges of the input containing `v`, alive or not.
    pub fn incidence(&self, v: usize) -> &[usize] {
        &self.incidences[v]
    }

    pub fn budget_delta(&self) -> usize {
        self.budget_delta
    }

    pub fn remaining_budget(&self) -> Option<i64> {
        self.graph.budget().map(|k| k - self.budget_delta as i64)
    }

    pub fn remove_edge(&mut self, e: usize) {
        debug_assert!(self.edge_alive[e]);
        self.edge_alive[e] = false;
    }

    pub fn remove_vertex(&mut self, v: usize) {
        debug_assert!(self.vertex_alive[v]);
        self.vertex_alive[v] = false;
        for &e in &self.incidences[v] {
            self.sizes[e] -= 1;
        }
    }

    pub fn check_feasibility(&self) -> Feasibility {
        if let Some(k) = self.remaining_budget() {
            if k < 0 {
                return Feasibility::NegativeBudget(k);
            }
        }
        for e in 0..self.sizes.len() {
            if self.edge_alive[e] && self.demands[e] as usize > self.sizes[e] {
                return Feasibility::DemandExceedsSize {
                    edge: e,
                    demand: self.demands[e],
                    size: self.sizes[e],
                };
            }
        }
        Feasibility::Feasible
    }

    /// The alive sub-hypergraph, renumbered, with current demands and the
    /// remaining budget.
    pub fn to_kernel(&self) -> Kernel {
        self.graph.restrict(
            &self.alive_vertices(),
            &self.alive_edges(),
            &self.demands,
            self.remaining_budget(),
        )
    }

    pub fn compact(&self) -> Compacted {
        let vertex_ids = self.alive_vertices();
        let edge_ids = self.alive_edges();
        let mut new_index = vec![usize::MAX; self.vertex_alive.len()];
        for (k, &v) in vertex_ids.iter().enumerate() {
            new_index[v] = k;
        }
        let rows: Vec<Vec<usize>> = edge_ids
            .iter()
            .map(|&e| self.live_edge(e).map(|v| new_index[v]).collect())
            .collect();
        let matrix = IncidenceMatrix::from_edges(vertex_ids.len(), rows.iter().map(Vec::as_slice));
        Compacted {
            matrix,
            demands: edge_ids.iter().map(|&e| self.demands[e]).collect(),
            vertex_ids,
            edge_ids,
        }
    }

    fn require_edge(&self, e: usize) -> Result<(), RuleError> {
        match self.edge_alive.get(e) {
            None => Err(RuleError::UnknownEdge(e)),
            Some(false) => Err(RuleError::DeadEdge(e)),
            Some(true) => Ok(()),
        }
    }

    fn require_vertex(&self, v: usize) -> Result<(), RuleError> {
        match self.vertex_alive.get(v) {
            None => Err(RuleError::UnknownVertex(v)),
            Some(false) => Err(RuleError::DeadVertex(v)),
            Some(true) => Ok(()),
        }
    }

    /// `|e_i ∩ e_j|` over alive vertices.
    pub fn live_intersection(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.graph.edge(i), self.graph.edge(j));
        let (mut x, mut y, mut count) = (0, 0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    if self.vertex_alive[a[x]] {
                        count += 1;
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        count
    }

    /// Demand `e_i` pushes into `e_j`: `f(e_i) − |e_i \ e_j|`.
    pub fn pushed_demand(&self, i: usize, j: usize) -> i64 {
        let outside = self.sizes[i] - self.live_intersection(i, j);
        self.demands[i] as i64 - outside as i64
    }

    /// Whether `e_i` supersedes `e_j`.
    pub fn supersedes(&self, i: usize, j: usize) -> Result<bool, RuleError> {
        self.require_edge(i)?;
        self.require_edge(j)?;
        if i == j {
            return Err(RuleError::SameEdge);
        }
        Ok(self.pushed_demand(i, j) >= self.demands[j] as i64)
    }

    /// Alive `v_i ≠ v_j` with `E(v_j) ⊆ E(v_i)` over alive edges.
    pub fn dominators(&self, j: usize) -> Result<Vec<usize>, RuleError> {
        self.require_vertex(j)?;
        let own: Vec<usize> = self.live_incidence(j).collect();
        Ok((0..self.vertex_alive.len())
            .filter(|&i| i != j && self.vertex_alive[i])
            .filter(|&i| {
                own.iter()
                    .all(|&e| self.graph.edge(e).binary_search(&i).is_ok())
            })
            .collect())
    }

    /// Largest demand among alive edges containing `v`; 0 if there are none.
    pub fn max_live_demand(&self, v: usize) -> u32 {
        self.live_incidence(v)
            .map(|e| self.demands[e])
            .max()
            .unwrap_or(0)
    }

    /// Whether MD may delete `v_j`.
    pub fn md_applicable(&self, j: usize) -> Result<bool, RuleError> {
        let doms = self.dominators(j)?;
        Ok(doms.len() >= self.max_live_demand(j) as usize)
    }

    /// Applies FE until no alive edge is full, cascading demand decrements.
    pub fn apply_full_edges(&mut self) -> RuleOutcome {
        let mut out = RuleOutcome::default();
        if !self.check_feasibility().is_feasible() {
            out.infeasible = true;
            return out;
        }
        let mut queue: Vec<usize> = self
            .alive_edges()
            .into_iter()
            .filter(|&e| self.sizes[e] == self.demands[e] as usize)
            .rev()
            .collect();
        while let Some(e) = queue.pop() {
            if !self.edge_alive[e] {
                continue;
            }
            self.remove_edge(e);
            out.deleted_edges.push(e);
            let forced: Vec<usize> = self.live_edge(e).collect();
            for v in forced {
                self.remove_vertex(v);
                out.deleted_vertices.push(v);
                self.budget_delta += 1;
                out.budget_delta += 1;
                for k in 0..self.incidences[v].len() {
                    let other = self.incidences[v][k];
                    if !self.edge_alive[other] {
                        continue;
                    }
                    self.demands[other] -= 1;
                    *out.demand_decrements.entry(other).or_insert(0) += 1;
                    if self.demands[other] == 0 {
                        self.remove_edge(other);
                        out.deleted_edges.push(other);
                    } else if self.sizes[other] == self.demands[other] as usize {
                        queue.push(other);
                    }
                }
            }
        }
        out.infeasible = !self.check_feasibility().is_feasible();
        out
    }

    /// Applies SE exhaustively in one simultaneous pass, breaking mutual
    /// containment in favour of the lower index. Returns the deleted edges.
    pub fn apply_superset_edges(&mut self) -> Vec<usize> {
        let alive = self.alive_edges();
        let covers = |i: usize, j: usize| {
            self.demands[i] >= self.demands[j] && self.live_intersection(i, j) == self.sizes[i]
        };
        let doomed: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&j| {
                alive
                    .iter()
                    .any(|&i| i != j && covers(i, j) && (!covers(j, i) || i < j))
            })
            .collect();
        for &e in &doomed {
            self.remove_edge(e);
        }
        doomed
    }

    /// The instance `H_j` on the vertices of `e_j`: every other alive edge
    /// `e_i` contributes `e_i ∩ e_j` with demand `f(e_i) − |e_i \ e_j|` when
    /// that is positive. Vertices are renumbered in the order of `e_j`.
    pub fn pushed_subinstance(&self, j: usize) -> Result<Hypergraph, RuleError> {
        self.require_edge(j)?;
        let members: Vec<usize> = self.live_edge(j).collect();
        let mut local = BTreeMap::new();
        for (k, &v) in members.iter().enumerate() {
            local.insert(v, k);
        }
        let mut edges = Vec::new();
        let mut demands = Vec::new();
        for i in 0..self.edge_alive.len() {
            if i == j || !self.edge_alive[i] {
                continue;
            }
            let pushed = self.pushed_demand(i, j);
            if pushed < 1 {
                continue;
            }
            let shared: Vec<usize> = self
                .live_edge(i)
                .filter_map(|v| local.get(&v).copied())
                .collect();
            edges.push(shared);
            demands.push(pushed as u32);
        }
        Ok(Hypergraph::new(members.len(), edges, demands, None).expect("sub-instance is valid"))
    }

    /// Whether LP deletes `e_j` given the bound provider. A failed bound
    /// counts as "not applicable".
    pub fn lp_applicable(&self, j: usize, oracle: &dyn LowerBound) -> Result<bool, RuleError> {
        let sub = self.pushed_subinstance(j)?;
        if sub.num_edges() == 0 {
            return Ok(false);
        }
        Ok(oracle
            .lower_bound(&sub)
            .is_some_and(|bound| bound >= self.demands[j] as usize))
    }

    /// Applies LP edge by edge in index order, re-reading the state after every
    /// deletion. Deleting an edge can only shrink the other sub-instances, so a
    /// single pass is exhaustive.
    pub fn apply_lower_bound_rule(&mut self, oracle: &dyn LowerBound) -> Vec<usize> {
        let mut deleted = Vec::new();
        for j in 0..self.edge_alive.len() {
            if self.edge_alive[j] && self.lp_applicable(j, oracle).unwrap_or(false) {
                self.remove_edge(j);
                deleted.push(j);
            }
        }
        deleted
    }
}

/// FE to exhaustion on a fresh copy of `h`.
pub fn apply_fe_exhaustively(h: &Hypergraph) -> (Kernel, RuleOutcome) {
    let mut res = Residual::new(h);
    let outcome = res.apply_full_edges();
    (res.to_kernel(), outcome)
}
