//! Sequential DP + MD reduction with incrementally maintained intersection
//! counts.
//!
//! The state keeps `I^E[i][j] = |e_i ∩ e_j|` and `I^V[i][j] = |E(v_i) ∩ E(v_j)|`
//! over alive items and updates them on every deletion instead of
//! recomputing. Candidate lists narrow each phase to the items whose status
//! can have changed since the previous phase:
//!
//! * `P^E` holds every edge that may supersede another;
//! * `P^V` holds every vertex that MD may delete.
//!
//! Each phase deletes exactly what the corresponding parallel phase deletes.

use std::time::Instant;

use crate::hypergraph::{Hypergraph, Kernel};
use crate::incidence::CountMatrix;
use crate::report::KernelReport;
use crate::rules::Residual;

#[derive(Debug, Clone)]
pub struct ReductionState<'a> {
    graph: &'a Hypergraph,
    incidences: Vec<Vec<usize>>,
    edge_counts: CountMatrix,
    vertex_counts: CountMatrix,
    edge_alive: Vec<bool>,
    vertex_alive: Vec<bool>,
    edge_candidates: Vec<usize>,
    vertex_candidates: Vec<usize>,
    insertions: usize,
}

impl<'a> ReductionState<'a> {
    /// State for `h` with everything alive.
    pub fn new(h: &'a Hypergraph) -> Self {
        Self::from_residual(&Residual::new(h))
    }

    /// State for the alive part of `res`. Dead rows and columns stay zero and
    /// are never read.
    pub fn from_residual(res: &Residual<'a>) -> Self {
        let graph = res.graph();
        let (n, m) = (graph.num_vertices(), graph.num_edges());
        let edge_alive = res.edge_alive().to_vec();
        let vertex_alive = res.vertex_alive().to_vec();
        let incidences = graph.vertex_incidences();

        // Every alive vertex lies in each pairwise intersection of its edges.
        let mut edge_counts = CountMatrix::zeros(m);
        for v in (0..n).filter(|&v| vertex_alive[v]) {
            let live: Vec<usize> = incidences[v]
                .iter()
                .copied()
                .filter(|&e| edge_alive[e])
                .collect();
            for &a in &live {
                for &b in &live {
                    *edge_counts.get_mut(a, b) += 1;
                }
            }
        }
        let mut vertex_counts = CountMatrix::zeros(n);
        for e in (0..m).filter(|&e| edge_alive[e]) {
            let live: Vec<usize> = graph
                .edge(e)
                .iter()
                .copied()
                .filter(|&v| vertex_alive[v])
                .collect();
            for &a in &live {
                for &b in &live {
                    *vertex_counts.get_mut(a, b) += 1;
                }
            }
        }

        let edge_candidates: Vec<usize> = (0..m).filter(|&e| edge_alive[e]).collect();
        let vertex_candidates: Vec<usize> = (0..n).filter(|&v| vertex_alive[v]).collect();
        let insertions = edge_candidates.len() + vertex_candidates.len();
        ReductionState {
            graph,
            incidences,
            edge_counts,
            vertex_counts,
            edge_alive,
            vertex_alive,
            edge_candidates,
            vertex_candidates,
            insertions,
        }
    }

    pub fn edge_alive(&self) -> &[bool] {
        &self.edge_alive
    }

    pub fn vertex_alive(&self) -> &[bool] {
        &self.vertex_alive
    }

    /// `|e_i ∩ e_j|`, or `None` if either edge is dead.
    pub fn edge_intersection(&self, i: usize, j: usize) -> Option<u32> {
        (self.edge_alive[i] && self.edge_alive[j]).then(|| self.edge_counts.get(i, j))
    }

    /// `|E(v_i) ∩ E(v_j)|`, or `None` if either vertex is dead.
    pub fn vertex_intersection(&self, i: usize, j: usize) -> Option<u32> {
        (self.vertex_alive[i] && self.vertex_alive[j]).then(|| self.vertex_counts.get(i, j))
    }

    pub fn edge_candidates(&self) -> &[usize] {
        &self.edge_candidates
    }

    pub fn vertex_candidates(&self) -> &[usize] {
        &self.vertex_candidates
    }

    /// Total number of entries ever pushed onto `P^E` and `P^V`.
    pub fn candidate_insertions(&self) -> usize {
        self.insertions
    }

    fn live_vertices_of(&self, e: usize) -> Vec<usize> {
        self.graph
            .edge(e)
            .iter()
            .copied()
            .filter(|&v| self.vertex_alive[v])
            .collect()
    }

    fn live_edges_of(&self, v: usize) -> Vec<usize> {
        self.incidences[v]
            .iter()
            .copied()
            .filter(|&e| self.edge_alive[e])
            .collect()
    }

    /// Exhaustive DP. Returns the deleted edges.
    pub fn reduce_edges(&mut self, demands: &[u32]) -> Vec<usize> {
        let ie = &self.edge_counts;
        let supersedes = |i: usize, j: usize| {
            let outside = (ie.get(i, i) - ie.get(i, j)) as i64;
            demands[i] as i64 - outside >= demands[j] as i64
        };
        let mut doomed = Vec::new();
        for j in (0..self.edge_alive.len()).filter(|&j| self.edge_alive[j]) {
            for &i in &self.edge_candidates {
                if i == j || !self.edge_alive[i] {
                    continue;
                }
                if supersedes(i, j) && (!supersedes(j, i) || i < j) {
                    doomed.push(j);
                    break;
                }
            }
        }

        for &j in &doomed {
            self.edge_alive[j] = false;
            let members = self.live_vertices_of(j);
            for &a in &members {
                for &b in &members {
                    *self.vertex_counts.get_mut(a, b) -= 1;
                }
            }
            self.insertions += members.len();
            self.vertex_candidates.extend(members);
        }
        self.edge_candidates.clear();
        doomed
    }

    /// Exhaustive MD. Returns the deleted vertices.
    pub fn reduce_vertices(&mut self, demands: &[u32]) -> Vec<usize> {
        let iv = &self.vertex_counts;
        let mut doomed = Vec::new();
        for &j in &self.vertex_candidates {
            if !self.vertex_alive[j] {
                continue;
            }
            // Dominators v_j still needs.
            let mut needed = self.incidences[j]
                .iter()
                .filter(|&&e| self.edge_alive[e])
                .map(|&e| demands[e])
                .max()
                .unwrap_or(0);
            if needed == 0 {
                doomed.push(j);
                continue;
            }
            for i in 0..self.vertex_alive.len() {
                if i == j || !self.vertex_alive[i] {
                    continue;
                }
                let common = iv.get(i, j);
                if common == iv.get(j, j) && (common != iv.get(i, i) || i < j) {
                    needed -= 1;
                    if needed == 0 {
                        doomed.push(j);
                        break;
                    }
                }
            }
        }

        // P^V may list a vertex twice; only the first copy is committed.
        let mut deleted = Vec::with_capacity(doomed.len());
        for j in doomed {
            if !self.vertex_alive[j] {
                continue;
            }
            self.vertex_alive[j] = false;
            let edges = self.live_edges_of(j);
            for &a in &edges {
                for &b in &edges {
                    *self.edge_counts.get_mut(a, b) -= 1;
                }
            }
            self.insertions += edges.len();
            self.edge_candidates.extend(edges);
            deleted.push(j);
        }
        self.vertex_candidates.clear();
        deleted
    }

    /// Alternates both phases until neither deletes anything. Returns the
    /// number of rounds, counting the final unproductive one.
    pub fn reduce(&mut self, demands: &[u32], report: &mut KernelReport) -> usize {
        let mut rounds = 0;
        loop {
            rounds += 1;
            let t = Instant::now();
            let edges = self.reduce_edges(demands);
            report.add_time("dp", t.elapsed());
            let t = Instant::now();
            let vertices = self.reduce_vertices(demands);
            report.add_time("md", t.elapsed());
            report.deleted_by_rule.dp += edges.len();
            report.deleted_by_rule.md += vertices.len();
            if edges.is_empty() && vertices.is_empty() {
                return rounds;
            }
        }
    }

    /// Copies deletions into `res`.
    pub fn write_back(&self, res: &mut Residual<'_>) {
        for (e, &alive) in self.edge_alive.iter().enumerate() {
            if !alive && res.is_edge_alive(e) {
                res.remove_edge(e);
            }
        }
        for (v, &alive) in self.vertex_alive.iter().enumerate() {
            if !alive && res.is_vertex_alive(v) {
                res.remove_vertex(v);
            }
        }
    }
}

/// Exhaustive DP + MD on `h`.
pub fn seq_kernelize(h: &Hypergraph) -> (Kernel, KernelReport) {
    let start = Instant::now();
    let mut report = KernelReport::start(h);
    let mut res = Residual::new(h);
    let t = Instant::now();
    let mut state = ReductionState::from_residual(&res);
    report.add_time("init", t.elapsed());
    report.rounds = state.reduce(h.demands(), &mut report);
    state.write_back(&mut res);
    report.finish(&res, start.elapsed());
    (res.to_kernel(), report)
}
