//! Round-based data-parallel reduction.
//!
//! Each phase evaluates a rule for every pair of items against the same
//! snapshot of the incidence matrix, then commits all deletions at once.
//! Simultaneous deletion is made safe by an index tie-break: when two items
//! could delete each other, only the one with the larger index goes.
//!
//! Every cell of the relation matrices is computed independently, so the
//! result does not depend on the number of worker threads.

use std::time::Instant;

use rayon::prelude::*;

use crate::hypergraph::{Hypergraph, Kernel};
use crate::incidence::{BitRows, IncidenceMatrix};
use crate::report::KernelReport;
use crate::rules::Residual;

/// `D[i][j] = 1` iff edge `i` supersedes edge `j` (`i ≠ j`).
pub fn supersedence_relation(a: &IncidenceMatrix, demands: &[u32]) -> BitRows {
    let m = a.rows();
    let sets = a.edge_sets();
    let sizes: Vec<u32> = (0..m).map(|i| sets.count(i)).collect();
    let rows: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|i| {
            (0..m)
                .filter(|&j| {
                    if i == j {
                        return false;
                    }
                    let outside = (sizes[i] - sets.intersection_count(i, j)) as i64;
                    demands[i] as i64 - outside >= demands[j] as i64
                })
                .collect()
        })
        .collect();
    to_bitrows(m, &rows)
}

/// `D[i][j] = 1` iff vertex `i` dominates vertex `j` after the tie-break:
/// `E(v_j) ⊆ E(v_i)` and, if the two are equal, `i < j`.
pub fn domination_relation(a: &IncidenceMatrix) -> BitRows {
    let n = a.cols();
    let sets = a.vertex_sets();
    let degrees: Vec<u32> = (0..n).map(|j| sets.count(j)).collect();
    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    if i == j {
                        return false;
                    }
                    let common = sets.intersection_count(i, j);
                    common == degrees[j] && (common != degrees[i] || i < j)
                })
                .collect()
        })
        .collect();
    to_bitrows(n, &rows)
}

fn to_bitrows(dim: usize, rows: &[Vec<usize>]) -> BitRows {
    let mut out = BitRows::new(dim, dim);
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            out.set(i, j);
        }
    }
    out
}

/// One exhaustive DP phase on a compacted matrix. Returns the keep-vector.
pub fn par_reduce_edges(a: &IncidenceMatrix, demands: &[u32]) -> Vec<bool> {
    let m = a.rows();
    let d = supersedence_relation(a, demands);
    (0..m)
        .into_par_iter()
        .map(|j| !(0..m).any(|i| d.get(i, j) && (!d.get(j, i) || i < j)))
        .collect()
}

/// One exhaustive MD phase on a compacted matrix. Returns the keep-vector.
pub fn par_reduce_vertices(a: &IncidenceMatrix, demands: &[u32]) -> Vec<bool> {
    let n = a.cols();
    let d = domination_relation(a);
    let vertex_sets = a.vertex_sets();
    (0..n)
        .into_par_iter()
        .map(|j| {
            let dominators = (0..n).filter(|&i| d.get(i, j)).count();
            let needed = vertex_sets
                .ones(j)
                .map(|e| demands[e] as usize)
                .max()
                .unwrap_or(0);
            dominators < needed
        })
        .collect()
}

/// Runs phases on a thread pool of fixed size.
#[derive(Debug)]
pub struct ParallelEngine {
    pool: rayon::ThreadPool,
}

impl ParallelEngine {
    /// `workers == 0` selects the number of available cores.
    pub fn new(workers: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        ParallelEngine { pool }
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Exhaustive DP on the alive part of `res`. Returns deleted edges.
    pub fn edge_phase(&self, res: &mut Residual<'_>) -> Vec<usize> {
        let c = res.compact();
        let keep = self
            .pool
            .install(|| par_reduce_edges(&c.matrix, &c.demands));
        let doomed: Vec<usize> = c
            .edge_ids
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| !k)
            .map(|(&e, _)| e)
            .collect();
        for &e in &doomed {
            res.remove_edge(e);
        }
        doomed
    }

    /// Exhaustive MD on the alive part of `res`. Returns deleted vertices.
    pub fn vertex_phase(&self, res: &mut Residual<'_>) -> Vec<usize> {
        let c = res.compact();
        let keep = self
            .pool
            .install(|| par_reduce_vertices(&c.matrix, &c.demands));
        let doomed: Vec<usize> = c
            .vertex_ids
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| !k)
            .map(|(&v, _)| v)
            .collect();
        for &v in &doomed {
            res.remove_vertex(v);
        }
        doomed
    }

    /// Alternates edge and vertex phases until a round deletes nothing.
    /// Returns the number of rounds, counting the final unproductive one.
    pub fn reduce(&self, res: &mut Residual<'_>, report: &mut KernelReport) -> usize {
        let mut rounds = 0;
        loop {
            rounds += 1;
            let t = Instant::now();
            let edges = self.edge_phase(res);
            report.add_time("dp", t.elapsed());
            let t = Instant::now();
            let vertices = self.vertex_phase(res);
            report.add_time("md", t.elapsed());
            report.deleted_by_rule.dp += edges.len();
            report.deleted_by_rule.md += vertices.len();
            if edges.is_empty() && vertices.is_empty() {
                return rounds;
            }
        }
    }

    /// Exhaustive DP + MD on `h`.
    pub fn kernelize(&self, h: &Hypergraph) -> (Kernel, KernelReport) {
        let start = Instant::now();
        let mut report = KernelReport::start(h);
        let mut res = Residual::new(h);
        report.rounds = self.reduce(&mut res, &mut report);
        report.finish(&res, start.elapsed());
        (res.to_kernel(), report)
    }
}

/// Exhaustive DP + MD with one worker per available core.
pub fn par_kernelize(h: &Hypergraph) -> (Kernel, KernelReport) {
    ParallelEngine::new(0).kernelize(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn hg(n: usize, edges: &[&[usize]], demands: &[u32]) -> Hypergraph {
        Hypergraph::new(
            n,
            edges.iter().map(|e| e.to_vec()).collect(),
            demands.to_vec(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn duplicate_edges_keep_lower_index() {
        let h = hg(1, &[&[0], &[0]], &[1, 1]);
        let a = h.incidence_matrix();
        let d = supersedence_relation(&a, h.demands());
        assert!(d.get(0, 1) && d.get(1, 0));
        assert_eq!(par_reduce_edges(&a, h.demands()), vec![true, false]);
    }

    #[test]
    fn counterexample_keeps_v3() {
        let ce = instances::counterexample();
        let a = ce.incidence_matrix();
        assert_eq!(par_reduce_edges(&a, ce.demands()), vec![true; 3]);
        assert_eq!(
            par_reduce_vertices(&a, ce.demands()),
            vec![true, true, true, false, false]
        );
    }

    #[test]
    fn one_way_supersedence() {
        let h = hg(4, &[&[0, 1, 2], &[2, 3]], &[3, 1]);
        assert_eq!(
            par_reduce_edges(&h.incidence_matrix(), h.demands()),
            vec![true, false]
        );
    }

    #[test]
    fn identical_columns_with_demand_two() {
        let h = hg(4, &[&[0, 1, 2], &[0, 1, 2, 3]], &[2, 2]);
        assert_eq!(
            par_reduce_vertices(&h.incidence_matrix(), h.demands()),
            vec![true, true, false, false]
        );
    }

    #[test]
    fn unit_demand_strict_domination() {
        let h = hg(2, &[&[0, 1], &[0]], &[1, 1]);
        assert_eq!(
            par_reduce_vertices(&h.incidence_matrix(), h.demands()),
            vec![true, false]
        );
    }

    #[test]
    fn kernelize_round_counts() {
        let engine = ParallelEngine::new(2);
        let (k, report) = engine.kernelize(&instances::disjoint_singletons(4));
        assert_eq!(k.graph, instances::disjoint_singletons(4));
        assert_eq!(report.rounds, 1);

        let (k, report) = engine.kernelize(&instances::counterexample());
        assert_eq!(k.vertex_origin, vec![0, 1, 2]);
        assert_eq!(k.edge_origin, vec![0, 1]);
        assert_eq!(report.rounds, 3);

        let h = hg(1, &[&[0], &[0]], &[1, 1]);
        let (k, report) = engine.kernelize(&h);
        assert_eq!(k.edge_origin, vec![0]);
        assert_eq!(report.rounds, 2);
        assert_eq!(report.deleted_by_rule.dp, 1);
    }
}
