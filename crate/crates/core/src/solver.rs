//! Exact branch-and-bound solver for Multiple Hitting Set:
//! minimise `|S|` subject to `|e ∩ S| ≥ f(e)` for every edge.
//!
//! Branching picks the unsatisfied edge with the largest ratio of residual
//! demand to undecided vertices and splits on its undecided vertex that
//! occurs in the most unsatisfied edges (include first, then exclude). The
//! lower bound sums residual demands over a greedy family of edges with
//! pairwise disjoint undecided vertices.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::SolveError;
use crate::hypergraph::Hypergraph;
use crate::rules::LowerBound;

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    Infeasible,
    /// Optimal, but larger than the instance's budget.
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    /// Chosen vertices in increasing order; empty when infeasible.
    pub chosen: Vec<usize>,
    pub status: Status,
    /// Search nodes visited.
    pub nodes: u64,
}

impl Solution {
    pub fn cardinality(&self) -> usize {
        self.chosen.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

struct Search<'a> {
    h: &'a Hypergraph,
    incidences: Vec<Vec<usize>>,
    residual: Vec<u32>,
    open_count: Vec<usize>,
    decision: Vec<Decision>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    limit: u64,
    marks: Vec<bool>,
}

impl Search<'_> {
    fn include(&mut self, v: usize) {
        self.decision[v] = Decision::In;
        self.chosen.push(v);
        for &e in &self.incidences[v] {
            self.open_count[e] -= 1;
            self.residual[e] = self.residual[e].saturating_sub(1);
        }
    }

    fn undo_include(&mut self, v: usize, hits: &[bool]) {
        for (k, &e) in self.incidences[v].iter().enumerate() {
            self.open_count[e] += 1;
            if hits[k] {
                self.residual[e] += 1;
            }
        }
        self.chosen.pop();
        self.decision[v] = Decision::Open;
    }

    fn exclude(&mut self, v: usize) {
        self.decision[v] = Decision::Out;
        for &e in &self.incidences[v] {
            self.open_count[e] -= 1;
        }
    }

    fn undo_exclude(&mut self, v: usize) {
        for &e in &self.incidences[v] {
            self.open_count[e] += 1;
        }
        self.decision[v] = Decision::Open;
    }

    fn packing_bound(&mut self, open_edges: &[usize]) -> usize {
        let mut order: Vec<usize> = open_edges.to_vec();
        order.sort_by(|&a, &b| self.residual[b].cmp(&self.residual[a]).then(a.cmp(&b)));
        let mut bound = 0;
        let mut touched = Vec::new();
        for e in order {
            let free = self
                .h
                .edge(e)
                .iter()
                .all(|&v| self.decision[v] != Decision::Open || !self.marks[v]);
            if free {
                bound += self.residual[e] as usize;
                for &v in self.h.edge(e) {
                    if self.decision[v] == Decision::Open {
                        self.marks[v] = true;
                        touched.push(v);
                    }
                }
            }
        }
        for v in touched {
            self.marks[v] = false;
        }
        bound
    }

    fn run(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(SolveError::NodeLimit(self.limit));
        }

        let open_edges: Vec<usize> = (0..self.residual.len())
            .filter(|&e| self.residual[e] > 0)
            .collect();
        if open_edges.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if open_edges
            .iter()
            .any(|&e| self.residual[e] as usize > self.open_count[e])
        {
            return Ok(());
        }
        if self.chosen.len() + self.packing_bound(&open_edges) >= self.best.len() {
            return Ok(());
        }

        // Edge with the largest residual/open ratio; ties go to the lower index.
        let edge = *open_edges
            .iter()
            .max_by(|&&a, &&b| {
                let lhs = self.residual[a] as usize * self.open_count[b];
                let rhs = self.residual[b] as usize * self.open_count[a];
                lhs.cmp(&rhs).then(b.cmp(&a))
            })
            .unwrap();
        let vertex = self
            .h
            .edge(edge)
            .iter()
            .copied()
            .filter(|&v| self.decision[v] == Decision::Open)
            .max_by(|&a, &b| {
                let da = self.incidences[a]
                    .iter()
                    .filter(|&&e| self.residual[e] > 0)
                    .count();
                let db = self.incidences[b]
                    .iter()
                    .filter(|&&e| self.residual[e] > 0)
                    .count();
                match da.cmp(&db) {
                    Ordering::Equal => b.cmp(&a),
                    other => other,
                }
            })
            .expect("open edge with positive residual has an open vertex");

        let hits: Vec<bool> = self.incidences[vertex]
            .iter()
            .map(|&e| self.residual[e] > 0)
            .collect();
        self.include(vertex);
        let r = self.run();
        self.undo_include(vertex, &hits);
        r?;

        self.exclude(vertex);
        let r = self.run();
        self.undo_exclude(vertex);
        r
    }
}

/// Minimum multiple hitting set of `h`.
pub fn solve_opt(h: &Hypergraph, node_limit: u64) -> Result<Solution, SolveError> {
    if let Some(e) = (0..h.num_edges()).find(|&e| h.demand(e) as usize > h.edge(e).len()) {
        log::debug!("edge {e} demands more than its size");
        return Ok(Solution {
            chosen: Vec::new(),
            status: Status::Infeasible,
            nodes: 0,
        });
    }
    let n = h.num_vertices();
    let mut search = Search {
        h,
        incidences: h.vertex_incidences(),
        residual: h.demands().to_vec(),
        open_count: h.edges().iter().map(Vec::len).collect(),
        decision: vec![Decision::Open; n],
        chosen: Vec::new(),
        best: (0..n).collect(),
        nodes: 0,
        limit: node_limit,
        marks: vec![false; n],
    };
    search.run()?;
    let mut chosen = search.best;
    chosen.sort_unstable();
    let status = match h.budget() {
        Some(k) if chosen.len() as i64 > k => Status::BudgetExceeded,
        _ => Status::Optimal,
    };
    Ok(Solution {
        chosen,
        status,
        nodes: search.nodes,
    })
}

/// Whether `chosen` meets every demand of `h`.
pub fn verify_solution(h: &Hypergraph, chosen: &[usize]) -> Result<bool, SolveError> {
    let mut member = vec![false; h.num_vertices()];
    for &v in chosen {
        if v >= h.num_vertices() {
            return Err(SolveError::UnknownVertex(v));
        }
        member[v] = true;
    }
    Ok(h.edges()
        .iter()
        .zip(h.demands())
        .all(|(e, &f)| e.iter().filter(|&&v| member[v]).count() >= f as usize))
}

/// Exact optimum as a lower bound, for the LP rule.
#[derive(Debug, Clone, Copy)]
pub struct ExactBound {
    pub node_limit: u64,
}

impl Default for ExactBound {
    fn default() -> Self {
        ExactBound {
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

impl LowerBound for ExactBound {
    fn lower_bound(&self, h: &Hypergraph) -> Option<usize> {
        match solve_opt(h, self.node_limit) {
            Ok(s) if s.status != Status::Infeasible => Some(s.cardinality()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn counterexample_optimum() {
        let ce = instances::counterexample();
        let s = solve_opt(&ce, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(s.status, Status::Optimal);
        assert_eq!(s.chosen, vec![0, 1, 2]);
        assert!(verify_solution(&ce, &s.chosen).unwrap());
    }

    #[test]
    fn counterexample_without_v3() {
        let ce = instances::counterexample();
        let k = ce.restrict(&[0, 1, 3, 4], &[0, 1, 2], ce.demands(), None);
        let s = solve_opt(&k.graph, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(s.cardinality(), 4);
    }

    #[test]
    fn singletons() {
        for n in 0..8 {
            let s = solve_opt(&instances::disjoint_singletons(n), 1000).unwrap();
            assert_eq!(s.cardinality(), n);
        }
    }

    #[test]
    fn verify_examples() {
        let ce = instances::counterexample();
        assert!(!verify_solution(&ce, &[1, 2]).unwrap());
        assert!(verify_solution(&ce, &[0, 1, 2, 3, 4]).unwrap());
        assert_eq!(
            verify_solution(&ce, &[7]),
            Err(SolveError::UnknownVertex(7))
        );
        let bad = Hypergraph::new(1, vec![vec![0]], vec![2], None).unwrap();
        assert!(!verify_solution(&bad, &[0]).unwrap());
    }

    #[test]
    fn infeasible_and_budget() {
        let bad = Hypergraph::new(1, vec![vec![0]], vec![2], None).unwrap();
        assert_eq!(solve_opt(&bad, 10).unwrap().status, Status::Infeasible);
        let tight = instances::counterexample().with_budget(Some(2));
        let s = solve_opt(&tight, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(s.status, Status::BudgetExceeded);
        assert_eq!(s.cardinality(), 3);
    }

    #[test]
    fn node_limit_is_reported() {
        let h = Hypergraph::new(
            12,
            (0..11).map(|i| vec![i, i + 1]).collect(),
            vec![1; 11],
            None,
        )
        .unwrap();
        assert_eq!(solve_opt(&h, 1), Err(SolveError::NodeLimit(1)));
        assert_eq!(solve_opt(&h, DEFAULT_NODE_LIMIT).unwrap().cardinality(), 6);
    }
}
