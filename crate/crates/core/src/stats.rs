//! Structural parameters of an instance, computed on demand.

use serde::Serialize;

use crate::hypergraph::Hypergraph;
use crate::params::{dilworth_number, incidence_graph, neighborhood_diversity};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StatsRequest {
    pub size: bool,
    pub dilworth: bool,
    pub diversity: bool,
    pub matching: bool,
}

impl StatsRequest {
    pub fn all() -> Self {
        StatsRequest {
            size: true,
            dilworth: true,
            diversity: true,
            matching: true,
        }
    }
}

/// Parameters of `I(H)`; unrequested ones are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    pub size: Option<usize>,
    pub alpha: u32,
    pub dilworth: Option<usize>,
    pub diversity: Option<usize>,
    pub matching: Option<usize>,
}

pub fn compute_stats(h: &Hypergraph, req: &StatsRequest) -> Stats {
    let ig = incidence_graph(h);
    Stats {
        n: h.num_vertices(),
        m: h.num_edges(),
        size: req.size.then(|| h.size()),
        alpha: h.alpha(),
        dilworth: req.dilworth.then(|| dilworth_number(ig.graph())),
        diversity: req.diversity.then(|| neighborhood_diversity(ig.graph())),
        matching: req.matching.then(|| ig.matching_number()),
    }
}
