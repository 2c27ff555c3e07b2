//! Instance model for Multiple Hitting Set: a hypergraph with per-edge demands
//! and an optional solution budget.
//!
//! Vertices and hyperedges are identified by their zero-based position in the
//! input. The text format uses one-based vertex numbers.

use std::fmt::Write as _;

use crate::error::{HypergraphError, ParseError, ParseErrorKind};
use crate::incidence::IncidenceMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<usize>>,
    demands: Vec<u32>,
    budget: Option<i64>,
    alpha: u32,
}

/// Outcome of [`Hypergraph::check_feasibility`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    /// Hyperedge `edge` asks for more hits than it has vertices.
    DemandExceedsSize {
        edge: usize,
        demand: u32,
        size: usize,
    },
    NegativeBudget(i64),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

impl Hypergraph {
    /// Builds a validated hypergraph. Each edge is sorted; repeated vertices
    /// within one edge, out-of-range vertices and zero demands are rejected.
    pub fn new(
        num_vertices: usize,
        edges: Vec<Vec<usize>>,
        demands: Vec<u32>,
        budget: Option<i64>,
    ) -> Result<Self, HypergraphError> {
        if edges.len() != demands.len() {
            return Err(HypergraphError::DemandCount {
                edges: edges.len(),
                demands: demands.len(),
            });
        }
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex {
                    edge: i,
                    vertex: w[0],
                });
            }
            if let Some(&v) = edge.last() {
                if v >= num_vertices {
                    return Err(HypergraphError::VertexOutOfRange {
                        edge: i,
                        vertex: v,
                        num_vertices,
                    });
                }
            }
        }
        if let Some(i) = demands.iter().position(|&d| d == 0) {
            return Err(HypergraphError::ZeroDemand { edge: i });
        }
        let alpha = demands.iter().copied().max().unwrap_or(0);
        Ok(Hypergraph {
            num_vertices,
            edges,
            demands,
            budget,
            alpha,
        })
    }

    pub fn empty() -> Self {
        Hypergraph {
            num_vertices: 0,
            edges: Vec::new(),
            demands: Vec::new(),
            budget: None,
            alpha: 0,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn demands(&self) -> &[u32] {
        &self.demands
    }

    pub fn demand(&self, i: usize) -> u32 {
        self.demands[i]
    }

    pub fn budget(&self) -> Option<i64> {
        self.budget
    }

    pub fn with_budget(mut self, budget: Option<i64>) -> Self {
        self.budget = budget;
        self
    }

    /// Largest demand; 0 when there are no edges.
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// `|V| + sum of |e|`.
    pub fn size(&self) -> usize {
        self.num_vertices + self.num_incidences()
    }

    pub fn num_incidences(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Indices of the hyperedges containing vertex `v`, in increasing order.
    pub fn edges_of(&self, v: usize) -> Result<Vec<usize>, HypergraphError> {
        if v >= self.num_vertices {
            return Err(HypergraphError::UnknownVertex {
                vertex: v,
                num_vertices: self.num_vertices,
            });
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect())
    }

    /// `E(v)` for every vertex at once.
    pub fn vertex_incidences(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.num_vertices];
        for (i, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn check_feasibility(&self) -> Feasibility {
        if let Some(k) = self.budget {
            if k < 0 {
                return Feasibility::NegativeBudget(k);
            }
        }
        for (i, edge) in self.edges.iter().enumerate() {
            if self.demands[i] as usize > edge.len() {
                return Feasibility::DemandExceedsSize {
                    edge: i,
                    demand: self.demands[i],
                    size: edge.len(),
                };
            }
        }
        Feasibility::Feasible
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        IncidenceMatrix::from_hypergraph(self)
    }

    /// Keeps the listed vertices and edges (both in increasing order), renumbering
    /// them densely. Demands are taken from `demands`, indexed by original edge.
    pub fn restrict(
        &self,
        vertices: &[usize],
        edges: &[usize],
        demands: &[u32],
        budget: Option<i64>,
    ) -> Kernel {
        let mut new_index = vec![usize::MAX; self.num_vertices];
        for (k, &v) in vertices.iter().enumerate() {
            new_index[v] = k;
        }
        let new_edges: Vec<Vec<usize>> = edges
            .iter()
            .map(|&i| {
                self.edges[i]
                    .iter()
                    .filter(|&&v| new_index[v] != usize::MAX)
                    .map(|&v| new_index[v])
                    .collect()
            })
            .collect();
        let new_demands = edges.iter().map(|&i| demands[i]).collect();
        let graph = Hypergraph::new(vertices.len(), new_edges, new_demands, budget)
            .expect("restriction of a valid hypergraph with positive demands is valid");
        Kernel {
            graph,
            vertex_origin: vertices.to_vec(),
            edge_origin: edges.to_vec(),
        }
    }

    /// Parses the line-oriented instance format:
    ///
    /// ```text
    /// # comment
    /// p mhs <n> <m> [k]
    /// e <demand> <v1> <v2> ...
    /// ```
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize, Option<i64>, usize)> = None;
        let mut edges = Vec::new();
        let mut demands = Vec::new();
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |kind| ParseError {
                line: line_no,
                kind,
            };
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(err(ParseErrorKind::DuplicateHeader));
                    }
                    if tokens.next() != Some("mhs") {
                        return Err(err(ParseErrorKind::MalformedHeader));
                    }
                    let rest: Vec<&str> = tokens.collect();
                    if rest.len() < 2 || rest.len() > 3 {
                        return Err(err(ParseErrorKind::MalformedHeader));
                    }
                    let n = rest[0]
                        .parse::<usize>()
                        .map_err(|_| err(ParseErrorKind::MalformedHeader))?;
                    let m = rest[1]
                        .parse::<usize>()
                        .map_err(|_| err(ParseErrorKind::MalformedHeader))?;
                    let k = match rest.get(2) {
                        Some(tok) => Some(
                            tok.parse::<u64>()
                                .ok()
                                .and_then(|k| i64::try_from(k).ok())
                                .ok_or_else(|| err(ParseErrorKind::MalformedHeader))?,
                        ),
                        None => None,
                    };
                    header = Some((n, m, k, line_no));
                }
                Some("e") => {
                    let Some((n, m, _, _)) = header else {
                        return Err(err(ParseErrorKind::MissingHeader));
                    };
                    if edges.len() == m {
                        return Err(err(ParseErrorKind::TooManyEdges { declared: m }));
                    }
                    let demand_tok = tokens
                        .next()
                        .ok_or_else(|| err(ParseErrorKind::MissingDemand))?;
                    let demand = demand_tok
                        .parse::<i64>()
                        .map_err(|_| err(ParseErrorKind::InvalidNumber(demand_tok.to_string())))?;
                    if demand < 1 || demand > u32::MAX as i64 {
                        return Err(err(ParseErrorKind::InvalidDemand(demand)));
                    }
                    let mut edge = Vec::new();
                    for tok in tokens {
                        let v = tok
                            .parse::<usize>()
                            .map_err(|_| err(ParseErrorKind::InvalidNumber(tok.to_string())))?;
                        if v == 0 || v > n {
                            return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v, n }));
                        }
                        edge.push(v - 1);
                    }
                    edge.sort_unstable();
                    if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                        return Err(err(ParseErrorKind::RepeatedVertex(w[0] + 1)));
                    }
                    edges.push(edge);
                    demands.push(demand as u32);
                }
                Some(other) => {
                    return Err(err(ParseErrorKind::UnknownLine(other.to_string())));
                }
                None => unreachable!("blank lines are skipped"),
            }
        }

        let Some((n, m, k, header_line)) = header else {
            return Err(ParseError {
                line: last_line.max(1),
                kind: ParseErrorKind::MissingHeader,
            });
        };
        if edges.len() != m {
            return Err(ParseError {
                line: header_line,
                kind: ParseErrorKind::EdgeCountMismatch {
                    declared: m,
                    found: edges.len(),
                },
            });
        }
        Ok(Hypergraph::new(n, edges, demands, k).expect("parser validated every field"))
    }

    /// Inverse of [`Hypergraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write!(out, "p mhs {} {}", self.num_vertices, self.edges.len()).unwrap();
        if let Some(k) = self.budget {
            write!(out, " {k}").unwrap();
        }
        out.push('\n');
        for (edge, demand) in self.edges.iter().zip(&self.demands) {
            write!(out, "e {demand}").unwrap();
            for v in edge {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// A reduced instance together with the original index of every surviving
/// vertex and hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub graph: Hypergraph,
    pub vertex_origin: Vec<usize>,
    pub edge_origin: Vec<usize>,
}
