//! Structural parameters of graphs, chiefly of the incidence graph `I(H)`:
//! the Dilworth number of the vinical preorder, the neighborhood diversity
//! and the matching number.
//!
//! These are verification tools sized for desk-scale instances; every
//! routine here is at least quadratic in the number of nodes.

use crate::error::GraphError;
use crate::hypergraph::Hypergraph;
use crate::incidence::BitRows;
use crate::matching::hopcroft_karp;

/// Simple undirected graph with packed adjacency rows.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: BitRows,
    lists: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `num_nodes` nodes. Loops are dropped, parallel edges
    /// merged.
    pub fn from_edges(num_nodes: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = BitRows::new(num_nodes, num_nodes);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= num_nodes {
                    return Err(GraphError::UnknownNode { node: x, num_nodes });
                }
            }
            if u != v {
                adj.set(u, v);
                adj.set(v, u);
            }
        }
        let lists = (0..num_nodes).map(|u| adj.ones(u).collect()).collect();
        Ok(Graph { adj, lists })
    }

    pub fn num_nodes(&self) -> usize {
        self.lists.len()
    }

    pub fn num_edges(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.lists[u]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    fn check(&self, u: usize) -> Result<(), GraphError> {
        if u < self.num_nodes() {
            Ok(())
        } else {
            Err(GraphError::UnknownNode {
                node: u,
                num_nodes: self.num_nodes(),
            })
        }
    }

    /// `u ⊑ v` in the vinical preorder: `N(u) ⊆ N[v]`.
    pub fn vinical_leq(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.leq_unchecked(u, v))
    }

    fn leq_unchecked(&self, u: usize, v: usize) -> bool {
        u == v || self.lists[u].iter().all(|&w| w == v || self.adj.get(v, w))
    }

    /// Full vinical relation as a packed `n × n` matrix, row `u` holding every
    /// `v` with `u ⊑ v`.
    pub fn vinical_relation(&self) -> BitRows {
        let n = self.num_nodes();
        let mut rel = BitRows::new(n, n);
        for u in 0..n {
            for v in 0..n {
                if self.leq_unchecked(u, v) {
                    rel.set(u, v);
                }
            }
        }
        rel
    }

    /// Two-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.num_nodes();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &w in &self.lists[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

/// The bipartite incidence graph of a hypergraph. Node `j < n` is vertex
/// `v_j`; node `n + i` is hyperedge `e_i`.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    graph: Graph,
    num_vertex_nodes: usize,
    num_edge_nodes: usize,
}

impl IncidenceGraph {
    pub fn new(h: &Hypergraph) -> Self {
        let n = h.num_vertices();
        let pairs: Vec<(usize, usize)> = h
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.iter().map(move |&v| (v, n + i)))
            .collect();
        IncidenceGraph {
            graph: Graph::from_edges(n + h.num_edges(), &pairs).expect("indices in range"),
            num_vertex_nodes: n,
            num_edge_nodes: h.num_edges(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn num_vertex_nodes(&self) -> usize {
        self.num_vertex_nodes
    }

    pub fn num_edge_nodes(&self) -> usize {
        self.num_edge_nodes
    }

    pub fn vertex_node(&self, v: usize) -> usize {
        v
    }

    pub fn edge_node(&self, e: usize) -> usize {
        self.num_vertex_nodes + e
    }

    pub fn matching_number(&self) -> usize {
        let adj: Vec<Vec<usize>> = (0..self.num_vertex_nodes)
            .map(|v| {
                self.graph
                    .neighbors(v)
                    .iter()
                    .map(|&x| x - self.num_vertex_nodes)
                    .collect()
            })
            .collect();
        hopcroft_karp(self.num_edge_nodes, &adj).size
    }
}

pub fn incidence_graph(h: &Hypergraph) -> IncidenceGraph {
    IncidenceGraph::new(h)
}

/// Size of a largest antichain of the vinical preorder, computed as a
/// minimum chain cover.
///
/// Mutually comparable nodes are merged into classes; each class is a chain.
/// The strict order between classes is a partial order, and its minimum
/// chain cover is `#classes − ν(B)` where `B` has an arc `c → d` for every
/// `c < d`.
pub fn dilworth_number(g: &Graph) -> usize {
    let n = g.num_nodes();
    if n == 0 {
        return 0;
    }
    let rel = g.vinical_relation();

    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for u in 0..n {
        if class_of[u] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(u);
        for (v, class) in class_of.iter_mut().enumerate().skip(u) {
            if *class == usize::MAX && rel.get(u, v) && rel.get(v, u) {
                *class = c;
            }
        }
    }

    let k = reps.len();
    let adj: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            (0..k)
                .filter(|&d| d != c && rel.get(reps[c], reps[d]))
                .collect()
        })
        .collect();
    k - hopcroft_karp(k, &adj).size
}

/// Number of classes of `u ~ v ⟺ N(u) \ {v} = N(v) \ {u}`.
pub fn neighborhood_diversity(g: &Graph) -> usize {
    let n = g.num_nodes();
    let mut reps: Vec<usize> = Vec::new();
    for u in 0..n {
        if !reps.iter().any(|&r| same_type(g, u, r)) {
            reps.push(u);
        }
    }
    reps.len()
}

fn same_type(g: &Graph, u: usize, v: usize) -> bool {
    let nu = g.neighbors(u).iter().filter(|&&w| w != v);
    let nv = g.neighbors(v).iter().filter(|&&w| w != u);
    nu.eq(nv)
}

/// Matching number of a bipartite graph.
pub fn matching_number(g: &Graph) -> Result<usize, GraphError> {
    let side = g.bipartition().ok_or(GraphError::NotBipartite)?;
    let left: Vec<usize> = (0..g.num_nodes()).filter(|&u| !side[u]).collect();
    let mut right_index = vec![usize::MAX; g.num_nodes()];
    let mut num_right = 0;
    for u in (0..g.num_nodes()).filter(|&u| side[u]) {
        right_index[u] = num_right;
        num_right += 1;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|&w| right_index[w]).collect())
        .collect();
    Ok(hopcroft_karp(num_right, &adj).size)
}

/// `2 · α · ∇(I(H))`, the size bound on `|V'| + |E'|` after one exhaustive
/// edge phase followed by one exhaustive vertex phase.
pub fn kernel_bound(h: &Hypergraph) -> usize {
    2 * h.alpha() as usize * dilworth_number(incidence_graph(h).graph())
}

/// The graph on `2n` nodes built by adding, for `i = 1..n`, an isolated node
/// `u_i` and then a node `v_i` adjacent to everything added before it. Node
/// order is `u_1, v_1, u_2, v_2, ...`. Its vinical preorder is total while its
/// neighborhood diversity is `2n − 1`.
pub fn nested_split_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let v = 2 * i + 1;
        for earlier in 0..v {
            edges.push((earlier, v));
        }
    }
    Graph::from_edges(2 * n, &edges).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn nested_split_graph_n2() {
        // u1=0, v1=1, u2=2, v2=3; v1~u1; v2~u1,v1,u2.
        let g = nested_split_graph(2);
        assert_eq!(g.neighbors(3), &[0, 1, 2]);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert!(g.vinical_leq(2, 0).unwrap());
        assert_eq!(dilworth_number(&g), 1);
        assert_eq!(neighborhood_diversity(&g), 3);
    }

    #[test]
    fn singleton_incidence_graph() {
        for n in 0..6 {
            let ig = incidence_graph(&instances::disjoint_singletons(n));
            assert_eq!(ig.graph().num_edges(), n);
            assert_eq!(dilworth_number(ig.graph()), n);
            assert_eq!(ig.matching_number(), n);
            assert_eq!(matching_number(ig.graph()).unwrap(), n);
        }
        let ig = incidence_graph(&instances::disjoint_singletons(2));
        let (e1, e2) = (ig.edge_node(0), ig.edge_node(1));
        assert!(!ig.graph().vinical_leq(e1, e2).unwrap());
        assert!(!ig.graph().vinical_leq(e2, e1).unwrap());
        // v_i and e_i have identical neighbourhoods once each other is removed.
        assert_eq!(neighborhood_diversity(ig.graph()), 2);
    }

    #[test]
    fn counterexample_parameters() {
        let ce = instances::counterexample();
        let ig = incidence_graph(&ce);
        assert_eq!(ig.graph().num_nodes(), 8);
        assert_eq!(ig.graph().num_edges(), 8);
        assert_eq!(ig.matching_number(), 3);
        // {e2, e3, v1, v3} is an antichain; {v1,e1}, {v4,e2}, {v5,e3}, {v3,v2}
        // are chains.
        assert_eq!(dilworth_number(ig.graph()), 4);
        assert_eq!(kernel_bound(&ce), 16);
    }

    #[test]
    fn trivial_graphs() {
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(dilworth_number(&empty), 0);
        assert_eq!(neighborhood_diversity(&empty), 0);
        assert_eq!(matching_number(&empty).unwrap(), 0);
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(dilworth_number(&single), 1);
        assert!(single.vinical_leq(0, 0).unwrap());
        assert_eq!(neighborhood_diversity(&complete(4)), 1);
        assert_eq!(kernel_bound(&Hypergraph::empty()), 0);
    }

    #[test]
    fn errors() {
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        let g = complete(3);
        assert_eq!(matching_number(&g), Err(GraphError::NotBipartite));
        assert!(g.vinical_leq(0, 3).is_err());
    }
}
