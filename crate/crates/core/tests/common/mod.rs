//! Independent reference implementations used as test oracles. None of these
//! share code with the library beyond the `Hypergraph` and `Graph` accessors.

#![allow(dead_code)]

use mhs_kernel::{Graph, Hypergraph};

/// Minimum multiple hitting set size by enumerating every vertex subset, or
/// `None` when no subset meets all demands. Intended for `n ≤ 20`.
pub fn brute_force_opt(h: &Hypergraph) -> Option<usize> {
    let n = h.num_vertices();
    assert!(n <= 20, "brute force limited to 20 vertices");
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut best: Option<usize> = None;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let ok = masks
            .iter()
            .zip(h.demands())
            .all(|(&m, &f)| (m & set).count_ones() >= f);
        if ok {
            best = Some(size);
        }
    }
    best
}

/// `|e_i ∩ e_j|` by set intersection.
pub fn naive_edge_intersections(h: &Hypergraph) -> Vec<Vec<u32>> {
    let m = h.num_edges();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| h.edge(i).iter().filter(|v| h.edge(j).contains(v)).count() as u32)
                .collect()
        })
        .collect()
}

/// `|E(v_i) ∩ E(v_j)|` by scanning every edge.
pub fn naive_vertex_intersections(h: &Hypergraph) -> Vec<Vec<u32>> {
    let n = h.num_vertices();
    let mut out = vec![vec![0u32; n]; n];
    for e in h.edges() {
        for &a in e {
            for &b in e {
                out[a][b] += 1;
            }
        }
    }
    out
}

fn closed_neighborhood(g: &Graph, v: usize) -> Vec<bool> {
    let mut set = vec![false; g.num_nodes()];
    set[v] = true;
    for &w in g.neighbors(v) {
        set[w] = true;
    }
    set
}

/// `N(u) ⊆ N[v]`, straight from the adjacency lists.
pub fn vinical_leq(g: &Graph, u: usize, v: usize) -> bool {
    let closed = closed_neighborhood(g, v);
    g.neighbors(u).iter().all(|&w| closed[w])
}

/// Largest set of pairwise incomparable nodes under the vinical preorder, by
/// subset enumeration. Intended for at most ~16 nodes.
pub fn max_antichain(g: &Graph) -> usize {
    let n = g.num_nodes();
    assert!(n <= 16);
    let comparable: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| u == v || vinical_leq(g, u, v) || vinical_leq(g, v, u))
                .collect()
        })
        .collect();
    let mut best = 0;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| set & (1 << i) != 0).collect();
        let ok = members
            .iter()
            .enumerate()
            .all(|(k, &a)| members[k + 1..].iter().all(|&b| !comparable[a][b]));
        if ok {
            best = size;
        }
    }
    best
}

/// Maximum matching size by enumerating edge subsets. Intended for at most
/// ~20 graph edges.
pub fn brute_force_matching(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = (0..g.num_nodes())
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .filter(move |&&w| u < w)
                .map(move |&w| (u, w))
        })
        .collect();
    assert!(edges.len() <= 22);
    let mut best = 0;
    for set in 0u32..(1u32 << edges.len()) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut used = vec![false; g.num_nodes()];
        let ok = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| set & (1 << k) != 0)
            .all(|(_, &(u, w))| {
                let free = !used[u] && !used[w];
                used[u] = true;
                used[w] = true;
                free
            });
        if ok {
            best = size;
        }
    }
    best
}

/// Unordered node pairs of a random simple graph, from a seeded xorshift.
pub fn random_graph_edges(n: usize, density_percent: u64, seed: u64) -> Vec<(usize, usize)> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if next() % 100 < density_percent {
                edges.push((u, v));
            }
        }
    }
    edges
}
