//! Small named instances used throughout the test suites and examples.

use crate::hypergraph::Hypergraph;

/// Edges `{v1,v2}`, `{v2,v3,v4}`, `{v2,v3,v5}`, all with demand 2.
///
/// Deleting `v3` just because `v2` dominates it raises the optimum from 3 to
/// 4, so a sound domination rule must leave `v3` alone here.
pub fn counterexample() -> Hypergraph {
    Hypergraph::new(
        5,
        vec![vec![0, 1], vec![1, 2, 3], vec![1, 2, 4]],
        vec![2, 2, 2],
        None,
    )
    .expect("valid")
}

/// `n` vertices and the `n` unit-demand singleton edges `{v_i}`. No rule
/// applies and the kernel size bound holds with equality.
pub fn disjoint_singletons(n: usize) -> Hypergraph {
    Hypergraph::new(n, (0..n).map(|i| vec![i]).collect(), vec![1; n], None).expect("valid")
}
