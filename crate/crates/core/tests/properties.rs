mod common;

use proptest::prelude::*;

use common::{
    brute_force_matching, brute_force_opt, max_antichain, naive_edge_intersections,
    naive_vertex_intersections, random_graph_edges,
};
use mhs_kernel::pipeline::{run_pipeline, EngineKind, Phase, PipelineSpec};
use mhs_kernel::rules::apply_fe_exhaustively;
use mhs_kernel::solver::DEFAULT_NODE_LIMIT;
use mhs_kernel::{
    dilworth_number, incidence_graph, neighborhood_diversity, par_reduce_edges,
    par_reduce_vertices, seq_kernelize, solve_opt, Graph, Hypergraph, ParallelEngine,
    ReductionState,
};

/// Instances with `f(e) ≤ |e|`.
fn feasible(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(
            (prop::collection::btree_set(0..n, 1..=n), 1u32..=3),
            0..=max_m,
        )
        .prop_map(move |edges| {
            let demands = edges
                .iter()
                .map(|(e, f)| (*f).min(e.len() as u32))
                .collect();
            let edges = edges
                .into_iter()
                .map(|(e, _)| e.into_iter().collect())
                .collect();
            Hypergraph::new(n, edges, demands, None).unwrap()
        })
    })
}

/// Instances whose demands may exceed edge sizes, with an optional budget.
fn unconstrained(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(
                (prop::collection::btree_set(0..n, 0..=n), 1u32..=3),
                0..=max_m,
            ),
            prop::option::of(0i64..=(n as i64)),
        )
            .prop_map(move |(edges, budget)| {
                let demands = edges.iter().map(|(_, f)| *f).collect();
                let edges = edges
                    .into_iter()
                    .map(|(e, _)| e.into_iter().collect())
                    .collect();
                Hypergraph::new(n, edges, demands, budget).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trip(h in unconstrained(12, 10)) {
        prop_assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn incidence_popcounts(h in feasible(40, 30)) {
        let a = h.incidence_matrix();
        let sizes: Vec<u32> = h.edges().iter().map(|e| e.len() as u32).collect();
        let degrees: Vec<u32> = h.vertex_incidences().iter().map(|e| e.len() as u32).collect();
        prop_assert_eq!(a.row_counts(), sizes);
        prop_assert_eq!(a.col_counts(), degrees);
        prop_assert_eq!(a.num_ones(), h.num_incidences());
    }

    #[test]
    fn packed_products_match_naive(h in feasible(70, 70)) {
        let a = h.incidence_matrix();
        let ie = a.edge_intersections();
        let iv = a.vertex_intersections();
        let ne = naive_edge_intersections(&h);
        let nv = naive_vertex_intersections(&h);
        for (i, row) in ne.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                prop_assert_eq!(ie.get(i, j), c);
            }
        }
        for (i, row) in nv.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                prop_assert_eq!(iv.get(i, j), c);
            }
        }
    }

    #[test]
    fn full_edges_preserve_optimum(h in unconstrained(10, 8)) {
        let h = h.with_budget(None);
        let (k, out) = apply_fe_exhaustively(&h);
        let before = brute_force_opt(&h);
        prop_assert_eq!(out.infeasible, before.is_none());
        if let Some(opt) = before {
            prop_assert_eq!(brute_force_opt(&k.graph), Some(opt - out.budget_delta));
        }
    }

    #[test]
    fn solver_matches_brute_force(h in unconstrained(12, 10)) {
        let s = solve_opt(&h, DEFAULT_NODE_LIMIT).unwrap();
        match brute_force_opt(&h) {
            Some(opt) => prop_assert_eq!(s.cardinality(), opt),
            None => prop_assert_eq!(s.status, mhs_kernel::Status::Infeasible),
        }
    }

    #[test]
    fn engines_agree(h in feasible(40, 40)) {
        let (seq, rs) = seq_kernelize(&h);
        for workers in [1, 3] {
            let (par, rp) = ParallelEngine::new(workers).kernelize(&h);
            prop_assert_eq!(&par.vertex_origin, &seq.vertex_origin);
            prop_assert_eq!(&par.edge_origin, &seq.edge_origin);
            prop_assert_eq!(rp.rounds, rs.rounds);
        }
        let spec = PipelineSpec::new(vec![Phase::Dp, Phase::Md], EngineKind::Sequential)
            .unwrap()
            .looped(true);
        let (a, _) = run_pipeline(&h, &spec);
        let (b, _) = run_pipeline(&h, &PipelineSpec { engine: EngineKind::Parallel, ..spec });
        prop_assert_eq!(a, b);
    }

    #[test]
    fn keep_vectors_ignore_worker_count(h in feasible(30, 30)) {
        let a = h.incidence_matrix();
        let keep = |w: usize| {
            rayon::ThreadPoolBuilder::new().num_threads(w).build().unwrap().install(|| {
                (par_reduce_edges(&a, h.demands()), par_reduce_vertices(&a, h.demands()))
            })
        };
        prop_assert_eq!(keep(1), keep(5));
    }

    #[test]
    fn kernelization_is_idempotent(h in feasible(30, 30)) {
        let (k, _) = seq_kernelize(&h);
        let (again, r) = seq_kernelize(&k.graph);
        prop_assert_eq!(again.graph, k.graph);
        prop_assert_eq!(r.rounds, 1);
    }

    #[test]
    fn candidate_work_is_bounded(h in feasible(40, 40)) {
        let mut state = ReductionState::new(&h);
        let mut report = mhs_kernel::KernelReport::start(&h);
        state.reduce(h.demands(), &mut report);
        let bound = h.num_vertices() + h.num_edges() + 2 * h.num_incidences();
        prop_assert!(state.candidate_insertions() <= bound);
    }

    #[test]
    fn dp_md_preserves_optimum(h in feasible(12, 10)) {
        let (k, _) = seq_kernelize(&h);
        prop_assert_eq!(brute_force_opt(&k.graph), brute_force_opt(&h));
    }

    #[test]
    fn incidence_matching_matches_brute_force(h in feasible(6, 5)) {
        let ig = incidence_graph(&h);
        prop_assume!(ig.graph().num_edges() <= 20);
        prop_assert_eq!(ig.matching_number(), brute_force_matching(ig.graph()));
    }

    #[test]
    fn dilworth_is_max_antichain(nodes in 1usize..=12, density in 0u64..=100, seed: u64) {
        let g = Graph::from_edges(nodes, &random_graph_edges(nodes, density, seed)).unwrap();
        let nabla = dilworth_number(&g);
        prop_assert_eq!(nabla, max_antichain(&g));
        prop_assert!(nabla <= neighborhood_diversity(&g));
    }
}
