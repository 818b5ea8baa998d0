use load_coloring::dimacs::{parse_graph, to_dimacs};
use load_coloring::exact::{decide_exact, decide_exact_with, max_k_exact, ExactOutcome, DEFAULT_BUDGET};
use load_coloring::graph::is_certificate;
use load_coloring::par::Execution;
use load_coloring::pipeline::{decide_batch, decide_with};
use load_coloring::{approx_general, decide, kernelize, reduce, Graph, Instance, Outcome};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()).prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn brute_force(g: &Graph, c: usize, k: usize) -> bool {
    let n = g.n();
    let mut colors = vec![0; n];
    loop {
        let mut counts = vec![0; c];
        for (u, v) in g.edges() {
            if colors[u] == colors[v] {
                counts[colors[u]] += 1;
            }
        }
        if counts.iter().all(|&x| x >= k) {
            return true;
        }
        let mut i = 0;
        while i < n && colors[i] == c - 1 {
            colors[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        colors[i] += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_matches_brute_force(g in graph(7), c in 1usize..=3, k in 0usize..=4) {
        let inst = Instance::new(g.clone(), c, k).unwrap();
        let expected = brute_force(&g, c, k);
        match decide_exact(&inst, DEFAULT_BUDGET) {
            ExactOutcome::Yes(col) => prop_assert!(expected && is_certificate(&inst, &col)),
            ExactOutcome::No => prop_assert!(!expected),
            ExactOutcome::BudgetExceeded => prop_assert!(false, "budget exceeded on a tiny graph"),
        }
    }

    #[test]
    fn decide_matches_brute_force(g in graph(9), c in 1usize..=3, k in 0usize..=4) {
        let inst = Instance::new(g.clone(), c, k).unwrap();
        match decide(&inst, DEFAULT_BUDGET).unwrap() {
            Outcome::Yes { coloring, .. } => prop_assert!(is_certificate(&inst, &coloring)),
            Outcome::No { .. } => prop_assert!(!brute_force(&g, c, k)),
            other => prop_assert!(false, "unexpected outcome {}", other.verdict()),
        }
    }

    #[test]
    fn dimacs_round_trip(g in graph(12)) {
        let back = parse_graph(&to_dimacs(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn reduction_preserves_the_answer(g in graph(8), c in 2usize..=3, k in 1usize..=3) {
        let inst = Instance::new(g, c, k).unwrap();
        let (red, trace) = reduce(&inst);
        prop_assert_eq!(trace.replay(&inst).unwrap(), red.clone());
        let original = decide_exact(&inst, DEFAULT_BUDGET);
        match decide_exact(&red, DEFAULT_BUDGET) {
            ExactOutcome::Yes(col) => {
                let lifted = trace.lift(&red.graph, &col).unwrap();
                prop_assert!(is_certificate(&inst, &lifted));
            }
            ExactOutcome::No => prop_assert_eq!(original, ExactOutcome::No),
            ExactOutcome::BudgetExceeded => prop_assert!(false),
        }
    }

    #[test]
    fn kernel_is_small(g in graph(12), c in 2usize..=3, k in 2usize..=3) {
        let inst = Instance::new(g, c, k).unwrap();
        if let Outcome::Kernel { kernel, .. } = kernelize(&inst).unwrap() {
            prop_assert!(kernel.graph.n() < 2 * kernel.c * k);
        }
    }

    #[test]
    fn approx_general_is_sound(g in graph(8), c in 1usize..=3) {
        let a = approx_general(&g, c, DEFAULT_BUDGET).unwrap();
        prop_assert!(is_certificate(&Instance::new(g.clone(), c, a.k).unwrap(), &a.coloring));
        prop_assert!(a.k <= max_k_exact(&g, c, DEFAULT_BUDGET).unwrap().0);
    }
}

#[test]
fn execution_modes_agree() {
    let insts: Vec<Instance> = (0..40)
        .map(|s| {
            let g = load_coloring::generate::gnm(9, 14, s).unwrap();
            Instance::new(g, 2 + (s % 2) as usize, 1 + (s % 4) as usize).unwrap()
        })
        .collect();
    let seq = decide_batch(&insts, DEFAULT_BUDGET, Execution::Sequential);
    let par = decide_batch(&insts, DEFAULT_BUDGET, Execution::Parallel);
    assert_eq!(seq, par);
    for inst in &insts {
        assert_eq!(
            decide_exact_with(inst, DEFAULT_BUDGET, Execution::Sequential),
            decide_exact_with(inst, DEFAULT_BUDGET, Execution::Parallel)
        );
        assert_eq!(
            decide_with(inst, DEFAULT_BUDGET, Execution::Sequential).unwrap(),
            decide_with(inst, DEFAULT_BUDGET, Execution::Parallel).unwrap()
        );
    }
}
