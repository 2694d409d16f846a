use blockmean_core::cis::{local_mean, mean, phi_brute, phi_fast, phi_local_brute, phi_local_fast};
use blockmean_core::lemmas::{improve_step, sweep_graph};
use blockmean_core::{canonical_cert, is_block_graph, random_block_graph, seeded_rng, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn block_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_block_graph(n, &mut seeded_rng(seed)).unwrap())
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::build(n, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fast_matches_brute(g in block_graph(13)) {
        prop_assert_eq!(phi_fast(&g).unwrap(), phi_brute(&g));
        for v in 0..g.order() {
            prop_assert_eq!(phi_local_fast(&g, v).unwrap(), phi_local_brute(&g, v).unwrap());
        }
    }

    #[test]
    fn cert_is_relabelling_invariant(g in any_graph(9), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut seeded_rng(seed));
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_cert(&g), canonical_cert(&h));
        prop_assert_eq!(canonical_cert(&canonical_cert(&g).to_graph()), canonical_cert(&g));
    }

    #[test]
    fn local_mean_dominates_global(g in block_graph(10)) {
        let m = mean(&g).unwrap().mean;
        for v in 0..g.order() {
            prop_assert!(local_mean(&g, v).unwrap().mean >= m);
        }
    }

    #[test]
    fn sweep_never_fails(g in block_graph(9)) {
        for v in sweep_graph(&g, None) {
            prop_assert!(!v.is_failure(), "{:?}", v);
        }
    }

    #[test]
    fn improvement_keeps_order_and_shape(g in block_graph(12)) {
        prop_assume!(g.order() >= 3 && !g.is_path());
        let step = improve_step(&g).unwrap();
        prop_assert_eq!(step.graph.order(), g.order());
        prop_assert!(is_block_graph(&step.graph).unwrap());
        prop_assert!(step.after < step.before);
    }
}
