mod common;

use common::{random_graph, random_permutation, random_subset, rng};
use proptest::prelude::*;
use signed_graphs::canon::canonical_form;
use signed_graphs::coloring::balanced_chromatic_number;
use signed_graphs::Budget;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_and_relabeling(seed in any::<u64>(), n in 1usize..=10, density in 0.1f64..0.9, digons in any::<bool>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, density, digons);
        let set = random_subset(&mut r, n);
        let perm = random_permutation(&mut r, n);
        let h = g.switch(&set).unwrap().relabel(&perm).unwrap();

        prop_assert_eq!(g.negative_girth().length(), h.negative_girth().length());
        prop_assert_eq!(g.is_balanced().is_balanced(), h.is_balanced().is_balanced());
        let cg = balanced_chromatic_number(&g, Budget::default());
        let ch = balanced_chromatic_number(&h, Budget::default());
        prop_assert!(cg.complete && ch.complete);
        prop_assert_eq!(cg.value(), ch.value());
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }
}
