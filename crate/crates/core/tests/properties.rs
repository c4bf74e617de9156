//! Randomized cross-checks on top of the exhaustive unit tests.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zagreb_trees::enumeration::prufer_decode;
use zagreb_trees::indices::{pi2, pi2_vertex_form};
use zagreb_trees::tree::text;
use zagreb_trees::{canonical_code, f_aux, first_zagreb, gamma_k, is_k_dominating, Tree};

/// Random labeled tree via a random Pruefer sequence.
fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2)
            .prop_map(move |seq| prufer_decode(n, &seq).expect("valid sequence"))
    })
}

proptest! {
    #[test]
    fn canonical_code_is_relabeling_invariant(t in arb_tree(16), seed in any::<u64>()) {
        let n = t.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let relabeled = t.relabeled(&perm).unwrap();
        prop_assert_eq!(canonical_code(&t), canonical_code(&relabeled));
    }

    #[test]
    fn pi2_edge_and_vertex_forms_agree(t in arb_tree(14)) {
        prop_assert_eq!(pi2(&t).unwrap(), pi2_vertex_form(&t).unwrap());
    }

    #[test]
    fn text_format_round_trips(t in arb_tree(16)) {
        let line = text::format_line(&t);
        let back = text::parse_line(&line, 1).unwrap();
        prop_assert_eq!(&t, &back);
    }

    #[test]
    fn gamma_witness_is_feasible_and_invariant(t in arb_tree(14), k in 1usize..=3, seed in any::<u64>()) {
        let r = gamma_k(&t, k).unwrap();
        prop_assert!(is_k_dominating(&t, &r.witness, k).unwrap());
        prop_assert_eq!(r.witness.len(), r.gamma);
        let n = t.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let relabeled = t.relabeled(&perm).unwrap();
        prop_assert_eq!(gamma_k(&relabeled, k).unwrap().gamma, r.gamma);
    }

    #[test]
    fn degree_based_invariants_are_relabeling_invariant(t in arb_tree(14), seed in any::<u64>()) {
        let n = t.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let r = t.relabeled(&perm).unwrap();
        prop_assert_eq!(first_zagreb(&t), first_zagreb(&r));
        prop_assert_eq!(pi2(&t).unwrap(), pi2(&r).unwrap());
        prop_assert_eq!(f_aux(&t), f_aux(&r));
    }
}
