use std::collections::BTreeSet;

use chern_endo::chern::{arv_obstruction, chern_number, CompleteIntersection, Verdict};
use chern_endo::delpezzo::{
    enumerate_exceptional, intersect, pullback_pushforward_check, IntMatrix, PicardClass,
};
use proptest::prelude::*;

fn permuted(c: &PicardClass, perm: &[usize]) -> PicardClass {
    PicardClass::new(c.a, perm.iter().map(|&i| c.b[i]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exceptional_set_is_permutation_invariant(r in 2usize..=8, seed in any::<u64>()) {
        let classes = enumerate_exceptional(r).unwrap();
        let set: BTreeSet<_> = classes.iter().cloned().collect();
        let mut perm: Vec<usize> = (0..r).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for i in (1..r).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        for c in &classes {
            prop_assert!(set.contains(&permuted(c, &perm)));
        }
    }

    #[test]
    fn exceptional_classes_pair_to_small_values(r in 0usize..=8) {
        // distinct (-1)-classes on a Del Pezzo surface meet in 0, 1, 2 or 3 points
        let classes = enumerate_exceptional(r).unwrap();
        for (i, e) in classes.iter().enumerate() {
            for f in &classes[i + 1..] {
                let m = intersect(e, f).unwrap();
                prop_assert!((0..=3).contains(&m), "{} · {} = {}", e, f, m);
            }
        }
    }

    #[test]
    fn chern_numbers_are_canonical_in_degree_order(
        n in 1u32..12,
        degrees in proptest::collection::vec(1u32..8, 1..4),
        t in -4i64..6,
    ) {
        let mut reversed = degrees.clone();
        reversed.reverse();
        let a = CompleteIntersection::new(n, degrees).unwrap();
        let b = CompleteIntersection::new(n, reversed).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(chern_number(&a, t).unwrap(), chern_number(&b, t).unwrap());
    }

    #[test]
    fn linear_sections_reduce_to_smaller_ambient(n in 2u32..10, d in 2u32..7) {
        // a hyperplane section of P^{n+2} is P^{n+1}: cutting with a degree-1
        // equation does not change the variety
        let plain = CompleteIntersection::hypersurface(n, d).unwrap();
        let cut = CompleteIntersection::new(n, vec![d, 1]).unwrap();
        prop_assert_eq!(chern_number(&plain, 2).unwrap(), chern_number(&cut, 2).unwrap());
    }

    #[test]
    fn verdict_matches_comparison(n in 2u32..15, degrees in proptest::collection::vec(1u32..7, 1..4)) {
        let r = arv_obstruction(&CompleteIntersection::new(n, degrees).unwrap()).unwrap();
        prop_assert_eq!(r.verdict == Verdict::Obstructed, r.chern_number > r.bound);
    }

    #[test]
    fn scalar_pullback_satisfies_lemma(rank in 1usize..10, delta in 1i64..20) {
        let m = IntMatrix::scalar(rank, delta);
        prop_assert!(pullback_pushforward_check(&m, &m, delta * delta).unwrap());
        if delta > 1 {
            prop_assert!(!pullback_pushforward_check(&m, &m, delta).unwrap());
        }
    }
}

#[test]
fn projective_space_is_never_obstructed() {
    // a linear subspace is P^n, which has the power maps; its Chern number
    // must sit at or below the bound
    for n in 2..=20 {
        let pn = CompleteIntersection::new(n, vec![1]).unwrap();
        assert_eq!(
            arv_obstruction(&pn).unwrap().verdict,
            Verdict::Inconclusive,
            "n={n}"
        );
    }
}
