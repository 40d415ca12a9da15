//! The brute-force enumerator against the dedicated searches.

mod common;

use fusring::classifier::families::{family_prop31, fib_shape, FibShape};
use fusring::classifier::{
    brute_force, search_prop31, search_prop32, search_prop33, Predicate, SearchResult,
    DEFAULT_MAX_CANDIDATES,
};
use fusring::ring::{isomorphism, validate};

const SELF_DUAL_4: [usize; 4] = [0, 1, 2, 3];

fn census(bound: u64, predicates: &[Predicate]) -> SearchResult {
    brute_force(4, &SELF_DUAL_4, bound, predicates, DEFAULT_MAX_CANDIDATES).unwrap()
}

#[test]
fn fixed_point_free_search_matches_census() {
    let dedicated = search_prop31(2);
    let brute = census(2, &[Predicate::FixedPointFree]);
    assert_eq!(dedicated.canonical_keys(), brute.canonical_keys());
}

#[test]
fn fixed_point_search_matches_census() {
    let dedicated = search_prop32(2);
    let brute = census(2, &[Predicate::PointedRank(2), Predicate::FixedPoint]);
    assert_eq!(dedicated.canonical_keys(), brute.canonical_keys());
}

#[test]
fn fibonacci_subring_search_matches_census() {
    let dedicated = search_prop33(2);
    let brute = census(2, &[Predicate::FibonacciSubring]);
    assert_eq!(dedicated.canonical_keys(), brute.canonical_keys());
}

#[test]
fn swap_action_classes_are_diagonal_members() {
    let brute = census(2, &[Predicate::PointedRank(2), Predicate::FixedPointFree]);
    assert!(!brute.classes.is_empty());
    for class in &brute.classes {
        let found = (0..=2u64)
            .flat_map(|m| (0..=m).map(move |n| (m, n)))
            .any(|(m, n)| isomorphism(&class.representative, &family_prop31(m, n).unwrap()).is_some());
        assert!(found, "{}", class.representative);
    }
}

#[test]
fn census_is_independent_of_worker_count() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| census(2, &[]))
    };
    assert_eq!(run(1), run(8));
}

#[test]
fn census_classes_are_pairwise_non_isomorphic() {
    let brute = census(1, &[]);
    for (i, a) in brute.classes.iter().enumerate() {
        assert!(validate(&a.representative).is_fusion_ring());
        for b in &brute.classes[i + 1..] {
            assert!(isomorphism(&a.representative, &b.representative).is_none());
        }
    }
}

#[test]
fn diagonal_members_beyond_two_associate() {
    // ring-level answer: every m = n member up to 6 is associative
    for m in 3..=6 {
        assert!(validate(&family_prop31(m, m).unwrap()).is_fusion_ring(), "m = {m}");
    }
    let brute = census(3, &[Predicate::PointedRank(2), Predicate::FixedPointFree]);
    assert!(brute.find_class(&family_prop31(3, 3).unwrap()).is_some());
}

#[test]
fn first_perron_triple_yields_no_fusion_ring() {
    // (c, e, f) = (1, 0, 1): no choice of the other entries is associative
    for a in 0..=3 {
        for b in 0..=3 {
            for d in 0..=3 {
                for g in 0..=3 {
                    let s = FibShape { a, b, c: 1, d, e: 0, f: 1, g };
                    assert!(!validate(&fib_shape(s)).is_fusion_ring(), "{s}");
                }
            }
        }
    }
}
