//! Enumeration against known class counts and an independent brute force.

mod common;

use common::brute_force_class_count;
use skewbrace::enumeration::{are_isomorphic, class_counts, enumerate_all, enumerate_in_order};
use skewbrace::group::catalog_group;
use skewbrace::{Bounds, FiniteGroup, SkewBrace};
use std::collections::BTreeSet;

/// Numbers of isomorphism classes of skew braces of orders 1 to 15.
const KNOWN_COUNTS: [usize; 15] = [1, 1, 1, 4, 1, 6, 1, 47, 4, 6, 1, 38, 1, 6, 1];

#[test]
fn class_counts_match_known_values() {
    let bounds = Bounds::default();
    for (i, &expected) in KNOWN_COUNTS.iter().enumerate() {
        let order = i + 1;
        let classes = enumerate_all(order, &bounds).unwrap();
        assert_eq!(classes.len(), expected, "order {order}");
    }
}

#[test]
fn small_orders_match_brute_force() {
    let bounds = Bounds::default();
    for n in 1..=6 {
        assert_eq!(
            enumerate_all(n, &bounds).unwrap().len(),
            brute_force_class_count(n),
            "order {n}"
        );
    }
}

#[test]
fn representatives_are_valid_and_pairwise_non_isomorphic() {
    let bounds = Bounds::default();
    for n in [4, 6, 8, 9] {
        let classes = enumerate_all(n, &bounds).unwrap();
        for c in &classes {
            SkewBrace::from_groups(c.brace.additive().clone(), c.brace.multiplicative().clone()).unwrap();
        }
        for i in 0..classes.len() {
            for j in 0..i {
                assert!(
                    !are_isomorphic(&classes[i].brace, &classes[j].brace).is_isomorphic(),
                    "order {n}: classes {i} and {j}"
                );
            }
        }
    }
}

#[test]
fn order_eight_has_no_elementary_abelian_additive_with_cyclic_multiplicative() {
    let classes = enumerate_all(8, &Bounds::default()).unwrap();
    let counts = class_counts(&classes);
    assert_eq!(counts.get(&(Some(2), Some(0))).copied().unwrap_or(0), 0);
    assert!(classes.len() >= 39);
}

/// The search order must not change what is found.
#[test]
fn counts_do_not_depend_on_search_order() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let bounds = Bounds::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (n, i) in [(8, 3), (9, 1), (12, 1)] {
        let g: FiniteGroup = catalog_group(n, i).unwrap();
        let mut order: Vec<usize> = (1..n).collect();
        let reference = enumerate_in_order(&g, &order, &bounds).unwrap();
        for _ in 0..3 {
            order.shuffle(&mut rng);
            let shuffled = enumerate_in_order(&g, &order, &bounds).unwrap();
            let a: BTreeSet<Vec<usize>> = reference
                .iter()
                .map(|b| b.multiplicative().flat_table().to_vec())
                .collect();
            let b: BTreeSet<Vec<usize>> = shuffled
                .iter()
                .map(|b| b.multiplicative().flat_table().to_vec())
                .collect();
            assert_eq!(a, b, "order {n}, catalog index {i}");
        }
    }
}
