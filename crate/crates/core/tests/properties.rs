//! Randomized structural invariants. Case counts are modest: every property
//! here is also pinned by deterministic unit tests, so this suite exists to
//! sweep odd shapes, not to carry the main burden.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::graph_automorphisms;
use orbipoly::graph::{act_on_orientation, acyclic_orientations, weakly_compatible_pairs, SimpleGraph};
use orbipoly::label::LabelMap;
use orbipoly::permgroup::{act_on_map, orbits, PermGroup, Permutation};
use orbipoly::polynomial::Polynomial;
use orbipoly::poset::{count_homs, enumerate_homs, Poset};
use orbipoly::Rational;

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn permutation_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..6).prop_flat_map(|k| (permutation(k), permutation(k)))
}

fn permutation_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..6).prop_flat_map(|k| (permutation(k), permutation(k), permutation(k)))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_map(|(num, den)| Rational::new(BigInt::from(num), BigInt::from(den)))
}

fn poset_strategy() -> impl Strategy<Value = Poset> {
    (1usize..=4)
        .prop_flat_map(|size| {
            (
                Just(size),
                proptest::collection::vec((0..size, 0..size), 0..8),
            )
        })
        .prop_filter_map("relations must close to a partial order", |(size, rels)| {
            Poset::from_relations(size, &rels).ok()
        })
}

fn graph_strategy() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=4)
        .prop_flat_map(|size| {
            (
                Just(size),
                proptest::collection::vec((0..size, 0..size), 0..8),
            )
        })
        .prop_map(|(size, pairs)| {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|&(u, v)| u != v).collect();
            SimpleGraph::new(size, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interpolation_reproduces_its_points(
        xs in proptest::collection::btree_set(-15i64..=15, 1..=7),
        ys in proptest::collection::vec(rational(), 7),
    ) {
        let points: Vec<(i64, Rational)> = xs.iter().copied().zip(ys).collect();
        let poly = Polynomial::interpolate(&points).unwrap();
        for (x, y) in &points {
            prop_assert_eq!(&poly.evaluate(*x), y);
        }
    }

    #[test]
    fn evaluation_respects_ring_operations(
        p in proptest::collection::vec(rational(), 0..5),
        q in proptest::collection::vec(rational(), 0..5),
        x in -10i64..=10,
    ) {
        let p = Polynomial::from_coefficients(p);
        let q = Polynomial::from_coefficients(q);
        prop_assert_eq!(p.add(&q).evaluate(x), p.evaluate(x) + q.evaluate(x));
        prop_assert_eq!(p.mul(&q).evaluate(x), p.evaluate(x) * q.evaluate(x));
    }

    #[test]
    fn composition_is_associative_with_inverses((f, g, h) in permutation_triple()) {
        prop_assert_eq!(
            f.compose(&g).unwrap().compose(&h).unwrap(),
            f.compose(&g.compose(&h).unwrap()).unwrap()
        );
        prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
        prop_assert_eq!(f.compose(&g).unwrap().sign(), f.sign() * g.sign());
    }

    #[test]
    fn induced_map_action_is_a_left_action(
        (g, h) in permutation_pair(),
        labels in proptest::collection::vec(1u32..=4, 5),
    ) {
        let k = g.degree();
        let f = LabelMap::new(labels[..k].to_vec());
        prop_assert_eq!(&act_on_map(&Permutation::identity(k), &f), &f);
        prop_assert_eq!(
            act_on_map(&g.compose(&h).unwrap(), &f),
            act_on_map(&g, &act_on_map(&h, &f))
        );
    }

    #[test]
    fn closure_is_idempotent((g, h) in permutation_pair()) {
        let group = PermGroup::closure(g.degree(), &[g, h]).unwrap();
        let again = PermGroup::closure(group.degree(), group.elements()).unwrap();
        prop_assert_eq!(group.order(), again.order());
        for e in group.elements() {
            prop_assert!(again.contains(e));
        }
    }

    #[test]
    fn orbit_blocks_partition_and_are_closed((g, h) in permutation_pair()) {
        let k = g.degree();
        let group = PermGroup::closure(k, &[g, h]).unwrap();
        let partition = orbits(&group, k, |p, x| p.apply(x)).unwrap();
        let mut seen = vec![false; k];
        for block in partition.blocks() {
            for &x in block {
                prop_assert!(!seen[x]);
                seen[x] = true;
                for e in group.elements() {
                    prop_assert!(block.contains(&e.apply(x)));
                }
            }
        }
        prop_assert!(seen.into_iter().all(|visited| visited));
    }

    #[test]
    fn hom_enumeration_matches_direct_filter(
        poset in poset_strategy(),
        n in 1u32..=3,
        strict in any::<bool>(),
    ) {
        let enumerated = enumerate_homs(&poset, n, strict);
        let filtered: Vec<LabelMap> = LabelMap::enumerate_all(poset.size(), n)
            .into_iter()
            .filter(|f| {
                (0..poset.size()).all(|p| {
                    (0..poset.size()).all(|q| {
                        !poset.less(p, q)
                            || if strict {
                                f.get(p) < f.get(q)
                            } else {
                                f.get(p) <= f.get(q)
                            }
                    })
                })
            })
            .collect();
        prop_assert_eq!(enumerated, filtered);
    }

    #[test]
    fn strict_maps_are_rarer_unless_antichain(poset in poset_strategy(), n in 1u32..=4) {
        let weak = count_homs(&poset, n, false);
        let strict = count_homs(&poset, n, true);
        prop_assert!(strict <= weak);
        if poset.is_antichain() {
            prop_assert_eq!(strict, weak);
        } else {
            // a constant map is weak but not strict once any relation exists
            prop_assert!(strict < weak);
        }
    }

    #[test]
    fn one_color_pairs_count_acyclic_orientations(graph in graph_strategy()) {
        prop_assert_eq!(
            weakly_compatible_pairs(&graph, 1).len(),
            acyclic_orientations(&graph).len()
        );
    }

    #[test]
    fn diagonal_action_preserves_compatibility(graph in graph_strategy(), n in 1u32..=2) {
        let group = graph_automorphisms(&graph);
        for pair in weakly_compatible_pairs(&graph, n) {
            for g in group.elements() {
                let coloring = act_on_map(g, &pair.coloring);
                let orientation = act_on_orientation(&graph, g, &pair.orientation);
                for (idx, &(u, v)) in graph.edges().iter().enumerate() {
                    let head = orientation.heads()[idx];
                    if coloring.get(u) < coloring.get(v) {
                        prop_assert_eq!(head, v);
                    }
                    if coloring.get(v) < coloring.get(u) {
                        prop_assert_eq!(head, u);
                    }
                }
            }
        }
    }
}
