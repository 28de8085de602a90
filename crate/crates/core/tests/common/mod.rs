//! Shared builders for the integration suites: standard group families, a
//! deterministic fixture library of poset and graph actions, and seeded
//! random generators.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use orbipoly::graph::SimpleGraph;
use orbipoly::permgroup::{PermGroup, Permutation};
use orbipoly::poset::{is_automorphism, Poset};
use orbipoly::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn symmetric_group(k: usize) -> PermGroup {
    if k < 2 {
        return PermGroup::trivial(k);
    }
    let transposition = Permutation::from_cycles(k, &[vec![0, 1]]).unwrap();
    let rotation = Permutation::from_cycles(k, &[(0..k).collect()]).unwrap();
    PermGroup::closure(k, &[transposition, rotation]).unwrap()
}

pub fn cyclic_group(k: usize) -> PermGroup {
    if k < 2 {
        return PermGroup::trivial(k);
    }
    let rotation = Permutation::from_cycles(k, &[(0..k).collect()]).unwrap();
    PermGroup::closure(k, &[rotation]).unwrap()
}

pub fn dihedral_group(k: usize) -> PermGroup {
    if k < 3 {
        return symmetric_group(k);
    }
    let rotation = Permutation::from_cycles(k, &[(0..k).collect()]).unwrap();
    let reflection = Permutation::from_images((0..k).map(|v| (k - v) % k).collect()).unwrap();
    PermGroup::closure(k, &[rotation, reflection]).unwrap()
}

pub fn closure_of(degree: usize, cycles: &[&[usize]]) -> PermGroup {
    let g = Permutation::from_cycles(
        degree,
        &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
    )
    .unwrap();
    PermGroup::closure(degree, &[g]).unwrap()
}

pub fn all_permutations(k: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == k {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for x in 0..k {
            if !prefix.contains(&x) {
                prefix.push(x);
                extend(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), k, &mut out);
    out
}

/// Full automorphism group of a poset by brute force; fine for size ≤ 6.
pub fn poset_automorphisms(poset: &Poset) -> PermGroup {
    let elements = all_permutations(poset.size())
        .into_iter()
        .filter(|g| is_automorphism(poset, g))
        .collect();
    PermGroup::from_elements(poset.size(), elements).unwrap()
}

/// Full automorphism group of a graph by brute force; fine for ≤ 6 vertices.
pub fn graph_automorphisms(graph: &SimpleGraph) -> PermGroup {
    let elements = all_permutations(graph.vertex_count())
        .into_iter()
        .filter(|g| {
            graph
                .edges()
                .iter()
                .all(|&(u, v)| graph.edge_index(g.apply(u), g.apply(v)).is_some())
        })
        .collect();
    PermGroup::from_elements(graph.vertex_count(), elements).unwrap()
}

pub fn random_subgroup(rng: &mut ChaCha8Rng, full: &PermGroup) -> PermGroup {
    let count = rng.gen_range(1..=2);
    let generators: Vec<Permutation> = (0..count)
        .map(|_| full.elements().choose(rng).unwrap().clone())
        .collect();
    PermGroup::closure(full.degree(), &generators).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, k: usize) -> Permutation {
    let mut images: Vec<usize> = (0..k).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn random_poset(rng: &mut ChaCha8Rng, size: usize) -> Poset {
    loop {
        let mut relations = Vec::new();
        for p in 0..size {
            for q in 0..size {
                if p != q && rng.gen_bool(0.3) {
                    relations.push((p, q));
                }
            }
        }
        if let Ok(poset) = Poset::from_relations(size, &relations) {
            return poset;
        }
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, size: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..size {
        for v in u + 1..size {
            if rng.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(size, &edges).unwrap()
}

/// Exactly 63 pairwise distinct posets on ≤ 4 elements: every chain and
/// antichain up to size 4, topped up with seeded random relation sets.
pub fn poset_zoo() -> Vec<Poset> {
    let mut seen: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    let mut zoo: Vec<Poset> = Vec::new();
    let push = |poset: Poset, zoo: &mut Vec<Poset>, seen: &mut BTreeSet<_>| {
        if seen.insert((poset.size(), poset.relation_pairs())) {
            zoo.push(poset);
        }
    };
    for k in 1..=4 {
        push(Poset::chain(k), &mut zoo, &mut seen);
        push(Poset::antichain(k), &mut zoo, &mut seen);
    }
    let mut rng = rng(0x5EED_0001);
    while zoo.len() < 63 {
        let size = rng.gen_range(2..=4);
        push(random_poset(&mut rng, size), &mut zoo, &mut seen);
    }
    zoo
}

fn poset(size: usize, relations: &[(usize, usize)]) -> Poset {
    Poset::from_relations(size, relations).unwrap()
}

/// Named poset actions with at most 5 elements each, all valid by
/// construction. Deterministic: the random tail is seeded.
pub fn poset_action_suite() -> Vec<(String, Poset, PermGroup)> {
    let mut suite: Vec<(String, Poset, PermGroup)> = vec![
        ("singleton".into(), Poset::antichain(1), PermGroup::trivial(1)),
        ("antichain2/swap".into(), Poset::antichain(2), symmetric_group(2)),
        ("antichain3/sym".into(), Poset::antichain(3), symmetric_group(3)),
        ("antichain3/cyclic".into(), Poset::antichain(3), cyclic_group(3)),
        ("antichain4/sym".into(), Poset::antichain(4), symmetric_group(4)),
        (
            "antichain4/double-swap".into(),
            Poset::antichain(4),
            closure_of(4, &[&[0, 1], &[2, 3]]),
        ),
        ("antichain5/sym".into(), Poset::antichain(5), symmetric_group(5)),
        ("antichain5/dihedral".into(), Poset::antichain(5), dihedral_group(5)),
        ("chain2/trivial".into(), Poset::chain(2), PermGroup::trivial(2)),
        ("chain3/trivial".into(), Poset::chain(3), PermGroup::trivial(3)),
        ("chain4/trivial".into(), Poset::chain(4), PermGroup::trivial(4)),
        ("chain5/trivial".into(), Poset::chain(5), PermGroup::trivial(5)),
        (
            "two-chains/chain-swap".into(),
            poset(4, &[(0, 2), (1, 3)]),
            closure_of(4, &[&[0, 1], &[2, 3]]),
        ),
        (
            "two-chains/trivial".into(),
            poset(4, &[(0, 2), (1, 3)]),
            PermGroup::trivial(4),
        ),
        (
            "diamond/arm-swap".into(),
            poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
            closure_of(4, &[&[1, 2]]),
        ),
        (
            "diamond/trivial".into(),
            poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
            PermGroup::trivial(4),
        ),
        (
            "vee/arm-swap".into(),
            poset(3, &[(0, 1), (0, 2)]),
            closure_of(3, &[&[1, 2]]),
        ),
        (
            "wedge/foot-swap".into(),
            poset(3, &[(0, 2), (1, 2)]),
            closure_of(3, &[&[0, 1]]),
        ),
        (
            "antichain2-plus-chain3/swap".into(),
            poset(5, &[(2, 3), (3, 4)]),
            closure_of(5, &[&[0, 1]]),
        ),
        (
            "bowtie/two-swaps".into(),
            poset(5, &[(0, 4), (1, 4), (4, 2), (4, 3)]),
            PermGroup::closure(
                5,
                &[
                    Permutation::from_cycles(5, &[vec![0, 1]]).unwrap(),
                    Permutation::from_cycles(5, &[vec![2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "two-chains-plus-point/chain-swap".into(),
            poset(5, &[(0, 2), (1, 3)]),
            closure_of(5, &[&[0, 1], &[2, 3]]),
        ),
    ];
    let mut rng = rng(0x5EED_0002);
    for i in 0..5 {
        let size = rng.gen_range(3..=5);
        let poset = random_poset(&mut rng, size);
        let group = random_subgroup(&mut rng, &poset_automorphisms(&poset));
        suite.push((format!("random-poset-{}", i), poset, group));
    }
    suite
}

fn graph(size: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::new(size, edges).unwrap()
}

/// Named graph actions with at most 5 vertices each, all valid by
/// construction. Deterministic: the random tail is seeded.
pub fn graph_action_suite() -> Vec<(String, SimpleGraph, PermGroup)> {
    let mut suite: Vec<(String, SimpleGraph, PermGroup)> = vec![
        ("edge/trivial".into(), graph(2, &[(0, 1)]), PermGroup::trivial(2)),
        ("edge/swap".into(), graph(2, &[(0, 1)]), symmetric_group(2)),
        ("edgeless3/sym".into(), graph(3, &[]), symmetric_group(3)),
        (
            "path3/flip".into(),
            graph(3, &[(0, 1), (1, 2)]),
            closure_of(3, &[&[0, 2]]),
        ),
        ("triangle/trivial".into(), SimpleGraph::cycle(3), PermGroup::trivial(3)),
        ("triangle/cyclic".into(), SimpleGraph::cycle(3), cyclic_group(3)),
        ("triangle/dihedral".into(), SimpleGraph::cycle(3), dihedral_group(3)),
        ("square/cyclic".into(), SimpleGraph::cycle(4), cyclic_group(4)),
        ("square/dihedral".into(), SimpleGraph::cycle(4), dihedral_group(4)),
        (
            "square-with-diagonal/swaps".into(),
            graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
            PermGroup::closure(
                4,
                &[
                    Permutation::from_cycles(4, &[vec![1, 3]]).unwrap(),
                    Permutation::from_cycles(4, &[vec![0, 2]]).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "complete4/sym".into(),
            graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            symmetric_group(4),
        ),
        (
            "star3/leaf-sym".into(),
            graph(4, &[(0, 1), (0, 2), (0, 3)]),
            PermGroup::closure(
                4,
                &[
                    Permutation::from_cycles(4, &[vec![1, 2]]).unwrap(),
                    Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "two-edges/cross-swap".into(),
            graph(4, &[(0, 1), (2, 3)]),
            closure_of(4, &[&[0, 2], &[1, 3]]),
        ),
        ("pentagon/dihedral".into(), SimpleGraph::cycle(5), dihedral_group(5)),
        ("pentagon/cyclic".into(), SimpleGraph::cycle(5), cyclic_group(5)),
        (
            "path4/flip".into(),
            graph(4, &[(0, 1), (1, 2), (2, 3)]),
            closure_of(4, &[&[0, 3], &[1, 2]]),
        ),
        (
            "paw/swap".into(),
            graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
            closure_of(4, &[&[0, 1]]),
        ),
    ];
    let mut rng = rng(0x5EED_0003);
    for i in 0..4 {
        let size = rng.gen_range(3..=5);
        let graph = random_graph(&mut rng, size);
        let group = random_subgroup(&mut rng, &graph_automorphisms(&graph));
        suite.push((format!("random-graph-{}", i), graph, group));
    }
    suite
}
