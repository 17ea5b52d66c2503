#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;

use equihom::fingroup::{build_group, FiniteGroup, GroupSpec, DEFAULT_MAX_ORDER};
use equihom::gcomplex::{GComplex, SComplex};

/// Small permutation groups given by generators on `m` positions.
pub fn groups() -> Vec<(usize, Vec<Vec<usize>>)> {
    vec![
        (1, vec![]),
        (2, vec![vec![1, 0]]),
        (3, vec![vec![1, 2, 0]]),
        (3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
        (4, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]),
        (4, vec![vec![1, 2, 3, 0]]),
    ]
}

pub fn group_of(m: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    build_group(
        &GroupSpec::Permutations {
            degree: m,
            generators: gens.to_vec(),
        },
        DEFAULT_MAX_ORDER,
    )
    .expect("group builds")
}

/// Vertices `a * copies + i`, the group permuting the first coordinate.
pub fn lift(gens: &[Vec<usize>], copies: usize) -> Vec<Vec<usize>> {
    gens.iter()
        .map(|p| (0..p.len() * copies).map(|v| p[v / copies] * copies + v % copies).collect())
        .collect()
}

/// Closes a set of seed simplices under the action and builds the G-complex.
pub fn invariant_complex(m: usize, gens: &[Vec<usize>], copies: usize, seeds: &[Vec<usize>], subdivide: bool) -> GComplex {
    let group = group_of(m, gens);
    let n = m * copies;
    let action = lift(gens, copies);
    let perms: Vec<Vec<usize>> = group
        .elements()
        .map(|g| {
            let p = group.permutation(g).expect("permutation group");
            (0..n).map(|v| p[v / copies] * copies + v % copies).collect()
        })
        .collect();
    let mut maximal: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in seeds {
        for p in &perms {
            let mut img: Vec<usize> = s.iter().map(|&v| p[v % n]).collect();
            img.sort();
            img.dedup();
            maximal.insert(img);
        }
    }
    let maximal: Vec<Vec<usize>> = maximal.into_iter().collect();
    let k = SComplex::numbered(n, &maximal).expect("complex");
    let x = GComplex::new(k, group, &action).expect("action");
    if subdivide {
        x.subdivide()
    } else {
        x
    }
}

prop_compose! {
    /// A subdivided G-complex of dimension ≤ 2 (≤ 1 for groups of order 4 and up).
    pub fn arb_gcomplex()(gi in 0..6usize, copies in 1..=2usize, seeds in prop::collection::vec(prop::collection::vec(0..8usize, 1..=3), 1..=3))
        -> GComplex
    {
        let (m, gens) = groups()[gi].clone();
        let big = group_of(m, &gens).order() >= 4;
        let seeds: Vec<Vec<usize>> = seeds
            .into_iter()
            .map(|mut s| {
                if big {
                    s.truncate(2);
                }
                s
            })
            .collect();
        invariant_complex(m, &gens, copies, &seeds, true)
    }
}

prop_compose! {
    /// A finite G-set, as a 0-dimensional complex, over a group of order ≤ 4.
    pub fn arb_gset()(gi in 1..6usize, copies in 1..=2usize, pts in prop::collection::vec(0..8usize, 1..=2))
        -> GComplex
    {
        let (m, gens) = groups()[gi].clone();
        let seeds: Vec<Vec<usize>> = pts.into_iter().map(|p| vec![p]).collect();
        invariant_complex(m, &gens, copies, &seeds, false)
    }
}

/// A complex with no group, on up to `n` vertices.
pub fn arb_plain(n: usize) -> impl Strategy<Value = SComplex> {
    prop::collection::vec(prop::collection::btree_set(0..n, 1..=3), 1..=6).prop_map(move |sets| {
        let maximal: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        SComplex::numbered(n, &maximal).expect("complex")
    })
}
