#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use treegf_core::oracle::prufer_decode;
use treegf_core::{BigInt, Poly2, Tree};

/// A uniformly random labeled tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Tree {
    if n <= 2 {
        return Tree::path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    prufer_decode(&seq).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<treegf_core::VertexId> {
    let mut ids: Vec<usize> = (1..=n).collect();
    ids.shuffle(rng);
    ids.into_iter().map(treegf_core::VertexId).collect()
}

/// Labeled trees on `min..=max` vertices, via Prüfer sequences.
pub fn arb_tree(min: usize, max: usize) -> impl Strategy<Value = Tree> {
    (min..=max).prop_flat_map(|n| {
        if n <= 2 {
            Just(Tree::path(n)).boxed()
        } else {
            proptest::collection::vec(1..=n, n - 2).prop_map(|seq| prufer_decode(&seq).unwrap()).boxed()
        }
    })
}

/// Small polynomials: a few monomials of low degree.
pub fn arb_poly() -> impl Strategy<Value = Poly2> {
    proptest::collection::vec((0u32..3, 0u32..3, -3i64..=3), 1..3)
        .prop_map(|terms| Poly2::from_terms(terms.into_iter().map(|(i, j, c)| (i, j, BigInt::from(c)))))
}
