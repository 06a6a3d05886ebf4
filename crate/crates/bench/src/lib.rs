//! Fixed benchmark inputs: graphs and seeded random words.

use artin_core::{CoxeterGraph, Gen, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Six vertices, FC, with labels 2, 4 and 6 and one missing edge per
/// vertex on average.
pub fn six_vertex() -> CoxeterGraph {
    CoxeterGraph::from_parts(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "b", 4),
            ("b", "c", 2),
            ("a", "c", 2),
            ("c", "d", 6),
            ("d", "e", 2),
            ("e", "f", 4),
            ("a", "f", 2),
        ],
    )
    .unwrap()
}

/// `{z, a, x}` with `m(z,a) = 2`, `m(z,x) = 4`, `m(a,x) = 2`.
pub fn gamma1() -> CoxeterGraph {
    CoxeterGraph::from_parts(
        &["z", "a", "x"],
        &[("z", "a", 2), ("z", "x", 4), ("a", "x", 2)],
    )
    .unwrap()
}

/// `count` uniformly random words of length `len` over the vertices.
pub fn random_words(graph: &CoxeterGraph, len: usize, count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet: Vec<Gen> = graph.vertices().cloned().collect();
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| {
                    let g = &alphabet[rng.gen_range(0..alphabet.len())];
                    if rng.gen_bool(0.5) {
                        Letter::pos(g)
                    } else {
                        Letter::neg(g)
                    }
                })
                .collect()
        })
        .collect()
}
