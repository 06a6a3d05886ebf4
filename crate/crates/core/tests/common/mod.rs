#![allow(dead_code)]

use artin_core::words::{defining_relators, Letter, Word};
use artin_core::{CoxeterGraph, Gen};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn g(s: &str) -> Gen {
    Gen::new(s).unwrap()
}

pub fn graph(vertices: &[&str], edges: &[(&str, &str, u64)]) -> CoxeterGraph {
    CoxeterGraph::from_parts(vertices, edges).unwrap()
}

pub fn gamma1() -> CoxeterGraph {
    graph(
        &["z", "a", "x"],
        &[("z", "a", 2), ("z", "x", 4), ("a", "x", 2)],
    )
}

/// Even FC graphs with at most five vertices and labels in {2, 4, 6, ∞}.
pub fn corpus() -> Vec<(&'static str, CoxeterGraph)> {
    vec![
        ("gamma1", gamma1()),
        ("z2", graph(&["a", "b"], &[("a", "b", 2)])),
        ("f2", graph(&["a", "b"], &[])),
        ("b2", graph(&["x", "z"], &[("x", "z", 4)])),
        (
            "path",
            graph(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]),
        ),
        (
            "square",
            graph(
                &["a", "b", "c", "d"],
                &[("a", "b", 4), ("b", "c", 2), ("c", "d", 6), ("a", "d", 2)],
            ),
        ),
        (
            "star",
            graph(
                &["c", "p", "q", "r"],
                &[("c", "p", 4), ("c", "q", 6), ("c", "r", 2), ("p", "r", 2)],
            ),
        ),
        (
            "five",
            graph(
                &["a", "b", "c", "d", "e"],
                &[
                    ("a", "b", 2),
                    ("b", "c", 2),
                    ("a", "c", 4),
                    ("c", "d", 6),
                    ("d", "e", 2),
                ],
            ),
        ),
    ]
}

/// Graphs whose labels are all 2 or ∞.
pub fn right_angled() -> Vec<(&'static str, CoxeterGraph)> {
    vec![
        ("z2", graph(&["a", "b"], &[("a", "b", 2)])),
        ("f2", graph(&["a", "b"], &[])),
        (
            "p4",
            graph(
                &["a", "b", "c", "d"],
                &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2)],
            ),
        ),
        (
            "tri_tail",
            graph(
                &["a", "b", "c", "d"],
                &[("a", "b", 2), ("b", "c", 2), ("a", "c", 2), ("c", "d", 2)],
            ),
        ),
    ]
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[Gen], len: usize) -> Word {
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
}

pub fn random_word_in<R: Rng>(rng: &mut R, graph: &CoxeterGraph, max_len: usize) -> Word {
    let alphabet: Vec<Gen> = graph.vertices().cloned().collect();
    let len = rng.gen_range(0..=max_len);
    random_word(rng, &alphabet, len)
}

/// Inserts `count` random cyclic conjugates of relators (or their inverses).
pub fn insert_relators<R: Rng>(rng: &mut R, graph: &CoxeterGraph, w: &Word, count: usize) -> Word {
    let relators = defining_relators(graph);
    let mut out = w.clone();
    if relators.is_empty() {
        return out;
    }
    for _ in 0..count {
        let mut r = relators[rng.gen_range(0..relators.len())].clone();
        if rng.gen_bool(0.5) {
            r = r.inverse();
        }
        let k = rng.gen_range(0..r.len());
        let rot: Word = r.letters()[k..]
            .iter()
            .chain(&r.letters()[..k])
            .cloned()
            .collect();
        let pos = rng.gen_range(0..=out.len());
        let mut letters = out.letters().to_vec();
        letters.splice(pos..pos, rot.letters().iter().cloned());
        out = Word(letters);
    }
    out
}
