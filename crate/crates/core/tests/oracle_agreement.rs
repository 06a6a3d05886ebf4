mod common;

use artin_core::oracle::{
    bfs_trivial, exhaustive_equality, raag_normal_form, reduced_words, BfsBudget, BfsVerdict,
};
use artin_core::ArtinGroup;
use common::*;
use rand::Rng;

#[test]
fn raag_oracle_matches_word_problem() {
    let mut rng = rng(21);
    for (name, gm) in right_angled() {
        let group = ArtinGroup::new(&gm).unwrap();
        for i in 0..200 {
            let w1 = random_word_in(&mut rng, &gm, 10);
            // Half the pairs are related by relator insertion, so both answers occur.
            let w2 = if i % 2 == 0 {
                let depth = rng.gen_range(1..4);
                insert_relators(&mut rng, &gm, &w1, depth)
            } else {
                random_word_in(&mut rng, &gm, 10)
            };
            let oracle = raag_normal_form(&gm, &w1).unwrap() == raag_normal_form(&gm, &w2).unwrap();
            assert_eq!(
                group.words_equal(&w1, &w2).unwrap(),
                oracle,
                "{name}: {w1} vs {w2}"
            );
        }
    }
}

#[test]
fn bfs_proofs_are_trivial_in_the_engine() {
    let mut rng = rng(22);
    for (name, gm) in corpus() {
        let group = ArtinGroup::new(&gm).unwrap();
        let mut proven = 0;
        for i in 0..40 {
            let w1 = random_word_in(&mut rng, &gm, 3);
            let w2 = if i % 2 == 0 {
                w1.clone()
            } else {
                random_word_in(&mut rng, &gm, 3)
            };
            let noisy = insert_relators(&mut rng, &gm, &w2, 1);
            let word = w1.concat(&noisy.inverse());
            // Soundness does not depend on the budget; a small one keeps failed searches cheap.
            let budget = BfsBudget {
                max_states: 20_000,
                ..BfsBudget::default_for(&word)
            };
            let verdict = bfs_trivial(&gm, &word, budget).unwrap();
            proven += usize::from(verdict == BfsVerdict::ProvenTrivial);
            if verdict == BfsVerdict::ProvenTrivial {
                assert!(
                    group.normal_form(&word).unwrap().is_identity(),
                    "{name}: {word}"
                );
            }
        }
        // Every other probe is trivial by construction.
        assert!(proven >= 20, "{name}: only {proven} proofs");
    }
}

#[test]
fn short_trivial_words_are_provable() {
    for (name, gm) in corpus().into_iter().filter(|(_, g)| g.len() <= 4) {
        let group = ArtinGroup::new(&gm).unwrap();
        for word in reduced_words(&gm, 6) {
            if group.normal_form(&word).unwrap().is_identity() {
                let verdict = bfs_trivial(&gm, &word, BfsBudget::default_for(&word)).unwrap();
                assert_eq!(verdict, BfsVerdict::ProvenTrivial, "{name}: {word}");
            }
        }
    }
}

#[test]
fn exhaustive_reports_are_clean() {
    let z2 = graph(&["a", "b"], &[("a", "b", 2)]);
    let report = exhaustive_equality(&z2, 4).unwrap();
    assert_eq!(report.violation_count(), 0, "{report:?}");
    // exponent vectors with |p| + |q| ≤ 4
    assert_eq!(report.classes, 41);

    let f2 = graph(&["a", "b"], &[]);
    let report = exhaustive_equality(&f2, 4).unwrap();
    assert_eq!(report.violation_count(), 0);
    assert_eq!(report.classes, report.words);

    let report = exhaustive_equality(&gamma1(), 4).unwrap();
    assert_eq!(report.violation_count(), 0, "{report:?}");
}
