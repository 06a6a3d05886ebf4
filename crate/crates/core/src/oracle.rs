//! Brute-force oracles that share no machinery with the normal-form engine.
//! They exist to cross-check it.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{CoxeterGraph, Gen};
use crate::splitter::ArtinGroup;
use crate::words::{defining_relators, free_reduce, Letter, Sign, Word};

/// Search limits for [`bfs_trivial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsBudget {
    pub max_length: usize,
    pub max_depth: usize,
    pub max_states: usize,
}

impl BfsBudget {
    /// `max_length = 2|w| + 8`, depth 8, two million states.
    pub fn default_for(w: &Word) -> Self {
        BfsBudget {
            max_length: 2 * w.len() + 8,
            max_depth: 8,
            max_states: 2_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BfsVerdict {
    ProvenTrivial,
    Inconclusive,
}

// Letters as signed indices: generator i is ±(i + 1).
type Code = i16;

fn encode(index: &BTreeMap<&Gen, usize>, w: &Word) -> Result<Vec<Code>> {
    w.letters()
        .iter()
        .map(|l| {
            let i = *index
                .get(&l.gen)
                .ok_or_else(|| Error::LetterOutsideAlphabet(l.gen.to_string()))?
                as Code
                + 1;
            Ok(if l.sign == Sign::Pos { i } else { -i })
        })
        .collect()
}

fn reduce_into(out: &mut Vec<Code>, letters: impl IntoIterator<Item = Code>) {
    for c in letters {
        if out.last() == Some(&-c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
}

/// Tries to reduce `w` to the empty word by inserting cyclic conjugates of
/// relators (and their inverses) anywhere and freely reducing.
///
/// Best-first: shorter words are expanded first, and the search stops once
/// `max_states` distinct words have been seen. Only ever claims triviality.
pub fn bfs_trivial(graph: &CoxeterGraph, w: &Word, budget: BfsBudget) -> Result<BfsVerdict> {
    if budget.max_length == 0 || budget.max_depth == 0 || budget.max_states == 0 {
        return Err(Error::InvalidArgument(
            "BFS budget entries must be positive".into(),
        ));
    }
    let index: BTreeMap<&Gen, usize> = graph.vertices().enumerate().map(|(i, g)| (g, i)).collect();
    let start = {
        let mut v = Vec::new();
        reduce_into(&mut v, encode(&index, w)?);
        v
    };
    if start.is_empty() {
        return Ok(BfsVerdict::ProvenTrivial);
    }
    let mut pieces: Vec<Vec<Code>> = Vec::new();
    for r in defining_relators(graph) {
        let code = encode(&index, &r)?;
        let inv: Vec<Code> = code.iter().rev().map(|c| -c).collect();
        for base in [code, inv] {
            for k in 0..base.len() {
                let rot: Vec<Code> = base[k..].iter().chain(&base[..k]).copied().collect();
                if !pieces.contains(&rot) {
                    pieces.push(rot);
                }
            }
        }
    }

    let mut best_depth: HashMap<Vec<Code>, usize> = HashMap::new();
    let mut heap = BinaryHeap::new();
    best_depth.insert(start.clone(), 0);
    heap.push(Reverse((start.len(), 0usize, start)));
    while let Some(Reverse((_, depth, cur))) = heap.pop() {
        if best_depth.get(&cur).is_some_and(|&d| d < depth) || depth >= budget.max_depth {
            continue;
        }
        for pos in 0..=cur.len() {
            for piece in &pieces {
                let mut next = Vec::with_capacity(cur.len() + piece.len());
                reduce_into(&mut next, cur[..pos].iter().copied());
                reduce_into(&mut next, piece.iter().copied());
                reduce_into(&mut next, cur[pos..].iter().copied());
                if next.is_empty() {
                    return Ok(BfsVerdict::ProvenTrivial);
                }
                if next.len() > budget.max_length {
                    continue;
                }
                let d = depth + 1;
                if best_depth.get(&next).is_some_and(|&old| old <= d) {
                    continue;
                }
                if best_depth.len() >= budget.max_states {
                    return Ok(BfsVerdict::Inconclusive);
                }
                best_depth.insert(next.clone(), d);
                heap.push(Reverse((next.len(), d, next)));
            }
        }
    }
    Ok(BfsVerdict::Inconclusive)
}

fn require_right_angled(graph: &CoxeterGraph) -> Result<()> {
    match graph.edges().find(|(_, _, m)| *m != 2) {
        Some((s, t, m)) => Err(Error::InvalidArgument(format!(
            "edge {s}-{t} has label {m}, not 2"
        ))),
        None => Ok(()),
    }
}

/// The lexicographically least reduced representative of `w` in a
/// right-angled Artin group, letters ordered by `(generator, + before −)`.
pub fn raag_normal_form(graph: &CoxeterGraph, w: &Word) -> Result<Word> {
    require_right_angled(graph)?;
    w.check_alphabet(graph.vertex_set())?;
    let commute = |a: &Letter, b: &Letter| a.gen != b.gen && graph.linked(&a.gen, &b.gen);

    // Cancel s^ε … s^{-ε} whenever everything in between commutes with s.
    let mut letters = free_reduce(w).0;
    'outer: loop {
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                if letters[i].cancels(&letters[j]) {
                    letters.remove(j);
                    letters.remove(i);
                    continue 'outer;
                }
                if !commute(&letters[i], &letters[j]) {
                    break;
                }
            }
        }
        break;
    }

    // Greedy lex-least linearization of the commutation class.
    let key = |l: &Letter| (l.gen.clone(), l.sign == Sign::Neg);
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..letters.len() {
            if letters[..i].iter().all(|p| commute(p, &letters[i]))
                && best.is_none_or(|b| key(&letters[i]) < key(&letters[b]))
            {
                best = Some(i);
            }
        }
        out.push(letters.remove(best.expect("the first letter is always available")));
    }
    Ok(Word(out))
}

/// Outcome of [`exhaustive_equality`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub words: usize,
    pub classes: usize,
    /// `u ~ v` but `u s ≁ v s` or `s u ≁ s v`.
    pub congruence_violations: Vec<String>,
    /// `u ~ v` but the search could not prove `u v^{-1} = 1`.
    pub bfs_violations: Vec<String>,
}

impl EqualityReport {
    pub fn violation_count(&self) -> usize {
        self.congruence_violations.len() + self.bfs_violations.len()
    }
}

pub const EXHAUSTIVE_MAX_VERTICES: usize = 3;
pub const EXHAUSTIVE_MAX_BOUND: usize = 6;

/// All freely reduced words of length `≤ bound`, shortlex.
pub fn reduced_words(graph: &CoxeterGraph, bound: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = graph
        .vertices()
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for l in &alphabet {
                if w.letters().last().is_some_and(|last| last.cancels(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Partitions all reduced words up to `bound` by canonical form, then checks
/// the partition is a congruence and that [`bfs_trivial`] agrees with it.
// Canonical forms hold lazily filled labels; hashing does not look at them.
#[allow(clippy::mutable_key_type)]
pub fn exhaustive_equality(graph: &CoxeterGraph, bound: usize) -> Result<EqualityReport> {
    if graph.len() > EXHAUSTIVE_MAX_VERTICES || bound > EXHAUSTIVE_MAX_BOUND {
        return Err(Error::InvalidArgument(format!(
            "exhaustive check is capped at {EXHAUSTIVE_MAX_VERTICES} vertices and length {EXHAUSTIVE_MAX_BOUND}"
        )));
    }
    let group = ArtinGroup::new(graph)?;
    let words = reduced_words(graph, bound);
    let mut classes: HashMap<_, Vec<&Word>> = HashMap::new();
    for w in &words {
        classes.entry(group.normal_form(w)?).or_default().push(w);
    }
    let mut report = EqualityReport {
        words: words.len(),
        classes: classes.len(),
        ..Default::default()
    };
    let letters: Vec<Letter> = graph
        .vertices()
        .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    for members in classes.values() {
        let rep = members[0];
        for l in &letters {
            let single = Word::letter(l.clone());
            let rep_right = group.normal_form(&rep.concat(&single))?;
            let rep_left = group.normal_form(&single.concat(rep))?;
            for w in &members[1..] {
                if group.normal_form(&w.concat(&single))? != rep_right {
                    report
                        .congruence_violations
                        .push(format!("{w} ~ {rep} but not after right {l:?}"));
                }
                if group.normal_form(&single.concat(w))? != rep_left {
                    report
                        .congruence_violations
                        .push(format!("{w} ~ {rep} but not after left {l:?}"));
                }
            }
        }
        for w in &members[1..] {
            let probe = w.concat(&rep.inverse());
            if bfs_trivial(graph, &probe, BfsBudget::default_for(&probe))?
                != BfsVerdict::ProvenTrivial
            {
                report
                    .bfs_violations
                    .push(format!("{w} ~ {rep} not proven"));
            }
        }
    }
    report.congruence_violations.sort();
    report.bfs_violations.sort();
    Ok(report)
}
