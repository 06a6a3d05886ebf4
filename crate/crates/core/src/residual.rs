//! Amalgam splittings over a missing edge and a small finite-quotient search
//! that separates individual nontrivial elements from the identity.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{full_subgraph, CoxeterGraph, Gen};
use crate::splitter::ArtinGroup;
use crate::words::{defining_relators, retract, Letter, Sign, Word};

/// `A = A_X *_{A_Z} A_Y` for a pair `s, t` with `m_{s,t} = ∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmalgamSplit {
    pub s: Gen,
    pub t: Gen,
    pub x: BTreeSet<Gen>,
    pub y: BTreeSet<Gen>,
    pub z: BTreeSet<Gen>,
}

/// Splits over the least unlinked pair, or `None` for a complete graph.
pub fn amalgam_split(graph: &CoxeterGraph) -> Option<AmalgamSplit> {
    let (s, t) = graph
        .vertex_set()
        .iter()
        .tuple_combinations()
        .find(|(s, t)| !graph.linked(s, t))?;
    let all = graph.vertex_set();
    let without = |v: &Gen| {
        all.iter()
            .filter(|g| *g != v)
            .cloned()
            .collect::<BTreeSet<_>>()
    };
    let x = without(s);
    let y = without(t);
    let z = x.intersection(&y).cloned().collect();
    Some(AmalgamSplit {
        s: s.clone(),
        t: t.clone(),
        x,
        y,
        z,
    })
}

fn random_word<R: Rng>(rng: &mut R, alphabet: &[Gen], len: usize) -> Word {
    if alphabet.is_empty() {
        return Word::new();
    }
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

/// Checks that `π_{X,Z}` and `π_{Y,Z}` are well-defined retractions: relators
/// of `A_X`, `A_Y` retract to the identity, `Z`-words are fixed, and the maps
/// are idempotent on `samples` random words. Returns the violations.
pub fn check_split_retractions<R: Rng>(
    graph: &CoxeterGraph,
    split: &AmalgamSplit,
    samples: usize,
    rng: &mut R,
) -> Result<Vec<String>> {
    let z_graph = full_subgraph(graph, &split.z)?;
    let az = ArtinGroup::new(&z_graph)?;
    let mut violations = Vec::new();
    for side in [&split.x, &split.y] {
        let sub = full_subgraph(graph, side)?;
        for r in defining_relators(&sub) {
            let image = retract(&split.z, &r);
            if !az.normal_form(&image)?.is_identity() {
                violations.push(format!("relator {r} retracts to {image}"));
            }
        }
        let alphabet: Vec<Gen> = side.iter().cloned().collect();
        for _ in 0..samples {
            let len = rng.gen_range(0..=10);
            let w = random_word(rng, &alphabet, len);
            let once = retract(&split.z, &w);
            if az.normal_form(&retract(&split.z, &once))? != az.normal_form(&once)? {
                violations.push(format!("retraction not idempotent on {w}"));
            }
        }
    }
    let z_alphabet: Vec<Gen> = split.z.iter().cloned().collect();
    for _ in 0..samples {
        let len = rng.gen_range(0..=10);
        let w = random_word(rng, &z_alphabet, len);
        if az.normal_form(&retract(&split.z, &w))? != az.normal_form(&w)? {
            violations.push(format!("Z-word {w} moved"));
        }
    }
    Ok(violations)
}

/// A permutation of `{0, …, d-1}`; `p[i]` is the image of `i`. Products act
/// on the right: `(p q)[i] = q[p[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d as u8).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn then(&self, q: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| q.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            out[p as usize] = i as u8;
        }
        Perm(out)
    }

    /// Cycle lengths, longest first.
    fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Cycle notation on points `1..=d`; `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Cyclic(u64),
    Symmetric(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Image {
    Residue(u64),
    Perm(Perm),
}

impl fmt::Display for Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Image::Residue(r) => write!(f, "{r}"),
            Image::Perm(p) => write!(f, "{p}"),
        }
    }
}

/// A homomorphism to a finite group, given on generators, under which the
/// queried word is not the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteWitness {
    pub target: Target,
    pub assignment: Vec<(Gen, Image)>,
    pub image: Image,
}

impl FiniteWitness {
    /// Evaluates `w` under the assignment.
    pub fn evaluate(&self, w: &Word) -> Result<Image> {
        let lookup = |g: &Gen| {
            self.assignment
                .iter()
                .find(|(h, _)| h == g)
                .map(|(_, i)| i)
                .ok_or_else(|| Error::LetterOutsideAlphabet(g.to_string()))
        };
        match self.target {
            Target::Cyclic(n) => {
                let mut acc: i128 = 0;
                for l in w.letters() {
                    let Image::Residue(r) = lookup(&l.gen)? else {
                        return Err(Error::Internal("mixed witness".into()));
                    };
                    acc += *r as i128 * l.sign.as_i64() as i128;
                }
                Ok(Image::Residue(acc.rem_euclid(n as i128) as u64))
            }
            Target::Symmetric(d) => {
                let mut acc = Perm::identity(d);
                for l in w.letters() {
                    let Image::Perm(p) = lookup(&l.gen)? else {
                        return Err(Error::Internal("mixed witness".into()));
                    };
                    acc = match l.sign {
                        Sign::Pos => acc.then(p),
                        Sign::Neg => acc.then(&p.inverse()),
                    };
                }
                Ok(Image::Perm(acc))
            }
        }
    }

    /// True iff every defining relator of `graph` maps to the identity.
    pub fn respects_relators(&self, graph: &CoxeterGraph) -> Result<bool> {
        for r in defining_relators(graph) {
            let trivial = match self.evaluate(&r)? {
                Image::Residue(x) => x == 0,
                Image::Perm(p) => p.is_identity(),
            };
            if !trivial {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for FiniteWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            Target::Cyclic(n) => writeln!(f, "target: Z/{n}")?,
            Target::Symmetric(d) => writeln!(f, "target: S{d}")?,
        }
        for (g, image) in &self.assignment {
            writeln!(f, "gen {g} -> {image}")?;
        }
        write!(f, "image -> {}", self.image)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum Separation {
    TrivialInput,
    Witness(FiniteWitness),
    NotFound,
}

/// Default cap on the permutation degree.
pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Looks for a finite quotient in which `w` survives: first `Z/n` through an
/// exponent sum, then permutation representations of degree `2..=max_degree`.
pub fn separate(
    graph: &CoxeterGraph,
    w: &Word,
    max_degree: usize,
    degree_cap: usize,
) -> Result<Separation> {
    if max_degree > degree_cap {
        return Err(Error::DegreeBound {
            requested: max_degree,
            max: degree_cap,
        });
    }
    let group = ArtinGroup::new(graph)?;
    if group.normal_form(w)?.is_identity() {
        return Ok(Separation::TrivialInput);
    }
    if let Some((g, e)) = graph
        .vertices()
        .map(|g| (g, w.exponent_sum(g)))
        .find(|(_, e)| *e != 0)
    {
        let n = e.unsigned_abs() + 1;
        let witness = FiniteWitness {
            target: Target::Cyclic(n),
            assignment: graph
                .vertices()
                .map(|h| (h.clone(), Image::Residue(u64::from(h == g))))
                .collect(),
            image: Image::Residue(e.rem_euclid(n as i64) as u64),
        };
        return Ok(Separation::Witness(witness));
    }
    for d in 2..=max_degree {
        if let Some(witness) = permutation_search(graph, w, d) {
            return Ok(Separation::Witness(witness));
        }
    }
    Ok(Separation::NotFound)
}

/// One representative per cycle type, cycles on consecutive points.
fn cycle_type_representatives(d: usize) -> Vec<Perm> {
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    partitions(d, d)
        .into_iter()
        .map(|parts| {
            let mut p = vec![0u8; d];
            let mut start = 0;
            for len in parts {
                for i in 0..len {
                    p[start + i] = (start + (i + 1) % len) as u8;
                }
                start += len;
            }
            Perm(p)
        })
        .collect()
}

struct Search<'a> {
    gens: Vec<Gen>,
    /// `(i, j, k)`: `(g_i g_j)^k = (g_j g_i)^k` with `i < j`.
    relations: Vec<(usize, usize, u32)>,
    word: Vec<(usize, Sign)>,
    all: &'a [Perm],
    first: &'a [Perm],
    chosen: Vec<Perm>,
}

impl Search<'_> {
    fn relations_hold(&self, upto: usize) -> bool {
        self.relations
            .iter()
            .filter(|(_, j, _)| *j == upto)
            .all(|&(i, j, k)| {
                let st = self.chosen[i].then(&self.chosen[j]);
                let ts = self.chosen[j].then(&self.chosen[i]);
                let (mut a, mut b) = (st.clone(), ts.clone());
                for _ in 1..k {
                    a = a.then(&st);
                    b = b.then(&ts);
                }
                a == b
            })
    }

    fn image(&self) -> Perm {
        let d = self.chosen[0].0.len();
        let mut acc = Perm::identity(d);
        for &(i, sign) in &self.word {
            acc = match sign {
                Sign::Pos => acc.then(&self.chosen[i]),
                Sign::Neg => acc.then(&self.chosen[i].inverse()),
            };
        }
        acc
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.gens.len() {
            return !self.image().is_identity();
        }
        let candidates = if depth == 0 { self.first } else { self.all };
        for p in candidates {
            self.chosen.push(p.clone());
            if self.relations_hold(depth) && self.run(depth + 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Backtracking over degree-`d` assignments for the generators of `w`; the
/// others go to the identity, which satisfies every relation with them.
fn permutation_search(graph: &CoxeterGraph, w: &Word, d: usize) -> Option<FiniteWitness> {
    let gens: Vec<Gen> = w.generators().into_iter().collect();
    let pos = |g: &Gen| gens.iter().position(|h| h == g);
    let relations = graph
        .edges()
        .filter_map(|(s, t, m)| {
            let (i, j) = (pos(s)?, pos(t)?);
            Some((i.min(j), i.max(j), m / 2))
        })
        .collect();
    let word = w
        .letters()
        .iter()
        .map(|l| (pos(&l.gen).unwrap(), l.sign))
        .collect();
    let all: Vec<Perm> = (0..d as u8).permutations(d).map(Perm).collect();
    let first = cycle_type_representatives(d);
    debug_assert!(first.iter().map(Perm::cycle_type).all_unique());
    let mut search = Search {
        gens: gens.clone(),
        relations,
        word,
        all: &all,
        first: &first,
        chosen: Vec::new(),
    };
    if !search.run(0) {
        return None;
    }
    let image = search.image();
    let assignment = graph
        .vertices()
        .map(|g| {
            let p = match pos(g) {
                Some(i) => search.chosen[i].clone(),
                None => Perm::identity(d),
            };
            (g.clone(), Image::Perm(p))
        })
        .collect();
    Some(FiniteWitness {
        target: Target::Symmetric(d),
        assignment,
        image: Image::Perm(image),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn g(s: &str) -> Gen {
        Gen::new(s).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Gen> {
        items.iter().map(|s| g(s)).collect()
    }

    #[test]
    fn split_examples() {
        let path =
            CoxeterGraph::from_parts(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]).unwrap();
        let split = amalgam_split(&path).unwrap();
        assert_eq!(
            (split.x.clone(), split.y.clone(), split.z.clone()),
            (set(&["b", "c"]), set(&["a", "b"]), set(&["b"]))
        );
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        assert!(check_split_retractions(&path, &split, 50, &mut rng)
            .unwrap()
            .is_empty());
        assert_eq!(retract(&split.z, &w("c b c^-1")), w("b"));

        let tri = CoxeterGraph::from_parts(
            &["a", "b", "c"],
            &[("a", "b", 2), ("b", "c", 2), ("a", "c", 4)],
        )
        .unwrap();
        assert!(amalgam_split(&tri).is_none());
        let two = CoxeterGraph::from_parts(&["a", "b"], &[]).unwrap();
        let split = amalgam_split(&two).unwrap();
        assert_eq!(
            (split.x, split.y, split.z),
            (set(&["b"]), set(&["a"]), set(&[]))
        );
    }

    #[test]
    fn separate_examples() {
        let f2 = CoxeterGraph::from_parts(&["a", "b"], &[]).unwrap();
        let Separation::Witness(wit) = separate(&f2, &w("a"), 4, 6).unwrap() else {
            panic!()
        };
        assert_eq!(
            wit.to_string(),
            "target: Z/2\ngen a -> 1\ngen b -> 0\nimage -> 1"
        );
        assert_eq!(
            separate(&f2, &Word::new(), 4, 6).unwrap(),
            Separation::TrivialInput
        );

        let comm = w("a b a^-1 b^-1");
        let Separation::Witness(wit) = separate(&f2, &comm, 4, 6).unwrap() else {
            panic!()
        };
        assert_eq!(wit.target, Target::Symmetric(3));
        assert!(wit.respects_relators(&f2).unwrap());
        assert_eq!(wit.evaluate(&comm).unwrap(), wit.image);
        assert_ne!(wit.image, Image::Perm(Perm::identity(3)));
        assert!(separate(&f2, &comm, 9, 6).is_err());

        let z2 = CoxeterGraph::from_parts(&["a", "b"], &[("a", "b", 2)]).unwrap();
        assert_eq!(
            separate(&z2, &comm, 4, 6).unwrap(),
            Separation::TrivialInput
        );
    }

    #[test]
    fn perm_notation() {
        assert_eq!(Perm(vec![1, 0, 2]).to_string(), "(1 2)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(Perm(vec![1, 2, 0, 4, 3]).to_string(), "(1 2 3)(4 5)");
        assert_eq!(cycle_type_representatives(4).len(), 5);
    }
}
