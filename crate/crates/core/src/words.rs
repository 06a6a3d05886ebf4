//! Words over signed generators.
//!
//! Grammar: whitespace-separated tokens `id`, `id^n`, `id^-n` (`n ≥ 1`), plus
//! `1` for the empty word. Powers expand to repeated letters on parse. A word
//! serializes with maximal power grouping of adjacent equal letters, and the
//! empty word serializes as `1`.
//!
//! Conjugation convention: `b^a = a^{-1} b a`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::presentation::{is_valid_id, CoxeterGraph, Gen};

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// `s` or `s^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: Gen, sign: Sign) -> Self {
        Letter { gen, sign }
    }

    pub fn pos(gen: &Gen) -> Self {
        Letter::new(gen.clone(), Sign::Pos)
    }

    pub fn neg(gen: &Gen) -> Self {
        Letter::new(gen.clone(), Sign::Neg)
    }

    pub fn inverse(&self) -> Self {
        Letter::new(self.gen.clone(), -self.sign)
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.gen),
            Sign::Neg => write!(f, "{}^-1", self.gen),
        }
    }
}

/// A finite sequence of letters. Not reduced unless an operation says so.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Parses the word grammar. Identifiers are checked for syntax only.
    pub fn parse(text: &str) -> std::result::Result<Word, ParseError> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in text.split_whitespace() {
            let start = offset + text[offset..].find(tok).unwrap();
            offset = start + tok.len();
            let column = text[..start].chars().count() + 1;
            let err = |message: String| ParseError {
                line: 1,
                column,
                message,
            };
            if tok == "1" {
                continue;
            }
            let (id, exp) = match tok.split_once('^') {
                Some((id, e)) => {
                    let (neg, digits) = match e.strip_prefix('-') {
                        Some(d) => (true, d),
                        None => (false, e),
                    };
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err(format!("invalid exponent in `{tok}`")));
                    }
                    let n: usize = digits
                        .parse()
                        .map_err(|_| err(format!("exponent too large in `{tok}`")))?;
                    if n == 0 {
                        return Err(err(format!("exponent must be nonzero in `{tok}`")));
                    }
                    if n > MAX_EXPONENT {
                        return Err(err(format!("exponent too large in `{tok}`")));
                    }
                    (id, if neg { (Sign::Neg, n) } else { (Sign::Pos, n) })
                }
                None => (tok, (Sign::Pos, 1)),
            };
            if !is_valid_id(id) {
                return Err(err(format!("invalid generator `{id}`")));
            }
            let gen = Gen::new(id).expect("checked above");
            letters.extend(std::iter::repeat_n(Letter::new(gen, exp.0), exp.1));
        }
        Ok(Word(letters))
    }

    /// Parses and checks that every generator is a vertex of `graph`.
    pub fn parse_in(text: &str, graph: &CoxeterGraph) -> Result<Word> {
        let w = Word::parse(text)?;
        w.check_alphabet(graph.vertex_set())?;
        // Reuse the graph's interned identifiers.
        Ok(Word(
            w.0.into_iter()
                .map(|l| Letter::new(graph.gen(l.gen.as_str()).unwrap().clone(), l.sign))
                .collect(),
        ))
    }

    pub fn check_alphabet(&self, alphabet: &BTreeSet<Gen>) -> Result<()> {
        match self.0.iter().find(|l| !alphabet.contains(&l.gen)) {
            Some(l) => Err(Error::LetterOutsideAlphabet(l.gen.to_string())),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Appends `other` in place.
    pub fn append(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// `s^n` for any integer `n`.
    pub fn power(gen: &Gen, n: i64) -> Word {
        let sign = if n < 0 { Sign::Neg } else { Sign::Pos };
        Word(vec![
            Letter::new(gen.clone(), sign);
            n.unsigned_abs() as usize
        ])
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, gen: &Gen) -> i64 {
        self.0
            .iter()
            .filter(|l| &l.gen == gen)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    pub fn generators(&self) -> BTreeSet<Gen> {
        self.0.iter().map(|l| l.gen.clone()).collect()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = &self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == *l {
                j += 1;
            }
            let n = j - i;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match (l.sign, n) {
                (Sign::Pos, 1) => write!(f, "{}", l.gen)?,
                (Sign::Pos, n) => write!(f, "{}^{}", l.gen, n)?,
                (Sign::Neg, n) => write!(f, "{}^-{}", l.gen, n)?,
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Removes every `s^ε s^{-ε}` until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in &w.0 {
        match out.last() {
            Some(last) if last.cancels(l) => {
                out.pop();
            }
            _ => out.push(l.clone()),
        }
    }
    Word(out)
}

/// `Π(s, t : m) = (s t)^{m/2}`, the alternating word of even length `m`.
pub fn pi_word(m: u64, s: &Gen, t: &Gen) -> Result<Word> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::BadLabel(m));
    }
    if s == t {
        return Err(Error::InvalidArgument(format!(
            "Π needs distinct letters, got {s} twice"
        )));
    }
    Ok((0..m)
        .map(|i| Letter::pos(if i % 2 == 0 { s } else { t }))
        .collect())
}

/// The relator `Π(s,t:m) Π(t,s:m)^{-1}`, freely reduced.
pub fn artin_relator(graph: &CoxeterGraph, s: &Gen, t: &Gen) -> Result<Word> {
    for v in [s, t] {
        if !graph.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
    }
    let m = graph
        .label(s, t)
        .ok_or_else(|| Error::Unlinked(s.to_string(), t.to_string()))?;
    let lhs = pi_word(m as u64, s, t)?;
    let rhs = pi_word(m as u64, t, s)?;
    Ok(free_reduce(&lhs.concat(&rhs.inverse())))
}

/// One defining relator per edge, in edge order.
pub fn defining_relators(graph: &CoxeterGraph) -> Vec<Word> {
    graph
        .edges()
        .map(|(s, t, _)| artin_relator(graph, s, t).expect("edges are linked"))
        .collect()
}

/// The retraction `π_T`: deletes letters outside `T`, then freely reduces.
pub fn retract(subset: &BTreeSet<Gen>, w: &Word) -> Word {
    free_reduce(
        &w.0.iter()
            .filter(|l| subset.contains(&l.gen))
            .cloned()
            .collect(),
    )
}

/// Which identity of the conjugate-rewriting family to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjSide {
    /// Expresses `t^{s^{-1}}`.
    Negative,
    /// Expresses `t^{s^k}`.
    Power,
}

/// The symbol `(t^{s^power})^sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjSymbol {
    pub power: i64,
    pub sign: Sign,
}

/// A word in the symbols `t^{s^i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeWordPattern(pub Vec<ConjSymbol>);

impl FreeWordPattern {
    /// Substitutes `t^{s^i} ↦ s^{-i} t s^i` and freely reduces.
    pub fn substitute(&self, s: &Gen, t: &Gen) -> Word {
        let mut out = Word::new();
        for sym in &self.0 {
            let conj = Word::power(s, -sym.power)
                .concat(&Word::letter(Letter::pos(t)))
                .concat(&Word::power(s, sym.power));
            out = out.concat(&match sym.sign {
                Sign::Pos => conj,
                Sign::Neg => conj.inverse(),
            });
        }
        free_reduce(&out)
    }
}

impl fmt::Display for FreeWordPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, sym) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let base = match sym.power {
                0 => "t".to_string(),
                1 => "t^s".to_string(),
                p => format!("t^{{s^{p}}}"),
            };
            match sym.sign {
                Sign::Pos => f.write_str(&base)?,
                Sign::Neg => write!(f, "({base})^-1")?,
            }
        }
        Ok(())
    }
}

/// Rewrites of the relation `(st)^k = (ts)^k` as identities between
/// conjugates of `t` by powers of `s`. Returns `(left, right)`.
pub fn conj_identity(k: u32, side: ConjSide) -> Result<(FreeWordPattern, FreeWordPattern)> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let k = k as i64;
    let sym = |power, sign| ConjSymbol { power, sign };
    let (left, right) = match side {
        ConjSide::Negative => {
            let mut right: Vec<_> = (0..k - 1).map(|i| sym(i, Sign::Neg)).collect();
            right.push(sym(k - 1, Sign::Pos));
            right.extend((0..k - 1).rev().map(|i| sym(i, Sign::Pos)));
            (sym(-1, Sign::Pos), right)
        }
        ConjSide::Power => {
            let mut right: Vec<_> = (0..k).rev().map(|i| sym(i, Sign::Pos)).collect();
            right.extend((1..k).map(|i| sym(i, Sign::Neg)));
            (sym(k, Sign::Pos), right)
        }
    };
    Ok((FreeWordPattern(vec![left]), FreeWordPattern(right)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn g(s: &str) -> Gen {
        Gen::new(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let word = w("a^3 b^-2 a a^-1");
        assert_eq!(word.len(), 7);
        assert_eq!(word.to_string(), "a^3 b^-2 a a^-1");
        assert_eq!(w("a a b^-1 b^-1").to_string(), "a^2 b^-2");
        assert_eq!(w("").to_string(), "1");
        assert_eq!(w("1"), Word::new());
        assert!(Word::parse("a^0").is_err());
        assert!(Word::parse("a^").is_err());
        let e = Word::parse("a b^x").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(Word::parse("3a").is_err());
    }

    #[test]
    fn free_reduction_examples() {
        assert_eq!(free_reduce(&w("a a^-1 b")), w("b"));
        assert_eq!(free_reduce(&w("")), w(""));
        assert_eq!(free_reduce(&w("a b b^-1 a^-1")), w(""));
    }

    #[test]
    fn pi_words() {
        let (s, t) = (g("s"), g("t"));
        assert_eq!(pi_word(4, &s, &t).unwrap(), w("s t s t"));
        assert_eq!(pi_word(2, &s, &t).unwrap(), w("s t"));
        assert_eq!(pi_word(6, &s, &t).unwrap(), w("s t s t s t"));
        assert!(matches!(pi_word(3, &s, &t), Err(Error::BadLabel(3))));
    }

    #[test]
    fn relators() {
        let gm4 = CoxeterGraph::from_parts(&["s", "t"], &[("s", "t", 4)]).unwrap();
        let (s, t) = (g("s"), g("t"));
        assert_eq!(
            artin_relator(&gm4, &s, &t).unwrap(),
            w("s t s t s^-1 t^-1 s^-1 t^-1")
        );
        let gm2 = CoxeterGraph::from_parts(&["s", "t"], &[("s", "t", 2)]).unwrap();
        assert_eq!(artin_relator(&gm2, &s, &t).unwrap(), w("s t s^-1 t^-1"));
        let free = CoxeterGraph::from_parts(&["s", "t"], &[]).unwrap();
        assert!(matches!(
            artin_relator(&free, &s, &t),
            Err(Error::Unlinked(..))
        ));
    }

    #[test]
    fn retractions() {
        let a: BTreeSet<Gen> = [g("a")].into();
        assert_eq!(retract(&a, &w("z a z^-1 a")), w("a a"));
        let all: BTreeSet<Gen> = [g("a"), g("b"), g("z")].into();
        assert_eq!(retract(&all, &w("a b b^-1 z")), w("a z"));
        assert_eq!(retract(&BTreeSet::new(), &w("a b z")), w(""));
    }

    #[test]
    fn conjugate_identities_match_displayed_forms() {
        let (l, r) = conj_identity(2, ConjSide::Negative).unwrap();
        assert_eq!(l.to_string(), "t^{s^-1}");
        assert_eq!(r.to_string(), "(t)^-1 t^s t");
        let (l, r) = conj_identity(2, ConjSide::Power).unwrap();
        assert_eq!(l.to_string(), "t^{s^2}");
        assert_eq!(r.to_string(), "t^s t (t^s)^-1");
        let (l, r) = conj_identity(3, ConjSide::Power).unwrap();
        assert_eq!(l.to_string(), "t^{s^3}");
        assert_eq!(r.to_string(), "t^{s^2} t^s t (t^s)^-1 (t^{s^2})^-1");
        let (_, r) = conj_identity(3, ConjSide::Negative).unwrap();
        assert_eq!(r.to_string(), "(t)^-1 (t^s)^-1 t^{s^2} t^s t");
        assert!(conj_identity(0, ConjSide::Power).is_err());
    }
}
