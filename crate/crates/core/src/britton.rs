//! Normal forms in an HNN extension `G*_φ = ⟨G, t | t^{-1} a t = φ(a), a ∈ A⟩`
//! built from normal forms of the base group.
//!
//! Coset convention: a base element `g` is written `g = c · r` with `c` in the
//! associated subgroup and `r` in a fixed transversal containing `1`. The
//! segment after `t^{-1}` lies in the transversal of `A`, the segment after
//! `t` in the transversal of `B = φ(A)`. Since `t^{-1} a = φ(a) t^{-1}` and
//! `t b = φ^{-1}(b) t`, the subgroup part of a segment can always be migrated
//! to the left across the preceding stable letter; this is the mirror image of
//! the left-coset formulation of Britton's normal forms.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::Gen;
use crate::words::{Letter, Sign, Word};

/// Oracles for the base group of an HNN extension.
///
/// `Side` of a split is the sign of the stable letter that precedes the
/// segment: `Neg` splits off the `A` part, `Pos` the `B` part.
pub trait HnnBase {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn stable_letter(&self) -> &Gen;
    fn identity(&self) -> Self::Elem;
    fn is_identity(&self, e: &Self::Elem) -> bool;
    /// `e · l` for a base generator letter `l`.
    fn mul_letter(&self, e: &Self::Elem, l: &Letter) -> Result<Self::Elem>;
    /// `a · b` in the base group.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    /// `e = c · r` with `c` in the subgroup for `side` and `r` in its transversal.
    fn split(&self, e: &Self::Elem, side: Sign) -> Result<(Self::Elem, Self::Elem)>;
    /// The element `c'` with `t^side · c = c' · t^side`, for `c` in the
    /// subgroup for `side`.
    fn migrate(&self, c: &Self::Elem, side: Sign) -> Result<Self::Elem>;
}

/// `w_0 t^{ε_1} w_1 ⋯ t^{ε_m} w_m` with every `w_i` (for `i ≥ 1`) in the
/// transversal and no pinch `t^ε 1 t^{-ε}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrittonForm<E> {
    pub head: E,
    pub tail: Vec<(Sign, E)>,
}

impl<E> BrittonForm<E> {
    pub fn from_base(head: E) -> Self {
        BrittonForm {
            head,
            tail: Vec::new(),
        }
    }

    pub fn stable_count(&self) -> usize {
        self.tail.len()
    }

    pub fn segments(&self) -> impl Iterator<Item = &E> + '_ {
        std::iter::once(&self.head).chain(self.tail.iter().map(|(_, e)| e))
    }

    /// Flattens to a word given a word for each base segment.
    pub fn to_word(&self, stable: &Gen, base_word: impl Fn(&E) -> Word) -> Word {
        let mut out = base_word(&self.head);
        for (sign, seg) in &self.tail {
            out.push(Letter::new(stable.clone(), *sign));
            out.append(&base_word(seg));
        }
        out
    }
}

/// Right-multiplies a normal form by one letter, keeping it normal.
pub fn push_letter<B: HnnBase>(
    base: &B,
    form: &mut BrittonForm<B::Elem>,
    l: &Letter,
) -> Result<()> {
    if &l.gen == base.stable_letter() {
        match form.tail.last() {
            Some((sign, seg)) if *sign == -l.sign && base.is_identity(seg) => {
                form.tail.pop();
            }
            _ => form.tail.push((l.sign, base.identity())),
        }
        return Ok(());
    }
    let last = match form.tail.last_mut() {
        Some((_, seg)) => seg,
        None => &mut form.head,
    };
    *last = base.mul_letter(last, l)?;
    settle(base, form, form.tail.len())
}

/// Right-multiplies a normal form by a base element.
pub fn push_base<B: HnnBase>(base: &B, form: &mut BrittonForm<B::Elem>, g: &B::Elem) -> Result<()> {
    let last = match form.tail.last_mut() {
        Some((_, seg)) => seg,
        None => &mut form.head,
    };
    *last = base.mul(last, g)?;
    settle(base, form, form.tail.len())
}

/// Restores the transversal condition from segment `j` leftwards: the
/// subgroup part of segment `j` migrates across `t^{ε_j}` into segment `j-1`.
fn settle<B: HnnBase>(base: &B, form: &mut BrittonForm<B::Elem>, mut j: usize) -> Result<()> {
    while j >= 1 {
        let (sign, seg) = &form.tail[j - 1];
        let sign = *sign;
        let (c, r) = base.split(seg, sign)?;
        if base.is_identity(&c) {
            break;
        }
        form.tail[j - 1].1 = r;
        let moved = base.migrate(&c, sign)?;
        let prev = if j >= 2 {
            &mut form.tail[j - 2].1
        } else {
            &mut form.head
        };
        *prev = base.mul(prev, &moved)?;
        // A reduced form never acquires a new pinch here: the migrated part
        // cannot turn a transversal element into a subgroup element.
        debug_assert!(
            !(j < form.tail.len()
                && base.is_identity(&form.tail[j - 1].1)
                && form.tail[j].0 == -form.tail[j - 1].0),
        );
        j -= 1;
    }
    Ok(())
}

/// The unique normal form of `w`.
pub fn britton_normalize<B: HnnBase>(base: &B, w: &Word) -> Result<BrittonForm<B::Elem>> {
    let mut form = BrittonForm::from_base(base.identity());
    for l in w.letters() {
        push_letter(base, &mut form, l)?;
    }
    Ok(form)
}

/// Checks the normal-form conditions (transversal segments, no pinch).
pub fn is_normal<B: HnnBase>(base: &B, form: &BrittonForm<B::Elem>) -> Result<bool> {
    for (i, (sign, seg)) in form.tail.iter().enumerate() {
        let (c, _) = base.split(seg, *sign)?;
        if !base.is_identity(&c) {
            return Ok(false);
        }
        if let Some((next, _)) = form.tail.get(i + 1) {
            if *next == -*sign && base.is_identity(seg) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

type WordFn = Box<dyn Fn(&Word) -> Word + Send + Sync>;
type SplitFn = Box<dyn Fn(&Word, Sign) -> (Word, Word) + Send + Sync>;
type PhiFn = Box<dyn Fn(&Word, Sign) -> Word + Send + Sync>;
type MemberFn = Box<dyn Fn(&Word, Sign) -> bool + Send + Sync>;

/// An HNN extension described by word-level oracles on the base group.
///
/// Base elements are represented by their normal-form words.
pub struct HnnInstance {
    pub stable: Gen,
    pub base_gens: BTreeSet<Gen>,
    /// Maps any base word to its normal-form word.
    pub base_normalizer: WordFn,
    /// Membership of a normal-form word in `A` (`Neg`) or `B` (`Pos`).
    pub subgroup_membership: MemberFn,
    /// `g ↦ (c, r)` with `g = c r`, `c` in the subgroup, `r` in the transversal.
    pub coset_splitter: SplitFn,
    /// `Neg`: `a ↦ φ(a)`; `Pos`: `b ↦ φ^{-1}(b)`.
    pub phi: PhiFn,
}

impl HnnInstance {
    /// Normalizes a word containing base letters and the stable letter.
    pub fn normalize(&self, w: &Word) -> Result<BrittonForm<Word>> {
        for l in w.letters() {
            if l.gen != self.stable && !self.base_gens.contains(&l.gen) {
                return Err(Error::LetterOutsideAlphabet(l.gen.to_string()));
            }
        }
        britton_normalize(self, w)
    }

    /// Serializes a normal form in the word grammar.
    pub fn form_word(&self, form: &BrittonForm<Word>) -> Word {
        form.to_word(&self.stable, |w| w.clone())
    }
}

impl HnnBase for HnnInstance {
    type Elem = Word;

    fn stable_letter(&self) -> &Gen {
        &self.stable
    }

    fn identity(&self) -> Word {
        Word::new()
    }

    fn is_identity(&self, e: &Word) -> bool {
        e.is_empty()
    }

    fn mul_letter(&self, e: &Word, l: &Letter) -> Result<Word> {
        let mut w = e.clone();
        w.push(l.clone());
        Ok((self.base_normalizer)(&w))
    }

    fn mul(&self, a: &Word, b: &Word) -> Result<Word> {
        Ok((self.base_normalizer)(&a.concat(b)))
    }

    fn split(&self, e: &Word, side: Sign) -> Result<(Word, Word)> {
        let (c, r) = (self.coset_splitter)(e, side);
        let (c, r) = ((self.base_normalizer)(&c), (self.base_normalizer)(&r));
        if !(self.subgroup_membership)(&c, side) {
            return Err(Error::Internal(format!(
                "coset splitter returned {c} outside the subgroup"
            )));
        }
        Ok((c, r))
    }

    fn migrate(&self, c: &Word, side: Sign) -> Result<Word> {
        Ok((self.base_normalizer)(&(self.phi)(c, side)))
    }
}
