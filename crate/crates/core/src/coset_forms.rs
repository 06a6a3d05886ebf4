//! Normal forms in `A_L` and the index set `T_0`.
//!
//! `A_L` is the iterated HNN extension `((A_{L_1} *_{φ_1}) ⋯) *_{φ_n}` with
//! stable letters `x_1 < … < x_n` and `φ_i = id` on `A_{S_i}`. A normal form is
//! `w_0 x_{α_1}^{ε_1} w_1 ⋯ x_{α_m}^{ε_m} w_m` where each `w_j` is a canonical
//! element of `A_{L_1}`, `w_j ∈ Ker(π_{S_{α_j}})` for `j ≥ 1`, and there is no
//! `x^ε x^{-ε}`. Each level of the tower is an instance of the generic
//! [`britton`](crate::britton) engine whose base is the previous level.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::britton::{britton_normalize, push_letter, BrittonForm, HnnBase};
use crate::error::{Error, Result};
use crate::presentation::{DecompositionData, Gen};
use crate::splitter::{ArtinGroup, CanonicalForm};
use crate::words::{retract, Letter, Sign, Word};

/// One `x^ε w` block of an [`AlNormalForm`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AlSegment {
    pub letter: Gen,
    pub sign: Sign,
    pub seg: CanonicalForm,
}

/// A normal form of an element of `A_L`, flattened across tower levels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AlNormalForm {
    pub head: CanonicalForm,
    pub tail: Vec<AlSegment>,
}

impl AlNormalForm {
    pub fn from_head(head: CanonicalForm) -> Self {
        AlNormalForm {
            head,
            tail: Vec::new(),
        }
    }

    pub fn stable_letters(&self) -> impl Iterator<Item = (&Gen, Sign)> + '_ {
        self.tail.iter().map(|s| (&s.letter, s.sign))
    }
}

/// An element of `T_0`: its normal form has `w_0 = 1`, starts with a positive
/// HNN letter `x`, and the leading run of `x` is shorter than `k_x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct T0Element(AlNormalForm);

impl T0Element {
    pub fn form(&self) -> &AlNormalForm {
        &self.0
    }

    /// `T_0` elements have `w_0 = 1`, so only the tail matters.
    pub fn is_identity(&self) -> bool {
        self.0.tail.is_empty()
    }
}

/// The outcome of right-multiplying `h ∈ T_0` by `s^{±1}`, by case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RightMultiply {
    /// `s ∈ L_1` lies in every `S_i` with `x_i ∈ supp(h)`: `u(hs^{±1}) =
    /// s^{∓1} h s^{±1} ∈ T_0`.
    Conjugated(T0Element),
    /// `s = x`, sign `+`, `h = x^{k_x-1}`: `hx ∉ A_{L_1} T_0`.
    ExceptionalPositive,
    /// `s = x`, sign `−`, `h = 1`: `x^{-1} ∉ A_{L_1} T_0`.
    ExceptionalNegative,
    /// `hs^{±1} ∈ T_0` directly.
    Direct(T0Element),
}

/// Normal-form machinery for `A_L` at one decomposition.
pub struct LinkTower {
    dd: DecompositionData,
    base: Arc<ArtinGroup>,
    stars: BTreeMap<Gen, BTreeSet<Gen>>,
}

impl fmt::Debug for LinkTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinkTower")
            .field("link", &self.dd.link)
            .finish()
    }
}

/// Level `i ≥ 1` of the tower: base `A_{X_{i-1}}`, stable letter `x_i`.
struct TowerLevel<'a> {
    tower: &'a LinkTower,
    level: usize,
}

impl HnnBase for TowerLevel<'_> {
    type Elem = AlNormalForm;

    fn stable_letter(&self) -> &Gen {
        &self.tower.dd.hnn_letters[self.level - 1]
    }

    fn identity(&self) -> AlNormalForm {
        self.tower.identity()
    }

    fn is_identity(&self, e: &AlNormalForm) -> bool {
        self.tower.is_identity(e)
    }

    fn mul_letter(&self, e: &AlNormalForm, l: &Letter) -> Result<AlNormalForm> {
        self.tower.mul_letter_at(self.level - 1, e, l)
    }

    fn mul(&self, a: &AlNormalForm, b: &AlNormalForm) -> Result<AlNormalForm> {
        let mut out = a.clone();
        for l in self.tower.to_word(b).letters() {
            out = self.tower.mul_letter_at(self.level - 1, &out, l)?;
        }
        Ok(out)
    }

    /// `g = π_{S_i}(w_0) · (π_{S_i}(w_0)^{-1} g)`; only `w_0` changes.
    fn split(&self, e: &AlNormalForm, _side: Sign) -> Result<(AlNormalForm, AlNormalForm)> {
        let base = &self.tower.base;
        let star = &self.tower.stars[self.stable_letter()];
        let head_word = base.canonical_word(&e.head);
        let part = retract(star, &head_word);
        if part.is_empty() {
            return Ok((self.identity(), e.clone()));
        }
        let c = base.normal_form(&part)?;
        let rest = base.normal_form(&part.inverse().concat(&head_word))?;
        Ok((
            AlNormalForm::from_head(c),
            AlNormalForm {
                head: rest,
                tail: e.tail.clone(),
            },
        ))
    }

    fn migrate(&self, c: &AlNormalForm, _side: Sign) -> Result<AlNormalForm> {
        Ok(c.clone())
    }
}

impl LinkTower {
    /// `base` must be the group of `dd.l1`.
    pub fn new(dd: DecompositionData, base: Arc<ArtinGroup>) -> Self {
        debug_assert_eq!(base.graph(), &dd.l1);
        let stars = dd
            .star_subgraphs
            .iter()
            .map(|(x, s)| (x.clone(), s.vertex_set().clone()))
            .collect();
        LinkTower { dd, base, stars }
    }

    pub fn dd(&self) -> &DecompositionData {
        &self.dd
    }

    /// The group `A_{L_1}` whose canonical forms fill the segments.
    pub fn base(&self) -> &Arc<ArtinGroup> {
        &self.base
    }

    pub fn identity(&self) -> AlNormalForm {
        AlNormalForm::from_head(self.base.identity())
    }

    pub fn is_identity(&self, f: &AlNormalForm) -> bool {
        f.tail.is_empty() && self.base.is_identity(&f.head)
    }

    /// The normal form of `w` (letters in `V(L)`).
    pub fn normalize(&self, w: &Word) -> Result<AlNormalForm> {
        w.check_alphabet(self.dd.link.vertex_set())?;
        let n = self.dd.hnn_letters.len();
        if n == 0 {
            return Ok(AlNormalForm::from_head(self.base.normal_form(w)?));
        }
        let form = britton_normalize(
            &TowerLevel {
                tower: self,
                level: n,
            },
            w,
        )?;
        Ok(self.flatten(form, n))
    }

    /// `f · l` in normal form.
    pub fn mul_letter(&self, f: &AlNormalForm, l: &Letter) -> Result<AlNormalForm> {
        if !self.dd.in_link(&l.gen) {
            return Err(Error::LetterOutsideAlphabet(l.gen.to_string()));
        }
        self.mul_letter_at(self.dd.hnn_letters.len(), f, l)
    }

    /// Multiplication inside `A_{X_level}`.
    fn mul_letter_at(&self, level: usize, f: &AlNormalForm, l: &Letter) -> Result<AlNormalForm> {
        if level == 0 {
            if !self.dd.in_l1(&l.gen) {
                return Err(Error::LetterOutsideAlphabet(l.gen.to_string()));
            }
            debug_assert!(f.tail.is_empty());
            return Ok(AlNormalForm::from_head(
                self.base.right_mul_letter(&f.head, l)?,
            ));
        }
        let tower_level = TowerLevel { tower: self, level };
        let mut form = self.unflatten(f, level);
        push_letter(&tower_level, &mut form, l)?;
        Ok(self.flatten(form, level))
    }

    /// Regroups a flat form (letters `≤ x_level`) around `x_level`.
    fn unflatten(&self, f: &AlNormalForm, level: usize) -> BrittonForm<AlNormalForm> {
        let x = &self.dd.hnn_letters[level - 1];
        let mut out = BrittonForm::from_base(AlNormalForm::from_head(f.head.clone()));
        for seg in &f.tail {
            if &seg.letter == x {
                out.tail
                    .push((seg.sign, AlNormalForm::from_head(seg.seg.clone())));
            } else {
                let part = match out.tail.last_mut() {
                    Some((_, p)) => p,
                    None => &mut out.head,
                };
                part.tail.push(seg.clone());
            }
        }
        out
    }

    fn flatten(&self, form: BrittonForm<AlNormalForm>, level: usize) -> AlNormalForm {
        let x = &self.dd.hnn_letters[level - 1];
        let mut out = form.head;
        for (sign, part) in form.tail {
            out.tail.push(AlSegment {
                letter: x.clone(),
                sign,
                seg: part.head,
            });
            out.tail.extend(part.tail);
        }
        out
    }

    /// The normal-form word `n(g)`.
    pub fn to_word(&self, f: &AlNormalForm) -> Word {
        let mut out = self.base.canonical_word(&f.head);
        for seg in &f.tail {
            out.push(Letter::new(seg.letter.clone(), seg.sign));
            out.append(&self.base.canonical_word(&seg.seg));
        }
        out
    }

    /// Checks the normal-form conditions segment by segment.
    pub fn is_normal(&self, f: &AlNormalForm) -> Result<bool> {
        for (j, seg) in f.tail.iter().enumerate() {
            if !self.dd.is_hnn_letter(&seg.letter) {
                return Ok(false);
            }
            let star = &self.stars[&seg.letter];
            let part = retract(star, &self.base.canonical_word(&seg.seg));
            if !self.base.is_identity(&self.base.normal_form(&part)?) {
                return Ok(false);
            }
            if let Some(next) = f.tail.get(j + 1) {
                if next.letter == seg.letter
                    && next.sign == -seg.sign
                    && self.base.is_identity(&seg.seg)
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `T_0` membership.
    pub fn in_t0(&self, f: &AlNormalForm) -> bool {
        if !self.base.is_identity(&f.head) {
            return false;
        }
        let Some(first) = f.tail.first() else {
            return true;
        };
        if first.sign != Sign::Pos {
            return false;
        }
        let k = self
            .dd
            .k(&first.letter)
            .expect("HNN letters lie in the link");
        let mut run = 1;
        let mut i = 0;
        while self.base.is_identity(&f.tail[i].seg)
            && i + 1 < f.tail.len()
            && f.tail[i + 1].letter == first.letter
            && f.tail[i + 1].sign == Sign::Pos
        {
            run += 1;
            i += 1;
        }
        run < k
    }

    /// Wraps a form known to be in `T_0`.
    pub fn t0(&self, f: AlNormalForm) -> Result<T0Element> {
        if self.in_t0(&f) {
            Ok(T0Element(f))
        } else {
            Err(Error::Internal(format!(
                "{} is not in T0",
                self.to_word(&f)
            )))
        }
    }

    pub fn t0_identity(&self) -> T0Element {
        T0Element(self.identity())
    }

    /// `x^j` as an element of `T_0` (`0 ≤ j < k_x`).
    pub fn t0_power(&self, x: &Gen, j: u32) -> Result<T0Element> {
        let f = self.normalize(&Word::power(x, j as i64))?;
        self.t0(f)
    }

    /// `f = g h` with `g ∈ A_{L_1}` and `h ∈ T_0`, or `None` when `f ∉ A_{L_1} T_0`.
    pub fn split_l1_t0(&self, f: &AlNormalForm) -> Option<(CanonicalForm, T0Element)> {
        let suffix = AlNormalForm {
            head: self.base.identity(),
            tail: f.tail.clone(),
        };
        if self.in_t0(&suffix) {
            Some((f.head.clone(), T0Element(suffix)))
        } else {
            None
        }
    }

    /// `u(f)`: the `T_0` component of `f ∈ A_{L_1} T_0`.
    pub fn u_of(&self, f: &AlNormalForm) -> Result<T0Element> {
        self.split_l1_t0(f)
            .map(|(_, h)| h)
            .ok_or(Error::NotInProduct)
    }

    /// The HNN letters occurring in `n(h)`.
    pub fn supp(&self, h: &T0Element) -> BTreeSet<Gen> {
        h.0.tail.iter().map(|s| s.letter.clone()).collect()
    }

    /// Classifies `h · s^{±1}` and returns `u(h s^{±1})` when it is defined.
    pub fn right_multiply(&self, h: &T0Element, l: &Letter) -> Result<RightMultiply> {
        let s = &l.gen;
        if !self.dd.in_link(s) {
            return Err(Error::LetterOutsideAlphabet(s.to_string()));
        }
        if self.dd.is_hnn_letter(s) {
            let k = self.dd.k(s).unwrap();
            match l.sign {
                Sign::Pos if *h == self.t0_power(s, k - 1)? => {
                    return Ok(RightMultiply::ExceptionalPositive)
                }
                Sign::Neg if h.is_identity() => return Ok(RightMultiply::ExceptionalNegative),
                _ => {}
            }
        }
        let product = self.mul_letter(&h.0, l)?;
        let u = self.u_of(&product)?;
        let conjugated = self.dd.in_l1(s) && self.supp(h).iter().all(|x| self.stars[x].contains(s));
        Ok(if conjugated {
            RightMultiply::Conjugated(u)
        } else {
            RightMultiply::Direct(u)
        })
    }
}
