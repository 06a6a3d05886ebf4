//! The free group `F` on `{b_h : h ∈ T}` and the right action of `A_1` on it.
//!
//! `T = T_0 · Ker(π_L)`: a basis element is keyed by `(h_0, u)` with
//! `h_0 ∈ T_0` and `u ∈ Ker(π_L)`. Keys are materialized only when touched.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::coset_forms::{RightMultiply, T0Element};
use crate::error::{Error, Result};
use crate::splitter::{ArtinGroup, CanonicalForm, Splitting};
use crate::words::{retract, Letter, Sign, Word};

/// The index `h = h_0 u ∈ T` of a basis element `b_h`.
///
/// Keys are interned per splitting and carry their serialization `<h0>|<u>`
/// (normal-form words). Equality and ordering only look at the forms.
#[derive(Clone)]
pub struct BasisKey(Arc<KeyData>);

struct KeyData {
    h0: T0Element,
    u: CanonicalForm,
    hash: u64,
    /// Word for `h0`; the word for `u` is only built when displayed.
    h0_word: Box<str>,
    sub: Arc<ArtinGroup>,
    label: OnceLock<Box<str>>,
}

impl BasisKey {
    pub fn h0(&self) -> &T0Element {
        &self.0.h0
    }

    pub fn u(&self) -> &CanonicalForm {
        &self.0.u
    }

    /// `<h0>|<u>` with both parts as normal-form words.
    pub fn label(&self) -> &str {
        self.0.label.get_or_init(|| {
            format!(
                "{}|{}",
                self.0.h0_word,
                self.0.sub.canonical_word(&self.0.u)
            )
            .into()
        })
    }
}

impl PartialEq for BasisKey {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash && self.0.h0 == other.0.h0 && self.0.u == other.0.u)
    }
}

impl Eq for BasisKey {}

impl Hash for BasisKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        (&self.0.h0, &self.0.u).cmp(&(&other.0.h0, &other.0.u))
    }
}

impl fmt::Debug for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b[{}]", self.label())
    }
}

/// A freely reduced word in the basis elements.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<(BasisKey, Sign)>);

impl FreeWord {
    pub fn new() -> Self {
        FreeWord(Vec::new())
    }

    pub fn single(key: BasisKey, sign: Sign) -> Self {
        FreeWord(vec![(key, sign)])
    }

    pub fn factors(&self) -> &[(BasisKey, Sign)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends `b^sign`, cancelling against the last factor.
    pub fn push(&mut self, key: BasisKey, sign: Sign) {
        match self.0.last() {
            Some((k, s)) if *s == -sign && *k == key => {
                self.0.pop();
            }
            _ => self.0.push((key, sign)),
        }
    }

    pub fn extend(&mut self, other: &FreeWord) {
        for (k, s) in &other.0 {
            self.push(k.clone(), *s);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|(k, s)| (k.clone(), -*s)).collect())
    }

    /// Sum of exponents; `φ` maps this to the exponent sum of `z`.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|(_, s)| s.as_i64()).sum()
    }
}

/// `b[<h0>|<u>]^±1` per factor, space separated; `1` when empty.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (key, sign)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "b[{}]^{}", key.label(), sign.as_i64())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

const ACT_CACHE_LIMIT: usize = 1 << 18;

impl Splitting {
    /// Builds a key, checking `u ∈ Ker(π_L)`.
    pub fn basis_key(&self, h0: T0Element, u: CanonicalForm) -> Result<BasisKey> {
        let uw = self.sub.canonical_word(&u);
        if !self.in_kernel(&uw)? {
            return Err(Error::NotInKernel);
        }
        Ok(self.key_unchecked(h0, u))
    }

    fn key_unchecked(&self, h0: T0Element, u: CanonicalForm) -> BasisKey {
        let lookup = (h0, u);
        if let Some(key) = self.keys.lock().unwrap().get(&lookup) {
            return key.clone();
        }
        let (h0, u) = lookup;
        let mut hasher = DefaultHasher::new();
        (&h0, &u).hash(&mut hasher);
        let key = BasisKey(Arc::new(KeyData {
            hash: hasher.finish(),
            h0_word: self.tower.to_word(h0.form()).to_string().into(),
            h0: h0.clone(),
            u: u.clone(),
            sub: self.sub.clone(),
            label: OnceLock::new(),
        }));
        // Another thread may have interned the same key meanwhile; keep the first.
        self.keys
            .lock()
            .unwrap()
            .entry((h0, u))
            .or_insert(key)
            .clone()
    }

    fn in_kernel(&self, w: &Word) -> Result<bool> {
        let image = retract(self.dd.link.vertex_set(), w);
        Ok(self.tower.is_identity(&self.tower.normalize(&image)?))
    }

    /// The key of `b_1`.
    pub fn seed_key(&self) -> BasisKey {
        self.key_unchecked(self.tower.t0_identity(), self.sub.identity())
    }

    /// `b_{h_0}` for `h_0 ∈ T_0`.
    pub fn t0_key(&self, h0: T0Element) -> BasisKey {
        self.key_unchecked(h0, self.sub.identity())
    }

    /// `ω · u`: every key `(h_0, u_i)` becomes `(h_0, u_i u)`.
    pub fn dot_u(&self, omega: &FreeWord, u: &CanonicalForm) -> Result<FreeWord> {
        if u.is_identity() {
            return Ok(omega.clone());
        }
        let uw = self.sub.canonical_word(u);
        if !self.in_kernel(&uw)? {
            return Err(Error::NotInKernel);
        }
        let mut out = FreeWord::new();
        for (key, sign) in omega.factors() {
            let ui = self.sub.mul(key.u(), u)?;
            out.push(self.key_unchecked(key.h0().clone(), ui), *sign);
        }
        Ok(out)
    }

    /// `b_h * s^{±1}` for `h ∈ T_0` and `s ∈ V(L)`.
    pub fn act_t0_generator(&self, h: &T0Element, l: &Letter) -> Result<FreeWord> {
        let tower = &self.tower;
        Ok(match tower.right_multiply(h, l)? {
            RightMultiply::Conjugated(u) | RightMultiply::Direct(u) => {
                FreeWord::single(self.t0_key(u), Sign::Pos)
            }
            RightMultiply::ExceptionalPositive => {
                // b_{x^{k-1}} ⋯ b_x b_1 b_x^{-1} ⋯ b_{x^{k-1}}^{-1}
                let k = self.dd.k(&l.gen).unwrap();
                let mut out = FreeWord::new();
                for j in (0..k).rev() {
                    out.push(self.t0_key(tower.t0_power(&l.gen, j)?), Sign::Pos);
                }
                for j in 1..k {
                    out.push(self.t0_key(tower.t0_power(&l.gen, j)?), Sign::Neg);
                }
                out
            }
            RightMultiply::ExceptionalNegative => {
                // b_1^{-1} b_x^{-1} ⋯ b_{x^{k-2}}^{-1} b_{x^{k-1}} b_{x^{k-2}} ⋯ b_x b_1
                let k = self.dd.k(&l.gen).unwrap();
                let mut out = FreeWord::new();
                for j in 0..k - 1 {
                    out.push(self.t0_key(tower.t0_power(&l.gen, j)?), Sign::Neg);
                }
                out.push(self.t0_key(tower.t0_power(&l.gen, k - 1)?), Sign::Pos);
                for j in (0..k - 1).rev() {
                    out.push(self.t0_key(tower.t0_power(&l.gen, j)?), Sign::Pos);
                }
                out
            }
        })
    }

    /// `b_{h_0 u} * s^{±1}` for `s ∈ V(Γ_1)`.
    pub fn act_generator(&self, key: &BasisKey, l: &Letter) -> Result<FreeWord> {
        if !self.sub.graph().contains(&l.gen) {
            return Err(Error::LetterOutsideAlphabet(l.gen.to_string()));
        }
        let cache_key = (key.clone(), l.clone());
        if let Some(hit) = self.act_cache.lock().unwrap().get(&cache_key) {
            return Ok(hit.clone());
        }
        let out = if !self.dd.in_link(&l.gen) {
            // π_L(s) = 1, so s only moves the kernel part.
            let u = self.sub.right_mul_letter(key.u(), l)?;
            FreeWord::single(self.key_unchecked(key.h0().clone(), u), Sign::Pos)
        } else {
            let base = self.act_t0_generator(key.h0(), l)?;
            if key.u().is_identity() {
                base
            } else {
                let u = self.sub.conjugate_by_letter(key.u(), l)?;
                let mut out = FreeWord::new();
                for (k, sign) in base.factors() {
                    let ui = if k.u().is_identity() {
                        u.clone()
                    } else {
                        self.sub.mul(k.u(), &u)?
                    };
                    out.push(self.key_unchecked(k.h0().clone(), ui), *sign);
                }
                out
            }
        };
        let mut cache = self.act_cache.lock().unwrap();
        if cache.len() >= ACT_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(cache_key, out.clone());
        Ok(out)
    }

    /// `ω * s^{±1}`.
    pub fn act_letter(&self, omega: &FreeWord, l: &Letter) -> Result<FreeWord> {
        let mut out = FreeWord::new();
        for (key, sign) in omega.factors() {
            let image = self.act_generator(key, l)?;
            match sign {
                Sign::Pos => out.extend(&image),
                Sign::Neg => out.extend(&image.inverse()),
            }
        }
        Ok(out)
    }

    /// `ω * g`, folding over the letters of `g`.
    pub fn act(&self, omega: &FreeWord, g: &Word) -> Result<FreeWord> {
        let mut out = omega.clone();
        for l in g.letters() {
            out = self.act_letter(&out, l)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{CoxeterGraph, Gen};
    use crate::splitter::ArtinGroup;

    fn g(s: &str) -> Gen {
        Gen::new(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn group() -> ArtinGroup {
        let gm = CoxeterGraph::from_parts(
            &["z", "a", "x"],
            &[("z", "a", 2), ("z", "x", 4), ("a", "x", 2)],
        )
        .unwrap();
        ArtinGroup::new_at(&gm, &g("z")).unwrap()
    }

    #[test]
    fn t0_generator_branches() {
        let group = group();
        let sp = group.splitting().unwrap();
        let t = sp.tower();
        let b1 = t.t0_identity();
        let bx = t.t0_power(&g("x"), 1).unwrap();
        assert_eq!(
            sp.act_t0_generator(&b1, &Letter::pos(&g("x")))
                .unwrap()
                .to_string(),
            "b[x|1]^1"
        );
        assert_eq!(
            sp.act_t0_generator(&bx, &Letter::pos(&g("x")))
                .unwrap()
                .to_string(),
            "b[x|1]^1 b[1|1]^1 b[x|1]^-1"
        );
        assert_eq!(
            sp.act_t0_generator(&b1, &Letter::neg(&g("x")))
                .unwrap()
                .to_string(),
            "b[1|1]^-1 b[x|1]^1 b[1|1]^1"
        );
        assert_eq!(
            sp.act_t0_generator(&bx, &Letter::pos(&g("a")))
                .unwrap()
                .to_string(),
            "b[x|1]^1"
        );
    }

    #[test]
    fn act_composes() {
        let group = group();
        let sp = group.splitting().unwrap();
        let b1 = FreeWord::single(sp.seed_key(), Sign::Pos);
        assert_eq!(
            sp.act(&b1, &w("x x")).unwrap().to_string(),
            "b[x|1]^1 b[1|1]^1 b[x|1]^-1"
        );
        assert_eq!(sp.act(&b1, &Word::new()).unwrap(), b1);
        let back = sp
            .act(&sp.act(&b1, &w("x a x")).unwrap(), &w("x^-1 a^-1 x^-1"))
            .unwrap();
        assert_eq!(back, b1);
    }

    #[test]
    fn dot_u_examples() {
        // Γ = {z, a, c}, only z–a linked: c ∉ L, so c ∈ Ker(π_L).
        let gm = CoxeterGraph::from_parts(&["z", "a", "c"], &[("z", "a", 2)]).unwrap();
        let group = ArtinGroup::new_at(&gm, &g("z")).unwrap();
        let sp = group.splitting().unwrap();
        let u = sp.sub().normal_form(&w("c")).unwrap();
        let b1 = FreeWord::single(sp.seed_key(), Sign::Pos);
        let moved = sp.dot_u(&b1, &u).unwrap();
        assert_eq!(moved.to_string(), "b[1|c]^1");
        let uinv = sp.sub().normal_form(&w("c^-1")).unwrap();
        assert_eq!(sp.dot_u(&moved, &uinv).unwrap(), b1);
        assert_eq!(sp.dot_u(&b1, &sp.sub().identity()).unwrap(), b1);
        let a = sp.sub().normal_form(&w("a")).unwrap();
        assert_eq!(sp.dot_u(&b1, &a), Err(Error::NotInKernel));
        assert_eq!(sp.act(&b1, &w("c")).unwrap(), moved);
    }
}
