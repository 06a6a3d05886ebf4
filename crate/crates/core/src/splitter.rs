//! The splitting `A_Γ ≅ A_1 ⋉ F` and everything built on it: recursive
//! canonical forms, the word problem, the maps `ψ` and `φ`, and poly-free
//! towers.
//!
//! At every level the splitting vertex `z` is the least vertex of the current
//! graph, `A_1 = A_{Γ∖{z}}`, and `F` is free on `{b_h : h ∈ T}` with
//! `T = T_0 · Ker(π_L)`. An element is the pair `(g_1, ω)` with `g_1 ∈ A_1`
//! canonical (recursively) and `ω ∈ F` reduced; `φ(g_1, ω) = g_1 φ(ω)` with
//! `φ(b_h) = z^h = h^{-1} z h`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::action::{BasisKey, FreeWord};
use crate::coset_forms::{LinkTower, T0Element};
use crate::error::{Error, Result};
use crate::presentation::{decompose_at, CoxeterGraph, DecompositionData, Gen};
use crate::words::{free_reduce, Letter, Word};

/// The unique representative of an element of `A_Γ`.
///
/// `Trivial` only occurs for the empty graph; otherwise the form is
/// `Split(g_1, ω)`. Structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalForm {
    Trivial,
    Split(Arc<CanonicalForm>, FreeWord),
}

impl CanonicalForm {
    /// The `(g_1, ω)` parts; `None` for the empty-graph form.
    pub fn parts(&self) -> Option<(&CanonicalForm, &FreeWord)> {
        match self {
            CanonicalForm::Trivial => None,
            CanonicalForm::Split(g1, omega) => Some((g1, omega)),
        }
    }

    /// True iff this is the identity of whatever group it belongs to.
    pub fn is_identity(&self) -> bool {
        match self {
            CanonicalForm::Trivial => true,
            CanonicalForm::Split(g1, omega) => omega.is_empty() && g1.is_identity(),
        }
    }

    /// Nesting depth (number of split levels).
    pub fn depth(&self) -> usize {
        match self {
            CanonicalForm::Trivial => 0,
            CanonicalForm::Split(g1, _) => 1 + g1.depth(),
        }
    }
}

/// Nested serialization: `()` for the empty graph, `(<g1> ; <omega>)` otherwise.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::Trivial => f.write_str("()"),
            CanonicalForm::Split(g1, omega) => write!(f, "({g1} ; {omega})"),
        }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element `(g_1, ω)` of `A_1 ⋉ F` with multiplication
/// `(g_1, ω_1)(g_2, ω_2) = (g_1 g_2, (ω_1 * g_2) ω_2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemidirectElement {
    pub g1: CanonicalForm,
    pub omega: FreeWord,
}

/// One splitting `A_Γ = A_1 ⋉ F` at a vertex `z`.
pub struct Splitting {
    pub(crate) dd: DecompositionData,
    pub(crate) tower: LinkTower,
    pub(crate) sub: Arc<ArtinGroup>,
    pub(crate) act_cache: Mutex<HashMap<(BasisKey, Letter), FreeWord>>,
    pub(crate) keys: Mutex<HashMap<(T0Element, CanonicalForm), BasisKey>>,
}

impl fmt::Debug for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Splitting").field("z", &self.dd.z).finish()
    }
}

/// An even Artin group of FC type together with its recursive splitting data.
pub struct ArtinGroup {
    graph: CoxeterGraph,
    splitting: Option<Splitting>,
    word_cache: Mutex<HashMap<CanonicalForm, Word>>,
}

impl fmt::Debug for ArtinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArtinGroup")
            .field("graph", &self.graph)
            .finish()
    }
}

type Registry = HashMap<CoxeterGraph, Arc<ArtinGroup>>;

const WORD_CACHE_LIMIT: usize = 1 << 16;

impl ArtinGroup {
    /// Builds the recursive structure. Rejects non-FC graphs up front.
    pub fn new(graph: &CoxeterGraph) -> Result<Self> {
        if let Some(tri) = graph.non_fc_triangle() {
            return Err(Error::NotFc(tri));
        }
        let mut registry = Registry::new();
        Self::build_uncached(graph, graph.least_vertex().cloned(), &mut registry)
    }

    /// Like [`ArtinGroup::new`] but splitting the top level at `z` instead of
    /// the least vertex. Lower levels keep the default choice.
    pub fn new_at(graph: &CoxeterGraph, z: &Gen) -> Result<Self> {
        if !graph.contains(z) {
            return Err(Error::UnknownVertex(z.to_string()));
        }
        if let Some(tri) = graph.non_fc_triangle() {
            return Err(Error::NotFc(tri));
        }
        let mut registry = Registry::new();
        Self::build_uncached(graph, Some(z.clone()), &mut registry)
    }

    fn build(graph: &CoxeterGraph, registry: &mut Registry) -> Result<Arc<ArtinGroup>> {
        if let Some(g) = registry.get(graph) {
            return Ok(g.clone());
        }
        let group = Arc::new(Self::build_uncached(
            graph,
            graph.least_vertex().cloned(),
            registry,
        )?);
        registry.insert(graph.clone(), group.clone());
        Ok(group)
    }

    fn build_uncached(
        graph: &CoxeterGraph,
        z: Option<Gen>,
        registry: &mut Registry,
    ) -> Result<ArtinGroup> {
        let splitting = match z {
            None => None,
            Some(z) => {
                let dd = decompose_at(graph, &z)?;
                let sub = Self::build(&dd.gamma1, registry)?;
                let base = Self::build(&dd.l1, registry)?;
                let tower = LinkTower::new(dd.clone(), base);
                Some(Splitting {
                    dd,
                    tower,
                    sub,
                    act_cache: Mutex::new(HashMap::new()),
                    keys: Mutex::new(HashMap::new()),
                })
            }
        };
        Ok(ArtinGroup {
            graph: graph.clone(),
            splitting,
            word_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    /// The top-level splitting; `None` for the empty graph.
    pub fn splitting(&self) -> Option<&Splitting> {
        self.splitting.as_ref()
    }

    pub fn identity(&self) -> CanonicalForm {
        match &self.splitting {
            None => CanonicalForm::Trivial,
            Some(sp) => CanonicalForm::Split(Arc::new(sp.sub.identity()), FreeWord::new()),
        }
    }

    pub fn is_identity(&self, cf: &CanonicalForm) -> bool {
        cf.is_identity()
    }

    fn unknown(&self, l: &Letter) -> Error {
        Error::LetterOutsideAlphabet(l.gen.to_string())
    }

    /// `cf · l`.
    pub fn right_mul_letter(&self, cf: &CanonicalForm, l: &Letter) -> Result<CanonicalForm> {
        let (Some(sp), Some((g1, omega))) = (&self.splitting, cf.parts()) else {
            return Err(self.unknown(l));
        };
        if l.gen == sp.dd.z {
            let mut omega = omega.clone();
            omega.push(sp.seed_key(), l.sign);
            return Ok(CanonicalForm::Split(Arc::new(g1.clone()), omega));
        }
        let g1 = sp.sub.right_mul_letter(g1, l)?;
        let omega = sp.act_letter(omega, l)?;
        Ok(CanonicalForm::Split(Arc::new(g1), omega))
    }

    /// `l · cf`.
    pub fn left_mul_letter(&self, l: &Letter, cf: &CanonicalForm) -> Result<CanonicalForm> {
        let (Some(sp), Some((g1, omega))) = (&self.splitting, cf.parts()) else {
            return Err(self.unknown(l));
        };
        if l.gen == sp.dd.z {
            // (1, b_1^ε)(g_1, ω) = (g_1, (b_1^ε * g_1) ω)
            let seed = FreeWord::single(sp.seed_key(), l.sign);
            let mut moved = sp.act(&seed, &sp.sub.canonical_word(g1))?;
            moved.extend(omega);
            return Ok(CanonicalForm::Split(Arc::new(g1.clone()), moved));
        }
        // (s, 1)(g_1, ω) = (s g_1, ω)
        let g1 = sp.sub.left_mul_letter(l, g1)?;
        Ok(CanonicalForm::Split(Arc::new(g1), omega.clone()))
    }

    /// `cf · w`.
    pub fn right_mul_word(&self, cf: &CanonicalForm, w: &Word) -> Result<CanonicalForm> {
        let mut out = cf.clone();
        for l in w.letters() {
            out = self.right_mul_letter(&out, l)?;
        }
        Ok(out)
    }

    /// The canonical form of `w̄`.
    pub fn normal_form(&self, w: &Word) -> Result<CanonicalForm> {
        w.check_alphabet(self.graph.vertex_set())?;
        self.right_mul_word(&self.identity(), w)
    }

    pub fn words_equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        Ok(self.normal_form(w1)? == self.normal_form(w2)?)
    }

    pub fn mul(&self, a: &CanonicalForm, b: &CanonicalForm) -> Result<CanonicalForm> {
        self.right_mul_word(a, &self.canonical_word(b))
    }

    pub fn inverse(&self, a: &CanonicalForm) -> Result<CanonicalForm> {
        self.normal_form(&self.canonical_word(a).inverse())
    }

    /// `l^{-1} cf l`.
    pub fn conjugate_by_letter(&self, cf: &CanonicalForm, l: &Letter) -> Result<CanonicalForm> {
        let right = self.right_mul_letter(cf, l)?;
        self.left_mul_letter(&l.inverse(), &right)
    }

    /// The canonical word: `g_1`'s canonical word followed by `h^{-1} z^ε h`
    /// for each factor `b_h^ε` of `ω`, freely reduced. Distinct elements get
    /// distinct words.
    pub fn canonical_word(&self, cf: &CanonicalForm) -> Word {
        let (Some(sp), Some((g1, omega))) = (&self.splitting, cf.parts()) else {
            return Word::new();
        };
        if omega.is_empty() {
            return sp.sub.canonical_word(g1);
        }
        if let Some(w) = self.word_cache.lock().unwrap().get(cf) {
            return w.clone();
        }
        let mut out = sp.sub.canonical_word(g1);
        out.append(&sp.phi_free(omega));
        let out = free_reduce(&out);
        let mut cache = self.word_cache.lock().unwrap();
        if cache.len() >= WORD_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(cf.clone(), out.clone());
        out
    }

    /// `ψ`: the image of `w` in `A_1 ⋉ F`.
    pub fn psi(&self, w: &Word) -> Result<SemidirectElement> {
        let sp = self.require_splitting()?;
        let cf = self.normal_form(w)?;
        let (g1, omega) = cf.parts().unwrap();
        debug_assert!(sp.sub.graph().len() + 1 == self.graph.len());
        Ok(SemidirectElement {
            g1: g1.clone(),
            omega: omega.clone(),
        })
    }

    /// `φ`: `(g_1, ω) ↦ g_1 φ(ω)` as a freely reduced word.
    pub fn phi(&self, e: &SemidirectElement) -> Result<Word> {
        let sp = self.require_splitting()?;
        Ok(free_reduce(
            &sp.sub.canonical_word(&e.g1).concat(&sp.phi_free(&e.omega)),
        ))
    }

    /// The semidirect element of a canonical form (they share their parts).
    pub fn as_semidirect(&self, cf: &CanonicalForm) -> Option<SemidirectElement> {
        cf.parts().map(|(g1, omega)| SemidirectElement {
            g1: g1.clone(),
            omega: omega.clone(),
        })
    }

    pub fn from_semidirect(&self, e: &SemidirectElement) -> CanonicalForm {
        CanonicalForm::Split(Arc::new(e.g1.clone()), e.omega.clone())
    }

    /// `(g_1, ω_1)(g_2, ω_2) = (g_1 g_2, (ω_1 * g_2) ω_2)`.
    pub fn semidirect_mul(
        &self,
        a: &SemidirectElement,
        b: &SemidirectElement,
    ) -> Result<SemidirectElement> {
        let sp = self.require_splitting()?;
        let g1 = sp.sub.mul(&a.g1, &b.g1)?;
        let mut omega = sp.act(&a.omega, &sp.sub.canonical_word(&b.g1))?;
        omega.extend(&b.omega);
        Ok(SemidirectElement { g1, omega })
    }

    fn require_splitting(&self) -> Result<&Splitting> {
        self.splitting
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("the empty graph has no splitting".into()))
    }

    /// Human-readable `(g1 ; omega)` with `g1` as its canonical word.
    pub fn format_semidirect(&self, e: &SemidirectElement) -> Result<String> {
        let sp = self.require_splitting()?;
        Ok(format!(
            "({} ; {})",
            sp.sub.canonical_word(&e.g1),
            sp.format_free(&e.omega)
        ))
    }
}

impl Splitting {
    pub fn dd(&self) -> &DecompositionData {
        &self.dd
    }

    pub fn z(&self) -> &Gen {
        &self.dd.z
    }

    /// Normal forms in `A_L`.
    pub fn tower(&self) -> &LinkTower {
        &self.tower
    }

    /// The group `A_1` on `Γ ∖ {z}`.
    pub fn sub(&self) -> &Arc<ArtinGroup> {
        &self.sub
    }

    /// `h^{-1} z^ε h` per factor, where `h` is the key's word.
    pub(crate) fn phi_free(&self, omega: &FreeWord) -> Word {
        let mut out = Word::new();
        for (key, sign) in omega.factors() {
            let h = self.key_word(key);
            out.append(&h.inverse());
            out.push(Letter::new(self.dd.z.clone(), *sign));
            out.append(&h);
        }
        out
    }

    /// The word `n(h_0) · u` naming the element `h = h_0 u ∈ T`.
    pub fn key_word(&self, key: &BasisKey) -> Word {
        self.tower
            .to_word(key.h0().form())
            .concat(&self.sub.canonical_word(key.u()))
    }

    /// `b[h0|u]^e ...` with `h0` and `u` as words.
    pub fn format_free(&self, omega: &FreeWord) -> String {
        omega.to_string()
    }
}

/// Rank of the free group at one stage of a poly-free tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankDescriptor {
    Finite(u64),
    CountablyInfinite,
}

impl fmt::Display for RankDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankDescriptor::Finite(r) => write!(f, "{r}"),
            RankDescriptor::CountablyInfinite => f.write_str("countably-infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerStage {
    pub removed: String,
    pub rank: RankDescriptor,
}

/// Stages `(z_i, rank F_i)` of `1 = G_0 ⊴ ⋯ ⊴ G_N = A_Γ`, outermost first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyfreeTower {
    pub stages: Vec<TowerStage>,
}

/// Rank of `F` at one splitting: `|T| = |T_0| · |Ker(π_L)|`.
///
/// `Ker(π_L)` is trivial iff `Γ_1 = L`, infinite otherwise. `T_0` is `{1}`
/// without HNN letters, `{1, x, …, x^{k_x-1}}` for a single HNN letter `x`
/// with `S_x = L_1`, and infinite otherwise.
pub fn stage_rank(dd: &DecompositionData) -> RankDescriptor {
    if dd.gamma1.len() != dd.link.len() {
        return RankDescriptor::CountablyInfinite;
    }
    match dd.hnn_letters.as_slice() {
        [] => RankDescriptor::Finite(1),
        [x] if dd.star_subgraphs[x].len() == dd.l1.len() => {
            RankDescriptor::Finite(dd.k(x).unwrap() as u64)
        }
        _ => RankDescriptor::CountablyInfinite,
    }
}

pub fn polyfree_tower(graph: &CoxeterGraph) -> Result<PolyfreeTower> {
    if let Some(tri) = graph.non_fc_triangle() {
        return Err(Error::NotFc(tri));
    }
    let mut stages = Vec::new();
    let mut current = graph.clone();
    while let Some(z) = current.least_vertex().cloned() {
        let dd = decompose_at(&current, &z)?;
        stages.push(TowerStage {
            removed: z.to_string(),
            rank: stage_rank(&dd),
        });
        current = dd.gamma1;
    }
    Ok(PolyfreeTower { stages })
}

/// One-shot canonical form; builds the group each call.
pub fn normal_form(graph: &CoxeterGraph, w: &Word) -> Result<CanonicalForm> {
    ArtinGroup::new(graph)?.normal_form(w)
}

pub fn words_equal(graph: &CoxeterGraph, w1: &Word, w2: &Word) -> Result<bool> {
    ArtinGroup::new(graph)?.words_equal(w1, w2)
}

/// `ψ` at an explicit splitting vertex.
pub fn psi_at(graph: &CoxeterGraph, z: &Gen, w: &Word) -> Result<(ArtinGroup, SemidirectElement)> {
    let group = ArtinGroup::new_at(graph, z)?;
    let e = group.psi(w)?;
    Ok((group, e))
}
