//! Defining graphs of even Artin groups.
//!
//! A [`CoxeterGraph`] stores the vertex set `S` and the finite labels
//! `m_{s,t}`; a missing edge means `m_{s,t} = ∞`. This module also derives the
//! per-vertex data ([`DecompositionData`]) that drives the semidirect splitting
//! `A_Γ = F ⋊ A_1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, ValidationError};

/// A generator identifier. Ordered by plain string comparison, which fixes the
/// vertex order used everywhere (vertex choice, HNN letter order, searches).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(Arc<str>);

impl Gen {
    /// Builds a generator, checking the identifier syntax `[A-Za-z][A-Za-z0-9_]*`.
    pub fn new(id: &str) -> Result<Self, ValidationError> {
        if is_valid_id(id) {
            Ok(Gen(Arc::from(id)))
        } else {
            Err(ValidationError::InvalidId(id.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl serde::Serialize for Gen {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_valid_id(id: &str) -> bool {
    let mut chars = id.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Unvalidated graph description, as read from a file.
///
/// This is also the JSON form: `{"vertices": [...], "edges": [[s, t, m], ...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, u64)>,
}

impl RawGraph {
    /// Parses either the line format (`vertex a` / `edge a b 4`) or the JSON
    /// form; the choice is made on the first non-blank character.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_lines(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    fn parse_lines(text: &str) -> Result<Self, ParseError> {
        let mut raw = RawGraph::default();
        for (lineno, line) in text.lines().enumerate() {
            let content = match line.find('#') {
                Some(i) => &line[..i],
                None => line,
            };
            let tokens = tokenize(content);
            let Some(&(col, keyword)) = tokens.first() else {
                continue;
            };
            let err = |column: usize, message: String| ParseError {
                line: lineno + 1,
                column,
                message,
            };
            let id_at = |i: usize| -> Result<String, ParseError> {
                let (c, tok) = tokens[i];
                if is_valid_id(tok) {
                    Ok(tok.to_string())
                } else {
                    Err(err(c, format!("invalid identifier `{tok}`")))
                }
            };
            match keyword {
                "vertex" => {
                    if tokens.len() != 2 {
                        return Err(err(col, "expected `vertex <id>`".into()));
                    }
                    raw.vertices.push(id_at(1)?);
                }
                "edge" => {
                    if tokens.len() != 4 {
                        return Err(err(col, "expected `edge <id> <id> <label>`".into()));
                    }
                    let s = id_at(1)?;
                    let t = id_at(2)?;
                    let (c, tok) = tokens[3];
                    let m: u64 = tok
                        .parse()
                        .map_err(|_| err(c, format!("invalid label `{tok}`")))?;
                    raw.edges.push((s, t, m));
                }
                other => return Err(err(col, format!("unknown record `{other}`"))),
            }
        }
        Ok(raw)
    }

    /// Renders the line format. Vertices and edges keep their stored order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for (s, t, m) in &self.edges {
            out.push_str(&format!("edge {s} {t} {m}\n"));
        }
        out
    }
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Checks a raw graph: unique valid identifiers, declared endpoints, no
/// self-edges, no duplicate edges, even labels `≥ 2`. Reports the first
/// offending record.
pub fn validate(raw: &RawGraph) -> Result<(), ValidationError> {
    let mut seen = BTreeSet::new();
    for v in &raw.vertices {
        if !is_valid_id(v) {
            return Err(ValidationError::InvalidId(v.clone()));
        }
        if !seen.insert(v.as_str()) {
            return Err(ValidationError::DuplicateVertex(v.clone()));
        }
    }
    let mut pairs = BTreeSet::new();
    for (s, t, m) in &raw.edges {
        for v in [s, t] {
            if !seen.contains(v.as_str()) {
                return Err(ValidationError::UndeclaredVertex(v.clone()));
            }
        }
        if s == t {
            return Err(ValidationError::SelfEdge(s.clone()));
        }
        let key = if s < t { (s, t) } else { (t, s) };
        if !pairs.insert(key) {
            return Err(ValidationError::DuplicateEdge(s.clone(), t.clone()));
        }
        if *m < 2 {
            return Err(ValidationError::LabelTooSmall(s.clone(), t.clone(), *m));
        }
        if m % 2 != 0 {
            return Err(ValidationError::OddLabel(s.clone(), t.clone(), *m));
        }
    }
    Ok(())
}

/// Labelled graph of an even Artin group. Absent edges mean `∞`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    vertices: BTreeSet<Gen>,
    edges: BTreeMap<(Gen, Gen), u32>,
}

impl CoxeterGraph {
    /// The graph with no vertices.
    pub fn empty() -> Self {
        CoxeterGraph {
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
        }
    }

    /// Convenience constructor that validates its input.
    pub fn from_parts(
        vertices: &[&str],
        edges: &[(&str, &str, u64)],
    ) -> Result<Self, ValidationError> {
        let raw = RawGraph {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(s, t, m)| (s.to_string(), t.to_string(), *m))
                .collect(),
        };
        Self::try_from(&raw)
    }

    /// Parses a graph file (either format) and validates it.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let raw = RawGraph::parse(text)?;
        Ok(Self::try_from(&raw)?)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Gen> + '_ {
        self.vertices.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<Gen> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &Gen) -> bool {
        self.vertices.contains(v)
    }

    /// Looks up a vertex by name.
    pub fn gen(&self, name: &str) -> Option<&Gen> {
        self.vertices.iter().find(|g| g.as_str() == name)
    }

    /// `m_{s,t}`, or `None` for `∞` (and for `s = t`).
    pub fn label(&self, s: &Gen, t: &Gen) -> Option<u32> {
        let key = if s < t {
            (s.clone(), t.clone())
        } else {
            (t.clone(), s.clone())
        };
        self.edges.get(&key).copied()
    }

    pub fn linked(&self, s: &Gen, t: &Gen) -> bool {
        self.label(s, t).is_some()
    }

    /// Edges as `(s, t, m)` with `s < t`, in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (&Gen, &Gen, u32)> + '_ {
        self.edges.iter().map(|((s, t), m)| (s, t, *m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            edges: self
                .edges()
                .map(|(s, t, m)| (s.to_string(), t.to_string(), m as u64))
                .collect(),
        }
    }

    /// The least vertex in the vertex order.
    pub fn least_vertex(&self) -> Option<&Gen> {
        self.vertices.iter().next()
    }

    fn check_vertex(&self, v: &Gen) -> Result<(), Error> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// All triangles `(a, b, c)` with `a < b < c`.
    pub fn triangles(&self) -> Vec<[Gen; 3]> {
        let vs: Vec<&Gen> = self.vertices.iter().collect();
        let mut out = Vec::new();
        for (i, a) in vs.iter().enumerate() {
            for (j, b) in vs.iter().enumerate().skip(i + 1) {
                if !self.linked(a, b) {
                    continue;
                }
                for c in vs.iter().skip(j + 1) {
                    if self.linked(a, c) && self.linked(b, c) {
                        out.push([(*a).clone(), (*b).clone(), (*c).clone()]);
                    }
                }
            }
        }
        out
    }

    /// First triangle with fewer than two edges labelled 2, if any.
    pub fn non_fc_triangle(&self) -> Option<[Gen; 3]> {
        self.triangles().into_iter().find(|[a, b, c]| {
            let twos = [(a, b), (a, c), (b, c)]
                .iter()
                .filter(|(s, t)| self.label(s, t) == Some(2))
                .count();
            twos < 2
        })
    }
}

impl TryFrom<&RawGraph> for CoxeterGraph {
    type Error = ValidationError;

    fn try_from(raw: &RawGraph) -> Result<Self, ValidationError> {
        validate(raw)?;
        let mut vertices = BTreeSet::new();
        for v in &raw.vertices {
            vertices.insert(Gen::new(v)?);
        }
        let mut edges = BTreeMap::new();
        for (s, t, m) in &raw.edges {
            let (s, t) = (Gen::new(s)?, Gen::new(t)?);
            let key = if s < t { (s, t) } else { (t, s) };
            let m = u32::try_from(*m).map_err(|_| ValidationError::LabelTooLarge(*m))?;
            edges.insert(key, m);
        }
        Ok(CoxeterGraph { vertices, edges })
    }
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        for (s, t, m) in self.edges() {
            write!(f, "; m_{s}{t}={m}")?;
        }
        write!(f, "}}")
    }
}

/// True iff every triangle has at least two edges labelled 2.
///
/// For even graphs this is equivalent to the FC condition.
pub fn is_fc_type(graph: &CoxeterGraph) -> bool {
    graph.non_fc_triangle().is_none()
}

/// True iff the graph is complete and every vertex meets at most one edge with
/// label greater than 2 (the spherical criterion for even graphs).
pub fn is_spherical_even(graph: &CoxeterGraph) -> bool {
    let n = graph.len();
    if graph.edge_count() != n * n.saturating_sub(1) / 2 {
        return false;
    }
    graph.vertices().all(|v| {
        graph
            .vertices()
            .filter(|w| *w != v && graph.label(v, w).is_some_and(|m| m > 2))
            .count()
            <= 1
    })
}

/// Full subgraph spanned by `subset`, labels inherited.
pub fn full_subgraph<'a, I>(graph: &CoxeterGraph, subset: I) -> Result<CoxeterGraph, Error>
where
    I: IntoIterator<Item = &'a Gen>,
{
    let mut vertices = BTreeSet::new();
    for v in subset {
        graph.check_vertex(v)?;
        vertices.insert(v.clone());
    }
    let edges = graph
        .edges
        .iter()
        .filter(|((s, t), _)| vertices.contains(s) && vertices.contains(t))
        .map(|(k, m)| (k.clone(), *m))
        .collect();
    Ok(CoxeterGraph { vertices, edges })
}

/// `lk(z, Γ)`: the full subgraph on the vertices linked to `z`.
pub fn link(graph: &CoxeterGraph, z: &Gen) -> Result<CoxeterGraph, Error> {
    graph.check_vertex(z)?;
    let nbrs: Vec<Gen> = graph
        .vertices()
        .filter(|s| *s != z && graph.linked(s, z))
        .cloned()
        .collect();
    full_subgraph(graph, &nbrs)
}

/// Everything the splitting at a vertex `z` needs to know about the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionData {
    pub z: Gen,
    /// `L = lk(z, Γ)`.
    pub link: CoxeterGraph,
    /// `Γ_1 = Γ ∖ {z}`.
    pub gamma1: CoxeterGraph,
    /// Vertices of `L` with `k_s = 1`.
    pub l1: CoxeterGraph,
    /// `x_1 < … < x_n`: the vertices of `L ∖ L_1`, the stable letters of the
    /// HNN tower for `A_L`.
    pub hnn_letters: Vec<Gen>,
    /// `S_i = lk(x_i, L)`.
    pub star_subgraphs: BTreeMap<Gen, CoxeterGraph>,
    /// `k_s` with `m_{z,s} = 2 k_s`, for `s ∈ L`.
    pub half_labels: BTreeMap<Gen, u32>,
}

impl DecompositionData {
    pub fn k(&self, s: &Gen) -> Option<u32> {
        self.half_labels.get(s).copied()
    }

    pub fn in_link(&self, s: &Gen) -> bool {
        self.half_labels.contains_key(s)
    }

    pub fn in_l1(&self, s: &Gen) -> bool {
        self.l1.contains(s)
    }

    pub fn is_hnn_letter(&self, s: &Gen) -> bool {
        self.star_subgraphs.contains_key(s)
    }

    /// Position of an HNN letter in the tower (0-based).
    pub fn hnn_index(&self, x: &Gen) -> Option<usize> {
        self.hnn_letters.iter().position(|y| y == x)
    }

    pub fn star(&self, x: &Gen) -> Option<&CoxeterGraph> {
        self.star_subgraphs.get(x)
    }

    /// `X_i`: the full subgraph of `L` on `L_1 ∪ {x_1, …, x_i}`.
    pub fn tower_stage(&self, i: usize) -> CoxeterGraph {
        let mut vs: Vec<Gen> = self.l1.vertices().cloned().collect();
        vs.extend(self.hnn_letters.iter().take(i).cloned());
        full_subgraph(&self.link, &vs).expect("tower stages lie inside the link")
    }

    /// Re-checks every structural invariant; used by tests and debug builds.
    pub fn check_invariants(&self) -> Result<(), String> {
        for (s, t, m) in self.link.edges() {
            let (ks, kt) = (self.k(s).unwrap(), self.k(t).unwrap());
            if ks != 1 && kt != 1 {
                return Err(format!("k_{s} = {ks} and k_{t} = {kt} are both > 1"));
            }
            if (ks > 1 || kt > 1) && m != 2 {
                return Err(format!("m_{s}{t} = {m} but one endpoint has k > 1"));
            }
        }
        for (i, x) in self.hnn_letters.iter().enumerate() {
            for y in self.hnn_letters.iter().skip(i + 1) {
                if self.link.linked(x, y) {
                    return Err(format!("HNN letters {x} and {y} are linked"));
                }
            }
            let star = &self.star_subgraphs[x];
            if !star.vertex_set().is_subset(self.l1.vertex_set()) {
                return Err(format!("S_{x} is not contained in L1"));
            }
        }
        if !self.hnn_letters.windows(2).all(|w| w[0] < w[1]) {
            return Err("HNN letters out of order".into());
        }
        if !self.l1.vertex_set().is_subset(self.link.vertex_set())
            || !self.link.vertex_set().is_subset(self.gamma1.vertex_set())
            || self.gamma1.contains(&self.z)
        {
            return Err("containment chain L1 ⊆ L ⊆ Γ1 broken".into());
        }
        let mut stage = self.l1.vertex_set().clone();
        for x in &self.hnn_letters {
            stage.insert(x.clone());
        }
        if &stage != self.link.vertex_set() {
            return Err("X_n differs from L".into());
        }
        Ok(())
    }
}

/// Computes the splitting data at `z`.
///
/// Errors on non-FC graphs and on unknown vertices.
pub fn decompose_at(graph: &CoxeterGraph, z: &Gen) -> Result<DecompositionData, Error> {
    graph.check_vertex(z)?;
    if let Some(tri) = graph.non_fc_triangle() {
        return Err(Error::NotFc(tri));
    }
    let link_graph = link(graph, z)?;
    let rest: Vec<Gen> = graph.vertices().filter(|v| *v != z).cloned().collect();
    let gamma1 = full_subgraph(graph, &rest)?;
    let half_labels: BTreeMap<Gen, u32> = link_graph
        .vertices()
        .map(|s| (s.clone(), graph.label(z, s).unwrap() / 2))
        .collect();
    let l1_vertices: Vec<Gen> = half_labels
        .iter()
        .filter(|(_, k)| **k == 1)
        .map(|(s, _)| s.clone())
        .collect();
    let l1 = full_subgraph(&link_graph, &l1_vertices)?;
    let hnn_letters: Vec<Gen> = half_labels
        .iter()
        .filter(|(_, k)| **k > 1)
        .map(|(s, _)| s.clone())
        .collect();
    let mut star_subgraphs = BTreeMap::new();
    for x in &hnn_letters {
        star_subgraphs.insert(x.clone(), link(&link_graph, x)?);
    }
    let dd = DecompositionData {
        z: z.clone(),
        link: link_graph,
        gamma1,
        l1,
        hnn_letters,
        star_subgraphs,
        half_labels,
    };
    dd.check_invariants().map_err(Error::Decomposition)?;
    Ok(dd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Gen {
        Gen::new(s).unwrap()
    }

    fn gamma1() -> CoxeterGraph {
        CoxeterGraph::from_parts(
            &["z", "a", "x"],
            &[("z", "a", 2), ("z", "x", 4), ("a", "x", 2)],
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(CoxeterGraph::from_parts(&["a", "b"], &[("a", "b", 4)]).is_ok());
        assert!(matches!(
            CoxeterGraph::from_parts(&["a", "b"], &[("a", "b", 3)]),
            Err(ValidationError::OddLabel(..))
        ));
        assert!(matches!(
            CoxeterGraph::from_parts(&["a"], &[("a", "a", 2)]),
            Err(ValidationError::SelfEdge(_))
        ));
        assert!(matches!(
            CoxeterGraph::from_parts(&["a", "a"], &[]),
            Err(ValidationError::DuplicateVertex(_))
        ));
        assert!(matches!(
            CoxeterGraph::from_parts(&["a", "b"], &[("a", "b", 0)]),
            Err(ValidationError::LabelTooSmall(..))
        ));
        assert!(matches!(
            CoxeterGraph::from_parts(&["a"], &[("a", "b", 2)]),
            Err(ValidationError::UndeclaredVertex(_))
        ));
        assert!(matches!(
            CoxeterGraph::from_parts(&["a", "b"], &[("a", "b", 2), ("b", "a", 4)]),
            Err(ValidationError::DuplicateEdge(..))
        ));
        assert!(matches!(
            CoxeterGraph::from_parts(&["1a"], &[]),
            Err(ValidationError::InvalidId(_))
        ));
    }

    #[test]
    fn fc_and_spherical() {
        let t226 = CoxeterGraph::from_parts(
            &["a", "b", "c"],
            &[("a", "b", 2), ("b", "c", 2), ("a", "c", 6)],
        )
        .unwrap();
        assert!(is_fc_type(&t226));
        let t442 = CoxeterGraph::from_parts(
            &["a", "b", "c"],
            &[("a", "b", 4), ("b", "c", 4), ("a", "c", 2)],
        )
        .unwrap();
        assert!(!is_fc_type(&t442));
        let path =
            CoxeterGraph::from_parts(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]).unwrap();
        assert!(is_fc_type(&path));

        let dihedral = CoxeterGraph::from_parts(&["a", "b"], &[("a", "b", 6)]).unwrap();
        assert!(is_spherical_even(&dihedral));
        let t224 = CoxeterGraph::from_parts(
            &["a", "b", "c"],
            &[("a", "b", 2), ("b", "c", 2), ("a", "c", 4)],
        )
        .unwrap();
        assert!(is_spherical_even(&t224));
        let free = CoxeterGraph::from_parts(&["a", "b"], &[]).unwrap();
        assert!(!is_spherical_even(&free));
        assert!(!is_spherical_even(&t442));
    }

    #[test]
    fn links_and_subgraphs() {
        let gm = gamma1();
        let lz = link(&gm, &g("z")).unwrap();
        assert_eq!(
            lz,
            CoxeterGraph::from_parts(&["a", "x"], &[("a", "x", 2)]).unwrap()
        );
        let la = link(&gm, &g("a")).unwrap();
        assert_eq!(
            la,
            CoxeterGraph::from_parts(&["z", "x"], &[("z", "x", 4)]).unwrap()
        );
        let iso = CoxeterGraph::from_parts(&["z", "a"], &[]).unwrap();
        assert!(link(&iso, &g("z")).unwrap().is_empty());
        assert!(link(&gm, &g("q")).is_err());

        let sub = full_subgraph(&gm, &[g("a"), g("x")]).unwrap();
        assert_eq!(sub, lz);
        assert!(full_subgraph(&gm, &[]).unwrap().is_empty());
        assert_eq!(full_subgraph(&gm, gm.vertex_set()).unwrap(), gm);
        assert!(full_subgraph(&gm, &[g("q")]).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let gm = gamma1();
        let dd = decompose_at(&gm, &g("z")).unwrap();
        assert_eq!(dd.link.vertex_set().len(), 2);
        assert_eq!(dd.l1.vertices().cloned().collect::<Vec<_>>(), vec![g("a")]);
        assert_eq!(dd.hnn_letters, vec![g("x")]);
        assert_eq!(
            dd.star(&g("x"))
                .unwrap()
                .vertices()
                .cloned()
                .collect::<Vec<_>>(),
            vec![g("a")]
        );
        assert_eq!(dd.k(&g("a")), Some(1));
        assert_eq!(dd.k(&g("x")), Some(2));

        let iso = CoxeterGraph::from_parts(&["z", "a", "b"], &[("a", "b", 4)]).unwrap();
        let dd = decompose_at(&iso, &g("z")).unwrap();
        assert!(dd.link.is_empty());
        assert_eq!(dd.gamma1, full_subgraph(&iso, &[g("a"), g("b")]).unwrap());

        let all2 = CoxeterGraph::from_parts(
            &["z", "a", "b"],
            &[("z", "a", 2), ("z", "b", 2), ("a", "b", 6)],
        )
        .unwrap();
        let dd = decompose_at(&all2, &g("z")).unwrap();
        assert_eq!(dd.l1, dd.link);
        assert!(dd.hnn_letters.is_empty());

        let bad = CoxeterGraph::from_parts(
            &["a", "b", "c"],
            &[("a", "b", 4), ("b", "c", 4), ("a", "c", 2)],
        )
        .unwrap();
        assert!(matches!(decompose_at(&bad, &g("a")), Err(Error::NotFc(_))));
    }

    #[test]
    fn parse_line_format() {
        let text = "# Γ1\nvertex z\nvertex a\nvertex x\nedge z a 2\nedge z x 4\n  edge a x 2\n";
        let gm = CoxeterGraph::parse(text).unwrap();
        assert_eq!(gm, gamma1());
        let err = RawGraph::parse("vertex a\nedge a\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 1));
        let err = RawGraph::parse("vertex a\nvertex b\nedge a b four\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 10));
        assert!(matches!(
            CoxeterGraph::parse("vertex a\nvertex a\n"),
            Err(Error::Validation(ValidationError::DuplicateVertex(_)))
        ));
    }

    #[test]
    fn parse_json_format() {
        let text = r#"{"vertices": ["z", "a", "x"], "edges": [["z", "a", 2], ["z", "x", 4], ["a", "x", 2]]}"#;
        assert_eq!(CoxeterGraph::parse(text).unwrap(), gamma1());
        let raw = gamma1().to_raw();
        assert_eq!(CoxeterGraph::parse(&raw.to_text()).unwrap(), gamma1());
    }
}
