use std::fs;
use std::path::Path;

use artin_core::oracle::{bfs_trivial, raag_normal_form, BfsBudget, BfsVerdict};
use artin_core::residual::{amalgam_split, FiniteWitness, Image, Separation, Target};
use artin_core::{
    polyfree_tower, psi_at, ArtinGroup, CoxeterGraph, Error, Gen, ParseError, RawGraph,
    ValidationError, Word,
};
use serde_json::{json, Value};

/// Degree cap for `separate` when `ARTIN_MAX_DEGREE` is unset.
const DEFAULT_DEGREE_CAP: usize = 8;

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
    /// Failures go to stderr in text mode.
    pub failed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
            failed: false,
        }
    }
}

/// Errors that end a command: bad input (exit 2) or an unmet precondition
/// such as an odd label or a non-FC triangle (exit 3).
pub enum Failure {
    Parse(String),
    Precondition(String),
}

impl Failure {
    pub fn into_outcome(self) -> Outcome {
        let (kind, message, code) = match self {
            Failure::Parse(m) => ("parse", m, 2),
            Failure::Precondition(m) => ("precondition", m, 3),
        };
        Outcome {
            text: format!("error: {message}"),
            json: json!({ "error": kind, "message": message }),
            code,
            failed: true,
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn from_core(e: Error) -> Failure {
    match e {
        Error::Parse(_)
        | Error::UnknownVertex(_)
        | Error::LetterOutsideAlphabet(_)
        | Error::InvalidArgument(_) => Failure::Parse(e.to_string()),
        Error::Validation(v) => from_validation(v),
        _ => Failure::Precondition(e.to_string()),
    }
}

fn from_validation(v: ValidationError) -> Failure {
    match v {
        ValidationError::OddLabel(..)
        | ValidationError::LabelTooSmall(..)
        | ValidationError::LabelTooLarge(_) => Failure::Precondition(v.to_string()),
        _ => Failure::Parse(v.to_string()),
    }
}

fn read_raw(path: &Path) -> Result<RawGraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    RawGraph::parse(&text).map_err(|e| Failure::Parse(format!("{}:{e}", path.display())))
}

fn load(path: &Path) -> Result<CoxeterGraph, Failure> {
    let raw = read_raw(path)?;
    CoxeterGraph::try_from(&raw).map_err(|v| match from_validation(v) {
        Failure::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
        Failure::Precondition(m) => Failure::Precondition(format!("{}: {m}", path.display())),
    })
}

fn group(graph: &CoxeterGraph) -> Result<ArtinGroup, Failure> {
    ArtinGroup::new(graph).map_err(from_core)
}

/// Parses a word argument; unknown generators are reported with their column.
fn parse_word(graph: &CoxeterGraph, text: &str) -> Result<Word, Failure> {
    let located = |e: ParseError| Failure::Parse(format!("word `{text}`: {e}"));
    let w = Word::parse(text).map_err(located)?;
    if w.check_alphabet(graph.vertex_set()).is_err() {
        let mut offset = 0;
        for token in text.split_whitespace() {
            let column = text[offset..].find(token).unwrap() + offset;
            offset = column + token.len();
            let id = token.split('^').next().unwrap_or(token);
            if graph.gen(id).is_none() {
                return Err(located(ParseError {
                    line: 1,
                    column: column + 1,
                    message: format!("unknown generator `{id}`"),
                }));
            }
        }
    }
    Word::parse_in(text, graph).map_err(from_core)
}

pub fn check(path: &Path) -> CmdResult {
    let raw = read_raw(path)?;
    let graph = match CoxeterGraph::try_from(&raw) {
        Ok(g) => g,
        Err(v) => {
            return match from_validation(v) {
                Failure::Precondition(m) => Ok(Outcome {
                    text: format!("even: no ({m})"),
                    json: json!({ "even": false, "fc": null, "offending": m }),
                    code: 3,
                    failed: false,
                }),
                Failure::Parse(m) => Err(Failure::Parse(format!("{}: {m}", path.display()))),
            }
        }
    };
    match graph.non_fc_triangle() {
        None => Ok(Outcome::ok(
            "even: yes\nfc: yes".into(),
            json!({ "even": true, "fc": true, "offending": null }),
        )),
        Some([a, b, c]) => {
            let tri = format!("triangle {a} {b} {c}");
            Ok(Outcome {
                text: format!("even: yes\nfc: no ({tri} has fewer than two edges labelled 2)"),
                json: json!({ "even": true, "fc": false, "offending": tri }),
                code: 3,
                failed: false,
            })
        }
    }
}

fn bfs_line(graph: &CoxeterGraph, w: &Word) -> Result<(String, Value), Failure> {
    let verdict = bfs_trivial(graph, w, BfsBudget::default_for(w)).map_err(from_core)?;
    let name = match verdict {
        BfsVerdict::ProvenTrivial => "proven-trivial",
        BfsVerdict::Inconclusive => "inconclusive",
    };
    Ok((format!("oracle bfs: {name}"), json!(name)))
}

fn right_angled(graph: &CoxeterGraph) -> bool {
    graph.edges().all(|(_, _, m)| m == 2)
}

pub fn nf(path: &Path, word: &str, oracle: bool) -> CmdResult {
    let graph = load(path)?;
    let g = group(&graph)?;
    let w = parse_word(&graph, word)?;
    let cf = g.normal_form(&w).map_err(from_core)?;
    let mut text = cf.to_string();
    let mut doc = json!({ "normal_form": cf.to_string() });
    if oracle {
        let (line, verdict) = bfs_line(&graph, &w)?;
        text.push_str(&format!("\n{line}"));
        doc["oracle_bfs"] = verdict;
        if right_angled(&graph) {
            let r = raag_normal_form(&graph, &w).map_err(from_core)?;
            text.push_str(&format!("\noracle raag: {r}"));
            doc["oracle_raag"] = json!(r.to_string());
        }
    }
    Ok(Outcome::ok(text, doc))
}

pub fn eq(path: &Path, word1: &str, word2: &str, oracle: bool) -> CmdResult {
    let graph = load(path)?;
    let g = group(&graph)?;
    let w1 = parse_word(&graph, word1)?;
    let w2 = parse_word(&graph, word2)?;
    let equal = g.words_equal(&w1, &w2).map_err(from_core)?;
    let verdict = if equal { "equal" } else { "distinct" };
    let mut text = verdict.to_string();
    let mut doc = json!({ "verdict": verdict });
    if oracle {
        let quotient = w1.concat(&w2.inverse());
        let (line, v) = bfs_line(&graph, &quotient)?;
        text.push_str(&format!("\n{line}"));
        doc["oracle_bfs"] = v;
        if right_angled(&graph) {
            let same = raag_normal_form(&graph, &w1).map_err(from_core)?
                == raag_normal_form(&graph, &w2).map_err(from_core)?;
            let name = if same { "equal" } else { "distinct" };
            text.push_str(&format!("\noracle raag: {name}"));
            doc["oracle_raag"] = json!(name);
        }
    }
    Ok(Outcome {
        text,
        json: doc,
        code: if equal { 0 } else { 1 },
        failed: false,
    })
}

pub fn tower(path: &Path) -> CmdResult {
    let graph = load(path)?;
    let tower = polyfree_tower(&graph).map_err(from_core)?;
    let lines: Vec<String> = tower
        .stages
        .iter()
        .enumerate()
        .map(|(i, s)| format!("stage {}: {} rank {}", i + 1, s.removed, s.rank))
        .collect();
    let stages: Vec<Value> = tower
        .stages
        .iter()
        .map(|s| json!({ "removed": s.removed, "rank": s.rank.to_string() }))
        .collect();
    let text = if lines.is_empty() {
        "trivial group".to_string()
    } else {
        lines.join("\n")
    };
    Ok(Outcome::ok(text, json!({ "stages": stages })))
}

fn join(set: &std::collections::BTreeSet<Gen>) -> String {
    set.iter().map(Gen::to_string).collect::<Vec<_>>().join(" ")
}

pub fn split(path: &Path) -> CmdResult {
    let graph = load(path)?;
    if let Some(tri) = graph.non_fc_triangle() {
        return Err(from_core(Error::NotFc(tri)));
    }
    Ok(match amalgam_split(&graph) {
        None => Outcome::ok("complete".into(), json!({ "complete": true })),
        Some(sp) => Outcome::ok(
            format!(
                "split over {} {}\nX: {}\nY: {}\nZ: {}",
                sp.s,
                sp.t,
                join(&sp.x),
                join(&sp.y),
                join(&sp.z)
            ),
            json!({
                "complete": false,
                "unlinked": [sp.s.to_string(), sp.t.to_string()],
                "x": sp.x.iter().map(Gen::to_string).collect::<Vec<_>>(),
                "y": sp.y.iter().map(Gen::to_string).collect::<Vec<_>>(),
                "z": sp.z.iter().map(Gen::to_string).collect::<Vec<_>>(),
            }),
        ),
    })
}

fn degree_cap() -> Result<usize, Failure> {
    match std::env::var("ARTIN_MAX_DEGREE") {
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Parse(format!("ARTIN_MAX_DEGREE: invalid value `{v}`"))),
    }
}

fn witness_json(wit: &FiniteWitness) -> Value {
    let target = match wit.target {
        Target::Cyclic(n) => format!("Z/{n}"),
        Target::Symmetric(d) => format!("S{d}"),
    };
    let image = |i: &Image| i.to_string();
    json!({
        "outcome": "witness",
        "target": target,
        "assignment": wit
            .assignment
            .iter()
            .map(|(g, i)| json!([g.to_string(), image(i)]))
            .collect::<Vec<_>>(),
        "image": image(&wit.image),
    })
}

pub fn separate(path: &Path, word: &str, max_degree: usize) -> CmdResult {
    let graph = load(path)?;
    group(&graph)?;
    let w = parse_word(&graph, word)?;
    let cap = degree_cap()?;
    let outcome = artin_core::residual::separate(&graph, &w, max_degree, cap).map_err(from_core)?;
    Ok(match outcome {
        Separation::Witness(wit) => Outcome::ok(wit.to_string(), witness_json(&wit)),
        Separation::TrivialInput => Outcome {
            text: "trivial".into(),
            json: json!({ "outcome": "trivial" }),
            code: 1,
            failed: false,
        },
        Separation::NotFound => Outcome {
            text: "not-found".into(),
            json: json!({ "outcome": "not-found", "max_degree": max_degree }),
            code: 1,
            failed: false,
        },
    })
}

pub fn act(path: &Path, word: &str, at: Option<&str>) -> CmdResult {
    let graph = load(path)?;
    if let Some(tri) = graph.non_fc_triangle() {
        return Err(from_core(Error::NotFc(tri)));
    }
    let w = parse_word(&graph, word)?;
    let z = match at {
        Some(name) => graph
            .gen(name)
            .cloned()
            .ok_or_else(|| Failure::Parse(format!("--at: unknown vertex `{name}`")))?,
        None => graph
            .least_vertex()
            .cloned()
            .ok_or_else(|| Failure::Precondition("the empty graph has no splitting".into()))?,
    };
    let (g, e) = psi_at(&graph, &z, &w).map_err(from_core)?;
    let sub = g.splitting().unwrap().sub();
    let g1 = sub.canonical_word(&e.g1).to_string();
    let omega = e.omega.to_string();
    Ok(Outcome::ok(
        g.format_semidirect(&e).map_err(from_core)?,
        json!({ "z": z.to_string(), "g1": g1, "omega": omega }),
    ))
}
