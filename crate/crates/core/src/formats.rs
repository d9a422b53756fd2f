//! JSON file formats. Rationals are written as `"p/q"` strings (integers
//! are accepted too). Errors carry the JSON path of the offending field.
//!
//! | what              | shape |
//! |-------------------|-------|
//! | MWDP instance     | `{"n", "arcs": [{"tail", "head", "c", "m": [[m11, m12], [m21, m22]]}]}` |
//! | polymatrix game   | `{"n", "edges": [{"u", "v", "pi_uv", "pi_vu"}]}` |
//! | threshold game    | `{"n", "edges": [[u, v]], "gamma": [..]}` or `{"edges", "types": "AB..", "gamma_A", "gamma_B"}` |
//! | hypergraph        | `{"n", "hyperedges": [[a, b, c]]}` |
//! | plain graph       | `{"n", "edges": [[u, v]]}` or `{"n", "arcs": [[u, v]]}`, plus optional `"s"`, `"t"`, `"k"` |
//! | coloured graph    | `{"n", "edges": [{"u", "v", "color": 1 or 2, "w"}]}` |

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::encodings::{Color, ColoredEdge, ColoredGraph};
use crate::error::{Error, Result};
use crate::graph::{OrientedDigraph, UndirectedGraph};
use crate::mwdp::{ArcData, Matrix2, MwdpInstance};
use crate::polymatrix::{EdgeGame, PolymatrixGame};
use crate::rational::{int, Q};
use crate::threshold::{Hypergraph3, PlayerType, ThresholdGame, TwoTypeThreshold};

/// `[[m11, m12], [m21, m22]]`.
pub type MatrixFile = [[Q; 2]; 2];

fn matrix_in(m: &MatrixFile) -> Matrix2 {
    Matrix2::new(m[0][0].0, m[0][1].0, m[1][0].0, m[1][1].0)
}

fn matrix_out(m: &Matrix2) -> MatrixFile {
    let r = m.rows();
    [[Q(r[0][0]), Q(r[0][1])], [Q(r[1][0]), Q(r[1][1])]]
}

/// Deserializes `text`, reporting the JSON path on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse { path, message: e.into_inner().to_string() }
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization cannot fail");
    s.push('\n');
    s
}

/// Turns a validation failure of a well-formed file into a parse error.
/// Validation messages start with the offending field (`"arcs[3]: ..."`).
fn semantic(e: Error) -> Error {
    match e {
        Error::InvalidInput(msg) => match msg.split_once(": ") {
            Some((path, rest)) if !path.contains(' ') => {
                Error::Parse { path: path.to_string(), message: rest.to_string() }
            }
            _ => Error::Parse { path: ".".into(), message: msg },
        },
        Error::DimensionMismatch { expected, got } => {
            Error::Parse { path: ".".into(), message: format!("expected {expected} entries, got {got}") }
        }
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcFile {
    pub tail: usize,
    pub head: usize,
    pub c: Q,
    pub m: MatrixFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub arcs: Vec<ArcFile>,
}

impl InstanceFile {
    pub fn to_instance(&self) -> Result<MwdpInstance> {
        let arcs = self.arcs.iter().map(|a| (a.tail, a.head, a.c.0, matrix_in(&a.m))).collect();
        MwdpInstance::from_arcs(self.n, arcs).map_err(semantic)
    }

    pub fn from_instance(inst: &MwdpInstance) -> Self {
        let arcs = inst
            .arcs()
            .map(|(tail, head, &ArcData { c, m })| ArcFile { tail, head, c: Q(c), m: matrix_out(&m) })
            .collect();
        InstanceFile { n: inst.n(), arcs }
    }
}

pub fn parse_instance(text: &str) -> Result<MwdpInstance> {
    parse_json::<InstanceFile>(text)?.to_instance()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeGameFile {
    pub u: usize,
    pub v: usize,
    pub pi_uv: MatrixFile,
    pub pi_vu: MatrixFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub n: usize,
    pub edges: Vec<EdgeGameFile>,
}

impl GameFile {
    pub fn to_game(&self) -> Result<PolymatrixGame> {
        let edges =
            self.edges.iter().map(|e| (e.u, e.v, EdgeGame::new(matrix_in(&e.pi_uv), matrix_in(&e.pi_vu)))).collect();
        PolymatrixGame::from_edges(self.n, edges).map_err(semantic)
    }

    pub fn from_game(g: &PolymatrixGame) -> Self {
        let edges = g
            .graph()
            .edges()
            .iter()
            .zip(g.games())
            .map(|(&(u, v), eg)| EdgeGameFile { u, v, pi_uv: matrix_out(&eg.pi_uv), pi_vu: matrix_out(&eg.pi_vu) })
            .collect();
        GameFile { n: g.n(), edges }
    }
}

pub fn parse_game(text: &str) -> Result<PolymatrixGame> {
    parse_json::<GameFile>(text)?.to_game()
}

/// Threshold game file: either per-player `gamma`, or the two-type
/// shorthand `types` + `gamma_A` + `gamma_B` (`n` then defaults to the
/// length of `types`).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub types: Option<String>,
    #[serde(default, rename = "gamma_A", skip_serializing_if = "Option::is_none")]
    pub gamma_a: Option<Q>,
    #[serde(default, rename = "gamma_B", skip_serializing_if = "Option::is_none")]
    pub gamma_b: Option<Q>,
}

/// A parsed threshold game in whichever form the file used.
#[derive(Debug, Clone, PartialEq)]
pub enum ThresholdInput {
    General(ThresholdGame),
    TwoType(TwoTypeThreshold),
}

impl ThresholdInput {
    pub fn game(&self) -> ThresholdGame {
        match self {
            ThresholdInput::General(g) => g.clone(),
            ThresholdInput::TwoType(t) => t.to_threshold(),
        }
    }
}

fn missing(path: &str, message: &str) -> Error {
    Error::Parse { path: path.into(), message: message.into() }
}

impl ThresholdFile {
    pub fn to_input(&self) -> Result<ThresholdInput> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        match (&self.gamma, &self.types) {
            (Some(_), Some(_)) => Err(missing("types", "give either `gamma` or `types`, not both")),
            (None, None) => Err(missing("gamma", "missing `gamma` (or the `types` shorthand)")),
            (Some(gamma), None) => {
                let n = self.n.ok_or_else(|| missing("n", "missing field `n`"))?;
                if gamma.len() != n {
                    return Err(missing("gamma", &format!("expected {n} entries, got {}", gamma.len())));
                }
                let graph = UndirectedGraph::new(n, pairs).map_err(semantic)?;
                ThresholdGame::new(graph, gamma.iter().map(|q| q.0).collect())
                    .map(ThresholdInput::General)
                    .map_err(semantic)
            }
            (None, Some(types)) => {
                let types = types
                    .chars()
                    .enumerate()
                    .map(|(i, ch)| match ch {
                        'A' | 'a' => Ok(PlayerType::A),
                        'B' | 'b' => Ok(PlayerType::B),
                        _ => Err(missing("types", &format!("character {i} is {ch:?}, expected A or B"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let n = self.n.unwrap_or(types.len());
                if types.len() != n {
                    return Err(missing("types", &format!("expected {n} letters, got {}", types.len())));
                }
                let ga = self.gamma_a.ok_or_else(|| missing("gamma_A", "missing field `gamma_A`"))?;
                let gb = self.gamma_b.ok_or_else(|| missing("gamma_B", "missing field `gamma_B`"))?;
                let graph = UndirectedGraph::new(n, pairs).map_err(semantic)?;
                TwoTypeThreshold::new(graph, types, ga.0, gb.0).map(ThresholdInput::TwoType).map_err(semantic)
            }
        }
    }

    pub fn from_two_type(t: &TwoTypeThreshold) -> Self {
        ThresholdFile {
            n: Some(t.n()),
            edges: t.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
            types: Some(t.types().iter().map(|ty| if *ty == PlayerType::A { 'A' } else { 'B' }).collect()),
            gamma_a: Some(Q(t.gamma_a())),
            gamma_b: Some(Q(t.gamma_b())),
            gamma: None,
        }
    }

    pub fn from_game(g: &ThresholdGame) -> Self {
        ThresholdFile {
            n: Some(g.n()),
            edges: g.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
            gamma: Some(g.gamma().iter().copied().map(Q).collect()),
            ..Default::default()
        }
    }
}

pub fn parse_threshold(text: &str) -> Result<ThresholdInput> {
    parse_json::<ThresholdFile>(text)?.to_input()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphFile {
    pub n: usize,
    pub hyperedges: Vec<[usize; 3]>,
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3> {
    let f: HypergraphFile = parse_json(text)?;
    Hypergraph3::new(f.n, f.hyperedges).map_err(semantic)
}

/// Plain (di)graph plus the optional parameters some encodings need.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Q>,
}

fn pairs(list: &[[usize; 2]]) -> Vec<(usize, usize)> {
    list.iter().map(|e| (e[0], e[1])).collect()
}

impl GraphFile {
    /// The `edges` list; an `arcs` list is read with orientation dropped.
    pub fn undirected(&self) -> Result<UndirectedGraph> {
        match (&self.edges, &self.arcs) {
            (Some(e), _) => UndirectedGraph::new(self.n, pairs(e)).map_err(semantic),
            (None, Some(a)) => OrientedDigraph::new(self.n, pairs(a)).map(|d| d.underlying()).map_err(semantic),
            (None, None) => Err(missing("edges", "missing field `edges`")),
        }
    }

    pub fn directed(&self) -> Result<OrientedDigraph> {
        let a = self.arcs.as_ref().ok_or_else(|| missing("arcs", "missing field `arcs`"))?;
        OrientedDigraph::new(self.n, pairs(a)).map_err(semantic)
    }

    /// `(pairs, directed)`: `arcs` when present, else `edges`.
    pub fn pairs(&self) -> Result<(Vec<(usize, usize)>, bool)> {
        match (&self.arcs, &self.edges) {
            (Some(a), _) => Ok((pairs(a), true)),
            (None, Some(e)) => Ok((pairs(e), false)),
            (None, None) => Err(missing("arcs", "missing field `arcs` (or `edges`)")),
        }
    }

    pub fn terminals(&self) -> Result<(usize, usize)> {
        let s = self.s.ok_or_else(|| missing("s", "missing field `s`"))?;
        let t = self.t.ok_or_else(|| missing("t", "missing field `t`"))?;
        Ok((s, t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredEdgeFile {
    pub u: usize,
    pub v: usize,
    pub color: u8,
    #[serde(default = "unit")]
    pub w: Q,
}

fn unit() -> Q {
    Q(int(1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredGraphFile {
    pub n: usize,
    pub edges: Vec<ColoredEdgeFile>,
}

impl ColoredGraphFile {
    pub fn to_graph(&self) -> Result<ColoredGraph> {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let color = match e.color {
                    1 => Color::One,
                    2 => Color::Two,
                    c => return Err(missing(&format!("edges[{i}].color"), &format!("expected 1 or 2, got {c}"))),
                };
                Ok(ColoredEdge { u: e.u, v: e.v, color, w: e.w.0 })
            })
            .collect::<Result<Vec<_>>>()?;
        ColoredGraph::new(self.n, edges).map_err(semantic)
    }
}

pub fn parse_colored_graph(text: &str) -> Result<ColoredGraph> {
    parse_json::<ColoredGraphFile>(text)?.to_graph()
}
