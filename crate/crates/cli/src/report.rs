use std::fmt::Write as _;

use coordcut::formats::to_json;
use coordcut::rational::{format_rational, Q};
use coordcut::{Action, Partition, Rational, Side, StrategyProfile};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::cli::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionOut {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
}

impl From<&Partition> for PartitionOut {
    fn from(p: &Partition) -> Self {
        PartitionOut { x1: p.x1(), x2: p.x2() }
    }
}

/// A profile as a string of `1` / `2`, one character per player.
pub fn profile_string(s: &StrategyProfile) -> String {
    s.actions().iter().map(|a| if *a == Action::One { '1' } else { '2' }).collect()
}

/// The graph drawn by `--format dot`.
#[derive(Debug, Clone)]
pub struct Picture {
    pub directed: bool,
    pub n: usize,
    pub edges: Vec<(usize, usize, String)>,
    /// Side of each vertex, when there is a solution to show.
    pub sides: Option<Vec<Side>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub method: String,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Q>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<String>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(flatten)]
    pub details: Map<String, Value>,
    /// Extra human-readable lines for `--format text`.
    #[serde(skip)]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub picture: Option<Picture>,
}

impl Report {
    pub fn new(command: &'static str, method: impl ToString, exact: bool, seed: u64) -> Self {
        Report {
            command,
            method: method.to_string(),
            exact,
            value: None,
            partition: None,
            profile: None,
            seed,
            warnings: Vec::new(),
            details: Map::new(),
            notes: Vec::new(),
            picture: None,
        }
    }

    pub fn value(mut self, v: Rational) -> Self {
        self.value = Some(Q(v));
        self
    }

    pub fn partition(mut self, p: &Partition) -> Self {
        self.partition = Some(p.into());
        self
    }

    pub fn profile(mut self, s: &StrategyProfile) -> Self {
        self.profile = Some(profile_string(s));
        self
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("report values serialize"));
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn picture(mut self, p: Picture) -> Self {
        self.picture = Some(p);
        self
    }

    /// Renders the report; `None` when the format has nothing to show.
    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Json => Some(to_json(self)),
            Format::Text => Some(self.text()),
            Format::Dot => self.picture.as_ref().map(dot),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "method: {}", self.method);
        let _ = writeln!(out, "exact: {}", self.exact);
        if let Some(v) = &self.value {
            let _ = writeln!(out, "value: {v}");
        }
        if let Some(p) = &self.partition {
            let _ = writeln!(out, "X1: {}", join(&p.x1));
            let _ = writeln!(out, "X2: {}", join(&p.x2));
        }
        if let Some(p) = &self.profile {
            let _ = writeln!(out, "profile: {p}");
        }
        let _ = writeln!(out, "seed: {}", self.seed);
        for (k, v) in &self.details {
            let _ = writeln!(out, "{k}: {}", compact(v));
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for line in &self.notes {
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn matrix_label(c: &Rational, m: &coordcut::Matrix2) -> String {
    let r = m.rows();
    let f = format_rational;
    format!("c={} [[{},{}],[{},{}]]", f(c), f(&r[0][0]), f(&r[0][1]), f(&r[1][0]), f(&r[1][1]))
}

fn dot(p: &Picture) -> String {
    let (kind, arrow) = if p.directed { ("digraph", "->") } else { ("graph", "--") };
    let mut out = String::new();
    let _ = writeln!(out, "{kind} coordcut {{");
    let _ = writeln!(out, "  node [shape=circle, style=filled];");
    for v in 0..p.n {
        match &p.sides {
            Some(sides) => {
                let (color, side) = match sides[v] {
                    Side::X1 => ("lightblue", "X1"),
                    Side::X2 => ("salmon", "X2"),
                };
                let _ = writeln!(out, "  {v} [label=\"{v}\\n{side}\", fillcolor={color}];");
            }
            None => {
                let _ = writeln!(out, "  {v} [fillcolor=white];");
            }
        }
    }
    for (u, v, label) in &p.edges {
        if label.is_empty() {
            let _ = writeln!(out, "  {u} {arrow} {v};");
        } else {
            let _ = writeln!(out, "  {u} {arrow} {v} [label=\"{label}\"];");
        }
    }
    out.push_str("}\n");
    out
}
