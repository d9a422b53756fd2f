//! Classic graph problems written as MWDP instances, with decoders that map
//! a partition back to a solution of the source problem.
//!
//! Every encoder uses arc weight 1 (or the edge weight, for the weighted
//! colour-difference problem) and folds magnitudes into the matrices.
//! Decoders recompute the source objective from the decoded solution rather
//! than trusting the MWDP value, so a heuristic partition still decodes to a
//! feasible (if not optimal) answer.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{OrientedDigraph, UndirectedGraph};
use crate::mwdp::{solve, Matrix2, Method, MwdpInstance, SolveOutcome, SolvePolicy};
use crate::partition::{Partition, Side};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProblemKind {
    MaxCut,
    DirectedMaxCut,
    EulerianCloseness,
    DirectedMinStCut,
    MinStCut,
    TwoColorPartition,
    MaxAverageDegree,
    TwoColorDifference,
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl ProblemKind {
    /// Whether the matrix family of the encoding is polynomial (every matrix
    /// satisfies `m11 + m22 ≥ m12 + m21`) or hard.
    pub fn claimed_tractable(self) -> bool {
        !matches!(self, ProblemKind::MaxCut | ProblemKind::DirectedMaxCut | ProblemKind::TwoColorDifference)
    }
}

/// Edge colour of a 2-edge-coloured graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
    pub w: Rational,
}

/// A simple graph whose edges carry a colour and a non-negative weight.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<ColoredEdge>,
}

impl ColoredGraph {
    pub fn new(n: usize, edges: Vec<ColoredEdge>) -> Result<Self> {
        UndirectedGraph::new(n, edges.iter().map(|e| (e.u, e.v)).collect())?;
        if let Some((i, e)) = edges.iter().enumerate().find(|(_, e)| e.w < int(0)) {
            return Err(Error::invalid(format!("edges[{i}]: negative weight {}", e.w)));
        }
        Ok(ColoredGraph { n, edges })
    }

    /// Unit weights.
    pub fn unweighted(n: usize, edges: Vec<(usize, usize, Color)>) -> Result<Self> {
        Self::new(n, edges.into_iter().map(|(u, v, color)| ColoredEdge { u, v, color, w: int(1) }).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Source {
    Graph(UndirectedGraph),
    Digraph(OrientedDigraph),
    StCut { n: usize, arcs: Vec<(usize, usize)>, directed: bool, s: usize, t: usize },
    Colored(ColoredGraph),
    AverageDegree { graph: UndirectedGraph, k: Rational },
}

/// An MWDP instance plus what is needed to decode its solutions.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedProblem {
    pub instance: MwdpInstance,
    pub kind: ProblemKind,
    source: Source,
}

/// A solution of the source problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub kind: ProblemKind,
    /// Objective of the source problem at the decoded solution: cut size,
    /// arc count, closeness, minimum cut, coloured-edge count, average degree
    /// of `set` (0 when there is none) or `w2(X) − w1(X)`.
    pub value: Rational,
    /// Partition of the source vertices.
    pub partition: Partition,
    /// The distinguished vertex set where the problem has one: the source
    /// side of an s-t cut, `W` for average degree (`None` when no set beats
    /// `k`), `X` for the colour difference.
    pub set: Option<Vec<usize>>,
    pub method: Method,
    pub exact: bool,
}

fn mat(x: [[i128; 2]; 2]) -> Matrix2 {
    Matrix2::from_ints(x)
}

/// Max cut: every edge carries `[[0,1],[1,0]]`.
pub fn encode_max_cut(g: &UndirectedGraph) -> Result<EncodedProblem> {
    let arcs = g.edges().iter().map(|&(u, v)| (u, v, int(1), mat([[0, 1], [1, 0]]))).collect();
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(g.n(), arcs)?,
        kind: ProblemKind::MaxCut,
        source: Source::Graph(g.clone()),
    })
}

/// Directed max cut: every arc carries `[[0,1],[0,0]]`.
pub fn encode_directed_max_cut(d: &OrientedDigraph) -> Result<EncodedProblem> {
    let arcs = d.arcs().iter().map(|&(u, v)| (u, v, int(1), mat([[0, 1], [0, 0]]))).collect();
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(d.n(), arcs)?,
        kind: ProblemKind::DirectedMaxCut,
        source: Source::Digraph(d.clone()),
    })
}

/// Closeness to Eulerian: `[[1,2],[0,1]]` per arc (the non-negative shift
/// of `[[0,1],[-1,0]]`); the decoder removes the shift of `|A|`.
pub fn encode_eulerian_closeness(d: &OrientedDigraph) -> Result<EncodedProblem> {
    let arcs = d.arcs().iter().map(|&(u, v)| (u, v, int(1), mat([[1, 2], [0, 1]]))).collect();
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(d.n(), arcs)?,
        kind: ProblemKind::EulerianCloseness,
        source: Source::Digraph(d.clone()),
    })
}

/// Minimum s-t cut. Arcs (or edges, with `directed = false`) carry
/// `[[1,0],[1,1]]` (resp. `[[1,0],[0,1]]`); new vertices `s'` and `t'` get arcs
/// `s' → s` with `[[|E|,0],[0,0]]` and `t → t'` with `[[0,0],[0,|E|]]`. The
/// optimum is `3|E|` minus the minimum cut.
pub fn encode_min_st_cut(
    n: usize,
    arcs: &[(usize, usize)],
    directed: bool,
    s: usize,
    t: usize,
) -> Result<EncodedProblem> {
    if s >= n || t >= n || s == t {
        return Err(Error::invalid(format!("need distinct terminals in 0..{n} (got s = {s}, t = {t})")));
    }
    // validate the source graph on its own first
    if directed {
        OrientedDigraph::new(n, arcs.to_vec())?;
    } else {
        UndirectedGraph::new(n, arcs.to_vec())?;
    }
    let m = arcs.len() as i128;
    let inner = if directed { mat([[1, 0], [1, 1]]) } else { mat([[1, 0], [0, 1]]) };
    let mut list: Vec<_> = arcs.iter().map(|&(u, v)| (u, v, int(1), inner)).collect();
    let (s_prime, t_prime) = (n, n + 1);
    list.push((s_prime, s, int(1), mat([[m, 0], [0, 0]])));
    list.push((t, t_prime, int(1), mat([[0, 0], [0, m]])));
    let kind = if directed { ProblemKind::DirectedMinStCut } else { ProblemKind::MinStCut };
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(n + 2, list)?,
        kind,
        source: Source::StCut { n, arcs: arcs.to_vec(), directed, s, t },
    })
}

/// 2-colour partition: colour-one edges carry `[[1,0],[0,0]]`, colour-two
/// edges `[[0,0],[0,1]]`.
pub fn encode_two_color_partition(g: &ColoredGraph) -> Result<EncodedProblem> {
    let arcs = g
        .edges
        .iter()
        .map(|e| {
            let m = match e.color {
                Color::One => mat([[1, 0], [0, 0]]),
                Color::Two => mat([[0, 0], [0, 1]]),
            };
            (e.u, e.v, int(1), m)
        })
        .collect();
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(g.n, arcs)?,
        kind: ProblemKind::TwoColorPartition,
        source: Source::Colored(g.clone()),
    })
}

/// Max average degree (decision): vertex `u` gets a partner `n + u` and an
/// arc `u → n+u` with `[[k,0],[0,0]]`; graph edges carry `[[0,0],[0,2]]`.
/// Some non-empty `W` has average degree `> k` iff the optimum exceeds `k·n`,
/// and then `W = V ∩ X2` works.
pub fn encode_max_avg_degree_decision(g: &UndirectedGraph, k: Rational) -> Result<EncodedProblem> {
    if k < int(0) {
        return Err(Error::invalid(format!("k = {k} must be non-negative")));
    }
    let n = g.n();
    let mut arcs: Vec<_> = g.edges().iter().map(|&(u, v)| (u, v, int(1), mat([[0, 0], [0, 2]]))).collect();
    arcs.extend((0..n).map(|u| (u, n + u, int(1), Matrix2::new(k, int(0), int(0), int(0)))));
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(2 * n, arcs)?,
        kind: ProblemKind::MaxAverageDegree,
        source: Source::AverageDegree { graph: g.clone(), k },
    })
}

/// 2-colour difference: colour-two edges carry `[[1,0],[0,0]]`, colour-one
/// edges `[[-1,0],[0,0]]`, each with the edge weight as arc weight, and
/// `X = X1`. Zero-weight edges do not affect the objective and are skipped.
pub fn encode_two_color_difference(g: &ColoredGraph) -> Result<EncodedProblem> {
    let arcs = g
        .edges
        .iter()
        .filter(|e| !e.w.is_zero())
        .map(|e| {
            let m = match e.color {
                Color::Two => mat([[1, 0], [0, 0]]),
                Color::One => mat([[-1, 0], [0, 0]]),
            };
            (e.u, e.v, e.w, m)
        })
        .collect();
    Ok(EncodedProblem {
        instance: MwdpInstance::from_arcs(g.n, arcs)?,
        kind: ProblemKind::TwoColorDifference,
        source: Source::Colored(g.clone()),
    })
}

fn count(n: usize) -> Rational {
    int(n as i128)
}

fn induced_edges(g: &UndirectedGraph, set: &[usize]) -> usize {
    let mut keep = vec![false; g.n()];
    set.iter().for_each(|&v| keep[v] = true);
    g.induced_edges(&keep).len()
}

impl EncodedProblem {
    /// Maps an MWDP solution back to the source problem.
    pub fn decode(&self, out: &SolveOutcome) -> Result<Decoded> {
        if out.partition.len() != self.instance.n() {
            return Err(Error::DimensionMismatch { expected: self.instance.n(), got: out.partition.len() });
        }
        let p = &out.partition;
        let restrict = |n: usize| Partition::new(p.sides()[..n].to_vec());
        let (value, partition, set) = match &self.source {
            Source::Graph(g) => {
                let cut = g.edges().iter().filter(|&&(u, v)| p.side(u) != p.side(v)).count();
                (count(cut), p.clone(), None)
            }
            Source::Digraph(d) => {
                let forward = d.arcs().iter().filter(|&&(u, v)| p.side(u) == Side::X1 && p.side(v) == Side::X2).count();
                let value = match self.kind {
                    ProblemKind::EulerianCloseness => {
                        let backward =
                            d.arcs().iter().filter(|&&(u, v)| p.side(u) == Side::X2 && p.side(v) == Side::X1).count();
                        count(forward) - count(backward)
                    }
                    _ => count(forward),
                };
                (value, p.clone(), None)
            }
            Source::StCut { n, arcs, directed, s, t } => {
                let mut q = restrict(*n);
                if q.side(*s) != Side::X1 || q.side(*t) != Side::X2 {
                    // only possible when every s-t partition cuts all |E|
                    // arcs; any of them is optimal
                    q = Partition::from_x1(*n, [*s]);
                }
                let crossing = arcs
                    .iter()
                    .filter(|&&(u, v)| {
                        let (a, b) = (q.side(u), q.side(v));
                        (a == Side::X1 && b == Side::X2) || (!directed && a == Side::X2 && b == Side::X1)
                    })
                    .count();
                let set = q.x1();
                (count(crossing), q, Some(set))
            }
            Source::Colored(g) => match self.kind {
                ProblemKind::TwoColorPartition => {
                    let inside = g
                        .edges
                        .iter()
                        .filter(|e| match e.color {
                            Color::One => p.side(e.u) == Side::X1 && p.side(e.v) == Side::X1,
                            Color::Two => p.side(e.u) == Side::X2 && p.side(e.v) == Side::X2,
                        })
                        .count();
                    (count(inside), p.clone(), None)
                }
                _ => {
                    let value = g
                        .edges
                        .iter()
                        .filter(|e| p.side(e.u) == Side::X1 && p.side(e.v) == Side::X1)
                        .map(|e| if e.color == Color::Two { e.w } else { -e.w })
                        .sum();
                    (value, p.clone(), Some(p.x1()))
                }
            },
            Source::AverageDegree { graph, k } => {
                let q = restrict(graph.n());
                let w = q.x2();
                let e = induced_edges(graph, &w);
                if !w.is_empty() && int(2) * count(e) > *k * count(w.len()) {
                    (int(2) * count(e) / count(w.len()), q, Some(w))
                } else {
                    (Rational::zero(), q, None)
                }
            }
        };
        Ok(Decoded { kind: self.kind, value, partition, set, method: out.method, exact: out.exact })
    }

    /// Solves the instance with the dispatcher and decodes the result.
    pub fn solve(&self, policy: &SolvePolicy) -> Result<Decoded> {
        self.decode(&solve(&self.instance, policy)?)
    }
}

/// A densest subgraph: `e(W)/|W|` is maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensestSubgraph {
    pub set: Vec<usize>,
    pub density: Rational,
    /// Number of average-degree decision queries issued.
    pub queries: usize,
}

/// Maximum-density subgraph by binary search on the average degree `k` over
/// `[0, n − 1]` with the decision encoding.
///
/// Two distinct subgraph densities differ by at least `1/(n(n−1))`, so once
/// the search interval is narrower than that, the best set found so far is
/// optimal. An edgeless graph has density 0, reported with `W = {0}`.
pub fn max_density_subgraph(g: &UndirectedGraph, policy: &SolvePolicy) -> Result<DensestSubgraph> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("max density needs at least one vertex"));
    }
    if g.edge_count() == 0 {
        return Ok(DensestSubgraph { set: vec![0], density: Rational::zero(), queries: 0 });
    }
    let avg = |w: &[usize]| int(2) * count(induced_edges(g, w)) / count(w.len());
    // any single edge has average degree 1
    let (u, v) = g.edges()[0];
    let mut best = vec![u.min(v), u.max(v)];
    let mut lo = avg(&best);
    let mut hi = count(n - 1);
    let width = Rational::new(1, (n * (n - 1)) as i128);
    let mut queries = 0;
    while hi - lo >= width {
        let mid = (lo + hi) / int(2);
        queries += 1;
        let decoded = encode_max_avg_degree_decision(g, mid)?.solve(policy)?;
        match decoded.set {
            Some(w) if decoded.exact || avg(&w) > mid => {
                lo = avg(&w);
                best = w;
            }
            _ => hi = mid,
        }
    }
    let density = avg(&best) / int(2);
    Ok(DensestSubgraph { set: best, density, queries })
}
