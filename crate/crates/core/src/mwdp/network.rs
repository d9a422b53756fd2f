//! Min-cut solver for families where every matrix has
//! `m11 + m22 >= m12 + m21`.
//!
//! The instance becomes an undirected graph `H` on `V(D) + {s, t}`: each arc
//! contributes a non-negative weight to its own edge and (possibly negative)
//! weights to the four source/sink edges of its endpoints. Shifting every
//! source/sink edge by the minimum such weight `theta` makes `H`
//! non-negative, and for every `s`-`t` cut the shifted cut weight equals
//! `-w^P(D) - n * theta`. A minimum cut therefore maximises `w^P(D)`.

use crate::error::{Error, Result};
use crate::flow::undirected_min_st_cut;
use crate::graph::UndirectedGraph;
use crate::mwdp::solvers::{Method, SolveOutcome};
use crate::mwdp::MwdpInstance;
use crate::partition::{Partition, Side};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct CutNetwork {
    /// Graph on `n + 2` vertices; `n` is the source, `n + 1` the sink.
    /// Edge order: one edge per arc (arc order), then `s-u` for each `u`,
    /// then `t-u` for each `u`. Weights are the shifted ones.
    pub graph: UndirectedGraph,
    /// Smallest source/sink edge weight before shifting.
    pub theta: Rational,
    /// Weights before the shift, same order as the graph's edges.
    pub unshifted: Vec<Rational>,
}

impl CutNetwork {
    pub fn vertex_count(&self) -> usize {
        self.graph.n() - 2
    }

    pub fn source(&self) -> usize {
        self.graph.n() - 2
    }

    pub fn sink(&self) -> usize {
        self.graph.n() - 1
    }

    /// Extends a partition of `V(D)` to the `s`-`t` cut with `s` in `X1`, `t` in `X2`.
    pub fn cut_for(&self, p: &Partition) -> Partition {
        let mut sides = p.sides().to_vec();
        sides.push(Side::X1);
        sides.push(Side::X2);
        Partition::new(sides)
    }

    /// Shifted weight of the edges crossing `cut` (a partition of all `n + 2` vertices).
    pub fn cut_weight(&self, cut: &Partition) -> Rational {
        self.graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| cut.side(u) != cut.side(v))
            .map(|(e, _)| self.graph.weight(e))
            .sum()
    }
}

/// Builds `H` and `theta`. Fails with `NotPropertyA` on the first arc whose
/// own edge weight would be negative.
pub fn build_cut_network(inst: &MwdpInstance) -> Result<CutNetwork> {
    let n = inst.n();
    let s = n;
    let t = n + 1;
    let half = Rational::new(1, 2);
    let mut arc_weights = Vec::with_capacity(inst.digraph().arc_count());
    let mut source_w = vec![int(0); n];
    let mut sink_w = vec![int(0); n];
    for (i, (u, v, d)) in inst.arcs().enumerate() {
        let (c, m) = (d.c, d.m);
        if !m.property_a() {
            return Err(Error::NotPropertyA { arc: i });
        }
        arc_weights.push(c * (m.m11 + m.m22 - m.m12 - m.m21) * half);
        source_w[u] += c * (-m.m22) * half;
        source_w[v] += c * (-m.m22) * half;
        sink_w[u] += c * (m.m21 - m.m11 - m.m12) * half;
        sink_w[v] += c * (m.m12 - m.m11 - m.m21) * half;
    }
    let theta = source_w.iter().chain(&sink_w).copied().min().unwrap_or_else(|| int(0));

    let mut edges: Vec<(usize, usize)> = inst.digraph().arcs().to_vec();
    edges.extend((0..n).map(|u| (s, u)));
    edges.extend((0..n).map(|u| (t, u)));
    let mut unshifted = arc_weights.clone();
    unshifted.extend(source_w.iter().copied());
    unshifted.extend(sink_w.iter().copied());
    let mut shifted = arc_weights;
    shifted.extend(source_w.iter().map(|w| w - theta));
    shifted.extend(sink_w.iter().map(|w| w - theta));

    let graph = UndirectedGraph::with_weights(n + 2, edges, shifted)?;
    Ok(CutNetwork { graph, theta, unshifted })
}

/// A min-cut solution with the values that certify it.
#[derive(Debug, Clone, PartialEq)]
pub struct MinCutSolution {
    pub outcome: SolveOutcome,
    /// Shifted weight of the minimum cut in `H`.
    pub cut_value: Rational,
    pub theta: Rational,
}

/// Solves an all-(a) instance by a minimum `s`-`t` cut and checks
/// `cut = -value - n * theta` on the result.
pub fn solve_mincut_certified(inst: &MwdpInstance) -> Result<MinCutSolution> {
    let net = build_cut_network(inst)?;
    let n = inst.n();
    let mc = undirected_min_st_cut(&net.graph, net.source(), net.sink())?;
    let partition = Partition::new(mc.cut.sides()[..n].to_vec());
    let outcome = SolveOutcome::evaluate(inst, partition, Method::MinCut)?;
    let expected = -outcome.value - Rational::from_integer(n as i128) * net.theta;
    assert_eq!(mc.value, expected, "cut identity violated");
    Ok(MinCutSolution { outcome, cut_value: mc.value, theta: net.theta })
}

pub fn solve_mincut(inst: &MwdpInstance) -> Result<SolveOutcome> {
    solve_mincut_certified(inst).map(|s| s.outcome)
}
