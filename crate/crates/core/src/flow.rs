//! Exact maximum flow / minimum cut over rational capacities.
//!
//! Capacities are scaled by the lcm of their denominators and the flow runs on
//! `i128`. Infinite capacities become a sentinel equal to the sum of all finite
//! capacities plus one, so a minimum cut crosses a sentinel arc only when no
//! finite cut exists.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::partition::{Partition, Side};
use crate::rational::{common_denominator, is_nonnegative, scaled, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capacity {
    Finite(Rational),
    Infinite,
}

impl From<Rational> for Capacity {
    fn from(r: Rational) -> Self {
        Capacity::Finite(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowArc {
    pub tail: usize,
    pub head: usize,
    pub capacity: Capacity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    n: usize,
    source: usize,
    sink: usize,
    arcs: Vec<FlowArc>,
}

impl FlowNetwork {
    pub fn new(n: usize, source: usize, sink: usize, arcs: Vec<FlowArc>) -> Result<Self> {
        if source >= n || sink >= n {
            return Err(Error::invalid(format!("source {source} / sink {sink} out of range for n = {n}")));
        }
        if source == sink {
            return Err(Error::invalid("source and sink coincide"));
        }
        for (i, a) in arcs.iter().enumerate() {
            if a.tail >= n || a.head >= n {
                return Err(Error::invalid(format!("arcs[{i}]: ({}, {}) out of range", a.tail, a.head)));
            }
            if a.tail == a.head {
                return Err(Error::invalid(format!("arcs[{i}]: self-loop at {}", a.tail)));
            }
            if let Capacity::Finite(c) = a.capacity {
                if !is_nonnegative(&c) {
                    return Err(Error::invalid(format!("arcs[{i}]: negative capacity {c}")));
                }
            }
        }
        let mut keys: Vec<(usize, usize, usize)> = arcs.iter().enumerate().map(|(i, a)| (a.tail, a.head, i)).collect();
        keys.sort_unstable();
        if let Some(w) = keys.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            return Err(Error::invalid(format!("arcs[{}]: parallel arc {} -> {}", w[1].2, w[1].0, w[1].1)));
        }
        Ok(FlowNetwork { n, source, sink, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }

    /// Capacity of the arcs leaving the `X1` side; `None` when an infinite arc crosses.
    pub fn cut_capacity(&self, cut: &Partition) -> Option<Rational> {
        let mut total = Rational::from_integer(0);
        for a in &self.arcs {
            if cut.side(a.tail) == Side::X1 && cut.side(a.head) == Side::X2 {
                match a.capacity {
                    Capacity::Finite(c) => total += c,
                    Capacity::Infinite => return None,
                }
            }
        }
        Some(total)
    }
}

/// A minimum cut together with the max-flow value certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: Rational,
    /// `X1` holds the source side, `X2` the sink side.
    pub cut: Partition,
}

/// Which of the (possibly many) minimum cuts to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutSide {
    /// Largest source side: every vertex that cannot reach the sink in the
    /// final residual network. Lexicographically smallest among minimum cuts.
    #[default]
    MaximalSource,
    /// Smallest source side: the vertices reachable from the source in the
    /// final residual network.
    MinimalSource,
}

/// Maximum flow and a minimum cut.
///
/// The returned cut has the largest possible source side (every vertex that
/// cannot reach the sink in the final residual network), so among all minimum
/// cuts it is the lexicographically smallest partition.
pub fn max_flow_min_cut(net: &FlowNetwork) -> Result<MinCut> {
    max_flow_min_cut_with(net, CutSide::MaximalSource)
}

/// [`max_flow_min_cut`] with an explicit choice of minimum cut.
pub fn max_flow_min_cut_with(net: &FlowNetwork, side: CutSide) -> Result<MinCut> {
    let finite: Vec<Rational> = net
        .arcs
        .iter()
        .filter_map(|a| match a.capacity {
            Capacity::Finite(c) => Some(c),
            Capacity::Infinite => None,
        })
        .collect();
    let scale = common_denominator(finite.iter())?;
    let mut finite_sum: i128 = 0;
    for c in &finite {
        finite_sum = finite_sum.checked_add(scaled(c, scale)?).ok_or(Error::Overflow)?;
    }
    let sentinel = finite_sum.checked_add(1).ok_or(Error::Overflow)?;

    let mut dinic = Dinic::new(net.n);
    for a in &net.arcs {
        let cap = match a.capacity {
            Capacity::Finite(c) => scaled(&c, scale)?,
            Capacity::Infinite => sentinel,
        };
        dinic.add_arc(a.tail, a.head, cap);
    }
    let flow = dinic.max_flow(net.source, net.sink);
    if flow >= sentinel {
        return Err(Error::NoFiniteCut);
    }
    let source_side: Vec<bool> = match side {
        CutSide::MaximalSource => dinic.reaches(net.sink).into_iter().map(|r| !r).collect(),
        CutSide::MinimalSource => dinic.reachable_from(net.source),
    };
    let cut = Partition::new(source_side.iter().map(|&s| if s { Side::X1 } else { Side::X2 }).collect());
    Ok(MinCut { value: Rational::new(flow, scale), cut })
}

/// Minimum `s`-`t` cut of an undirected graph with non-negative weights.
pub fn undirected_min_st_cut(g: &UndirectedGraph, s: usize, t: usize) -> Result<MinCut> {
    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let w = g.weight(e);
        if !is_nonnegative(&w) {
            return Err(Error::invalid(format!("edges[{e}]: negative weight {w}")));
        }
        arcs.push(FlowArc { tail: u, head: v, capacity: Capacity::Finite(w) });
        arcs.push(FlowArc { tail: v, head: u, capacity: Capacity::Finite(w) });
    }
    let net = FlowNetwork::new(g.n(), s, t, arcs)?;
    max_flow_min_cut(&net)
}

struct Dinic {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i128>,
    next: Vec<usize>,
    level: Vec<usize>,
    iter: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            head: vec![NIL; n],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
            level: vec![0; n],
            iter: vec![NIL; n],
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: i128) {
        for (a, b, cc) in [(u, v, c), (v, u, 0)] {
            self.to.push(b);
            self.cap.push(cc);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = NIL);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] == NIL {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
                e = self.next[e];
            }
        }
        self.level[t] != NIL
    }

    // iterative blocking-flow search along level-increasing arcs
    fn augment(&mut self, s: usize, t: usize) -> i128 {
        let mut total = 0i128;
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let f = path.iter().map(|&e| self.cap[e]).min().unwrap_or(0);
                for &e in &path {
                    self.cap[e] -= f;
                    self.cap[e ^ 1] += f;
                }
                total += f;
                // restart from the tail of the first saturated arc
                let k = path.iter().position(|&e| self.cap[e] == 0).unwrap_or(0);
                path.truncate(k);
                u = if k == 0 { s } else { self.to[path[k - 1]] };
                continue;
            }
            let mut advanced = false;
            while self.iter[u] != NIL {
                let e = self.iter[u];
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                    path.push(e);
                    u = v;
                    advanced = true;
                    break;
                }
                self.iter[u] = self.next[e];
            }
            if !advanced {
                if u == s {
                    break;
                }
                self.level[u] = NIL;
                let e = path.pop().expect("non-source vertex has an incoming path arc");
                u = self.to[e ^ 1];
                self.iter[u] = self.next[self.iter[u]];
            }
        }
        total
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut flow = 0i128;
        while self.bfs(s, t) {
            self.iter.clone_from(&self.head);
            flow += self.augment(s, t);
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let mut e = self.head[v];
            while e != NIL {
                let w = self.to[e];
                if !seen[w] && self.cap[e] > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
                e = self.next[e];
            }
        }
        seen
    }

    /// Vertices that can still reach `t` in the residual network.
    fn reaches(&self, t: usize) -> Vec<bool> {
        let n = self.head.len();
        let mut seen = vec![false; n];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            let mut e = self.head[v];
            while e != NIL {
                // e goes v -> w; its reverse w -> v has residual cap[e ^ 1]
                let w = self.to[e];
                if !seen[w] && self.cap[e ^ 1] > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
                e = self.next[e];
            }
        }
        seen
    }
}
