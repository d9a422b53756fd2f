//! Simple undirected graphs and oriented digraphs.

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Simple undirected graph with optional rational edge weights.
///
/// Edges keep the orientation they were given in (`(u, v)` stays `(u, v)`),
/// which the game types use to decide which endpoint is the row player.
#[derive(Debug, Clone, PartialEq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<Rational>>,
    // (neighbor, edge index), in edge order
    adj: Vec<Vec<(usize, usize)>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::build(n, edges, None)
    }

    pub fn with_weights(n: usize, edges: Vec<(usize, usize)>, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::DimensionMismatch { expected: edges.len(), got: weights.len() });
        }
        Self::build(n, edges, Some(weights))
    }

    /// Complete graph on `0..n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::build(n, edges, None).expect("complete graph is simple")
    }

    fn build(n: usize, edges: Vec<(usize, usize)>, weights: Option<Vec<Rational>>) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edges[{i}]: ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("edges[{i}]: self-loop at {u}")));
            }
        }
        let mut keys: Vec<(usize, usize, usize)> =
            edges.iter().enumerate().map(|(i, &(u, v))| (u.min(v), u.max(v), i)).collect();
        keys.sort_unstable();
        if let Some(w) = keys.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            return Err(Error::invalid(format!(
                "edges[{}]: parallel edge {{{}, {}}} (also edges[{}])",
                w[1].2, w[1].0, w[1].1, w[0].2
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        Ok(UndirectedGraph { n, edges, weights, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weight of edge `e`; unweighted graphs report 1.
    pub fn weight(&self, e: usize) -> Rational {
        self.weights.as_ref().map_or_else(|| int(1), |w| w[e])
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.weights.as_deref()
    }

    /// `(neighbor, edge index)` pairs of `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Subgraph induced by the vertices with `keep[v]`; vertices keep their indices.
    pub fn induced_edges(&self, keep: &[bool]) -> Vec<(usize, usize)> {
        self.edges.iter().copied().filter(|&(u, v)| keep[u] && keep[v]).collect()
    }
}

/// Directed graph without self-loops, parallel arcs or 2-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    // arc indices incident to each vertex (as tail or head)
    incident: Vec<Vec<usize>>,
}

impl OrientedDigraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("arcs[{i}]: ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("arcs[{i}]: self-loop at {u}")));
            }
        }
        let mut keys: Vec<(usize, usize, usize, bool)> =
            arcs.iter().enumerate().map(|(i, &(u, v))| (u.min(v), u.max(v), i, u < v)).collect();
        keys.sort_unstable();
        if let Some(w) = keys.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            let what = if w[0].3 == w[1].3 { "parallel arc" } else { "2-cycle" };
            return Err(Error::invalid(format!(
                "arcs[{}]: {what} between {} and {} (also arcs[{}])",
                w[1].2, w[1].0, w[1].1, w[0].2
            )));
        }
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        Ok(OrientedDigraph { n, arcs, incident })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.incident[v].iter().filter(|&&a| self.arcs[a].0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.incident[v].iter().filter(|&&a| self.arcs[a].1 == v).count()
    }

    /// The graph with orientations dropped.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.arcs.clone()).expect("oriented digraph has a simple underlying graph")
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![root];
        comp[root] = id;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
