//! Maximum weighted digraph partition: instances, the matrix-family
//! classifier and the solver suite.

mod network;
mod solvers;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::OrientedDigraph;
use crate::partition::{Partition, Side};
use crate::rational::{common_denominator, is_positive, scaled, Rational};

pub use network::{build_cut_network, solve_mincut, solve_mincut_certified, CutNetwork, MinCutSolution};
pub use solvers::{
    solve, solve_exact, solve_local_search, solve_trivial, Method, SolveOutcome, SolvePolicy, TrivialKind,
};

/// 2x2 payoff matrix. Row index is the side of an arc's tail, column index
/// the side of its head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub m11: Rational,
    pub m12: Rational,
    pub m21: Rational,
    pub m22: Rational,
}

impl Matrix2 {
    pub fn new(m11: Rational, m12: Rational, m21: Rational, m22: Rational) -> Self {
        Matrix2 { m11, m12, m21, m22 }
    }

    pub fn from_ints(m: [[i128; 2]; 2]) -> Self {
        let r = Rational::from_integer;
        Matrix2::new(r(m[0][0]), r(m[0][1]), r(m[1][0]), r(m[1][1]))
    }

    pub fn from_rows(m: [[Rational; 2]; 2]) -> Self {
        Matrix2::new(m[0][0], m[0][1], m[1][0], m[1][1])
    }

    pub fn zero() -> Self {
        Matrix2::from_ints([[0, 0], [0, 0]])
    }

    pub fn rows(&self) -> [[Rational; 2]; 2] {
        [[self.m11, self.m12], [self.m21, self.m22]]
    }

    /// Entry at (row, column) given by 0/1 indices.
    pub fn at(&self, row: usize, col: usize) -> Rational {
        match (row, col) {
            (0, 0) => self.m11,
            (0, 1) => self.m12,
            (1, 0) => self.m21,
            (1, 1) => self.m22,
            _ => panic!("2x2 index out of range: ({row}, {col})"),
        }
    }

    pub fn get(&self, row: Side, col: Side) -> Rational {
        self.at(row.index(), col.index())
    }

    pub fn transpose(&self) -> Self {
        Matrix2::new(self.m11, self.m21, self.m12, self.m22)
    }

    pub fn scale(&self, k: Rational) -> Self {
        Matrix2::new(self.m11 * k, self.m12 * k, self.m21 * k, self.m22 * k)
    }

    pub fn add(&self, o: &Matrix2) -> Self {
        Matrix2::new(self.m11 + o.m11, self.m12 + o.m12, self.m21 + o.m21, self.m22 + o.m22)
    }

    fn max_entry(&self) -> Rational {
        self.m11.max(self.m12).max(self.m21).max(self.m22)
    }

    /// `m11 + m22 >= m12 + m21`
    pub fn property_a(&self) -> bool {
        self.m11 + self.m22 >= self.m12 + self.m21
    }

    /// `m11` is a maximum entry.
    pub fn property_b(&self) -> bool {
        self.m11 == self.max_entry()
    }

    /// `m22` is a maximum entry.
    pub fn property_c(&self) -> bool {
        self.m22 == self.max_entry()
    }

    pub fn properties(&self) -> MatrixProperties {
        MatrixProperties { a: self.property_a(), b: self.property_b(), c: self.property_c() }
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

/// Weight and matrix attached to one arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcData {
    pub c: Rational,
    pub m: Matrix2,
}

/// An MWDP instance `(D, c, f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MwdpInstance {
    digraph: OrientedDigraph,
    data: Vec<ArcData>,
}

impl MwdpInstance {
    /// `data[i]` belongs to `digraph.arcs()[i]`. Every weight must be strictly positive.
    pub fn new(digraph: OrientedDigraph, data: Vec<ArcData>) -> Result<Self> {
        if data.len() != digraph.arc_count() {
            return Err(Error::DimensionMismatch { expected: digraph.arc_count(), got: data.len() });
        }
        if let Some(i) = data.iter().position(|d| !is_positive(&d.c)) {
            return Err(Error::invalid(format!("arcs[{i}]: weight c must be > 0, got {}", data[i].c)));
        }
        Ok(MwdpInstance { digraph, data })
    }

    /// Convenience constructor from `(tail, head, c, M)` tuples.
    pub fn from_arcs(n: usize, arcs: Vec<(usize, usize, Rational, Matrix2)>) -> Result<Self> {
        let digraph = OrientedDigraph::new(n, arcs.iter().map(|a| (a.0, a.1)).collect())?;
        let data = arcs.into_iter().map(|(_, _, c, m)| ArcData { c, m }).collect();
        MwdpInstance::new(digraph, data)
    }

    pub fn n(&self) -> usize {
        self.digraph.n()
    }

    pub fn digraph(&self) -> &OrientedDigraph {
        &self.digraph
    }

    pub fn arc_data(&self) -> &[ArcData] {
        &self.data
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &ArcData)> + '_ {
        self.digraph.arcs().iter().zip(&self.data).map(|(&(u, v), d)| (u, v, d))
    }

    /// Per-arc `c * M` scaled to integers by a common denominator.
    pub(crate) fn scaled_weights(&self) -> Result<(Vec<[i128; 4]>, i128)> {
        let products: Vec<[Rational; 4]> = self
            .data
            .iter()
            .map(|d| {
                let m = d.m;
                [d.c * m.m11, d.c * m.m12, d.c * m.m21, d.c * m.m22]
            })
            .collect();
        let scale = common_denominator(products.iter().flatten())?;
        let mut out = Vec::with_capacity(products.len());
        for p in &products {
            out.push([scaled(&p[0], scale)?, scaled(&p[1], scale)?, scaled(&p[2], scale)?, scaled(&p[3], scale)?]);
        }
        Ok((out, scale))
    }
}

/// `w^P(D)`: the sum over arcs of `c(uv)` times the matrix entry selected by
/// the sides of tail and head.
pub fn partition_value(inst: &MwdpInstance, p: &Partition) -> Result<Rational> {
    if p.len() != inst.n() {
        return Err(Error::DimensionMismatch { expected: inst.n(), got: p.len() });
    }
    Ok(inst.arcs().map(|(u, v, d)| d.c * d.m.get(p.side(u), p.side(v))).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatrixProperties {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyTag {
    AllA,
    AllB,
    AllC,
    Hard,
}

impl FamilyTag {
    pub fn is_tractable(self) -> bool {
        self != FamilyTag::Hard
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::AllA => "AllA",
            FamilyTag::AllB => "AllB",
            FamilyTag::AllC => "AllC",
            FamilyTag::Hard => "Hard",
        };
        f.write_str(s)
    }
}

/// Verdict of the dichotomy classifier together with the per-arc flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    pub tag: FamilyTag,
    pub all_a: bool,
    pub all_b: bool,
    pub all_c: bool,
    /// Properties of the matrix on each arc, in arc order.
    pub flags: Vec<MatrixProperties>,
}

/// Classifies the instance's matrix family. Tags are tried in the order
/// `AllB`, `AllC`, `AllA`; an arc-free instance is `AllB`.
pub fn classify_family(inst: &MwdpInstance) -> FamilyClass {
    let flags: Vec<MatrixProperties> = inst.arc_data().iter().map(|d| d.m.properties()).collect();
    let all_a = flags.iter().all(|f| f.a);
    let all_b = flags.iter().all(|f| f.b);
    let all_c = flags.iter().all(|f| f.c);
    let tag = if all_b {
        FamilyTag::AllB
    } else if all_c {
        FamilyTag::AllC
    } else if all_a {
        FamilyTag::AllA
    } else {
        FamilyTag::Hard
    };
    FamilyClass { tag, all_a, all_b, all_c, flags }
}
