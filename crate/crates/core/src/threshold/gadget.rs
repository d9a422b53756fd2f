//! The hitting-set gadget: a two-type threshold game whose welfare-optimal
//! Nash equilibrium encodes a minimum traversal of a 3-uniform hypergraph.
//!
//! Vertices are laid out as `C_A` (clique of type A), `C_B` (clique of type
//! B), one `r_e` per hyperedge, one `u'` per hypergraph vertex and then the
//! sets `Z_u` (each of size `z`, contiguous). Every `r_e` is joined to the
//! first `x_A` vertices of `C_A`, the first `x_B` vertices of `C_B` and to `u'`
//! for each `u ∈ e`; every `u'` is joined to all of `Z_u`.
//!
//! The cliques make the gadget far too large to materialise for more than a
//! single hyperedge, so neighbour counts, the Nash test and welfare are all
//! computed from the structure. [`HittingSetGadget::to_two_type_threshold`]
//! materialises small gadgets for cross-checking.

use std::ops::Range;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::partition::{Action, StrategyProfile};
use crate::rational::{int, Rational};
use crate::threshold::{ratio_condition, PlayerType, TwoTypeThreshold};

/// A 3-uniform hypergraph on `0..n` without repeated hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, edges: Vec<[usize; 3]>) -> Result<Self> {
        let mut seen: Vec<([usize; 3], usize)> = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.iter().any(|&u| u >= n) {
                return Err(Error::invalid(format!("hyperedges[{i}]: {e:?} out of range for n = {n}")));
            }
            if e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
                return Err(Error::invalid(format!("hyperedges[{i}]: {e:?} needs 3 distinct vertices")));
            }
            let mut key = *e;
            key.sort_unstable();
            seen.push((key, i));
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::invalid(format!("hyperedges[{}]: duplicate of hyperedges[{}]", w[1].1, w[0].1)));
        }
        Ok(Hypergraph3 { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    /// Index of the first hyperedge that `set` misses, if any.
    pub fn first_missed(&self, set: &[bool]) -> Option<usize> {
        self.edges.iter().position(|e| e.iter().all(|&u| !set[u]))
    }

    pub fn is_traversal(&self, set: &[bool]) -> bool {
        self.first_missed(set).is_none()
    }

    /// A minimum traversal by exhaustive search over vertex subsets (the
    /// lexicographically smallest vertex mask among those of minimum size).
    pub fn minimum_traversal(&self, budget: usize) -> Result<Vec<usize>> {
        if self.n > budget.min(62) {
            return Err(Error::BudgetExceeded { n: self.n, budget: budget.min(62) });
        }
        let masks: Vec<u64> = self.edges.iter().map(|e| e.iter().fold(0u64, |m, &u| m | 1 << u)).collect();
        let best = (0u64..1 << self.n)
            .filter(|&s| masks.iter().all(|&e| e & s != 0))
            .min_by_key(|&s| (s.count_ones(), s))
            .expect("the full vertex set is a traversal");
        Ok((0..self.n).filter(|&u| best >> u & 1 == 1).collect())
    }
}

/// The integer constants of the reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GadgetConstants {
    pub theta: u64,
    pub x_b: u64,
    pub x_a: u64,
    pub c_a: u64,
    pub c_b: u64,
    pub z: u64,
}

fn q(v: u64) -> Rational {
    int(v as i128)
}

fn to_u64(r: Rational) -> Result<u64> {
    debug_assert!(r.is_integer());
    u64::try_from(r.to_integer()).map_err(|_| Error::Overflow)
}

fn check_gammas(gamma_a: Rational, gamma_b: Rational) -> Result<()> {
    let half = Rational::new(1, 2);
    if !(Rational::zero() < gamma_b && gamma_b < half && half < gamma_a && gamma_a <= int(1)) {
        return Err(Error::invalid(format!(
            "the gadget needs 0 < gamma_B < 1/2 < gamma_A <= 1 (got gamma_A = {gamma_a}, gamma_B = {gamma_b})"
        )));
    }
    Ok(())
}

impl GadgetConstants {
    /// Names of the defining conditions that do not hold (empty when valid).
    ///
    /// * `a`: `θ = 6m + 2n·z`
    /// * `b`: `x_B` is the least positive integer with `x_B(1−γ_B)(γ_A−γ_B)/γ_B > θ`
    /// * `c`: `(x_B+3)(1−γ_B)/γ_B − 1/γ_B < x_A < (x_B+3)(1−γ_B)/γ_B`
    /// * `d`: `c_A` is the least integer `≥ x_A` with `(c_A−1)(2γ_A−1) > θ + 2m(x_A+x_B)`
    /// * `e`: `c_B` is the least integer `≥ x_B` with `(c_B−1)(1−2γ_B) > θ + 2m(x_A+x_B)`
    ///   and `(c_B−1)/m ≥ γ_B/(1−γ_B)`
    /// * `f`: `z = ⌈3m(1−γ_B)/(γ_B(1−2γ_B))⌉`
    pub fn violations(&self, h: &Hypergraph3, gamma_a: Rational, gamma_b: Rational) -> Vec<&'static str> {
        let (m, n) = (q(h.edge_count() as u64), q(h.n() as u64));
        let one = int(1);
        let (ga, gb) = (gamma_a, gamma_b);
        let mut bad = Vec::new();
        if q(self.theta) != int(6) * m + int(2) * n * q(self.z) {
            bad.push("a");
        }
        let k = (one - gb) * (ga - gb) / gb;
        let xb_ok = |x: u64| q(x) * k > q(self.theta);
        if self.x_b == 0 || !xb_ok(self.x_b) || (self.x_b > 1 && xb_ok(self.x_b - 1)) {
            bad.push("b");
        }
        let upper = q(self.x_b + 3) * (one - gb) / gb;
        if !(upper - one / gb < q(self.x_a) && q(self.x_a) < upper) {
            bad.push("c");
        }
        let bound = q(self.theta) + int(2) * m * q(self.x_a + self.x_b);
        let ca_ok = |c: u64| c >= self.x_a && (q(c) - one) * (int(2) * ga - one) > bound;
        if !ca_ok(self.c_a) || (self.c_a > 0 && ca_ok(self.c_a - 1)) {
            bad.push("d");
        }
        let cb_ok =
            |c: u64| c >= self.x_b && (q(c) - one) * (one - int(2) * gb) > bound && (q(c) - one) / m >= gb / (one - gb);
        if !cb_ok(self.c_b) || (self.c_b > 0 && cb_ok(self.c_b - 1)) {
            bad.push("e");
        }
        if q(self.z) != (int(3) * m * (one - gb) / (gb * (one - int(2) * gb))).ceil() {
            bad.push("f");
        }
        bad
    }
}

/// Computes the constants. Needs `0 < γ_B < 1/2 < γ_A ≤ 1` and at least one
/// hyperedge.
pub fn gadget_constants(h: &Hypergraph3, gamma_a: Rational, gamma_b: Rational) -> Result<GadgetConstants> {
    check_gammas(gamma_a, gamma_b)?;
    if h.edge_count() == 0 {
        return Err(Error::invalid("the gadget needs at least one hyperedge"));
    }
    let (m, n) = (q(h.edge_count() as u64), q(h.n() as u64));
    let (ga, gb, one) = (gamma_a, gamma_b, int(1));
    let z = (int(3) * m * (one - gb) / (gb * (one - int(2) * gb))).ceil();
    let theta = int(6) * m + int(2) * n * z;
    let k = (one - gb) * (ga - gb) / gb;
    let x_b = (theta / k).floor() + one;
    let upper = (x_b + int(3)) * (one - gb) / gb;
    let x_a = if upper.is_integer() { upper - one } else { upper.floor() };
    if x_a <= upper - one / gb {
        return Err(Error::NoValidXA);
    }
    let bound = theta + int(2) * m * (x_a + x_b);
    // least c with (c - 1) * slope > bound is floor(bound / slope) + 2
    let c_a = x_a.max((bound / (int(2) * ga - one)).floor() + int(2));
    let c_b = x_b.max((bound / (one - int(2) * gb)).floor() + int(2)).max((m * gb / (one - gb)).ceil() + one);
    Ok(GadgetConstants {
        theta: to_u64(theta)?,
        x_b: to_u64(x_b)?,
        x_a: to_u64(x_a)?,
        c_a: to_u64(c_a)?,
        c_b: to_u64(c_b)?,
        z: to_u64(z)?,
    })
}

/// Role of a gadget vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetRole {
    /// `i`-th vertex of the type-A clique.
    CliqueA(usize),
    /// `i`-th vertex of the type-B clique.
    CliqueB(usize),
    /// `r_e` of hyperedge `e`.
    Hyperedge(usize),
    /// `u'` of hypergraph vertex `u`.
    Vertex(usize),
    /// `k`-th member of `Z_u`.
    Pendant(usize, usize),
}

/// The gadget game in structured form.
#[derive(Debug, Clone, PartialEq)]
pub struct HittingSetGadget {
    hypergraph: Hypergraph3,
    gamma_a: Rational,
    gamma_b: Rational,
    constants: GadgetConstants,
    // hyperedges containing each hypergraph vertex
    member_of: Vec<Vec<usize>>,
}

/// Builds the gadget for `h` with thresholds `γ_A`, `γ_B`.
pub fn build_hitting_set_gadget(h: &Hypergraph3, gamma_a: Rational, gamma_b: Rational) -> Result<HittingSetGadget> {
    let constants = gadget_constants(h, gamma_a, gamma_b)?;
    if constants.x_a > constants.c_a || constants.x_b > constants.c_b {
        return Err(Error::invalid("attachment sizes exceed clique sizes"));
    }
    let mut member_of = vec![Vec::new(); h.n()];
    for (e, edge) in h.edges().iter().enumerate() {
        for &u in edge {
            member_of[u].push(e);
        }
    }
    Ok(HittingSetGadget { hypergraph: h.clone(), gamma_a, gamma_b, constants, member_of })
}

/// Neighbour counts `(on one, on two)`.
type Counts = (u64, u64);

impl HittingSetGadget {
    pub fn hypergraph(&self) -> &Hypergraph3 {
        &self.hypergraph
    }

    pub fn constants(&self) -> &GadgetConstants {
        &self.constants
    }

    pub fn gamma_a(&self) -> Rational {
        self.gamma_a
    }

    pub fn gamma_b(&self) -> Rational {
        self.gamma_b
    }

    fn ca(&self) -> usize {
        self.constants.c_a as usize
    }

    fn cb(&self) -> usize {
        self.constants.c_b as usize
    }

    fn z(&self) -> usize {
        self.constants.z as usize
    }

    pub fn clique_a(&self) -> Range<usize> {
        0..self.ca()
    }

    pub fn clique_b(&self) -> Range<usize> {
        self.ca()..self.ca() + self.cb()
    }

    /// `r_e` of hyperedge `e`.
    pub fn r(&self, e: usize) -> usize {
        self.ca() + self.cb() + e
    }

    /// `u'` of hypergraph vertex `u`.
    pub fn v_prime(&self, u: usize) -> usize {
        self.ca() + self.cb() + self.hypergraph.edge_count() + u
    }

    /// `Z_u`.
    pub fn pendants(&self, u: usize) -> Range<usize> {
        let start = self.v_prime(self.hypergraph.n()) + u * self.z();
        start..start + self.z()
    }

    pub fn vertex_count(&self) -> usize {
        self.v_prime(self.hypergraph.n()) + self.hypergraph.n() * self.z()
    }

    pub fn edge_count(&self) -> u64 {
        let c = &self.constants;
        let (m, n) = (self.hypergraph.edge_count() as u64, self.hypergraph.n() as u64);
        c.c_a * (c.c_a - 1) / 2 + c.c_b * (c.c_b - 1) / 2 + m * (c.x_a + c.x_b) + 3 * m + n * c.z
    }

    pub fn role(&self, v: usize) -> GadgetRole {
        let (m, n) = (self.hypergraph.edge_count(), self.hypergraph.n());
        let mut base = 0;
        if v < self.ca() {
            return GadgetRole::CliqueA(v);
        }
        base += self.ca();
        if v < base + self.cb() {
            return GadgetRole::CliqueB(v - base);
        }
        base += self.cb();
        if v < base + m {
            return GadgetRole::Hyperedge(v - base);
        }
        base += m;
        if v < base + n {
            return GadgetRole::Vertex(v - base);
        }
        base += n;
        assert!(v < self.vertex_count(), "vertex {v} out of range");
        GadgetRole::Pendant((v - base) / self.z(), (v - base) % self.z())
    }

    pub fn player_type(&self, v: usize) -> PlayerType {
        if v < self.ca() {
            PlayerType::A
        } else {
            PlayerType::B
        }
    }

    fn gamma_of(&self, v: usize) -> Rational {
        match self.player_type(v) {
            PlayerType::A => self.gamma_a,
            PlayerType::B => self.gamma_b,
        }
    }

    /// Every edge, in the order cliques, attachments, incidences, pendants.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (ca, cb) = (self.ca(), self.cb());
        let (xa, xb) = (self.constants.x_a as usize, self.constants.x_b as usize);
        let b0 = ca;
        let clique_a = (0..ca).flat_map(move |i| (i + 1..ca).map(move |j| (i, j)));
        let clique_b = (0..cb).flat_map(move |i| (i + 1..cb).map(move |j| (b0 + i, b0 + j)));
        let attach = (0..self.hypergraph.edge_count()).flat_map(move |e| {
            let r = self.r(e);
            (0..xa).map(move |i| (r, i)).chain((0..xb).map(move |i| (r, b0 + i)))
        });
        let incidence = self
            .hypergraph
            .edges()
            .iter()
            .enumerate()
            .flat_map(move |(e, edge)| edge.iter().map(move |&u| (self.r(e), self.v_prime(u))));
        let pendant = (0..self.hypergraph.n()).flat_map(move |u| self.pendants(u).map(move |p| (self.v_prime(u), p)));
        clique_a.chain(clique_b).chain(attach).chain(incidence).chain(pendant)
    }

    /// Materialises the gadget as an ordinary two-type threshold game. Only
    /// sensible for small gadgets: the cliques dominate the edge count.
    pub fn to_two_type_threshold(&self, max_edges: u64) -> Result<TwoTypeThreshold> {
        let count = self.edge_count();
        if count > max_edges {
            return Err(Error::invalid(format!("gadget has {count} edges, more than the limit of {max_edges}")));
        }
        let graph = UndirectedGraph::new(self.vertex_count(), self.edges().collect())?;
        let types = (0..self.vertex_count()).map(|v| self.player_type(v)).collect();
        TwoTypeThreshold::new(graph, types, self.gamma_a, self.gamma_b)
    }

    fn check_profile(&self, s: &StrategyProfile) -> Result<()> {
        if s.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.vertex_count(), got: s.len() });
        }
        Ok(())
    }

    fn count_ones(s: &StrategyProfile, r: Range<usize>) -> u64 {
        r.filter(|&v| s.plays_one(v)).count() as u64
    }

    /// `(|N(v) ∩ X_one|, |N(v) ∩ X_two|)` for every vertex, from the structure.
    pub fn neighbor_counts(&self, s: &StrategyProfile) -> Result<Vec<Counts>> {
        self.check_profile(s)?;
        let c = &self.constants;
        let (m, n) = (self.hypergraph.edge_count(), self.hypergraph.n());
        let (xa, xb) = (c.x_a as usize, c.x_b as usize);
        let b0 = self.ca();
        let a_ones = Self::count_ones(s, self.clique_a());
        let b_ones = Self::count_ones(s, self.clique_b());
        let xa_ones = Self::count_ones(s, 0..xa);
        let xb_ones = Self::count_ones(s, b0..b0 + xb);
        let r_ones = Self::count_ones(s, self.r(0)..self.r(m));
        let own = |v: usize| s.plays_one(v) as u64;
        let mut out = Vec::with_capacity(self.vertex_count());
        for i in 0..self.ca() {
            let mut ones = a_ones - own(i);
            let mut twos = (c.c_a - 1) - ones;
            if i < xa {
                ones += r_ones;
                twos += m as u64 - r_ones;
            }
            out.push((ones, twos));
        }
        for i in 0..self.cb() {
            let mut ones = b_ones - own(b0 + i);
            let mut twos = (c.c_b - 1) - ones;
            if i < xb {
                ones += r_ones;
                twos += m as u64 - r_ones;
            }
            out.push((ones, twos));
        }
        for edge in self.hypergraph.edges() {
            let members = edge.iter().filter(|&&u| s.plays_one(self.v_prime(u))).count() as u64;
            let ones = xa_ones + xb_ones + members;
            out.push((ones, c.x_a + c.x_b + 3 - ones));
        }
        for u in 0..n {
            let rs = self.member_of[u].iter().filter(|&&e| s.plays_one(self.r(e))).count() as u64;
            let zs = Self::count_ones(s, self.pendants(u));
            let ones = rs + zs;
            out.push((ones, self.member_of[u].len() as u64 + c.z - ones));
        }
        for u in 0..n {
            let hub = own(self.v_prime(u));
            for _ in self.pendants(u) {
                out.push((hub, 1 - hub));
            }
        }
        Ok(out)
    }

    /// Pure-Nash test through the ratio conditions, evaluated structurally.
    pub fn nash_ratio_check(&self, s: &StrategyProfile) -> Result<bool> {
        let counts = self.neighbor_counts(s)?;
        // clique members mostly share their counts; test each distinct row once
        let mut last = None;
        for (v, &(n1, n2)) in counts.iter().enumerate() {
            let row = (s.action(v), self.player_type(v), n1, n2);
            if last != Some(row) {
                if !ratio_condition(row.0, self.gamma_of(v), n1, n2) {
                    return Ok(false);
                }
                last = Some(row);
            }
        }
        Ok(true)
    }

    fn pair_welfare(&self, tu: PlayerType, tv: PlayerType, a: Action, b: Action) -> Rational {
        let g = |t| if t == PlayerType::A { self.gamma_a } else { self.gamma_b };
        match (a, b) {
            (Action::One, Action::One) => g(tu) + g(tv),
            (Action::Two, Action::Two) => int(2) - g(tu) - g(tv),
            _ => Rational::zero(),
        }
    }

    // welfare of `ones` / `twos` vertices of one type forming a clique
    fn clique_welfare(&self, t: PlayerType, size: u64, ones: u64) -> Rational {
        let pairs = |k: u64| q(k * k.saturating_sub(1) / 2);
        pairs(ones) * self.pair_welfare(t, t, Action::One, Action::One)
            + pairs(size - ones) * self.pair_welfare(t, t, Action::Two, Action::Two)
    }

    /// Welfare of the clique and attachment edges (`E1 ∪ E2`).
    pub fn core_welfare(&self, s: &StrategyProfile) -> Result<Rational> {
        self.check_profile(s)?;
        let c = &self.constants;
        let (xa, xb) = (c.x_a as usize, c.x_b as usize);
        let b0 = self.ca();
        let mut w = self.clique_welfare(PlayerType::A, c.c_a, Self::count_ones(s, self.clique_a()))
            + self.clique_welfare(PlayerType::B, c.c_b, Self::count_ones(s, self.clique_b()));
        let xa_ones = Self::count_ones(s, 0..xa);
        let xb_ones = Self::count_ones(s, b0..b0 + xb);
        for e in 0..self.hypergraph.edge_count() {
            let (a1, a2) = (q(xa_ones), q(c.x_a - xa_ones));
            let (b1, b2) = (q(xb_ones), q(c.x_b - xb_ones));
            let (pa, pb) = (PlayerType::A, PlayerType::B);
            let (one, two) = (Action::One, Action::Two);
            w += if s.plays_one(self.r(e)) {
                a1 * self.pair_welfare(pb, pa, one, one) + b1 * self.pair_welfare(pb, pb, one, one)
            } else {
                a2 * self.pair_welfare(pb, pa, two, two) + b2 * self.pair_welfare(pb, pb, two, two)
            };
        }
        Ok(w)
    }

    /// Welfare of the incidence edges `r_e u'` (`E3`).
    pub fn incidence_welfare(&self, s: &StrategyProfile) -> Result<Rational> {
        self.check_profile(s)?;
        let mut w = Rational::zero();
        for (e, edge) in self.hypergraph.edges().iter().enumerate() {
            for &u in edge {
                let b = PlayerType::B;
                w += self.pair_welfare(b, b, s.action(self.r(e)), s.action(self.v_prime(u)));
            }
        }
        Ok(w)
    }

    /// Welfare of the pendant edges `u' z` (`E4`).
    pub fn pendant_welfare(&self, s: &StrategyProfile) -> Result<Rational> {
        self.check_profile(s)?;
        let mut w = Rational::zero();
        for u in 0..self.hypergraph.n() {
            let hub = s.action(self.v_prime(u));
            for p in self.pendants(u) {
                w += self.pair_welfare(PlayerType::B, PlayerType::B, hub, s.action(p));
            }
        }
        Ok(w)
    }

    /// Social welfare, evaluated structurally.
    pub fn welfare(&self, s: &StrategyProfile) -> Result<Rational> {
        Ok(self.core_welfare(s)? + self.incidence_welfare(s)? + self.pendant_welfare(s)?)
    }

    /// The canonical profile of a traversal: `C_A` and every `r_e` play
    /// `one`, `C_B` plays `two`, and `u'` with `Z_u` play `one` exactly when
    /// `u` is in the traversal.
    pub fn g_extension(&self, traversal: &[usize]) -> Result<StrategyProfile> {
        let n = self.hypergraph.n();
        let mut member = vec![false; n];
        for &u in traversal {
            if u >= n {
                return Err(Error::invalid(format!("traversal vertex {u} out of range for n = {n}")));
            }
            member[u] = true;
        }
        if let Some(edge) = self.hypergraph.first_missed(&member) {
            return Err(Error::NotATraversal { edge });
        }
        let mut s = StrategyProfile::all(self.vertex_count(), Action::Two);
        for v in self.clique_a().chain(self.r(0)..self.r(self.hypergraph.edge_count())) {
            s.set(v, Action::One);
        }
        for u in (0..n).filter(|&u| member[u]) {
            s.set(self.v_prime(u), Action::One);
            for p in self.pendants(u) {
                s.set(p, Action::One);
            }
        }
        Ok(s)
    }

    /// `W*` in closed form: `c_A(c_A−1)γ_A + c_B(c_B−1)(1−γ_B) + m·x_A(γ_A+γ_B)`,
    /// the optimal welfare of the clique and attachment edges.
    pub fn w_star(&self) -> Rational {
        let c = &self.constants;
        let (ga, gb) = (self.gamma_a, self.gamma_b);
        let m = q(self.hypergraph.edge_count() as u64);
        q(c.c_a) * q(c.c_a - 1) * ga + q(c.c_b) * q(c.c_b - 1) * (int(1) - gb) + m * q(c.x_a) * (ga + gb)
    }

    /// `ε_T`: welfare of the incidence edges under the G-extension of `T`.
    pub fn epsilon(&self, traversal: &[usize]) -> Result<Rational> {
        self.incidence_welfare(&self.g_extension(traversal)?)
    }

    /// `W* + ε_T + n·z·2(1−γ_B) − |T|·2z(1−2γ_B)`.
    pub fn claim_d_welfare(&self, traversal: &[usize]) -> Result<Rational> {
        let gb = self.gamma_b;
        let z = q(self.constants.z);
        let n = q(self.hypergraph.n() as u64);
        let mut distinct = traversal.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let t = q(distinct.len() as u64);
        Ok(self.w_star() + self.epsilon(traversal)? + n * z * int(2) * (int(1) - gb)
            - t * int(2) * z * (int(1) - int(2) * gb))
    }

    /// Minimum traversal size from the welfare of a welfare-optimal Nash
    /// equilibrium: `⌈(W* + n·z(2−2γ_B) − w_opt) / (2z(1−2γ_B))⌉`.
    pub fn traversal_from_welfare(&self, w_opt: Rational) -> i128 {
        let gb = self.gamma_b;
        let z = q(self.constants.z);
        let n = q(self.hypergraph.n() as u64);
        let num = self.w_star() + n * z * (int(2) - int(2) * gb) - w_opt;
        (num / (int(2) * z * (int(1) - int(2) * gb))).ceil().to_integer()
    }
}

/// See [`HittingSetGadget::g_extension`].
pub fn g_extension(gadget: &HittingSetGadget, traversal: &[usize]) -> Result<StrategyProfile> {
    gadget.g_extension(traversal)
}

/// See [`HittingSetGadget::traversal_from_welfare`].
pub fn traversal_from_welfare(gadget: &HittingSetGadget, w_opt: Rational) -> i128 {
    gadget.traversal_from_welfare(w_opt)
}
