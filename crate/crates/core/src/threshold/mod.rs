//! Threshold games: every player `u` plays the diagonal coordination game
//! `[[γ_u, 0], [0, 1 − γ_u]]` against each neighbour.
//!
//! Welfare-optimal pure Nash equilibria are polynomial when all thresholds
//! lean the same way or when `γ_A = 1, γ_B = 0` (component contraction plus
//! a min cut), and NP-hard otherwise; [`gadget`] builds the hitting-set
//! reduction behind the hard case.

pub mod gadget;

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::{max_flow_min_cut_with, Capacity, CutSide, FlowArc, FlowNetwork};
use crate::graph::{connected_components, UndirectedGraph};
use crate::mwdp::Matrix2;
use crate::partition::{Action, StrategyProfile};
use crate::polymatrix::{welfare_optimal_nash_exact, EdgeGame, PolymatrixGame};
use crate::rational::{int, ratio, Rational};

pub use gadget::{
    build_hitting_set_gadget, g_extension, gadget_constants, traversal_from_welfare, GadgetConstants, GadgetRole,
    HittingSetGadget, Hypergraph3,
};

/// A graph and a threshold `γ_u ∈ [0, 1]` per player.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdGame {
    graph: UndirectedGraph,
    gamma: Vec<Rational>,
}

fn check_unit(name: &str, g: &Rational) -> Result<()> {
    if *g < int(0) || *g > int(1) {
        return Err(Error::invalid(format!("{name} = {g} is outside [0, 1]")));
    }
    Ok(())
}

impl ThresholdGame {
    pub fn new(graph: UndirectedGraph, gamma: Vec<Rational>) -> Result<Self> {
        if gamma.len() != graph.n() {
            return Err(Error::DimensionMismatch { expected: graph.n(), got: gamma.len() });
        }
        for (u, g) in gamma.iter().enumerate() {
            check_unit(&format!("gamma[{u}]"), g)?;
        }
        Ok(ThresholdGame { graph, gamma })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    /// `(|N(u) ∩ X_one|, |N(u) ∩ X_two|)` for every player.
    pub fn neighbor_counts(&self, s: &StrategyProfile) -> Result<Vec<(u64, u64)>> {
        if s.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: s.len() });
        }
        Ok((0..self.n())
            .map(|u| {
                let ones = self.graph.neighbors(u).filter(|&w| s.plays_one(w)).count() as u64;
                (ones, self.graph.degree(u) as u64 - ones)
            })
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PlayerType {
    A,
    B,
}

/// Threshold game with two player types, `0 ≤ γ_B ≤ γ_A ≤ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoTypeThreshold {
    graph: UndirectedGraph,
    types: Vec<PlayerType>,
    gamma_a: Rational,
    gamma_b: Rational,
}

impl TwoTypeThreshold {
    pub fn new(graph: UndirectedGraph, types: Vec<PlayerType>, gamma_a: Rational, gamma_b: Rational) -> Result<Self> {
        if types.len() != graph.n() {
            return Err(Error::DimensionMismatch { expected: graph.n(), got: types.len() });
        }
        check_unit("gamma_A", &gamma_a)?;
        check_unit("gamma_B", &gamma_b)?;
        if gamma_b > gamma_a {
            return Err(Error::invalid(format!("gamma_B = {gamma_b} exceeds gamma_A = {gamma_a}")));
        }
        Ok(TwoTypeThreshold { graph, types, gamma_a, gamma_b })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn types(&self) -> &[PlayerType] {
        &self.types
    }

    pub fn gamma_a(&self) -> Rational {
        self.gamma_a
    }

    pub fn gamma_b(&self) -> Rational {
        self.gamma_b
    }

    pub fn gamma(&self, u: usize) -> Rational {
        match self.types[u] {
            PlayerType::A => self.gamma_a,
            PlayerType::B => self.gamma_b,
        }
    }

    pub fn to_threshold(&self) -> ThresholdGame {
        ThresholdGame { graph: self.graph.clone(), gamma: (0..self.n()).map(|u| self.gamma(u)).collect() }
    }
}

fn diag(g: Rational) -> Matrix2 {
    Matrix2::new(g, int(0), int(0), int(1) - g)
}

/// Each edge `uv` carries the pair of diagonal threshold matrices `(Π^u, Π^v)`.
pub fn to_polymatrix(tg: &ThresholdGame) -> PolymatrixGame {
    let games = tg.graph.edges().iter().map(|&(u, v)| EdgeGame::new(diag(tg.gamma[u]), diag(tg.gamma[v]))).collect();
    PolymatrixGame::new(tg.graph.clone(), games).expect("one game per edge")
}

/// Welfare of an edge whose endpoints have thresholds `gu`, `gv`.
fn edge_welfare(gu: Rational, gv: Rational, a: Action, b: Action) -> Rational {
    match (a, b) {
        (Action::One, Action::One) => gu + gv,
        (Action::Two, Action::Two) => int(2) - gu - gv,
        _ => int(0),
    }
}

/// Social welfare: `γ_u + γ_v` per edge played `(one, one)`, `2 − γ_u − γ_v`
/// per edge played `(two, two)`, nothing for mismatched edges.
pub fn threshold_welfare(tg: &ThresholdGame, s: &StrategyProfile) -> Result<Rational> {
    if s.len() != tg.n() {
        return Err(Error::DimensionMismatch { expected: tg.n(), got: s.len() });
    }
    Ok(tg.graph.edges().iter().map(|&(u, v)| edge_welfare(tg.gamma[u], tg.gamma[v], s.action(u), s.action(v))).sum())
}

/// The Nash condition for one player, from neighbour counts alone: a player
/// on `one` needs `n1·γ ≥ n2·(1 − γ)` (or no neighbour on `two`), a player on
/// `two` needs `n2·(1 − γ) ≥ n1·γ` (or no neighbour on `one`).
pub fn ratio_condition(action: Action, gamma: Rational, ones: u64, twos: u64) -> bool {
    // with γ = p/q (q > 0) compare n1·p against n2·(q − p) in integers
    let (p, q) = (*gamma.numer(), *gamma.denom());
    let sides =
        q.checked_sub(p).and_then(|rest| Some(((ones as i128).checked_mul(p)?, (twos as i128).checked_mul(rest)?)));
    let (one_side, two_side) = match sides {
        Some((a, b)) => (int(a), int(b)),
        None => (int(ones as i128) * gamma, int(twos as i128) * (int(1) - gamma)),
    };
    match action {
        Action::One => twos == 0 || one_side >= two_side,
        Action::Two => ones == 0 || two_side >= one_side,
    }
}

/// Pure-Nash test through the neighbourhood ratio conditions (no division).
pub fn nash_ratio_check(tg: &ThresholdGame, s: &StrategyProfile) -> Result<bool> {
    let counts = tg.neighbor_counts(s)?;
    Ok(counts.iter().enumerate().all(|(u, &(n1, n2))| ratio_condition(s.action(u), tg.gamma[u], n1, n2)))
}

/// `min{2γ_A(a − 1), a(a − 1)(2γ_A − 1)}`: the least welfare an all-A clique
/// on `a` vertices loses when it does not play all-`one`.
pub fn clique_a_loss_bound(a: u64, gamma_a: Rational) -> Rational {
    let a = int(a as i128);
    let f1 = int(2) * gamma_a * (a - int(1));
    let fa = a * (a - int(1)) * (int(2) * gamma_a - int(1));
    f1.min(fa)
}

/// `min{2(1 − γ_B)(b − 1), b(b − 1)(1 − 2γ_B)}`: the same bound for an all-B
/// clique that does not play all-`two`.
pub fn clique_b_loss_bound(b: u64, gamma_b: Rational) -> Rational {
    clique_a_loss_bound(b, int(1) - gamma_b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ThresholdMethod {
    /// Everyone prefers `two` (`γ_A ≤ 1/2`).
    AllTwo,
    /// Everyone prefers `one` (`γ_B ≥ 1/2`).
    AllOne,
    /// `γ_A = 1, γ_B = 0`: component contraction and a minimum cut.
    ComponentCut,
    /// Exhaustive scan over all Nash equilibria.
    Exact,
    /// Best-response dynamics beyond the exact budget.
    BestResponse,
}

impl fmt::Display for ThresholdMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The numbers behind `wel = 2|E| − |E(A,B)| − cut`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case3Audit {
    pub edges: u64,
    pub cross_edges: u64,
    pub cut: Rational,
}

impl Case3Audit {
    pub fn welfare(&self) -> Rational {
        int(2 * self.edges as i128) - int(self.cross_edges as i128) - self.cut
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSolution {
    pub profile: StrategyProfile,
    pub welfare: Rational,
    pub method: ThresholdMethod,
    pub exact: bool,
    /// Which polynomial case (1–3) or the hard case (4) the thresholds fall in.
    pub case: u8,
    pub audit: Option<Case3Audit>,
    pub warning: Option<String>,
}

/// Which case the thresholds fall in: 1 for `γ_A ≤ 1/2`, 2 for
/// `γ_B ≥ 1/2`, 3 for `γ_A = 1, γ_B = 0`, otherwise 4.
///
/// Case 2 is tested first, so `γ_A = γ_B = 1/2` counts as case 2. The hard
/// case covers `0 < γ_B < 1/2 < γ_A ≤ 1` directly and `γ_B = 0 < 1/2 < γ_A < 1`
/// after exchanging types and actions (`γ ↦ 1 − γ`).
pub fn threshold_case(gamma_a: Rational, gamma_b: Rational) -> u8 {
    let half = ratio(1, 2);
    if gamma_b >= half {
        2
    } else if gamma_a <= half {
        1
    } else if gamma_a == int(1) && gamma_b == int(0) {
        3
    } else {
        4
    }
}

/// Welfare-optimal pure Nash equilibrium of a two-type threshold game.
///
/// Hard instances are scanned exhaustively up to `budget` players; beyond it
/// best-response dynamics (which terminate, as threshold games are potential
/// games) return some equilibrium with `exact = false` and a warning.
pub fn welfare_optimal_nash(tt: &TwoTypeThreshold, budget: usize, seed: u64) -> Result<ThresholdSolution> {
    let n = tt.n();
    let tg = tt.to_threshold();
    let uniform = |action, method, case| -> Result<ThresholdSolution> {
        let profile = StrategyProfile::all(n, action);
        let welfare = threshold_welfare(&tg, &profile)?;
        Ok(ThresholdSolution { profile, welfare, method, exact: true, case, audit: None, warning: None })
    };
    match threshold_case(tt.gamma_a, tt.gamma_b) {
        2 => uniform(Action::One, ThresholdMethod::AllOne, 2),
        1 => uniform(Action::Two, ThresholdMethod::AllTwo, 1),
        3 => {
            let (profile, audit) = solve_case3(tt)?;
            Ok(ThresholdSolution {
                welfare: audit.welfare(),
                profile,
                method: ThresholdMethod::ComponentCut,
                exact: true,
                case: 3,
                audit: Some(audit),
                warning: None,
            })
        }
        _ if n <= budget.min(62) => {
            let (profile, welfare) = welfare_optimal_nash_exact(&to_polymatrix(&tg), budget)?
                .expect("threshold games always have a pure Nash equilibrium");
            Ok(ThresholdSolution {
                profile,
                welfare,
                method: ThresholdMethod::Exact,
                exact: true,
                case: 4,
                audit: None,
                warning: None,
            })
        }
        _ => {
            let (profile, welfare) = best_response_search(&tg, 16, seed)?;
            Ok(ThresholdSolution {
                profile,
                welfare,
                method: ThresholdMethod::BestResponse,
                exact: false,
                case: 4,
                audit: None,
                warning: Some(format!(
                    "{n} players exceed the exact budget of {budget}; returning the best equilibrium found by best-response dynamics"
                )),
            })
        }
    }
}

/// Runs best-response dynamics from all-one, all-two and `restarts` seeded
/// random profiles, always moving the lowest-index unhappy player, and keeps
/// the equilibrium with the highest welfare.
pub fn best_response_search(tg: &ThresholdGame, restarts: usize, seed: u64) -> Result<(StrategyProfile, Rational)> {
    let n = tg.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = vec![StrategyProfile::all(n, Action::One), StrategyProfile::all(n, Action::Two)];
    for _ in 0..restarts {
        starts.push(StrategyProfile::new(
            (0..n).map(|_| if rng.gen::<bool>() { Action::Two } else { Action::One }).collect(),
        ));
    }
    let mut best: Option<(StrategyProfile, Rational)> = None;
    for start in starts {
        let s = best_response_dynamics(tg, start)?;
        let w = threshold_welfare(tg, &s)?;
        if best.as_ref().is_none_or(|(bs, bw)| w > *bw || (w == *bw && s < *bs)) {
            best = Some((s, w));
        }
    }
    Ok(best.expect("at least two starts"))
}

fn best_response_dynamics(tg: &ThresholdGame, mut s: StrategyProfile) -> Result<StrategyProfile> {
    let mut counts = tg.neighbor_counts(&s)?;
    let happy = |s: &StrategyProfile, counts: &[(u64, u64)], u: usize| {
        ratio_condition(s.action(u), tg.gamma[u], counts[u].0, counts[u].1)
    };
    let mut next = 0;
    // each flip strictly increases the (exact) potential, so this terminates
    while let Some(u) = (next..tg.n()).chain(0..next).find(|&u| !happy(&s, &counts, u)) {
        let now_one = !s.plays_one(u);
        s.flip(u);
        for w in tg.graph.neighbors(u) {
            let c = &mut counts[w];
            if now_one {
                c.0 += 1;
                c.1 -= 1;
            } else {
                c.0 -= 1;
                c.1 += 1;
            }
        }
        next = u + 1;
    }
    Ok(s)
}

/// `γ_A = 1, γ_B = 0`: every component of `G[A]` and of `G[B]` plays a single
/// action in any equilibrium, and an `A`-component on `two` next to a
/// `B`-component on `one` is impossible. Contracting components gives a flow
/// network with `s → a_i` of capacity `2|E(C_i^A)|`, `b_j → t` of capacity
/// `2|E(C_j^B)|`, `a_i → b_j` of capacity `|E(C_i^A, C_j^B)|` and an infinite
/// `b_j → a_i` whenever that count is positive. Source-side components play
/// `one`, and the welfare is `2|E| − |E(A,B)| − cut`. Among minimum cuts the
/// one with the smallest source side is used, so components play `one` only
/// when the cut forces it.
pub fn solve_case3(tt: &TwoTypeThreshold) -> Result<(StrategyProfile, Case3Audit)> {
    if tt.gamma_a != int(1) || tt.gamma_b != int(0) {
        return Err(Error::NotComponentCutCase);
    }
    let n = tt.n();
    let same: Vec<(usize, usize)> =
        tt.graph.edges().iter().copied().filter(|&(u, v)| tt.types[u] == tt.types[v]).collect();
    let components = connected_components(&UndirectedGraph::new(n, same)?);
    let mut comp_of = vec![0; n];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    // component i becomes flow vertex i; s and t follow
    let k = components.len();
    let (s, t) = (k, k + 1);
    let mut inner = vec![0u64; k];
    let mut cross: HashMap<(usize, usize), u64> = HashMap::new();
    let mut cross_edges = 0;
    for &(u, v) in tt.graph.edges() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if tt.types[u] == tt.types[v] {
            inner[cu] += 1;
        } else {
            cross_edges += 1;
            let key = if tt.types[u] == PlayerType::A { (cu, cv) } else { (cv, cu) };
            *cross.entry(key).or_insert(0) += 1;
        }
    }
    let mut arcs = Vec::new();
    for (i, c) in components.iter().enumerate() {
        let cap = Capacity::Finite(int(2 * inner[i] as i128));
        match tt.types[c[0]] {
            PlayerType::A => arcs.push(FlowArc { tail: s, head: i, capacity: cap }),
            PlayerType::B => arcs.push(FlowArc { tail: i, head: t, capacity: cap }),
        }
    }
    let mut pairs: Vec<_> = cross.into_iter().collect();
    pairs.sort_unstable();
    for ((a, b), count) in pairs {
        arcs.push(FlowArc { tail: a, head: b, capacity: Capacity::Finite(int(count as i128)) });
        arcs.push(FlowArc { tail: b, head: a, capacity: Capacity::Infinite });
    }
    let cut = max_flow_min_cut_with(&FlowNetwork::new(k + 2, s, t, arcs)?, CutSide::MinimalSource)?;
    let profile = StrategyProfile::new(
        (0..n)
            .map(|v| if cut.cut.side(comp_of[v]) == crate::partition::Side::X1 { Action::One } else { Action::Two })
            .collect(),
    );
    let audit = Case3Audit { edges: tt.graph.edge_count() as u64, cross_edges, cut: cut.value };
    debug_assert_eq!(threshold_welfare(&tt.to_threshold(), &profile).ok(), Some(audit.welfare()));
    Ok((profile, audit))
}
