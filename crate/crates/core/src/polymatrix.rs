//! Binary-action polymatrix games: payoffs, welfare, pure Nash equilibria,
//! coordination classes, pairwise potentials and the reductions to and from
//! MWDP.
//!
//! A player's payoff is the sum of its payoffs in the two-player games on its
//! incident edges, and it uses a single action against every neighbour.
//! Action `One` corresponds to side `X1` of a partition, `Two` to `X2`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::mwdp::{classify_family, solve, solve_mincut, Matrix2, Method, MwdpInstance, SolveOutcome, SolvePolicy};
use crate::partition::{Action, StrategyProfile};
use crate::rational::{common_denominator, int, ratio, scaled, Rational};
use crate::scan::{par_gray_scan, Best};

/// The bimatrix game on an edge `{u, v}`.
///
/// `pi_uv` holds `u`'s payoffs with `u` as row player; `pi_vu` holds `v`'s
/// payoffs with `v` as row player.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeGame {
    pub pi_uv: Matrix2,
    pub pi_vu: Matrix2,
}

impl EdgeGame {
    pub fn new(pi_uv: Matrix2, pi_vu: Matrix2) -> Self {
        EdgeGame { pi_uv, pi_vu }
    }

    pub fn zero() -> Self {
        EdgeGame { pi_uv: Matrix2::zero(), pi_vu: Matrix2::zero() }
    }

    /// `u`'s payoff when `u` plays `a_u` and `v` plays `a_v`.
    pub fn payoff_u(&self, a_u: Action, a_v: Action) -> Rational {
        self.pi_uv.at(a_u.index(), a_v.index())
    }

    /// `v`'s payoff when `u` plays `a_u` and `v` plays `a_v`.
    pub fn payoff_v(&self, a_u: Action, a_v: Action) -> Rational {
        self.pi_vu.at(a_v.index(), a_u.index())
    }

    /// The same game seen from the other endpoint.
    pub fn swapped(&self) -> Self {
        EdgeGame { pi_uv: self.pi_vu, pi_vu: self.pi_uv }
    }

    /// Total payoff of both endpoints, indexed by (`u`'s action, `v`'s action).
    pub fn welfare_matrix(&self) -> Matrix2 {
        self.pi_uv.add(&self.pi_vu.transpose())
    }

    /// Whether `(a_u, a_v)` is a (weak) pure Nash equilibrium of the edge game.
    pub fn is_nash_at(&self, a_u: Action, a_v: Action) -> bool {
        self.payoff_u(a_u.flip(), a_v) <= self.payoff_u(a_u, a_v)
            && self.payoff_v(a_u, a_v.flip()) <= self.payoff_v(a_u, a_v)
    }

    pub fn coordination(&self) -> EdgeClass {
        use Action::{One, Two};
        EdgeClass {
            pure: self.is_nash_at(One, One) && self.is_nash_at(Two, Two),
            anti: self.is_nash_at(One, Two) && self.is_nash_at(Two, One),
        }
    }
}

/// A graph with one [`EdgeGame`] per edge, oriented like the graph's edge list.
#[derive(Debug, Clone, PartialEq)]
pub struct PolymatrixGame {
    graph: UndirectedGraph,
    games: Vec<EdgeGame>,
}

impl PolymatrixGame {
    pub fn new(graph: UndirectedGraph, games: Vec<EdgeGame>) -> Result<Self> {
        if games.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch { expected: graph.edge_count(), got: games.len() });
        }
        Ok(PolymatrixGame { graph, games })
    }

    pub fn from_edges(n: usize, edges: Vec<(usize, usize, EdgeGame)>) -> Result<Self> {
        let (pairs, games) = edges.into_iter().map(|(u, v, g)| ((u, v), g)).unzip();
        Self::new(UndirectedGraph::new(n, pairs)?, games)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn games(&self) -> &[EdgeGame] {
        &self.games
    }

    pub fn edge_game(&self, e: usize) -> &EdgeGame {
        &self.games[e]
    }

    fn check_profile(&self, s: &StrategyProfile) -> Result<()> {
        if s.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: s.len() });
        }
        Ok(())
    }

    // payoff of `player` on edge `e` under profile s, with the player's own
    // action overridden by `own`
    fn edge_payoff(&self, e: usize, player: usize, own: Action, s: &StrategyProfile) -> Rational {
        let (u, v) = self.graph.edges()[e];
        let g = &self.games[e];
        if player == u {
            g.payoff_u(own, s.action(v))
        } else {
            g.payoff_v(s.action(u), own)
        }
    }

    fn payoff_with(&self, player: usize, own: Action, s: &StrategyProfile) -> Rational {
        self.graph.incident(player).iter().map(|&(_, e)| self.edge_payoff(e, player, own, s)).sum()
    }
}

/// `p_i(s)`: the sum of `i`'s payoffs over all incident edge games.
pub fn player_payoff(g: &PolymatrixGame, s: &StrategyProfile, i: usize) -> Result<Rational> {
    g.check_profile(s)?;
    if i >= g.n() {
        return Err(Error::invalid(format!("unknown player {i} (game has {} players)", g.n())));
    }
    Ok(g.payoff_with(i, s.action(i), s))
}

/// Sum of all players' payoffs.
pub fn social_welfare(g: &PolymatrixGame, s: &StrategyProfile) -> Result<Rational> {
    g.check_profile(s)?;
    Ok(g.graph
        .edges()
        .iter()
        .zip(&g.games)
        .map(|(&(u, v), eg)| eg.welfare_matrix().at(s.action(u).index(), s.action(v).index()))
        .sum())
}

/// Result of a pure-Nash test: the players that could strictly gain by
/// switching, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NashCheck {
    pub is_nash: bool,
    pub deviators: Vec<usize>,
}

pub fn is_pure_nash(g: &PolymatrixGame, s: &StrategyProfile) -> Result<NashCheck> {
    g.check_profile(s)?;
    let deviators: Vec<usize> =
        (0..g.n()).filter(|&i| g.payoff_with(i, s.action(i).flip(), s) > g.payoff_with(i, s.action(i), s)).collect();
    Ok(NashCheck { is_nash: deviators.is_empty(), deviators })
}

/// Coordination flags of one edge game. An edge can carry both flags (the
/// zero game does).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeClass {
    /// `(one, one)` and `(two, two)` are pure Nash equilibria.
    pub pure: bool,
    /// `(one, two)` and `(two, one)` are pure Nash equilibria.
    pub anti: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeTag {
    PureCoordination,
    AntiCoordination,
    Neither,
}

impl EdgeClass {
    pub fn tag(&self) -> EdgeTag {
        if self.pure {
            EdgeTag::PureCoordination
        } else if self.anti {
            EdgeTag::AntiCoordination
        } else {
            EdgeTag::Neither
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GameTag {
    PureCoordination,
    AntiCoordination,
    Mixed,
}

impl fmt::Display for GameTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameClass {
    pub tag: GameTag,
    pub edges: Vec<EdgeClass>,
}

/// Pure-coordination if every edge game is, else anti-coordination if every
/// edge game is, else mixed. A game without edges is pure-coordination.
pub fn classify_game(g: &PolymatrixGame) -> GameClass {
    let edges: Vec<EdgeClass> = g.games.iter().map(EdgeGame::coordination).collect();
    let tag = if edges.iter().all(|c| c.pure) {
        GameTag::PureCoordination
    } else if edges.iter().all(|c| c.anti) {
        GameTag::AntiCoordination
    } else {
        GameTag::Mixed
    };
    GameClass { tag, edges }
}

/// Pairwise potential of an edge game, indexed by (`u`'s action, `v`'s
/// action) and normalised so that `phi11 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PotentialMatrix {
    pub phi: Matrix2,
}

/// Integrates the unilateral payoff differences around the four profiles.
///
/// Fails with `NotPotential` (with an empty edge list) when the four-cycle
/// of deviations does not close.
pub fn derive_pairwise_potential(eg: &EdgeGame) -> Result<PotentialMatrix> {
    let (u, v) = (&eg.pi_uv, &eg.pi_vu);
    let phi11 = int(0);
    let phi21 = u.m21 - u.m11;
    let phi12 = v.m21 - v.m11;
    let phi22 = phi21 + (v.m22 - v.m12);
    if phi22 != phi12 + (u.m22 - u.m12) {
        return Err(Error::NotPotential { edges: Vec::new() });
    }
    Ok(PotentialMatrix { phi: Matrix2::new(phi11, phi12, phi21, phi22) })
}

fn all_potentials(g: &PolymatrixGame) -> Result<Vec<PotentialMatrix>> {
    let mut out = Vec::with_capacity(g.games.len());
    let mut bad = Vec::new();
    for (e, eg) in g.games.iter().enumerate() {
        match derive_pairwise_potential(eg) {
            Ok(p) => out.push(p),
            Err(_) => bad.push(e),
        }
    }
    if bad.is_empty() {
        Ok(out)
    } else {
        Err(Error::NotPotential { edges: bad })
    }
}

/// `Phi(s)`: the sum of the (normalised) pairwise potentials at `s`.
pub fn total_potential(g: &PolymatrixGame, s: &StrategyProfile) -> Result<Rational> {
    g.check_profile(s)?;
    let pots = all_potentials(g)?;
    Ok(g.graph.edges().iter().zip(&pots).map(|(&(u, v), p)| p.phi.at(s.action(u).index(), s.action(v).index())).sum())
}

/// An MWDP instance built from a game, one arc per edge in edge order.
///
/// Arcs point from the lower to the higher player index; `reversed[e]` is
/// true when that is opposite to the orientation of edge `e` in the game.
#[derive(Debug, Clone, PartialEq)]
pub struct GameReduction {
    pub instance: MwdpInstance,
    pub reversed: Vec<bool>,
}

fn reduce(g: &PolymatrixGame, matrices: Vec<Matrix2>) -> Result<GameReduction> {
    let mut arcs = Vec::with_capacity(matrices.len());
    let mut reversed = Vec::with_capacity(matrices.len());
    for (&(u, v), m) in g.graph.edges().iter().zip(matrices) {
        if u < v {
            arcs.push((u, v, int(1), m));
            reversed.push(false);
        } else {
            arcs.push((v, u, int(1), m.transpose()));
            reversed.push(true);
        }
    }
    Ok(GameReduction { instance: MwdpInstance::from_arcs(g.n(), arcs)?, reversed })
}

/// Welfare matrices on canonically oriented arcs: `w^{P(s)} = W(s)` for every
/// profile.
pub fn welfare_mwdp(g: &PolymatrixGame) -> Result<GameReduction> {
    reduce(g, g.games.iter().map(EdgeGame::welfare_matrix).collect())
}

/// Potential matrices on canonically oriented arcs: `w^{P(s)} = Phi(s)` for
/// every profile.
pub fn potential_mwdp(g: &PolymatrixGame) -> Result<GameReduction> {
    reduce(g, all_potentials(g)?.into_iter().map(|p| p.phi).collect())
}

/// Each arc `uv` becomes an edge game in which both endpoints receive
/// `c * m_xy / 2` at outcome `(x, y)`, so welfare equals partition value.
pub fn game_from_mwdp_welfare(inst: &MwdpInstance) -> Result<PolymatrixGame> {
    let half = ratio(1, 2);
    let edges = inst
        .arcs()
        .map(|(u, v, d)| {
            let m = d.m.scale(d.c * half);
            (u, v, EdgeGame::new(m, m.transpose()))
        })
        .collect();
    PolymatrixGame::from_edges(inst.n(), edges)
}

/// The edge game whose pairwise potential is `phi` (any normalisation).
///
/// `u` gets `phi11/2, 0, phi21 - phi11/2, phi22 - phi12` at
/// `(one,one), (one,two), (two,one), (two,two)`; `v` gets
/// `phi11/2, phi12 - phi11/2, 0, phi22 - phi21`. Each unilateral deviation
/// then changes the deviator's payoff by exactly the change in `phi`.
pub fn game_for_potential(phi: &Matrix2) -> EdgeGame {
    let h = phi.m11 * ratio(1, 2);
    let pi_uv = Matrix2::new(h, int(0), phi.m21 - h, phi.m22 - phi.m12);
    // v is the row player here: rows are v's action, columns u's action
    let pi_vu = Matrix2::new(h, int(0), phi.m12 - h, phi.m22 - phi.m21);
    EdgeGame::new(pi_uv, pi_vu)
}

/// Each arc with weight `c` and matrix `M` becomes the edge game whose
/// pairwise potential is `c * M`, so that the potential equals the partition
/// value up to an additive constant.
pub fn game_from_mwdp_potential(inst: &MwdpInstance) -> Result<PolymatrixGame> {
    let edges = inst.arcs().map(|(u, v, d)| (u, v, game_for_potential(&d.m.scale(d.c)))).collect();
    PolymatrixGame::from_edges(inst.n(), edges)
}

/// A profile chosen by one of the game solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub profile: StrategyProfile,
    pub value: Rational,
    pub method: Method,
    pub exact: bool,
}

/// Maximises social welfare through the welfare reduction.
pub fn maximize_welfare(g: &PolymatrixGame, policy: &SolvePolicy) -> Result<GameSolution> {
    solve_reduction(&welfare_mwdp(g)?.instance, policy)
}

/// Maximises the (normalised) total potential through the potential
/// reduction. An exact maximiser is a pure Nash equilibrium.
pub fn maximize_potential(g: &PolymatrixGame, policy: &SolvePolicy) -> Result<GameSolution> {
    solve_reduction(&potential_mwdp(g)?.instance, policy)
}

// Whenever every matrix satisfies m11 + m22 >= m12 + m21 (always the case for
// pure-coordination games) the min-cut solver is used directly; otherwise the
// general dispatcher decides.
fn solve_reduction(inst: &MwdpInstance, policy: &SolvePolicy) -> Result<GameSolution> {
    let out: SolveOutcome = if classify_family(inst).all_a { solve_mincut(inst)? } else { solve(inst, policy)? };
    Ok(GameSolution { profile: out.partition.to_profile(), value: out.value, method: out.method, exact: out.exact })
}

/// Payoffs scaled to integers: `u[e][a_u*2 + a_v]` and `v[e][a_v*2 + a_u]`.
struct ScaledGame {
    u: Vec<[i128; 4]>,
    v: Vec<[i128; 4]>,
    scale: i128,
}

impl ScaledGame {
    fn new(g: &PolymatrixGame) -> Result<Self> {
        let entries = |m: &Matrix2| [m.m11, m.m12, m.m21, m.m22];
        let all: Vec<Rational> =
            g.games.iter().flat_map(|eg| entries(&eg.pi_uv).into_iter().chain(entries(&eg.pi_vu))).collect();
        let scale = common_denominator(&all)?;
        let mut bound: i128 = 0;
        for x in &all {
            bound =
                bound.checked_add(scaled(x, scale)?.checked_abs().ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
        }
        bound.checked_mul(4).ok_or(Error::Overflow)?;
        let conv = |m: &Matrix2| -> Result<[i128; 4]> {
            Ok([scaled(&m.m11, scale)?, scaled(&m.m12, scale)?, scaled(&m.m21, scale)?, scaled(&m.m22, scale)?])
        };
        let mut u = Vec::with_capacity(g.games.len());
        let mut v = Vec::with_capacity(g.games.len());
        for eg in &g.games {
            u.push(conv(&eg.pi_uv)?);
            v.push(conv(&eg.pi_vu)?);
        }
        Ok(ScaledGame { u, v, scale })
    }

    // payoff on edge e of endpoint `player` (given which end it is) with
    // actions as bits (1 = two)
    fn pay(&self, e: usize, is_u: bool, own: u64, other: u64) -> i128 {
        if is_u {
            self.u[e][(own * 2 + other) as usize]
        } else {
            self.v[e][(own * 2 + other) as usize]
        }
    }
}

/// Incremental scan state: current and flipped payoff per player, the number
/// of players with a profitable deviation, and the welfare.
struct NashState {
    mask: u64,
    cur: Vec<i128>,
    alt: Vec<i128>,
    unhappy: usize,
    welfare: i128,
}

struct NashScanner<'a> {
    g: &'a PolymatrixGame,
    sg: ScaledGame,
}

impl<'a> NashScanner<'a> {
    fn new(g: &'a PolymatrixGame, budget: usize) -> Result<Self> {
        let n = g.n();
        if n > budget || n > 62 {
            return Err(Error::BudgetExceeded { n, budget });
        }
        Ok(NashScanner { g, sg: ScaledGame::new(g)? })
    }

    fn player_pays(&self, i: usize, mask: u64) -> (i128, i128) {
        let own = mask >> i & 1;
        let (mut cur, mut alt) = (0, 0);
        for &(o, e) in self.g.graph.incident(i) {
            let is_u = self.g.graph.edges()[e].0 == i;
            let other = mask >> o & 1;
            cur += self.sg.pay(e, is_u, own, other);
            alt += self.sg.pay(e, is_u, own ^ 1, other);
        }
        (cur, alt)
    }

    fn init(&self, mask: u64) -> NashState {
        let n = self.g.n();
        let (cur, alt): (Vec<i128>, Vec<i128>) = (0..n).map(|i| self.player_pays(i, mask)).unzip();
        let unhappy = cur.iter().zip(&alt).filter(|(c, a)| a > c).count();
        let welfare = cur.iter().sum();
        NashState { mask, cur, alt, unhappy, welfare }
    }

    fn flip(&self, s: &mut NashState, b: usize) {
        let was_unhappy = |s: &NashState, i: usize| (s.alt[i] > s.cur[i]) as usize;
        s.unhappy -= was_unhappy(s, b);
        std::mem::swap(&mut s.cur[b], &mut s.alt[b]);
        s.welfare += s.cur[b] - s.alt[b];
        s.unhappy += was_unhappy(s, b);
        let old_b = s.mask >> b & 1;
        s.mask ^= 1 << b;
        for &(o, e) in self.g.graph.incident(b) {
            let is_u = self.g.graph.edges()[e].0 == o;
            let own = s.mask >> o & 1;
            let d_cur = self.sg.pay(e, is_u, own, old_b ^ 1) - self.sg.pay(e, is_u, own, old_b);
            let d_alt = self.sg.pay(e, is_u, own ^ 1, old_b ^ 1) - self.sg.pay(e, is_u, own ^ 1, old_b);
            s.unhappy -= was_unhappy(s, o);
            s.cur[o] += d_cur;
            s.alt[o] += d_alt;
            s.welfare += d_cur;
            s.unhappy += was_unhappy(s, o);
        }
    }
}

/// Every pure Nash equilibrium, in lexicographic order (`One < Two`, player
/// 0 most significant).
pub fn enumerate_pure_nash(g: &PolymatrixGame, budget: usize) -> Result<Vec<StrategyProfile>> {
    let sc = NashScanner::new(g, budget)?;
    let n = g.n();
    let mut masks = par_gray_scan(
        n,
        |m| sc.init(m),
        |s, b| sc.flip(s, b),
        |s, m, acc: &mut Vec<u64>| {
            if s.unhappy == 0 {
                acc.push(m)
            }
        },
        Vec::new,
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    masks.sort_unstable_by_key(|&m| crate::scan::lex_key(m, n));
    Ok(masks.into_iter().map(|m| StrategyProfile::from_mask(n, m)).collect())
}

/// A welfare-maximising pure Nash equilibrium (lexicographically smallest
/// among ties), or `None` when the game has no pure equilibrium.
pub fn welfare_optimal_nash_exact(g: &PolymatrixGame, budget: usize) -> Result<Option<(StrategyProfile, Rational)>> {
    let sc = NashScanner::new(g, budget)?;
    let n = g.n();
    let best = par_gray_scan(
        n,
        |m| sc.init(m),
        |s, b| sc.flip(s, b),
        |s, m, acc: &mut Best| {
            if s.unhappy == 0 {
                acc.offer(s.welfare, m, n)
            }
        },
        Best::none,
        Best::merge,
    );
    Ok(best.found.then(|| (StrategyProfile::from_mask(n, best.mask), Rational::new(best.value, sc.sg.scale))))
}
