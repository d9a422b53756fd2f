//! Independent brute-force oracles and random generators shared by the
//! integration tests. Nothing here calls a solver of the library: values are
//! recomputed from the raw inputs by direct enumeration.

#![allow(dead_code)]

use coordcut::encodings::{Color, ColoredEdge, ColoredGraph};
use coordcut::polymatrix::{EdgeGame, PolymatrixGame};
use coordcut::rational::{int, ratio};
use coordcut::threshold::{PlayerType, ThresholdGame, TwoTypeThreshold};
use coordcut::{Matrix2, MwdpInstance, OrientedDigraph, Partition, Rational, Side, StrategyProfile, UndirectedGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- masks

/// Bit `i` set means vertex `i` is on side two.
pub fn bit(mask: u64, i: usize) -> usize {
    (mask >> i & 1) as usize
}

pub fn partition_of(n: usize, mask: u64) -> Partition {
    Partition::new((0..n).map(|i| if bit(mask, i) == 1 { Side::X2 } else { Side::X1 }).collect())
}

pub fn profile_of(n: usize, mask: u64) -> StrategyProfile {
    partition_of(n, mask).to_profile()
}

pub fn mask_of(p: &Partition) -> u64 {
    p.sides().iter().enumerate().fold(0, |m, (i, s)| if *s == Side::X2 { m | 1 << i } else { m })
}

// ---------------------------------------------------------------- MWDP

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `c · M` per arc as integers over one common denominator.
pub struct IntInstance {
    pub n: usize,
    pub arcs: Vec<(usize, usize, [[i128; 2]; 2])>,
    pub denom: i128,
}

impl IntInstance {
    pub fn new(inst: &MwdpInstance) -> Self {
        let entries: Vec<(usize, usize, [[Rational; 2]; 2])> = inst
            .arcs()
            .map(|(u, v, d)| {
                let r = d.m.rows();
                (u, v, [[d.c * r[0][0], d.c * r[0][1]], [d.c * r[1][0], d.c * r[1][1]]])
            })
            .collect();
        let mut denom = 1i128;
        for (_, _, m) in &entries {
            for x in m.iter().flatten() {
                denom = denom / gcd(denom, *x.denom()) * *x.denom();
            }
        }
        let arcs = entries
            .into_iter()
            .map(|(u, v, m)| {
                let s = |x: Rational| x.numer() * (denom / x.denom());
                (u, v, [[s(m[0][0]), s(m[0][1])], [s(m[1][0]), s(m[1][1])]])
            })
            .collect();
        IntInstance { n: inst.n(), arcs, denom }
    }

    pub fn value_scaled(&self, mask: u64) -> i128 {
        self.arcs.iter().map(|(u, v, m)| m[bit(mask, *u)][bit(mask, *v)]).sum()
    }

    pub fn value(&self, mask: u64) -> Rational {
        ratio(self.value_scaled(mask), self.denom)
    }

    /// Optimum over all `2^n` partitions and the smallest mask reaching it.
    pub fn optimum(&self) -> (Rational, u64) {
        let (best, mask) = (0..1u64 << self.n).map(|m| (self.value_scaled(m), m)).fold((i128::MIN, 0), |acc, x| {
            if x.0 > acc.0 {
                x
            } else {
                acc
            }
        });
        (ratio(best, self.denom), mask)
    }
}

pub fn mwdp_value(inst: &MwdpInstance, p: &Partition) -> Rational {
    inst.arcs()
        .map(|(u, v, d)| {
            let r = d.m.rows();
            d.c * r[p.side(u).index()][p.side(v).index()]
        })
        .sum()
}

pub fn prop_a(m: &Matrix2) -> bool {
    let r = m.rows();
    r[0][0] + r[1][1] >= r[0][1] + r[1][0]
}

pub fn prop_b(m: &Matrix2) -> bool {
    let r = m.rows();
    r.iter().flatten().all(|x| *x <= r[0][0])
}

pub fn prop_c(m: &Matrix2) -> bool {
    let r = m.rows();
    r.iter().flatten().all(|x| *x <= r[1][1])
}

// ---------------------------------------------------------------- random data

/// A rational in `[lo, hi]` with denominator at most `max_den`.
pub fn rational(rng: &mut Rng8, lo: i128, hi: i128, max_den: i128) -> Rational {
    let d = rng.gen_range(1..=max_den);
    ratio(rng.gen_range(lo * d..=hi * d), d)
}

pub fn small(rng: &mut Rng8) -> Rational {
    // integers most of the time so that ties are common
    if rng.gen_bool(0.6) {
        int(rng.gen_range(-10..=10))
    } else {
        rational(rng, -10, 10, 4)
    }
}

pub fn any_matrix(rng: &mut Rng8) -> Matrix2 {
    Matrix2::new(small(rng), small(rng), small(rng), small(rng))
}

/// Property (a) holds: `m22` is raised until the inequality is met.
pub fn matrix_a(rng: &mut Rng8) -> Matrix2 {
    let (m11, m12, m21) = (small(rng), small(rng), small(rng));
    let slack = if rng.gen_bool(0.3) { int(0) } else { rational(rng, 0, 6, 3) };
    Matrix2::new(m11, m12, m21, m12 + m21 - m11 + slack)
}

/// Property (b) holds: `m11` is a maximum entry.
pub fn matrix_b(rng: &mut Rng8) -> Matrix2 {
    let (m12, m21, m22) = (small(rng), small(rng), small(rng));
    let top = m12.max(m21).max(m22);
    Matrix2::new(top + if rng.gen_bool(0.3) { int(0) } else { rational(rng, 0, 5, 2) }, m12, m21, m22)
}

/// Property (c) holds: `m22` is a maximum entry.
pub fn matrix_c(rng: &mut Rng8) -> Matrix2 {
    let r = matrix_b(rng).rows();
    Matrix2::new(r[1][1], r[0][1], r[1][0], r[0][0])
}

pub fn weight(rng: &mut Rng8) -> Rational {
    if rng.gen_bool(0.5) {
        int(1)
    } else {
        rational(rng, 1, 5, 3)
    }
}

/// Oriented digraph: each unordered pair becomes an arc with probability
/// `p`, in a random direction.
pub fn digraph_pairs(rng: &mut Rng8, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    arcs.shuffle(rng);
    arcs
}

pub fn instance_with(rng: &mut Rng8, n: usize, p: f64, mut matrix: impl FnMut(&mut Rng8) -> Matrix2) -> MwdpInstance {
    let arcs = digraph_pairs(rng, n, p)
        .into_iter()
        .map(|(u, v)| {
            let c = weight(rng);
            (u, v, c, matrix(rng))
        })
        .collect();
    MwdpInstance::from_arcs(n, arcs).unwrap()
}

pub fn undirected(rng: &mut Rng8, n: usize, p: f64) -> UndirectedGraph {
    let edges = digraph_pairs(rng, n, p).into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    UndirectedGraph::new(n, edges).unwrap()
}

pub fn oriented(rng: &mut Rng8, n: usize, p: f64) -> OrientedDigraph {
    OrientedDigraph::new(n, digraph_pairs(rng, n, p)).unwrap()
}

/// Union of random directed cycles (length ≥ 3) that share no vertex pair:
/// every vertex has in-degree equal to out-degree.
pub fn eulerian(rng: &mut Rng8, n: usize, cycles: usize) -> OrientedDigraph {
    let mut used = std::collections::HashSet::new();
    let mut arcs = Vec::new();
    for _ in 0..cycles {
        let len = rng.gen_range(3..=n.max(3));
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(rng);
        vs.truncate(len);
        let cyc: Vec<(usize, usize)> = (0..len).map(|i| (vs[i], vs[(i + 1) % len])).collect();
        if cyc.iter().all(|&(u, v)| !used.contains(&(u.min(v), u.max(v)))) {
            for &(u, v) in &cyc {
                used.insert((u.min(v), u.max(v)));
                arcs.push((u, v));
            }
        }
    }
    OrientedDigraph::new(n, arcs).unwrap()
}

pub fn colored(rng: &mut Rng8, n: usize, p: f64, weighted: bool) -> ColoredGraph {
    let edges = undirected(rng, n, p)
        .edges()
        .iter()
        .map(|&(u, v)| ColoredEdge {
            u,
            v,
            color: if rng.gen_bool(0.5) { Color::One } else { Color::Two },
            w: if weighted { rational(rng, 0, 6, 2) } else { int(1) },
        })
        .collect();
    ColoredGraph::new(n, edges).unwrap()
}

// ---------------------------------------------------------------- games

pub fn payoff(g: &PolymatrixGame, mask: u64, player: usize) -> Rational {
    g.graph()
        .edges()
        .iter()
        .zip(g.games())
        .map(|(&(u, v), eg)| {
            let (au, av) = (bit(mask, u), bit(mask, v));
            let mut total = int(0);
            if u == player {
                total += eg.pi_uv.rows()[au][av];
            }
            if v == player {
                total += eg.pi_vu.rows()[av][au];
            }
            total
        })
        .sum()
}

pub fn welfare(g: &PolymatrixGame, mask: u64) -> Rational {
    g.graph()
        .edges()
        .iter()
        .zip(g.games())
        .map(|(&(u, v), eg)| {
            let (au, av) = (bit(mask, u), bit(mask, v));
            eg.pi_uv.rows()[au][av] + eg.pi_vu.rows()[av][au]
        })
        .sum()
}

pub fn is_nash(g: &PolymatrixGame, mask: u64) -> bool {
    (0..g.n()).all(|i| payoff(g, mask ^ 1 << i, i) <= payoff(g, mask, i))
}

/// Potential of a potential game, rebuilt edge by edge from the payoffs:
/// `phi(1,1) = 0`, `phi(2,1) = Δu`, `phi(1,2) = Δv`, `phi(2,2)` via `u`.
pub fn potential(g: &PolymatrixGame, mask: u64) -> Option<Rational> {
    let mut total = int(0);
    for (&(u, v), eg) in g.graph().edges().iter().zip(g.games()) {
        let (pu, pv) = (eg.pi_uv.rows(), eg.pi_vu.rows());
        let phi21 = pu[1][0] - pu[0][0];
        let phi12 = pv[1][0] - pv[0][0];
        let phi22 = phi12 + pu[1][1] - pu[0][1];
        if phi22 != phi21 + pv[1][1] - pv[0][1] {
            return None;
        }
        let phi = [[int(0), phi12], [phi21, phi22]];
        total += phi[bit(mask, u)][bit(mask, v)];
    }
    Some(total)
}

/// Pure-coordination edge game: both diagonal profiles are equilibria.
pub fn pure_edge(rng: &mut Rng8) -> EdgeGame {
    let side = |rng: &mut Rng8| {
        let (m12, m21) = (small(rng), small(rng));
        let lift = |rng: &mut Rng8| if rng.gen_bool(0.3) { int(0) } else { rational(rng, 0, 5, 2) };
        Matrix2::new(m21 + lift(rng), m12, m21, m12 + lift(rng))
    };
    EdgeGame::new(side(rng), side(rng))
}

/// Pure-coordination potential edge game: `pi = phi + (term of the other
/// player's action)`, with `phi` dominant on the diagonal.
pub fn pure_potential_edge(rng: &mut Rng8) -> EdgeGame {
    let (p12, p21) = (small(rng), small(rng));
    let top = p12.max(p21);
    let lift = |rng: &mut Rng8| if rng.gen_bool(0.3) { int(0) } else { rational(rng, 0, 5, 2) };
    let phi = [[top + lift(rng), p12], [p21, top + lift(rng)]];
    let (f, h) = ([small(rng), small(rng)], [small(rng), small(rng)]);
    // u's payoff phi[a_u][a_v] + f[a_v]; v's payoff phi[a_u][a_v] + h[a_u]
    let pi_uv = Matrix2::new(phi[0][0] + f[0], phi[0][1] + f[1], phi[1][0] + f[0], phi[1][1] + f[1]);
    let pi_vu = Matrix2::new(phi[0][0] + h[0], phi[1][0] + h[1], phi[0][1] + h[0], phi[1][1] + h[1]);
    EdgeGame::new(pi_uv, pi_vu)
}

/// Anti-coordination edge game whose off-diagonal payoffs all exceed its
/// diagonal payoffs.
pub fn anti_edge(rng: &mut Rng8) -> EdgeGame {
    let side = |rng: &mut Rng8| {
        let low = |rng: &mut Rng8| rational(rng, -10, 0, 3);
        let high = |rng: &mut Rng8| rational(rng, 1, 10, 3);
        Matrix2::new(low(rng), high(rng), high(rng), low(rng))
    };
    EdgeGame::new(side(rng), side(rng))
}

/// Edge game with arbitrary payoffs.
pub fn any_edge(rng: &mut Rng8) -> EdgeGame {
    EdgeGame::new(any_matrix(rng), any_matrix(rng))
}

pub fn game_on(rng: &mut Rng8, g: &UndirectedGraph, mut edge: impl FnMut(&mut Rng8) -> EdgeGame) -> PolymatrixGame {
    let games = g.edges().iter().map(|_| edge(rng)).collect();
    PolymatrixGame::new(g.clone(), games).unwrap()
}

// ---------------------------------------------------------------- threshold games

/// A threshold player's payoff: `γ` per neighbour also playing one when it
/// plays one, `1 − γ` per neighbour also playing two when it plays two.
pub fn threshold_payoff(g: &UndirectedGraph, gamma: &[Rational], mask: u64, i: usize) -> Rational {
    let same = g.neighbors(i).filter(|&j| bit(mask, j) == bit(mask, i)).count() as i128;
    let per = if bit(mask, i) == 0 { gamma[i] } else { int(1) - gamma[i] };
    per * int(same)
}

pub fn threshold_welfare(g: &UndirectedGraph, gamma: &[Rational], mask: u64) -> Rational {
    (0..g.n()).map(|i| threshold_payoff(g, gamma, mask, i)).sum()
}

pub fn threshold_is_nash(g: &UndirectedGraph, gamma: &[Rational], mask: u64) -> bool {
    (0..g.n()).all(|i| threshold_payoff(g, gamma, mask ^ 1 << i, i) <= threshold_payoff(g, gamma, mask, i))
}

/// Best welfare over all pure Nash equilibria.
pub fn best_threshold_ne(g: &UndirectedGraph, gamma: &[Rational]) -> Rational {
    (0..1u64 << g.n())
        .filter(|&m| threshold_is_nash(g, gamma, m))
        .map(|m| threshold_welfare(g, gamma, m))
        .max()
        .expect("threshold games have pure equilibria")
}

pub fn gamma_value(rng: &mut Rng8) -> Rational {
    match rng.gen_range(0..5) {
        0 => int(0),
        1 => int(1),
        2 => ratio(1, 2),
        _ => rational(rng, 0, 1, 8),
    }
}

pub fn threshold_game(rng: &mut Rng8, n: usize, p: f64) -> ThresholdGame {
    let g = undirected(rng, n, p);
    let gamma = (0..n).map(|_| gamma_value(rng)).collect();
    ThresholdGame::new(g, gamma).unwrap()
}

pub fn two_type(rng: &mut Rng8, n: usize, p: f64, ga: Rational, gb: Rational) -> TwoTypeThreshold {
    let g = undirected(rng, n, p);
    let types = (0..n).map(|_| if rng.gen_bool(0.5) { PlayerType::A } else { PlayerType::B }).collect();
    TwoTypeThreshold::new(g, types, ga, gb).unwrap()
}

// ---------------------------------------------------------------- source problems

pub fn max_cut(g: &UndirectedGraph) -> usize {
    (0..1u64 << g.n()).map(|m| g.edges().iter().filter(|&&(u, v)| bit(m, u) != bit(m, v)).count()).max().unwrap()
}

pub fn directed_max_cut(d: &OrientedDigraph) -> usize {
    (0..1u64 << d.n())
        .map(|m| d.arcs().iter().filter(|&&(u, v)| bit(m, u) == 0 && bit(m, v) == 1).count())
        .max()
        .unwrap()
}

/// `max_X |A(X, V∖X)| − |A(V∖X, X)|`.
pub fn eulerian_closeness(d: &OrientedDigraph) -> i64 {
    (0..1u64 << d.n())
        .map(|m| {
            d.arcs()
                .iter()
                .map(|&(u, v)| match (bit(m, u), bit(m, v)) {
                    (0, 1) => 1,
                    (1, 0) => -1,
                    _ => 0,
                })
                .sum::<i64>()
        })
        .max()
        .unwrap()
}

/// Minimum number of arcs from the `s` side to the `t` side (or edges across,
/// when undirected) over all s-t partitions.
pub fn min_st_cut(n: usize, arcs: &[(usize, usize)], directed: bool, s: usize, t: usize) -> usize {
    (0..1u64 << n)
        .filter(|&m| bit(m, s) == 0 && bit(m, t) == 1)
        .map(|m| {
            arcs.iter()
                .filter(|&&(u, v)| {
                    (bit(m, u) == 0 && bit(m, v) == 1) || (!directed && bit(m, u) == 1 && bit(m, v) == 0)
                })
                .count()
        })
        .min()
        .unwrap()
}

/// Colour-one edges inside `X1` plus colour-two edges inside `X2`.
pub fn two_color_partition(g: &ColoredGraph) -> usize {
    (0..1u64 << g.n())
        .map(|m| {
            g.edges()
                .iter()
                .filter(|e| match e.color {
                    Color::One => bit(m, e.u) == 0 && bit(m, e.v) == 0,
                    Color::Two => bit(m, e.u) == 1 && bit(m, e.v) == 1,
                })
                .count()
        })
        .max()
        .unwrap()
}

/// `max_X w2(G[X]) − w1(G[X])`.
pub fn two_color_difference(g: &ColoredGraph) -> Rational {
    (0..1u64 << g.n())
        .map(|m| {
            g.edges()
                .iter()
                .filter(|e| bit(m, e.u) == 1 && bit(m, e.v) == 1)
                .map(|e| if e.color == Color::Two { e.w } else { -e.w })
                .sum::<Rational>()
        })
        .max()
        .unwrap()
}

pub fn induced(g: &UndirectedGraph, mask: u64) -> usize {
    g.edges().iter().filter(|&&(u, v)| bit(mask, u) == 1 && bit(mask, v) == 1).count()
}

/// Largest average degree `2e(W)/|W|` over non-empty `W`.
pub fn max_average_degree(g: &UndirectedGraph) -> Rational {
    (1..1u64 << g.n()).map(|m| ratio(2 * induced(g, m) as i128, m.count_ones() as i128)).max().unwrap()
}

pub fn max_density(g: &UndirectedGraph) -> Rational {
    max_average_degree(g) / int(2)
}

/// Size of a minimum hitting set of a 3-uniform hypergraph.
pub fn min_hitting_set(n: usize, edges: &[[usize; 3]]) -> usize {
    (0..1u64 << n)
        .filter(|&m| edges.iter().all(|e| e.iter().any(|&u| bit(m, u) == 1)))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// All traversals as vertex lists.
pub fn traversals(n: usize, edges: &[[usize; 3]]) -> Vec<Vec<usize>> {
    (0..1u64 << n)
        .filter(|&m| edges.iter().all(|e| e.iter().any(|&u| bit(m, u) == 1)))
        .map(|m| (0..n).filter(|&u| bit(m, u) == 1).collect())
        .collect()
}
