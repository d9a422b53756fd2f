//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! measured time. Every check compares against the independent brute-force
//! oracles in `crates/core/tests/oracle`. Exits non-zero if any criterion
//! fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use coordcut::encodings::{
    encode_directed_max_cut, encode_eulerian_closeness, encode_max_avg_degree_decision, encode_max_cut,
    encode_min_st_cut, encode_two_color_difference, encode_two_color_partition, max_density_subgraph, ProblemKind,
};
use coordcut::polymatrix::{
    derive_pairwise_potential, maximize_potential, maximize_welfare, potential_mwdp, social_welfare, total_potential,
    welfare_mwdp, PolymatrixGame,
};
use coordcut::rational::{int, ratio};
use coordcut::threshold::{
    build_hitting_set_gadget, clique_a_loss_bound, clique_b_loss_bound, nash_ratio_check, solve_case3, to_polymatrix,
    GadgetConstants, HittingSetGadget, Hypergraph3,
};
use coordcut::{
    build_cut_network, classify_family, max_flow_min_cut, partition_value, solve_exact, solve_mincut, solve_trivial,
    Capacity, FamilyTag, FlowArc, FlowNetwork, Matrix2, Method, MwdpInstance, Rational, SolvePolicy, StrategyProfile,
    TrivialKind, UndirectedGraph,
};
use oracle::{bit, mask_of, partition_of, profile_of, prop_a, prop_b, prop_c, rng, IntInstance, Rng8};
use rand::seq::index::sample;
use rand::Rng;

type Verdict = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Sizes `lo..=hi` cycled over `count` cases, so the largest size is always hit.
fn sizes(count: usize, lo: usize, hi: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..count).map(move |i| (i, lo + i % (hi - lo + 1)))
}

// ---------------------------------------------------------------- 1

/// Entry in `[−10, 10]` with denominator at most 4.
fn entry(r: &mut Rng8) -> Rational {
    oracle::rational(r, -10, 10, 4)
}

fn bounded_matrix(r: &mut Rng8, kind: u8) -> Matrix2 {
    loop {
        let (m11, m12, m21, m22) = (entry(r), entry(r), entry(r), entry(r));
        let top = m11.max(m12).max(m21).max(m22);
        let m = match kind {
            // raise m11 or m22 to the top entry, or m22 to the (a) bound
            0 => Matrix2::new(top, m12, m21, m22),
            1 => Matrix2::new(m11, m12, m21, top),
            2 => Matrix2::new(m11, m12, m21, m22.max(m12 + m21 - m11)),
            _ => Matrix2::new(m11, m12, m21, m22),
        };
        if m.rows().iter().flatten().all(|x| *x >= int(-10) && *x <= int(10)) {
            return m;
        }
    }
}

fn criterion_1() -> Verdict {
    let mut r = rng(1);
    let mut tags = [0usize; 4];
    for _ in 0..1000 {
        let k = r.gen_range(1..=6);
        let style = r.gen_range(0..5u8);
        let ms: Vec<Matrix2> = (0..k)
            .map(|_| {
                let kind = if style == 4 { r.gen_range(0..4) } else { style };
                bounded_matrix(&mut r, kind)
            })
            .collect();
        let arcs = ms.iter().enumerate().map(|(i, m)| (i, i + 1, oracle::weight(&mut r), *m)).collect();
        let inst = MwdpInstance::from_arcs(k + 1, arcs).unwrap();
        let class = classify_family(&inst);
        for (f, m) in class.flags.iter().zip(&ms) {
            check!((f.a, f.b, f.c) == (prop_a(m), prop_b(m), prop_c(m)), "flags {f:?} wrong for {m:?}");
        }
        let (a, b, c) = (ms.iter().all(prop_a), ms.iter().all(prop_b), ms.iter().all(prop_c));
        check!((class.all_a, class.all_b, class.all_c) == (a, b, c), "family flags wrong for {ms:?}");
        let tag = if b {
            FamilyTag::AllB
        } else if c {
            FamilyTag::AllC
        } else if a {
            FamilyTag::AllA
        } else {
            FamilyTag::Hard
        };
        check!(class.tag == tag, "tag {:?}, expected {tag:?} for {ms:?}", class.tag);
        check!(tag.is_tractable() == (tag != FamilyTag::Hard), "tractability of {tag:?}");
        tags[tag as usize] += 1;
    }
    Ok(format!("1000 families: {} AllA, {} AllB, {} AllC, {} Hard", tags[0], tags[1], tags[2], tags[3]))
}

// ---------------------------------------------------------------- 2

fn criterion_2() -> Verdict {
    let mut r = rng(2);
    for (i, n) in sizes(200, 1, 12) {
        let inst = oracle::instance_with(&mut r, n, 0.5, oracle::matrix_a);
        let net = build_cut_network(&inst).unwrap();
        let value = IntInstance::new(&inst);
        for _ in 0..50 {
            let mask = r.gen_range(0..1u64 << n);
            let cut = net.cut_for(&partition_of(n, mask));
            // crossing weight recomputed from the network's edge list
            let crossing: Rational = (0..net.graph.edge_count())
                .filter(|&e| {
                    let (u, v) = net.graph.edges()[e];
                    cut.side(u) != cut.side(v)
                })
                .map(|e| net.graph.weight(e))
                .sum();
            let want = -value.value(mask) - int(n as i128) * net.theta;
            check!(crossing == want, "instance {i}, mask {mask:b}: cut {crossing} != {want}");
            check!(net.cut_weight(&cut) == want, "instance {i}: library cut weight disagrees");
        }
    }
    Ok("200 instances x 50 cuts".into())
}

// ---------------------------------------------------------------- 3

fn criterion_3() -> Verdict {
    let mut r = rng(3);
    for (i, n) in sizes(200, 1, 14) {
        let inst = oracle::instance_with(&mut r, n, 0.5, oracle::matrix_a);
        let mc = solve_mincut(&inst).unwrap();
        let ex = solve_exact(&inst, 24).unwrap();
        let (best, _) = IntInstance::new(&inst).optimum();
        check!(mc.value == ex.value, "instance {i} (n = {n}): mincut {} vs exact {}", mc.value, ex.value);
        check!(ex.value == best, "instance {i}: exact {} vs enumeration {best}", ex.value);
        check!(partition_value(&inst, &mc.partition).unwrap() == mc.value, "instance {i}: partition value");
    }
    Ok("200 instances, n <= 14".into())
}

// ---------------------------------------------------------------- 4

fn criterion_4() -> Verdict {
    let mut r = rng(4);
    for (kind, gen, name) in [
        (TrivialKind::AllX1, oracle::matrix_b as fn(&mut Rng8) -> Matrix2, "AllB"),
        (TrivialKind::AllX2, oracle::matrix_c, "AllC"),
    ] {
        for (i, n) in sizes(200, 1, 14) {
            let inst = oracle::instance_with(&mut r, n, 0.5, gen);
            let t = solve_trivial(&inst, kind).unwrap();
            let ex = solve_exact(&inst, 24).unwrap();
            check!(t.value == ex.value, "{name} instance {i}: trivial {} vs exact {}", t.value, ex.value);
            check!(t.value == IntInstance::new(&inst).optimum().0, "{name} instance {i}: enumeration disagrees");
        }
    }
    Ok("200 AllB + 200 AllC instances, n <= 14".into())
}

// ---------------------------------------------------------------- 5

fn criterion_5() -> Verdict {
    let mut r = rng(5);
    let mut potential_games = 0;
    for (i, n) in sizes(100, 1, 10) {
        let graph = oracle::undirected(&mut r, n, 0.5);
        let g = match i % 3 {
            0 => oracle::game_on(&mut r, &graph, oracle::any_edge),
            1 => oracle::game_on(&mut r, &graph, oracle::pure_potential_edge),
            _ => oracle::game_on(&mut r, &graph, oracle::anti_edge),
        };
        let welfare = welfare_mwdp(&g).unwrap().instance;
        let is_potential = oracle::potential(&g, 0).is_some();
        let potential = potential_mwdp(&g);
        check!(potential.is_ok() == is_potential, "game {i}: potential detection");
        potential_games += is_potential as usize;
        for m in 0..1u64 << n {
            let p = partition_of(n, m);
            let w = oracle::welfare(&g, m);
            check!(partition_value(&welfare, &p).unwrap() == w, "game {i}, profile {m:b}: welfare");
            if let Ok(red) = &potential {
                let phi = oracle::potential(&g, m).unwrap();
                check!(partition_value(&red.instance, &p).unwrap() == phi, "game {i}, profile {m:b}: potential");
            }
        }
    }
    Ok(format!("100 games ({potential_games} potential), all profiles"))
}

// ---------------------------------------------------------------- 6

fn criterion_6() -> Verdict {
    let mut r = rng(6);
    let policy = SolvePolicy::default();
    for (i, n) in sizes(200, 2, 12) {
        let graph = oracle::undirected(&mut r, n, 0.5);
        let g = if i % 2 == 0 {
            oracle::game_on(&mut r, &graph, oracle::pure_edge)
        } else {
            oracle::game_on(&mut r, &graph, oracle::pure_potential_edge)
        };
        for (e, eg) in g.games().iter().enumerate() {
            check!(
                eg.is_nash_at(coordcut::Action::One, coordcut::Action::One),
                "game {i} edge {e} is not pure coordination"
            );
            check!(
                eg.is_nash_at(coordcut::Action::Two, coordcut::Action::Two),
                "game {i} edge {e} is not pure coordination"
            );
            check!(prop_a(&eg.welfare_matrix()), "game {i} edge {e}: welfare matrix violates (a)");
            if let Ok(p) = derive_pairwise_potential(eg) {
                check!(prop_a(&p.phi), "game {i} edge {e}: potential matrix violates (a)");
            }
        }
        let w = maximize_welfare(&g, &policy).unwrap();
        check!(w.method == Method::MinCut, "game {i}: welfare via {}", w.method);
        let best = (0..1u64 << n).map(|m| oracle::welfare(&g, m)).max().unwrap();
        check!(
            w.value == best && social_welfare(&g, &w.profile).unwrap() == best,
            "game {i}: welfare {} vs {best}",
            w.value
        );
        if oracle::potential(&g, 0).is_some() {
            let p = maximize_potential(&g, &policy).unwrap();
            check!(p.method == Method::MinCut, "game {i}: potential via {}", p.method);
            let best = (0..1u64 << n).map(|m| oracle::potential(&g, m).unwrap()).max().unwrap();
            check!(
                p.value == best && total_potential(&g, &p.profile).unwrap() == best,
                "game {i}: potential {} vs {best}",
                p.value
            );
            check!(oracle::is_nash(&g, p.profile.to_mask()), "game {i}: potential maximiser is not an equilibrium");
        }
    }
    Ok("200 games, n <= 12".into())
}

// ---------------------------------------------------------------- 7

fn criterion_7() -> Verdict {
    let mut r = rng(7);
    for (i, n) in sizes(100, 2, 14) {
        let g: PolymatrixGame = loop {
            let graph = oracle::undirected(&mut r, n, 0.4);
            if graph.edge_count() > 0 {
                break oracle::game_on(&mut r, &graph, oracle::anti_edge);
            }
        };
        for eg in g.games() {
            check!(eg.is_nash_at(coordcut::Action::One, coordcut::Action::Two), "game {i} is not anti-coordination");
            check!(eg.is_nash_at(coordcut::Action::Two, coordcut::Action::One), "game {i} is not anti-coordination");
            check!(!prop_a(&eg.welfare_matrix()), "game {i}: welfare matrix satisfies (a)");
        }
        let inst = welfare_mwdp(&g).unwrap().instance;
        check!(classify_family(&inst).tag == FamilyTag::Hard, "game {i}: classified {:?}", classify_family(&inst).tag);
        let ex = solve_exact(&inst, 24).unwrap();
        let best = (0..1u64 << n).map(|m| oracle::welfare(&g, m)).max().unwrap();
        check!(ex.value == best, "game {i} (n = {n}): exact {} vs enumeration {best}", ex.value);
        check!(oracle::welfare(&g, mask_of(&ex.partition)) == best, "game {i}: returned profile is not optimal");
    }
    Ok("100 games, n <= 14".into())
}

// ---------------------------------------------------------------- 8

fn criterion_8() -> Verdict {
    let mut r = rng(8);
    let mut equilibria = 0;
    for (i, n) in sizes(100, 1, 12) {
        let tg = oracle::threshold_game(&mut r, n, 0.5);
        let poly = to_polymatrix(&tg);
        for m in 0..1u64 << n {
            let s = profile_of(n, m);
            let ratio_ok = nash_ratio_check(&tg, &s).unwrap();
            let generic = coordcut::polymatrix::is_pure_nash(&poly, &s).unwrap().is_nash;
            check!(ratio_ok == generic, "game {i}, profile {m:b}: ratio {ratio_ok} vs generic {generic}");
            check!(generic == oracle::threshold_is_nash(tg.graph(), tg.gamma(), m), "game {i}, profile {m:b}: oracle");
            equilibria += generic as usize;
        }
    }
    Ok(format!("100 games, n <= 12, {equilibria} equilibria seen"))
}

// ---------------------------------------------------------------- 9

fn criterion_9() -> Verdict {
    let mut r = rng(9);
    for (i, n) in sizes(100, 1, 14) {
        let p = r.gen_range(0.15..0.6);
        let tt = oracle::two_type(&mut r, n, p, int(1), int(0));
        let tg = tt.to_threshold();
        let (profile, audit) = solve_case3(&tt).unwrap();
        let best = oracle::best_threshold_ne(tg.graph(), tg.gamma());
        let edges = tg.graph().edge_count() as i128;
        let cross = tg.graph().edges().iter().filter(|&&(u, v)| tt.types()[u] != tt.types()[v]).count() as i128;
        check!(audit.welfare() == best, "graph {i} (n = {n}): component cut {} vs enumeration {best}", audit.welfare());
        check!(
            best == int(2 * edges) - int(cross) - audit.cut,
            "graph {i}: {best} != 2*{edges} - {cross} - {}",
            audit.cut
        );
        check!((audit.edges as i128, audit.cross_edges as i128) == (edges, cross), "graph {i}: audit counts");
        check!(oracle::threshold_is_nash(tg.graph(), tg.gamma(), profile.to_mask()), "graph {i}: not an equilibrium");
        check!(
            oracle::threshold_welfare(tg.graph(), tg.gamma(), profile.to_mask()) == best,
            "graph {i}: profile welfare"
        );
    }
    Ok("100 graphs, n <= 14".into())
}

// ---------------------------------------------------------------- 10

fn clique(n: usize) -> UndirectedGraph {
    UndirectedGraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()).unwrap()
}

/// `loss(q) ≥ min{f(1), f(a)}` holds for every γ (the loss is concave in the
/// number `q` of deviating players) and is attained; the uniform profile is
/// the unique optimum exactly when the bound is positive, which is the case
/// on the lemma's hypothesis.
fn check_clique(a: usize, gamma: Rational, uniform: u64, bound: Rational, formula: Rational, hyp: bool) -> Verdict {
    check!(bound == formula, "a = {a}, gamma = {gamma}: bound {bound} vs formula {formula}");
    let g = clique(a);
    let gammas = vec![gamma; a];
    let opt = oracle::threshold_welfare(&g, &gammas, uniform);
    let losses: Vec<Rational> =
        (0..1u64 << a).filter(|&m| m != uniform).map(|m| opt - oracle::threshold_welfare(&g, &gammas, m)).collect();
    let least = *losses.iter().min().unwrap();
    check!(least == bound, "a = {a}, gamma = {gamma}: least loss {least} vs bound {bound}");
    if hyp {
        check!(bound > int(0), "a = {a}, gamma = {gamma}: bound not positive");
    }
    Ok(String::new())
}

fn criterion_10() -> Verdict {
    let mut points = 0;
    let mut hyp_a = 0;
    let mut hyp_b = 0;
    let grid: Vec<Rational> = (0..=8).map(|j| ratio(j, 8)).collect();
    for a in 2..=8usize {
        let all_two = (1u64 << a) - 1;
        let q = int(a as i128);
        for &g in &grid {
            let in_a = ratio(1, 2) < g;
            let formula_a = (int(2) * g * (q - int(1))).min(q * (q - int(1)) * (int(2) * g - int(1)));
            check_clique(a, g, 0, clique_a_loss_bound(a as u64, g), formula_a, in_a)?;
            let in_b = g < ratio(1, 2);
            let formula_b = (int(2) * (int(1) - g) * (q - int(1))).min(q * (q - int(1)) * (int(1) - int(2) * g));
            check_clique(a, g, all_two, clique_b_loss_bound(a as u64, g), formula_b, in_b)?;
            points += 2;
            hyp_a += in_a as usize;
            hyp_b += in_b as usize;
        }
    }
    Ok(format!(
        "{points} (size, gamma) checks on the 0..=8/8 grid; {hyp_a} A and {hyp_b} B points inside the hypotheses"
    ))
}

// ---------------------------------------------------------------- 11

/// Least positive integer `x` with `pred(x)`, by direct search.
fn least(from: u64, pred: impl Fn(u64) -> bool) -> u64 {
    (from..).find(|&x| pred(x)).unwrap()
}

/// The construction constants re-derived by direct search.
fn constants_hold(c: &GadgetConstants, n: usize, m: usize, ga: Rational, gb: Rational) -> Result<(), String> {
    let (one, two) = (int(1), int(2));
    let qm = int(m as i128);
    let q = |v: u64| int(v as i128);
    let z = (int(3) * qm * (one - gb) / (gb * (one - two * gb))).ceil();
    check!(q(c.z) == z, "(f): z = {} vs {z}", c.z);
    check!(q(c.theta) == int(6) * qm + two * int(n as i128) * z, "(a): theta = {}", c.theta);
    let x_b = least(1, |x| q(x) * (one - gb) * (ga - gb) / gb > q(c.theta));
    check!(c.x_b == x_b, "(b): x_B = {} vs {x_b}", c.x_b);
    let upper = q(c.x_b + 3) * (one - gb) / gb;
    check!(
        upper - one / gb < q(c.x_a) && q(c.x_a) < upper,
        "(c): x_A = {} outside ({}, {upper})",
        c.x_a,
        upper - one / gb
    );
    let rhs = q(c.theta) + two * qm * q(c.x_a + c.x_b);
    let c_a = least(c.x_a, |x| (q(x) - one) * (two * ga - one) > rhs);
    check!(c.c_a == c_a, "(d): c_A = {} vs {c_a}", c.c_a);
    let c_b = least(c.x_b, |x| (q(x) - one) * (one - two * gb) > rhs && (q(x) - one) / qm >= gb / (one - gb));
    check!(c.c_b == c_b, "(e): c_B = {} vs {c_b}", c.c_b);
    Ok(())
}

/// Social welfare and the Nash property evaluated edge by edge from the
/// gadget's edge list, using only the threshold payoff definition.
fn direct_evaluation(gadget: &HittingSetGadget, s: &StrategyProfile, ga: Rational, gb: Rational) -> (Rational, bool) {
    let n = gadget.vertex_count();
    let ca = gadget.constants().c_a as usize;
    let gamma = |v: usize| if v < ca { ga } else { gb };
    let mut ones = vec![0u64; n];
    let mut twos = vec![0u64; n];
    // welfare by (number of type-A endpoints, action) classes
    let mut same = [[0u64; 3]; 2];
    for (u, v) in gadget.edges() {
        let (au, av) = (s.action(u), s.action(v));
        for (x, ay) in [(u, av), (v, au)] {
            if ay == coordcut::Action::One {
                ones[x] += 1;
            } else {
                twos[x] += 1;
            }
        }
        if au == av {
            same[au.index()][(u < ca) as usize + (v < ca) as usize] += 1;
        }
    }
    let mut welfare = int(0);
    for k in 0..3u64 {
        let (na, nb) = (int(k as i128), int(2 - k as i128));
        welfare += int(same[0][k as usize] as i128) * (na * ga + nb * gb);
        welfare += int(same[1][k as usize] as i128) * (na * (int(1) - ga) + nb * (int(1) - gb));
    }
    let nash = (0..n).all(|v| {
        let (stay, switch) = if s.plays_one(v) {
            (gamma(v) * int(ones[v] as i128), (int(1) - gamma(v)) * int(twos[v] as i128))
        } else {
            ((int(1) - gamma(v)) * int(twos[v] as i128), gamma(v) * int(ones[v] as i128))
        };
        stay >= switch
    });
    (welfare, nash)
}

fn hypergraphs(n: usize, max_edges: usize) -> Vec<Vec<[usize; 3]>> {
    let triples: Vec<[usize; 3]> =
        (0..n).flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))).collect();
    let mut out = Vec::new();
    for mask in 1u64..1 << triples.len() {
        if mask.count_ones() as usize <= max_edges {
            out.push((0..triples.len()).filter(|&i| bit(mask, i) == 1).map(|i| triples[i]).collect());
        }
    }
    out
}

fn criterion_11() -> Verdict {
    let (ga, gb) = (ratio(3, 4), ratio(1, 4));
    let mut cases: Vec<(usize, Vec<[usize; 3]>)> = Vec::new();
    for n in 3..=5 {
        cases.extend(hypergraphs(n, 3).into_iter().map(|h| (n, h)));
    }
    let mut r = rng(11);
    for _ in 0..10 {
        let n = r.gen_range(6..=8);
        let m = r.gen_range(1..=3);
        let mut edges: Vec<[usize; 3]> = (0..m)
            .map(|_| {
                let mut e = sample(&mut r, n, 3).into_vec();
                e.sort_unstable();
                [e[0], e[1], e[2]]
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        cases.push((n, edges));
    }
    let (mut traversals, mut direct, mut generic) = (0, 0, 0);
    for (n, edges) in &cases {
        let (n, m) = (*n, edges.len());
        let h = Hypergraph3::new(n, edges.clone()).unwrap();
        let gadget = build_hitting_set_gadget(&h, ga, gb).unwrap();
        let c = *gadget.constants();
        constants_hold(&c, n, m, ga, gb).map_err(|e| format!("{edges:?}: {e}"))?;
        check!(c.violations(&h, ga, gb).is_empty(), "{edges:?}: library reports violations");
        let z = int(c.z as i128);
        let best = oracle::min_hitting_set(n, edges);
        // the materialised game for the smallest gadget goes through the generic threshold code
        let materialised = (m == 1 && n == 3).then(|| gadget.to_two_type_threshold(3_000_000).unwrap().to_threshold());
        let mut w_opt: Option<(Rational, usize)> = None;
        for t in oracle::traversals(n, edges) {
            traversals += 1;
            let s = gadget.g_extension(&t).unwrap();
            check!(gadget.nash_ratio_check(&s).unwrap(), "{edges:?}, T = {t:?}: G-extension is not an equilibrium");
            let w = gadget.welfare(&s).unwrap();
            let claimed = gadget.claim_d_welfare(&t).unwrap();
            check!(claimed == w, "{edges:?}, T = {t:?}: formula {claimed} vs structured welfare {w}");
            let eps = gadget.epsilon(&t).unwrap();
            check!(eps >= int(0) && eps < int(2) * z * (int(1) - int(2) * gb), "{edges:?}, T = {t:?}: epsilon {eps}");
            let full_direct = m == 1 && n <= 4;
            if full_direct || (m == 1 && t.len() == best) {
                let (dw, dn) = direct_evaluation(&gadget, &s, ga, gb);
                check!(dw == claimed && dn, "{edges:?}, T = {t:?}: direct welfare {dw} (nash {dn}) vs {claimed}");
                direct += 1;
            }
            if let Some(tg) = &materialised {
                check!(
                    coordcut::threshold::threshold_welfare(tg, &s).unwrap() == claimed,
                    "{edges:?}: generic welfare"
                );
                check!(nash_ratio_check(tg, &s).unwrap(), "{edges:?}: generic ratio check");
                generic += 1;
            }
            if w_opt.is_none_or(|(bw, _)| w > bw) {
                w_opt = Some((w, t.len()));
            }
        }
        let (w, size) = w_opt.unwrap();
        check!(size == best, "{edges:?}: best extension has |T| = {size}, minimum is {best}");
        let recovered = gadget.traversal_from_welfare(w);
        check!(recovered == best as i128, "{edges:?}: recovered {recovered}, minimum is {best}");
    }
    Ok(format!(
        "{} hypergraphs, {traversals} traversals; {direct} checked edge by edge, {generic} through the materialised game",
        cases.len()
    ))
}

// ---------------------------------------------------------------- 12

fn flow_st_cut(n: usize, arcs: &[(usize, usize)], directed: bool, s: usize, t: usize) -> Rational {
    let mut flow_arcs = Vec::new();
    for &(u, v) in arcs {
        flow_arcs.push(FlowArc { tail: u, head: v, capacity: Capacity::Finite(int(1)) });
        if !directed {
            flow_arcs.push(FlowArc { tail: v, head: u, capacity: Capacity::Finite(int(1)) });
        }
    }
    max_flow_min_cut(&FlowNetwork::new(n, s, t, flow_arcs).unwrap()).unwrap().value
}

fn criterion_12() -> Verdict {
    let mut r = rng(12);
    let policy = SolvePolicy::default();
    let mut seen = std::collections::BTreeSet::new();
    let mut note = |k: ProblemKind| {
        seen.insert(format!("{k}"));
    };
    for (i, n) in sizes(40, 1, 12) {
        let g = oracle::undirected(&mut r, n, 0.4);
        let d = oracle::oriented(&mut r, n, 0.4);

        let dec = encode_max_cut(&g).unwrap().solve(&policy).unwrap();
        check!(dec.value == int(oracle::max_cut(&g) as i128), "max cut {i}");
        note(dec.kind);
        let dec = encode_directed_max_cut(&d).unwrap().solve(&policy).unwrap();
        check!(dec.value == int(oracle::directed_max_cut(&d) as i128), "directed max cut {i}");
        note(dec.kind);
        let dec = encode_eulerian_closeness(&d).unwrap().solve(&policy).unwrap();
        check!(dec.value == int(oracle::eulerian_closeness(&d) as i128), "eulerian closeness {i}");
        note(dec.kind);
        let cycles = r.gen_range(0..=4);
        let e = oracle::eulerian(&mut r, n.max(3), cycles);
        let dec = encode_eulerian_closeness(&e).unwrap().solve(&policy).unwrap();
        check!(dec.value == int(0), "eulerian digraph {i}: closeness {}", dec.value);

        if n >= 2 {
            let (s, t) = (0, n - 1);
            for directed in [true, false] {
                let arcs = if directed { d.arcs().to_vec() } else { g.edges().to_vec() };
                let dec = encode_min_st_cut(n, &arcs, directed, s, t).unwrap().solve(&policy).unwrap();
                let want = int(oracle::min_st_cut(n, &arcs, directed, s, t) as i128);
                check!(dec.value == want, "min st cut {i} (directed {directed}): {} vs {want}", dec.value);
                check!(dec.value == flow_st_cut(n, &arcs, directed, s, t), "min st cut {i}: max flow disagrees");
                note(dec.kind);
            }
        }

        let cg = oracle::colored(&mut r, n, 0.5, false);
        let dec = encode_two_color_partition(&cg).unwrap().solve(&policy).unwrap();
        check!(dec.value == int(oracle::two_color_partition(&cg) as i128), "two-colour partition {i}");
        note(dec.kind);
        let cg = oracle::colored(&mut r, n, 0.5, true);
        let dec = encode_two_color_difference(&cg).unwrap().solve(&policy).unwrap();
        check!(dec.value == oracle::two_color_difference(&cg), "two-colour difference {i}");
        note(dec.kind);

        let k = oracle::rational(&mut r, 0, n as i128, 3);
        let dec = encode_max_avg_degree_decision(&g, k).unwrap().solve(&policy).unwrap();
        let best = oracle::max_average_degree(&g);
        check!(dec.set.is_some() == (best > k), "average degree {i}: answer for k = {k} (best {best})");
        if let Some(w) = &dec.set {
            let mask = w.iter().fold(0u64, |acc, &v| acc | 1 << v);
            check!(
                dec.value > k && dec.value == ratio(2 * oracle::induced(&g, mask) as i128, w.len() as i128),
                "average degree {i}: witness"
            );
        }
        note(dec.kind);

        let dense = max_density_subgraph(&g, &policy).unwrap();
        check!(
            dense.density == oracle::max_density(&g),
            "density {i}: {} vs {}",
            dense.density,
            oracle::max_density(&g)
        );
    }
    let triangle = UndirectedGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let dense = max_density_subgraph(&triangle, &policy).unwrap();
    check!(dense.density == int(1), "triangle density {}", dense.density);
    check!(seen.len() == 8, "decoders exercised: {seen:?}");
    Ok("8 decoders on 40 inputs each, n <= 12; triangle density 1".into())
}

// ---------------------------------------------------------------- 13

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coordcut"))
        .args(args)
        .env_remove("COORDCUT_BUDGET")
        .output()
        .expect("the coordcut binary runs")
}

fn criterion_13() -> Verdict {
    let runs: &[(&[&str], &str)] = &[
        (&["solve"], "alla.json"),
        (&["solve"], "maxcut_family.json"),
        (&["classify"], "maxcut_family.json"),
        (&["game-welfare"], "coordination_game.json"),
        (&["game-potential"], "coordination_game.json"),
        (&["threshold-ne"], "threshold_case3.json"),
        (&["threshold-ne"], "threshold_hard.json"),
        (&["encode", "--problem", "max-cut"], "triangle.json"),
        (&["encode", "--problem", "max-avg-degree"], "triangle.json"),
        (&["encode", "--problem", "min-st-cut"], "st_path.json"),
        (&["encode", "--problem", "two-color-difference"], "colored.json"),
        (&["density"], "triangle.json"),
        (&["gadget"], "hyperedge.json"),
    ];
    let mut compared = 0;
    for (cmd, file) in runs {
        for format in ["json", "text", "dot"] {
            if cmd[0] == "gadget" && format == "dot" {
                continue;
            }
            let path = fixture(file);
            let mut outputs = Vec::new();
            for threads in ["1", "2", "4"] {
                let mut args = cmd.to_vec();
                args.extend(["--input", &path, "--format", format, "--seed", "7", "--threads", threads]);
                let out = cli(&args);
                check!(out.status.success(), "{cmd:?} {file} {format}: exit {:?}", out.status.code());
                outputs.push(out.stdout);
            }
            check!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd:?} {file} {format}: outputs differ between runs");
            compared += 1;
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let unwritable = dir.path().join("missing").join("out.json");
    let unwritable = unwritable.to_string_lossy().into_owned();
    let codes: Vec<(Vec<String>, i32)> = vec![
        (vec!["solve".into(), "--input".into(), fixture("alla.json")], 0),
        (vec!["solve".into(), "--input".into(), fixture("bad_field.json")], 2),
        (vec!["solve".into(), "--input".into(), fixture("not_json.json")], 2),
        (vec!["game-welfare".into(), "--input".into(), fixture("alla.json")], 2),
        (vec!["solve".into(), "--budget".into(), "0".into(), "--input".into(), fixture("alla.json")], 2),
        (vec!["game-potential".into(), "--input".into(), fixture("pennies.json")], 3),
        (vec!["gadget".into(), "--budget".into(), "2".into(), "--input".into(), fixture("hyperedge.json")], 3),
        (vec!["solve".into(), "--input".into(), "/nonexistent/instance.json".into()], 4),
        (vec!["solve".into(), "--input".into(), fixture("alla.json"), "--output".into(), unwritable], 4),
    ];
    for (args, want) in &codes {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = cli(&args).status.code();
        check!(got == Some(*want), "{args:?}: exit {got:?}, expected {want}");
    }
    Ok(format!("{compared} command/format pairs byte-identical over 3 runs; {} exit codes", codes.len()))
}

// ---------------------------------------------------------------- driver

struct Criterion {
    id: u8,
    name: &'static str,
    limit_secs: Option<f64>,
    run: fn() -> Verdict,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "family classifier flags", limit_secs: Some(1.0), run: criterion_1 },
    Criterion { id: 2, name: "cut network identity", limit_secs: Some(10.0), run: criterion_2 },
    Criterion { id: 3, name: "min-cut solver optimality", limit_secs: Some(60.0), run: criterion_3 },
    Criterion { id: 4, name: "trivial solvers", limit_secs: None, run: criterion_4 },
    Criterion { id: 5, name: "welfare and potential reductions", limit_secs: Some(60.0), run: criterion_5 },
    Criterion { id: 6, name: "pure-coordination structure", limit_secs: None, run: criterion_6 },
    Criterion { id: 7, name: "anti-coordination hard path", limit_secs: None, run: criterion_7 },
    Criterion { id: 8, name: "ratio Nash check", limit_secs: None, run: criterion_8 },
    Criterion { id: 9, name: "component-cut case", limit_secs: None, run: criterion_9 },
    Criterion { id: 10, name: "clique loss bounds", limit_secs: None, run: criterion_10 },
    Criterion { id: 11, name: "hitting-set gadget soundness", limit_secs: Some(120.0), run: criterion_11 },
    Criterion { id: 12, name: "problem encodings", limit_secs: Some(60.0), run: criterion_12 },
    Criterion { id: 13, name: "CLI determinism and exit codes", limit_secs: None, run: criterion_13 },
];

fn main() {
    // a filter argument (as passed by `cargo test -- <filter>`) selects criteria by number
    let filter: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let mut ran = 0;
    for c in CRITERIA.iter().filter(|c| filter.is_empty() || filter.contains(&c.id)) {
        ran += 1;
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        let verdict = match (verdict, c.limit_secs) {
            (Ok(d), Some(limit)) if secs >= limit => Err(format!("{d}; over the {limit} s limit")),
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("criterion {:>2}: PASS  {} [{:.2} s] {}", c.id, c.name, secs, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {} [{:.2} s] {}", c.id, c.name, secs, why);
            }
        }
    }
    println!("{} of {} criteria passed", ran - failed, ran);
    if failed > 0 {
        std::process::exit(1);
    }
}
