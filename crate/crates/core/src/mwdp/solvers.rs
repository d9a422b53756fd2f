use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mwdp::network::solve_mincut;
use crate::mwdp::{classify_family, partition_value, FamilyTag, MwdpInstance};
use crate::partition::{Partition, Side};
use crate::rational::Rational;
use crate::scan::{par_gray_scan, Best};
use crate::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    TrivialAllX1,
    TrivialAllX2,
    MinCut,
    Exact,
    LocalSearch,
}

impl Method {
    pub fn is_exact(self) -> bool {
        self != Method::LocalSearch
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub partition: Partition,
    pub value: Rational,
    pub method: Method,
    pub exact: bool,
}

impl SolveOutcome {
    /// Wraps a partition, computing its value directly from the instance.
    pub fn evaluate(inst: &MwdpInstance, partition: Partition, method: Method) -> Result<Self> {
        let value = partition_value(inst, &partition)?;
        Ok(SolveOutcome { partition, value, method, exact: method.is_exact() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialKind {
    /// Every matrix has `m11` as a maximum entry: put everything in `X1`.
    AllX1,
    /// Every matrix has `m22` as a maximum entry: put everything in `X2`.
    AllX2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolvePolicy {
    /// Largest vertex count handed to the exhaustive solver.
    pub budget: usize,
    /// Random starts of the local search (on top of the two uniform starts).
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolvePolicy {
    fn default() -> Self {
        SolvePolicy { budget: DEFAULT_BUDGET, restarts: 16, seed: 0 }
    }
}

pub fn solve_trivial(inst: &MwdpInstance, which: TrivialKind) -> Result<SolveOutcome> {
    let n = inst.n();
    let (expected, side, method) = match which {
        TrivialKind::AllX1 => ("AllB", Side::X1, Method::TrivialAllX1),
        TrivialKind::AllX2 => ("AllC", Side::X2, Method::TrivialAllX2),
    };
    for (arc, d) in inst.arc_data().iter().enumerate() {
        let ok = match which {
            TrivialKind::AllX1 => d.m.property_b(),
            TrivialKind::AllX2 => d.m.property_c(),
        };
        if !ok {
            return Err(Error::ClassificationMismatch { expected, arc });
        }
    }
    SolveOutcome::evaluate(inst, Partition::all(n, side), method)
}

struct ScanState {
    mask: u64,
    value: i128,
}

/// Exhaustive maximisation over all `2^n` partitions.
///
/// Complements are distinct solutions here, so no vertex is fixed. Ties go to
/// the lexicographically smallest side vector.
pub fn solve_exact(inst: &MwdpInstance, budget: usize) -> Result<SolveOutcome> {
    let n = inst.n();
    if n > budget || n > 62 {
        return Err(Error::BudgetExceeded { n, budget });
    }
    let (w, _) = inst.scaled_weights()?;
    check_scan_range(&w)?;
    let arcs = inst.digraph().arcs();
    let entry = |a: usize, mask: u64| {
        let (u, v) = arcs[a];
        w[a][((mask >> u & 1) * 2 + (mask >> v & 1)) as usize]
    };
    let best = par_gray_scan(
        n,
        |mask| ScanState { mask, value: (0..arcs.len()).map(|a| entry(a, mask)).sum() },
        |s, bit| {
            let old = s.mask;
            s.mask ^= 1 << bit;
            for &a in inst.digraph().incident(bit) {
                s.value += entry(a, s.mask) - entry(a, old);
            }
        },
        |s, mask, acc: &mut Best| acc.offer(s.value, mask, n),
        Best::none,
        Best::merge,
    );
    SolveOutcome::evaluate(inst, Partition::from_mask(n, best.mask), Method::Exact)
}

// keeps every partial sum of |weights| inside i128
fn check_scan_range(w: &[[i128; 4]]) -> Result<()> {
    let mut bound: i128 = 0;
    for row in w {
        for x in row {
            bound = bound.checked_add(x.checked_abs().ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
        }
    }
    bound.checked_mul(4).map(|_| ()).ok_or(Error::Overflow)
}

/// 1-flip best-improvement hill climbing from the all-`X1` start, the all-`X2`
/// start and `restarts` seeded random starts. The result is 1-flip optimal.
pub fn solve_local_search(inst: &MwdpInstance, restarts: usize, seed: u64) -> Result<SolveOutcome> {
    let n = inst.n();
    let (w, _) = inst.scaled_weights()?;
    check_scan_range(&w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = vec![vec![false; n], vec![true; n]];
    for _ in 0..restarts {
        starts.push((0..n).map(|_| rng.gen::<bool>()).collect());
    }
    let climbed: Vec<(i128, Vec<bool>)> = starts.into_par_iter().map(|s| hill_climb(inst, &w, s)).collect();
    let (_, best) = climbed
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        .expect("at least two starts");
    let partition = Partition::new(best.into_iter().map(|x| if x { Side::X2 } else { Side::X1 }).collect());
    SolveOutcome::evaluate(inst, partition, Method::LocalSearch)
}

fn hill_climb(inst: &MwdpInstance, w: &[[i128; 4]], mut x2: Vec<bool>) -> (i128, Vec<bool>) {
    let arcs = inst.digraph().arcs();
    let d = inst.digraph();
    let entry = |a: usize, x2: &[bool]| {
        let (u, v) = arcs[a];
        w[a][x2[u] as usize * 2 + x2[v] as usize]
    };
    let gain_of = |v: usize, x2: &mut Vec<bool>| -> i128 {
        let before: i128 = d.incident(v).iter().map(|&a| entry(a, x2)).sum();
        x2[v] = !x2[v];
        let after: i128 = d.incident(v).iter().map(|&a| entry(a, x2)).sum();
        x2[v] = !x2[v];
        after - before
    };
    let mut value: i128 = (0..arcs.len()).map(|a| entry(a, &x2)).sum();
    let mut gain: Vec<i128> = (0..x2.len()).map(|v| gain_of(v, &mut x2)).collect();
    while let Some((v, g)) =
        gain.iter().copied().enumerate().filter(|&(_, g)| g > 0).fold(None, |acc: Option<(usize, i128)>, (v, g)| {
            match acc {
                Some((_, bg)) if bg >= g => acc,
                _ => Some((v, g)),
            }
        })
    {
        x2[v] = !x2[v];
        value += g;
        gain[v] = -g;
        for &a in d.incident(v) {
            let (t, h) = arcs[a];
            let o = if t == v { h } else { t };
            gain[o] = gain_of(o, &mut x2);
        }
    }
    (value, x2)
}

/// Dispatches over the dichotomy: uniform partitions for `AllB` / `AllC`,
/// min cut for `AllA`, exhaustive search for small hard instances and local
/// search beyond the budget.
pub fn solve(inst: &MwdpInstance, policy: &SolvePolicy) -> Result<SolveOutcome> {
    match classify_family(inst).tag {
        FamilyTag::AllB => solve_trivial(inst, TrivialKind::AllX1),
        FamilyTag::AllC => solve_trivial(inst, TrivialKind::AllX2),
        FamilyTag::AllA => solve_mincut(inst),
        FamilyTag::Hard if inst.n() <= policy.budget.min(62) => solve_exact(inst, policy.budget),
        FamilyTag::Hard => solve_local_search(inst, policy.restarts, policy.seed),
    }
}
