//! Two-way vertex partitions and the strategy profiles they stand for.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    X1,
    X2,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::X1 => 0,
            Side::X2 => 1,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::X1 => Side::X2,
            Side::X2 => Side::X1,
        }
    }
}

/// Binary action of a player. `One` corresponds to side `X1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    One,
    Two,
}

impl Action {
    pub fn index(self) -> usize {
        match self {
            Action::One => 0,
            Action::Two => 1,
        }
    }

    pub fn flip(self) -> Action {
        match self {
            Action::One => Action::Two,
            Action::Two => Action::One,
        }
    }
}

impl From<Side> for Action {
    fn from(s: Side) -> Self {
        match s {
            Side::X1 => Action::One,
            Side::X2 => Action::Two,
        }
    }
}

impl From<Action> for Side {
    fn from(a: Action) -> Self {
        match a {
            Action::One => Side::X1,
            Action::Two => Side::X2,
        }
    }
}

/// A partition `(X1, X2)` of `0..n`.
///
/// Ordering is lexicographic on the side vector with `X1 < X2`; exact solvers
/// break ties towards the smallest partition in this order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    sides: Vec<Side>,
}

impl Partition {
    pub fn new(sides: Vec<Side>) -> Self {
        Partition { sides }
    }

    pub fn all(n: usize, side: Side) -> Self {
        Partition { sides: vec![side; n] }
    }

    /// Builds a partition from the set of vertices on side `X1`.
    pub fn from_x1(n: usize, x1: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Partition::all(n, Side::X2);
        for v in x1 {
            p.sides[v] = Side::X1;
        }
        p
    }

    /// Bit `i` of `mask` set means vertex `i` is in `X2`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let sides = (0..n).map(|i| if mask >> i & 1 == 1 { Side::X2 } else { Side::X1 }).collect();
        Partition { sides }
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.sides.len() <= 64);
        self.sides.iter().enumerate().filter(|(_, s)| **s == Side::X2).fold(0u64, |m, (i, _)| m | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn set(&mut self, v: usize, side: Side) {
        self.sides[v] = side;
    }

    pub fn flip(&mut self, v: usize) {
        self.sides[v] = self.sides[v].flip();
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn x1(&self) -> Vec<usize> {
        self.members(Side::X1)
    }

    pub fn x2(&self) -> Vec<usize> {
        self.members(Side::X2)
    }

    fn members(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&v| self.sides[v] == side).collect()
    }

    /// `0` for `X1`, `1` for `X2`, vertex by vertex.
    pub fn to_bits(&self) -> Vec<u8> {
        self.sides.iter().map(|s| s.index() as u8).collect()
    }

    pub fn to_profile(&self) -> StrategyProfile {
        StrategyProfile::new(self.sides.iter().map(|&s| s.into()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sides {
            f.write_str(if *s == Side::X1 { "1" } else { "2" })?;
        }
        Ok(())
    }
}

/// An action per player; isomorphic to [`Partition`] via `One <-> X1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrategyProfile {
    actions: Vec<Action>,
}

impl StrategyProfile {
    pub fn new(actions: Vec<Action>) -> Self {
        StrategyProfile { actions }
    }

    pub fn all(n: usize, action: Action) -> Self {
        StrategyProfile { actions: vec![action; n] }
    }

    /// Bit `i` of `mask` set means player `i` plays `Two`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Partition::from_mask(n, mask).to_profile()
    }

    pub fn to_mask(&self) -> u64 {
        self.to_partition().to_mask()
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn action(&self, player: usize) -> Action {
        self.actions[player]
    }

    pub fn set(&mut self, player: usize, action: Action) {
        self.actions[player] = action;
    }

    pub fn flip(&mut self, player: usize) {
        self.actions[player] = self.actions[player].flip();
    }

    pub fn actions(&self) -> &[Action] {
        &self.actions
    }

    pub fn plays_one(&self, player: usize) -> bool {
        self.actions[player] == Action::One
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.actions.iter().map(|&a| a.into()).collect())
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_partition().fmt(f)
    }
}
