//! Exact solvers for the maximum weighted digraph partition problem (MWDP)
//! and the coordination-game questions that reduce to it.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`flow`]: simple graph containers, connected components
//!   and an exact max-flow / min-cut over rationals.
//! * [`mwdp`]: instances, the matrix-family classifier and the solver suite
//!   (trivial, min-cut, exhaustive, local search) behind one dispatcher.
//! * [`polymatrix`]: binary-action polymatrix games, welfare and potential
//!   maximisation through MWDP, pure Nash equilibria.
//! * [`threshold`]: two-type threshold games, welfare-optimal equilibria and
//!   the hitting-set gadget.
//! * [`encodings`]: classic graph problems written as MWDP instances.
//! * [`formats`]: the JSON file formats used by the CLI and the bindings.
//!
//! All arithmetic on weights and payoffs is exact ([`Rational`]).

pub mod encodings;
pub mod error;
pub mod flow;
pub mod formats;
pub mod graph;
pub mod mwdp;
pub mod partition;
pub mod polymatrix;
pub mod rational;
mod scan;
pub mod threshold;

pub use error::{Error, Result};
pub use flow::{
    max_flow_min_cut, max_flow_min_cut_with, undirected_min_st_cut, Capacity, CutSide, FlowArc, FlowNetwork, MinCut,
};
pub use graph::{connected_components, OrientedDigraph, UndirectedGraph};
pub use mwdp::{
    build_cut_network, classify_family, partition_value, solve, solve_exact, solve_local_search, solve_mincut,
    solve_trivial, ArcData, CutNetwork, FamilyClass, FamilyTag, Matrix2, MatrixProperties, Method, MwdpInstance,
    SolveOutcome, SolvePolicy, TrivialKind,
};
pub use partition::{Action, Partition, Side, StrategyProfile};
pub use rational::Rational;

/// Version of this library.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of the JSON input/report formats understood by this library.
pub const FORMAT_VERSION: &str = "1";

/// Default vertex budget for exhaustive solvers.
pub const DEFAULT_BUDGET: usize = 24;
