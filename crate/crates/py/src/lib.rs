//! Python bindings. Inputs are the JSON documents the CLI reads; results
//! come back as dicts with rationals as `"p/q"` strings (feed them to
//! `fractions.Fraction`).

use coordcut::encodings::{self, Decoded, EncodedProblem};
use coordcut::formats::{self, GraphFile, ThresholdInput};
use coordcut::polymatrix::{self, GameSolution};
use coordcut::rational::format_rational;
use coordcut::threshold;
use coordcut::{Action, Error, Partition, Rational, SolvePolicy, StrategyProfile, DEFAULT_BUDGET};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::InvalidInput(_) | Error::DimensionMismatch { .. } => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn actions(s: &StrategyProfile) -> Vec<u32> {
    s.actions().iter().map(|a| if *a == Action::One { 1 } else { 2 }).collect()
}

fn put_partition(d: &Bound<'_, PyDict>, p: &Partition) -> PyResult<()> {
    d.set_item("x1", p.x1())?;
    d.set_item("x2", p.x2())
}

fn policy(budget: usize, restarts: usize, seed: u64) -> SolvePolicy {
    SolvePolicy { budget, restarts, seed }
}

/// Solve an MWDP instance: `{method, exact, value, x1, x2}`.
#[pyfunction]
#[pyo3(signature = (instance_json, budget = DEFAULT_BUDGET, restarts = 16, seed = 0))]
fn solve<'py>(
    py: Python<'py>,
    instance_json: &str,
    budget: usize,
    restarts: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let inst = formats::parse_instance(instance_json).map_err(py_err)?;
    let out = coordcut::solve(&inst, &policy(budget, restarts, seed)).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("method", out.method.to_string())?;
    d.set_item("exact", out.exact)?;
    d.set_item("value", q(&out.value))?;
    put_partition(&d, &out.partition)?;
    Ok(d)
}

/// Dichotomy verdict: `{tag, all_a, all_b, all_c, flags: [(a, b, c), ...]}`.
#[pyfunction]
fn classify<'py>(py: Python<'py>, instance_json: &str) -> PyResult<Bound<'py, PyDict>> {
    let inst = formats::parse_instance(instance_json).map_err(py_err)?;
    let class = coordcut::classify_family(&inst);
    let d = PyDict::new(py);
    d.set_item("tag", class.tag.to_string())?;
    d.set_item("all_a", class.all_a)?;
    d.set_item("all_b", class.all_b)?;
    d.set_item("all_c", class.all_c)?;
    d.set_item("flags", class.flags.iter().map(|f| (f.a, f.b, f.c)).collect::<Vec<_>>())?;
    Ok(d)
}

fn game_dict<'py>(py: Python<'py>, sol: &GameSolution) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("method", sol.method.to_string())?;
    d.set_item("exact", sol.exact)?;
    d.set_item("value", q(&sol.value))?;
    d.set_item("profile", actions(&sol.profile))?;
    Ok(d)
}

/// Welfare-maximising profile of a polymatrix game: `{method, exact, value, profile}`.
#[pyfunction]
#[pyo3(signature = (game_json, budget = DEFAULT_BUDGET, restarts = 16, seed = 0))]
fn maximize_welfare<'py>(
    py: Python<'py>,
    game_json: &str,
    budget: usize,
    restarts: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let g = formats::parse_game(game_json).map_err(py_err)?;
    let sol = polymatrix::maximize_welfare(&g, &policy(budget, restarts, seed)).map_err(py_err)?;
    game_dict(py, &sol)
}

/// Potential-maximising profile (a pure Nash equilibrium) of a polymatrix potential game.
#[pyfunction]
#[pyo3(signature = (game_json, budget = DEFAULT_BUDGET, restarts = 16, seed = 0))]
fn maximize_potential<'py>(
    py: Python<'py>,
    game_json: &str,
    budget: usize,
    restarts: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let g = formats::parse_game(game_json).map_err(py_err)?;
    let sol = polymatrix::maximize_potential(&g, &policy(budget, restarts, seed)).map_err(py_err)?;
    game_dict(py, &sol)
}

/// Welfare-optimal pure Nash equilibrium of a threshold game:
/// `{method, exact, welfare, profile, case, audit}` where `audit` is
/// `(edges, cross_edges, cut)` for the component-cut case and `None` otherwise.
#[pyfunction]
#[pyo3(signature = (threshold_json, budget = DEFAULT_BUDGET, seed = 0))]
fn threshold_ne<'py>(py: Python<'py>, threshold_json: &str, budget: usize, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match formats::parse_threshold(threshold_json).map_err(py_err)? {
        ThresholdInput::TwoType(tt) => {
            let sol = threshold::welfare_optimal_nash(&tt, budget, seed).map_err(py_err)?;
            d.set_item("method", sol.method.to_string())?;
            d.set_item("exact", sol.exact)?;
            d.set_item("welfare", q(&sol.welfare))?;
            d.set_item("profile", actions(&sol.profile))?;
            d.set_item("case", sol.case)?;
            d.set_item("audit", sol.audit.map(|a| (a.edges, a.cross_edges, q(&a.cut))))?;
        }
        ThresholdInput::General(tg) => {
            let (profile, welfare) = polymatrix::welfare_optimal_nash_exact(&threshold::to_polymatrix(&tg), budget)
                .map_err(py_err)?
                .expect("threshold games always have a pure Nash equilibrium");
            d.set_item("method", "Exact")?;
            d.set_item("exact", true)?;
            d.set_item("welfare", q(&welfare))?;
            d.set_item("profile", actions(&profile))?;
            d.set_item("case", py.None())?;
            d.set_item("audit", py.None())?;
        }
    }
    Ok(d)
}

fn encode_problem(problem: &str, input: &str) -> Result<EncodedProblem, Error> {
    let colored = || formats::parse_colored_graph(input);
    let graph = || formats::parse_json::<GraphFile>(input);
    match problem {
        "two-color-partition" => encodings::encode_two_color_partition(&colored()?),
        "two-color-difference" => encodings::encode_two_color_difference(&colored()?),
        "max-cut" => encodings::encode_max_cut(&graph()?.undirected()?),
        "directed-max-cut" => encodings::encode_directed_max_cut(&graph()?.directed()?),
        "eulerian-closeness" => encodings::encode_eulerian_closeness(&graph()?.directed()?),
        "min-st-cut" => {
            let f = graph()?;
            let (pairs, directed) = f.pairs()?;
            let (s, t) = f.terminals()?;
            encodings::encode_min_st_cut(f.n, &pairs, directed, s, t)
        }
        "max-avg-degree" => {
            let f = graph()?;
            let k = f.k.ok_or_else(|| Error::Parse { path: "k".into(), message: "missing field `k`".into() })?;
            encodings::encode_max_avg_degree_decision(&f.undirected()?, k.0)
        }
        other => Err(Error::InvalidInput(format!("unknown problem {other:?}"))),
    }
}

fn decoded_dict<'py>(py: Python<'py>, dec: &Decoded) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("problem", dec.kind.to_string())?;
    d.set_item("method", dec.method.to_string())?;
    d.set_item("exact", dec.exact)?;
    d.set_item("value", q(&dec.value))?;
    put_partition(&d, &dec.partition)?;
    d.set_item("set", dec.set.clone())?;
    Ok(d)
}

/// Solve a graph problem through its MWDP encoding. `problem` is one of
/// `max-cut`, `directed-max-cut`, `eulerian-closeness`, `min-st-cut`,
/// `two-color-partition`, `max-avg-degree`, `two-color-difference`.
#[pyfunction]
#[pyo3(signature = (problem, graph_json, budget = DEFAULT_BUDGET, restarts = 16, seed = 0))]
fn encode<'py>(
    py: Python<'py>,
    problem: &str,
    graph_json: &str,
    budget: usize,
    restarts: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let enc = encode_problem(problem, graph_json).map_err(py_err)?;
    let dec = enc.solve(&policy(budget, restarts, seed)).map_err(py_err)?;
    decoded_dict(py, &dec)
}

/// Densest subgraph: `{density, set, queries}`.
#[pyfunction]
fn max_density<'py>(py: Python<'py>, graph_json: &str) -> PyResult<Bound<'py, PyDict>> {
    let g = formats::parse_json::<GraphFile>(graph_json).and_then(|f| f.undirected()).map_err(py_err)?;
    let best = encodings::max_density_subgraph(&g, &SolvePolicy::default()).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("density", q(&best.density))?;
    d.set_item("set", best.set)?;
    d.set_item("queries", best.queries)?;
    Ok(d)
}

/// `(library version, file-format version)`.
#[pyfunction]
fn version() -> (&'static str, &'static str) {
    (coordcut::VERSION, coordcut::FORMAT_VERSION)
}

#[pymodule]
fn coordcut_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_welfare, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_potential, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_ne, m)?)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(max_density, m)?)?;
    m.add_function(wrap_pyfunction!(version, m)?)?;
    Ok(())
}
