//! Python bindings: graphs, problem instances, stable and exact solvers,
//! RNA folding and sensitivity measurement.

use pyo3::exceptions::{PyMemoryError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;
use stabledp::reductions::{build_reduction, exact_oracle, Caps, ProblemInstance};
use stabledp::rna::{nussinov_fold, nussinov_opt, rna_fold as fold, RnaInstance};
use stabledp::sensitivity::{
    exact_em as em, naive_vs_stable_comparison, sensitivity_report, ConstantSolver, ExplicitDistribution, NaiveSolver, Solver,
    StableSolver, DEFAULT_SUPPORT_CAP,
};
use stabledp::{mwc, Error, Solution, StableSolverConfig, TransitiveDag};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InstanceTooLarge { .. } | Error::SupportTooLarge { .. } => PyMemoryError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn caps_of(cap: Option<u64>) -> Caps {
    cap.map(Caps::uniform).unwrap_or_default()
}

fn config(delta: f64, seed: u64, eps: Option<f64>) -> PyResult<StableSolverConfig> {
    let config = StableSolverConfig { delta, seed, record_trace: false, eps_override: eps };
    config.validate().map_err(py_err)?;
    Ok(config)
}

/// Transitively closed DAG with nonnegative vertex weights.
#[pyclass(name = "Dag", frozen)]
struct PyDag(TransitiveDag);

#[pymethods]
impl PyDag {
    /// Closure of the given edges; raises on cycles or bad weights.
    #[new]
    fn new(weights: Vec<f64>, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        TransitiveDag::new(weights, &edges).map(PyDag).map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_edge(u, v)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    /// Exact maximum weight chain as `(vertices, weight)`.
    fn opt_chain(&self) -> (Vec<usize>, f64) {
        let chain = self.0.opt_chain(&self.0.full_universe());
        (chain.vertices, chain.total_weight)
    }

    /// Heaviest chain weight through each vertex.
    fn r_values(&self) -> Vec<f64> {
        self.0.r_values(&self.0.full_universe())
    }

    /// Stable maximum weight chain as `(vertices, weight, eps)`.
    #[pyo3(signature = (delta, seed, eps=None))]
    fn mwc(&self, delta: f64, seed: u64, eps: Option<f64>) -> PyResult<(Vec<usize>, f64, Option<f64>)> {
        let out = mwc(&self.0, &config(delta, seed, eps)?).map_err(py_err)?;
        Ok((out.chain.vertices, out.chain.total_weight, out.eps))
    }
}

/// Problem instance in the JSON instance format.
#[pyclass(name = "Instance", frozen)]
struct PyInstance(ProblemInstance);

#[pymethods]
impl PyInstance {
    /// Parses and validates an instance from a JSON string or a dict.
    #[new]
    fn new(py: Python<'_>, source: Bound<'_, PyAny>) -> PyResult<Self> {
        let text: String = if source.is_instance_of::<PyDict>() {
            py.import("json")?.call_method1("dumps", (source,))?.extract()?
        } else {
            source.extract()?
        };
        let inst: ProblemInstance = serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        inst.validate().map_err(py_err)?;
        Ok(PyInstance(inst))
    }

    #[getter]
    fn problem(&self) -> &'static str {
        self.0.name()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    fn __repr__(&self) -> String {
        format!("Instance({})", self.to_json())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).unwrap_or_default()
    }

    /// Instance with input element `index` (1-based) of part `part` removed.
    #[pyo3(signature = (index, part=0))]
    fn delete(&self, index: usize, part: usize) -> PyResult<Self> {
        let d = self.0.deletions().into_iter().find(|d| d.part == part && d.index == index);
        let d = d.ok_or_else(|| PyValueError::new_err(format!("no element {index} in part {part}")))?;
        Ok(PyInstance(self.0.delete(d)))
    }

    /// Objective value of a solution given as a list of 1-based item tuples.
    fn objective(&self, solution: Vec<Vec<usize>>) -> f64 {
        self.0.objective(&Solution::new(solution))
    }

    fn is_feasible(&self, solution: Vec<Vec<usize>>) -> bool {
        self.0.is_feasible(&Solution::new(solution))
    }

    /// DAG of the chain reduction; `list_bound` only affects RNA.
    #[pyo3(signature = (list_bound=1.0, cap=None))]
    fn reduce(&self, list_bound: f64, cap: Option<u64>) -> PyResult<PyDag> {
        build_reduction(&self.0, &caps_of(cap), list_bound).map(|r| PyDag(r.dag)).map_err(py_err)
    }
}

/// Exact optimum by the textbook dynamic program: `{"objective", "solution"}`.
#[pyfunction]
#[pyo3(signature = (instance, cap=None))]
fn oracle<'py>(py: Python<'py>, instance: &PyInstance, cap: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &exact_oracle(&instance.0, &caps_of(cap)).map_err(py_err)?)
}

/// One run of the stable solver; returns `(solution, objective)`.
#[pyfunction]
#[pyo3(signature = (instance, delta=0.3, seed=0, eps=None, cap=None))]
fn solve(instance: &PyInstance, delta: f64, seed: u64, eps: Option<f64>, cap: Option<u64>) -> PyResult<(Vec<Vec<usize>>, f64)> {
    config(delta, seed, eps)?;
    let solver = StableSolver { delta, eps_override: eps, caps: caps_of(cap) };
    let solution = solver.sample(&instance.0, &[seed]).map_err(py_err)?.remove(0);
    let objective = instance.0.objective(&solution);
    Ok((solution.items().to_vec(), objective))
}

/// Maximum pseudoknot-free folding by dynamic programming: `(count, pairs)`.
#[pyfunction]
fn nussinov(string: &str, relation: Vec<(char, char)>) -> (usize, Vec<(usize, usize)>) {
    let inst = RnaInstance::new(string, &relation);
    (nussinov_opt(&inst), nussinov_fold(&inst))
}

/// Stable RNA folding; returns the 1-based pairs.
#[pyfunction]
#[pyo3(signature = (string, relation, delta=0.3, seed=0, eps=None, cap=None))]
fn rna_fold(
    string: &str,
    relation: Vec<(char, char)>,
    delta: f64,
    seed: u64,
    eps: Option<f64>,
    cap: Option<u64>,
) -> PyResult<Vec<(usize, usize)>> {
    let inst = RnaInstance::new(string, &relation);
    Ok(fold(&inst, &config(delta, seed, eps)?, &caps_of(cap)).map_err(py_err)?.pairs)
}

/// Sensitivity report as a dict. `solver` is "stable", "naive" or "constant";
/// `compare=True` returns both the naive and stable reports.
#[pyfunction]
#[pyo3(signature = (instance, delta=0.3, samples=200, trials=20, seed=0, solver="stable", eps=None, compare=false, cap=None))]
#[allow(clippy::too_many_arguments)]
fn sensitivity<'py>(
    py: Python<'py>,
    instance: &PyInstance,
    delta: f64,
    samples: usize,
    trials: usize,
    seed: u64,
    solver: &str,
    eps: Option<f64>,
    compare: bool,
    cap: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    config(delta, seed, eps)?;
    let stable = StableSolver { delta, eps_override: eps, caps: caps_of(cap) };
    let inst = &instance.0;
    if compare {
        return to_py(py, &py.detach(|| naive_vs_stable_comparison(inst, &stable, samples, seed)).map_err(py_err)?);
    }
    let chosen: Box<dyn Solver> = match solver {
        "stable" => Box::new(stable),
        "naive" => Box::new(NaiveSolver { caps: stable.caps }),
        "constant" => Box::new(ConstantSolver(Solution::empty())),
        other => return Err(PyValueError::new_err(format!("unknown solver {other:?}"))),
    };
    to_py(py, &py.detach(|| sensitivity_report(inst, chosen.as_ref(), &stable, samples, trials, seed)).map_err(py_err)?)
}

/// Earth mover's distance under symmetric difference between two finite
/// distributions given as `[(solution, probability), ...]`.
#[pyfunction]
fn exact_em(a: Vec<(Vec<Vec<usize>>, f64)>, b: Vec<(Vec<Vec<usize>>, f64)>) -> PyResult<f64> {
    let dist = |points: Vec<(Vec<Vec<usize>>, f64)>| {
        ExplicitDistribution::new(points.into_iter().map(|(s, p)| (Solution::new(s), p))).map_err(py_err)
    };
    em(&dist(a)?, &dist(b)?, DEFAULT_SUPPORT_CAP).map_err(py_err)
}

#[pymodule]
fn stabledp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDag>()?;
    m.add_class::<PyInstance>()?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(nussinov, m)?)?;
    m.add_function(wrap_pyfunction!(rna_fold, m)?)?;
    m.add_function(wrap_pyfunction!(sensitivity, m)?)?;
    m.add_function(wrap_pyfunction!(exact_em, m)?)?;
    Ok(())
}
