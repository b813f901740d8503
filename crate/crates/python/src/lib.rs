//! Python bindings for hyperlab.
//!
//! ```text
//! import pyhyperlab as hl
//! h = hl.sigma_hypergraph(3, 4, 5, [3, 1])
//! chi, witness = hl.chromatic_number(h)
//! ```

use hyperlab::constructors::build_sigma_hypergraph_guarded;
use hyperlab::harness::{run_suite, Suite, SuiteSettings, VerificationReport};
use hyperlab::io;
use hyperlab::{
    enumerate_partitions, ConstructError, EdgeRule, ExtensionParams, Limits, Partition, SigmaMeta, Solver, SolverError,
    Spectrum, VertexSet,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    pyhyperlab,
    SizeGuardError,
    PyValueError,
    "Instance exceeds the vertex size guard."
);

fn to_py(err: hyperlab::Error) -> PyErr {
    if err.is_size_guard() {
        return SizeGuardError::new_err(err.to_string());
    }
    match err {
        hyperlab::Error::Io(e @ io::IoError::Io { .. }) => PyOSError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn solver_err(err: SolverError) -> PyErr {
    to_py(err.into())
}

fn construct_err(err: ConstructError) -> PyErr {
    to_py(err.into())
}

fn solver(guard: Option<usize>) -> PyResult<Solver> {
    let mut limits = Limits::default();
    if let Some(g) = guard {
        limits = limits.with_search_guard(g).map_err(solver_err)?;
    }
    Ok(Solver::new(limits))
}

fn partition(parts: Vec<i64>) -> PyResult<Partition> {
    Partition::parse(&parts).map_err(|e| to_py(e.into()))
}

/// An r-uniform hypergraph on vertices 0..vertex_count.
#[pyclass(name = "Hypergraph", module = "pyhyperlab", eq, frozen)]
#[derive(PartialEq)]
struct PyHypergraph {
    inner: hyperlab::Hypergraph,
    sigma: Option<SigmaMeta>,
}

impl PyHypergraph {
    fn plain(inner: hyperlab::Hypergraph) -> Self {
        PyHypergraph { inner, sigma: None }
    }
}

#[pymethods]
impl PyHypergraph {
    #[new]
    #[pyo3(signature = (r, vertex_count, edges=Vec::new()))]
    fn new(r: usize, vertex_count: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        hyperlab::Hypergraph::new(r, vertex_count, edges)
            .map(Self::plain)
            .map_err(|e| to_py(e.into()))
    }

    /// Every r-subset of vertex_count vertices.
    #[staticmethod]
    fn complete(r: usize, vertex_count: usize) -> PyResult<Self> {
        hyperlab::Hypergraph::complete(r, vertex_count)
            .map(Self::plain)
            .map_err(|e| to_py(e.into()))
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn provenance(&self) -> Vec<String> {
        self.inner.provenance().to_vec()
    }

    /// Class of each vertex for sigma-hypergraphs, else None.
    #[getter]
    fn classes(&self) -> Option<Vec<usize>> {
        let meta = self.sigma.as_ref()?;
        Some((0..self.inner.vertex_count()).map(|v| meta.class_of(v)).collect())
    }

    fn is_edge(&self, vertices: Vec<usize>) -> bool {
        self.inner.is_edge(&VertexSet::new(vertices))
    }

    fn is_clique(&self, vertices: Vec<usize>) -> bool {
        self.inner.is_clique(&VertexSet::new(vertices))
    }

    /// Induced subhypergraph, relabelled in increasing vertex order.
    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.inner.vertex_count()) {
            return Err(PyValueError::new_err(format!(
                "vertex {v} out of range 0..{}",
                self.inner.vertex_count()
            )));
        }
        Ok(Self::plain(self.inner.induced_subhypergraph(&VertexSet::new(vertices))))
    }

    fn to_json(&self) -> String {
        io::to_json(&self.inner, self.sigma.as_ref())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let loaded = io::from_json(text, "<string>").map_err(|e| to_py(e.into()))?;
        Ok(PyHypergraph {
            inner: loaded.hypergraph,
            sigma: loaded.sigma,
        })
    }

    fn save(&self, path: std::path::PathBuf) -> PyResult<()> {
        io::save(path, &self.inner, self.sigma.as_ref()).map_err(|e| to_py(e.into()))
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        let loaded = io::load(path).map_err(|e| to_py(e.into()))?;
        Ok(PyHypergraph {
            inner: loaded.hypergraph,
            sigma: loaded.sigma,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.edge_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(r={}, vertex_count={}, edges={})",
            self.inner.r(),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// H(n, r, q | sigma): n classes of q vertices, edges meeting the classes in the pattern sigma.
#[pyfunction]
#[pyo3(signature = (n, r, q, sigma, guard=None))]
fn sigma_hypergraph(n: usize, r: usize, q: usize, sigma: Vec<i64>, guard: Option<usize>) -> PyResult<PyHypergraph> {
    let sigma = partition(sigma)?;
    let guard = solver(guard)?.limits().search;
    let (inner, meta) = build_sigma_hypergraph_guarded(n, r, q, &sigma, guard).map_err(construct_err)?;
    Ok(PyHypergraph {
        inner,
        sigma: Some(meta),
    })
}

/// Closed-form edge count of H(n, r, q | sigma).
#[pyfunction]
fn sigma_edge_count(n: usize, q: usize, sigma: Vec<i64>) -> PyResult<u128> {
    hyperlab::sigma_edge_count(n, q, &partition(sigma)?).map_err(construct_err)
}

#[pyfunction]
#[pyo3(signature = (h, edge, p, q_ext, t, p_sizes=Vec::new(), q_sizes=Vec::new()))]
fn extend_pq(
    h: &PyHypergraph,
    edge: usize,
    p: usize,
    q_ext: usize,
    t: Vec<usize>,
    p_sizes: Vec<usize>,
    q_sizes: Vec<usize>,
) -> PyResult<PyHypergraph> {
    let params = ExtensionParams::new(edge, p, q_ext, t, p_sizes, q_sizes);
    hyperlab::extend_pq(&h.inner, &params)
        .map(PyHypergraph::plain)
        .map_err(construct_err)
}

#[pyfunction]
fn star_extend(h: &PyHypergraph, edge: usize, t: usize) -> PyResult<PyHypergraph> {
    hyperlab::star_extend(&h.inner, edge, t)
        .map(PyHypergraph::plain)
        .map_err(construct_err)
}

/// Repeated t-star extension; rule is "first", "last" or "random" (uses seed).
#[pyfunction]
#[pyo3(signature = (h, t, steps, rule="first", seed=7))]
fn iterate_star(h: &PyHypergraph, t: usize, steps: usize, rule: &str, seed: u64) -> PyResult<PyHypergraph> {
    let rule = match rule {
        "first" => EdgeRule::First,
        "last" => EdgeRule::Last,
        "random" => EdgeRule::Random(seed),
        other => return Err(PyValueError::new_err(format!("unknown edge rule {other:?}"))),
    };
    hyperlab::iterate_star(&h.inner, t, steps, rule)
        .map(PyHypergraph::plain)
        .map_err(construct_err)
}

/// Returns (chi, witness) with colours numbered from 1.
#[pyfunction]
#[pyo3(signature = (h, guard=None))]
fn chromatic_number(py: Python<'_>, h: &PyHypergraph, guard: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    let solver = solver(guard)?;
    let (chi, c) = py.detach(|| solver.chromatic_number(&h.inner)).map_err(solver_err)?;
    Ok((chi, c.colours().to_vec()))
}

/// A colouring with exactly k colours, each edge seeing between alpha and beta of them, or None.
#[pyfunction]
#[pyo3(signature = (h, k, alpha=2, beta=2, guard=None))]
fn ab_colourable(
    py: Python<'_>,
    h: &PyHypergraph,
    k: usize,
    alpha: usize,
    beta: usize,
    guard: Option<usize>,
) -> PyResult<Option<Vec<usize>>> {
    let solver = solver(guard)?;
    let found = py
        .detach(|| solver.ab_colourable(&h.inner, k, alpha, beta))
        .map_err(solver_err)?;
    Ok(found.map(|c| c.colours().to_vec()))
}

fn spectrum_dict<'py>(py: Python<'py>, s: &Spectrum) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("alpha", s.alpha)?;
    d.set_item("beta", s.beta)?;
    d.set_item("feasible", &s.feasible)?;
    d.set_item("gaps", &s.gaps)?;
    let witnesses = PyDict::new(py);
    for (k, c) in &s.witnesses {
        witnesses.set_item(k, c.colours())?;
    }
    d.set_item("witnesses", witnesses)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (h, alpha=2, beta=2, guard=None))]
fn ab_spectrum<'py>(
    py: Python<'py>,
    h: &PyHypergraph,
    alpha: usize,
    beta: usize,
    guard: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let solver = solver(guard)?;
    let s = py
        .detach(|| solver.ab_spectrum(&h.inner, alpha, beta))
        .map_err(solver_err)?;
    spectrum_dict(py, &s)
}

/// Spectrum by exhaustive enumeration of set partitions; small inputs only.
#[pyfunction]
#[pyo3(signature = (h, alpha=2, beta=2))]
fn oracle_spectrum<'py>(py: Python<'py>, h: &PyHypergraph, alpha: usize, beta: usize) -> PyResult<Bound<'py, PyDict>> {
    let s = py
        .detach(|| hyperlab::oracle_spectrum(&h.inner, alpha, beta))
        .map_err(solver_err)?;
    spectrum_dict(py, &s)
}

/// Returns (omega, witness clique).
#[pyfunction]
#[pyo3(signature = (h, guard=None))]
fn clique_number(py: Python<'_>, h: &PyHypergraph, guard: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
    let solver = solver(guard)?;
    let (omega, w) = py.detach(|| solver.clique_number(&h.inner)).map_err(solver_err)?;
    Ok((omega, w.into_vec()))
}

/// All partitions of r, largest first.
#[pyfunction]
fn partitions(r: usize) -> PyResult<Vec<Vec<usize>>> {
    let all = enumerate_partitions(r).map_err(|e| to_py(e.into()))?;
    Ok(all.into_iter().map(Vec::from).collect())
}

#[pyfunction]
fn is_symmetric(parts: Vec<i64>) -> PyResult<bool> {
    Ok(partition(parts)?.is_symmetric())
}

#[pyfunction]
fn is_rectangular(parts: Vec<i64>) -> PyResult<bool> {
    Ok(partition(parts)?.is_rectangular())
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theorem", &r.theorem)?;
    d.set_item("instances", r.instances)?;
    d.set_item("pass", r.pass)?;
    d.set_item("elapsed", r.elapsed.as_secs_f64())?;
    let failures = r
        .failures
        .iter()
        .map(|f| {
            let c = PyDict::new(py);
            c.set_item("instance", &f.instance)?;
            c.set_item("params", f.params.to_string())?;
            c.set_item("observed", &f.observed)?;
            c.set_item("expected", &f.expected)?;
            Ok(c)
        })
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("failures", failures)?;
    Ok(d)
}

/// Runs a verification suite by id or alias, or "all".
#[pyfunction]
#[pyo3(signature = (suite="all", seed=7, trials=None))]
fn verify<'py>(py: Python<'py>, suite: &str, seed: u64, trials: Option<usize>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let suites = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(PyValueError::new_err)?]
    };
    let settings = SuiteSettings { seed, trials };
    let solver = Solver::default();
    let reports = py
        .detach(|| {
            let mut out = Vec::new();
            for s in suites {
                out.extend(run_suite(&solver, s, settings)?);
            }
            Ok::<_, hyperlab::Error>(out)
        })
        .map_err(to_py)?;
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pymodule]
fn pyhyperlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add("SizeGuardError", m.py().get_type::<SizeGuardError>())?;
    m.add_function(wrap_pyfunction!(sigma_hypergraph, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_edge_count, m)?)?;
    m.add_function(wrap_pyfunction!(extend_pq, m)?)?;
    m.add_function(wrap_pyfunction!(star_extend, m)?)?;
    m.add_function(wrap_pyfunction!(iterate_star, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(ab_colourable, m)?)?;
    m.add_function(wrap_pyfunction!(ab_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(is_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(is_rectangular, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
