//! Python bindings: graphs, flips, class partitions, prediction, and
//! one-call games. Structured results (prediction outcomes, transcripts,
//! verification reports) cross the boundary as their JSON form parsed
//! into plain dicts, so the Python view matches the CLI output exactly.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use flipper_core as core;
use flipper_core::game::{run_game, FlipperPlayer, GameConfig, GameVariant};
use flipper_core::strategy::{make_connector, ConnectorKind, FlipStar};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn loads<'py>(py: Python<'py>, json: &str) -> PyResult<Bound<'py, PyAny>> {
    PyModule::import(py, "json")?.call_method1("loads", (json,))
}

fn to_set(vs: Vec<usize>) -> core::VertexSet {
    vs.into_iter().collect()
}

fn to_partition(parts: Vec<Vec<usize>>) -> PyResult<core::Partition> {
    core::Partition::new(parts.into_iter().map(to_set).collect()).map_err(err)
}

#[pyclass(name = "Graph")]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: core::Graph::build(n, &edges).map_err(err)? })
    }

    /// Parse the text format also accepted by the CLI (`n m` header,
    /// one edge per line).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: core::Graph::parse_text(text).map_err(err)? })
    }

    /// Generate from a spec like `"random_tree:100"` or `"grid:4x6"`.
    #[staticmethod]
    #[pyo3(signature = (spec, seed = 0))]
    fn family(spec: &str, seed: u64) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: core::Family::parse(spec, seed).map_err(err)?.generate().map_err(err)? })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn live(&self) -> Vec<usize> {
        self.inner.live().to_vec()
    }

    /// Shortest-path distance, or `None` when disconnected.
    fn distance(&self, u: usize, v: usize) -> PyResult<Option<usize>> {
        self.inner.distance(u, v).map_err(err)
    }

    fn ball(&self, v: usize, r: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.ball(v, r).map_err(err)?.to_vec())
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

/// Apply atomic flips given as `(side_a, side_b)` vertex-list pairs.
#[pyfunction]
fn apply_flips(g: &PyGraph, flips: Vec<(Vec<usize>, Vec<usize>)>) -> PyGraph {
    let fs: core::FlipSet =
        flips.into_iter().map(|(a, b)| core::AtomicFlip::new(to_set(a), to_set(b))).collect();
    PyGraph { inner: fs.apply(&g.inner) }
}

/// Classes of equal adjacency trace on `s`, as lists of vertices.
#[pyfunction]
fn s_classes(g: &PyGraph, s: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let classes = core::s_classes(&g.inner, &to_set(s)).map_err(err)?;
    Ok(classes.partition.parts().iter().map(|p| p.to_vec()).collect())
}

/// Largest distance between `u` and `v` over all flips respecting the
/// partition, or `None` if some flip disconnects them. `cap` bounds the
/// partition sizes the enumeration accepts.
#[pyfunction]
#[pyo3(signature = (g, parts, u, v, cap = core::DEFAULT_PARTITION_FLIP_CAP))]
fn flip_distance(
    g: &PyGraph,
    parts: Vec<Vec<usize>>,
    u: usize,
    v: usize,
    cap: usize,
) -> PyResult<Option<usize>> {
    core::flip_distance(&g.inner, &to_partition(parts)?, u, v, cap).map_err(err)
}

/// Predict flips separating the targets `z`; returns a dict with keys
/// `flips`, `truncated`, `steps`.
#[pyfunction]
#[pyo3(signature = (g, radius, z, order = None, step_factor = None, max_flips = None))]
fn predict<'py>(
    py: Python<'py>,
    g: &PyGraph,
    radius: usize,
    z: Vec<usize>,
    order: Option<Vec<usize>>,
    step_factor: Option<u64>,
    max_flips: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut cfg = core::PredictConfig::new(radius);
    if let Some(seq) = order {
        cfg = cfg.with_order(core::VertexOrder::from_sequence(&seq).map_err(err)?);
    }
    if let Some(f) = step_factor {
        cfg = cfg.with_step_factor(f);
    }
    if let Some(m) = max_flips {
        cfg = cfg.with_max_flips(m);
    }
    let out = core::predict(&g.inner, &cfg, &to_set(z)).map_err(err)?;
    let json = serde_json::to_string(&out).map_err(|e| PyValueError::new_err(e.to_string()))?;
    loads(py, &json)
}

/// Run one Flipper game against a named connector and return the
/// transcript as a dict. Connectors: `random`, `random:<seed>`,
/// `greedy`, `farthest`.
#[pyfunction]
#[pyo3(signature = (g, radius, connector = "greedy", seed = 0, max_rounds = 100_000))]
fn play<'py>(
    py: Python<'py>,
    g: &PyGraph,
    radius: usize,
    connector: &str,
    seed: u64,
    max_rounds: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let kind = if connector == "random" {
        ConnectorKind::Random { seed }
    } else {
        ConnectorKind::parse(connector).map_err(err)?
    };
    let mut conn = make_connector(kind);
    let mut star = FlipStar::new(&g.inner, core::PredictConfig::new(2 * radius));
    let cfg = GameConfig::new(GameVariant::Flipper, radius)
        .with_max_rounds(max_rounds)
        .with_schedule(star.recommended_schedule());
    let t = run_game(&g.inner, &cfg, FlipperPlayer::Flips(&mut star), conn.as_mut())
        .map_err(err)?;
    loads(py, &t.to_json())
}

/// Run one named verification suite; returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, seed = 0))]
fn verify_suite<'py>(py: Python<'py>, suite: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let report = core::run_suite(suite, seed).map_err(err)?;
    let json = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    loads(py, &json)
}

#[pymodule]
fn flipper_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(apply_flips, m)?)?;
    m.add_function(wrap_pyfunction!(s_classes, m)?)?;
    m.add_function(wrap_pyfunction!(flip_distance, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(play, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add("SUITE_NAMES", core::SUITE_NAMES.to_vec())?;
    Ok(())
}
