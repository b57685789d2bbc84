//! Python bindings. Integers cross the boundary as Python `int`, so nothing is
//! ever rounded.

use hnsplit::{BigInt, Characteristic, Stability};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: hnsplit::Error) -> PyErr {
    match e {
        hnsplit::Error::Inconsistent(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(format!("{}: {e}", e.kind())),
    }
}

/// One graded piece of an HN filtration.
#[pyclass(name = "GradedPiece", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGradedPiece(hnsplit::GradedPiece);

#[pymethods]
impl PyGradedPiece {
    #[new]
    #[pyo3(signature = (rank, degree, label = String::new()))]
    fn new(rank: BigInt, degree: BigInt, label: String) -> PyResult<Self> {
        hnsplit::GradedPiece::new(rank, degree, label).map(Self).map_err(to_py)
    }

    #[getter]
    fn rank(&self) -> BigInt {
        self.0.rank().clone()
    }

    #[getter]
    fn degree(&self) -> BigInt {
        self.0.degree().clone()
    }

    #[getter]
    fn label(&self) -> &str {
        self.0.label()
    }

    /// Reduced `(numerator, denominator)` with positive denominator.
    fn slope(&self) -> (BigInt, BigInt) {
        self.0.slope()
    }

    fn __repr__(&self) -> String {
        format!("GradedPiece(rank={}, degree={}, label={:?})", self.0.rank(), self.0.degree(), self.0.label())
    }
}

/// A validated HN polygon: pieces in strictly decreasing slope order.
#[pyclass(name = "HNPolygon", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyHNPolygon(hnsplit::HNPolygon);

#[pymethods]
impl PyHNPolygon {
    #[getter]
    fn pieces(&self) -> Vec<PyGradedPiece> {
        self.0.pieces().iter().cloned().map(PyGradedPiece).collect()
    }

    #[getter]
    fn rank(&self) -> BigInt {
        self.0.rank()
    }

    #[getter]
    fn degree(&self) -> BigInt {
        self.0.degree()
    }

    fn is_semistable(&self) -> bool {
        self.0.is_semistable()
    }

    fn vertices(&self) -> Vec<(BigInt, BigInt)> {
        self.0.vertices()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        let degrees: Vec<String> = self.0.pieces().iter().map(|p| format!("({}, {})", p.rank(), p.degree())).collect();
        format!("HNPolygon([{}])", degrees.join(", "))
    }
}

/// Multiplicities `a_j` of `O(-j)` in a split bundle on projective space.
#[pyclass(name = "SplittingType", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySplittingType(hnsplit::SplittingType);

#[pymethods]
impl PySplittingType {
    #[new]
    fn new(a: Vec<BigInt>) -> PyResult<Self> {
        hnsplit::SplittingType::new(a).map(Self).map_err(to_py)
    }

    #[getter]
    fn a(&self) -> Vec<BigInt> {
        self.0.multiplicities().to_vec()
    }

    #[getter]
    fn rank(&self) -> BigInt {
        self.0.rank()
    }

    #[getter]
    fn degree(&self) -> BigInt {
        self.0.degree()
    }

    fn is_palindromic(&self) -> bool {
        self.0.is_palindromic()
    }

    fn bundle(&self) -> String {
        self.0.bundle_string()
    }

    fn polygon(&self) -> PyHNPolygon {
        PyHNPolygon(hnsplit::polygon_from_splitting(&self.0))
    }

    /// Euler characteristic of the bundle on `P^dim`.
    #[pyo3(signature = (dim = 1))]
    fn euler_characteristic(&self, dim: u32) -> BigInt {
        hnsplit::euler_characteristic_on(&self.0, dim)
    }

    fn __repr__(&self) -> String {
        let a: Vec<String> = self.0.multiplicities().iter().map(ToString::to_string).collect();
        format!("SplittingType([{}])", a.join(", "))
    }
}

fn ci_spec(n: u32, degrees: Vec<u32>) -> PyResult<hnsplit::CompleteIntersectionSpec> {
    hnsplit::CompleteIntersectionSpec::new(n, degrees).map_err(to_py)
}

/// Splitting type of the direct image for degrees `d_1..d_r` in `P^n`.
#[pyfunction]
fn splitting_type(n: u32, degrees: Vec<u32>) -> PyResult<PySplittingType> {
    hnsplit::splitting_type(&ci_spec(n, degrees)?).map(PySplittingType).map_err(to_py)
}

#[pyfunction]
fn splitting_product_oracle(degrees: Vec<u32>) -> PyResult<PySplittingType> {
    hnsplit::splitting_product_oracle(&degrees).map(PySplittingType).map_err(to_py)
}

/// `h_{i,j}` from the recurrence.
#[pyfunction]
fn hilbert_function(n: u32, degrees: Vec<u32>, i: usize, j: i64) -> PyResult<BigInt> {
    hnsplit::hilbert_function(&ci_spec(n, degrees)?, i, j).map_err(to_py)
}

#[pyfunction]
fn hilbert_polynomial_constant(n: u32, degrees: Vec<u32>) -> PyResult<BigInt> {
    Ok(hnsplit::hilbert_polynomial_constant(&ci_spec(n, degrees)?))
}

#[pyfunction]
fn binomial(a: i64, b: i64) -> BigInt {
    hnsplit::binomial(a, b)
}

/// Validates `(rank, degree, label)` triples and merges equal adjacent slopes.
#[pyfunction]
fn polygon_from_pieces(pieces: Vec<(BigInt, BigInt, String)>) -> PyResult<PyHNPolygon> {
    let pieces = pieces
        .into_iter()
        .map(|(r, d, l)| hnsplit::GradedPiece::new(r, d, l))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py)?;
    hnsplit::polygon_from_pieces(pieces).map(PyHNPolygon).map_err(to_py)
}

#[pyfunction]
fn sym_power_hn(m: u32, s: i64, t: i64) -> PyResult<PyHNPolygon> {
    hnsplit::sym_power_hn(m, s, t).map(PyHNPolygon).map_err(to_py)
}

/// HN polygon of the ruled-surface quotient, `None` for the zero sheaf.
/// Pass `s` and `t` for unstable `E`, or `e` alone for semistable `E`.
#[pyfunction]
#[pyo3(signature = (n, alpha = 0, s = None, t = None, e = None, characteristic = "zero"))]
fn ruled_quotient_hn(
    n: u32,
    alpha: i64,
    s: Option<i64>,
    t: Option<i64>,
    e: Option<i64>,
    characteristic: &str,
) -> PyResult<Option<PyHNPolygon>> {
    let stability = match (s, t, e) {
        (Some(s), Some(t), None) => Stability::Unstable { s, t },
        (None, None, Some(e)) => Stability::Semistable { e },
        _ => return Err(PyValueError::new_err("give either s and t, or e")),
    };
    let characteristic = match characteristic {
        "zero" => Characteristic::Zero,
        "positive" => Characteristic::Positive,
        other => return Err(PyValueError::new_err(format!("unknown characteristic {other:?}"))),
    };
    let spec = hnsplit::RuledSurfaceSpec::new(n, alpha, stability, characteristic).map_err(to_py)?;
    let q = hnsplit::direct_image_quotient_hn(&spec).map_err(to_py)?;
    Ok(q.polygon().cloned().map(PyHNPolygon))
}

/// `{"source", "targets", "kernel"}` as `(rank, degree)` pairs, `None` for the zero sheaf.
#[pyfunction]
#[pyo3(signature = (n1, n2, e, a1 = 0, a2 = 0))]
fn two_hypersurface_quotient<'py>(
    py: Python<'py>,
    n1: u32,
    n2: u32,
    e: i64,
    a1: i64,
    a2: i64,
) -> PyResult<Option<Bound<'py, PyDict>>> {
    let spec = hnsplit::TwoHypersurfaceSpec::new(n1, n2, a1, a2, e).map_err(to_py)?;
    let q = hnsplit::quotient_presentation(&spec).map_err(to_py)?;
    let Some(p) = q.presentation() else { return Ok(None) };
    let pair = |x: &hnsplit::RankDegree| (x.rank.clone(), x.degree.clone());
    let d = PyDict::new(py);
    d.set_item("source", pair(&p.source))?;
    d.set_item("targets", p.targets.iter().map(pair).collect::<Vec<_>>())?;
    d.set_item("kernel", pair(&p.kernel))?;
    Ok(Some(d))
}

/// Direct image on `P^1` of a bundle with vanishing cohomology.
#[pyfunction]
fn acyclic_pushforward(cover_degree: u64, rank: u64, degree: i64, genus: u64) -> PyResult<PySplittingType> {
    let spec = hnsplit::AcyclicSpec::new(cover_degree, rank, degree, genus).map_err(to_py)?;
    hnsplit::pushforward_splitting(&spec).map(PySplittingType).map_err(to_py)
}

#[pymodule]
fn hnsplit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGradedPiece>()?;
    m.add_class::<PyHNPolygon>()?;
    m.add_class::<PySplittingType>()?;
    m.add_function(wrap_pyfunction!(splitting_type, m)?)?;
    m.add_function(wrap_pyfunction!(splitting_product_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_function, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_polynomial_constant, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(polygon_from_pieces, m)?)?;
    m.add_function(wrap_pyfunction!(sym_power_hn, m)?)?;
    m.add_function(wrap_pyfunction!(ruled_quotient_hn, m)?)?;
    m.add_function(wrap_pyfunction!(two_hypersurface_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(acyclic_pushforward, m)?)?;
    Ok(())
}
