//! Python bindings for `affschur`.

use std::collections::BTreeMap;

use affschur::afcomb::{AffinePerm, PeriodicMatrix, ZVector};
use affschur::hecke::HeckeElement;
use affschur::schur::{self, SchurElement};
use affschur::verify::{self, CheckParams, TableKind};
use affschur::LaurentPoly;
use num_bigint::BigInt;
use pyo3::basic::CompareOp;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: affschur::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// An element of `Z[v, v^-1]`.
#[pyclass(name = "LaurentPoly", module = "affschur_py", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyLaurent(pub LaurentPoly);

#[pymethods]
impl PyLaurent {
    /// Builds from `[(exponent, coefficient), ...]`.
    #[new]
    #[pyo3(signature = (terms = Vec::new()))]
    fn new(terms: Vec<(i32, BigInt)>) -> Self {
        PyLaurent(LaurentPoly::from_terms(terms))
    }

    #[staticmethod]
    fn v(exp: i32) -> Self {
        PyLaurent(LaurentPoly::v_pow(exp))
    }

    #[staticmethod]
    fn quantum_int(k: i64) -> Self {
        PyLaurent(LaurentPoly::quantum_int(k))
    }

    #[staticmethod]
    fn gauss_binom(c: i64, a: u32) -> Self {
        PyLaurent(LaurentPoly::gauss_binom(c, a))
    }

    fn terms(&self) -> Vec<(i32, BigInt)> {
        self.0.to_pairs()
    }

    fn coeff(&self, exp: i32) -> BigInt {
        self.0.coeff(exp)
    }

    fn bar(&self) -> Self {
        PyLaurent(self.0.bar())
    }

    fn shift(&self, e: i32) -> Self {
        PyLaurent(self.0.shift(e))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_nonneg(&self) -> bool {
        self.0.is_nonneg()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyLaurent(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyLaurent(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyLaurent(&self.0 * &o.0)
    }

    fn __neg__(&self) -> Self {
        PyLaurent(-&self.0)
    }

    fn __pow__(&self, k: u32, _m: Option<u32>) -> Self {
        PyLaurent(self.0.pow(k))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({})", self.0)
    }
}

/// A periodic matrix in `Theta(n)`.
#[pyclass(name = "Matrix", module = "affschur_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyMatrix(pub PeriodicMatrix);

#[pymethods]
impl PyMatrix {
    /// Builds from `(i, j, a)` triples; periodic copies add up.
    #[new]
    fn new(n: usize, triples: Vec<(i64, i64, u32)>) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be positive"));
        }
        Ok(PyMatrix(PeriodicMatrix::from_triples(n, triples)))
    }

    #[staticmethod]
    fn diag(lambda: Vec<usize>) -> PyResult<Self> {
        if lambda.is_empty() {
            return Err(PyValueError::new_err("empty composition"));
        }
        Ok(PyMatrix(PeriodicMatrix::diag(&lambda)))
    }

    #[staticmethod]
    fn unit(n: usize, i: i64, j: i64) -> Self {
        PyMatrix(PeriodicMatrix::unit(n, i, j))
    }

    #[staticmethod]
    fn e(n: usize) -> Self {
        PyMatrix(PeriodicMatrix::e(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn entries(&self) -> Vec<(usize, i64, u32)> {
        self.0.entries().collect()
    }

    fn get(&self, i: i64, j: i64) -> u32 {
        self.0.get(i, j)
    }

    fn sigma(&self) -> usize {
        self.0.sigma()
    }

    fn ro(&self) -> Vec<usize> {
        self.0.ro().parts().to_vec()
    }

    fn co(&self) -> Vec<usize> {
        self.0.co().parts().to_vec()
    }

    fn d_vec(&self) -> PyResult<Vec<i64>> {
        Ok(self.0.d_vec().map_err(err)?.parts().to_vec())
    }

    fn height(&self) -> i64 {
        self.0.height()
    }

    fn add(&self, o: &Self) -> PyResult<Self> {
        self.0.add(&o.0).map(PyMatrix).map_err(err)
    }

    fn add_diag(&self, x: Vec<i64>) -> PyResult<Self> {
        self.0.add_diag(&ZVector::new(x)).map(PyMatrix).map_err(err)
    }

    fn eta(&self, m: i64) -> Self {
        PyMatrix(self.0.eta(m))
    }

    fn tilde(&self, big_n: usize) -> PyResult<Self> {
        self.0.tilde(big_n).map(PyMatrix).map_err(err)
    }

    fn is_aperiodic(&self) -> bool {
        self.0.is_aperiodic()
    }

    fn in_sy(&self) -> bool {
        self.0.in_sy()
    }

    fn compact(&self) -> String {
        self.0.compact()
    }

    fn __richcmp__(&self, o: &Self, op: CompareOp) -> bool {
        op.matches(self.0.cmp(&o.0))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.compact().hash(&mut h);
        self.0.n().hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Matrix(n={}, {})", self.0.n(), self.0.compact())
    }
}

/// An element of the extended affine Hecke algebra in the `T_w` basis.
#[pyclass(name = "HeckeElement", module = "affschur_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyHecke(pub HeckeElement);

#[pymethods]
impl PyHecke {
    #[staticmethod]
    fn one(r: usize) -> Self {
        PyHecke(HeckeElement::one(r))
    }

    /// `T_w` for the permutation with the given window.
    #[staticmethod]
    fn t(window: Vec<i64>) -> PyResult<Self> {
        Ok(PyHecke(HeckeElement::t(&AffinePerm::new(window).map_err(err)?)))
    }

    #[staticmethod]
    fn t_simple(r: usize, i: usize) -> Self {
        PyHecke(HeckeElement::t_simple(r, i))
    }

    #[staticmethod]
    fn t_rho(r: usize, m: i64) -> Self {
        PyHecke(HeckeElement::t_rho(r, m))
    }

    #[staticmethod]
    fn x_power(r: usize, t: usize, e: i64) -> Self {
        PyHecke(HeckeElement::x_power(r, t, e))
    }

    fn terms(&self) -> Vec<(Vec<i64>, PyLaurent)> {
        self.0.terms().map(|(w, c)| (w.window().to_vec(), PyLaurent(c.clone()))).collect()
    }

    fn bar(&self) -> Self {
        PyHecke(self.0.bar())
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.add(&o.0).map(PyHecke).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.sub(&o.0).map(PyHecke).map_err(err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.mul(&o.0).map(PyHecke).map_err(err)
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __repr__(&self) -> String {
        format!("HeckeElement({})", self.0.to_json())
    }
}

/// An element of the affine quantum Schur algebra in the `[A]` basis.
#[pyclass(name = "SchurElement", module = "affschur_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PySchur(pub SchurElement);

#[pymethods]
impl PySchur {
    /// The standard basis element `[A]`.
    #[staticmethod]
    fn std(a: &PyMatrix) -> Self {
        PySchur(SchurElement::std(&a.0))
    }

    /// The canonical basis element `theta_A`.
    #[staticmethod]
    fn canonical(a: &PyMatrix) -> PyResult<Self> {
        schur::canonical_basis(&a.0).map(PySchur).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize, r: usize) -> Self {
        PySchur(SchurElement::identity(n, r))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.0.r()
    }

    fn terms(&self) -> Vec<(PyMatrix, PyLaurent)> {
        self.0.terms().map(|(a, c)| (PyMatrix(a.clone()), PyLaurent(c.clone()))).collect()
    }

    fn coeff(&self, a: &PyMatrix) -> PyLaurent {
        PyLaurent(self.0.coeff(&a.0))
    }

    fn bar(&self) -> PyResult<Self> {
        self.0.bar().map(PySchur).map_err(err)
    }

    fn iota(&self, big_n: usize) -> PyResult<Self> {
        self.0.iota(big_n).map(PySchur).map_err(err)
    }

    fn scaled(&self, c: &PyLaurent) -> Self {
        PySchur(self.0.scaled(&c.0))
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.add(&o.0).map(PySchur).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.sub(&o.0).map(PySchur).map_err(err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.mul(&o.0).map(PySchur).map_err(err)
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __repr__(&self) -> String {
        format!("SchurElement({:?})", self.0)
    }
}

#[pyfunction]
fn compute_f(a: &PyMatrix, b: &PyMatrix, c: &PyMatrix) -> PyResult<PyLaurent> {
    schur::compute_f(&a.0, &b.0, &c.0).map(PyLaurent).map_err(err)
}

#[pyfunction]
fn compute_g(a: &PyMatrix, b: &PyMatrix, c: &PyMatrix, rp: usize, rpp: usize) -> PyResult<PyLaurent> {
    schur::compute_g(&a.0, &b.0, &c.0, rp, rpp).map(PyLaurent).map_err(err)
}

#[pyfunction]
fn compute_h(a: &PyMatrix, b: &PyMatrix, c: &PyMatrix) -> PyResult<PyLaurent> {
    let idx = |m: &PyMatrix| affschur::modified::SYIndex::new(m.0.clone()).map_err(err);
    affschur::modified::compute_h(&idx(a)?, &idx(b)?, &idx(c)?).map(PyLaurent).map_err(err)
}

/// `Delta_{r', r''}(theta_A)` as a dict `{(B, C): g}`.
#[pyfunction]
fn delta_theta(a: &PyMatrix, rp: usize) -> PyResult<BTreeMap<(String, String), PyLaurent>> {
    let coords = schur::delta_theta(&a.0, rp).map_err(err)?;
    Ok(coords.into_iter().map(|((b, c), g)| ((b.compact(), c.compact()), PyLaurent(g))).collect())
}

fn params(
    n: Option<usize>,
    big_n: Option<usize>,
    r: Option<usize>,
    spread: Option<usize>,
    seed: u64,
    samples: usize,
) -> CheckParams {
    CheckParams { n, big_n, r, spread, seed, samples, ..Default::default() }
}

/// Runs a named check and returns its report as a dict.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (name, n = None, big_n = None, r = None, spread = None, seed = 0, samples = 150))]
fn run_check<'py>(
    py: Python<'py>,
    name: &str,
    n: Option<usize>,
    big_n: Option<usize>,
    r: Option<usize>,
    spread: Option<usize>,
    seed: u64,
    samples: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let p = params(n, big_n, r, spread, seed, samples);
    let rep = py.detach(|| verify::run_check(name, &p)).map_err(err)?;
    json(py, &rep)
}

/// Nonzero structure constants of kind `"f"`, `"g"` or `"h"` as a list of dicts.
#[pyfunction]
#[pyo3(signature = (kind, n = None, r = None, spread = None))]
fn export_table<'py>(py: Python<'py>, kind: &str, n: Option<usize>, r: Option<usize>, spread: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let kind: TableKind = kind.parse().map_err(err)?;
    let p = params(n, None, r, spread, 0, 150);
    let rows = py.detach(|| verify::export_tables(kind, &p)).map_err(err)?;
    json(py, &rows)
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    verify::CHECK_NAMES.to_vec()
}

#[pymodule]
pub mod affschur_py {
    #[pymodule_export]
    use super::{
        check_names, compute_f, compute_g, compute_h, delta_theta, export_table, run_check, PyHecke, PyLaurent, PyMatrix,
        PySchur,
    };
}
