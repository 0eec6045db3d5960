//! Python bindings. Integers cross the boundary as Python `int`, polynomials as `IntPoly`.

use genocchi::contfrac::{expand, NamedFraction};
use genocchi::dellac::{collect_dellac, h_poly_dellac};
use genocchi::verify::{crosscheck_with, CrosscheckOptions, DEFAULT_SEED};
use genocchi::{admissible, exactalg, hanzeng, motzkin, oracles, seidel, Error, IntPoly};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(genocchi, ResourceLimitError, PyValueError, "Requested size exceeds an enumeration cap.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Domain(_) => PyValueError::new_err(e.to_string()),
        Error::ResourceLimit { .. } => ResourceLimitError::new_err(e.to_string()),
        Error::InexactDivision(_) | Error::Inconsistency(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for genocchi::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// Polynomial in q with integer coefficients, lowest degree first.
#[pyclass(name = "IntPoly", module = "genocchi", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIntPoly(IntPoly);

#[pymethods]
impl PyIntPoly {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> Self {
        PyIntPoly(IntPoly::new(coeffs))
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    /// Degree; raises ValueError for the zero polynomial.
    fn degree(&self) -> PyResult<usize> {
        self.0.degree().py()
    }

    fn eval(&self, q: BigInt) -> BigInt {
        self.0.eval(&q)
    }

    /// `q^d p(1/q)`.
    fn reverse(&self, d: usize) -> PyResult<Self> {
        self.0.reverse(d).py().map(PyIntPoly)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntPoly({})", self.0)
    }
}

#[pyfunction]
fn normalized_h(n: usize) -> PyResult<BigInt> {
    seidel::normalized_h(n).py()
}

#[pyfunction]
fn normalized_h_sequence(count: usize) -> PyResult<Vec<BigInt>> {
    seidel::normalized_h_sequence(count).py()
}

#[pyfunction]
fn median_genocchi(n: usize) -> PyResult<BigInt> {
    seidel::median_genocchi(n).py()
}

#[pyfunction]
fn genocchi_first(n: usize) -> PyResult<BigInt> {
    seidel::genocchi_first(n).py()
}

#[pyfunction]
fn q_binomial(m: usize, k: usize) -> PyResult<PyIntPoly> {
    exactalg::q_binomial(m, k).py().map(PyIntPoly)
}

/// `h_n(q)` by one of the routes "dellac", "fermionic", "laurent".
#[pyfunction]
#[pyo3(signature = (n, route = "laurent"))]
fn h_poly(n: usize, route: &str) -> PyResult<PyIntPoly> {
    let p = match route {
        "dellac" => h_poly_dellac(n),
        "fermionic" => motzkin::h_poly_fermionic(n),
        "laurent" => motzkin::h_poly_laurent(n),
        other => return Err(PyValueError::new_err(format!("unknown route `{other}`"))),
    };
    p.py().map(PyIntPoly)
}

#[pyfunction]
fn tilde_h(n: usize) -> PyResult<PyIntPoly> {
    motzkin::tilde_h(n).py().map(PyIntPoly)
}

#[pyfunction]
fn hanzeng_barc(n: usize) -> PyResult<PyIntPoly> {
    hanzeng::hanzeng_barc(n).py().map(PyIntPoly)
}

/// Each configuration as its list of `(lower_row, upper_row)` per column.
#[pyfunction]
fn dellac_configs(n: usize) -> PyResult<Vec<Vec<(usize, usize)>>> {
    Ok(collect_dellac(n).py()?.iter().map(|d| d.columns().to_vec()).collect())
}

/// Each sequence as the lists `I_1, ..., I_{n-1}`.
#[pyfunction]
fn admissible_sequences(n: usize) -> PyResult<Vec<Vec<Vec<usize>>>> {
    let seqs = admissible::collect_admissible(n).py()?;
    Ok(seqs.iter().map(|s| (1..n).map(|l| s.set(l)).collect()).collect())
}

/// Each path as its heights `f_0, ..., f_n`.
#[pyfunction]
fn motzkin_paths(n: usize) -> PyResult<Vec<Vec<usize>>> {
    Ok(motzkin::collect_motzkin(n).py()?.iter().map(|p| p.heights().to_vec()).collect())
}

#[pyfunction]
fn count_dumont(n: usize) -> PyResult<u64> {
    oracles::count_dumont(n).py()
}

#[pyfunction]
fn count_triangle_pairs(n: usize) -> PyResult<u64> {
    oracles::count_triangle_pairs(n).py()
}

/// Coefficients of `s^0, ..., s^order` of a named fraction: "f1", "f2", "hn", "viennot".
#[pyfunction]
fn series(name: &str, order: usize) -> PyResult<Vec<PyIntPoly>> {
    let fraction: NamedFraction = name.parse().map_err(py_err)?;
    let s = expand(&fraction.spec(), order).py()?;
    Ok(s.coeffs().iter().cloned().map(PyIntPoly).collect())
}

/// Runs the full cross-check and returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (n_max, seed = DEFAULT_SEED))]
fn crosscheck(py: Python<'_>, n_max: usize, seed: u64) -> PyResult<String> {
    let opts = CrosscheckOptions {
        seed,
        ..CrosscheckOptions::default()
    };
    let report = py.detach(|| crosscheck_with(n_max, &opts)).py()?;
    serde_json::to_string(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
#[pyo3(name = "genocchi")]
fn genocchi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntPoly>()?;
    m.add("ResourceLimitError", m.py().get_type::<ResourceLimitError>())?;
    m.add_function(wrap_pyfunction!(normalized_h, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_h_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(median_genocchi, m)?)?;
    m.add_function(wrap_pyfunction!(genocchi_first, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(h_poly, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_h, m)?)?;
    m.add_function(wrap_pyfunction!(hanzeng_barc, m)?)?;
    m.add_function(wrap_pyfunction!(dellac_configs, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_dumont, m)?)?;
    m.add_function(wrap_pyfunction!(count_triangle_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck, m)?)?;
    Ok(())
}
