//! Python bindings. Structured results come back as plain Python objects
//! (dicts, lists, strings) in the same shape as the CLI's JSON output.

use asai_core::json::{
    gauss_json, parse_rep, parse_rep_desc, ratfunc_to_json, report_to_json, segments_report, series_to_json,
    value_to_json,
};
use asai_core::lfactor::{asai_factors, lstar, lstar_at_1, rs_factors};
use asai_core::period::{flicker_series, mirabolic_series, verify_c_pi, verify_theorem1};
use asai_core::{Error, GenericRep};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(asai_periods, NotGenericError, PyValueError);

fn err(e: Error) -> PyErr {
    match e {
        Error::NotGeneric(..) => NotGenericError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// A generic representation parsed from a JSON descriptor.
#[pyclass(name = "Rep", frozen)]
struct PyRep(GenericRep);

#[pymethods]
impl PyRep {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_rep(text).map(PyRep).map_err(err)
    }

    #[getter]
    fn q_f(&self) -> u64 {
        self.0.field().q_f()
    }

    #[getter]
    fn ramified(&self) -> bool {
        self.0.field().is_ramified()
    }

    #[getter]
    fn conductor(&self) -> u64 {
        self.0.conductor()
    }

    fn is_conjugate_selfdual(&self) -> bool {
        self.0.is_conjugate_selfdual()
    }

    /// Satake values of the unramified part, as `["re", "im"]` pairs.
    fn pi_u<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let v: Vec<_> = self.0.pi_u().satake().iter().map(gauss_json).collect();
        to_py(py, &serde_json::Value::Array(v))
    }

    /// Factored Asai L-factor of `π_u` in `t = q_F^{-s}`.
    fn asai_factored(&self) -> String {
        asai_factors(&self.0.pi_u()).to_string()
    }

    fn asai<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &ratfunc_to_json(&asai_factors(&self.0.pi_u()).ratfunc()))
    }

    fn rankin_selberg_factored(&self, other: &PyRep) -> PyResult<String> {
        if other.0.field() != self.0.field() {
            return Err(PyValueError::new_err("representations over different field pairs"));
        }
        Ok(rs_factors(&self.0.pi_u(), &other.0.pi_u()).to_string())
    }

    fn lstar<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &ratfunc_to_json(&lstar(&self.0)))
    }

    /// `L*(1, π, As)`, or `"pole"`.
    fn lstar_at_1<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        match lstar_at_1(&self.0) {
            Ok(x) => to_py(py, &value_to_json(&x)),
            Err(Error::NotHolomorphic) => to_py(py, &serde_json::json!("pole")),
            Err(e) => Err(err(e)),
        }
    }

    #[pyo3(signature = (order = 40))]
    fn mirabolic_series<'py>(&self, py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &series_to_json(&mirabolic_series(&self.0, order).map_err(err)?))
    }

    #[pyo3(signature = (order = 40))]
    fn flicker_series<'py>(&self, py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &series_to_json(&flicker_series(&self.0.pi_u(), order)))
    }

    /// Period report: series, reconstruction, closed form, match, value at 1.
    #[pyo3(signature = (order = 40))]
    fn period<'py>(&self, py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &report_to_json(&verify_theorem1(&self.0, order).map_err(err)?))
    }

    fn verify_c_pi(&self) -> PyResult<bool> {
        verify_c_pi(&self.0).map_err(err)
    }
}

/// Segment report for a descriptor; linked descriptors give `{"generic": False}`.
#[pyfunction]
fn segments(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    let (fp, segs) = parse_rep_desc(text).and_then(|d| d.parts()).map_err(err)?;
    Ok(to_py(py, &segments_report(&fp, &segs).map_err(err)?)?.unbind())
}

#[pymodule]
pub fn asai_periods(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRep>()?;
    m.add_function(wrap_pyfunction!(segments, m)?)?;
    m.add("NotGenericError", m.py().get_type::<NotGenericError>())?;
    Ok(())
}
