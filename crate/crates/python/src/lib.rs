use grouplat::poset::{breaking_points as poset_breaking_points, PosetKind};
use grouplat::report::{AnalysisReport, VerifyReport};
use grouplat::scan::{scan_class_c, Family};
use grouplat::verify::{run_suites, Suite};
use grouplat::{build_group, validate_group, Analysis, GroupSpec, GroupTable, Limits};
use pyo3::exceptions::{PyMemoryError, PyValueError};
use pyo3::prelude::*;
use std::time::Instant;

fn to_py_err(e: grouplat::Error) -> PyErr {
    if e.is_resource_cap() {
        PyMemoryError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn limits(max_order: Option<usize>, max_subgroups: Option<usize>) -> Limits {
    let d = Limits::default();
    Limits {
        max_order: max_order.unwrap_or(d.max_order),
        max_subgroups: max_subgroups.unwrap_or(d.max_subgroups),
    }
}

fn json_value<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn analyze_spec(spec: &str, limits: &Limits) -> PyResult<Analysis> {
    let spec: GroupSpec = spec.parse().map_err(to_py_err)?;
    Analysis::from_spec(&spec, limits).map_err(to_py_err)
}

/// A finite group given by its Cayley table.
#[pyclass(frozen)]
struct Group {
    table: GroupTable,
}

#[pymethods]
impl Group {
    #[new]
    #[pyo3(signature = (spec, max_order=None))]
    fn new(spec: &str, max_order: Option<usize>) -> PyResult<Self> {
        let parsed: GroupSpec = spec.parse().map_err(to_py_err)?;
        let table = build_group(&parsed, &limits(max_order, None)).map_err(to_py_err)?;
        Ok(Group { table })
    }

    #[getter]
    fn order(&self) -> usize {
        self.table.order()
    }

    #[getter]
    fn spec(&self) -> String {
        self.table.spec().to_string()
    }

    fn labels(&self) -> Vec<String> {
        self.table.labels().to_vec()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.table.rows()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.table.order();
        if a >= n || b >= n {
            return Err(PyValueError::new_err(format!(
                "element out of range 0..{n}"
            )));
        }
        Ok(self.table.mul(a, b))
    }

    fn element_order(&self, a: usize) -> PyResult<usize> {
        if a >= self.table.order() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.table.element_order(a))
    }

    fn validate(&self) -> bool {
        validate_group(&self.table).is_valid()
    }

    fn __len__(&self) -> usize {
        self.table.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Group('{}', order={})",
            self.table.spec(),
            self.table.order()
        )
    }
}

/// Full analysis report as a dict.
#[pyfunction]
#[pyo3(signature = (spec, all_witnesses=false, max_order=None, max_subgroups=None))]
fn analyze<'py>(
    py: Python<'py>,
    spec: &str,
    all_witnesses: bool,
    max_order: Option<usize>,
    max_subgroups: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let start = Instant::now();
    let a = analyze_spec(spec, &limits(max_order, max_subgroups))?;
    let report = AnalysisReport::new(&a, all_witnesses, start.elapsed().as_micros() as u64);
    json_value(py, &report.to_json())
}

/// Labels of the breaking points of one poset (`L`, `Lbar`, `C`, `Cbar`).
#[pyfunction]
#[pyo3(signature = (spec, poset="Lbar"))]
fn breaking_points(spec: &str, poset: &str) -> PyResult<Vec<String>> {
    let kind: PosetKind = poset.parse().map_err(PyValueError::new_err)?;
    let a = analyze_spec(spec, &Limits::default())?;
    let p = a.poset(kind);
    Ok(poset_breaking_points(p)
        .into_iter()
        .map(|x| p.label(x).to_string())
        .collect())
}

/// Whether the subgroup-class poset is a union of two proper intervals.
#[pyfunction]
fn in_class_c(spec: &str) -> PyResult<bool> {
    Ok(analyze_spec(spec, &Limits::default())?.in_class_c())
}

/// Run verification suites; returns the report dict with a `pass` flag.
#[pyfunction]
#[pyo3(signature = (suites=None))]
fn verify<'py>(py: Python<'py>, suites: Option<Vec<String>>) -> PyResult<Bound<'py, PyAny>> {
    let selected: Vec<Suite> = match suites {
        None => Suite::ALL.to_vec(),
        Some(names) if names.iter().any(|n| n == "all") => Suite::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| n.parse().map_err(PyValueError::new_err))
            .collect::<PyResult<_>>()?,
    };
    let results = run_suites(&selected, &Limits::default()).map_err(to_py_err)?;
    json_value(py, &VerifyReport::new(results).to_json())
}

/// Sweep group families up to `max_order`; returns a list of row dicts.
#[pyfunction]
#[pyo3(signature = (max_order, families=None))]
fn scan<'py>(
    py: Python<'py>,
    max_order: usize,
    families: Option<Vec<String>>,
) -> PyResult<Bound<'py, PyAny>> {
    let families: Vec<Family> = match families {
        None => Family::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| n.parse().map_err(PyValueError::new_err))
            .collect::<PyResult<_>>()?,
    };
    let rows = py.detach(|| scan_class_c(max_order, &families, &Limits::default()));
    let text = serde_json::to_string(&rows).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_value(py, &text)
}

#[pymodule]
fn pygrouplat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(breaking_points, m)?)?;
    m.add_function(wrap_pyfunction!(in_class_c, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}
