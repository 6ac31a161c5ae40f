//! Python bindings. Structured reports cross the boundary as JSON and arrive as plain dicts.

use std::path::Path as FsPath;
use std::sync::Arc;

use homquiver::coxeter::{build_weyl_group, cross_validate, CoxeterGroup, WeylType};
use homquiver::format::{parse_algebra, parse_algebra_file};
use homquiver::homology::{self, default_cap, minimal_resolution, Pd};
use homquiver::liecoh::{self, named_module};
use homquiver::pathalg::{PathAlgebra, DEFAULT_CAP};
use homquiver::presets::{quiver_preset, LieKind};
use homquiver::repcat::{indecomposable_projective, loewy_series, simple};
use homquiver::serre;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn py_err(e: homquiver::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// `int` for finite values, `float('inf')` otherwise.
fn pd_to_py(py: Python<'_>, p: Pd) -> PyResult<Py<PyAny>> {
    Ok(match p {
        Pd::Finite(n) => n.into_pyobject(py)?.into_any().unbind(),
        Pd::Infinite => f64::INFINITY.into_pyobject(py)?.into_any().unbind(),
    })
}

/// Finite-dimensional quotient of a path algebra over the rationals.
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: Arc<PathAlgebra>,
}

impl PyAlgebra {
    fn vertex(&self, name: &str) -> PyResult<usize> {
        let q = self.inner.quiver();
        q.vertex_index(name)
            .or_else(|| name.strip_prefix(['L', 'P']).and_then(|t| q.vertex_index(t)))
            .ok_or_else(|| PyValueError::new_err(format!("unknown vertex `{name}`")))
    }

    fn cap(&self, cap: Option<usize>) -> usize {
        cap.unwrap_or_else(|| default_cap(&self.inner))
    }
}

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        let p = quiver_preset(name).map_err(py_err)?;
        Ok(PyAlgebra { inner: Arc::new(p.algebra()) })
    }

    #[staticmethod]
    #[pyo3(signature = (text, path_cap = DEFAULT_CAP))]
    fn parse(text: &str, path_cap: usize) -> PyResult<Self> {
        let a = parse_algebra(text).and_then(|d| d.build(path_cap)).map_err(py_err)?;
        Ok(PyAlgebra { inner: Arc::new(a) })
    }

    #[staticmethod]
    #[pyo3(signature = (path, path_cap = DEFAULT_CAP))]
    fn from_file(path: &str, path_cap: usize) -> PyResult<Self> {
        let a = parse_algebra_file(FsPath::new(path))
            .and_then(|d| d.build(path_cap))
            .map_err(py_err)?;
        Ok(PyAlgebra { inner: Arc::new(a) })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.quiver().vertices().to_vec()
    }

    fn basis(&self) -> Vec<String> {
        self.inner.basis().iter().map(|p| self.inner.write_path(p)).collect()
    }

    fn projective_dims(&self, vertex: &str) -> PyResult<Vec<usize>> {
        Ok(self.inner.projective_dims(self.vertex(vertex)?))
    }

    /// Radical layers of `P_v`, top first, as multiplicity vectors.
    fn loewy_layers(&self, vertex: &str) -> PyResult<Vec<Vec<usize>>> {
        Ok(loewy_series(&indecomposable_projective(&self.inner, self.vertex(vertex)?)))
    }

    /// Multiplicity vectors of the minimal projective resolution of a simple.
    #[pyo3(signature = (vertex, cap = None))]
    fn resolve(&self, vertex: &str, cap: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
        let res = minimal_resolution(&simple(&self.inner, self.vertex(vertex)?), self.cap(cap)).map_err(py_err)?;
        Ok(res.multiplicities())
    }

    #[pyo3(signature = (vertex, cap = None))]
    fn pd(&self, py: Python<'_>, vertex: &str, cap: Option<usize>) -> PyResult<Py<PyAny>> {
        let p = homology::proj_dim_with_cap(&simple(&self.inner, self.vertex(vertex)?), self.cap(cap)).map_err(py_err)?;
        pd_to_py(py, p)
    }

    #[pyo3(signature = (cap = None))]
    fn global_dim(&self, py: Python<'_>, cap: Option<usize>) -> PyResult<Py<PyAny>> {
        pd_to_py(py, homology::global_dim(&self.inner, self.cap(cap)).map_err(py_err)?)
    }

    /// `dim Ext^d(L_m, L_n)`.
    fn ext(&self, m: &str, n: &str, degree: usize) -> PyResult<usize> {
        let (i, j) = (self.vertex(m)?, self.vertex(n)?);
        homology::ext_dim(&simple(&self.inner, i), &simple(&self.inner, j), degree).map_err(py_err)
    }

    /// `table[d][i][j] = dim Ext^d(L_i, L_j)`.
    #[pyo3(signature = (max_degree = 2))]
    fn ext_quiver(&self, max_degree: usize) -> PyResult<Vec<Vec<Vec<usize>>>> {
        Ok(homology::ext_quiver(&self.inner, max_degree).map_err(py_err)?.entries)
    }

    fn initial_segments(&self) -> PyResult<Vec<Vec<String>>> {
        let segs = serre::initial_segments(&self.inner, self.cap(None)).map_err(py_err)?;
        let names = self.inner.quiver().vertices();
        Ok(segs.iter().map(|s| s.iter().map(|&v| names[v].clone()).collect()).collect())
    }

    /// Dimension of the quotient algebra cutting out the Serre subcategory of the given simples.
    fn serre_quotient_dim(&self, simples: Vec<String>) -> PyResult<usize> {
        let s = simples.iter().map(|x| self.vertex(x)).collect::<PyResult<Vec<_>>>()?;
        Ok(serre::serre_subcategory(&self.inner, &s).map_err(py_err)?.quotient().dim())
    }

    #[pyo3(signature = (simples, cap = 4))]
    fn extension_fullness(&self, py: Python<'_>, simples: Vec<String>, cap: usize) -> PyResult<Py<PyAny>> {
        let s = simples.iter().map(|x| self.vertex(x)).collect::<PyResult<Vec<_>>>()?;
        to_py(py, &serre::extension_fullness(&self.inner, &s, cap).map_err(py_err)?)
    }

    #[pyo3(signature = (cap = 4))]
    fn guichardet(&self, py: Python<'_>, cap: usize) -> PyResult<Py<PyAny>> {
        to_py(py, &serre::guichardet(&self.inner, cap).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("Algebra(vertices={:?}, dim={})", self.inner.quiver().vertices(), self.inner.dim())
    }
}

/// Finite Weyl group with Bruhat order and closed-form evaluators.
#[pyclass(name = "WeylGroup", frozen)]
struct PyWeylGroup {
    inner: CoxeterGroup,
}

#[pymethods]
impl PyWeylGroup {
    #[new]
    fn new(weyl_type: &str) -> PyResult<Self> {
        let t = WeylType::parse(weyl_type).map_err(py_err)?;
        Ok(PyWeylGroup { inner: build_weyl_group(t).map_err(py_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn length(&self, element: &str) -> PyResult<usize> {
        Ok(self.inner.length(self.inner.parse_element(element).map_err(py_err)?))
    }

    fn bruhat_leq(&self, u: &str, w: &str) -> PyResult<bool> {
        let u = self.inner.parse_element(u).map_err(py_err)?;
        let w = self.inner.parse_element(w).map_err(py_err)?;
        Ok(self.inner.bruhat_leq(u, w))
    }

    fn a_function(&self, element: &str) -> PyResult<usize> {
        Ok(self.inner.a_function(self.inner.parse_element(element).map_err(py_err)?))
    }

    fn coideals(&self) -> PyResult<Vec<Vec<String>>> {
        let c = self.inner.coideals().map_err(py_err)?;
        Ok(c.iter().map(|c| c.iter().map(|&w| self.inner.name(w)).collect()).collect())
    }

    /// `(pd simple Verma, gl.dim, pd dominant simple)` for a singular block with the given
    /// parabolic generators (0-based).
    fn thm777(&self, parabolic: Vec<usize>) -> PyResult<(usize, usize, usize)> {
        self.inner.thm777_eval(&parabolic).map_err(py_err)
    }

    #[pyo3(signature = (element, base_pd = None))]
    fn oinf_formulas(&self, py: Python<'_>, element: &str, base_pd: Option<usize>) -> PyResult<Py<PyAny>> {
        let w = self.inner.parse_element(element).map_err(py_err)?;
        to_py(py, &self.inner.oinf_formulas(w, base_pd))
    }
}

/// Finite-dimensional Lie algebra over the rationals.
#[pyclass(name = "LieAlgebra", frozen)]
struct PyLieAlgebra {
    inner: liecoh::LieAlgebra,
}

#[pymethods]
impl PyLieAlgebra {
    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        Ok(PyLieAlgebra { inner: LieKind::parse(name).map_err(py_err)?.algebra() })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyLieAlgebra { inner: liecoh::parse_lie_algebra(text).map_err(py_err)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn is_unimodular(&self) -> bool {
        self.inner.is_unimodular()
    }

    /// Chevalley–Eilenberg cohomology dimensions with coefficients in a named module.
    #[pyo3(signature = (module = "trivial"))]
    fn cohomology(&self, module: &str) -> PyResult<Vec<usize>> {
        let v = named_module(&self.inner, module).map_err(py_err)?;
        Ok(liecoh::cohomology_dims(&self.inner, &v))
    }

    #[pyo3(signature = (module = "trivial"))]
    fn top_degree_check(&self, py: Python<'_>, module: &str) -> PyResult<Py<PyAny>> {
        let v = named_module(&self.inner, module).map_err(py_err)?;
        to_py(py, &liecoh::top_degree_check(&self.inner, &v))
    }

    #[pyo3(signature = (module = "trivial"))]
    fn poincare_check(&self, py: Python<'_>, module: &str) -> PyResult<Py<PyAny>> {
        let v = named_module(&self.inner, module).map_err(py_err)?;
        to_py(py, &liecoh::poincare_check(&self.inner, &v))
    }
}

/// Closed-form predictions against the engine on an annotated preset.
#[pyfunction]
fn cross_validate_preset(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    let p = quiver_preset(name).map_err(py_err)?;
    let ann = p
        .annotations
        .coxeter
        .clone()
        .ok_or_else(|| PyValueError::new_err(format!("preset `{name}` has no Coxeter annotation")))?;
    let a = Arc::new(p.algebra());
    to_py(py, &cross_validate(&a, &ann, default_cap(&a)).map_err(py_err)?)
}

/// Run a command line (without the program name); returns the report as a dict.
#[pyfunction]
fn run_cli(py: Python<'_>, args: Vec<String>) -> PyResult<Py<PyAny>> {
    let report = homquiver::cli::run_command(std::iter::once("homquiver".to_string()).chain(args));
    to_py(py, &report)
}

#[pymodule]
fn pyhomquiver(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyWeylGroup>()?;
    m.add_class::<PyLieAlgebra>()?;
    m.add_function(wrap_pyfunction!(cross_validate_preset, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
