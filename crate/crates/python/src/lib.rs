//! Python module `hopfcontra`: named Hopf algebras, one-dimensional
//! coefficients, complexes, homology and session runs.

use hopfcontra::ayd::{build_trivial_coefficient, AydCoefficient, AydFlavour};
use hopfcontra::cyclic::{
    build_cocyclic_complex, build_cyclic_complex, homology_dims, verify_cyclic_relations, BuildOptions, HomologyMode,
    ModuleAlgebraData, ModuleCoalgebraData,
};
use hopfcontra::homconn::{curvature_and_flatness, hom_connection_from_contramodule};
use hopfcontra::hopf::{build_named_example, check_hopf_axioms, HopfData, NAMED_EXAMPLES};
use hopfcontra::report::Report;
use hopfcontra::session::{load_session, parse_session, Session, SessionError};
use hopfcontra::tasks::{run, Command, RunOptions};
use hopfcontra::{Error, FieldSpec, Scalar};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyOSError};
use pyo3::prelude::*;

create_exception!(hopfcontra, HopfContraError, PyException);

fn to_py(e: Error) -> PyErr {
    HopfContraError::new_err((e.kind(), e.to_string(), e.exit_code()))
}

fn parse_flavour(code: &str) -> PyResult<AydFlavour> {
    AydFlavour::ALL
        .into_iter()
        .find(|f| f.code() == code)
        .ok_or_else(|| to_py(Error::Validation(format!("unknown flavour {code:?}"))))
}

fn parse_scalars(field: FieldSpec, vals: &[String]) -> PyResult<Vec<Scalar>> {
    vals.iter().map(|s| field.parse_scalar(s).map_err(to_py)).collect()
}

fn verdict_list(r: &Report) -> Vec<(String, bool)> {
    r.verdicts.iter().map(|v| (v.name.clone(), v.pass)).collect()
}

/// A finite-dimensional Hopf algebra from the built-in catalogue.
#[pyclass(name = "HopfAlgebra", module = "hopfcontra", frozen)]
struct PyHopf {
    inner: HopfData,
    name: String,
}

#[pymethods]
impl PyHopf {
    #[new]
    #[pyo3(signature = (name, field = "Q"))]
    fn new(name: &str, field: &str) -> PyResult<Self> {
        let field: FieldSpec = field.parse().map_err(to_py)?;
        let inner = build_named_example(name, field).map_err(to_py)?;
        Ok(PyHopf { inner, name: name.to_string() })
    }

    #[getter]
    fn name(&self) -> &str {
        &self.name
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    fn is_cocommutative(&self) -> bool {
        self.inner.is_cocommutative()
    }

    /// Column `i` is the image of the `i`-th basis vector.
    fn antipode(&self) -> Vec<Vec<String>> {
        (0..self.inner.dim())
            .map(|i| self.inner.apply_antipode(i).iter().map(Scalar::to_canonical).collect())
            .collect()
    }

    /// `(name, passed)` per Hopf algebra axiom.
    fn check_axioms(&self) -> PyResult<Vec<(String, bool)>> {
        Ok(verdict_list(&check_hopf_axioms(&self.inner).map_err(to_py)?))
    }

    fn __repr__(&self) -> String {
        format!("HopfAlgebra({:?}, field={:?})", self.name, self.inner.field().to_string())
    }
}

/// An anti-Yetter-Drinfeld contramodule coefficient.
#[pyclass(name = "Coefficient", module = "hopfcontra", frozen)]
struct PyCoefficient {
    inner: AydCoefficient,
}

#[pymethods]
impl PyCoefficient {
    #[staticmethod]
    fn trivial(hopf: &PyHopf, flavour: &str) -> PyResult<Self> {
        let inner = build_trivial_coefficient(&hopf.inner, parse_flavour(flavour)?).map_err(to_py)?;
        Ok(PyCoefficient { inner })
    }

    /// Character values and the element defining the contra-action, both as
    /// coordinate strings in the algebra basis.
    #[staticmethod]
    fn one_dimensional(hopf: &PyHopf, flavour: &str, character: Vec<String>, element: Vec<String>) -> PyResult<Self> {
        let f = hopf.inner.field();
        let inner = AydCoefficient::one_dimensional(
            &hopf.inner,
            parse_flavour(flavour)?,
            &parse_scalars(f, &character)?,
            &parse_scalars(f, &element)?,
        )
        .map_err(to_py)?
        .evaluated(&hopf.inner)
        .map_err(to_py)?;
        Ok(PyCoefficient { inner })
    }

    #[getter]
    fn flavour(&self) -> &'static str {
        self.inner.flavour.code()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn accepted(&self) -> bool {
        self.inner.accepted()
    }

    fn check(&self, hopf: &PyHopf) -> PyResult<Vec<(String, bool)>> {
        let mut m = self.inner.clone();
        Ok(verdict_list(&m.evaluate(&hopf.inner).map_err(to_py)?))
    }
}

fn mode_of(mode: &str) -> PyResult<HomologyMode> {
    mode.parse().map_err(to_py)
}

fn build(hopf: &PyHopf, coefficient: &PyCoefficient, kind: &str, max_degree: usize, allow_unstable: bool) -> PyResult<hopfcontra::cyclic::CyclicComplexData> {
    let opts = BuildOptions { allow_unstable, ..BuildOptions::default() };
    let h = &hopf.inner;
    match kind {
        "cyclic" => build_cyclic_complex(h, &ModuleCoalgebraData::regular(h), &coefficient.inner, max_degree, &opts),
        "cocyclic" => build_cocyclic_complex(h, &ModuleAlgebraData::ground(h), &coefficient.inner, max_degree, &opts),
        other => Err(Error::Validation(format!("unknown complex kind {other:?}"))),
    }
    .map_err(to_py)
}

/// Dimensions of the cyclic (regular module coalgebra) or cocyclic (ground
/// module algebra) complex through `max_degree`.
#[pyfunction]
#[pyo3(signature = (hopf, coefficient, kind = "cyclic", max_degree = 3, allow_unstable = false))]
fn complex_dims(hopf: &PyHopf, coefficient: &PyCoefficient, kind: &str, max_degree: usize, allow_unstable: bool) -> PyResult<Vec<usize>> {
    Ok(build(hopf, coefficient, kind, max_degree, allow_unstable)?.dims())
}

#[pyfunction]
#[pyo3(signature = (hopf, coefficient, kind = "cyclic", max_degree = 3, allow_unstable = false))]
fn verify_relations(
    hopf: &PyHopf,
    coefficient: &PyCoefficient,
    kind: &str,
    max_degree: usize,
    allow_unstable: bool,
) -> PyResult<Vec<(String, bool)>> {
    Ok(verdict_list(&verify_cyclic_relations(&build(hopf, coefficient, kind, max_degree, allow_unstable)?)))
}

/// `(label, [(degree, dim)])` for degrees `0..=max_degree`.
#[pyfunction]
#[pyo3(signature = (hopf, coefficient, kind = "cyclic", mode = "hochschild", max_degree = 3))]
fn homology(
    hopf: &PyHopf,
    coefficient: &PyCoefficient,
    kind: &str,
    mode: &str,
    max_degree: usize,
) -> PyResult<(String, Vec<(usize, usize)>)> {
    let d = build(hopf, coefficient, kind, max_degree + 1, false)?;
    let t = homology_dims(&d, mode_of(mode)?).map_err(to_py)?;
    Ok((t.label, t.dims))
}

/// Whether the hom-connection induced by the coefficient is flat.
#[pyfunction]
fn hom_connection_flat(hopf: &PyHopf, coefficient: &PyCoefficient) -> PyResult<bool> {
    let hc = hom_connection_from_contramodule(&hopf.inner, &coefficient.inner).map_err(to_py)?;
    Ok(curvature_and_flatness(&hopf.inner, &hc).1.all_pass())
}

/// A parsed session file.
#[pyclass(name = "Session", module = "hopfcontra", frozen)]
struct PySession {
    inner: Session,
}

#[pymethods]
impl PySession {
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        match load_session(path) {
            Ok(inner) => Ok(PySession { inner }),
            Err(SessionError::Io(msg)) => Err(PyOSError::new_err(msg)),
            Err(SessionError::Core(e)) => Err(to_py(e)),
        }
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PySession { inner: parse_session(text.as_bytes()).map_err(to_py)? })
    }

    #[getter]
    fn digest(&self) -> &str {
        &self.inner.digest
    }

    #[getter]
    fn hopf(&self) -> String {
        self.inner.hopf_label()
    }

    /// Runs a command and returns `(exit_code, rendered_report)`.
    #[pyo3(signature = (command = "report", max_degree = None, mode = None, allow_unstable = false, canonical = true))]
    fn run(
        &self,
        command: &str,
        max_degree: Option<usize>,
        mode: Option<&str>,
        allow_unstable: bool,
        canonical: bool,
    ) -> PyResult<(i32, String)> {
        let command = [
            Command::Check,
            Command::BuildCyclic,
            Command::BuildCocyclic,
            Command::Homology,
            Command::Homconn,
            Command::Report,
        ]
        .into_iter()
        .find(|c| c.name() == command)
        .ok_or_else(|| to_py(Error::Validation(format!("unknown command {command:?}"))))?;
        let opts = RunOptions { max_degree, mode: mode.map(mode_of).transpose()?, allow_unstable, ..RunOptions::default() };
        let report = run(&self.inner, command, &opts).map_err(to_py)?;
        let text = if canonical { report.render_canonical() } else { report.render_text() };
        Ok((report.exit_code(), text))
    }
}

#[pymodule(name = "hopfcontra")]
fn hopfcontra_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NAMED_EXAMPLES", NAMED_EXAMPLES.to_vec())?;
    m.add("HopfContraError", m.py().get_type::<HopfContraError>())?;
    m.add_class::<PyHopf>()?;
    m.add_class::<PyCoefficient>()?;
    m.add_class::<PySession>()?;
    m.add_function(wrap_pyfunction!(complex_dims, m)?)?;
    m.add_function(wrap_pyfunction!(verify_relations, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    m.add_function(wrap_pyfunction!(hom_connection_flat, m)?)?;
    Ok(())
}
