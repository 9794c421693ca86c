//! Python bindings: `import nsring`.
//!
//! Reports cross the boundary as plain dicts built from their JSON form.

use nsring_core::ci3::{detect_ci3 as detect, n_values_ci3};
use nsring_core::claims::reference_claims;
use nsring_core::family::{self, FamilySpec, GluedSemigroup};
use nsring_core::index::{self, Method};
use nsring_core::verify::{run as run_checks, Fault, VerifyConfig};
use nsring_core::{NsError, NumericalSemigroup};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(nsring, NsringError, PyValueError, "Invalid input to an nsring computation.");
create_exception!(nsring, NotApplicableError, NsringError, "Method does not apply to this semigroup.");
create_exception!(nsring, TooLargeError, NsringError, "Size cap exceeded.");
create_exception!(nsring, InconsistentError, NsringError, "Two computations disagreed.");

fn err(e: NsError) -> PyErr {
    let msg = e.to_string();
    match e {
        NsError::NotGorenstein { .. } | NsError::NotCiEdim3 { .. } | NsError::WrongEdim { .. } => {
            NotApplicableError::new_err(msg)
        }
        NsError::TooLarge { .. } => TooLargeError::new_err(msg),
        NsError::Inconsistent(_) => InconsistentError::new_err(msg),
        _ => NsringError::new_err(msg),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| NsringError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn method(name: &str) -> PyResult<Option<Method>> {
    if name == "auto" {
        return Ok(None);
    }
    name.parse::<Method>()
        .map(Some)
        .map_err(|_| NsringError::new_err(format!("unknown method `{name}`")))
}

/// A numerical semigroup given by generators with gcd 1.
#[pyclass(name = "NumericalSemigroup", module = "nsring", frozen)]
struct PySemigroup {
    inner: NumericalSemigroup,
}

impl PySemigroup {
    fn wrap(inner: NumericalSemigroup) -> Self {
        PySemigroup { inner }
    }
}

#[pymethods]
impl PySemigroup {
    #[new]
    fn new(generators: Vec<u64>) -> PyResult<Self> {
        NumericalSemigroup::new(&generators).map(Self::wrap).map_err(err)
    }

    /// Minimal generators, ascending.
    #[getter]
    fn generators(&self) -> Vec<u64> {
        self.inner.generators().to_vec()
    }

    /// Inputs dropped as non-minimal.
    #[getter]
    fn redundant(&self) -> Vec<u64> {
        self.inner.redundant_inputs().to_vec()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.inner.frobenius()
    }

    #[getter]
    fn multiplicity(&self) -> u64 {
        self.inner.multiplicity()
    }

    #[getter]
    fn embedding_dimension(&self) -> usize {
        self.inner.embedding_dimension()
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn __contains__(&self, w: u64) -> bool {
        self.inner.contains(w)
    }

    fn gaps(&self) -> PyResult<Vec<u64>> {
        self.inner.gaps().map_err(err)
    }

    /// Largest coefficient sum over representations of `w`.
    fn order(&self, w: u64) -> PyResult<u32> {
        self.inner.order(w).map_err(err)
    }

    /// `Ap(H; s)` as `(element, order)` pairs indexed by residue.
    fn apery_set(&self, s: u64) -> PyResult<Vec<(u64, u32)>> {
        let t = self.inner.apery_set(s).map_err(err)?;
        Ok(t.entries.iter().map(|e| (e.element, e.order)).collect())
    }

    /// Least `i` with `m^i ⊆ (t^s)`.
    #[pyo3(signature = (s, method = "apery"))]
    fn n_value(&self, s: u64, method: &str) -> PyResult<u32> {
        let m = self::method(method)?.unwrap_or(Method::Apery);
        index::n_value(&self.inner, s, m).map_err(err)
    }

    /// Index report as a dict.
    #[pyo3(signature = (method = "auto"))]
    fn index<'py>(&self, py: Python<'py>, method: &str) -> PyResult<Bound<'py, PyAny>> {
        let report = match self::method(method)? {
            None => index::index_auto(&self.inner),
            Some(m) => index::index(&self.inner, m),
        }
        .map_err(err)?;
        to_py(py, &report)
    }

    /// Complete-intersection structures; empty when not symmetric.
    fn ci3_structures<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let found = detect(&self.inner).map_err(err)?;
        let rows = found
            .iter()
            .map(|s| {
                let n = n_values_ci3(s).map_err(err)?;
                let mut v = serde_json::to_value(s).expect("serializable");
                v["n_values"] = serde_json::to_value(n).expect("serializable");
                Ok(v)
            })
            .collect::<PyResult<Vec<_>>>()?;
        to_py(py, &rows)
    }

    /// ⟨a, p·H⟩.
    fn glue(&self, a: u64, p: u64) -> PyResult<Self> {
        GluedSemigroup::root(self.inner.clone())
            .glue(a, p)
            .map(|g| Self::wrap(g.semigroup))
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("NumericalSemigroup({:?})", self.inner.generators())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.generators() == other.inner.generators()
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.generators().hash(&mut h);
        h.finish()
    }
}

/// H_{n,a} built by successive gluings.
#[pyfunction]
fn hna(n: u32, a: u64) -> PyResult<PySemigroup> {
    family::build_hna(n, a).map(|g| PySemigroup::wrap(g.semigroup)).map_err(err)
}

/// ⟨4n, (4n+1)(2n-1), (4n+1)(2n+1)⟩.
#[pyfunction]
fn ding_family(n: u32) -> PyResult<PySemigroup> {
    FamilySpec::DingGap3gen { n }
        .build()
        .map(|m| PySemigroup::wrap(m.semigroup))
        .map_err(err)
}

/// Expected `{"index", "ding_gap"}` for a family member given as a dict such
/// as `{"kind": "watanabe-hna", "n": 3, "a": 5}`.
#[pyfunction]
fn family_expected<'py>(py: Python<'py>, spec: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let text: String = py.import("json")?.call_method1("dumps", (spec,))?.extract()?;
    let spec: FamilySpec =
        serde_json::from_str(&text).map_err(|e| NsringError::new_err(format!("bad family spec: {e}")))?;
    let member = spec.build().map_err(err)?;
    to_py(py, &member.expected)
}

/// Formula-versus-oracle sweeps; returns a list of check outcomes.
#[pyfunction]
#[pyo3(signature = (seed = nsring_core::corpus::DEFAULT_SEED, ci3_count = 200, chain_count = 100, hna_max_n = 8, ding_max_n = 6, hypersurface_count = 50))]
fn verify<'py>(
    py: Python<'py>,
    seed: u64,
    ci3_count: usize,
    chain_count: usize,
    hna_max_n: u32,
    ding_max_n: u32,
    hypersurface_count: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let config = VerifyConfig {
        seed,
        ci3_count,
        chain_count,
        hna_max_n,
        ding_max_n,
        hypersurface_count,
        fault: Fault::None,
        ..VerifyConfig::default()
    };
    let outcomes = py.detach(|| run_checks(&config));
    to_py(py, &outcomes)
}

/// Reference values of the worked examples with recomputed values.
#[pyfunction]
fn reference_examples(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &reference_claims())
}

#[pymodule]
fn nsring(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PySemigroup>()?;
    m.add_function(wrap_pyfunction!(hna, m)?)?;
    m.add_function(wrap_pyfunction!(ding_family, m)?)?;
    m.add_function(wrap_pyfunction!(family_expected, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(reference_examples, m)?)?;
    m.add("NsringError", py.get_type::<NsringError>())?;
    m.add("NotApplicableError", py.get_type::<NotApplicableError>())?;
    m.add("TooLargeError", py.get_type::<TooLargeError>())?;
    m.add("InconsistentError", py.get_type::<InconsistentError>())?;
    Ok(())
}
