use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use ybe::complexes::{conjugate_by_guitar, cycle_set_complex, AlphaBeta, BoundaryModel, ChainComplex, Side};
use ybe::extensions::{count_extension_classes, extend, is_2cocycle, Cochain2};
use ybe::guitar::{barj_identities, guitar, guitar_inverse};
use ybe::homology::{cohomology_groups, homology_at, orbits, FiniteAbelianGroup};
use ybe::io::{parse_document, to_json, Document};
use ybe::multipermutation::{
    canonical_form, doubling_extension, enumerate_cycle_sets, is_isomorphic, is_square_free, mp_level, nm_table,
    retract, EnumerationConfig, MpLevel, DEFAULT_BUDGET,
};
use ybe::structures::{self, LeftModule, RightModule};
use ybe::{fixtures, suites};

fn err(e: ybe::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn group(moduli: Vec<u64>) -> PyResult<FiniteAbelianGroup> {
    FiniteAbelianGroup::new(moduli).map_err(err)
}

fn homology_pair(cx: &ChainComplex, degree: usize) -> PyResult<(usize, Vec<u64>)> {
    let h = homology_at(cx, degree).map_err(err)?;
    Ok((h.betti, h.torsion))
}

#[pyclass(module = "ybe_py")]
#[derive(Clone)]
struct CycleSet {
    inner: structures::CycleSet,
}

#[pymethods]
impl CycleSet {
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(CycleSet { inner: structures::CycleSet::new(table).map_err(err)? })
    }

    #[staticmethod]
    fn trivial(n: usize) -> Self {
        CycleSet { inner: structures::CycleSet::trivial(n) }
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table().clone()
    }

    fn op(&self, a: usize, b: usize) -> usize {
        self.inner.op(a, b)
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        orbits(&self.inner)
    }

    fn is_square_free(&self) -> bool {
        is_square_free(&self.inner)
    }

    /// None when the cycle set is not a multipermutation solution.
    fn mp_level(&self) -> PyResult<Option<usize>> {
        Ok(match mp_level(&self.inner).map_err(err)?.level {
            MpLevel::Level(m) => Some(m),
            MpLevel::NotMultipermutation => None,
        })
    }

    fn retract(&self) -> PyResult<CycleSet> {
        Ok(CycleSet { inner: retract(&self.inner).map_err(err)? })
    }

    fn doubling(&self) -> PyResult<CycleSet> {
        Ok(CycleSet { inner: doubling_extension(&self.inner).map_err(err)? })
    }

    fn canonical_form(&self) -> PyResult<CycleSet> {
        Ok(CycleSet { inner: canonical_form(&self.inner).map_err(err)? })
    }

    fn is_isomorphic(&self, other: &CycleSet) -> bool {
        is_isomorphic(&self.inner, &other.inner)
    }

    /// (betti, torsion) of the cycle-set complex in `degree`.
    fn homology(&self, degree: usize) -> PyResult<(usize, Vec<u64>)> {
        homology_pair(&cycle_set_complex(&self.inner, degree + 1), degree)
    }

    /// Invariant factors of H^degree with coefficients in ∏ Z/k_i, degree 1 or 2.
    #[pyo3(signature = (degree, moduli = vec![2]))]
    fn cohomology(&self, degree: usize, moduli: Vec<u64>) -> PyResult<Vec<u64>> {
        Ok(cohomology_groups(&self.inner, degree, &group(moduli)?).map_err(err)?.invariants)
    }

    #[pyo3(signature = (moduli = vec![2]))]
    fn extension_classes(&self, moduli: Vec<u64>) -> PyResult<usize> {
        count_extension_classes(&self.inner, &group(moduli)?).map_err(err)
    }

    #[pyo3(signature = (values, moduli = vec![2]))]
    fn is_2cocycle(&self, values: Vec<Vec<usize>>, moduli: Vec<u64>) -> PyResult<bool> {
        let f = Cochain2::new(&group(moduli)?, values).map_err(err)?;
        is_2cocycle(&self.inner, &f).map_err(err)
    }

    /// Total cycle set of the extension by a 2-cocycle.
    #[pyo3(signature = (values, moduli = vec![2]))]
    fn extend(&self, values: Vec<Vec<usize>>, moduli: Vec<u64>) -> PyResult<CycleSet> {
        let f = Cochain2::new(&group(moduli)?, values).map_err(err)?;
        Ok(CycleSet { inner: extend(&self.inner, &f).map_err(err)?.total })
    }

    fn braided(&self) -> BraidedSet {
        BraidedSet { inner: structures::BraidedSet::from_cycle_set(&self.inner) }
    }

    fn to_json(&self) -> String {
        to_json(&Document::Cycle(self.inner.clone()))
    }

    fn __eq__(&self, other: &CycleSet) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("CycleSet({:?})", self.inner.table())
    }
}

#[pyclass(module = "ybe_py")]
#[derive(Clone)]
struct BraidedSet {
    inner: structures::BraidedSet,
}

#[pymethods]
impl BraidedSet {
    #[new]
    fn new(left: Vec<Vec<usize>>, right: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(BraidedSet { inner: structures::BraidedSet::new(left, right).map_err(err)? })
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn sigma(&self, a: usize, b: usize) -> (usize, usize) {
        self.inner.sigma(a, b)
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.classify();
        let d = PyDict::new_bound(py);
        d.set_item("left_nondegenerate", r.left_nondegenerate)?;
        d.set_item("right_nondegenerate", r.right_nondegenerate)?;
        d.set_item("invertible", r.invertible)?;
        d.set_item("involutive", r.involutive)?;
        d.set_item("weakly_ri_compatible", r.weakly_ri_compatible)?;
        d.set_item("ri_compatible", r.ri_compatible)?;
        d.set_item("t_map", r.t_map)?;
        Ok(d)
    }

    fn associated_shelf(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.inner.associated_shelf().map_err(err)?.table().clone())
    }

    fn guitar(&self, xs: Vec<usize>) -> Vec<usize> {
        guitar(&self.inner, &xs)
    }

    fn guitar_inverse(&self, ys: Vec<usize>) -> PyResult<Vec<usize>> {
        guitar_inverse(&self.inner, &ys).map_err(err)
    }

    /// family: "birack", "braided" or "star"; coefficients: "trivial" or "adjoint".
    #[pyo3(signature = (degree, alpha = 1, beta = -1, family = "birack", coefficients = "trivial"))]
    fn homology(
        &self,
        degree: usize,
        alpha: i64,
        beta: i64,
        family: &str,
        coefficients: &str,
    ) -> PyResult<(usize, Vec<u64>)> {
        let b = &self.inner;
        let (m, n) = match coefficients {
            "trivial" => (RightModule::trivial(b.size()), LeftModule::trivial(b.size())),
            "adjoint" => (RightModule::adjoint(b), LeftModule::adjoint(b)),
            other => return Err(PyValueError::new_err(format!("unknown coefficients {other}"))),
        };
        let model = match family {
            "birack" => BoundaryModel::birack(b, &m, &n),
            "braided" => BoundaryModel::braided(b, &m, &n, Side::Left, Side::Right),
            "star" => BoundaryModel::birack_star(b),
            other => return Err(PyValueError::new_err(format!("unknown family {other}"))),
        }
        .map_err(err)?;
        homology_pair(&model.chain_complex(degree + 1, AlphaBeta::new(alpha, beta)), degree)
    }

    /// J conjugates the braided faces into the birack faces, trivial and adjoint coefficients.
    #[pyo3(signature = (max_k = 3))]
    fn check_conjugation(&self, max_k: usize) -> PyResult<bool> {
        let b = &self.inner;
        let pairs = [
            (RightModule::trivial(b.size()), LeftModule::trivial(b.size())),
            (RightModule::adjoint(b), LeftModule::adjoint(b)),
        ];
        for (m, n) in pairs {
            if !conjugate_by_guitar(b, &m, &n, max_k).map_err(err)?.passed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_inverse_pairs(&self) -> PyResult<bool> {
        Ok(barj_identities(&self.inner).map_err(err)?.passed)
    }

    fn to_json(&self) -> String {
        to_json(&Document::Braided(self.inner.clone()))
    }

    fn __repr__(&self) -> String {
        format!("BraidedSet(size={})", self.inner.size())
    }
}

/// A built-in fixture; cycle-set fixtures come back as CycleSet.
#[pyfunction]
fn fixture(py: Python<'_>, name: &str) -> PyResult<PyObject> {
    let f = fixtures::by_name(name).ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name}")))?;
    Ok(match f.cycle_set {
        Some(c) => CycleSet { inner: c }.into_py(py),
        None => BraidedSet { inner: f.braided }.into_py(py),
    })
}

#[pyfunction]
fn fixture_names() -> Vec<String> {
    fixtures::names()
}

/// Parses a braided_set or cycle_set JSON document.
#[pyfunction]
fn from_json(py: Python<'_>, text: &str) -> PyResult<PyObject> {
    match parse_document(text).map_err(err)? {
        Document::Cycle(c) => Ok(CycleSet { inner: c }.into_py(py)),
        Document::Braided(b) => Ok(BraidedSet { inner: b }.into_py(py)),
        d => Err(PyValueError::new_err(format!("unsupported document kind {}", d.kind()))),
    }
}

#[pyfunction]
#[pyo3(signature = (size, square_free = false, up_to_iso = false, budget = DEFAULT_BUDGET))]
fn enumerate(size: usize, square_free: bool, up_to_iso: bool, budget: u64) -> PyResult<Vec<CycleSet>> {
    let cfg = EnumerationConfig { size, square_free, up_to_iso, budget };
    Ok(enumerate_cycle_sets(cfg).map_err(err)?.into_iter().map(|c| CycleSet { inner: c }).collect())
}

/// [N_0, …, N_max_m] from square-free cycle sets of size ≤ 6.
#[pyfunction]
fn nm(max_m: usize) -> PyResult<Vec<Option<usize>>> {
    Ok(nm_table(max_m, 6, DEFAULT_BUDGET).map_err(err)?.entries.into_iter().map(|e| e.1).collect())
}

/// (passed, JSON report) for a named suite.
#[pyfunction]
fn run_suite(name: &str) -> PyResult<(bool, String)> {
    let r = suites::run(name).ok_or_else(|| PyValueError::new_err(format!("unknown suite {name}")))?;
    Ok((r.passed, serde_json::to_string(&r).expect("reports serialize")))
}

#[pymodule]
fn ybe_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CycleSet>()?;
    m.add_class::<BraidedSet>()?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(from_json, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(nm, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("SUITES", suites::SUITE_NAMES.to_vec())?;
    Ok(())
}
