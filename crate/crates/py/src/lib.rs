//! Python bindings for `mwlp_core`.

use std::collections::BTreeMap;

use mwlp_core as core;
use mwlp_core::{CutoffPolicy, MonomialIdeal, Monomial, OSequence, VarNames};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn names(letters: bool) -> VarNames {
    if letters {
        VarNames::Letters
    } else {
        VarNames::Indexed
    }
}

/// A monomial ideal in `x1..xn`.
#[pyclass(name = "Ideal", module = "pymwlp", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyIdeal {
    inner: MonomialIdeal,
}

impl From<MonomialIdeal> for PyIdeal {
    fn from(inner: MonomialIdeal) -> Self {
        PyIdeal { inner }
    }
}

#[pymethods]
impl PyIdeal {
    /// `Ideal(["x1^2", "x1*x2"], n=2)`; `n` defaults to the largest index used.
    #[new]
    #[pyo3(signature = (gens, n = None))]
    fn new(gens: Vec<String>, n: Option<usize>) -> PyResult<Self> {
        let mut text = n.map(|n| format!("vars {n}\n")).unwrap_or_default();
        for g in &gens {
            text.push_str(g);
            text.push('\n');
        }
        Self::parse(&text)
    }

    /// Reads the ideal file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(core::parse_ideal_text(text).map_err(err)?.ideal.into())
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[pyo3(signature = (letters = false))]
    fn gens(&self, letters: bool) -> Vec<String> {
        self.inner.gens().iter().map(|g| g.display(names(letters)).to_string()).collect()
    }

    fn contains(&self, monomial: &str) -> PyResult<bool> {
        let m = Monomial::parse(monomial, Some(self.inner.n())).map_err(PyValueError::new_err)?;
        self.inner.contains(&m).map_err(err)
    }

    /// Hilbert function through `dmax`, by default one past the socle degree.
    #[pyo3(signature = (dmax = None))]
    fn hilbert_function(&self, dmax: Option<u32>) -> PyResult<Vec<u64>> {
        let d = match dmax {
            Some(d) => d,
            None => self.inner.socle_degree().map_err(err)? as u32 + 1,
        };
        Ok(self.inner.hilbert_function(d))
    }

    fn is_artinian(&self) -> bool {
        self.inner.is_artinian()
    }

    fn is_stable(&self) -> bool {
        self.inner.is_stable()
    }

    fn is_strongly_stable(&self) -> bool {
        self.inner.is_strongly_stable()
    }

    fn project_rho(&self, i: usize) -> PyResult<Self> {
        Ok(self.inner.project_rho(i).map_err(err)?.into())
    }

    /// Graded Betti numbers of `R/I` as `{(i, j): beta}`.
    fn betti(&self) -> PyResult<BTreeMap<(usize, u32), u64>> {
        Ok(core::graded_betti(&self.inner).map_err(err)?.entries().collect())
    }

    fn betti_diagram(&self) -> PyResult<String> {
        Ok(core::graded_betti(&self.inner).map_err(err)?.render_diagram())
    }

    fn total_betti(&self) -> PyResult<Vec<u64>> {
        Ok(core::graded_betti(&self.inner).map_err(err)?.totals())
    }

    /// `m`-times WLP for strongly stable ideals; `m = 1` also accepts other
    /// monomial ideals through the sufficient monomial criterion.
    #[pyo3(signature = (m = 1))]
    fn has_wlp(&self, m: usize) -> PyResult<bool> {
        if m == 1 && !self.inner.is_strongly_stable() {
            return Ok(core::wlp_monomial_criterion(&self.inner).map_err(err)?.has_property);
        }
        Ok(core::has_m_wlp_stable(&self.inner, m).map_err(err)?.holds)
    }

    fn is_gotzmann(&self) -> bool {
        core::is_gotzmann(&self.inner, core::gotzmann_degree_bound(&self.inner))
    }

    /// `{"characterization", "direct", "cutoff", "k_m"}`.
    #[pyo3(signature = (m, cutoff = "km+1"))]
    fn maximal_betti(&self, m: usize, cutoff: &str) -> PyResult<BTreeMap<&'static str, usize>> {
        let policy = match cutoff {
            "km" => CutoffPolicy::Km,
            "km+1" => CutoffPolicy::KmPlusOne,
            other => return Err(PyValueError::new_err(format!("cutoff must be `km` or `km+1`, not `{other}`"))),
        };
        let r = core::has_maximal_betti(&self.inner, m, policy).map_err(err)?;
        Ok(BTreeMap::from([
            ("characterization", r.characterization as usize),
            ("direct", r.direct as usize),
            ("cutoff", r.cutoff as usize),
            ("k_m", r.k_m),
        ]))
    }

    /// `(totals, extremal_totals, rigidity_holds)`.
    fn rigidity(&self, m: usize) -> PyResult<(Vec<u64>, Vec<u64>, bool)> {
        let r = core::check_rigidity(&self.inner, m).map_err(err)?;
        let holds = r.implication_holds && r.graded_holds;
        Ok((r.totals, r.extremal_totals, holds))
    }

    /// Generators of the ideal distracted by a matrix in the matrix file format.
    #[pyo3(signature = (matrix, letters = false))]
    fn distract(&self, matrix: &str, letters: bool) -> PyResult<Vec<String>> {
        let l = core::DistractionMatrix::parse(matrix).map_err(err)?;
        let lifted = self.inner.extend(l.nvars()).map_err(err)?;
        let gens = core::distract_ideal(&l, &lifted).map_err(err)?;
        Ok(gens.iter().map(|g| g.display(names(letters))).collect())
    }

    /// Points of the standard distraction in `n + 1` variables, coordinates as strings.
    #[pyo3(signature = (cols = None))]
    fn points(&self, cols: Option<usize>) -> PyResult<Vec<Vec<String>>> {
        let top = self.inner.gens().iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap_or(1);
        let l = core::make_standard_distraction(self.inner.n() + 1, cols.unwrap_or(top.max(1) as usize)).map_err(err)?;
        let report = core::distraction_points(&self.inner, &l).map_err(err)?;
        Ok(report
            .points
            .iter()
            .map(|p| p.to_string().split(' ').map(str::to_string).collect())
            .collect())
    }

    fn to_file_string(&self) -> String {
        self.inner.to_file_string(VarNames::Indexed)
    }

    fn __len__(&self) -> usize {
        self.inner.gens().len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({}, n={})", self.inner, self.inner.n())
    }
}

#[pyfunction]
fn is_o_sequence(h: Vec<u64>) -> bool {
    core::is_o_sequence(&h)
}

#[pyfunction]
fn macaulay_bound(v: u64, d: u64) -> PyResult<u64> {
    core::macaulay_bound(v, d).map_err(err)
}

/// `(holds, deltas, lengths, reason)`.
#[pyfunction]
fn is_m_times_wl(h: Vec<u64>, m: usize) -> (bool, Vec<Vec<u64>>, Vec<usize>, Option<String>) {
    let r = core::is_m_times_wl(&h, m);
    let deltas = r.deltas.iter().map(|d| d.values().to_vec()).collect();
    (r.holds, deltas, r.lengths, r.reason)
}

#[pyfunction]
fn build_w(h: Vec<u64>, m: usize) -> PyResult<PyIdeal> {
    Ok(core::build_w(&h, m).map_err(err)?.into())
}

#[pyfunction]
fn lex_segment(h: Vec<u64>) -> PyResult<PyIdeal> {
    let h = OSequence::new(&h).map_err(err)?;
    Ok(core::lex_segment(&h).map_err(err)?.into())
}

#[pyfunction]
#[pyo3(signature = (seed, n, max_degree, target = None))]
fn random_strongly_stable(seed: u64, n: usize, max_degree: u32, target: Option<Vec<u64>>) -> PyResult<PyIdeal> {
    let target = target.map(|t| OSequence::new(&t)).transpose().map_err(err)?;
    Ok(core::random_strongly_stable(seed, n, max_degree, target.as_ref()).map_err(err)?.into())
}

/// The standard distraction matrix in the matrix file format.
#[pyfunction]
fn standard_distraction(n: usize, cols: usize) -> PyResult<String> {
    Ok(core::make_standard_distraction(n, cols).map_err(err)?.to_file_string(VarNames::Indexed))
}

#[pyfunction]
#[pyo3(signature = (matrix, budget = core::DEFAULT_SELECTION_BUDGET))]
fn is_valid_distraction(matrix: &str, budget: u128) -> PyResult<bool> {
    let l = core::DistractionMatrix::parse(matrix).map_err(err)?;
    core::is_valid_distraction(&l, budget).map_err(err)
}

#[pymodule]
pub fn pymwlp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(is_o_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(macaulay_bound, m)?)?;
    m.add_function(wrap_pyfunction!(is_m_times_wl, m)?)?;
    m.add_function(wrap_pyfunction!(build_w, m)?)?;
    m.add_function(wrap_pyfunction!(lex_segment, m)?)?;
    m.add_function(wrap_pyfunction!(random_strongly_stable, m)?)?;
    m.add_function(wrap_pyfunction!(standard_distraction, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_distraction, m)?)?;
    Ok(())
}
