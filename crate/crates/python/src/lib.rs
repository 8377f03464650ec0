//! Python bindings: the main types and operations of the engine, exposed
//! in-process.  All numeric output stays exact (rationals as `p/q`
//! strings).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use std::str::FromStr;
use tautocycle::cycles;
use tautocycle::degeneration;
use tautocycle::ideal::{self, Direction, GradedIdeal, Point};
use tautocycle::macaulay;
use tautocycle::orbits::TautCombo;
use tautocycle::ring::{ParamForm, Rat, RingSpec};
use tautocycle::structure;

fn err(e: tautocycle::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.code()))
}

fn ring_from(vars: Option<Vec<String>>, param: Option<String>) -> PyResult<RingSpec> {
    let vars = vars.unwrap_or_else(|| {
        ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect()
    });
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    RingSpec::new(&refs, param.as_deref().unwrap_or("A")).map_err(err)
}

/// A graded ideal given by homogeneous generator strings.
#[pyclass(name = "Ideal", from_py_object)]
#[derive(Clone)]
struct PyIdeal {
    inner: GradedIdeal,
}

#[pymethods]
impl PyIdeal {
    #[new]
    #[pyo3(signature = (gens, vars=None, param=None))]
    fn new(gens: Vec<String>, vars: Option<Vec<String>>, param: Option<String>) -> PyResult<Self> {
        let ring = ring_from(vars, param)?;
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        Ok(PyIdeal { inner: GradedIdeal::parse(&ring, &refs).map_err(err)? })
    }

    fn generators(&self) -> Vec<String> {
        self.inner.generators().iter().map(|g| g.render()).collect()
    }

    fn variables(&self) -> Vec<String> {
        self.inner.ring().vars().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.generators().join(", "))
    }

    /// Saturated slice dimensions over `lo..=hi`.
    #[pyo3(signature = (lo, hi, cap=None))]
    fn hilbert_function(&self, lo: u32, hi: u32, cap: Option<u32>) -> Vec<usize> {
        let cap = cap.unwrap_or(hi + 4);
        ideal::hilbert_function(&self.inner, lo..=hi, cap)
            .iter()
            .map(|(_, v)| v)
            .collect()
    }

    /// The ideal-side Hilbert polynomial, rendered in binomial form.
    fn hilbert_polynomial(&self, cutoff: u32) -> PyResult<String> {
        Ok(ideal::hilbert_polynomial(&self.inner, cutoff).map_err(err)?.render())
    }

    #[pyo3(signature = (cutoff, seed=42))]
    fn regularity(&self, cutoff: u32, seed: u64) -> PyResult<u32> {
        ideal::regularity(&self.inner, cutoff, seed).map_err(err)
    }

    fn is_borel_fixed(&self) -> PyResult<bool> {
        ideal::is_borel_fixed(&self.inner).map_err(err)
    }

    /// Restriction modulo a linear form, as a new 3-variable ideal.
    #[pyo3(signature = (linear, cutoff=8))]
    fn restrict(&self, linear: &str, cutoff: u32) -> PyResult<PyIdeal> {
        let l = ParamForm::parse(linear, self.inner.ring()).map_err(err)?;
        Ok(PyIdeal {
            inner: degeneration::restrict_mod_linear(&self.inner, &l, cutoff).map_err(err)?,
        })
    }

    /// Star extension of a 3-variable ideal into the 4-variable ring.
    #[pyo3(signature = (cutoff=8))]
    fn star(&self, cutoff: u32) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: degeneration::star_extension(&self.inner, cutoff).map_err(err)? })
    }

    /// Flat limit under a diagonal action; direction is "zero" or
    /// "infinity".
    #[pyo3(signature = (weights, direction="zero", cutoff=8))]
    fn limit(&self, weights: Vec<i64>, direction: &str, cutoff: u32) -> PyResult<PyIdeal> {
        let dir = match direction {
            "zero" => Direction::ToZero,
            "infinity" => Direction::ToInfinity,
            other => return Err(PyValueError::new_err(format!("bad direction `{other}`"))),
        };
        let lim = degeneration::limit_ideal(&self.inner, &weights, dir, cutoff).map_err(err)?;
        Ok(PyIdeal { inner: lim.ideal })
    }

    /// CM part and punctual components: a dict with `cm` (generators) and
    /// `punctual` (point, primary generators, length).
    #[pyo3(signature = (cutoff=8))]
    fn cm_split<'py>(&self, py: Python<'py>, cutoff: u32) -> PyResult<Bound<'py, PyDict>> {
        let split = structure::cm_split(&self.inner, cutoff).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item(
            "cm",
            split.cm_part.generators().iter().map(|g| g.render()).collect::<Vec<_>>(),
        )?;
        let punctual = PyList::empty(py);
        for (p, q, len) in &split.punctual {
            let entry = PyDict::new(py);
            entry.set_item("point", p.0.iter().map(|c| c.to_string()).collect::<Vec<_>>())?;
            entry.set_item(
                "primary",
                q.generators().iter().map(|g| g.render()).collect::<Vec<_>>(),
            )?;
            entry.set_item("length", len)?;
            punctual.append(entry)?;
        }
        out.set_item("punctual", punctual)?;
        Ok(out)
    }

    /// The Hilbert-Chow cycle: list of (prime generators, multiplicity).
    #[pyo3(signature = (cutoff=8))]
    fn hilbert_chow(&self, cutoff: u32) -> PyResult<Vec<(Vec<String>, u64)>> {
        Ok(structure::hilbert_chow(&self.inner, cutoff).map_err(err)?.components)
    }

    /// Class of the torus-orbit closure in the (C0, C1, C2) basis.
    #[pyo3(signature = (a, b, seed=42))]
    fn complexity(&self, a: u32, b: u32, seed: u64) -> PyResult<Vec<String>> {
        let m = macaulay::ab_to_dg(a, b).map_err(err)?;
        let class = cycles::complexity(&self.inner, &m, seed).map_err(err)?;
        Ok(class.coeffs.iter().map(|c| c.to_string()).collect())
    }

    #[pyo3(signature = (a, b))]
    fn is_max_regularity_locus(&self, a: u32, b: u32) -> PyResult<bool> {
        let m = macaulay::ab_to_dg(a, b).map_err(err)?;
        structure::is_hm(&self.inner, &m).map_err(err)
    }
}

/// Macaulay data for `(a, b)`: degree, genus and the derived constants.
#[pyfunction]
fn macaulay_data(py: Python<'_>, a: u32, b: u32) -> PyResult<Bound<'_, PyDict>> {
    let m = macaulay::ab_to_dg(a, b).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("a", m.a)?;
    out.set_item("b", m.b)?;
    out.set_item("d", m.d)?;
    out.set_item("g", m.g)?;
    out.set_item("c", m.c)?;
    out.set_item("r", m.r)?;
    out.set_item("rho", m.rho)?;
    Ok(out)
}

/// Decompose a named family in its tautological basis; returns a dict of
/// exact rational strings.
#[pyfunction]
#[pyo3(signature = (family, a=None, b=None, d=None, seed=42))]
fn decompose_family<'py>(
    py: Python<'py>,
    family: &str,
    a: Option<u32>,
    b: Option<u32>,
    d: Option<u32>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let (dec, names): (cycles::Decomposition, &[&str]) = match (a, b, d) {
        (Some(a), Some(b), None) => {
            let m = macaulay::ab_to_dg(a, b).map_err(err)?;
            let fam = cycles::std_family(family, &m).map_err(err)?;
            (cycles::decompose(&fam, &m, seed).map_err(err)?, &["q0", "q1", "q2"])
        }
        (None, None, Some(d)) => {
            let fam = cycles::std_plane_family(family, d).map_err(err)?;
            (cycles::decompose_plane(&fam, d, seed).map_err(err)?, &["qE", "qF"])
        }
        _ => return Err(PyValueError::new_err("pass a and b, or d")),
    };
    let out = PyDict::new(py);
    for (n, c) in names.iter().zip(&dec.class.coeffs) {
        out.set_item(n, c.to_string())?;
    }
    out.set_item("effective", dec.class.cone_check())?;
    Ok(out)
}

/// Intersection number of a tautological combination `[(n, exp), ...]`
/// with a named family.
#[pyfunction]
#[pyo3(signature = (family, combo, a=None, b=None, d=None, seed=42))]
fn intersection_number(
    family: &str,
    combo: Vec<(u32, i64)>,
    a: Option<u32>,
    b: Option<u32>,
    d: Option<u32>,
    seed: u64,
) -> PyResult<String> {
    let fam = match (a, b, d) {
        (Some(a), Some(b), None) => {
            let m = macaulay::ab_to_dg(a, b).map_err(err)?;
            cycles::std_family(family, &m).map_err(err)?
        }
        (None, None, Some(d)) => cycles::std_plane_family(family, d).map_err(err)?,
        _ => return Err(PyValueError::new_err("pass a and b, or d")),
    };
    let mut tc = TautCombo::new();
    for (n, e) in combo {
        tc = tc.with(n, e);
    }
    let v = tautocycle::orbits::combo_degree(&fam, &tc, seed).map_err(err)?;
    Ok(v.to_string())
}

/// The dual-basis table and the maximal-regularity locus table; returns
/// (cells, all_match) with cells as (row, col, value, expected).
#[pyfunction]
#[pyo3(signature = (a, b, seed=42))]
fn intersection_tables(
    a: u32,
    b: u32,
    seed: u64,
) -> PyResult<(Vec<(String, String, String, String)>, bool)> {
    let m = macaulay::ab_to_dg(a, b).map_err(err)?;
    let t1 = cycles::intersection_table(&m, seed).map_err(err)?;
    let t2 = cycles::hm_intersection_table(&m, seed).map_err(err)?;
    let mut cells = Vec::new();
    for c in t1.cells.iter().chain(&t2.cells) {
        cells.push((c.row.clone(), c.col.clone(), c.value.clone(), c.expected.clone()));
    }
    Ok((cells, t1.all_match && t2.all_match))
}

/// Same-fiber predicate of the tautological morphism.
#[pyfunction]
#[pyo3(signature = (first, second, cutoff=8))]
fn f_equiv(first: &PyIdeal, second: &PyIdeal, cutoff: u32) -> PyResult<bool> {
    structure::f_equiv(&first.inner, &second.inner, cutoff).map_err(err)
}

/// Count essentially different linear factors of a monomial form.
#[pyfunction]
fn g_fiber_count_monomial(monomial: &str) -> PyResult<usize> {
    let ring = RingSpec::p2();
    let form = ParamForm::parse(monomial, &ring).map_err(err)?;
    let (m, _) = form
        .as_monomial()
        .ok_or_else(|| PyValueError::new_err("expected a single monomial"))?;
    structure::g_fiber_count(&structure::FactoredForm::Monomial(m)).map_err(err)
}

/// Linear projection of a point, cross-checked against the torus limit.
#[pyfunction]
fn project_point(point: Vec<String>, center: Vec<String>, plane: &str) -> PyResult<Vec<String>> {
    let parse = |v: &[String]| -> PyResult<Point> {
        Ok(Point(
            v.iter()
                .map(|s| Rat::from_str(s).map_err(|_| PyValueError::new_err(format!("bad rational `{s}`"))))
                .collect::<PyResult<Vec<_>>>()?,
        ))
    };
    let p = parse(&point)?;
    let c = parse(&center)?;
    let ring = if p.0.len() == 4 { RingSpec::p3() } else { RingSpec::p2() };
    let plane = ParamForm::parse(plane, &ring).map_err(err)?;
    let q = degeneration::project_point(&p, &c, &plane).map_err(err)?;
    Ok(q.0.iter().map(|x| x.to_string()).collect())
}

/// Run one verification criterion (1-12) and return (passed, line).
#[pyfunction]
#[pyo3(signature = (id, seed=42))]
fn run_criterion(id: u32, seed: u64) -> PyResult<(bool, String)> {
    use tautocycle::verify as v;
    let r = match id {
        1 => v::criterion_1(seed),
        2 => v::criterion_2(seed),
        3 => v::criterion_3(seed),
        4 => v::criterion_4(seed),
        5 => v::criterion_5(seed),
        6 => v::criterion_6(seed),
        7 => v::criterion_7(seed),
        8 => v::criterion_8(seed),
        9 => v::criterion_9(seed),
        10 => v::criterion_10(seed),
        11 => v::criterion_11(seed),
        _ => return Err(PyValueError::new_err("criterion id must be 1..=11 here")),
    };
    Ok((r.passed, r.line()))
}

#[pymodule]
fn tautocycle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(macaulay_data, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_family, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_number, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_tables, m)?)?;
    m.add_function(wrap_pyfunction!(f_equiv, m)?)?;
    m.add_function(wrap_pyfunction!(g_fiber_count_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(project_point, m)?)?;
    m.add_function(wrap_pyfunction!(run_criterion, m)?)?;
    Ok(())
}
