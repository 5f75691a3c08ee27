//! Python bindings: polynomials, graded quotients, the four-parameter
//! family, invariant-ring reports, and the parameter scanner. Structured
//! reports are returned as JSON strings; parse them with `json.loads`.

// the #[pymethods] expansion trips this lint on every fallible method
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use lefforge::family::{FamilyParams, GridSpec};
use lefforge::invariants::YoungSubgroup;
use lefforge::lefschetz::GradedSubspaceFamily;
use lefforge::polycore::{parse_polynomial, parse_rational};
use lefforge::quotient::GradedIdealPresentation;
use lefforge::symmetry::PartitionOfN;

fn err(e: lefforge::Error) -> PyErr {
    match e {
        lefforge::Error::NonIntegerMultiplicity { .. } | lefforge::Error::NonStableIdeal(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Exact multivariate polynomial over the rationals.
#[pyclass(name = "Polynomial")]
#[derive(Clone)]
struct PyPolynomial {
    inner: lefforge::Polynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Parse from text, e.g. `Polynomial("x1^2 + 2*x1*x2", 2)`.
    #[new]
    fn new(text: &str, n: usize) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: parse_polynomial(text, n).map_err(err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial(\"{}\", {})", self.inner, self.inner.n_vars())
    }

    fn __add__(&self, other: &PyPolynomial) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __sub__(&self, other: &PyPolynomial) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial {
            inner: self.inner.sub(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, other: &PyPolynomial) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &PyPolynomial) -> bool {
        self.inner == other.inner
    }

    fn n_vars(&self) -> usize {
        self.inner.n_vars()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }
}

/// A graded Artinian quotient built degree by degree.
#[pyclass(name = "Quotient")]
struct PyQuotient {
    inner: lefforge::GradedQuotient,
}

#[pymethods]
impl PyQuotient {
    /// Build R/(generators) up to `top_degree` (default: the complete
    /// intersection socle bound + 1).
    #[new]
    #[pyo3(signature = (n, generators, top_degree=None))]
    fn new(n: usize, generators: Vec<String>, top_degree: Option<usize>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|g| parse_polynomial(g, n))
            .collect::<lefforge::Result<Vec<_>>>()
            .map_err(err)?;
        let pres = GradedIdealPresentation::new(n, gens).map_err(err)?;
        let top = top_degree.unwrap_or(pres.ci_socle_degree() + 1);
        Ok(PyQuotient {
            inner: lefforge::quotient::build_quotient(pres, top).map_err(err)?,
        })
    }

    fn hilbert_function(&self) -> Vec<usize> {
        self.inner.hilbert_function().values().to_vec()
    }

    fn dim(&self, d: usize) -> PyResult<usize> {
        self.inner.dim(d).map_err(err)
    }

    fn socle_degree(&self) -> usize {
        self.inner.presentation().ci_socle_degree()
    }

    fn is_complete_intersection(&self) -> PyResult<bool> {
        let report =
            lefforge::GradedQuotient::complete_intersection_report(self.inner.presentation())
                .map_err(err)?;
        Ok(report.is_ci)
    }

    /// Canonical representative of the residue class, as text.
    fn normal_form(&self, polynomial: &str) -> PyResult<String> {
        let p = parse_polynomial(polynomial, self.inner.n_vars()).map_err(err)?;
        let (d, coords) = self.inner.normal_form(&p).map_err(err)?;
        let rep = self.inner.lift(d, &coords).map_err(err)?;
        Ok(rep.to_string())
    }

    /// Weak/strong Lefschetz report for a linear form, as a JSON string.
    fn lefschetz_report(&self, element: &str) -> PyResult<String> {
        let ell = parse_polynomial(element, self.inner.n_vars()).map_err(err)?;
        let family = GradedSubspaceFamily::full(&self.inner);
        let report = lefforge::lefschetz::lefschetz_report(&family, &ell).map_err(err)?;
        Ok(serde_json::to_string(&report).expect("serializable"))
    }

    /// Invariant-ring data for a Young subgroup, as a JSON string with
    /// keys blocks, invariant_hilbert, degree_one_hilbert,
    /// standard_grading, min_generator_degrees, slp_e1.
    fn invariant_report(&self, blocks: Vec<usize>) -> PyResult<String> {
        let group = YoungSubgroup::new(blocks).map_err(err)?;
        let inv = lefforge::invariants::invariant_hilbert_function(&self.inner, &group)
            .map_err(err)?;
        let gen1 =
            lefforge::invariants::degree_one_generated_hf(&self.inner, &group).map_err(err)?;
        let min_gens = lefforge::invariants::minimal_generator_degrees(&self.inner, &group)
            .map_err(err)?;
        let n = self.inner.n_vars();
        let e1 = lefforge::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>())
            .map_err(err)?;
        let slp = lefforge::invariants::invariant_slp_check(&self.inner, &group, &e1)
            .map_err(err)?;
        let doc = serde_json::json!({
            "blocks": group.blocks(),
            "invariant_hilbert": inv.values(),
            "degree_one_hilbert": gen1.values(),
            "standard_grading": inv == gen1,
            "min_generator_degrees": min_gens,
            "slp_e1": slp.strong,
        });
        Ok(serde_json::to_string(&doc).expect("serializable"))
    }
}

/// One member of the equivariant four-parameter quadratic family.
#[pyclass(name = "Family")]
struct PyFamily {
    inner: lefforge::FamilyInstance,
}

#[pymethods]
impl PyFamily {
    /// `Family(5, ["1", "0", "0", "0"])`; parameters are rationals given
    /// as strings or integers.
    #[new]
    fn new(n: usize, params: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        if params.len() != 4 {
            return Err(PyValueError::new_err("params must have length 4"));
        }
        let mut values = Vec::with_capacity(4);
        for p in &params {
            let text = if let Ok(i) = p.extract::<i64>() {
                i.to_string()
            } else {
                p.extract::<String>()?
            };
            values.push(parse_rational(&text).map_err(err)?);
        }
        let params = FamilyParams::new(
            values[0].clone(),
            values[1].clone(),
            values[2].clone(),
            values[3].clone(),
        )
        .map_err(err)?;
        Ok(PyFamily {
            inner: lefforge::family::build_family(n, params).map_err(err)?,
        })
    }

    fn generators(&self) -> Vec<String> {
        self.inner
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    fn is_ci(&self) -> bool {
        self.inner.is_ci()
    }

    fn e1sq_in_ideal(&self) -> bool {
        self.inner.e1sq_in_ideal()
    }

    fn hilbert_function(&self) -> Vec<usize> {
        self.inner.quotient().hilbert_function().values().to_vec()
    }

    /// Lefschetz report for e1 (or a given linear form), as JSON.
    #[pyo3(signature = (element=None))]
    fn lefschetz_report(&self, element: Option<&str>) -> PyResult<String> {
        let n = self.inner.n();
        let ell = match element {
            Some(text) => parse_polynomial(text, n).map_err(err)?,
            None => lefforge::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>())
                .map_err(err)?,
        };
        let family = GradedSubspaceFamily::full(self.inner.quotient());
        let report = lefforge::lefschetz::lefschetz_report(&family, &ell).map_err(err)?;
        Ok(serde_json::to_string(&report).expect("serializable"))
    }

    /// Invariant-ring report for a Young subgroup, as JSON.
    fn invariant_report(&self, blocks: Vec<usize>) -> PyResult<String> {
        let group = YoungSubgroup::new(blocks).map_err(err)?;
        let q = self.inner.quotient();
        let inv = lefforge::invariants::invariant_hilbert_function(q, &group).map_err(err)?;
        let gen1 = lefforge::invariants::degree_one_generated_hf(q, &group).map_err(err)?;
        let min_gens =
            lefforge::invariants::minimal_generator_degrees(q, &group).map_err(err)?;
        let n = self.inner.n();
        let e1 = lefforge::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>())
            .map_err(err)?;
        let slp = lefforge::invariants::invariant_slp_check(q, &group, &e1).map_err(err)?;
        let vde = lefforge::invariants::vandermonde_generators(self.inner.generators(), &group)
            .ok()
            .map(|vg| {
                lefforge::invariants::ideal_intersection_equality(q, &group, &vg, 2 * n + 2)
                    .map(|r| r.equal)
            })
            .transpose()
            .map_err(err)?;
        let doc = serde_json::json!({
            "blocks": group.blocks(),
            "invariant_hilbert": inv.values(),
            "degree_one_hilbert": gen1.values(),
            "standard_grading": inv == gen1,
            "min_generator_degrees": min_gens,
            "slp_e1": slp.strong,
            "vandermonde_ideal_equal": vde,
        });
        Ok(serde_json::to_string(&doc).expect("serializable"))
    }
}

/// The n=3 resultant-style product ab(a−3)(b−3)(ab−a−2b)(ab−2a−b) and the
/// Artinian-ness of the associated quadrics, as (value, is_ci).
#[pyfunction]
fn n3_resultant(a: &str, b: &str) -> PyResult<(String, bool)> {
    let a = parse_rational(a).map_err(err)?;
    let b = parse_rational(b).map_err(err)?;
    let probe = lefforge::family::n3_resultant_value(&a, &b).map_err(err)?;
    Ok((
        lefforge::polycore::format_rational(&probe.value),
        probe.is_ci,
    ))
}

/// Classify every point of a grid (see the CLI `scan`); returns the rows
/// as a JSON string.
#[pyfunction]
fn scan(n: usize, blocks: Vec<usize>, grid: &str) -> PyResult<String> {
    let group = YoungSubgroup::new(blocks).map_err(err)?;
    let spec = GridSpec::parse(grid).map_err(err)?;
    let report = lefforge::family::scan_parameters(n, &group, &spec).map_err(err)?;
    Ok(serde_json::to_string(&report.rows).expect("serializable"))
}

/// Exact symmetric-group character value χ_λ(μ).
#[pyfunction]
fn character_value(lambda: Vec<usize>, mu: Vec<usize>) -> PyResult<i64> {
    let lambda = PartitionOfN::new(lambda).map_err(err)?;
    let mu = PartitionOfN::new(mu).map_err(err)?;
    lefforge::symmetry::character_value(&lambda, &mu).map_err(err)
}

/// The Specht polynomials of shape (n−2, 2), as text.
#[pyfunction]
fn specht_basis(n: usize) -> PyResult<Vec<String>> {
    Ok(lefforge::polycore::specht_basis(n)
        .map_err(err)?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

#[pymodule]
fn lefforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyQuotient>()?;
    m.add_class::<PyFamily>()?;
    m.add_function(wrap_pyfunction!(n3_resultant, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(character_value, m)?)?;
    m.add_function(wrap_pyfunction!(specht_basis, m)?)?;
    Ok(())
}
