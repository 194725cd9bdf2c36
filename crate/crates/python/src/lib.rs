//! Python bindings: `pygkws.GkCurve`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gkws::agcode::build_code;
use gkws::curve::{enumerate_points, GkParams, PointSet};
use gkws::rrspace::{DimOracle, Divisor, Place};
use gkws::wsemi::{
    gamma_closed_form, is_pure_gap, membership_oracle, semigroup_box, single_point_gaps, PoleVector,
};

fn py_err(e: gkws::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn place(i: usize) -> Place {
    if i == 0 {
        Place::Inf
    } else {
        Place::P(i - 1)
    }
}

/// The GK curve over GF(n^6) with its dimension oracle.
#[pyclass(module = "pygkws", frozen)]
struct GkCurve {
    oracle: DimOracle,
    points: std::sync::OnceLock<PointSet>,
}

impl GkCurve {
    fn params(&self) -> &GkParams {
        self.oracle.params()
    }

    fn divisor(&self, inf: i64, pj: &[i64]) -> PyResult<Divisor> {
        self.oracle.divisor(inf, pj).map_err(py_err)
    }

    fn point_set(&self) -> PyResult<&PointSet> {
        if let Some(p) = self.points.get() {
            return Ok(p);
        }
        let pts = enumerate_points(self.params()).map_err(py_err)?;
        Ok(self.points.get_or_init(|| pts))
    }
}

#[pymethods]
impl GkCurve {
    #[new]
    fn new(n: u64) -> PyResult<Self> {
        Ok(GkCurve {
            oracle: DimOracle::new(GkParams::new(n).map_err(py_err)?),
            points: std::sync::OnceLock::new(),
        })
    }

    #[getter]
    fn n(&self) -> u64 {
        self.params().n
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.params().genus
    }

    /// Curve constants as a dict.
    fn constants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let p = self.params();
        let d = PyDict::new(py);
        d.set_item("n", p.n)?;
        d.set_item("q", p.q)?;
        d.set_item("a", p.a)?;
        d.set_item("b", p.b)?;
        d.set_item("c", p.c)?;
        d.set_item("genus", p.genus)?;
        d.set_item("points", p.expected_points)?;
        Ok(d)
    }

    fn point_count(&self) -> PyResult<u64> {
        Ok(self.point_set()?.total())
    }

    fn single_point_gaps(&self) -> Vec<u64> {
        single_point_gaps(self.params())
    }

    /// Minimal generating set at P_inf, P_1, .., P_m.
    fn gamma(&self, m: usize) -> PyResult<Vec<Vec<u32>>> {
        let g = gamma_closed_form(self.params(), m).map_err(py_err)?;
        Ok(g.into_iter().map(|v| v.0).collect())
    }

    /// `l(inf P_inf + sum pj[j] P_(j+1))`.
    #[pyo3(signature = (inf, pj = Vec::new()))]
    fn dim(&self, inf: i64, pj: Vec<i64>) -> PyResult<u64> {
        let d = self.divisor(inf, &pj)?;
        self.oracle.dim(&d).map_err(py_err)
    }

    /// Places are indexed with 0 for P_inf and j for P_j.
    #[pyo3(signature = (inf, pj, p, q))]
    fn is_discrepancy(&self, inf: i64, pj: Vec<i64>, p: usize, q: usize) -> PyResult<bool> {
        let d = self.divisor(inf, &pj)?;
        self.oracle
            .is_discrepancy(&d, place(p), place(q))
            .map_err(py_err)
    }

    fn in_semigroup(&self, tuple: Vec<u32>) -> PyResult<bool> {
        membership_oracle(&self.oracle, &PoleVector::new(tuple)).map_err(py_err)
    }

    fn is_pure_gap(&self, tuple: Vec<u32>) -> PyResult<bool> {
        is_pure_gap(&self.oracle, &PoleVector::new(tuple)).map_err(py_err)
    }

    /// Semigroup members in `[0, bound]^(m+1)`, lexicographic.
    fn semigroup_box(&self, m: usize, bound: u32) -> PyResult<Vec<Vec<u32>>> {
        let b = semigroup_box(&self.oracle, m, bound).map_err(py_err)?;
        Ok(b.members().into_iter().map(|v| v.0).collect())
    }

    /// Parameters of `C_L(D, G)` with `D` all points off `supp(G)`.
    #[pyo3(signature = (inf, pj = Vec::new()))]
    fn code_summary<'py>(
        &self,
        py: Python<'py>,
        inf: i64,
        pj: Vec<i64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let g = self.divisor(inf, &pj)?;
        let (_, s) = build_code(&self.oracle, self.point_set()?, &g).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("length", s.length)?;
        d.set_item("deg_g", s.deg_g)?;
        d.set_item("k", s.k)?;
        d.set_item("k_omega", s.k_omega)?;
        d.set_item("k_riemann_roch", s.k_riemann_roch)?;
        d.set_item("goppa_d", s.goppa_d)?;
        d.set_item("goppa_d_omega", s.goppa_d_omega)?;
        d.set_item("R", s.rate)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "GkCurve(n={}, genus={})",
            self.params().n,
            self.params().genus
        )
    }
}

#[pymodule]
fn pygkws(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<GkCurve>()?;
    Ok(())
}
