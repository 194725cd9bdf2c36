//! Truncated power series in the uniformizer `z` and local expansions of
//! `x - a_j`, `y` at the points `P_j = (a_j, 0, 0)`.

use std::sync::{Arc, RwLock};

use crate::curve::GkParams;
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};

/// A power series known modulo `z^prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Fe>,
}

impl Series {
    pub fn zero(prec: usize) -> Self {
        Series {
            coeffs: vec![Fe::ZERO; prec],
        }
    }

    pub fn constant(c: Fe, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if prec > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(prec: usize) -> Self {
        Self::constant(Fe::ONE, prec)
    }

    /// `z^k + O(z^prec)`.
    pub fn monomial(k: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if k < prec {
            s.coeffs[k] = Fe::ONE;
        }
        s
    }

    /// Coefficients beyond `prec` are dropped, missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<Fe>, prec: usize) -> Self {
        coeffs.resize(prec, Fe::ZERO);
        Series { coeffs }
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Fe {
        self.coeffs.get(k).copied().unwrap_or(Fe::ZERO)
    }

    /// Index of the first nonzero coefficient, if any below `prec`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        Series {
            coeffs: self.coeffs[..prec.min(self.prec())].to_vec(),
        }
    }

    pub fn add(&self, other: &Series, f: &FieldCtx) -> Series {
        let prec = self.prec().min(other.prec());
        Series {
            coeffs: (0..prec)
                .map(|k| f.add(self.coeffs[k], other.coeffs[k]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series, f: &FieldCtx) -> Series {
        let prec = self.prec().min(other.prec());
        Series {
            coeffs: (0..prec)
                .map(|k| f.sub(self.coeffs[k], other.coeffs[k]))
                .collect(),
        }
    }

    pub fn scale(&self, c: Fe, f: &FieldCtx) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|&v| f.mul(v, c)).collect(),
        }
    }

    /// Multiplication by `z^k`, keeping the precision.
    pub fn shift(&self, k: usize) -> Series {
        let prec = self.prec();
        let mut coeffs = vec![Fe::ZERO; prec];
        if k < prec {
            coeffs[k..].copy_from_slice(&self.coeffs[..prec - k]);
        }
        Series { coeffs }
    }

    pub fn mul(&self, other: &Series, f: &FieldCtx) -> Series {
        let prec = self.prec().min(other.prec());
        let mut out = vec![Fe::ZERO; prec];
        for (i, &a) in self.coeffs[..prec].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs[..prec - i].iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Series { coeffs: out }
    }

    pub fn inv_unit(&self, f: &FieldCtx) -> Result<Series> {
        let prec = self.prec();
        if prec == 0 {
            return Ok(Series::zero(0));
        }
        let b0 = f.inv(self.coeffs[0]).map_err(|_| Error::NonUnitInverse)?;
        let mut out = vec![Fe::ZERO; prec];
        out[0] = b0;
        for k in 1..prec {
            let mut acc = Fe::ZERO;
            for i in 1..=k {
                acc = f.add(acc, f.mul(self.coeffs[i], out[k - i]));
            }
            out[k] = f.neg(f.mul(b0, acc));
        }
        Ok(Series { coeffs: out })
    }

    pub fn pow(&self, mut e: u64, f: &FieldCtx) -> Series {
        let mut acc = Series::one(self.prec());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// `sum coeffs[i] * self^i` by Horner's rule.
    pub fn compose_poly(&self, coeffs: &[Fe], f: &FieldCtx) -> Series {
        let prec = self.prec();
        coeffs.iter().rev().fold(Series::zero(prec), |acc, &c| {
            acc.mul(self, f).add(&Series::constant(c, prec), f)
        })
    }
}

/// Local expansions at one point `P_j`.
#[derive(Clone, Debug)]
pub struct LocalChart {
    /// 0-based index into the list of points `P_j`.
    pub point: usize,
    pub a_j: Fe,
    /// `x - a_j`
    pub xi: Series,
    /// `y`
    pub eta: Series,
    pub prec: usize,
}

/// Solves both curve equations for `x - a_j` and `y` as series in `z`.
///
/// Iterates `eta = z^a / h(a_j + xi)` and `xi = eta^(n+1) - xi^n`; the
/// second comes from `(a_j + xi)^n = a_j^n + xi^n` in characteristic `p`.
pub fn expand_at(params: &GkParams, point: usize, a_j: Fe, prec: usize) -> Result<LocalChart> {
    let f = &params.field;
    let prec = prec.max(1);
    let h = params.h_coeffs();
    let a = params.a as usize;
    let n = params.n;

    let mut xi = Series::zero(prec);
    let mut eta = Series::zero(prec);
    // each round fixes at least c more coefficients of xi
    let max_rounds = prec / params.c as usize + 4;
    let mut converged = false;
    for _ in 0..max_rounds {
        let hx = xi.add(&Series::constant(a_j, prec), f).compose_poly(&h, f);
        let eta_next = hx
            .inv_unit(f)
            .map_err(|_| Error::PrecisionNotReached(prec))?
            .shift(a);
        let xi_next = eta_next.pow(n + 1, f).sub(&xi.pow(n, f), f);
        if xi_next == xi && eta_next == eta {
            converged = true;
            break;
        }
        xi = xi_next;
        eta = eta_next;
    }
    let chart = LocalChart {
        point,
        a_j,
        xi,
        eta,
        prec,
    };
    if !converged || !chart.residuals_vanish(params) {
        return Err(Error::PrecisionNotReached(prec));
    }
    Ok(chart)
}

impl LocalChart {
    /// `x = a_j + xi`.
    pub fn x_series(&self) -> Series {
        let mut s = self.xi.clone();
        s.coeffs[0] = self.a_j;
        s
    }

    /// True when both curve equations hold modulo `z^prec`.
    pub fn residuals_vanish(&self, params: &GkParams) -> bool {
        let f = &params.field;
        let x = self.x_series();
        let first = Series::monomial(params.a as usize, self.prec)
            .sub(&self.eta.mul(&x.compose_poly(&params.h_coeffs(), f), f), f);
        let second = x
            .pow(params.n, f)
            .add(&x, f)
            .sub(&self.eta.pow(params.n + 1, f), f);
        first.valuation().is_none() && second.valuation().is_none()
    }

    /// `x^alpha y^beta z^gamma` at this point.
    pub fn monomial_series(&self, alpha: u64, beta: u64, gamma: u64, f: &FieldCtx) -> Series {
        self.x_series()
            .pow(alpha, f)
            .mul(&self.eta.pow(beta, f), f)
            .shift(gamma as usize)
    }
}

/// Pole order of `x^alpha y^beta z^gamma` at `P_inf`.
pub fn pole_order_at_inf(params: &GkParams, alpha: u64, beta: u64, gamma: u64) -> u64 {
    alpha * params.c + beta * params.n * params.a + gamma * params.b
}

/// Charts at every `P_j`, recomputed at a higher precision on demand.
#[derive(Debug)]
pub struct ChartAtlas {
    a_values: Vec<Fe>,
    charts: RwLock<Arc<Vec<LocalChart>>>,
}

impl ChartAtlas {
    pub fn new(a_values: Vec<Fe>) -> Self {
        ChartAtlas {
            a_values,
            charts: RwLock::new(Arc::new(Vec::new())),
        }
    }

    pub fn a_values(&self) -> &[Fe] {
        &self.a_values
    }

    /// Charts with precision at least `prec`.
    pub fn charts(&self, params: &GkParams, prec: usize) -> Result<Arc<Vec<LocalChart>>> {
        {
            let cur = self.charts.read().unwrap();
            if !cur.is_empty() && cur[0].prec >= prec {
                return Ok(Arc::clone(&cur));
            }
        }
        let mut cur = self.charts.write().unwrap();
        if !cur.is_empty() && cur[0].prec >= prec {
            return Ok(Arc::clone(&cur));
        }
        // one extra period of c beyond the request
        let c = params.c as usize;
        let target = (prec.div_ceil(c) + 1) * c;
        let charts = self
            .a_values
            .iter()
            .enumerate()
            .map(|(j, &a_j)| expand_at(params, j, a_j, target))
            .collect::<Result<Vec<_>>>()?;
        *cur = Arc::new(charts);
        Ok(Arc::clone(&cur))
    }
}

/// Roots of `x^n + x`, i.e. the x-coordinates `a_j`, in element order.
pub fn p_point_abscissas(params: &GkParams) -> Vec<Fe> {
    let f = &params.field;
    f.elements()
        .filter(|&x| f.add(f.pow(x, params.n), x).is_zero())
        .collect()
}
