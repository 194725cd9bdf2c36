//! Riemann-Roch dimensions `l(G)` for divisors supported on `P_inf, P_1..P_n`.
//!
//! `L(N P_inf)` has the monomial basis `x^alpha y^beta z^gamma` with
//! `beta <= n`, `gamma <= n^2 - n` and pole order at most `N`. A divisor
//! `G = g_inf P_inf + sum g_j P_j` is first moved to `G'` with `g'_j <= 0`
//! using `(x - a_j) = c P_j - c P_inf`; then `L(G')` is the subspace of
//! `L(g'_inf P_inf)` vanishing to order `-g'_j` at each `P_j`, read off the
//! local expansions in the uniformizer `z`.
//!
//! Ranks of the vanishing constraints only depend on the orders
//! `r_j = -g'_j`, so for each such vector the oracle keeps a rank profile
//! over the pole-ordered basis and answers every `g'_inf` from it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::curve::GkParams;
use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::linalg::{Echelon, Matrix};
use crate::localdata::{p_point_abscissas, pole_order_at_inf, ChartAtlas, LocalChart, Series};

/// One of the distinguished points `P_inf, P_1, .., P_n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Inf,
    /// 0-based index; `P(0)` is `P_1`.
    P(usize),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Inf => write!(f, "P_inf"),
            Place::P(j) => write!(f, "P_{}", j + 1),
        }
    }
}

/// `inf * P_inf + sum pj[j] * P_(j+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Divisor {
    pub inf: i64,
    pub pj: Vec<i64>,
}

impl Divisor {
    /// Pads `pj` to length `n`; more than `n` coefficients is an error.
    pub fn new(params: &GkParams, inf: i64, pj: &[i64]) -> Result<Self> {
        let n = params.n as usize;
        if pj.len() > n {
            return Err(Error::UnsupportedSupport);
        }
        let mut coeffs = pj.to_vec();
        coeffs.resize(n, 0);
        Ok(Divisor { inf, pj: coeffs })
    }

    pub fn zero(params: &GkParams) -> Self {
        Divisor {
            inf: 0,
            pj: vec![0; params.n as usize],
        }
    }

    pub fn at_inf(params: &GkParams, k: i64) -> Self {
        Divisor {
            inf: k,
            ..Self::zero(params)
        }
    }

    pub fn degree(&self) -> i64 {
        self.inf + self.pj.iter().sum::<i64>()
    }

    pub fn coeff(&self, place: Place) -> i64 {
        match place {
            Place::Inf => self.inf,
            Place::P(j) => self.pj.get(j).copied().unwrap_or(0),
        }
    }

    /// `self + k * place`.
    pub fn plus(&self, place: Place, k: i64) -> Result<Self> {
        let mut out = self.clone();
        match place {
            Place::Inf => out.inf += k,
            Place::P(j) => *out.pj.get_mut(j).ok_or(Error::UnsupportedSupport)? += k,
        }
        Ok(out)
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        Divisor {
            inf: self.inf + other.inf,
            pj: self.pj.iter().zip(&other.pj).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        Divisor {
            inf: self.inf - other.inf,
            pj: self.pj.iter().zip(&other.pj).map(|(a, b)| a - b).collect(),
        }
    }

    /// Places with a nonzero coefficient.
    pub fn support(&self) -> Vec<Place> {
        let mut out = Vec::new();
        if self.inf != 0 {
            out.push(Place::Inf);
        }
        out.extend(
            (0..self.pj.len())
                .filter(|&j| self.pj[j] != 0)
                .map(Place::P),
        );
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*P_inf", self.inf)?;
        for (j, c) in self.pj.iter().enumerate() {
            if *c != 0 {
                write!(f, " + {}*P_{}", c, j + 1)?;
            }
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub pole_order: u64,
}

/// `(n^2 - 2) c P_inf`, the divisor of `dz` up to sign conventions.
pub fn canonical_divisor(params: &GkParams) -> Divisor {
    Divisor::at_inf(params, ((params.n * params.n - 2) * params.c) as i64)
}

/// Monomial basis of `L(N P_inf)` sorted by pole order.
pub fn onepoint_basis(params: &GkParams, max_pole: i64) -> Vec<Monomial> {
    if max_pole < 0 {
        return Vec::new();
    }
    let max_pole = max_pole as u64;
    let mut out = Vec::new();
    for beta in 0..=params.n {
        for gamma in 0..=(params.n * params.n - params.n) {
            let base = pole_order_at_inf(params, 0, beta, gamma);
            if base > max_pole {
                continue;
            }
            for alpha in 0..=(max_pole - base) / params.c {
                out.push(Monomial {
                    alpha,
                    beta,
                    gamma,
                    pole_order: base + alpha * params.c,
                });
            }
        }
    }
    out.sort_by_key(|m| m.pole_order);
    out
}

/// The divisor moved to non-positive `P_j` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifted {
    /// Powers `t_j` of `(x - a_j)` multiplied in.
    pub t: Vec<u64>,
    /// `g'_inf`
    pub inf: i64,
    /// Vanishing orders `r_j = -g'_j`.
    pub r: Vec<u64>,
}

/// Shifts with the minimal `t_j = max(0, ceil(g_j / c))`, plus `extra` more.
pub fn shift_divisor(params: &GkParams, g: &Divisor, extra: u64) -> Shifted {
    let c = params.c as i64;
    let t: Vec<u64> =
        g.pj.iter()
            .map(|&gj| (gj.max(0) + c - 1) as u64 / params.c + extra)
            .collect();
    let r =
        g.pj.iter()
            .zip(&t)
            .map(|(&gj, &tj)| (c * tj as i64 - gj) as u64)
            .collect();
    let inf = g.inf + c * t.iter().sum::<u64>() as i64;
    Shifted { t, inf, r }
}

#[derive(Debug)]
struct Profile {
    max_pole: u64,
    poles: Vec<u64>,
    /// `rank_prefix[k]` = rank of the constraints restricted to the first `k` monomials.
    rank_prefix: Vec<usize>,
}

impl Profile {
    fn dim(&self, max_pole: u64) -> u64 {
        let count = self.poles.partition_point(|&p| p <= max_pole);
        (count - self.rank_prefix[count]) as u64
    }
}

/// Expansions of basis monomials at the `P_j` with `r_j > 0`.
struct ConstraintBuilder<'a> {
    params: &'a GkParams,
    charts: Vec<&'a LocalChart>,
    orders: Vec<usize>,
    x_pows: Vec<Vec<Series>>,
    eta_pows: Vec<Vec<Series>>,
}

impl<'a> ConstraintBuilder<'a> {
    fn new(params: &'a GkParams, charts: &'a [LocalChart], r: &[u64]) -> Self {
        let f = &params.field;
        let mut sel = Vec::new();
        let mut orders = Vec::new();
        let mut eta_pows = Vec::new();
        for (j, &rj) in r.iter().enumerate() {
            if rj == 0 {
                continue;
            }
            let prec = rj as usize;
            let ch = &charts[j];
            let eta = ch.eta.truncate(prec);
            let mut pows = vec![Series::one(prec)];
            for _ in 0..params.n {
                let next = pows.last().unwrap().mul(&eta, f);
                pows.push(next);
            }
            sel.push(ch);
            orders.push(prec);
            eta_pows.push(pows);
        }
        let x_pows = orders.iter().map(|&prec| vec![Series::one(prec)]).collect();
        ConstraintBuilder {
            params,
            charts: sel,
            orders,
            x_pows,
            eta_pows,
        }
    }

    fn height(&self) -> usize {
        self.orders.iter().sum()
    }

    /// Stacked coefficients of `z^0..z^(r_j - 1)` at every constrained `P_j`.
    fn column(&mut self, m: &Monomial) -> Vec<Fe> {
        let f = &self.params.field;
        let mut out = Vec::with_capacity(self.height());
        for k in 0..self.charts.len() {
            let prec = self.orders[k];
            while self.x_pows[k].len() <= m.alpha as usize {
                let x = self.charts[k].x_series().truncate(prec);
                let next = self.x_pows[k].last().unwrap().mul(&x, f);
                self.x_pows[k].push(next);
            }
            let s = self.x_pows[k][m.alpha as usize]
                .mul(&self.eta_pows[k][m.beta as usize], f)
                .shift(m.gamma as usize);
            out.extend_from_slice(s.coeffs());
        }
        out
    }
}

/// A basis of `L(G)` in the shifted monomial space.
#[derive(Clone, Debug)]
pub struct LBasis {
    pub divisor: Divisor,
    pub shifted: Shifted,
    pub monomials: Vec<Monomial>,
    /// Each vector gives coefficients over `monomials`; the function is
    /// `sum v_k M_k / prod (x - a_j)^(t_j)`.
    pub vectors: Vec<Vec<Fe>>,
}

/// Memoizing dimension oracle for one curve.
#[derive(Debug)]
pub struct DimOracle {
    params: GkParams,
    atlas: ChartAtlas,
    profiles: RwLock<HashMap<Vec<u64>, Arc<Profile>>>,
}

impl DimOracle {
    pub fn new(params: GkParams) -> Self {
        let atlas = ChartAtlas::new(p_point_abscissas(&params));
        DimOracle {
            params,
            atlas,
            profiles: RwLock::new(HashMap::new()),
        }
    }

    pub fn for_n(n: u64) -> Result<Self> {
        Ok(Self::new(GkParams::new(n)?))
    }

    pub fn params(&self) -> &GkParams {
        &self.params
    }

    pub fn genus(&self) -> u64 {
        self.params.genus
    }

    /// x-coordinates of `P_1..P_n`.
    pub fn a_values(&self) -> &[Fe] {
        self.atlas.a_values()
    }

    pub fn divisor(&self, inf: i64, pj: &[i64]) -> Result<Divisor> {
        Divisor::new(&self.params, inf, pj)
    }

    fn check(&self, g: &Divisor) -> Result<()> {
        if g.pj.len() != self.params.n as usize {
            return Err(Error::UnsupportedSupport);
        }
        Ok(())
    }

    /// `l(G)`.
    pub fn dim(&self, g: &Divisor) -> Result<u64> {
        self.dim_with_extra_shift(g, 0)
    }

    /// `l(G)` computed after multiplying by `extra` more powers of each `x - a_j`.
    pub fn dim_with_extra_shift(&self, g: &Divisor, extra: u64) -> Result<u64> {
        self.check(g)?;
        if g.degree() < 0 {
            return Ok(0);
        }
        let sh = shift_divisor(&self.params, g, extra);
        if sh.inf < 0 {
            return Ok(0);
        }
        let profile = self.profile(&sh.r, sh.inf as u64)?;
        Ok(profile.dim(sh.inf as u64))
    }

    fn profile(&self, r: &[u64], max_pole: u64) -> Result<Arc<Profile>> {
        if let Some(p) = self.profiles.read().unwrap().get(r) {
            if p.max_pole >= max_pole {
                return Ok(Arc::clone(p));
            }
        }
        let p = &self.params;
        let default = 4 * p.genus + p.c * (p.n + 1) + r.iter().sum::<u64>();
        let prev = self
            .profiles
            .read()
            .unwrap()
            .get(r)
            .map_or(0, |p| p.max_pole);
        let target = max_pole.max(default).max(2 * prev);
        let built = Arc::new(self.build_profile(r, target)?);
        self.profiles
            .write()
            .unwrap()
            .insert(r.to_vec(), Arc::clone(&built));
        Ok(built)
    }

    fn build_profile(&self, r: &[u64], max_pole: u64) -> Result<Profile> {
        let basis = onepoint_basis(&self.params, max_pole as i64);
        let poles: Vec<u64> = basis.iter().map(|m| m.pole_order).collect();
        let max_r = r.iter().copied().max().unwrap_or(0) as usize;
        let charts = self.atlas.charts(&self.params, max_r)?;
        let mut builder = ConstraintBuilder::new(&self.params, &charts, r);
        let mut ech = Echelon::new(builder.height());
        let mut rank_prefix = Vec::with_capacity(basis.len() + 1);
        rank_prefix.push(0);
        for m in &basis {
            if !ech.is_full() {
                let col = builder.column(m);
                ech.insert(col, &self.params.field);
            }
            rank_prefix.push(ech.rank());
        }
        Ok(Profile {
            max_pole,
            poles,
            rank_prefix,
        })
    }

    /// Explicit basis of `L(G)`; independent of the rank profiles.
    pub fn basis(&self, g: &Divisor) -> Result<LBasis> {
        self.check(g)?;
        let sh = shift_divisor(&self.params, g, 0);
        let monomials = if g.degree() < 0 {
            Vec::new()
        } else {
            onepoint_basis(&self.params, sh.inf)
        };
        let max_r = sh.r.iter().copied().max().unwrap_or(0) as usize;
        let charts = self.atlas.charts(&self.params, max_r)?;
        let mut builder = ConstraintBuilder::new(&self.params, &charts, &sh.r);
        let height = builder.height();
        let vectors = if monomials.is_empty() {
            Vec::new()
        } else if height == 0 {
            (0..monomials.len())
                .map(|k| {
                    let mut v = vec![Fe::ZERO; monomials.len()];
                    v[k] = Fe::ONE;
                    v
                })
                .collect()
        } else {
            let cols: Vec<Vec<Fe>> = monomials.iter().map(|m| builder.column(m)).collect();
            let mut mat = Matrix::zeros(height, monomials.len());
            for (k, col) in cols.iter().enumerate() {
                for (i, &v) in col.iter().enumerate() {
                    mat.set(i, k, v);
                }
            }
            mat.nullspace(&self.params.field)
        };
        Ok(LBasis {
            divisor: g.clone(),
            shifted: sh,
            monomials,
            vectors,
        })
    }

    /// Definition of a discrepancy for `P != Q`:
    /// `l(A) != l(A-P) = l(A-P-Q)` and `l(A) != l(A-Q) = l(A-P-Q)`.
    pub fn is_discrepancy(&self, a: &Divisor, p: Place, q: Place) -> Result<bool> {
        if p == q {
            return Err(Error::SamePoints);
        }
        let la = self.dim(a)?;
        let a_p = a.plus(p, -1)?;
        let la_p = self.dim(&a_p)?;
        let la_q = self.dim(&a.plus(q, -1)?)?;
        let la_pq = self.dim(&a_p.plus(q, -1)?)?;
        Ok(la != la_p && la_p == la_pq && la != la_q && la_q == la_pq)
    }

    /// Number of cached rank profiles.
    pub fn cached_profiles(&self) -> usize {
        self.profiles.read().unwrap().len()
    }
}
