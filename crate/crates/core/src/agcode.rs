//! Multi-point AG codes `C_L(D, G)` on the GK curve and their duals.
//!
//! `D` is always every rational point outside `supp(G)`. The dual code
//! `C_Omega(D, G)` is handled as the null space of the `C_L` generator.

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{AffinePoint, CurvePoint, PointSet};
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};
use crate::linalg::{axpy, Matrix};
use crate::rrspace::{DimOracle, Divisor, LBasis, Place};
use crate::wsemi::{is_pure_gap, PoleVector};

/// Default limit on `q^k` for exhaustive minimum distance.
pub const DEFAULT_WEIGHT_CAP: u64 = 1 << 24;

/// Generator matrix of `C_L(D, G)`; row `i` evaluates the `i`-th basis function.
#[derive(Clone, Debug)]
pub struct GenMatrix {
    pub matrix: Matrix,
    pub columns: Vec<CurvePoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CodeSummary {
    pub length: u64,
    pub deg_g: i64,
    pub genus: u64,
    /// Dimension of `C_L`, from the matrix rank.
    pub k: u64,
    pub k_omega: u64,
    /// `deg G - g + 1`, only when `2g - 2 < deg G < length`.
    pub k_riemann_roch: Option<u64>,
    /// `length - deg G`, when `deg G < length`.
    pub goppa_d: Option<i64>,
    /// `deg G - 2g + 2`, when `deg G > 2g - 2`.
    pub goppa_d_omega: Option<i64>,
    pub puregap_d_omega: Option<i64>,
    #[serde(rename = "R")]
    pub rate: f64,
    pub delta_goppa: Option<f64>,
    pub delta_goppa_omega: Option<f64>,
}

fn evaluation_points(points: &PointSet, g: &Divisor) -> Vec<CurvePoint> {
    let mut cols = Vec::new();
    if g.inf == 0 {
        cols.push(CurvePoint::Infinity);
    }
    for (j, pt) in points.p_list.iter().enumerate() {
        if g.coeff(Place::P(j)) == 0 {
            cols.push(CurvePoint::Affine(*pt));
        }
    }
    cols.extend(
        points
            .q_list
            .iter()
            .chain(&points.others)
            .map(|p| CurvePoint::Affine(*p)),
    );
    cols
}

fn powers(f: &FieldCtx, x: Fe, k: usize) -> Vec<Fe> {
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = Fe::ONE;
    for _ in 0..=k {
        out.push(cur);
        cur = f.mul(cur, x);
    }
    out
}

/// Values of every basis function of `L(G)` at one point.
fn evaluate_column(oracle: &DimOracle, basis: &LBasis, pt: &CurvePoint) -> Result<Vec<Fe>> {
    let f = &oracle.params().field;
    match pt {
        CurvePoint::Infinity => {
            // Only reached when g_inf = 0: M / prod (x - a_j)^(t_j) tends to 1
            // for M = x^(sum t_j) and to 0 for every lower pole order.
            let top: u64 = basis.shifted.t.iter().sum();
            let idx = basis
                .monomials
                .iter()
                .position(|m| m.alpha == top && m.beta == 0 && m.gamma == 0);
            Ok(basis
                .vectors
                .iter()
                .map(|v| idx.map_or(Fe::ZERO, |i| v[i]))
                .collect())
        }
        CurvePoint::Affine(AffinePoint { x, y, z }) => {
            let max_alpha = basis.monomials.iter().map(|m| m.alpha).max().unwrap_or(0);
            let n = oracle.params().n as usize;
            let xp = powers(f, *x, max_alpha as usize);
            let yp = powers(f, *y, n);
            let zp = powers(f, *z, n * n - n);
            let mono: Vec<Fe> = basis
                .monomials
                .iter()
                .map(|m| {
                    f.mul(
                        f.mul(xp[m.alpha as usize], yp[m.beta as usize]),
                        zp[m.gamma as usize],
                    )
                })
                .collect();
            let mut denom = Fe::ONE;
            for (&a_j, &t_j) in oracle.a_values().iter().zip(&basis.shifted.t) {
                denom = f.mul(denom, f.pow(f.sub(*x, a_j), t_j));
            }
            let scale = f.inv(denom).map_err(|_| Error::SupportOverlap)?;
            Ok(basis
                .vectors
                .iter()
                .map(|v| {
                    let s = v
                        .iter()
                        .zip(&mono)
                        .fold(Fe::ZERO, |acc, (&c, &mv)| f.add(acc, f.mul(c, mv)));
                    f.mul(s, scale)
                })
                .collect())
        }
    }
}

/// Builds the generator matrix of `C_L(D, G)` and its parameter summary.
pub fn build_code(
    oracle: &DimOracle,
    points: &PointSet,
    g: &Divisor,
) -> Result<(GenMatrix, CodeSummary)> {
    let params = oracle.params();
    if g.pj.len() != params.n as usize {
        return Err(Error::UnsupportedSupport);
    }
    if g.degree() <= 0 {
        return Err(Error::DegenerateG);
    }
    let basis = oracle.basis(g)?;
    let columns = evaluation_points(points, g);
    let cols = columns
        .par_iter()
        .map(|pt| evaluate_column(oracle, &basis, pt))
        .collect::<Result<Vec<_>>>()?;
    let mut matrix = Matrix::zeros(basis.vectors.len(), columns.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            matrix.set(i, j, v);
        }
    }
    let k = matrix.rank(&params.field) as u64;
    let gm = GenMatrix { matrix, columns };
    let summary = summarize(params.genus, gm.columns.len() as u64, g.degree(), k);
    Ok((gm, summary))
}

fn summarize(genus: u64, length: u64, deg: i64, k: u64) -> CodeSummary {
    let g = genus as i64;
    let len = length as i64;
    let in_range = 2 * g - 2 < deg && deg < len;
    let goppa_d = (deg < len).then_some(len - deg);
    let goppa_d_omega = (deg > 2 * g - 2).then_some(deg - 2 * g + 2);
    CodeSummary {
        length,
        deg_g: deg,
        genus,
        k,
        k_omega: length - k,
        k_riemann_roch: in_range.then_some((deg - g + 1) as u64),
        goppa_d,
        goppa_d_omega,
        puregap_d_omega: None,
        rate: k as f64 / length as f64,
        delta_goppa: goppa_d.map(|d| d as f64 / length as f64),
        delta_goppa_omega: goppa_d_omega.map(|d| d as f64 / length as f64),
    }
}

/// Parity data for a generator matrix.
#[derive(Clone, Debug)]
pub struct DualData {
    /// Rows span the dual code.
    pub parity: Matrix,
    pub orthogonal: bool,
}

pub fn dual_check(gm: &GenMatrix, f: &FieldCtx) -> DualData {
    let null = gm.matrix.nullspace(f);
    let parity = Matrix::from_rows(null, gm.matrix.cols());
    let product = gm.matrix.mul_transpose(&parity, f);
    let orthogonal = product.iter_rows().all(|r| r.iter().all(|v| v.is_zero()));
    DualData { parity, orthogonal }
}

/// `G = sum (alpha_i + beta_i - 1) P_i` and the bound
/// `deg G - (2g - 2) + (number of points)` for `C_Omega(D, G)`.
pub fn pure_gap_bound(
    oracle: &DimOracle,
    alpha: &PoleVector,
    beta: &PoleVector,
) -> Result<(Divisor, i64)> {
    if alpha.len() != beta.len() || alpha.is_empty() {
        return Err(Error::LengthMismatch);
    }
    for v in [alpha, beta] {
        if !is_pure_gap(oracle, v)? {
            return Err(Error::NotPureGap(v.entries().to_vec()));
        }
    }
    let coeffs: Vec<i64> = alpha
        .entries()
        .iter()
        .zip(beta.entries())
        .map(|(&a, &b)| a as i64 + b as i64 - 1)
        .collect();
    let g = oracle.divisor(coeffs[0], &coeffs[1..])?;
    let bound = g.degree() - oracle.params().canonical_degree() as i64 + alpha.len() as i64;
    Ok((g, bound))
}

/// Exact minimum weight of the row space, or `None` when `q^k > cap`.
///
/// Codewords are enumerated up to scalars: the first nonzero message
/// coordinate is fixed to one.
pub fn min_weight_exhaustive(m: &Matrix, f: &FieldCtx, cap: u64) -> Option<u64> {
    let mut red = m.clone();
    let k = red.rref(f).len();
    if k == 0 {
        return None;
    }
    let q = f.order() as u64;
    if (q as f64).powi(k as i32) > cap as f64 {
        return None;
    }
    let rows: Vec<Vec<Fe>> = (0..k).map(|i| red.row(i).to_vec()).collect();
    let scaled: Vec<Vec<Vec<Fe>>> = rows
        .iter()
        .map(|r| {
            f.elements()
                .map(|c| r.iter().map(|&v| f.mul(c, v)).collect())
                .collect()
        })
        .collect();

    (0..k)
        .into_par_iter()
        .map(|lead| {
            let start = rows[lead].clone();
            best_weight(&scaled[lead + 1..], start, f)
        })
        .min()
}

fn best_weight(rest: &[Vec<Vec<Fe>>], acc: Vec<Fe>, f: &FieldCtx) -> u64 {
    match rest.split_first() {
        None => acc.iter().filter(|v| !v.is_zero()).count() as u64,
        Some((table, tail)) => table
            .iter()
            .map(|row| {
                let mut next = acc.clone();
                axpy(&mut next, Fe::ONE, row, f);
                best_weight(tail, next, f)
            })
            .min()
            .unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::enumerate_points;

    #[test]
    fn tiny_codes() {
        let f = FieldCtx::new(2, 6).unwrap();
        let rep = Matrix::from_rows(vec![vec![Fe::ONE; 7]], 7);
        assert_eq!(min_weight_exhaustive(&rep, &f, DEFAULT_WEIGHT_CAP), Some(7));
        let a = f.from_coeffs(&[0, 1]);
        let id = Matrix::from_rows(
            vec![vec![Fe::ONE, Fe::ZERO, a], vec![Fe::ZERO, Fe::ONE, a]],
            3,
        );
        assert_eq!(min_weight_exhaustive(&id, &f, DEFAULT_WEIGHT_CAP), Some(2));
        let id = Matrix::from_rows(vec![vec![Fe::ONE, Fe::ZERO], vec![Fe::ZERO, Fe::ONE]], 2);
        assert_eq!(min_weight_exhaustive(&id, &f, DEFAULT_WEIGHT_CAP), Some(1));
        assert_eq!(min_weight_exhaustive(&id, &f, 100), None);
    }

    #[test]
    fn one_point_code_n2() {
        let o = DimOracle::for_n(2).unwrap();
        let pts = enumerate_points(o.params()).unwrap();
        let g = Divisor::at_inf(o.params(), 21);
        let (gm, s) = build_code(&o, &pts, &g).unwrap();
        assert_eq!(s.length, 224);
        assert_eq!(s.k, 12);
        assert_eq!(s.k_riemann_roch, Some(12));
        assert_eq!(s.k_omega, 212);
        assert_eq!(s.goppa_d, Some(203));
        let dual = dual_check(&gm, &o.params().field);
        assert!(dual.orthogonal);
        assert_eq!(dual.parity.rows(), 212);

        let (_, s5) = build_code(&o, &pts, &Divisor::at_inf(o.params(), 5)).unwrap();
        assert_eq!(s5.k_riemann_roch, None);
        assert_eq!(s5.k, 1);
    }

    #[test]
    fn multipoint_code_n2() {
        let o = DimOracle::for_n(2).unwrap();
        let pts = enumerate_points(o.params()).unwrap();
        for (inf, pj) in [
            (13, vec![4, 5]),
            (0, vec![12, 9]),
            (20, vec![-2, 3]),
            (0, vec![25]),
        ] {
            let g = o.divisor(inf, &pj).unwrap();
            let (gm, s) = build_code(&o, &pts, &g).unwrap();
            let expect_len = 225 - g.support().len() as u64;
            assert_eq!(s.length, expect_len, "{g}");
            assert_eq!(s.k, o.dim(&g).unwrap(), "{g}");
            assert!(dual_check(&gm, &o.params().field).orthogonal);
            if g.inf >= 0 && g.pj.iter().all(|&c| c >= 0) {
                // constants lie in L(G)
                let mut rows: Vec<Vec<Fe>> = gm.matrix.iter_rows().map(|r| r.to_vec()).collect();
                rows.push(vec![Fe::ONE; gm.matrix.cols()]);
                let with_one = Matrix::from_rows(rows, gm.matrix.cols());
                assert_eq!(with_one.rank(&o.params().field) as u64, s.k, "{g}");
            }
        }
    }

    #[test]
    fn degenerate() {
        let o = DimOracle::for_n(2).unwrap();
        let pts = enumerate_points(o.params()).unwrap();
        let g = o.divisor(0, &[]).unwrap();
        assert!(matches!(build_code(&o, &pts, &g), Err(Error::DegenerateG)));
    }

    #[test]
    fn pure_gap_bound_n2() {
        let o = DimOracle::for_n(2).unwrap();
        let a = PoleVector::new(vec![11, 1]);
        let (g, bound) = pure_gap_bound(&o, &a, &a).unwrap();
        assert_eq!((g.inf, g.pj[0]), (21, 1));
        assert_eq!(bound, 22 - 18 + 2);
        let not = PoleVector::new(vec![3, 3]);
        assert_eq!(
            pure_gap_bound(&o, &a, &not),
            Err(Error::NotPureGap(vec![3, 3]))
        );
    }
}
