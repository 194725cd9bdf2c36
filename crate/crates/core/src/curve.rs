//! The GK curve `Z^(n^2-n+1) = Y h(X)`, `X^n + X = Y^(n+1)` over GF(n^6).

use crate::error::{Error, Result};
use crate::gf::{is_prime, Fe, FieldCtx};

/// Largest `n` supported unless a caller raises the cap.
pub const DEFAULT_MAX_N: u64 = 4;

/// Constants of the GK curve for a given `n`.
#[derive(Clone, Debug)]
pub struct GkParams {
    pub n: u64,
    pub p: u64,
    pub e: u32,
    /// `n^2 - n + 1`
    pub a: u64,
    /// `n^3`
    pub b: u64,
    /// `n^3 + 1`
    pub c: u64,
    /// `n^3`; the curve lives over GF(q^2).
    pub q: u64,
    pub genus: u64,
    pub expected_points: u64,
    pub field: FieldCtx,
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|k| n.is_multiple_of(*k))?;
    debug_assert!(is_prime(p));
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl GkParams {
    pub fn new(n: u64) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: u64, max_n: u64) -> Result<Self> {
        let (p, e) = prime_power(n).ok_or(Error::NotPrimePower(n))?;
        if n > max_n {
            return Err(Error::UnsupportedSize { n, cap: max_n });
        }
        let field = FieldCtx::new(p, 6 * e)?;
        let (a, b, c) = (n * n - n + 1, n * n * n, n * n * n + 1);
        Ok(GkParams {
            n,
            p,
            e,
            a,
            b,
            c,
            q: b,
            genus: (c * (n * n - 2)) / 2 + 1,
            expected_points: n.pow(8) - n.pow(6) + n.pow(5) + 1,
            field,
        })
    }

    /// `2g - 2`, the degree of a canonical divisor.
    pub fn canonical_degree(&self) -> u64 {
        2 * self.genus - 2
    }

    /// Coefficients of `h(X) = sum_{i=0}^n (-1)^(i+1) X^(i(n-1))`, constant first.
    pub fn h_coeffs(&self) -> Vec<Fe> {
        let f = &self.field;
        let deg = (self.n * (self.n - 1)) as usize;
        let mut out = vec![Fe::ZERO; deg + 1];
        for i in 0..=self.n {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            let slot = &mut out[(i * (self.n - 1)) as usize];
            *slot = f.add(*slot, f.from_int(sign));
        }
        out
    }

    /// `h(x)` by direct summation of its defining terms.
    pub fn h_eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        (0..=self.n).fold(Fe::ZERO, |acc, i| {
            let term = f.pow(x, i * (self.n - 1));
            if i % 2 == 0 {
                f.sub(acc, term)
            } else {
                f.add(acc, term)
            }
        })
    }

    pub fn on_curve(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(AffinePoint { x, y, z }) => {
                let f = &self.field;
                let first = f.pow(*z, self.a) == f.mul(*y, self.h_eval(*x));
                let second = f.add(f.pow(*x, self.n), *x) == f.pow(*y, self.n + 1);
                first && second
            }
        }
    }
}

/// Horner evaluation of a polynomial with constant-first coefficients.
pub fn horner(field: &FieldCtx, coeffs: &[Fe], x: Fe) -> Fe {
    coeffs
        .iter()
        .rev()
        .fold(Fe::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffinePoint {
    pub x: Fe,
    pub y: Fe,
    pub z: Fe,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(AffinePoint),
}

/// Rational points split into the orbit `O_1 = {P_inf} + P_j + Q_l` and the rest.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub p_inf: CurvePoint,
    /// `P_j = (a_j, 0, 0)`
    pub p_list: Vec<AffinePoint>,
    /// `Q_l = (a_l, b_l, 0)` with `b_l != 0`
    pub q_list: Vec<AffinePoint>,
    pub others: Vec<AffinePoint>,
}

impl PointSet {
    pub fn total(&self) -> u64 {
        1 + (self.p_list.len() + self.q_list.len() + self.others.len()) as u64
    }

    pub fn orbit1_len(&self) -> usize {
        1 + self.p_list.len() + self.q_list.len()
    }

    /// x-coordinates `a_j` of the points `P_j`.
    pub fn a_values(&self) -> Vec<Fe> {
        self.p_list.iter().map(|pt| pt.x).collect()
    }

    /// All affine points, orbit one first, in enumeration order within each class.
    pub fn affine(&self) -> impl Iterator<Item = &AffinePoint> {
        self.p_list.iter().chain(&self.q_list).chain(&self.others)
    }
}

// roots[v] lists every t with t^k = v, in element order.
fn root_table(field: &FieldCtx, k: u64) -> Vec<Vec<Fe>> {
    let mut roots = vec![Vec::new(); field.order() as usize];
    for t in field.elements() {
        roots[field.pow(t, k).index() as usize].push(t);
    }
    roots
}

/// Enumerates all GF(n^6)-rational points.
pub fn enumerate_points(params: &GkParams) -> Result<PointSet> {
    let f = &params.field;
    let y_roots = root_table(f, params.n + 1);
    let z_roots = root_table(f, params.a);
    let h = params.h_coeffs();

    let mut set = PointSet {
        p_inf: CurvePoint::Infinity,
        p_list: Vec::new(),
        q_list: Vec::new(),
        others: Vec::new(),
    };
    for x in f.elements() {
        let rhs = f.add(f.pow(x, params.n), x);
        let hx = horner(f, &h, x);
        for &y in &y_roots[rhs.index() as usize] {
            let w = f.mul(y, hx);
            for &z in &z_roots[w.index() as usize] {
                let pt = AffinePoint { x, y, z };
                match (y.is_zero(), z.is_zero()) {
                    (true, true) => set.p_list.push(pt),
                    (false, true) => set.q_list.push(pt),
                    _ => set.others.push(pt),
                }
            }
        }
    }
    if set.total() != params.expected_points {
        return Err(Error::CountMismatch {
            found: set.total(),
            expected: params.expected_points,
        });
    }
    Ok(set)
}
