//! Weierstrass semigroups `H(P_inf, P_1, .., P_m)` on the GK curve.
//!
//! Tuples put the `P_inf` coordinate first. Membership, gaps and pure gaps
//! are decided by the dimension oracle; the closed-form minimal generating
//! set and the pure-gap families are checked against it.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::GkParams;
use crate::error::{Error, Result};
use crate::rrspace::{DimOracle, Divisor, Place};

/// Pole orders at `(P_inf, P_1, .., P_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PoleVector(pub Vec<u32>);

impl PoleVector {
    pub fn new(entries: Vec<u32>) -> Self {
        PoleVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `P_j` points, i.e. `len - 1`.
    pub fn m(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn place(i: usize) -> Place {
        if i == 0 {
            Place::Inf
        } else {
            Place::P(i - 1)
        }
    }

    pub fn to_divisor(&self, params: &GkParams) -> Result<Divisor> {
        let (first, rest) = self.0.split_first().ok_or(Error::EmptyInput)?;
        let pj: Vec<i64> = rest.iter().map(|&v| v as i64).collect();
        Divisor::new(params, *first as i64, &pj)
    }

    /// `self <= other` coordinatewise.
    pub fn precedes(&self, other: &PoleVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for PoleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for PoleVector {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',')
            .map(|t| t.trim().parse())
            .collect::<std::result::Result<Vec<u32>, _>>()
            .map(PoleVector)
    }
}

fn check_m(params: &GkParams, m: usize) -> Result<()> {
    if m < 1 || m as u64 > params.n {
        return Err(Error::MOutOfRange { m, n: params.n });
    }
    Ok(())
}

// all (j_1..j_m) >= 0 with sum < limit
fn bounded_compositions(m: usize, limit: u64) -> Vec<Vec<u64>> {
    fn rec(m: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for j in 0..left {
            cur.push(j);
            rec(m, left - j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, limit, &mut Vec::new(), &mut out);
    out
}

/// The minimal generating set `Gamma(P_inf, P_1, .., P_m)` in closed form:
/// all `((n^2 - m - sum j_s) c - i n a - k b, j_1 c + i a + k, .., j_m c + i a + k)`
/// with `1 <= k <= a`, `0 <= i <= n`, `j_s >= 0` and a positive first entry.
pub fn gamma_closed_form(params: &GkParams, m: usize) -> Result<Vec<PoleVector>> {
    check_m(params, m)?;
    let (n, a, b, c) = (
        params.n as i64,
        params.a as i64,
        params.b as i64,
        params.c as i64,
    );
    let mut out = BTreeSet::new();
    for js in bounded_compositions(m, (n * n) as u64 - m as u64) {
        let sum_j: i64 = js.iter().map(|&j| j as i64).sum();
        for i in 0..=n {
            for k in 1..=a {
                let first = (n * n - m as i64 - sum_j) * c - i * n * a - k * b;
                if first <= 0 {
                    continue;
                }
                let mut v = vec![first as u32];
                v.extend(js.iter().map(|&j| (j as i64 * c + i * a + k) as u32));
                out.insert(PoleVector(v));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Elements of the numerical semigroup generated by `gens` up to `bound`.
pub fn numerical_semigroup_members(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for s in 1..=bound as usize {
        member[s] = gens
            .iter()
            .any(|&g| g as usize <= s && member[s - g as usize]);
    }
    member
}

pub fn numerical_semigroup_count(gens: &[u64], bound: u64) -> u64 {
    numerical_semigroup_members(gens, bound)
        .into_iter()
        .filter(|&b| b)
        .count() as u64
}

/// Gaps of `H(P) = <n a, b, c>`, shared by every point of the first orbit.
pub fn single_point_gaps(params: &GkParams) -> Vec<u64> {
    let gens = [params.n * params.a, params.b, params.c];
    let bound = 2 * params.genus;
    numerical_semigroup_members(&gens, bound)
        .into_iter()
        .enumerate()
        .filter(|&(_, member)| !member)
        .map(|(s, _)| s as u64)
        .collect()
}

/// Coordinatewise maximum.
pub fn lub(vs: &[PoleVector]) -> Result<PoleVector> {
    let (first, rest) = vs.split_first().ok_or(Error::EmptyInput)?;
    let mut out = first.clone();
    for v in rest {
        if v.len() != out.len() {
            return Err(Error::LengthMismatch);
        }
        for (o, &x) in out.0.iter_mut().zip(&v.0) {
            *o = (*o).max(x);
        }
    }
    Ok(out)
}

/// `v` is in `H` iff `l(A) > l(A - P_i)` at every point where `v_i > 0`,
/// with `A = sum v_i P_i`. The field has more elements than there are
/// points, so `L(A)` is then not a union of the subspaces `L(A - P_i)`.
pub fn membership_oracle(oracle: &DimOracle, v: &PoleVector) -> Result<bool> {
    let a = v.to_divisor(oracle.params())?;
    let la = oracle.dim(&a)?;
    for (i, &vi) in v.entries().iter().enumerate() {
        if vi > 0 && oracle.dim(&a.plus(PoleVector::place(i), -1)?)? == la {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A subset of the box `[0, T]^len` stored as a dense bitmap; index order
/// is lexicographic order of the tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleBox {
    len: usize,
    bound: u32,
    bits: Vec<bool>,
}

impl TupleBox {
    pub fn empty(len: usize, bound: u32) -> Self {
        let size = (bound as usize + 1).pow(len as u32);
        TupleBox {
            len,
            bound,
            bits: vec![false; size],
        }
    }

    pub fn tuple_len(&self) -> usize {
        self.len
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn volume(&self) -> usize {
        self.bits.len()
    }

    pub fn index_of(&self, v: &[u32]) -> Option<usize> {
        if v.len() != self.len || v.iter().any(|&x| x > self.bound) {
            return None;
        }
        let side = self.bound as usize + 1;
        Some(v.iter().fold(0, |acc, &x| acc * side + x as usize))
    }

    pub fn tuple_at(&self, mut idx: usize) -> Vec<u32> {
        let side = self.bound as usize + 1;
        let mut v = vec![0; self.len];
        for slot in v.iter_mut().rev() {
            *slot = (idx % side) as u32;
            idx /= side;
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.index_of(v).is_some_and(|i| self.bits[i])
    }

    pub fn insert(&mut self, v: &[u32]) -> bool {
        match self.index_of(v) {
            Some(i) if !self.bits[i] => {
                self.bits[i] = true;
                true
            }
            _ => false,
        }
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> Vec<PoleVector> {
        (0..self.bits.len())
            .filter(|&i| self.bits[i])
            .map(|i| PoleVector(self.tuple_at(i)))
            .collect()
    }

    pub fn complement(&self) -> TupleBox {
        TupleBox {
            len: self.len,
            bound: self.bound,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Tuples supported on `coords`, projected onto those coordinates.
    pub fn restrict(&self, coords: &[usize]) -> TupleBox {
        let mut out = TupleBox::empty(coords.len(), self.bound);
        for i in 0..out.bits.len() {
            let small = out.tuple_at(i);
            let mut full = vec![0; self.len];
            for (&c, &x) in coords.iter().zip(&small) {
                full[c] = x;
            }
            out.bits[i] = self.contains(&full);
        }
        out
    }

    /// Embeds a tuple on `coords` into the full length with zeros elsewhere.
    fn embed(len: usize, coords: &[usize], small: &[u32]) -> Vec<u32> {
        let mut full = vec![0; len];
        for (&c, &x) in coords.iter().zip(small) {
            full[c] = x;
        }
        full
    }
}

fn check_box(params: &GkParams, m: usize, bound: u32) -> Result<()> {
    check_m(params, m)?;
    let limit = 4 * params.genus as u32;
    if bound > limit {
        return Err(Error::BoxTooLarge { bound, limit });
    }
    Ok(())
}

/// `H(P_inf, P_1, .., P_m)` within `[0, T]^(m+1)`, by the membership oracle.
pub fn semigroup_box(oracle: &DimOracle, m: usize, bound: u32) -> Result<TupleBox> {
    check_box(oracle.params(), m, bound)?;
    let mut hbox = TupleBox::empty(m + 1, bound);
    let flags = (0..hbox.volume())
        .into_par_iter()
        .map(|i| membership_oracle(oracle, &PoleVector(hbox.tuple_at(i))))
        .collect::<Result<Vec<bool>>>()?;
    hbox.bits = flags;
    Ok(hbox)
}

/// Gap set within the box: the complement of [`semigroup_box`].
pub fn gap_box(oracle: &DimOracle, m: usize, bound: u32) -> Result<TupleBox> {
    Ok(semigroup_box(oracle, m, bound)?.complement())
}

/// Whether `v` is minimal in `nabla_i(v) = {p in H : p_i = v_i}`.
pub fn is_minimal_in_nabla(v: &[u32], i: usize, hbox: &TupleBox) -> bool {
    if !hbox.contains(v) {
        return false;
    }
    // enumerate every p <= v with p_i = v_i
    let mut p: Vec<u32> = v.to_vec();
    for (k, slot) in p.iter_mut().enumerate() {
        if k != i {
            *slot = 0;
        }
    }
    loop {
        if p != v && hbox.contains(&p) {
            return false;
        }
        let mut k = 0;
        loop {
            if k == p.len() {
                return true;
            }
            if k == i || p[k] == v[k] {
                if k != i {
                    p[k] = 0;
                }
                k += 1;
                continue;
            }
            p[k] += 1;
            break;
        }
    }
}

/// Every tuple of positive entries in the box that is minimal in some `nabla_i`.
pub fn gamma_from_box(hbox: &TupleBox, genus: u64) -> Result<Vec<PoleVector>> {
    let required = (2 * genus - 1) as u32;
    if hbox.bound() < required {
        return Err(Error::BoxTooSmall {
            bound: hbox.bound(),
            required,
        });
    }
    let len = hbox.tuple_len();
    let out: Vec<PoleVector> = hbox
        .members()
        .into_par_iter()
        .filter(|v| {
            v.entries().iter().all(|&x| x > 0)
                && (0..len).any(|i| is_minimal_in_nabla(v.entries(), i, hbox))
        })
        .collect();
    Ok(out)
}

/// Rebuilds `H` within the box as lubs of zero-padded minimal generating sets
/// of every nonempty subset of the points.
///
/// Singletons use `<n a, b, c>`, subsets containing `P_inf` use
/// [`gamma_closed_form`] (any choice of the `P_j` is symmetric there), and
/// the remaining subsets take their generating set from `oracle_box`.
pub fn lub_closure(params: &GkParams, oracle_box: &TupleBox) -> Result<TupleBox> {
    let len = oracle_box.tuple_len();
    let bound = oracle_box.bound();
    let single =
        numerical_semigroup_members(&[params.n * params.a, params.b, params.c], bound as u64);

    let mut gens: HashSet<Vec<u32>> = HashSet::new();
    for mask in 1u32..(1 << len) {
        let coords: Vec<usize> = (0..len).filter(|&i| mask >> i & 1 == 1).collect();
        let local: Vec<PoleVector> = if coords.len() == 1 {
            (0..=bound)
                .filter(|&s| single[s as usize])
                .map(|s| PoleVector(vec![s]))
                .collect()
        } else if coords[0] == 0 {
            gamma_closed_form(params, coords.len() - 1)?
        } else {
            gamma_from_box(&oracle_box.restrict(&coords), params.genus)?
        };
        for v in local {
            if v.entries().iter().all(|&x| x <= bound) {
                gens.insert(TupleBox::embed(len, &coords, v.entries()));
            }
        }
    }

    let gens: Vec<Vec<u32>> = gens.into_iter().collect();
    let mut closure = TupleBox::empty(len, bound);
    let mut queue = Vec::new();
    for g in &gens {
        if closure.insert(g) {
            queue.push(g.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in &gens {
            let w: Vec<u32> = v.iter().zip(g).map(|(a, b)| *a.max(b)).collect();
            if closure.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(closure)
}

/// `l(A) = l(A - P_i)` for every point of the tuple, `A = sum v_i P_i`.
pub fn is_pure_gap(oracle: &DimOracle, v: &PoleVector) -> Result<bool> {
    let a = v.to_divisor(oracle.params())?;
    let la = oracle.dim(&a)?;
    for i in 0..v.len() {
        if oracle.dim(&a.plus(PoleVector::place(i), -1)?)? != la {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `((n^2 - m) c - k b, k, .., k, k - 1)`.
pub fn pure_gap_family_k(params: &GkParams, m: usize, k: u64) -> Result<PoleVector> {
    check_m(params, m)?;
    if k < 2 || k > params.a {
        return Err(Error::KOutOfRange { k, a: params.a });
    }
    let first = (params.n * params.n - m as u64) as i64 * params.c as i64 - (k * params.b) as i64;
    if first <= 0 {
        return Err(Error::NonPositiveCoordinate);
    }
    let mut v = vec![first as u32];
    v.extend(std::iter::repeat_n(k as u32, m - 1));
    v.push((k - 1) as u32);
    Ok(PoleVector(v))
}

fn representable(target: u64, gens: &[u64]) -> bool {
    numerical_semigroup_members(gens, target)[target as usize]
}

/// Arithmetic conditions under which `(alpha, 1, .., 1)` (a gap, `alpha < 2g - 1`)
/// is a pure gap: with `t = 2g - 1 - alpha`, either
/// `t = lambda c + beta a n + gamma b` with `lambda >= m`, or
/// `t >= (m - 1) c` and `t = beta a n + gamma b`.
pub fn pure_gap_alpha_criterion(params: &GkParams, m: usize, alpha: u64) -> Result<bool> {
    check_m(params, m)?;
    let bound = 2 * params.genus - 1;
    if alpha >= bound {
        return Err(Error::AlphaOutOfRange { alpha, bound });
    }
    let t = bound - alpha;
    let an = params.a * params.n;
    let lam_min = m as u64 * params.c;
    let cond_i = t >= lam_min && representable(t - lam_min, &[params.c, an, params.b]);
    let cond_ii = t >= (m as u64 - 1) * params.c && representable(t, &[an, params.b]);
    Ok(cond_i || cond_ii)
}

/// Verdict of the oracle on one tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleVerdict {
    pub tuple: PoleVector,
    pub in_semigroup: bool,
    pub pure_gap: bool,
}

pub fn classify(oracle: &DimOracle, v: &PoleVector) -> Result<TupleVerdict> {
    Ok(TupleVerdict {
        tuple: v.clone(),
        in_semigroup: membership_oracle(oracle, v)?,
        pure_gap: is_pure_gap(oracle, v)?,
    })
}

/// Pure gaps with all entries in `[1, T]`, by exhaustive oracle search.
pub fn pure_gaps_in_box(oracle: &DimOracle, m: usize, bound: u32) -> Result<Vec<PoleVector>> {
    check_box(oracle.params(), m, bound)?;
    let probe = TupleBox::empty(m + 1, bound);
    let hits = (0..probe.volume())
        .into_par_iter()
        .map(|i| {
            let v = PoleVector(probe.tuple_at(i));
            if v.entries().contains(&0) {
                return Ok(None);
            }
            Ok(is_pure_gap(oracle, &v)?.then_some(v))
        })
        .collect::<Result<Vec<Option<PoleVector>>>>()?;
    Ok(hits.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(v: &[u32]) -> PoleVector {
        PoleVector(v.to_vec())
    }

    #[test]
    fn gamma_n2() {
        let p = GkParams::new(2).unwrap();
        let g1 = gamma_closed_form(&p, 1).unwrap();
        let want: Vec<PoleVector> = [
            [1, 19],
            [2, 11],
            [3, 3],
            [4, 13],
            [5, 5],
            [7, 7],
            [10, 10],
            [11, 2],
            [13, 4],
            [19, 1],
        ]
        .iter()
        .map(|v| pv(v))
        .collect();
        assert_eq!(g1, want);
        let g2 = gamma_closed_form(&p, 2).unwrap();
        let mut want2 = vec![
            pv(&[10, 1, 1]),
            pv(&[1, 1, 10]),
            pv(&[1, 10, 1]),
            pv(&[2, 2, 2]),
            pv(&[4, 4, 4]),
        ];
        want2.sort();
        assert_eq!(g2, want2);
        assert_eq!(
            gamma_closed_form(&p, 3),
            Err(Error::MOutOfRange { m: 3, n: 2 })
        );
        assert_eq!(
            gamma_closed_form(&p, 0),
            Err(Error::MOutOfRange { m: 0, n: 2 })
        );
    }

    #[test]
    fn gamma_coordinates_are_gaps() {
        for n in [2, 3] {
            let p = GkParams::new(n).unwrap();
            let gaps: HashSet<u64> = single_point_gaps(&p).into_iter().collect();
            for m in 1..=n as usize {
                for v in gamma_closed_form(&p, m).unwrap() {
                    assert!(
                        v.entries().iter().all(|&x| gaps.contains(&(x as u64))),
                        "{v}"
                    );
                }
            }
        }
    }

    #[test]
    fn gaps() {
        let p = GkParams::new(2).unwrap();
        assert_eq!(
            single_point_gaps(&p),
            vec![1, 2, 3, 4, 5, 7, 10, 11, 13, 19]
        );
        let p3 = GkParams::new(3).unwrap();
        assert_eq!(single_point_gaps(&p3).len(), 99);
        let p4 = GkParams::new(4).unwrap();
        assert_eq!(single_point_gaps(&p4).len() as u64, p4.genus);
    }

    #[test]
    fn lub_basics() {
        assert_eq!(lub(&[pv(&[1, 19]), pv(&[19, 1])]).unwrap(), pv(&[19, 19]));
        assert_eq!(lub(&[pv(&[4, 5])]).unwrap(), pv(&[4, 5]));
        assert_eq!(
            lub(&[pv(&[1, 1, 10]), pv(&[1, 10, 1])]).unwrap(),
            pv(&[1, 10, 10])
        );
        assert_eq!(lub(&[]), Err(Error::EmptyInput));
        assert_eq!(lub(&[pv(&[1]), pv(&[1, 2])]), Err(Error::LengthMismatch));
    }

    #[test]
    fn membership_examples() {
        let o = DimOracle::for_n(2).unwrap();
        assert!(membership_oracle(&o, &pv(&[0, 0])).unwrap());
        assert!(membership_oracle(&o, &pv(&[0, 0, 0])).unwrap());
        assert!(membership_oracle(&o, &pv(&[3, 3])).unwrap());
        assert!(!membership_oracle(&o, &pv(&[1, 1])).unwrap());
        assert!(membership_oracle(&o, &pv(&[6, 0])).unwrap());
    }

    #[test]
    fn box_n2_m1() {
        let o = DimOracle::for_n(2).unwrap();
        let p = o.params().clone();
        let h = semigroup_box(&o, 1, 20).unwrap();
        assert!(h.contains(&[6, 0]));
        assert!(!h.contains(&[1, 1]));
        for v in gamma_closed_form(&p, 1).unwrap() {
            assert!(h.contains(v.entries()));
        }
        let gaps = h.complement();
        assert!(gaps.contains(&[1, 1]));
        assert!(!gaps.contains(&[3, 3]));
        let singles: Vec<u64> = (0..=20)
            .filter(|&s| gaps.contains(&[s, 0]))
            .map(u64::from)
            .collect();
        assert_eq!(singles, single_point_gaps(&p));
        let singles: Vec<u64> = (0..=20)
            .filter(|&s| gaps.contains(&[0, s]))
            .map(u64::from)
            .collect();
        assert_eq!(singles, single_point_gaps(&p));
        assert_eq!(
            gamma_from_box(&h, p.genus).unwrap(),
            gamma_closed_form(&p, 1).unwrap()
        );
        assert!(!gamma_from_box(&h, p.genus).unwrap().contains(&pv(&[0, 0])));
        assert_eq!(lub_closure(&p, &h).unwrap(), h);
    }

    #[test]
    fn box_errors() {
        let o = DimOracle::for_n(2).unwrap();
        assert!(matches!(
            semigroup_box(&o, 1, 41),
            Err(Error::BoxTooLarge { .. })
        ));
        let h = semigroup_box(&o, 1, 10).unwrap();
        assert_eq!(
            gamma_from_box(&h, 10),
            Err(Error::BoxTooSmall {
                bound: 10,
                required: 19
            })
        );
    }

    #[test]
    fn symmetric_in_p_points() {
        let o = DimOracle::for_n(2).unwrap();
        let h = semigroup_box(&o, 2, 19).unwrap();
        for v in h.members() {
            let e = v.entries();
            assert!(h.contains(&[e[0], e[2], e[1]]));
        }
        let g = gamma_from_box(&h, 10).unwrap();
        assert_eq!(g, gamma_closed_form(o.params(), 2).unwrap());
    }

    #[test]
    fn family_k_values() {
        let p = GkParams::new(2).unwrap();
        assert_eq!(pure_gap_family_k(&p, 1, 2).unwrap(), pv(&[11, 1]));
        assert_eq!(pure_gap_family_k(&p, 1, 3).unwrap(), pv(&[3, 2]));
        assert_eq!(
            pure_gap_family_k(&p, 1, 1),
            Err(Error::KOutOfRange { k: 1, a: 3 })
        );
        assert_eq!(
            pure_gap_family_k(&p, 2, 3),
            Err(Error::NonPositiveCoordinate)
        );
        let p3 = GkParams::new(3).unwrap();
        assert_eq!(pure_gap_family_k(&p3, 3, 2).unwrap(), pv(&[114, 2, 2, 1]));
        assert_eq!(pure_gap_family_k(&p3, 2, 2).unwrap(), pv(&[142, 2, 1]));
    }

    #[test]
    fn alpha_criterion() {
        let p = GkParams::new(2).unwrap();
        assert!(pure_gap_alpha_criterion(&p, 1, 11).unwrap());
        assert!(pure_gap_alpha_criterion(&p, 1, 18).is_ok());
        assert_eq!(
            pure_gap_alpha_criterion(&p, 1, 19),
            Err(Error::AlphaOutOfRange {
                alpha: 19,
                bound: 19
            })
        );
        let p3 = GkParams::new(3).unwrap();
        assert!(!pure_gap_alpha_criterion(&p3, 3, 155).unwrap());
    }

    #[test]
    fn pure_gaps_n2() {
        let o = DimOracle::for_n(2).unwrap();
        assert!(is_pure_gap(&o, &pv(&[11, 1])).unwrap());
        assert!(is_pure_gap(&o, &pv(&[3, 2])).unwrap());
        assert!(!is_pure_gap(&o, &pv(&[3, 3])).unwrap());
        assert!(!is_pure_gap(&o, &pv(&[4, 0])).unwrap());
        let h = semigroup_box(&o, 1, 19).unwrap();
        for v in pure_gaps_in_box(&o, 1, 19).unwrap() {
            assert!(!h.contains(v.entries()), "{v}");
        }
    }

    #[test]
    fn parse_tuple() {
        assert_eq!(
            "142,2,2,1".parse::<PoleVector>().unwrap(),
            pv(&[142, 2, 2, 1])
        );
        assert_eq!("(3, 3)".parse::<PoleVector>().unwrap(), pv(&[3, 3]));
        assert!("1,x".parse::<PoleVector>().is_err());
        assert_eq!(pv(&[1, 2]).to_string(), "(1,2)");
    }
}
