//! Arithmetic in GF(p^d) over a polynomial basis.
//!
//! An element is stored as the packed integer `sum c_i p^i` of its
//! coordinates `c_0..c_{d-1}` in the basis `1, x, .., x^{d-1}` modulo a
//! fixed irreducible polynomial. The modulus is the smallest monic
//! irreducible of degree `d` when its lower coefficients are read as a
//! base-`p` integer, so every table and matrix downstream is reproducible.
//!
//! Multiplication and (odd characteristic) addition go through exp/log and
//! Zech tables generated from the schoolbook polynomial product; the
//! schoolbook routines stay available as [`FieldCtx::mul_schoolbook`] and
//! [`FieldCtx::add_digits`].

use crate::error::{Error, Result};

/// Largest field order for which lookup tables are built.
pub const MAX_ORDER: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// A field element in packed polynomial-basis form.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Element whose base-`p` digits are its coordinates.
    pub const fn from_index(i: u32) -> Fe {
        Fe(i)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// An immutable GF(p^d) context.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    d: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            while n.is_multiple_of(k) {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over Z_p, constant term first, no trailing zeros.
mod zp {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let (mut r0, mut r1) = (p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        s0.rem_euclid(p as i64) as u32
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let len = a.len().max(b.len());
        let out = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let f = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
            let shift = top - dm;
            for (i, &mc) in m.iter().enumerate() {
                let t = (f as u64 * mc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
        rem(&prod, m, p)
    }

    pub fn pow_mod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut base = rem(a, m, p);
        let mut acc = vec![1];
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, m, p);
            }
            base = mul_mod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Irreducibility of a monic `f` of degree `d` (Rabin-style test).
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let d = f.len() - 1;
        if d == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        let x = vec![0, 1];
        let mut xp = x.clone();
        for _ in 1..=d / 2 {
            xp = pow_mod(&xp, p as u64, f, p);
            let g = gcd(f, &sub(&xp, &x, p), p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

impl FieldCtx {
    /// Builds GF(p^d) with the smallest monic irreducible modulus.
    pub fn new(p: u64, d: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if !(1..=12).contains(&d) {
            return Err(Error::DegreeOutOfRange(d));
        }
        let order = p
            .checked_pow(d)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(d)))?;
        let p = p as u32;
        let order = order as u32;

        let modulus = (0..order)
            .map(|lower| {
                let mut f = digits_of(lower, p, d);
                f.push(1);
                f
            })
            .find(|f| zp::is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let mut ctx = FieldCtx {
            p,
            d,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    fn build_tables(&mut self) {
        let q1 = (self.order - 1) as u64;
        let factors = prime_factors(q1);
        let generator = (1..self.order)
            .map(Fe)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_schoolbook(g, q1 / r) != Fe::ONE)
            })
            .expect("multiplicative group is cyclic");

        let q1 = q1 as usize;
        let mut exp = vec![0u32; 2 * q1.max(1)];
        let mut log = vec![NO_LOG; self.order as usize];
        let mut cur = Fe::ONE;
        for (k, slot) in exp.iter_mut().enumerate().take(q1) {
            *slot = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.mul_schoolbook(cur, generator);
        }
        for k in q1..exp.len() {
            exp[k] = exp[k - q1];
        }
        self.exp = exp;
        self.log = log;

        if self.p != 2 {
            self.zech = (0..q1)
                .map(|k| {
                    let v = self.add_digits(Fe::ONE, Fe(self.exp[k]));
                    if v.is_zero() {
                        NO_LOG
                    } else {
                        self.log[v.0 as usize]
                    }
                })
                .collect();
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in packed-index order; starts with 0, 1.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(Fe)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        digits_of(a.0, self.p, self.d)
    }

    /// Element from coordinates; missing high coordinates are zero,
    /// entries are reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Fe {
        let mut idx = 0u32;
        for &c in coeffs.iter().take(self.d as usize).rev() {
            idx = idx * self.p + c % self.p;
        }
        Fe(idx)
    }

    pub fn from_int(&self, k: i64) -> Fe {
        Fe(k.rem_euclid(self.p as i64) as u32)
    }

    /// Base-`p` digit string, constant term first.
    pub fn to_digit_string(&self, a: Fe) -> String {
        let digits = self.coeffs(a);
        if self.p <= 36 {
            digits
                .iter()
                .map(|&c| char::from_digit(c, 36).unwrap())
                .collect()
        } else {
            digits
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn parse_digit_string(&self, s: &str) -> Option<Fe> {
        let digits: Option<Vec<u32>> = if self.p <= 36 {
            s.chars().map(|ch| ch.to_digit(36)).collect()
        } else {
            s.split('.').map(|t| t.parse().ok()).collect()
        };
        let digits = digits?;
        if digits.len() != self.d as usize || digits.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(self.from_coeffs(&digits))
    }

    /// Coordinate-wise addition without tables.
    pub fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.d {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        Fe(out)
    }

    /// Polynomial product reduced by the modulus, without tables.
    pub fn mul_schoolbook(&self, a: Fe, b: Fe) -> Fe {
        let prod = zp::mul_mod(
            &zp::trim(self.coeffs(a)),
            &zp::trim(self.coeffs(b)),
            &self.modulus,
            self.p,
        );
        self.from_coeffs(&prod)
    }

    fn pow_schoolbook(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, base);
            }
            base = self.mul_schoolbook(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let q1 = self.order - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let diff = if lb >= la { lb - la } else { lb + q1 - la };
        match self.zech[diff as usize] {
            NO_LOG => Fe::ZERO,
            z => Fe(self.exp[(la + z) as usize]),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        let half = (self.order - 1) / 2;
        Fe(self.exp[(self.log[a.0 as usize] + half) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let q1 = self.order - 1;
        Ok(Fe(self.exp[(q1 - self.log[a.0 as usize]) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let q1 = (self.order - 1) as u64;
        let e = (self.log[a.0 as usize] as u64 * (k % q1)) % q1;
        Fe(self.exp[e as usize])
    }

    /// `a^(p^r)`.
    pub fn frobenius(&self, a: Fe, r: u32) -> Fe {
        let q1 = (self.order - 1) as u64;
        if a.0 == 0 || q1 == 0 {
            return a;
        }
        let mut e = 1u64;
        for _ in 0..r {
            e = e * self.p as u64 % q1;
        }
        // e == 0 only when p^r is a multiple of q-1, i.e. the trivial field
        self.pow(a, if e == 0 { q1 } else { e })
    }
}

fn digits_of(mut v: u32, p: u32, d: u32) -> Vec<u32> {
    (0..d)
        .map(|_| {
            let c = v % p;
            v /= p;
            c
        })
        .collect()
}
