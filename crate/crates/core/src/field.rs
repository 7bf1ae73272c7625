//! Arithmetic in GF(p^m), with m chosen as the multiplicative order of p
//! modulo t so that the field contains a primitive t-th root of unity.
//!
//! A [`Scalar`] stores the coefficient vector of its power-basis
//! representation packed as a base-p integer: `c0 + c1 p + ... + c(m-1) p^(m-1)`.
//! All arithmetic goes through the owning [`FieldCtx`].

use std::fmt;

use crate::error::{Error, Result};

/// Field element, packed in base p. Only meaningful together with its [`FieldCtx`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(pub u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Tables are materialised for fields up to this size.
const TABLE_LIMIT: u32 = 1 << 10;

#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    t: u32,
    /// Monic modulus, coefficients from degree 0 up to degree m.
    modulus: Vec<u32>,
    xi: Scalar,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("xi", &self.xi)
            .field("t", &self.t)
            .finish()
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative order of p modulo t (1 when t = 1).
fn order_mod(p: u32, t: u32) -> u32 {
    if t == 1 {
        return 1;
    }
    let mut x = p % t;
    let mut k = 1;
    while x != 1 {
        x = (x as u64 * p as u64 % t as u64) as u32;
        k += 1;
    }
    k
}

// Dense polynomials over Z_p, lowest degree first, no trailing zeros.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Irreducibility over Z_p: gcd(f, x^(p^k) - x) = 1 for every 1 <= k < deg f.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m <= 1 {
        return m == 1;
    }
    let x = vec![0, 1];
    let mut xpk = x.clone();
    for _ in 1..m {
        // xpk <- xpk^p mod f
        let mut acc = vec![1u32];
        for _ in 0..p {
            acc = poly_mulmod(&acc, &xpk, f, p);
        }
        xpk = acc;
        let mut diff = xpk.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl FieldCtx {
    /// Build GF(p^m) with m = ord_t(p), the lexicographically first monic
    /// irreducible modulus, and the first element of exact order t as xi.
    pub fn new(p: u32, t: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 || t.is_multiple_of(p) {
            return Err(Error::CharDividesOrder { p, t });
        }
        let m = order_mod(p, t);
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= 1 << 22)
            .ok_or_else(|| Error::InvalidSpec(format!("field GF({p}^{m}) is too large")))?;

        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(m))
                .map(|k| {
                    let mut f: Vec<u32> = (0..m).map(|i| (k / p.pow(i)) % p).collect();
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };

        let mut field =
            FieldCtx { p, m, q, t, modulus, xi: Scalar::ONE, exp: Vec::new(), log: Vec::new(), add_table: None };
        if m > 1 {
            field.build_log_tables();
            if q <= TABLE_LIMIT {
                let mut add = vec![0u32; (q * q) as usize];
                for a in 0..q {
                    for b in 0..q {
                        add[(a * q + b) as usize] = field.add_slow(Scalar(a), Scalar(b)).0;
                    }
                }
                field.add_table = Some(add);
            }
        }
        field.xi = (1..q).map(Scalar).find(|&x| field.multiplicative_order(x) == t).expect("t divides p^m - 1");
        Ok(field)
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        let gen = (2..q).map(Scalar).find(|&x| self.order_by_poly(x) == q - 1).unwrap_or(Scalar(1));
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = Scalar::ONE;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.mul_poly(cur, gen);
        }
        self.exp = exp;
        self.log = log;
    }

    fn digits(&self, x: Scalar) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.m as usize);
        let mut r = x.0;
        for _ in 0..self.m {
            v.push(r % self.p);
            r /= self.p;
        }
        v
    }

    fn pack(&self, d: &[u32]) -> Scalar {
        let mut r = 0u32;
        for &c in d.iter().rev() {
            r = r * self.p + c;
        }
        Scalar(r)
    }

    fn mul_poly(&self, a: Scalar, b: Scalar) -> Scalar {
        let mut da = self.digits(a);
        let mut db = self.digits(b);
        poly_trim(&mut da);
        poly_trim(&mut db);
        let mut r = poly_mulmod(&da, &db, &self.modulus, self.p);
        r.resize(self.m as usize, 0);
        self.pack(&r)
    }

    fn order_by_poly(&self, x: Scalar) -> u32 {
        let mut cur = x;
        let mut k = 1;
        while cur != Scalar::ONE {
            cur = self.mul_poly(cur, x);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    fn add_slow(&self, a: Scalar, b: Scalar) -> Scalar {
        let da = self.digits(a);
        let db = self.digits(b);
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&s)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn root_order(&self) -> u32 {
        self.t
    }

    /// Monic modulus coefficients, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The chosen primitive t-th root of unity.
    pub fn xi(&self) -> Scalar {
        self.xi
    }

    pub fn xi_pow(&self, k: i64) -> Scalar {
        let t = self.t as i64;
        self.pow(self.xi, k.rem_euclid(t) as u64)
    }

    pub fn coeffs(&self, x: Scalar) -> Vec<u32> {
        self.digits(x)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Scalar {
        let mut d: Vec<u32> = c.iter().map(|x| x % self.p).collect();
        d.resize(self.m as usize, 0);
        self.pack(&d)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> Scalar {
        Scalar(k.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        if self.m == 1 {
            let s = a.0 + b.0;
            Scalar(if s >= self.p { s - self.p } else { s })
        } else if let Some(t) = &self.add_table {
            Scalar(t[(a.0 * self.q + b.0) as usize])
        } else {
            self.add_slow(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a.is_zero() {
            return a;
        }
        if self.m == 1 {
            Scalar(self.p - a.0)
        } else {
            let d: Vec<u32> = self.digits(a).iter().map(|&c| (self.p - c) % self.p).collect();
            self.pack(&d)
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::ZERO;
        }
        if self.m == 1 {
            Scalar(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
        } else {
            let n = self.q - 1;
            let s = self.log[a.0 as usize] + self.log[b.0 as usize];
            Scalar(self.exp[(if s >= n { s - n } else { s }) as usize])
        }
    }

    /// a + b * c
    #[inline]
    pub fn mul_add(&self, a: Scalar, b: Scalar, c: Scalar) -> Scalar {
        self.add(a, self.mul(b, c))
    }

    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        Some(if self.m == 1 {
            Scalar(inv_mod(a.0, self.p))
        } else {
            let n = self.q - 1;
            let l = self.log[a.0 as usize];
            Scalar(self.exp[((n - l) % n) as usize])
        })
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut r = Scalar::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Rational constant num/den in the prime field; panics if p divides den.
    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        let d = self.from_int(den);
        self.div(self.from_int(num), d).expect("denominator divisible by the characteristic")
    }

    pub fn frobenius(&self, x: Scalar) -> Scalar {
        self.pow(x, self.p as u64)
    }

    /// The unique y with y^p = x, namely x^(p^(m-1)).
    pub fn pth_root(&self, x: Scalar) -> Scalar {
        let mut y = x;
        for _ in 1..self.m {
            y = self.frobenius(y);
        }
        y
    }

    pub fn multiplicative_order(&self, x: Scalar) -> u32 {
        if x.is_zero() {
            return 0;
        }
        let mut cur = x;
        let mut k = 1;
        while cur != Scalar::ONE {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.q).map(Scalar)
    }

    /// Parse a scalar literal: an integer for prime fields, or a comma separated
    /// coefficient list `c0,c1,...` in the power basis of the modulus.
    pub fn parse_scalar(&self, lit: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar(lit.to_string());
        let parts: Vec<&str> = lit.split(',').map(str::trim).collect();
        if parts.len() > self.m as usize || parts.is_empty() {
            return Err(bad());
        }
        let mut coeffs = Vec::with_capacity(parts.len());
        for part in parts {
            let v: i64 = part.parse().map_err(|_| bad())?;
            coeffs.push(v.rem_euclid(self.p as i64) as u32);
        }
        Ok(self.from_coeffs(&coeffs))
    }

    pub fn format_scalar(&self, x: Scalar) -> String {
        if self.m == 1 {
            x.0.to_string()
        } else {
            self.digits(x).iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_with_square_root_of_unity() {
        let f = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.xi(), Scalar(2));
        let f1 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f1.xi(), Scalar::ONE);
    }

    #[test]
    fn gf4_cube_root_of_unity() {
        let f = FieldCtx::new(2, 3).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = f.xi();
        assert_eq!(f.pow(w, 3), Scalar::ONE);
        assert_ne!(w, Scalar::ONE);
        // w + 1 squared is w^2 + 1 = w
        let w1 = f.add(w, Scalar::ONE);
        assert_eq!(f.pth_root(w), w1);
        assert_eq!(f.mul(w1, w1), w);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldCtx::new(4, 3), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::new(3, 6), Err(Error::CharDividesOrder { .. })));
    }

    #[test]
    fn pth_root_fixes_prime_field() {
        let f = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f.pth_root(Scalar(2)), Scalar(2));
        assert_eq!(f.pth_root(Scalar::ZERO), Scalar::ZERO);
    }

    #[test]
    fn larger_extensions_have_exact_order_roots() {
        for (p, t) in [(3, 4), (5, 3), (2, 5), (2, 7), (3, 13), (7, 5)] {
            let f = FieldCtx::new(p, t).unwrap();
            assert_eq!((f.size() - 1) % t, 0);
            let xi = f.xi();
            assert_eq!(f.pow(xi, t as u64), Scalar::ONE);
            for d in 1..t {
                assert_ne!(f.pow(xi, d as u64), Scalar::ONE, "p={p} t={t} d={d}");
            }
        }
    }

    #[test]
    fn scalar_literals() {
        let f = FieldCtx::new(2, 3).unwrap();
        assert_eq!(f.parse_scalar("0,1").unwrap(), f.xi());
        assert_eq!(f.format_scalar(f.xi()), "0,1");
        assert!(f.parse_scalar("1,0,1").is_err());
        assert!(f.parse_scalar("x").is_err());
        let g = FieldCtx::new(3, 2).unwrap();
        assert_eq!(g.parse_scalar("-1").unwrap(), Scalar(2));
    }
}
