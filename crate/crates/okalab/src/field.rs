//! Table-driven arithmetic for GF(p^e).
//!
//! Elements are residue classes of GF(p)[x] modulo a monic irreducible of
//! degree `e`, encoded as the integer `c_0 + c_1*p + ... + c_{e-1}*p^{e-1}`
//! where `c_i` is the coefficient of `x^i`. All arithmetic goes through
//! precomputed tables, so every operation is exact and constant-time at the
//! sizes this crate targets.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 512;

/// A field element, as the code described in the module docs. Only
/// meaningful relative to its [`FiniteField`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct FieldElement(pub u16);

pub struct FiniteField {
    p: u64,
    e: usize,
    q: u64,
    /// Monic modulus, low degree first, length `e + 1`, leading coefficient 1.
    modulus: Vec<u64>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `g`, coefficients mod `p`, low degree first.
fn poly_rem(p: u64, a: &[u64], g: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for i in 0..=dg {
                let idx = shift + i;
                r[idx] = (r[idx] + p - lead * g[i] % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..=e/2.
    for k in 1..=e / 2 {
        let count = p.pow(k as u32);
        for c in 0..count {
            let mut g = Vec::with_capacity(k + 1);
            let mut v = c;
            for _ in 0..k {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The default modulus: smallest monic irreducible of degree `e`, where
/// candidates are ordered by the integer `a_0 + a_1*p + ... + a_{e-1}*p^{e-1}`
/// formed from the non-leading coefficients. This matches the classical table
/// choices (x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^2+1 for GF(9)).
fn default_modulus(p: u64, e: usize) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = p.pow(e as u32);
    for c in 0..count {
        let mut f = Vec::with_capacity(e + 1);
        let mut v = c;
        for _ in 0..e {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl FiniteField {
    /// Build GF(p^e). With `modulus: None` the default modulus is selected;
    /// an explicit modulus must be monic of degree `e`, low degree first, and
    /// irreducible over GF(p).
    pub fn new(p: u64, e: usize, modulus: Option<&[u64]>) -> Result<Arc<FiniteField>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadModulus { expected: 0, got: vec![] });
        }
        let q = p.checked_pow(e as u32).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(
            Error::FieldTooLarge(p.saturating_pow(e as u32), MAX_FIELD_ORDER),
        )?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e + 1 || m[e] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: e, got: m.to_vec() });
                }
                for k in 1..=e / 2 {
                    let count = p.pow(k as u32);
                    for c in 0..count {
                        let mut g = Vec::with_capacity(k + 1);
                        let mut v = c;
                        for _ in 0..k {
                            g.push(v % p);
                            v /= p;
                        }
                        g.push(1);
                        if poly_rem(p, m, &g).is_empty() {
                            return Err(Error::ReducibleModulus(k));
                        }
                    }
                }
                m.to_vec()
            }
            None => default_modulus(p, e),
        };

        let qu = q as usize;
        let decode = |code: u64| -> Vec<u64> {
            let mut v = code;
            let mut c = Vec::with_capacity(e);
            for _ in 0..e {
                c.push(v % p);
                v /= p;
            }
            c
        };
        let encode = |coeffs: &[u64]| -> u16 {
            let mut code = 0u64;
            for (i, &c) in coeffs.iter().enumerate().take(e) {
                code += c * p.pow(i as u32);
            }
            code as u16
        };

        let mut add_t = vec![0u16; qu * qu];
        let mut mul_t = vec![0u16; qu * qu];
        let mut neg_t = vec![0u16; qu];
        let mut inv_t = vec![0u16; qu];
        for a in 0..qu {
            let ca = decode(a as u64);
            let cn: Vec<u64> = ca.iter().map(|&c| (p - c) % p).collect();
            neg_t[a] = encode(&cn);
            for b in 0..qu {
                let cb = decode(b as u64);
                let cs: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                add_t[a * qu + b] = encode(&cs);
                let mut prod = vec![0u64; 2 * e - 1];
                for (i, &x) in ca.iter().enumerate() {
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let rem = poly_rem(p, &prod, &modulus);
                mul_t[a * qu + b] = encode(&rem);
            }
        }
        for a in 1..qu {
            for b in 1..qu {
                if mul_t[a * qu + b] == 1 {
                    inv_t[a] = b as u16;
                    break;
                }
            }
            debug_assert_ne!(inv_t[a], 0, "every nonzero element of a field is invertible");
        }

        Ok(Arc::new(FiniteField { p, e, q, modulus, add_t, mul_t, neg_t, inv_t }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// The order p^e.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_t[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_t[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg_t[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert_ne!(a.0, 0, "zero has no inverse");
        FieldElement(self.inv_t[a.0 as usize])
    }

    /// Coefficients of `a`, low degree first, length `e`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        let mut v = a.0 as u64;
        let mut c = Vec::with_capacity(self.e);
        for _ in 0..self.e {
            c.push(v % self.p);
            v /= self.p;
        }
        c
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.e {
            return Err(Error::DimensionMismatch { expected: self.e, got: coeffs.len() });
        }
        let mut code = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::BadCoefficient(c));
            }
            code += c * self.p.pow(i as u32);
        }
        Ok(FieldElement(code as u16))
    }

    /// All elements in code order (which is the canonical iteration order).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u16).map(FieldElement)
    }

    /// Structural equality: same prime, degree and modulus.
    pub fn same_field(&self, other: &FiniteField) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }

    pub fn fmt_elem(&self, a: FieldElement) -> String {
        if self.e == 1 {
            format!("{}", a.0)
        } else {
            let c = self.coeffs(a);
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.e, self.modulus)
    }
}
