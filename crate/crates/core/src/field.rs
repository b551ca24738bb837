//! Arithmetic in GF(q), q = p^m.
//!
//! Elements are stored as integers in `[0, q)`. For prime fields this is the
//! residue itself; for extension fields it is the base-`p` encoding of the
//! coefficient vector, low degree first (`c0 + c1*p + c2*p^2 + ...`), with the
//! product reduced modulo the user-supplied irreducible polynomial.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    /// 1 is encoded as the integer 1 in every field.
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Tables below this size are precomputed for extension fields.
const TABLE_LIMIT: u32 = 256;

#[derive(Debug)]
struct ExtTables {
    add: Option<Vec<u32>>,
    mul: Option<Vec<u32>>,
    inv: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    ext: Option<Arc<ExtTables>>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Builds GF(p^m). `modulus` (low degree first, monic, degree m) must be
    /// given exactly when `m > 1`.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::input("field.m", "extension degree must be at least 1"));
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::input("field", "field size above 2^16 is not supported"))? as u32;
        if m == 1 {
            if modulus.is_some() {
                return Err(Error::input("field.modulus", "modulus given for a prime field"));
            }
            return Ok(FieldCtx { p, m, q, modulus: None, ext: None });
        }
        let modulus =
            modulus.ok_or_else(|| Error::input("field.modulus", "extension field requires a modulus"))?.to_vec();
        let bad = || Error::ReducibleModulus(modulus.clone(), m);
        if modulus.len() != m as usize + 1 || modulus.iter().any(|&c| c >= p) || modulus[m as usize] != 1 {
            return Err(bad());
        }
        let base = FieldCtx::prime(p)?;
        let f = Poly::new(&base, modulus.iter().map(|&c| FieldElement(c)).collect());
        if !f.is_irreducible(&base) {
            return Err(bad());
        }
        let mut ctx = FieldCtx { p, m, q, modulus: Some(modulus), ext: None };
        ctx.ext = Some(Arc::new(ctx.build_tables()));
        Ok(ctx)
    }

    fn build_tables(&self) -> ExtTables {
        let q = self.q;
        let (add, mul) = if q <= TABLE_LIMIT {
            let mut add = vec![0; (q * q) as usize];
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = self.ext_add(a, b);
                    mul[(a * q + b) as usize] = self.ext_mul(a, b);
                }
            }
            (Some(add), Some(mul))
        } else {
            (None, None)
        };
        let mut inv = vec![0; q as usize];
        for a in 1..q {
            // a^(q-2) by square and multiply
            let mut base = a;
            let mut e = q - 2;
            let mut acc = 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.ext_mul(acc, base);
                }
                base = self.ext_mul(base, base);
                e >>= 1;
            }
            inv[a as usize] = acc;
        }
        ExtTables { add, mul, inv }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element from its integer encoding in `[0, q)`.
    pub fn elem(&self, v: u32) -> Result<FieldElement> {
        if v < self.q {
            Ok(FieldElement(v))
        } else {
            Err(Error::input("field element", format!("{v} is not below q = {}", self.q)))
        }
    }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::input(
                "field element",
                format!("{coeffs:?} is not a reduced coefficient vector of length {}", self.m),
            ));
        }
        Ok(FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    fn ext_add(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    fn ext_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let m = self.m as usize;
        let ca = self.coeffs(FieldElement(a));
        let cb = self.coeffs(FieldElement(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let modulus = self.modulus.as_ref().expect("extension field has a modulus");
        // x^m = -(c0 + c1 x + ... + c_{m-1} x^{m-1})
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mc) in modulus[..m].iter().enumerate() {
                let sub = c * mc as u64 % p;
                prod[k - m + j] = (prod[k - m + j] + p - sub) % p;
            }
        }
        prod[..m].iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.ext {
            None => {
                let s = a.0 + b.0;
                FieldElement(if s >= self.p { s - self.p } else { s })
            }
            Some(t) => match &t.add {
                Some(add) => FieldElement(add[(a.0 * self.q + b.0) as usize]),
                None => FieldElement(self.ext_add(a.0, b.0)),
            },
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.m == 1 {
            FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
        } else {
            let c: Vec<u32> = self.coeffs(a).into_iter().map(|c| (self.p - c) % self.p).collect();
            self.from_coeffs(&c).expect("negation stays reduced")
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.m == 1 {
            FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.ext {
            None => FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32),
            Some(t) => match &t.mul {
                Some(mul) => FieldElement(mul[(a.0 * self.q + b.0) as usize]),
                None => FieldElement(self.ext_mul(a.0, b.0)),
            },
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivZero);
        }
        Ok(match &self.ext {
            None => FieldElement(self.pow(a, (self.p - 2) as u64).0),
            Some(t) => FieldElement(t.inv[a.0 as usize]),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Digit used when printing vectors over prime fields with p <= 10.
    pub fn format_elem(&self, a: FieldElement) -> String {
        if self.m == 1 {
            a.0.to_string()
        } else {
            let c: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("({})", c.join(","))
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}
