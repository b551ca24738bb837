//! Univariate polynomials over GF(q) and their complete factorization
//! (square-free split, distinct-degree split, randomized equal-degree split).

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{axpy, is_zero_vec, Matrix};

/// Coefficients low degree first, never with trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(_ctx: &FieldCtx, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        Poly::new(ctx, coeffs.iter().map(|&c| ctx.from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![FieldElement::ONE] }
    }

    pub fn constant(c: FieldElement) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn x() -> Self {
        Poly { coeffs: vec![FieldElement::ZERO, FieldElement::ONE] }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [FieldElement::ONE]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(ctx, (0..n).map(|i| ctx.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(ctx, (0..n).map(|i| ctx.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElement) -> Poly {
        Poly::new(ctx, self.coeffs.iter().map(|&a| ctx.mul(c, a)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                axpy(ctx, &mut out[i..], a, &other.coeffs);
            }
        }
        Poly::new(ctx, out)
    }

    pub fn div_rem(&self, ctx: &FieldCtx, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivZero)?;
        let inv = ctx.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = ctx.mul(rem[k], inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            axpy(ctx, &mut rem[k - dd..=k], ctx.neg(c), &divisor.coeffs);
        }
        rem.truncate(dd);
        Ok((Poly::new(ctx, quot), Poly::new(ctx, rem)))
    }

    pub fn rem(&self, ctx: &FieldCtx, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(ctx, divisor)?.1)
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    fn exact_div(&self, ctx: &FieldCtx, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(ctx, divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn monic(&self, ctx: &FieldCtx) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(ctx, ctx.inv(self.lead()).expect("nonzero leading coefficient"))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(ctx, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(ctx)
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, ctx: &FieldCtx, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(ctx, &r1).expect("nonzero divisor");
            let s = s0.sub(ctx, &q.mul(ctx, &s1));
            let t = t0.sub(ctx, &q.mul(ctx, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = ctx.inv(r0.lead()).unwrap();
        (r0.scale(ctx, inv), s0.scale(ctx, inv), t0.scale(ctx, inv))
    }

    pub fn derivative(&self, ctx: &FieldCtx) -> Poly {
        Poly::new(
            ctx,
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| ctx.mul(ctx.from_int(i as i64), c)).collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, ctx: &FieldCtx, e: &BigUint, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one().rem(ctx, m)?;
        let base = self.rem(ctx, m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(ctx, &acc).rem(ctx, m)?;
            if e.bit(i) {
                acc = acc.mul(ctx, &base).rem(ctx, m)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// `p(T)` for a square matrix `T`.
    pub fn eval_matrix(&self, ctx: &FieldCtx, t: &Matrix) -> Result<Matrix> {
        let n = t.rows();
        let mut acc = Matrix::zero(n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(ctx, t)?;
            acc.add_scaled(ctx, c, &Matrix::identity(n));
        }
        Ok(acc)
    }

    /// Degree test: no factor of degree <= deg/2, i.e. `gcd(x^(q^i) - x, f) = 1`
    /// for all `i <= deg/2`.
    pub fn is_irreducible(&self, ctx: &FieldCtx) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        let f = self.monic(ctx);
        let q = BigUint::from(ctx.q());
        let x = Poly::x();
        let mut h = x.rem(ctx, &f).unwrap();
        for _ in 1..=d / 2 {
            h = h.pow_mod(ctx, &q, &f).unwrap();
            if !h.sub(ctx, &x).gcd(ctx, &f).is_one() {
                return false;
            }
        }
        true
    }

    /// Complete factorization of `monic(self)` into monic irreducibles with
    /// multiplicities, sorted by (degree, coefficients).
    pub fn factor<R: Rng + ?Sized>(&self, ctx: &FieldCtx, rng: &mut R) -> Vec<(Poly, usize)> {
        assert!(self.degree().is_some_and(|d| d >= 1), "factor needs degree >= 1");
        let mut out: Vec<(Poly, usize)> = Vec::new();
        for (sf, mult) in square_free(ctx, &self.monic(ctx)) {
            for (part, d) in distinct_degree(ctx, &sf) {
                for g in equal_degree(ctx, &part, d, rng) {
                    match out.iter_mut().find(|(h, _)| *h == g) {
                        Some((_, m)) => *m += mult,
                        None => out.push((g, mult)),
                    }
                }
            }
        }
        out.sort_by(|(a, _), (b, _)| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
        out
    }
}

/// Square-free decomposition of a monic polynomial: pairs `(g, i)` with the
/// `g` pairwise coprime, square-free, and `f = prod g^i`.
fn square_free(ctx: &FieldCtx, f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative(ctx);
    let mut c = f.gcd(ctx, &df);
    let mut w = f.exact_div(ctx, &c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(ctx, &c);
        let z = w.exact_div(ctx, &y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(ctx, &w);
    }
    if !c.is_one() {
        let p = ctx.p() as usize;
        for (g, e) in square_free(ctx, &pth_root(ctx, &c)) {
            out.push((g, e * p));
        }
    }
    out
}

/// `g` with `g^p = f`, for `f` whose exponents are all multiples of p.
fn pth_root(ctx: &FieldCtx, f: &Poly) -> Poly {
    let p = ctx.p() as usize;
    // a -> a^(q/p) inverts Frobenius
    let e = (ctx.q() / ctx.p()) as u64;
    let coeffs = f.coeffs.iter().step_by(p).map(|&c| ctx.pow(c, e)).collect();
    debug_assert!(f.coeffs.iter().enumerate().all(|(i, c)| i % p == 0 || c.is_zero()));
    Poly::new(ctx, coeffs)
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree: pairs `(product, degree)`.
fn distinct_degree(ctx: &FieldCtx, f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let q = BigUint::from(ctx.q());
    let x = Poly::x();
    let mut g = f.clone();
    let mut h = x.rem(ctx, &g).unwrap();
    let mut i = 1;
    while g.degree().unwrap() >= 2 * i {
        h = h.pow_mod(ctx, &q, &g).unwrap();
        let d = h.sub(ctx, &x).gcd(ctx, &g);
        if !d.is_one() {
            g = g.exact_div(ctx, &d);
            h = h.rem(ctx, &g).unwrap();
            out.push((d, i));
        }
        i += 1;
    }
    if g.degree().unwrap() > 0 {
        let d = g.degree().unwrap();
        out.push((g, d));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus). Odd characteristic uses the
/// `(q^d - 1)/2` power; characteristic 2 uses the trace `sum a^(2^i)`.
fn equal_degree<R: Rng + ?Sized>(ctx: &FieldCtx, f: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let qd = BigUint::from(ctx.q()).pow(d as u32);
    let half = (&qd - BigUint::one()) >> 1;
    let trace_len = ctx.m() as usize * d;
    loop {
        let a = Poly::new(ctx, (0..n).map(|_| ctx.elem(rng.gen_range(0..ctx.q())).unwrap()).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if ctx.p() == 2 {
            let mut t = a.rem(ctx, f).unwrap();
            let mut acc = t.clone();
            for _ in 1..trace_len {
                t = t.mul(ctx, &t).rem(ctx, f).unwrap();
                acc = acc.add(ctx, &t);
            }
            acc
        } else {
            a.pow_mod(ctx, &half, f).unwrap().sub(ctx, &Poly::one())
        };
        let g = b.gcd(ctx, f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.exact_div(ctx, &g);
            let mut out = equal_degree(ctx, &g, d, rng);
            out.extend(equal_degree(ctx, &h, d, rng));
            return out;
        }
    }
}

/// Minimal polynomial of a square matrix: the first linear dependency among
/// `I, T, T^2, ...`, found by incremental reduction of the flattened powers.
pub fn min_poly(ctx: &FieldCtx, t: &Matrix) -> Result<Poly> {
    if !t.is_square() {
        return Err(Error::DimMismatch { expected: t.rows(), got: t.cols() });
    }
    let n = t.rows();
    // reduced[i] = (vector, pivot, combination of powers giving vector)
    let mut reduced: Vec<(Vec<FieldElement>, usize, Vec<FieldElement>)> = Vec::new();
    let mut power = Matrix::identity(n);
    for k in 0..=n {
        let mut v = power.entries().to_vec();
        let mut comb = vec![FieldElement::ZERO; k + 1];
        comb[k] = FieldElement::ONE;
        for (r, piv, rc) in &reduced {
            let c = v[*piv];
            if !c.is_zero() {
                let nc = ctx.neg(c);
                axpy(ctx, &mut v, nc, r);
                axpy(ctx, &mut comb, nc, rc);
            }
        }
        if is_zero_vec(&v) {
            return Ok(Poly::new(ctx, comb));
        }
        let piv = v.iter().position(|x| !x.is_zero()).unwrap();
        let inv = ctx.inv(v[piv])?;
        let v: Vec<_> = v.iter().map(|&x| ctx.mul(inv, x)).collect();
        let comb: Vec<_> = comb.iter().map(|&x| ctx.mul(inv, x)).collect();
        reduced.push((v, piv, comb));
        power = power.mul(ctx, t)?;
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

pub struct DisplayPoly<'a>(pub &'a FieldCtx, pub &'a Poly);

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ctx, p) = (self.0, self.1);
        if p.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (i, &c) in p.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = ctx.format_elem(c);
            let mon = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c == FieldElement::ONE, i) {
                (_, 0) => cs,
                (true, _) => mon,
                (false, _) => format!("{cs}*{mon}"),
            });
        }
        f.write_str(&terms.join(" + "))
    }
}
