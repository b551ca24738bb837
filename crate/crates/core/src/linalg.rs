//! Dense matrices and subspaces over GF(q).
//!
//! A [`Submodule`] is stored by its strict reduced row echelon basis, which
//! makes subspace equality a plain comparison of entries.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

pub type Vector = Vec<FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElement::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Row-major entries; doubles as the canonical hashing key.
    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                axpy(ctx, dst, a, orow);
            }
        }
        Ok(out)
    }

    /// `self * v` with `v` a column vector.
    pub fn mul_vec(&self, ctx: &FieldCtx, v: &[FieldElement]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(ctx, self.row(i), v)).collect())
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| ctx.add(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElement) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| ctx.mul(c, a)).collect() }
    }

    /// In-place accumulate `self += c * other`.
    pub fn add_scaled(&mut self, ctx: &FieldCtx, c: FieldElement, other: &Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if !c.is_zero() {
            axpy(ctx, &mut self.data, c, &other.data);
        }
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        rref(ctx, self).1
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }
}

/// `dst += c * src`
#[inline]
pub fn axpy(ctx: &FieldCtx, dst: &mut [FieldElement], c: FieldElement, src: &[FieldElement]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = ctx.add(*d, ctx.mul(c, s));
        }
    }
}

#[inline]
pub fn dot(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

pub fn vec_add(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| ctx.add(x, y)).collect()
}

pub fn vec_scale(ctx: &FieldCtx, c: FieldElement, a: &[FieldElement]) -> Vector {
    a.iter().map(|&x| ctx.mul(c, x)).collect()
}

pub fn is_zero_vec(v: &[FieldElement]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn hamming_weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Reduces `m` in place to strict RREF (monic pivots, zero above and below)
/// and returns the pivot columns. Zero rows end up at the bottom.
fn rref_in_place(ctx: &FieldCtx, m: &mut Matrix) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                m.data.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = ctx.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in c..cols {
            let v = m.get(r, j);
            m.set(r, j, ctx.mul(inv, v));
        }
        let pivot_row: Vector = m.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c);
            if f.is_zero() {
                continue;
            }
            let nf = ctx.neg(f);
            let dst = &mut m.data[i * cols + c..(i + 1) * cols];
            axpy(ctx, dst, nf, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Strict reduced row echelon form with zero rows removed, plus the rank.
pub fn rref(ctx: &FieldCtx, m: &Matrix) -> (Matrix, usize) {
    let mut work = m.clone();
    let pivots = rref_in_place(ctx, &mut work);
    let rank = pivots.len();
    work.data.truncate(rank * work.cols);
    work.rows = rank;
    (work, rank)
}

/// A subspace of F^n stored by its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Submodule {
    pub fn zero(n: usize) -> Self {
        Submodule { basis: Matrix::zero(0, n), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Submodule { basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    /// Row space of `m`.
    pub fn from_matrix(ctx: &FieldCtx, m: &Matrix) -> Self {
        let mut work = m.clone();
        let pivots = rref_in_place(ctx, &mut work);
        work.data.truncate(pivots.len() * work.cols);
        work.rows = pivots.len();
        Submodule { basis: work, pivots }
    }

    pub fn span<I, V>(ctx: &FieldCtx, n: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[FieldElement]>,
    {
        let mut data = Vec::new();
        let mut rows = 0;
        for v in vectors {
            let v = v.as_ref();
            if v.len() != n {
                return Err(Error::DimMismatch { expected: n, got: v.len() });
            }
            data.extend_from_slice(v);
            rows += 1;
        }
        Ok(Self::from_matrix(ctx, &Matrix { rows, cols: n, data }))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.basis.row_iter()
    }

    fn check_len(&self, v: &[FieldElement]) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimMismatch { expected: self.ambient_dim(), got: v.len() });
        }
        Ok(())
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, ctx: &FieldCtx, v: &[FieldElement]) -> Result<Option<Vector>> {
        self.check_len(v)?;
        let coords: Vector = self.pivots.iter().map(|&p| v[p]).collect();
        let mut residue = v.to_vec();
        for (row, &c) in self.basis.row_iter().zip(&coords) {
            if !c.is_zero() {
                axpy(ctx, &mut residue, ctx.neg(c), row);
            }
        }
        Ok(is_zero_vec(&residue).then_some(coords))
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[FieldElement]) -> Result<bool> {
        Ok(self.coordinates(ctx, v)?.is_some())
    }

    pub fn contains_submodule(&self, ctx: &FieldCtx, other: &Submodule) -> Result<bool> {
        for r in other.rows() {
            if !self.contains(ctx, r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, ctx: &FieldCtx, other: &Submodule) -> Result<Submodule> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimMismatch { expected: self.ambient_dim(), got: other.ambient_dim() });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut data = self.basis.data.clone();
        data.extend_from_slice(&other.basis.data);
        let m = Matrix { rows: self.dim() + other.dim(), cols: self.ambient_dim(), data };
        Ok(Submodule::from_matrix(ctx, &m))
    }

    pub fn intersection(&self, ctx: &FieldCtx, other: &Submodule) -> Result<Submodule> {
        let n = self.ambient_dim();
        if n != other.ambient_dim() {
            return Err(Error::DimMismatch { expected: n, got: other.ambient_dim() });
        }
        let (a, b) = (self.dim(), other.dim());
        // (x, y) with x*S + y*T = 0  <=>  [S; T]^T (x, y)^T = 0
        let mut stacked = self.basis.data.clone();
        stacked.extend_from_slice(&other.basis.data);
        let m = Matrix { rows: a + b, cols: n, data: stacked };
        let k = kernel(ctx, &m.transpose());
        let vecs: Vec<Vector> = k
            .rows()
            .map(|c| {
                let mut v = vec![FieldElement::ZERO; n];
                for (i, &ci) in c[..a].iter().enumerate() {
                    axpy(ctx, &mut v, ci, self.basis.row(i));
                }
                v
            })
            .collect();
        Submodule::span(ctx, n, vecs)
    }

    /// Number of vectors, `q^dim`, or `None` on overflow.
    pub fn size(&self, ctx: &FieldCtx) -> Option<u128> {
        (ctx.q() as u128).checked_pow(self.dim() as u32)
    }

    /// All vectors of the subspace in lexicographic order of their entries.
    pub fn vectors<'a>(&'a self, ctx: &'a FieldCtx) -> SubspaceVectors<'a> {
        SubspaceVectors {
            ctx,
            basis: &self.basis,
            digits: vec![0; self.dim()],
            current: vec![FieldElement::ZERO; self.ambient_dim()],
            done: false,
        }
    }

    /// `sum_i coords[i] * basis_row[i]`
    pub fn combine(&self, ctx: &FieldCtx, coords: &[FieldElement]) -> Vector {
        let mut v = vec![FieldElement::ZERO; self.ambient_dim()];
        for (row, &c) in self.basis.row_iter().zip(coords) {
            axpy(ctx, &mut v, c, row);
        }
        v
    }
}

/// Iterator over every vector of a subspace; see [`Submodule::vectors`].
///
/// Coordinates over the RREF basis are enumerated with the first coordinate
/// most significant. Because the entry at each pivot column equals the
/// coordinate, this is also lexicographic order on the vectors themselves.
pub struct SubspaceVectors<'a> {
    ctx: &'a FieldCtx,
    basis: &'a Matrix,
    digits: Vec<u32>,
    current: Vector,
    done: bool,
}

impl Iterator for SubspaceVectors<'_> {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let q = self.ctx.q();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            let old = self.ctx.elem(self.digits[i]).unwrap();
            let new_digit = (self.digits[i] + 1) % q;
            let new = self.ctx.elem(new_digit).unwrap();
            self.digits[i] = new_digit;
            let delta = self.ctx.sub(new, old);
            axpy(self.ctx, &mut self.current, delta, self.basis.row(i));
            if new_digit != 0 {
                break;
            }
        }
        Some(out)
    }
}

/// Column space of `a`, as a subspace of F^rows.
pub fn image(ctx: &FieldCtx, a: &Matrix) -> Submodule {
    Submodule::from_matrix(ctx, &a.transpose())
}

/// `{x : a x = 0}`, as a subspace of F^cols.
pub fn kernel(ctx: &FieldCtx, a: &Matrix) -> Submodule {
    let mut work = a.clone();
    let pivots = rref_in_place(ctx, &mut work);
    let n = a.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vector> = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![FieldElement::ZERO; n];
            v[free] = FieldElement::ONE;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = ctx.neg(work.get(r, free));
            }
            v
        })
        .collect();
    Submodule::span(ctx, n, vecs).expect("kernel vectors have length cols")
}

/// Vectors over prime fields with p <= 10 print as digit strings
/// (`140442324`); other fields use comma-separated bracketed entries.
pub fn format_vector(ctx: &FieldCtx, v: &[FieldElement]) -> String {
    if ctx.is_prime_field() && ctx.p() <= 10 {
        v.iter().map(|x| char::from_digit(x.value(), 10).unwrap()).collect()
    } else {
        v.iter().map(|&x| ctx.format_elem(x)).collect::<Vec<_>>().join(if ctx.is_prime_field() { "," } else { "" })
    }
}

/// Inverse of [`format_vector`].
pub fn parse_vector(ctx: &FieldCtx, s: &str) -> Result<Vector> {
    let s = s.trim();
    let bad = |m: &str| Error::input(format!("vector {s:?}"), m.to_string());
    if ctx.is_prime_field() && ctx.p() <= 10 {
        s.chars().map(|c| c.to_digit(10).ok_or_else(|| bad("not a digit")).and_then(|d| ctx.elem(d))).collect()
    } else if ctx.is_prime_field() {
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad("not an integer")).and_then(|d| ctx.elem(d)))
            .collect()
    } else {
        let mut out = Vec::new();
        for chunk in s.split(')').filter(|c| !c.trim().is_empty()) {
            let inner = chunk.trim().strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let coeffs = inner
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad("not an integer")))
                .collect::<Result<Vec<u32>>>()?;
            out.push(ctx.from_coeffs(&coeffs)?);
        }
        Ok(out)
    }
}

pub struct DisplayVector<'a>(pub &'a FieldCtx, pub &'a [FieldElement]);

impl fmt::Display for DisplayVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(self.0, self.1))
    }
}
