//! The group algebra A = F[G] of a [`GroupTable`].
//!
//! Central primitive idempotents are computed by splitting the center: pick
//! a random element `z` of a block center `eZ`, factor the minimal polynomial
//! of multiplication by `z`, and lift the coprime factors to orthogonal
//! idempotents. A block is final once some `z` has an irreducible minimal
//! polynomial of degree `dim eZ`, i.e. `eZ` is a field.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::GroupTable;
use crate::linalg::{axpy, is_zero_vec, Matrix, Submodule, Vector};
use crate::poly::{min_poly, Poly};

/// Coefficients indexed by the element order of the group table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// wt_G: the size of the support.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentKind {
    CentralPrimitive,
    UserSupplied,
}

#[derive(Clone, Debug)]
pub struct IdempotentSet {
    pub idems: Vec<AlgebraElement>,
    pub kind: IdempotentKind,
}

/// Outcome of [`Algebra::verify_basic_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSetReport {
    pub idempotent: Vec<bool>,
    pub central: Vec<bool>,
    /// Pairs `(i, j)`, `i < j`, with `e_i e_j != 0` or `e_j e_i != 0`.
    pub non_orthogonal: Vec<(usize, usize)>,
    pub sums_to_one: bool,
    /// Pairs `(i, j)` with `e_i A e_j != 0`, so `A e_i` and `A e_j` are isomorphic.
    pub isomorphic_pairs: Vec<(usize, usize)>,
    /// `dim_F(A e_i)`.
    pub ideal_dims: Vec<usize>,
}

impl BasicSetReport {
    /// Idempotent and pairwise orthogonal.
    pub fn is_orthogonal_set(&self) -> bool {
        self.idempotent.iter().all(|&b| b) && self.non_orthogonal.is_empty()
    }

    /// Orthogonal idempotents generating pairwise non-isomorphic ideals.
    pub fn is_basic(&self) -> bool {
        self.is_orthogonal_set() && self.isomorphic_pairs.is_empty()
    }
}

/// Cap on random draws per block; unreachable in practice (each draw splits or
/// certifies with probability bounded away from zero).
const MAX_SPLIT_ATTEMPTS: usize = 100_000;

#[derive(Clone, Copy)]
pub struct Algebra<'g> {
    group: &'g GroupTable,
}

impl<'g> Algebra<'g> {
    pub fn new(group: &'g GroupTable) -> Self {
        Algebra { group }
    }

    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    fn ctx(&self) -> &'g FieldCtx {
        self.group.field()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { coeffs: vec![FieldElement::ZERO; self.dim()] }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        let mut a = self.zero();
        a.coeffs[g] = FieldElement::ONE;
        a
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElement>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimMismatch { expected: self.dim(), got: coeffs.len() });
        }
        Ok(AlgebraElement { coeffs })
    }

    /// `sum coeff * word`, each word a list of generator indices composed
    /// left to right (`[]` is the identity).
    pub fn from_terms(&self, terms: &[(FieldElement, Vec<usize>)]) -> Result<AlgebraElement> {
        let ctx = self.ctx();
        let mut a = self.zero();
        for (c, w) in terms {
            let g = self.group.word_element(w)?;
            a.coeffs[g] = ctx.add(a.coeffs[g], *c);
        }
        Ok(a)
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let ctx = self.ctx();
        AlgebraElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| ctx.add(x, y)).collect() }
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let ctx = self.ctx();
        AlgebraElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| ctx.sub(x, y)).collect() }
    }

    pub fn scale(&self, c: FieldElement, a: &AlgebraElement) -> AlgebraElement {
        let ctx = self.ctx();
        AlgebraElement { coeffs: a.coeffs.iter().map(|&x| ctx.mul(c, x)).collect() }
    }

    /// Convolution product through the group multiplication.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let ctx = self.ctx();
        let mut out = self.zero();
        for (g, &ag) in a.coeffs.iter().enumerate() {
            if ag.is_zero() {
                continue;
            }
            for (h, &bh) in b.coeffs.iter().enumerate() {
                if bh.is_zero() {
                    continue;
                }
                let gh = self.group.mul(g, h);
                out.coeffs[gh] = ctx.add(out.coeffs[gh], ctx.mul(ag, bh));
            }
        }
        out
    }

    pub fn is_idempotent(&self, e: &AlgebraElement) -> bool {
        self.mul(e, e) == *e
    }

    /// Commutes with every generator, hence with all of A.
    pub fn is_central(&self, a: &AlgebraElement) -> bool {
        self.group.gen_indices().iter().all(|&s| {
            let g = self.basis_element(s);
            self.mul(&g, a) == self.mul(a, &g)
        })
    }

    /// Matrix of left multiplication by `a`; column j holds `a * g_j`.
    pub fn regular_rep(&self, a: &AlgebraElement) -> Matrix {
        let order = self.dim();
        let mut m = Matrix::zero(order, order);
        for (g, &ag) in a.coeffs.iter().enumerate() {
            if ag.is_zero() {
                continue;
            }
            for j in 0..order {
                let row = self.group.mul(g, j);
                let v = self.ctx().add(m.get(row, j), ag);
                m.set(row, j, v);
            }
        }
        m
    }

    /// `dim_F(A a)`.
    pub fn ideal_dim(&self, a: &AlgebraElement) -> usize {
        self.regular_rep(a).rank(self.ctx())
    }

    /// An F-basis of `A e` chosen greedily from `g e` in group order.
    pub fn ideal_basis(&self, e: &AlgebraElement) -> Vec<AlgebraElement> {
        let ctx = self.ctx();
        let order = self.dim();
        let mut span = Submodule::zero(order);
        let mut out = Vec::new();
        for g in 0..order {
            let ge = self.mul(&self.basis_element(g), e);
            if !span.contains(ctx, &ge.coeffs).unwrap() {
                span = span.sum(ctx, &Submodule::span(ctx, order, [&ge.coeffs]).unwrap()).unwrap();
                out.push(ge);
            }
        }
        out
    }

    /// The n x n matrix `sum a_g M_g` by which `a` acts on F^n.
    pub fn action_matrix(&self, a: &AlgebraElement) -> Matrix {
        let n = self.group.degree();
        let mut m = Matrix::zero(n, n);
        for (g, &ag) in a.coeffs.iter().enumerate() {
            m.add_scaled(self.ctx(), ag, self.group.element(g));
        }
        m
    }

    /// `a . v = sum a_g g(v)`.
    pub fn evaluate(&self, a: &AlgebraElement, v: &[FieldElement]) -> Result<Vector> {
        let n = self.group.degree();
        if v.len() != n {
            return Err(Error::DimMismatch { expected: n, got: v.len() });
        }
        let ctx = self.ctx();
        let mut out = vec![FieldElement::ZERO; n];
        for (g, &ag) in a.coeffs.iter().enumerate() {
            if !ag.is_zero() {
                let gv = self.group.act(g, v)?;
                axpy(ctx, &mut out, ag, &gv);
            }
        }
        Ok(out)
    }

    pub fn class_sums(&self) -> Vec<AlgebraElement> {
        self.group
            .conjugacy_classes()
            .into_iter()
            .map(|class| {
                let mut a = self.zero();
                for g in class {
                    a.coeffs[g] = FieldElement::ONE;
                }
                a
            })
            .collect()
    }

    /// A complete set of central primitive idempotents, sorted by coefficient
    /// vector so the result does not depend on the random draws.
    pub fn central_primitive_idempotents<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<IdempotentSet> {
        let ctx = self.ctx();
        if !self.group.is_semisimple() {
            return Err(Error::NotSemisimple { order: self.group.order(), p: ctx.p() });
        }
        let class_sums = self.class_sums();
        let mut pending = vec![self.one()];
        let mut done = Vec::new();
        while let Some(e) = pending.pop() {
            let center = Submodule::span(ctx, self.dim(), class_sums.iter().map(|c| self.mul(&e, c).coeffs))?;
            match self.split_block(&e, &center, rng)? {
                None => done.push(e),
                Some(parts) => pending.extend(parts),
            }
        }
        done.sort();
        Ok(IdempotentSet { idems: done, kind: IdempotentKind::CentralPrimitive })
    }

    /// Either certifies that `center` (= eZ) is a field (returns `None`) or
    /// splits `e` into at least two orthogonal central idempotents.
    fn split_block<R: Rng + ?Sized>(
        &self,
        e: &AlgebraElement,
        center: &Submodule,
        rng: &mut R,
    ) -> Result<Option<Vec<AlgebraElement>>> {
        let ctx = self.ctx();
        let d = center.dim();
        for _ in 0..MAX_SPLIT_ATTEMPTS {
            let coords: Vector = (0..d).map(|_| ctx.elem(rng.gen_range(0..ctx.q())).unwrap()).collect();
            let z = AlgebraElement { coeffs: center.combine(ctx, &coords) };
            let mult = self.multiplication_matrix(&z, center)?;
            let m = min_poly(ctx, &mult)?;
            let factors = m.factor(ctx, rng);
            if factors.len() == 1 {
                let (f, k) = &factors[0];
                if *k == 1 && f.degree() == Some(d) {
                    return Ok(None);
                }
                continue;
            }
            // lift the coprime prime-power parts of m to idempotents
            let parts: Vec<Poly> =
                factors.iter().map(|(f, k)| (0..*k).fold(Poly::one(), |acc, _| acc.mul(ctx, f))).collect();
            let mut idems = Vec::with_capacity(parts.len());
            for part in &parts {
                let cofactor = m.div_rem(ctx, part)?.0;
                let (g, s, _) = cofactor.ext_gcd(ctx, part);
                debug_assert!(g.is_one());
                let interp = s.mul(ctx, &cofactor).rem(ctx, &m)?;
                idems.push(self.eval_poly(&interp, &z, e));
            }
            return Ok(Some(idems));
        }
        Err(Error::InconsistentInput("center splitting did not converge".into()))
    }

    /// Matrix of `x -> z x` on the subspace `center`, in its RREF basis.
    fn multiplication_matrix(&self, z: &AlgebraElement, center: &Submodule) -> Result<Matrix> {
        let ctx = self.ctx();
        let d = center.dim();
        let mut m = Matrix::zero(d, d);
        for (j, b) in center.rows().enumerate() {
            let zb = self.mul(z, &AlgebraElement { coeffs: b.to_vec() });
            let coords = center
                .coordinates(ctx, &zb.coeffs)?
                .ok_or_else(|| Error::InconsistentInput("block center not closed under multiplication".into()))?;
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// `p(z)` inside the block with identity `unit`.
    fn eval_poly(&self, p: &Poly, z: &AlgebraElement, unit: &AlgebraElement) -> AlgebraElement {
        let mut acc = self.zero();
        for &c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, z);
            acc = self.add(&acc, &self.scale(c, unit));
        }
        acc
    }

    /// Checks idempotence, orthogonality, centrality, completeness and which
    /// pairs generate isomorphic ideals (`e_i A e_j != 0`).
    pub fn verify_basic_set(&self, idems: &[AlgebraElement]) -> BasicSetReport {
        let k = idems.len();
        let idempotent = idems.iter().map(|e| self.is_idempotent(e)).collect();
        let central = idems.iter().map(|e| self.is_central(e)).collect();
        let mut non_orthogonal = Vec::new();
        let mut isomorphic_pairs = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if !self.mul(&idems[i], &idems[j]).is_zero() || !self.mul(&idems[j], &idems[i]).is_zero() {
                    non_orthogonal.push((i, j));
                }
                let linked = (0..self.dim()).any(|g| {
                    let eg = self.mul(&idems[i], &self.basis_element(g));
                    !self.mul(&eg, &idems[j]).is_zero()
                });
                if linked {
                    isomorphic_pairs.push((i, j));
                }
            }
        }
        let total = idems.iter().fold(self.zero(), |acc, e| self.add(&acc, e));
        BasicSetReport {
            idempotent,
            central,
            non_orthogonal,
            sums_to_one: total == self.one(),
            isomorphic_pairs,
            ideal_dims: idems.iter().map(|e| self.ideal_dim(e)).collect(),
        }
    }

    /// Human-readable form, e.g. `2 + 3*g0*g0 + 2*g1`, using each element's
    /// generator word.
    pub fn format(&self, a: &AlgebraElement) -> String {
        let ctx = self.ctx();
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, &c)| {
                let word = self.group.word(g);
                let w: Vec<String> = word.iter().map(|s| format!("g{s}")).collect();
                match (word.is_empty(), c == FieldElement::ONE) {
                    (true, _) => ctx.format_elem(c),
                    (false, true) => w.join("*"),
                    (false, false) => format!("{}*{}", ctx.format_elem(c), w.join("*")),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
