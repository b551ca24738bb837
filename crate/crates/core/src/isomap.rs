//! Weight-preserving isomorphisms F^n -> F[G]^t given by monomial matrices.
//!
//! A monomial `A` with `A [s]_mu = [rho'(s)]_eta A` for every generator `s`
//! gives the module isomorphism `v -> A v` onto `t` copies of the regular
//! module, and monomial matrices preserve Hamming weight.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::GroupTable;
use crate::linalg::Matrix;

/// The regular module `F[G]^t` in the basis `eta`: copy `c`, group element
/// `h` (table order) sits at coordinate `c |G| + h`.
#[derive(Clone, Debug)]
pub struct RegularBasisRep {
    pub t: usize,
    pub order: usize,
    /// `[rho'(s)]_eta` for each generator, in generator order.
    pub rep_matrices: Vec<Matrix>,
    /// `perms[s][k]` = image coordinate of basis vector `k` under generator `s`.
    perms: Vec<Vec<usize>>,
}

impl RegularBasisRep {
    pub fn new(group: &GroupTable) -> Result<Self> {
        let order = group.order();
        let n = group.degree();
        if !n.is_multiple_of(order) {
            return Err(Error::BadT { order, n });
        }
        let t = n / order;
        let perms: Vec<Vec<usize>> = group
            .gen_indices()
            .iter()
            .map(|&s| (0..n).map(|k| (k / order) * order + group.mul(s, k % order)).collect())
            .collect();
        let rep_matrices = perms.iter().map(|p| perm_matrix(p)).collect();
        Ok(RegularBasisRep { t, order, rep_matrices, perms })
    }

    /// `[rho'(g)]_eta` for an arbitrary group element.
    pub fn element_matrix(&self, group: &GroupTable, g: usize) -> Matrix {
        let n = self.t * self.order;
        let p: Vec<usize> = (0..n).map(|k| (k / self.order) * self.order + group.mul(g, k % self.order)).collect();
        perm_matrix(&p)
    }
}

/// Column `k` has a one in row `p[k]`.
fn perm_matrix(p: &[usize]) -> Matrix {
    Matrix::from_fn(p.len(), p.len(), |i, j| if p[j] == i { FieldElement::ONE } else { FieldElement::ZERO })
}

/// `(row, value)` of the single nonzero entry of each column, if `a` is
/// monomial.
fn monomial_columns(a: &Matrix) -> Option<Vec<(usize, FieldElement)>> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut row_used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&i| !a.get(i, j).is_zero()).collect();
        if nz.len() != 1 || row_used[nz[0]] {
            return None;
        }
        row_used[nz[0]] = true;
        out.push((nz[0], a.get(nz[0], j)));
    }
    Some(out)
}

pub fn is_monomial(a: &Matrix) -> bool {
    monomial_columns(a).is_some()
}

/// Whether `A [s]_mu = [rho'(s)]_eta A` for every generator `s`.
pub fn check_weight_iso(group: &GroupTable, a: &Matrix, rep: &RegularBasisRep) -> Result<bool> {
    let ctx = group.field();
    let n = group.degree();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimMismatch { expected: n, got: a.rows() });
    }
    if !is_monomial(a) {
        return Err(Error::NotMonomial);
    }
    for (k, &s) in group.gen_indices().iter().enumerate() {
        let lhs = a.mul(ctx, group.element(s))?;
        let rhs = rep.rep_matrices[k].mul(ctx, a)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of [`search_weight_iso`] when no budget interruption occurred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Matrix),
    /// The search space was exhausted: no weight-preserving isomorphism.
    None,
}

struct Search<'a> {
    ctx: &'a FieldCtx,
    n: usize,
    /// per generator: `sigma[i]` and `r[i]` with `M_s e_i = r_i e_{sigma(i)}`
    sigma: Vec<Vec<usize>>,
    r: Vec<Vec<FieldElement>>,
    pi: &'a [Vec<usize>],
    pi_inv: Vec<Vec<usize>>,
    tau: Vec<Option<usize>>,
    c: Vec<FieldElement>,
    row_used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Sets `tau(i) = row`, `c_i = scalar` and propagates along the generator
    /// relations. Returns the coordinates assigned, or `None` on conflict
    /// (with the partial assignment undone).
    fn assign(&mut self, i: usize, row: usize, scalar: FieldElement) -> Option<Vec<usize>> {
        let mut assigned = Vec::new();
        let mut stack = vec![(i, row, scalar)];
        let mut ok = true;
        while let Some((i, row, scalar)) = stack.pop() {
            match self.tau[i] {
                Some(existing) => {
                    if existing != row || self.c[i] != scalar {
                        ok = false;
                        break;
                    }
                    continue;
                }
                None => {
                    if self.row_used[row] {
                        ok = false;
                        break;
                    }
                }
            }
            self.tau[i] = Some(row);
            self.c[i] = scalar;
            self.row_used[row] = true;
            assigned.push(i);
            for s in 0..self.sigma.len() {
                // tau(sigma(i)) = pi(tau(i)),  c_{sigma(i)} = c_i / r_i
                let j = self.sigma[s][i];
                let cj = self.ctx.div(scalar, self.r[s][i]).expect("monomial entries are nonzero");
                stack.push((j, self.pi[s][row], cj));
            }
            for s in 0..self.sigma.len() {
                // i = sigma(k):  tau(k) = pi^-1(tau(i)),  c_k = r_k c_i
                let k = self.sigma[s].iter().position(|&x| x == i).unwrap();
                let ck = self.ctx.mul(self.r[s][k], scalar);
                stack.push((k, self.pi_inv[s][row], ck));
            }
        }
        if ok {
            Some(assigned)
        } else {
            for &k in &assigned {
                self.row_used[self.tau[k].unwrap()] = false;
                self.tau[k] = None;
            }
            None
        }
    }

    fn undo(&mut self, assigned: &[usize]) {
        for &k in assigned {
            self.row_used[self.tau[k].unwrap()] = false;
            self.tau[k] = None;
        }
    }

    fn run(&mut self) -> Result<bool> {
        let Some(i) = (0..self.n).find(|&i| self.tau[i].is_none()) else {
            return Ok(true);
        };
        let units: Vec<FieldElement> = self.ctx.elements().filter(|x| !x.is_zero()).collect();
        for row in 0..self.n {
            if self.row_used[row] {
                continue;
            }
            for &scalar in &units {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                if let Some(assigned) = self.assign(i, row, scalar) {
                    if self.run()? {
                        return Ok(true);
                    }
                    self.undo(&assigned);
                }
            }
        }
        Ok(false)
    }
}

/// Backtracking search for a monomial `A` passing [`check_weight_iso`].
/// Coordinates are assigned in increasing order; each choice of row and
/// scalar is propagated through the generator relations before branching.
pub fn search_weight_iso(group: &GroupTable, rep: &RegularBasisRep, budget: u64) -> Result<SearchOutcome> {
    let ctx = group.field();
    let n = group.degree();
    let mut sigma = Vec::new();
    let mut r = Vec::new();
    for &s in group.gen_indices() {
        // A [s] = [rho'(s)] A forces [s] = A^-1 (perm) A to be monomial
        let Some(cols) = monomial_columns(group.element(s)) else {
            return Ok(SearchOutcome::None);
        };
        sigma.push(cols.iter().map(|&(row, _)| row).collect::<Vec<_>>());
        r.push(cols.iter().map(|&(_, v)| v).collect::<Vec<_>>());
    }
    let pi_inv = rep
        .perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (k, &pk) in p.iter().enumerate() {
                inv[pk] = k;
            }
            inv
        })
        .collect();
    let mut search = Search {
        ctx,
        n,
        sigma,
        r,
        pi: &rep.perms,
        pi_inv,
        tau: vec![None; n],
        c: vec![FieldElement::ZERO; n],
        row_used: vec![false; n],
        nodes: 0,
        budget,
    };
    if !search.run()? {
        return Ok(SearchOutcome::None);
    }
    let a = Matrix::from_fn(n, n, |i, j| if search.tau[j] == Some(i) { search.c[j] } else { FieldElement::ZERO });
    debug_assert!(check_weight_iso(group, &a, rep)?);
    Ok(SearchOutcome::Found(a))
}
