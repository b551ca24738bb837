//! Gaussian binomial coefficients of semisimple modules and the counts of
//! invariant codes built from them.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::linalg::Submodule;
use crate::modaction::{ComponentData, Simple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomSource {
    ClosedForm,
    Enumerated,
}

/// `b[t]` = number of simples inside `t I`, for `t = 0..=n` (`b[0] = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomTable {
    pub b: Vec<BigUint>,
    pub source: BinomSource,
}

impl BinomTable {
    pub fn mult(&self) -> usize {
        self.b.len() - 1
    }

    /// `binom(n I, k I)_q` with `n` the table's multiplicity.
    pub fn binom(&self, k: usize) -> Result<BigUint> {
        binom_general(self.mult(), k, &self.b)
    }
}

/// `(q^{td} - 1)/(q^d - 1)`, valid when the simple has multiplicity one in A.
pub fn binom_simple_closed(t: usize, d: usize, q: u32, mult_in_a_is_one: bool) -> Result<BigUint> {
    if !mult_in_a_is_one {
        return Err(Error::MultNotOne);
    }
    if t == 0 {
        return Ok(BigUint::zero());
    }
    let qd = BigUint::from(q).pow(d as u32);
    let num = qd.pow(t as u32) - 1u32;
    Ok(num / (qd - 1u32))
}

/// Number of listed simples contained in the sum of the first `k`
/// independent simples (greedy by dimension growth).
pub fn binom_simple_enumerated(ctx: &FieldCtx, simples: &[Simple], k: usize) -> Result<BigUint> {
    if k == 0 {
        return Ok(BigUint::zero());
    }
    let n = simples.first().map_or(0, |s| s.module.ambient_dim());
    let mut sum = Submodule::zero(n);
    let mut used = 0;
    for s in simples {
        if used == k {
            break;
        }
        let next = sum.sum(ctx, &s.module)?;
        if next.dim() > sum.dim() {
            sum = next;
            used += 1;
        }
    }
    if used < k {
        return Err(Error::KTooLarge { k, n: used });
    }
    let mut count = 0u64;
    for s in simples {
        if sum.contains(ctx, &s.generator)? {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// `prod_{j<k} (b[n]-b[j]) / prod_{j<k} (b[k]-b[j])`; zero when `k > n`.
pub fn binom_general(n: usize, k: usize, b: &[BigUint]) -> Result<BigUint> {
    if k > n {
        return Ok(BigUint::zero());
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..k {
        num *= &b[n] - &b[j];
        den *= &b[k] - &b[j];
    }
    if (&num % &den) != BigUint::zero() {
        return Err(Error::InexactDivision);
    }
    Ok(num / den)
}

/// Product of `binom(n_j I_j, t_j I_j)` over the selection.
pub fn binom_product(selection: &[(usize, usize)], tables: &[BinomTable]) -> Result<BigUint> {
    let mut out = BigUint::one();
    for (&(n, t), table) in selection.iter().zip(tables) {
        out *= binom_general(n, t, &table.b)?;
    }
    Ok(out)
}

/// Builds the table for one component: closed form when `k_j = 1`,
/// enumeration over the simple list otherwise.
pub fn binom_table(ctx: &FieldCtx, comp: &ComponentData) -> Result<BinomTable> {
    let n = comp.mult_in_m;
    if comp.mult_in_a == 1 {
        let b = (0..=n).map(|t| binom_simple_closed(t, comp.simple_dim, ctx.q(), true)).collect::<Result<_>>()?;
        Ok(BinomTable { b, source: BinomSource::ClosedForm })
    } else {
        let b = (0..=n).map(|t| binom_simple_enumerated(ctx, &comp.simples, t)).collect::<Result<_>>()?;
        Ok(BinomTable { b, source: BinomSource::Enumerated })
    }
}

/// Number of submodules of `n I`: `sum_{t=1}^{n} binom(nI, tI) + 1`.
fn component_total(table: &BinomTable, upto: usize) -> Result<BigUint> {
    let mut s = BigUint::one();
    for t in 1..=upto {
        s += table.binom(t)?;
    }
    Ok(s)
}

/// All G-invariant codes: `prod_j (sum_{t=1}^{n_j} binom(n_j I_j, t I_j) + 1)`.
pub fn count_all_invariant(tables: &[BinomTable]) -> Result<BigUint> {
    let mut out = BigUint::one();
    for t in tables {
        out *= component_total(t, t.mult())?;
    }
    Ok(out)
}

/// Nonzero cyclic codes: with `l_j = min(n_j, k_j)`,
/// `prod_j (sum_{t=1}^{l_j} binom(n_j I_j, t I_j) + 1) - 1`.
pub fn count_one_generator(tables: &[BinomTable], mults_in_a: &[usize]) -> Result<BigUint> {
    let mut out = BigUint::one();
    for (t, &k) in tables.iter().zip(mults_in_a) {
        out *= component_total(t, t.mult().min(k))?;
    }
    Ok(out - 1u32)
}
