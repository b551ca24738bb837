//! The sum-of-simples algorithm: every submodule of a homogeneous component,
//! each exactly once, as a sum of simples indexed by a subset.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::gaussian::BinomTable;
use crate::linalg::Submodule;
use crate::modaction::ComponentData;

/// A submodule of the component together with the index set of the simples
/// whose (direct) sum it is. The zero module has the empty index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumEntry {
    pub indices: Vec<usize>,
    pub module: Submodule,
}

#[derive(Clone, Debug)]
pub struct SumOutput {
    /// The simples (in input order), then the zero module, then one entry
    /// per non-singleton member of `z` in processing order.
    pub f: Vec<SumEntry>,
    /// Index sets, singletons first, then in processing order.
    pub z: Vec<Vec<usize>>,
    /// Discarded index sets, sorted.
    pub x: Vec<Vec<usize>>,
}

impl SumOutput {
    /// Members of `z` with exactly `k` indices.
    pub fn z_of_size(&self, k: usize) -> Vec<&[usize]> {
        self.z.iter().filter(|y| y.len() == k).map(|y| y.as_slice()).collect()
    }
}

/// Lexicographic successor of a sorted k-subset of `0..r`.
fn next_subset(y: &mut [usize], r: usize) -> bool {
    let k = y.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if y[i] < r - k + i {
            y[i] += 1;
            for j in i + 1..k {
                y[j] = y[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All `j`-subsets of `pool` (sorted), each returned sorted.
fn subsets_of(pool: &[usize], j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if j > pool.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..j).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        if !next_subset(&mut idx, pool.len()) {
            break;
        }
    }
    out
}

/// Runs the algorithm on `simples` (all simple submodules of one
/// homogeneous component of multiplicity `n`). `binoms[k]` must equal
/// `binom(kI, I)_q` for `k <= n`; it is only read when `early_exit` is set.
#[allow(clippy::needless_range_loop)]
pub fn sum_of_simples(
    ctx: &FieldCtx,
    simples: &[Submodule],
    n: usize,
    binoms: &[BigUint],
    early_exit: bool,
) -> Result<SumOutput> {
    let r = simples.len();
    let d = simples.first().map_or(0, |s| s.dim());
    let ambient = simples.first().map_or(0, |s| s.ambient_dim());
    if let Some(bad) = simples.iter().position(|s| s.dim() != d || s.dim() == 0) {
        return Err(Error::InconsistentInput(format!(
            "simple {bad} has dimension {}, expected {d}",
            simples[bad].dim()
        )));
    }
    if early_exit && binoms.len() <= n.min(r) {
        return Err(Error::InconsistentInput(format!("binomial table shorter than multiplicity {n}")));
    }

    let mut seen: HashSet<Submodule> = HashSet::new();
    let mut f = Vec::with_capacity(r + 1);
    let mut z: Vec<Vec<usize>> = Vec::new();
    for (i, s) in simples.iter().enumerate() {
        if !seen.insert(s.clone()) {
            return Err(Error::InconsistentInput(format!("simple {i} is listed twice")));
        }
        f.push(SumEntry { indices: vec![i], module: s.clone() });
        z.push(vec![i]);
    }
    f.push(SumEntry { indices: Vec::new(), module: Submodule::zero(ambient) });
    seen.insert(Submodule::zero(ambient));

    let mut in_z: HashSet<Vec<usize>> = z.iter().cloned().collect();
    let mut x: HashSet<Vec<usize>> = HashSet::new();

    for k in 2..=n.min(r) {
        let mut y: Vec<usize> = (0..k).collect();
        loop {
            if !x.contains(&y) {
                let sum = y.iter().try_fold(Submodule::zero(ambient), |acc, &j| acc.sum(ctx, &simples[j]))?;
                if sum.dim() != k * d {
                    return Err(Error::InconsistentInput(format!("sum over {y:?} is not direct")));
                }
                if !seen.insert(sum.clone()) {
                    return Err(Error::InconsistentInput(format!("sum over {y:?} was already produced")));
                }
                z.push(y.clone());
                in_z.insert(y.clone());
                f.push(SumEntry { indices: y.clone(), module: sum.clone() });

                let limit = early_exit.then(|| &binoms[k] - BigUint::from(k));
                let mut r_y = Vec::new();
                let mut count = 0u64;
                for t in (0..r).filter(|t| !y.contains(t)) {
                    if let Some(limit) = &limit {
                        if BigUint::from(count) >= *limit {
                            break;
                        }
                    }
                    if sum.contains_submodule(ctx, &simples[t])? {
                        r_y.push(t);
                        count += 1;
                    }
                }

                let mut pool: Vec<usize> = r_y.into_iter().chain(y.iter().copied()).collect();
                pool.sort_unstable();
                for j in k..=pool.len().min(n) {
                    for u in subsets_of(&pool, j) {
                        if !in_z.contains(&u) {
                            x.insert(u);
                        }
                    }
                }
            }
            if !next_subset(&mut y, r) {
                break;
            }
        }
    }

    let mut x: Vec<Vec<usize>> = x.into_iter().collect();
    x.sort();
    Ok(SumOutput { f, z, x })
}

/// Runs the algorithm on a component, checking that every simple lies in it.
pub fn sum_component(ctx: &FieldCtx, comp: &ComponentData, table: &BinomTable) -> Result<SumOutput> {
    let modules: Vec<Submodule> = comp.simples.iter().map(|s| s.module.clone()).collect();
    for (i, m) in modules.iter().enumerate() {
        if m.dim() != comp.simple_dim || !comp.component.contains_submodule(ctx, m)? {
            return Err(Error::InconsistentInput(format!("simple {i} is not a simple of the component")));
        }
    }
    sum_of_simples(ctx, &modules, comp.mult_in_m, &table.b, true)
}
