//! Brute-force enumeration of all G-invariant codes of tiny instances, used
//! to cross-check the structured pipeline.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::Submodule;
use crate::modaction::cyclic_submodule;

pub const DEFAULT_ORACLE_CAP: u128 = 1 << 14;

/// Every F[G]-submodule of F^n, including 0 and F^n.
///
/// Cyclic submodules of all q^n vectors are collected, then the family is
/// closed under adding a cyclic submodule until nothing new appears. Every
/// submodule is a sum of cyclic ones, so the fixpoint is complete.
pub fn oracle_all_submodules(group: &GroupTable, cap: u128) -> Result<BTreeSet<Submodule>> {
    let ctx = group.field();
    let n = group.degree();
    let full = Submodule::full(n);
    let size = full.size(ctx).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::TooLarge { size, cap });
    }
    let mut cyclics: HashSet<Submodule> = HashSet::new();
    for v in full.vectors(ctx) {
        cyclics.insert(cyclic_submodule(group, &v)?);
    }
    let cyclics: Vec<Submodule> = cyclics.into_iter().collect();
    let mut all: HashSet<Submodule> = cyclics.iter().cloned().collect();
    let mut frontier: Vec<Submodule> = cyclics.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for c in &cyclics {
                if m.contains_submodule(ctx, c)? {
                    continue;
                }
                let s = m.sum(ctx, c)?;
                if all.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    Ok(all.into_iter().collect())
}

/// Invariance under every generator, tested on the basis rows.
pub fn oracle_check_invariant(c: &Submodule, group: &GroupTable) -> Result<bool> {
    for row in c.rows() {
        for &s in group.gen_indices() {
            if !c.contains(group.field(), &group.act(s, row)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
