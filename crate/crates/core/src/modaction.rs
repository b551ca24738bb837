//! F^n as an F[G]-module: orbits, cyclic submodules, homogeneous components
//! and their simple submodules.

use std::collections::HashSet;

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::group::GroupTable;
use crate::linalg::{image, vec_scale, Submodule, Vector};

/// Default bound on the number of vectors scanned in one component.
pub const DEFAULT_SCAN_CAP: u128 = 1 << 24;

/// A simple submodule with its canonical generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simple {
    /// Lexicographically smallest vector among the minimal-size orbits inside
    /// the module.
    pub generator: Vector,
    pub module: Submodule,
}

#[derive(Clone, Debug)]
pub struct ComponentData {
    pub component: Submodule,
    pub central_idem: AlgebraElement,
    /// d = dim_F of the simple module
    pub simple_dim: usize,
    /// n_j: multiplicity of the simple in F^n
    pub mult_in_m: usize,
    /// k_j: multiplicity of the simple in A
    pub mult_in_a: usize,
    /// Sorted by generator.
    pub simples: Vec<Simple>,
}

/// Distinct images `g(v)` in group element order.
pub fn orbit(group: &GroupTable, v: &[FieldElement]) -> Result<Vec<Vector>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in 0..group.order() {
        let w = group.act(g, v)?;
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    Ok(out)
}

/// `A v`, the span of the orbit of `v`.
pub fn cyclic_submodule(group: &GroupTable, v: &[FieldElement]) -> Result<Submodule> {
    let images = (0..group.order()).map(|g| group.act(g, v)).collect::<Result<Vec<_>>>()?;
    Submodule::span(group.field(), group.degree(), images)
}

/// `f F^n` for central `f`.
pub fn homogeneous_component_central(alg: &Algebra, f: &AlgebraElement) -> Result<Submodule> {
    if !alg.is_central(f) {
        return Err(Error::NotCentral);
    }
    Ok(image(alg.group().field(), &alg.action_matrix(f)))
}

/// `sum_i A (e beta_i)` over the standard basis; `e` need not be central.
pub fn homogeneous_component_general(alg: &Algebra, e: &AlgebraElement) -> Result<Submodule> {
    if !alg.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let group = alg.group();
    let ctx = group.field();
    let n = group.degree();
    let mut h = Submodule::zero(n);
    for i in 0..n {
        let mut beta = vec![FieldElement::ZERO; n];
        beta[i] = FieldElement::ONE;
        let ev = alg.evaluate(e, &beta)?;
        if !h.contains(ctx, &ev)? {
            h = h.sum(ctx, &cyclic_submodule(group, &ev)?)?;
        }
    }
    Ok(h)
}

/// Whether the ideal generated by `f` divides F^n, i.e. `f F^n != 0`.
pub fn divides(alg: &Algebra, f: &AlgebraElement) -> bool {
    !alg.action_matrix(f).is_zero()
}

/// `A n <= A m`.
pub fn submodule_divides_check(group: &GroupTable, n: &[FieldElement], m: &[FieldElement]) -> Result<bool> {
    let am = cyclic_submodule(group, m)?;
    for w in orbit(group, n)? {
        if !am.contains(group.field(), &w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn multiplicity(h: &Submodule, d: usize) -> Result<usize> {
    exact_quotient(h.dim(), d)
}

pub fn mult_in_a(alg: &Algebra, e: &AlgebraElement, d: usize) -> Result<usize> {
    exact_quotient(alg.ideal_dim(e), d)
}

fn exact_quotient(num: usize, den: usize) -> Result<usize> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::NotDivisible { num, den });
    }
    Ok(num / den)
}

/// Lexicographic index of a vector of `h` (its coordinates, first most
/// significant, read in base q).
fn lex_index(group: &GroupTable, h: &Submodule, v: &[FieldElement]) -> usize {
    let q = group.field().q() as usize;
    h.pivots().iter().fold(0, |acc, &p| acc * q + v[p].value() as usize)
}

fn scan_size(group: &GroupTable, h: &Submodule, cap: u128) -> Result<usize> {
    let size = h.size(group.field()).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::ComponentTooLarge { size, cap });
    }
    Ok(size as usize)
}

/// Scans `h` once, one vector per (orbit x scalar) class, and returns the
/// minimal dimension of a nonzero cyclic submodule together with every
/// distinct cyclic submodule of that dimension.
fn minimal_cyclics(group: &GroupTable, h: &Submodule, cap: u128) -> Result<(usize, Vec<Submodule>)> {
    if h.is_zero() {
        return Err(Error::ZeroModule);
    }
    let ctx = group.field();
    let size = scan_size(group, h, cap)?;
    let units: Vec<FieldElement> = ctx.elements().filter(|c| !c.is_zero()).collect();
    let mut covered = vec![false; size];
    let mut best = usize::MAX;
    let mut found: Vec<Submodule> = Vec::new();
    let mut seen: HashSet<Submodule> = HashSet::new();
    for (idx, v) in h.vectors(ctx).enumerate().skip(1) {
        if covered[idx] {
            continue;
        }
        for w in orbit(group, &v)? {
            for &c in &units {
                covered[lex_index(group, h, &vec_scale(ctx, c, &w))] = true;
            }
        }
        let cyc = cyclic_submodule(group, &v)?;
        let d = cyc.dim();
        if d < best {
            best = d;
            found.clear();
            seen.clear();
        }
        if d == best && seen.insert(cyc.clone()) {
            found.push(cyc);
        }
    }
    Ok((best, found))
}

/// Minimal dimension of a nonzero cyclic submodule of `h`.
pub fn simple_dimension(group: &GroupTable, h: &Submodule, cap: u128) -> Result<usize> {
    Ok(minimal_cyclics(group, h, cap)?.0)
}

/// Canonical generator of a simple module: the lexicographically smallest
/// vector among its orbits of minimal size.
pub fn canonical_generator(group: &GroupTable, s: &Submodule) -> Result<Vector> {
    let mut best: Option<(usize, Vector)> = None;
    for v in s.vectors(group.field()).skip(1) {
        let size = orbit(group, &v)?.len();
        if best.as_ref().is_none_or(|(b, _)| size < *b) {
            best = Some((size, v));
        }
    }
    best.map(|(_, v)| v).ok_or(Error::ZeroModule)
}

/// Every simple submodule of the homogeneous component `h`, sorted by
/// canonical generator.
pub fn enumerate_simples(group: &GroupTable, h: &Submodule, d: usize, cap: u128) -> Result<Vec<Simple>> {
    let (best, found) = minimal_cyclics(group, h, cap)?;
    if best != d {
        return Err(Error::InconsistentInput(format!(
            "simple dimension {d} given, minimal cyclic dimension is {best}"
        )));
    }
    simples_from_modules(group, found)
}

fn simples_from_modules(group: &GroupTable, modules: Vec<Submodule>) -> Result<Vec<Simple>> {
    let mut simples = modules
        .into_iter()
        .map(|module| Ok(Simple { generator: canonical_generator(group, &module)?, module }))
        .collect::<Result<Vec<_>>>()?;
    simples.sort_by(|a, b| a.generator.cmp(&b.generator));
    Ok(simples)
}

/// Full analysis of the component cut out by a central idempotent.
/// Returns `None` when the idempotent does not divide F^n.
pub fn analyze_component(alg: &Algebra, e: &AlgebraElement, cap: u128) -> Result<Option<ComponentData>> {
    let group = alg.group();
    let component = homogeneous_component_central(alg, e)?;
    if component.is_zero() {
        return Ok(None);
    }
    let (d, found) = minimal_cyclics(group, &component, cap)?;
    let mult_in_m = multiplicity(&component, d)?;
    let mult_in_a = mult_in_a(alg, e, d)?;
    let simples = simples_from_modules(group, found)?;
    Ok(Some(ComponentData { component, central_idem: e.clone(), simple_dim: d, mult_in_m, mult_in_a, simples }))
}

/// Components of F^n for a complete set of central primitive idempotents,
/// in idempotent order, skipping blocks that act as zero.
pub fn decompose(alg: &Algebra, central: &[AlgebraElement], cap: u128) -> Result<Vec<ComponentData>> {
    let mut out = Vec::new();
    for e in central {
        if let Some(c) = analyze_component(alg, e, cap)? {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c3_gf2, s3_elem, s3_gf5, vecs};
    use crate::linalg::{format_vector, parse_vector};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn orbits() {
        let g = c3_gf2();
        let ctx = g.field();
        let p = |s| parse_vector(ctx, s).unwrap();
        assert_eq!(orbit(&g, &p("000000000")).unwrap().len(), 1);
        assert_eq!(orbit(&g, &p("100100000")).unwrap().len(), 3);
        assert_eq!(orbit(&g, &p("100100100")).unwrap().len(), 1);
    }

    #[test]
    fn cyclic_dimensions() {
        let g = c3_gf2();
        let ctx = g.field();
        assert!(cyclic_submodule(&g, &parse_vector(ctx, "000000000").unwrap()).unwrap().is_zero());
        assert_eq!(cyclic_submodule(&g, &parse_vector(ctx, "100100000").unwrap()).unwrap().dim(), 2);
        let s3 = s3_gf5();
        let v = parse_vector(s3.field(), "100000032").unwrap();
        assert_eq!(orbit(&s3, &v).unwrap().len(), 6);
        assert_eq!(cyclic_submodule(&s3, &v).unwrap().dim(), 4);
    }

    #[test]
    fn central_components_gf2() {
        let g = c3_gf2();
        let alg = Algebra::new(&g);
        let gamma = alg.basis_element(g.gen_indices()[0]);
        let f0 = alg.add(&gamma, &alg.one());
        let f1 = alg.add(&f0, &alg.mul(&gamma, &gamma));
        assert_eq!(homogeneous_component_central(&alg, &f0).unwrap().dim(), 6);
        assert_eq!(homogeneous_component_central(&alg, &f1).unwrap().dim(), 3);
        assert_eq!(homogeneous_component_central(&alg, &alg.one()).unwrap(), Submodule::full(9));
        assert!(divides(&alg, &f0));
        assert!(divides(&alg, &f1));
    }

    #[test]
    fn general_component_s3() {
        let g = s3_gf5();
        let alg = Algebra::new(&g);
        let ctx = g.field();
        let e2 = s3_elem(&alg, [2, 0, 3, 2, 0, 3]);
        assert!(!alg.is_central(&e2));
        assert_eq!(homogeneous_component_central(&alg, &e2).unwrap_err().code(), "E_NOT_CENTRAL");
        let h = homogeneous_component_general(&alg, &e2).unwrap();
        assert_eq!(h.dim(), 6);
        let images: Vec<String> = (0..9)
            .map(|i| {
                let mut b = vec![FieldElement::ZERO; 9];
                b[i] = FieldElement::ONE;
                format_vector(ctx, &alg.evaluate(&e2, &b).unwrap())
            })
            .collect();
        assert_eq!(images[0], "140111222");
        assert_eq!(images[1], "142330020");
        for v in vecs(ctx, &["140111222", "142330020"]) {
            assert!(h.contains(ctx, &v).unwrap());
        }
        let e0 = s3_elem(&alg, [1, 1, 1, 1, 1, 1]);
        let e1 = s3_elem(&alg, [1, 1, 1, 4, 4, 4]);
        assert_eq!(
            homogeneous_component_general(&alg, &e0).unwrap(),
            homogeneous_component_central(&alg, &e0).unwrap()
        );
        for e in [&e0, &e1, &e2] {
            assert!(divides(&alg, e));
        }
        let not_idem = alg.add(&e0, &e0);
        assert_eq!(homogeneous_component_general(&alg, &not_idem).unwrap_err().code(), "E_NOT_IDEMPOTENT");
    }

    #[test]
    fn trivial_component_is_zero() {
        let g = c3_gf2();
        let alg = Algebra::new(&g);
        assert!(!divides(&alg, &alg.zero()));
        assert!(homogeneous_component_general(&alg, &alg.zero()).unwrap().is_zero());
    }

    #[test]
    fn decomposition_gf2_c3() {
        let g = c3_gf2();
        let alg = Algebra::new(&g);
        let idems = alg.central_primitive_idempotents(&mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let comps = decompose(&alg, &idems.idems, DEFAULT_SCAN_CAP).unwrap();
        let summary: Vec<_> = comps
            .iter()
            .map(|c| (c.component.dim(), c.simple_dim, c.mult_in_m, c.mult_in_a, c.simples.len()))
            .collect();
        assert_eq!(summary, vec![(6, 2, 3, 1, 21), (3, 1, 3, 1, 7)]);
        let ctx = g.field();
        for c in &comps {
            for s in &c.simples {
                assert_eq!(cyclic_submodule(&g, &s.generator).unwrap(), s.module);
                assert!(c.component.contains_submodule(ctx, &s.module).unwrap());
            }
        }
        // 100100000 and 010010000 generate simples of the first component
        for v in vecs(ctx, &["100100000", "010010000"]) {
            let m = cyclic_submodule(&g, &v).unwrap();
            assert!(comps[0].simples.iter().any(|s| s.module == m));
        }
    }

    #[test]
    fn decomposition_gf5_s3() {
        let g = s3_gf5();
        let alg = Algebra::new(&g);
        let idems = alg.central_primitive_idempotents(&mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let comps = decompose(&alg, &idems.idems, DEFAULT_SCAN_CAP).unwrap();
        let summary: Vec<_> = comps
            .iter()
            .map(|c| (c.component.dim(), c.simple_dim, c.mult_in_m, c.mult_in_a, c.simples.len()))
            .collect();
        assert_eq!(summary, vec![(1, 1, 1, 1, 1), (2, 1, 2, 1, 6), (6, 2, 3, 2, 31)]);
        assert_eq!(simple_dimension(&g, &comps[2].component, DEFAULT_SCAN_CAP).unwrap(), 2);
        let e0l0 = parse_vector(g.field(), "140442324").unwrap();
        assert_eq!(comps[0].simples[0].module, cyclic_submodule(&g, &e0l0).unwrap());
    }

    #[test]
    fn divisibility_and_caps() {
        let g = c3_gf2();
        let ctx = g.field();
        let p = |s| parse_vector(ctx, s).unwrap();
        assert!(submodule_divides_check(&g, &p("000000000"), &p("100100000")).unwrap());
        assert!(!submodule_divides_check(&g, &p("110110000"), &p("100100000")).unwrap());
        let m = p("100100000");
        for i in 0..g.order() {
            assert!(submodule_divides_check(&g, &g.act(i, &m).unwrap(), &m).unwrap());
        }
        let h = Submodule::full(9);
        assert_eq!(simple_dimension(&g, &h, 100).unwrap_err().code(), "E_COMPONENT_TOO_LARGE");
        assert_eq!(simple_dimension(&g, &Submodule::zero(9), 100).unwrap_err().code(), "E_ZERO_MODULE");
        assert_eq!(multiplicity(&h, 2).unwrap_err().code(), "E_NOT_DIVISIBLE");
        assert_eq!(multiplicity(&h, 3).unwrap(), 3);
    }

    #[test]
    fn simples_partition_component() {
        let g = c3_gf2();
        let alg = Algebra::new(&g);
        let ctx = g.field();
        let idems = alg.central_primitive_idempotents(&mut ChaCha8Rng::seed_from_u64(2)).unwrap();
        for c in decompose(&alg, &idems.idems, DEFAULT_SCAN_CAP).unwrap() {
            let mut hits = std::collections::HashMap::new();
            for s in &c.simples {
                for v in s.module.vectors(ctx).skip(1) {
                    *hits.entry(v).or_insert(0) += 1;
                }
            }
            assert_eq!(hits.len() as u128, c.component.size(ctx).unwrap() - 1);
            assert!(hits.values().all(|&k| k == 1));
            for s in &c.simples {
                for row in s.module.rows() {
                    for &gen in g.gen_indices() {
                        assert!(s.module.contains(ctx, &g.act(gen, row).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
