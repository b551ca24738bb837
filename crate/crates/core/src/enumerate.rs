//! Direct sums across homogeneous components: the complete list of
//! G-invariant codes, with generating sets, bases and weights.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::GroupTable;
use crate::linalg::{format_vector, hamming_weight, parse_vector, Submodule, Vector};
use crate::modaction::{cyclic_submodule, ComponentData};
use crate::sumalg::{SumEntry, SumOutput};

/// Default dimension cap for exhaustive weight scans.
pub const DEFAULT_MAX_WEIGHT_DIM: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeRecord {
    pub code: Submodule,
    /// Per component, indices into that component's simple list.
    pub decomposition: Vec<Vec<usize>>,
    /// One canonical generator per simple summand, component by component.
    pub generators: Vec<Vector>,
    pub dim: usize,
    pub min_weight: Option<usize>,
}

/// Serialized form of a [`CodeRecord`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecordJson {
    pub dim: usize,
    pub decomposition: Vec<Vec<usize>>,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub min_weight: Option<usize>,
}

impl CodeRecord {
    /// `basis` defaults to the RREF rows of the code.
    pub fn to_json(&self, ctx: &FieldCtx, basis: Option<&[Vector]>) -> CodeRecordJson {
        let basis: Vec<String> = match basis {
            Some(b) => b.iter().map(|v| format_vector(ctx, v)).collect(),
            None => self.code.rows().map(|v| format_vector(ctx, v)).collect(),
        };
        CodeRecordJson {
            dim: self.dim,
            decomposition: self.decomposition.clone(),
            generators: self.generators.iter().map(|v| format_vector(ctx, v)).collect(),
            basis,
            min_weight: self.min_weight,
        }
    }

    /// Rebuilds a record; the code is the span of the basis, cross-checked
    /// against the module generated by the generators.
    pub fn from_json(group: &GroupTable, json: &CodeRecordJson) -> Result<CodeRecord> {
        let ctx = group.field();
        let n = group.degree();
        let parse_all = |items: &[String]| items.iter().map(|s| parse_vector(ctx, s)).collect::<Result<Vec<_>>>();
        let generators = parse_all(&json.generators)?;
        let code = Submodule::span(ctx, n, parse_all(&json.basis)?)?;
        let mut generated = Submodule::zero(n);
        for g in &generators {
            generated = generated.sum(ctx, &cyclic_submodule(group, g)?)?;
        }
        if generated != code || code.dim() != json.dim {
            return Err(Error::InconsistentInput("record basis, generators and dim disagree".into()));
        }
        Ok(CodeRecord {
            code,
            decomposition: json.decomposition.clone(),
            generators,
            dim: json.dim,
            min_weight: json.min_weight,
        })
    }
}

/// Streams every G-invariant code as a direct sum of one sum-of-simples entry
/// per component. Entries of each component are taken in lexicographic
/// order of their index sets, the first component varying slowest.
pub struct CodeStream<'a> {
    ctx: &'a FieldCtx,
    n: usize,
    lists: Vec<Vec<&'a SumEntry>>,
    components: &'a [ComponentData],
    counter: Vec<usize>,
    done: bool,
}

pub fn all_invariant_codes<'a>(
    ctx: &'a FieldCtx,
    n: usize,
    components: &'a [ComponentData],
    sums: &'a [SumOutput],
) -> CodeStream<'a> {
    let lists: Vec<Vec<&SumEntry>> = sums
        .iter()
        .map(|s| {
            let mut l: Vec<&SumEntry> = s.f.iter().collect();
            l.sort_by(|a, b| a.indices.cmp(&b.indices));
            l
        })
        .collect();
    CodeStream { ctx, n, counter: vec![0; lists.len()], lists, components, done: false }
}

impl CodeStream<'_> {
    /// Number of records the stream yields in total.
    pub fn len_hint(&self) -> u128 {
        self.lists.iter().map(|l| l.len() as u128).product()
    }

    fn current(&self) -> CodeRecord {
        let mut code = Submodule::zero(self.n);
        let mut decomposition = Vec::with_capacity(self.lists.len());
        let mut generators = Vec::new();
        for (j, (list, &c)) in self.lists.iter().zip(&self.counter).enumerate() {
            let entry = list[c];
            code = code.sum(self.ctx, &entry.module).expect("components share the ambient space");
            decomposition.push(entry.indices.clone());
            generators.extend(entry.indices.iter().map(|&i| self.components[j].simples[i].generator.clone()));
        }
        let dim = code.dim();
        CodeRecord { code, decomposition, generators, dim, min_weight: None }
    }
}

impl Iterator for CodeStream<'_> {
    type Item = CodeRecord;

    fn next(&mut self) -> Option<CodeRecord> {
        if self.done {
            return None;
        }
        let out = self.current();
        let mut i = self.counter.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < self.lists[i].len() {
                break;
            }
            self.counter[i] = 0;
        }
        Some(out)
    }
}

/// `{b x' : b in basis_of_ae}` where `x'` is `x` or, when `e x = 0`, the
/// first translate `g x` (group order) with `e (g x) != 0`.
pub fn basis_via_idempotent(
    alg: &Algebra,
    x: &[FieldElement],
    e: &AlgebraElement,
    basis_of_ae: &[AlgebraElement],
) -> Result<Vec<Vector>> {
    let group = alg.group();
    let ctx = group.field();
    let mut translate = None;
    for g in 0..group.order() {
        let gx = group.act(g, x)?;
        if !alg.evaluate(e, &gx)?.iter().all(|c| c.is_zero()) {
            translate = Some(gx);
            break;
        }
    }
    let x1 = translate.ok_or(Error::NoTranslate)?;
    let out = basis_of_ae.iter().map(|b| alg.evaluate(b, &x1)).collect::<Result<Vec<_>>>()?;
    let span = Submodule::span(ctx, group.degree(), &out)?;
    if span.dim() != out.len() || span != cyclic_submodule(group, x)? {
        return Err(Error::InconsistentInput("A x is not isomorphic to A e".into()));
    }
    Ok(out)
}

/// How to produce bases for the simples of one component.
#[derive(Clone, Debug)]
pub enum BasisMethod {
    /// A primitive idempotent of the component and a basis of `A e`.
    Idempotent { e: AlgebraElement, basis: Vec<AlgebraElement> },
    /// RREF of the orbit span.
    Orbit,
}

/// Picks, for every component, a primitive idempotent acting nonzero on it:
/// the central one when `k_j = 1`, otherwise the first suitable candidate
/// from `supplied`, falling back to orbit spans.
pub fn basis_methods(alg: &Algebra, components: &[ComponentData], supplied: &[AlgebraElement]) -> Vec<BasisMethod> {
    let acts_on = |e: &AlgebraElement, c: &ComponentData| {
        c.component.rows().any(|r| alg.evaluate(e, r).is_ok_and(|v| v.iter().any(|x| !x.is_zero())))
    };
    components
        .iter()
        .map(|c| {
            let candidate = if c.mult_in_a == 1 {
                Some(c.central_idem.clone())
            } else {
                supplied
                    .iter()
                    .find(|e| alg.is_idempotent(e) && alg.ideal_dim(e) == c.simple_dim && acts_on(e, c))
                    .cloned()
            };
            match candidate {
                Some(e) => {
                    let basis = alg.ideal_basis(&e);
                    BasisMethod::Idempotent { e, basis }
                }
                None => BasisMethod::Orbit,
            }
        })
        .collect()
}

/// Basis of a record: the union over its simple summands.
pub fn record_basis(
    alg: &Algebra,
    record: &CodeRecord,
    components: &[ComponentData],
    methods: &[BasisMethod],
) -> Result<Vec<Vector>> {
    let group = alg.group();
    let mut out = Vec::with_capacity(record.dim);
    for (j, idx) in record.decomposition.iter().enumerate() {
        for &i in idx {
            let x = &components[j].simples[i].generator;
            match &methods[j] {
                BasisMethod::Idempotent { e, basis } => out.extend(basis_via_idempotent(alg, x, e, basis)?),
                BasisMethod::Orbit => out.extend(cyclic_submodule(group, x)?.rows().map(|r| r.to_vec())),
            }
        }
    }
    Ok(out)
}

/// A single generator `sum m_i` for records with at most one simple summand
/// per component (pairwise non-isomorphic summands). `None` otherwise and for
/// the zero code.
pub fn one_generator_vector(group: &GroupTable, record: &CodeRecord) -> Result<Option<Vector>> {
    if record.generators.is_empty() || record.decomposition.iter().any(|y| y.len() > 1) {
        return Ok(None);
    }
    let ctx = group.field();
    let mut v = vec![FieldElement::ZERO; group.degree()];
    for g in &record.generators {
        v = crate::linalg::vec_add(ctx, &v, g);
    }
    if cyclic_submodule(group, &v)? != record.code {
        return Err(Error::InconsistentInput("sum of generators does not generate the code".into()));
    }
    Ok(Some(v))
}

/// Weight profile of the nonzero codewords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightStats {
    pub min_weight: Option<usize>,
    /// `distribution[w]` = number of nonzero codewords of weight `w`;
    /// empty for the zero code.
    pub distribution: Vec<u128>,
}

pub fn weight_stats(ctx: &FieldCtx, code: &Submodule, max_dim: usize) -> Result<WeightStats> {
    if code.dim() > max_dim {
        return Err(Error::TooLarge { size: code.dim() as u128, cap: max_dim as u128 });
    }
    if code.is_zero() {
        return Ok(WeightStats { min_weight: None, distribution: Vec::new() });
    }
    let mut distribution = vec![0u128; code.ambient_dim() + 1];
    for v in code.vectors(ctx).skip(1) {
        distribution[hamming_weight(&v)] += 1;
    }
    let min_weight = distribution.iter().position(|&c| c > 0);
    Ok(WeightStats { min_weight, distribution })
}
