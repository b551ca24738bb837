//! End-to-end driver: group closure, central idempotents, components,
//! binomial tables, sums of simples and the code stream.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraElement, IdempotentSet};
use crate::enumerate::{all_invariant_codes, CodeStream};
use crate::error::{Error, Result};
use crate::gaussian::{binom_table, count_all_invariant, count_one_generator, BinomTable};
use crate::group::{GroupTable, DEFAULT_MAX_ORDER};
use crate::modaction::{analyze_component, ComponentData, DEFAULT_SCAN_CAP};
use crate::problem::ProblemSpec;
use crate::sumalg::{sum_component, SumOutput};

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub seed: u64,
    pub scan_cap: u128,
    pub max_order: usize,
    /// Analyze components on separate threads.
    pub parallel: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { seed: 0, scan_cap: DEFAULT_SCAN_CAP, max_order: DEFAULT_MAX_ORDER, parallel: false }
    }
}

/// One group taken through idempotents to analyzed components.
#[derive(Debug)]
pub struct Decomposition {
    pub group: GroupTable,
    pub idempotents: IdempotentSet,
    pub components: Vec<ComponentData>,
}

impl Decomposition {
    pub fn new(group: GroupTable, opts: &PipelineOptions) -> Result<Decomposition> {
        let alg = Algebra::new(&group);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let idempotents = alg.central_primitive_idempotents(&mut rng)?;
        let analyzed: Vec<Result<Option<ComponentData>>> = if opts.parallel {
            std::thread::scope(|scope| {
                let handles: Vec<_> = idempotents
                    .idems
                    .iter()
                    .map(|e| scope.spawn(move || analyze_component(&alg, e, opts.scan_cap)))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("component worker panicked")).collect()
            })
        } else {
            idempotents.idems.iter().map(|e| analyze_component(&alg, e, opts.scan_cap)).collect()
        };
        let mut components = Vec::new();
        for c in analyzed {
            components.extend(c?);
        }
        let total: usize = components.iter().map(|c| c.component.dim()).sum();
        if total != group.degree() {
            return Err(Error::InconsistentInput(format!(
                "component dimensions sum to {total}, not {}",
                group.degree()
            )));
        }
        Ok(Decomposition { group, idempotents, components })
    }

    pub fn from_problem(spec: &ProblemSpec, opts: &PipelineOptions) -> Result<Decomposition> {
        let group = GroupTable::close_generators(&spec.field, spec.n, &spec.generators, opts.max_order)?;
        Self::new(group, opts)
    }

    pub fn algebra(&self) -> Algebra<'_> {
        Algebra::new(&self.group)
    }

    pub fn tables(&self) -> Result<Vec<BinomTable>> {
        self.components.iter().map(|c| binom_table(self.group.field(), c)).collect()
    }

    pub fn sums(&self, tables: &[BinomTable]) -> Result<Vec<SumOutput>> {
        self.components.iter().zip(tables).map(|(c, t)| sum_component(self.group.field(), c, t)).collect()
    }

    pub fn count_all(&self, tables: &[BinomTable]) -> Result<BigUint> {
        count_all_invariant(tables)
    }

    pub fn count_one_generator(&self, tables: &[BinomTable]) -> Result<BigUint> {
        let ks: Vec<usize> = self.components.iter().map(|c| c.mult_in_a).collect();
        count_one_generator(tables, &ks)
    }

    pub fn codes<'a>(&'a self, sums: &'a [SumOutput]) -> CodeStream<'a> {
        all_invariant_codes(self.group.field(), self.group.degree(), &self.components, sums)
    }

    /// Builds algebra elements from problem-file terms.
    pub fn elements_from_terms(&self, spec: &ProblemSpec) -> Result<Vec<AlgebraElement>> {
        let alg = self.algebra();
        spec.idempotents.iter().map(|t| alg.from_terms(t)).collect()
    }
}
