//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Counts and booleans are exact. The only tolerances are wall-clock limits,
//! pinned below per criterion.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{group_of, load, problem_path, random_instance};
use ginv_core::algebra::Algebra;
use ginv_core::gaussian::{binom_simple_closed, binom_simple_enumerated, BinomSource};
use ginv_core::group::GroupTable;
use ginv_core::isomap::{check_weight_iso, RegularBasisRep};
use ginv_core::linalg::{Submodule, Vector};
use ginv_core::oracle::{oracle_all_submodules, DEFAULT_ORACLE_CAP};
use ginv_core::pipeline::{Decomposition, PipelineOptions};
use ginv_core::problem::parse_matrix_file;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_GF2: Duration = Duration::from_secs(10);
const LIMIT_GF5: Duration = Duration::from_secs(300);
const LIMIT_ORACLE: Duration = Duration::from_secs(120);
const LIMIT_DEFAULT: Duration = Duration::from_secs(300);

const RANDOM_ORACLE_INSTANCES: usize = 6;
const RANDOM_PROPERTY_INSTANCES: usize = 100;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $what:expr) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{}: got {:?}, expected {:?}", $what, l, r));
        }
    }};
}

macro_rules! ensure {
    ($cond:expr, $what:expr) => {
        if !$cond {
            return Err($what.to_string());
        }
    };
}

fn decompose(name: &str) -> Decomposition {
    Decomposition::new(group_of(&load(name)), &PipelineOptions::default()).unwrap()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn gf2_counts() -> Check {
    let d = decompose("gf2_9_c3.json");
    let t = d.tables().unwrap();
    ensure_eq!(d.count_all(&t).unwrap(), big(704), "invariant codes");
    ensure_eq!(d.count_one_generator(&t).unwrap(), big(175), "one-generator codes");
    Ok(())
}

fn gf2_structure() -> Check {
    let d = decompose("gf2_9_c3.json");
    let t = d.tables().unwrap();
    let sums = d.sums(&t).unwrap();
    let dims: Vec<usize> = d.components.iter().map(|c| c.component.dim()).collect();
    let simple_dims: Vec<usize> = d.components.iter().map(|c| c.simple_dim).collect();
    let mults: Vec<usize> = d.components.iter().map(|c| c.mult_in_m).collect();
    let counts: Vec<usize> = d.components.iter().map(|c| c.simples.len()).collect();
    let two: Vec<usize> = sums.iter().map(|s| s.z_of_size(2).len()).collect();
    let three: Vec<usize> = sums.iter().map(|s| s.z_of_size(3).len()).collect();
    ensure_eq!(dims, vec![6, 3], "component dimensions");
    ensure_eq!(simple_dims, vec![2, 1], "simple dimensions");
    ensure_eq!(mults, vec![3, 3], "multiplicities");
    ensure_eq!(counts, vec![21, 7], "simple counts");
    ensure_eq!(two, vec![21, 7], "two-fold index sets");
    ensure_eq!(three, vec![1, 1], "three-fold index sets");
    Ok(())
}

fn gf5_s3_binomials() -> Check {
    let d = decompose("gf5_9_s3.json");
    let t = d.tables().unwrap();
    let mults: Vec<usize> = d.components.iter().map(|c| c.mult_in_m).collect();
    let counts: Vec<usize> = d.components.iter().map(|c| c.simples.len()).collect();
    ensure_eq!(mults, vec![1, 2, 3], "multiplicities");
    ensure_eq!(counts, vec![1, 6, 31], "simple counts");
    ensure!(d.components[2].component.dim() == 6, "third component is not 6-dimensional");
    let i2 = &d.components[2];
    ensure_eq!(i2.mult_in_a, 2, "multiplicity of I2 in the group algebra");
    ensure_eq!(t[2].source, BinomSource::Enumerated, "binomial source for I2");
    ensure_eq!(binom_simple_enumerated(d.group.field(), &i2.simples, 2).unwrap(), big(6), "binom(2 I2, I2)_5");
    ensure_eq!(t[2].binom(2).unwrap(), big(31), "binom(3 I2, 2 I2)_5");
    Ok(())
}

fn gf5_s3_idempotents() -> Check {
    let spec = load("gf5_s3_basic_set.json");
    let d = Decomposition::from_problem(&spec, &PipelineOptions::default()).unwrap();
    let alg = d.algebra();
    let e = d.elements_from_terms(&spec).unwrap();
    ensure_eq!(e.len(), 4, "supplied idempotents");
    let report = alg.verify_basic_set(&e);
    ensure!(report.idempotent.iter().all(|&b| b), "some e_i is not idempotent");
    ensure!(report.non_orthogonal.is_empty(), format!("non-orthogonal pairs {:?}", report.non_orthogonal));
    ensure!(report.sums_to_one, "idempotents do not sum to 1");
    ensure_eq!(report.isomorphic_pairs, vec![(2, 3)], "isomorphic pairs");
    let expected: BTreeSet<Vec<u32>> = [e[0].clone(), e[1].clone(), alg.add(&e[2], &e[3])]
        .iter()
        .map(|x| x.coeffs().iter().map(|c| c.value()).collect())
        .collect();
    let got: BTreeSet<Vec<u32>> =
        d.idempotents.idems.iter().map(|x| x.coeffs().iter().map(|c| c.value()).collect()).collect();
    ensure_eq!(got, expected, "central primitive idempotents");
    Ok(())
}

fn gf3_swap_matrix() -> Check {
    let g = group_of(&load("gf3_4_swap.json"));
    let text = std::fs::read_to_string(problem_path("gf3_4_swap_m.json")).unwrap();
    let m = parse_matrix_file(g.field(), &text, 4).unwrap();
    let rep = RegularBasisRep::new(&g).unwrap();
    ensure_eq!(check_weight_iso(&g, &m, &rep).unwrap(), true, "check_weight_iso(M)");
    Ok(())
}

fn pipeline_code_set(g: &GroupTable) -> BTreeSet<Submodule> {
    let d = Decomposition::new(g.clone(), &PipelineOptions::default()).unwrap();
    let t = d.tables().unwrap();
    let sums = d.sums(&t).unwrap();
    d.codes(&sums).map(|r| r.code).collect()
}

fn oracle_equivalence() -> Check {
    let g = group_of(&load("gf2_9_c3.json"));
    ensure!(
        pipeline_code_set(&g) == oracle_all_submodules(&g, DEFAULT_ORACLE_CAP).unwrap(),
        "GF(2)^9 code set differs from the oracle"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < RANDOM_ORACLE_INSTANCES {
        let g = random_instance(&mut rng, 1 << 12, 12);
        let codes = pipeline_code_set(&g);
        if codes.len() < 16 || codes.len() > 3000 {
            continue;
        }
        let oracle = oracle_all_submodules(&g, DEFAULT_ORACLE_CAP).unwrap();
        ensure!(
            codes == oracle,
            format!("q = {}, n = {}, |G| = {}: code set differs", g.field().q(), g.degree(), g.order())
        );
        done += 1;
    }
    Ok(())
}

fn is_abelian(g: &GroupTable) -> bool {
    (0..g.order()).all(|i| (0..g.order()).all(|j| g.mul(i, j) == g.mul(j, i)))
}

fn closed_form_for(g: &GroupTable) -> Check {
    let d = Decomposition::new(g.clone(), &PipelineOptions::default()).unwrap();
    let q = g.field().q();
    for c in &d.components {
        for k in 0..=c.mult_in_m {
            let e = binom_simple_enumerated(g.field(), &c.simples, k).unwrap();
            let f = binom_simple_closed(k, c.simple_dim, q, c.mult_in_a == 1).unwrap();
            ensure_eq!(e, f, format!("q = {q}, d = {}, k = {k}", c.simple_dim));
        }
    }
    Ok(())
}

fn closed_form() -> Check {
    closed_form_for(&group_of(&load("gf2_9_c3.json")))?;
    closed_form_for(&group_of(&load("gf3_4_swap.json")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut done = 0;
    while done < 20 {
        let g = random_instance(&mut rng, 1 << 10, 12);
        if is_abelian(&g) {
            closed_form_for(&g)?;
            done += 1;
        }
    }
    Ok(())
}

fn rand_vec<R: Rng>(g: &GroupTable, len: usize, rng: &mut R) -> Vector {
    (0..len).map(|_| g.field().elem(rng.gen_range(0..g.field().q())).unwrap()).collect()
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..RANDOM_PROPERTY_INSTANCES {
        let g = random_instance(&mut rng, 1 << 10, 12);
        let ctx = g.field();
        let n = g.degree();
        let alg = Algebra::new(&g);
        for _ in 0..3 {
            let a = alg.from_coeffs(rand_vec(&g, alg.dim(), &mut rng)).unwrap();
            let b = alg.from_coeffs(rand_vec(&g, alg.dim(), &mut rng)).unwrap();
            let v = rand_vec(&g, n, &mut rng);
            let lhs = alg.evaluate(&alg.mul(&a, &b), &v).unwrap();
            let rhs = alg.evaluate(&a, &alg.evaluate(&b, &v).unwrap()).unwrap();
            ensure!(lhs == rhs, "(ab)v != a(bv)");
        }
        let vs: Vec<Vector> = (0..rng.gen_range(1..=n)).map(|_| rand_vec(&g, n, &mut rng)).collect();
        let s = Submodule::span(ctx, n, &vs).unwrap();
        let mut rev = vs.clone();
        rev.reverse();
        ensure!(Submodule::span(ctx, n, &rev).unwrap() == s, "RREF depends on generator order");
        ensure!(Submodule::from_matrix(ctx, s.basis()) == s, "RREF is not idempotent");

        let d = Decomposition::new(g.clone(), &PipelineOptions::default()).map_err(|e| e.to_string())?;
        let dims: usize = d.components.iter().map(|c| c.component.dim()).sum();
        ensure_eq!(dims, n, "component dimensions");
        let t = d.tables().unwrap();
        // sum_component rejects sums that are not direct or repeat a module
        let sums = d.sums(&t).map_err(|e| e.to_string())?;
        for s in &sums {
            let distinct: BTreeSet<&Submodule> = s.f.iter().map(|e| &e.module).collect();
            ensure_eq!(distinct.len(), s.f.len(), "distinct sums");
        }
    }
    Ok(())
}

fn frozen_counts() -> Check {
    let d = decompose("gf5_9_s3.json");
    let t = d.tables().unwrap();
    ensure_eq!(d.count_all(&t).unwrap(), big(1024), "GF(5)^9 invariant codes");
    ensure_eq!(d.count_one_generator(&t).unwrap(), big(881), "GF(5)^9 one-generator codes");
    let d = decompose("gf3_4_swap.json");
    let t = d.tables().unwrap();
    ensure_eq!(d.count_all(&t).unwrap(), big(36), "GF(3)^4 invariant codes");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("GF(2)^9/C3 counts 704 and 175", LIMIT_GF2, gf2_counts),
        ("GF(2)^9/C3 components, simples and index sets", LIMIT_DEFAULT, gf2_structure),
        ("GF(5)^9/S3 multiplicities, simple counts, binomials", LIMIT_GF5, gf5_s3_binomials),
        ("GF(5)[S3] basic set and central idempotents", LIMIT_DEFAULT, gf5_s3_idempotents),
        ("GF(3)^4 swap: reference matrix M is a weight isomorphism", LIMIT_DEFAULT, gf3_swap_matrix),
        ("enumeration equals the oracle (GF(2)^9 and random)", LIMIT_ORACLE, oracle_equivalence),
        ("closed form equals enumeration for abelian groups", LIMIT_DEFAULT, closed_form),
        ("property suite over random instances", LIMIT_DEFAULT, properties),
        ("frozen counts 1024, 881 and 36", LIMIT_DEFAULT, frozen_counts),
    ];
    let total = criteria.len();
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > limit {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("PASS {} {name} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {total} criteria passed", total - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
