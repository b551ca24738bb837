//! The structured pipeline against brute-force closure of cyclic submodules.

mod common;

use std::collections::BTreeSet;

use common::{group_of, load, random_instance};
use ginv_core::group::GroupTable;
use ginv_core::linalg::Submodule;
use ginv_core::oracle::{oracle_all_submodules, oracle_check_invariant, DEFAULT_ORACLE_CAP};
use ginv_core::pipeline::{Decomposition, PipelineOptions};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pipeline_codes(g: &GroupTable) -> (BTreeSet<Submodule>, BigUint) {
    let d = Decomposition::new(g.clone(), &PipelineOptions::default()).unwrap();
    let tables = d.tables().unwrap();
    let sums = d.sums(&tables).unwrap();
    let codes: Vec<Submodule> = d.codes(&sums).map(|r| r.code).collect();
    let set: BTreeSet<Submodule> = codes.iter().cloned().collect();
    assert_eq!(set.len(), codes.len(), "duplicate codes emitted");
    (set, d.count_all(&tables).unwrap())
}

#[test]
fn gf2_c3_matches_oracle() {
    let g = group_of(&load("gf2_9_c3.json"));
    let (codes, count) = pipeline_codes(&g);
    assert_eq!(count, BigUint::from(704u32));
    assert_eq!(codes, oracle_all_submodules(&g, DEFAULT_ORACLE_CAP).unwrap());
}

#[test]
fn gf3_swap_matches_oracle() {
    let g = group_of(&load("gf3_4_swap.json"));
    let (codes, _) = pipeline_codes(&g);
    let oracle = oracle_all_submodules(&g, DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!(oracle.len(), 36);
    assert_eq!(codes, oracle);
}

#[test]
fn random_instances_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 8 {
        let g = random_instance(&mut rng, 1 << 12, 12);
        let (codes, count) = pipeline_codes(&g);
        if codes.len() > 3000 || codes.len() < 16 {
            continue;
        }
        let oracle = oracle_all_submodules(&g, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(BigUint::from(codes.len()), count);
        assert_eq!(codes, oracle, "q = {}, n = {}, |G| = {}", g.field().q(), g.degree(), g.order());
        for c in &codes {
            assert!(oracle_check_invariant(c, &g).unwrap());
        }
        checked += 1;
    }
}
