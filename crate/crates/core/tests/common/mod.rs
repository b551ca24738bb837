#![allow(dead_code)]

use std::path::PathBuf;

use ginv_core::field::FieldCtx;
use ginv_core::group::GroupTable;
use ginv_core::linalg::{parse_vector, Matrix, Vector};
use ginv_core::problem::ProblemSpec;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn problem_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems").join(name)
}

pub fn load(name: &str) -> ProblemSpec {
    ProblemSpec::from_path(problem_path(name)).unwrap()
}

pub fn group_of(spec: &ProblemSpec) -> GroupTable {
    GroupTable::close_generators(&spec.field, spec.n, &spec.generators, 10_000).unwrap()
}

pub fn vecs(ctx: &FieldCtx, strs: &[&str]) -> Vec<Vector> {
    strs.iter().map(|s| parse_vector(ctx, s).unwrap()).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_invertible<R: Rng>(ctx: &FieldCtx, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| ctx.elem(rng.gen_range(0..ctx.q())).unwrap());
        if m.rank(ctx) == n {
            return m;
        }
    }
}

fn inverse(ctx: &FieldCtx, m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut x = m.clone();
    let mut k = 1;
    loop {
        let next = x.mul(ctx, m).unwrap();
        if next == Matrix::identity(n) {
            return x;
        }
        x = next;
        k += 1;
        assert!(k < 100_000, "matrix order too large");
    }
}

/// A random monomial matrix on `n` points whose permutation is a product of
/// random cycles, with random unit scalars when `scaled`.
fn random_monomial<R: Rng>(ctx: &FieldCtx, n: usize, scaled: bool, rng: &mut R) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let units: Vec<u32> = (1..ctx.q()).collect();
    Matrix::from_fn(n, n, |i, j| {
        if perm[j] == i {
            let c = if scaled { *units.choose(rng).unwrap() } else { 1 };
            ctx.elem(c).unwrap()
        } else {
            ctx.zero()
        }
    })
}

/// A random small semisimple instance: q in {2, 3, 5}, q^n <= `max_space`,
/// |G| <= `max_order` coprime to q, generators conjugated by a random
/// invertible matrix so they are usually not monomial. `n` is drawn from the
/// upper half of the allowed range.
pub fn random_instance<R: Rng>(rng: &mut R, max_space: u64, max_order: usize) -> GroupTable {
    loop {
        let q = *[2u32, 3, 5].choose(rng).unwrap();
        let ctx = FieldCtx::prime(q).unwrap();
        let max_n = (1..=12).take_while(|&n| (q as u64).pow(n) <= max_space).last().unwrap() as usize;
        let n = rng.gen_range((max_n / 2).max(2)..=max_n);
        let ngens = rng.gen_range(1..=2);
        let scaled = q > 2 && rng.gen_bool(0.4);
        let gens: Vec<Matrix> = (0..ngens).map(|_| random_monomial(&ctx, n, scaled, rng)).collect();
        let Ok(g) = GroupTable::close_generators(&ctx, n, &gens, max_order) else {
            continue;
        };
        if gcd(g.order(), q as usize) != 1 || g.order() == 1 {
            continue;
        }
        let p = random_invertible(&ctx, n, rng);
        let p_inv = inverse(&ctx, &p);
        let conj: Vec<Matrix> = gens.iter().map(|m| p.mul(&ctx, m).unwrap().mul(&ctx, &p_inv).unwrap()).collect();
        return GroupTable::close_generators(&ctx, n, &conj, max_order).unwrap();
    }
}
