//! Shared test instances.

use crate::algebra::{Algebra, AlgebraElement};
use crate::field::FieldCtx;
use crate::group::{GroupTable, DEFAULT_MAX_ORDER};
use crate::linalg::{parse_vector, Matrix, Vector};

pub fn int_matrix(ctx: &FieldCtx, rows: &[[u32; 9]]) -> Matrix {
    Matrix::from_fn(rows.len(), 9, |i, j| ctx.elem(rows[i][j]).unwrap())
}

/// Cyclic shift by three positions on GF(2)^9.
pub fn c3_gf2() -> GroupTable {
    let f2 = FieldCtx::prime(2).unwrap();
    let gamma = Matrix::from_fn(9, 9, |i, j| if (j + 3) % 9 == i { f2.one() } else { f2.zero() });
    GroupTable::close_generators(&f2, 9, &[gamma], DEFAULT_MAX_ORDER).unwrap()
}

pub const S3_X: [[u32; 9]; 9] = [
    [0, 3, 4, 4, 0, 3, 3, 2, 1],
    [4, 1, 0, 2, 0, 3, 1, 3, 2],
    [0, 1, 2, 4, 4, 2, 1, 2, 2],
    [3, 0, 2, 3, 3, 0, 2, 2, 3],
    [2, 0, 3, 3, 4, 3, 3, 2, 0],
    [2, 0, 1, 4, 2, 0, 1, 4, 0],
    [0, 4, 4, 4, 3, 2, 1, 1, 0],
    [2, 1, 1, 4, 1, 3, 3, 2, 3],
    [1, 1, 2, 4, 1, 1, 0, 2, 2],
];

pub const S3_Y: [[u32; 9]; 9] = [
    [0, 2, 0, 0, 1, 2, 0, 0, 0],
    [4, 2, 0, 0, 4, 3, 0, 0, 0],
    [2, 3, 4, 1, 0, 4, 1, 1, 1],
    [1, 1, 0, 2, 2, 3, 0, 3, 4],
    [4, 3, 0, 1, 1, 4, 0, 3, 4],
    [2, 4, 0, 2, 3, 0, 0, 1, 3],
    [1, 3, 0, 3, 4, 4, 1, 3, 0],
    [0, 1, 0, 3, 2, 0, 0, 4, 0],
    [0, 2, 0, 0, 1, 4, 0, 2, 0],
];

/// S3 acting on GF(5)^9 through the matrices x and y.
pub fn s3_gf5() -> GroupTable {
    let f5 = FieldCtx::prime(5).unwrap();
    let gens = [int_matrix(&f5, &S3_X), int_matrix(&f5, &S3_Y)];
    GroupTable::close_generators(&f5, 9, &gens, DEFAULT_MAX_ORDER).unwrap()
}

/// `c0 + c1 a + c2 a^2 + c3 b + c4 ba + c5 ba^2` with a = g0, b = g1.
pub fn s3_elem(alg: &Algebra, c: [i64; 6]) -> AlgebraElement {
    const WORDS: [&[usize]; 6] = [&[], &[0], &[0, 0], &[1], &[1, 0], &[1, 0, 0]];
    let ctx = alg.group().field();
    let terms: Vec<_> = c.iter().zip(WORDS).map(|(&ci, w)| (ctx.from_int(ci), w.to_vec())).collect();
    alg.from_terms(&terms).unwrap()
}

pub fn vecs(ctx: &FieldCtx, strs: &[&str]) -> Vec<Vector> {
    strs.iter().map(|s| parse_vector(ctx, s).unwrap()).collect()
}
