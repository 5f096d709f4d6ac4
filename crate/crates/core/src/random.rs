//! Seeded randomness for property tests and randomized section choices.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::field::Field;
use crate::exactlin::matrix::Matrix;
use crate::exactlin::subspace::GradedDim;
use crate::superalg::maps::GradedLinearMap;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random invertible graded endomap, built per parity block as a product of
/// unit triangular matrices so no invertibility retry is needed.
pub fn random_graded_automorphism<R: Rng>(
    field: Field,
    dim: GradedDim,
    rng: &mut R,
) -> GradedLinearMap {
    let d = dim.total();
    let mut m = Matrix::identity(field, d);
    let mut fill_block = |lo: usize, hi: usize, rng: &mut R| {
        let k = hi - lo;
        if k == 0 {
            return;
        }
        let mut lower = Matrix::identity(field, k);
        let mut upper = Matrix::identity(field, k);
        for i in 0..k {
            for j in 0..i {
                lower[(i, j)] = random_unit_range(field, rng);
            }
            for j in (i + 1)..k {
                upper[(i, j)] = random_unit_range(field, rng);
            }
        }
        let block = lower.mul(&upper).unwrap();
        for i in 0..k {
            for j in 0..k {
                m[(lo + i, lo + j)] = block[(i, j)].clone();
            }
        }
    };
    fill_block(0, dim.even, rng);
    fill_block(dim.even, d, rng);
    GradedLinearMap::new(dim, dim, m).expect("blocks respect the grading")
}

fn random_unit_range<R: Rng>(field: Field, rng: &mut R) -> crate::exactlin::field::Scalar {
    match field {
        Field::Rationals => field.from_i64(rng.gen_range(-2..=2)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p.min(64)) as i64),
    }
}
