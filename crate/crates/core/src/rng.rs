//! Seeded sampling of points and subspaces.
//!
//! Random points are integer combinations of basis rows with coefficients in
//! `[-COEFF_BOUND, COEFF_BOUND]`; the zero combination is resampled.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Field, Matrix};
use crate::projective::Subspace;

pub const COEFF_BOUND: i64 = 100;

/// Deterministic generator for `(seed, stream)`.
pub fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_coeffs<R: Rng>(rng: &mut R, len: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// A random nonzero vector of the subspace.
pub fn random_vector_in<F: Field, R: Rng>(s: &Subspace<F>, rng: &mut R) -> Vec<F::Elem> {
    let f = s.field();
    loop {
        let coeffs: Vec<F::Elem> = random_coeffs(rng, s.vector_dim())
            .into_iter()
            .map(|c| f.from_i64(c))
            .collect();
        let v = s.basis().transpose().mul_vec(&coeffs);
        if v.iter().any(|x| !f.is_zero(x)) {
            return v;
        }
    }
}

pub fn random_point_on<F: Field, R: Rng>(s: &Subspace<F>, rng: &mut R) -> Subspace<F> {
    Subspace::point(s.field().clone(), random_vector_in(s, rng)).expect("nonzero vector")
}

/// A random point of the whole ambient space.
pub fn random_point<F: Field, R: Rng>(field: &F, ambient_n: usize, rng: &mut R) -> Subspace<F> {
    random_point_on(&Subspace::whole(field.clone(), ambient_n), rng)
}

/// Random `rows × cols` integer matrix with entries in `[-bound, bound]`.
pub fn random_matrix<F: Field, R: Rng>(field: &F, rows: usize, cols: usize, bound: i64, rng: &mut R) -> Matrix<F> {
    let data = (0..rows * cols).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect();
    Matrix::from_vec(field.clone(), rows, cols, data).expect("shape")
}

/// Random invertible `n × n` integer matrix.
pub fn random_invertible<F: Field, R: Rng>(field: &F, n: usize, bound: i64, rng: &mut R) -> Matrix<F> {
    loop {
        let m = random_matrix(field, n, n, bound, rng);
        if !field.is_zero(&m.determinant()) {
            return m;
        }
    }
}
