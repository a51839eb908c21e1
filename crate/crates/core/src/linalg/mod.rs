//! Exact linear algebra over the rationals and over prime fields.
//!
//! Everything downstream (subspaces, Plücker coordinates, the special
//! position tests) reduces to [`Matrix::rref`] on one of the two
//! [`Field`] implementations. There is no floating point anywhere.

pub mod field;
pub mod matrix;

pub use field::{
    format_rational, int, is_prime, parse_rational, rat, Field, FieldError, FieldTag, PrimeField,
    Rational, Rationals,
};
pub use matrix::{Matrix, Rref, ShapeError};

/// Reduces a rational matrix modulo `p`; `None` if some denominator vanishes.
pub fn reduce_matrix(m: &Matrix<Rationals>, fp: PrimeField) -> Option<Matrix<PrimeField>> {
    let data = m
        .entries()
        .iter()
        .map(|x| fp.reduce(x))
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_vec(fp, m.rows(), m.cols(), data).expect("same shape"))
}
