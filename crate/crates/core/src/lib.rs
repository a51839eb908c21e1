//! Exact computations around symmetric products of curves.
//!
//! * [`linalg`]: exact matrices over ℚ and F_p.
//! * [`projective`]: subspaces of Pⁿ, join and meet, Plücker coordinates and
//!   the determinantal incidence pairing.
//! * [`special_position`]: the Cayley–Bacharach type "special position"
//!   condition for configurations of (k−1)-planes, with certificates, a
//!   finite-field oracle and fixture generators.
//! * [`curves`]: Brill–Noether arithmetic, Clifford and Martens bounds.
//! * [`irrationality`]: bound tables for the degree of irrationality and the
//!   degree of gonality of C^(2) and C^(k).
//! * [`nefcone`]: the intersection form on N¹(C^(2)) and nef-cone slope
//!   certificates.
//! * [`io`]: JSON formats shared with the command-line tool.

pub mod curves;
pub mod io;
pub mod irrationality;
pub mod linalg;
pub mod nefcone;
pub mod projective;
pub mod rng;
pub mod special_position;

pub use linalg::{Field, FieldTag, Matrix, PrimeField, Rational, Rationals};
pub use projective::{PluckerVector, Subspace};
