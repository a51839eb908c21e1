//! Projective linear subspaces of Pⁿ and their Plücker coordinates.
//!
//! The Schubert incidence condition σ₁(L) = {l : l ∩ L ≠ ∅} is realized
//! two ways: by a rank test on stacked spanning matrices
//! ([`Subspace::incident`]), and, for complementary dimensions, by the
//! determinant [`incidence_pairing`], which is linear in the Plücker
//! coordinates of either argument.

pub mod cells;
pub mod plucker;
pub mod subspace;

pub use cells::{schubert_cells, SchubertCell};
pub use plucker::{
    gaussian_binomial, incidence_pairing, incidence_pairing_bilinear, k_subsets, plucker, raw_minors,
    PluckerVector,
};
pub use subspace::{ProjectiveError, Subspace};
