use super::config::Configuration;
use crate::linalg::Field;
use crate::projective::{incidence_pairing, plucker, Subspace};

/// Outcome of the special-position decision, with its evidence.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate<F: Field> {
    /// `dependencies[j][i]` is the coefficient of p(l_i) in an expression of
    /// p(l_j) through the other Plücker vectors; `dependencies[j][j]` is 0.
    Special { dependencies: Vec<Vec<F::Elem>> },
    /// An (n−k)-plane meeting every l_i with i ≠ j but missing l_j.
    NotSpecial { excluded_index: usize, witness: Subspace<F> },
    /// Neither a certificate nor a witness was found.
    Undecided { trials_used: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Special,
    NotSpecial,
    Undecided,
}

impl<F: Field> Certificate<F> {
    pub fn verdict(&self) -> Verdict {
        match self {
            Certificate::Special { .. } => Verdict::Special,
            Certificate::NotSpecial { .. } => Verdict::NotSpecial,
            Certificate::Undecided { .. } => Verdict::Undecided,
        }
    }

    /// Re-checks the evidence from scratch. `Undecided` carries none and
    /// always verifies.
    pub fn verify(&self, c: &Configuration<F>) -> bool {
        match self {
            Certificate::Special { dependencies } => verify_dependencies(c, dependencies),
            Certificate::NotSpecial {
                excluded_index,
                witness,
            } => verify_witness(c, *excluded_index, witness),
            Certificate::Undecided { .. } => true,
        }
    }
}

pub fn verify_dependencies<F: Field>(c: &Configuration<F>, dependencies: &[Vec<F::Elem>]) -> bool {
    let f = c.field();
    let d = c.d();
    if dependencies.len() != d {
        return false;
    }
    let points: Vec<_> = c.subspaces().iter().map(|s| plucker(s).coords).collect();
    let len = points[0].len();
    dependencies.iter().enumerate().all(|(j, coeffs)| {
        if coeffs.len() != d || !f.is_zero(&coeffs[j]) {
            return false;
        }
        (0..len).all(|t| {
            let combo = coeffs
                .iter()
                .zip(&points)
                .fold(f.zero(), |acc, (a, p)| f.add(&acc, &f.mul(a, &p[t])));
            combo == points[j][t]
        })
    })
}

/// Checks that `witness` is an (n−k)-plane meeting every l_i except l_j.
/// Incidence is decided by the determinantal pairing.
pub fn verify_witness<F: Field>(c: &Configuration<F>, j: usize, witness: &Subspace<F>) -> bool {
    if j >= c.d() || witness.ambient_n() != c.n() || witness.dim() != c.n() - c.k() || witness.field() != c.field() {
        return false;
    }
    let f = c.field();
    c.subspaces().iter().enumerate().all(|(i, l)| {
        let pairing = incidence_pairing(l, witness).expect("complementary dimensions");
        if i == j {
            !f.is_zero(&pairing)
        } else {
            f.is_zero(&pairing)
        }
    })
}
