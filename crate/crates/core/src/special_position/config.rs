use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{reduce_matrix, Field, Matrix, PrimeField, Rationals};
use crate::projective::{ProjectiveError, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecialPositionError {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("index {index} out of range for {len} subspaces")]
    BadIndex { index: usize, len: usize },
    #[error("configuration has no linear special-position certificate")]
    NotCertified,
    #[error("oracle would enumerate {count} subspaces, above the limit {limit}")]
    TooLarge { count: String, limit: u64 },
    #[error("bad fixture parameters: {0}")]
    BadParams(String),
    #[error("configuration does not reduce modulo {0}")]
    NotReducible(u32),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
}

/// An ordered list of `d ≥ 2` projective (k−1)-planes of Pⁿ. Repeated
/// entries are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<F: Field> {
    n: usize,
    k: usize,
    subspaces: Vec<Subspace<F>>,
}

impl<F: Field> Configuration<F> {
    pub fn new(n: usize, k: usize, subspaces: Vec<Subspace<F>>) -> Result<Self, SpecialPositionError> {
        let invalid = |msg: String| Err(SpecialPositionError::InvalidConfiguration(msg));
        if k < 1 || k > n {
            return invalid(format!("need 1 <= k <= n, got k = {k}, n = {n}"));
        }
        if subspaces.len() < 2 {
            return invalid(format!("need at least two subspaces, got {}", subspaces.len()));
        }
        for (i, s) in subspaces.iter().enumerate() {
            if s.ambient_n() != n {
                return invalid(format!("subspace {i} lives in P^{}, expected P^{n}", s.ambient_n()));
            }
            if s.vector_dim() != k {
                return invalid(format!("subspace {i} has dimension {}, expected {}", s.dim(), k - 1));
            }
            if s.field() != subspaces[0].field() {
                return invalid(format!("subspace {i} is over a different field"));
            }
        }
        Ok(Self { n, k, subspaces })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.subspaces.len()
    }

    pub fn subspaces(&self) -> &[Subspace<F>] {
        &self.subspaces
    }

    pub fn field(&self) -> &F {
        self.subspaces[0].field()
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<(), SpecialPositionError> {
        if j >= self.d() {
            return Err(SpecialPositionError::BadIndex { index: j, len: self.d() });
        }
        Ok(())
    }

    /// Same configuration with the subspaces listed in the order `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let subspaces = perm.iter().map(|&i| self.subspaces[i].clone()).collect();
        Self { n: self.n, k: self.k, subspaces }
    }

    /// Image under an invertible linear change of coordinates.
    pub fn transformed(&self, m: &Matrix<F>) -> Result<Self, SpecialPositionError> {
        let subspaces = self
            .subspaces
            .iter()
            .map(|s| s.transform(m))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.n, self.k, subspaces)
    }
}

impl Configuration<Rationals> {
    /// Reduction modulo `p` of the stored (reduced row-echelon) bases.
    ///
    /// Pivot columns survive reduction, so dimensions are preserved whenever
    /// no denominator is divisible by `p`.
    pub fn reduce_mod(&self, fp: PrimeField) -> Result<Configuration<PrimeField>, SpecialPositionError> {
        let subspaces = self
            .subspaces
            .iter()
            .map(|s| {
                let m = reduce_matrix(s.basis(), fp).ok_or(SpecialPositionError::NotReducible(fp.modulus()))?;
                Ok(Subspace::new(self.n, &m)?)
            })
            .collect::<Result<Vec<_>, SpecialPositionError>>()?;
        Configuration::new(self.n, self.k, subspaces)
    }

    /// Whether every stored basis entry has a denominator prime to `p`.
    pub fn reduces_mod(&self, p: u32) -> bool {
        self.subspaces.iter().all(|s| {
            s.basis()
                .entries()
                .iter()
                .all(|x| !(x.denom() % p).is_zero())
        })
    }
}
