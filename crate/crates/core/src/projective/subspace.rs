use thiserror::Error;

use crate::linalg::{Field, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectiveError {
    #[error("every spanning row is zero")]
    AllZero,
    #[error("rows have {got} columns, expected {expected} for P^{ambient_n}")]
    WidthMismatch {
        ambient_n: usize,
        expected: usize,
        got: usize,
    },
    #[error("subspaces live in P^{0} and P^{1}")]
    AmbientMismatch(usize, usize),
    #[error("subspaces live over different fields")]
    FieldMismatch,
    #[error("dimensions {0} and {1} are not complementary in P^{2}")]
    DimensionMismatch(usize, usize, usize),
}

/// Projective linear subspace of Pⁿ.
///
/// The spanning matrix is kept in reduced row-echelon form with no zero
/// rows, so two subspaces are equal exactly when their stored matrices are.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F: Field> {
    ambient_n: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Span of the given rows. Dependent rows are dropped.
    pub fn new(ambient_n: usize, rows: &Matrix<F>) -> Result<Self, ProjectiveError> {
        if rows.cols() != ambient_n + 1 {
            return Err(ProjectiveError::WidthMismatch {
                ambient_n,
                expected: ambient_n + 1,
                got: rows.cols(),
            });
        }
        let rref = rows.rref();
        if rref.rank == 0 {
            return Err(ProjectiveError::AllZero);
        }
        let kept: Vec<Vec<F::Elem>> = rref.reduced.row_iter().take(rref.rank).map(<[_]>::to_vec).collect();
        let basis = Matrix::from_rows(rows.field().clone(), ambient_n + 1, kept).expect("consistent width");
        Ok(Self { ambient_n, basis })
    }

    pub fn from_rows(field: F, ambient_n: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, ProjectiveError> {
        let got = rows.first().map_or(ambient_n + 1, Vec::len);
        let m = Matrix::from_rows(field, ambient_n + 1, rows).map_err(|_| ProjectiveError::WidthMismatch {
            ambient_n,
            expected: ambient_n + 1,
            got,
        })?;
        Self::new(ambient_n, &m)
    }

    pub fn point(field: F, coords: Vec<F::Elem>) -> Result<Self, ProjectiveError> {
        let n = coords.len().checked_sub(1).ok_or(ProjectiveError::AllZero)?;
        Self::from_rows(field, n, vec![coords])
    }

    /// All of Pⁿ.
    pub fn whole(field: F, ambient_n: usize) -> Self {
        let basis = Matrix::identity(field, ambient_n + 1);
        Self { ambient_n, basis }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.basis.rows() - 1
    }

    /// Dimension of the underlying vector space.
    pub fn vector_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ProjectiveError> {
        if self.ambient_n != other.ambient_n {
            return Err(ProjectiveError::AmbientMismatch(self.ambient_n, other.ambient_n));
        }
        if self.field() != other.field() {
            return Err(ProjectiveError::FieldMismatch);
        }
        Ok(())
    }

    /// Smallest subspace containing both.
    pub fn join(&self, other: &Self) -> Result<Self, ProjectiveError> {
        self.check_compatible(other)?;
        Self::new(self.ambient_n, &self.basis.stack(&other.basis))
    }

    /// Join of a nonempty list of subspaces.
    pub fn join_all<'a, I>(items: I) -> Result<Option<Self>, ProjectiveError>
    where
        I: IntoIterator<Item = &'a Self>,
        F: 'a,
    {
        let mut acc: Option<Self> = None;
        for s in items {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => a.join(s)?,
            });
        }
        Ok(acc)
    }

    /// Intersection, or `None` when the subspaces are disjoint.
    pub fn meet(&self, other: &Self) -> Result<Option<Self>, ProjectiveError> {
        self.check_compatible(other)?;
        // (x, y) with x*A + y*B = 0 gives x*A in both row spaces.
        let stacked = self.basis.stack(&other.basis);
        let relations = stacked.transpose().kernel_basis();
        if relations.is_empty() {
            return Ok(None);
        }
        let f = self.field();
        let a = self.vector_dim();
        let coeffs: Vec<Vec<F::Elem>> = relations.row_iter().map(|r| r[..a].to_vec()).collect();
        let coeffs = Matrix::from_rows(f.clone(), a, coeffs).expect("consistent width");
        Self::new(self.ambient_n, &coeffs.mul(&self.basis)).map(Some)
    }

    /// Whether the two subspaces share a point.
    pub fn incident(&self, other: &Self) -> Result<bool, ProjectiveError> {
        self.check_compatible(other)?;
        let rank = self.basis.stack(&other.basis).rank();
        Ok(rank < self.vector_dim() + other.vector_dim())
    }

    /// Whether `self` is contained in `other`.
    pub fn is_contained_in(&self, other: &Self) -> Result<bool, ProjectiveError> {
        self.check_compatible(other)?;
        Ok(self.basis.stack(&other.basis).rank() == other.vector_dim())
    }

    /// Whether a nonzero vector lies in the subspace.
    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        let row = Matrix::from_rows(self.field().clone(), self.ambient_n + 1, vec![v.to_vec()]).expect("width");
        self.basis.stack(&row).rank() == self.vector_dim()
    }

    /// Image under the linear map `v ↦ v·Mᵀ`, with `M` an invertible
    /// (n+1)×(n+1) matrix acting on column vectors.
    pub fn transform(&self, m: &Matrix<F>) -> Result<Self, ProjectiveError> {
        Self::new(self.ambient_n, &self.basis.mul(&m.transpose()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Rationals, PrimeField};

    fn sub(n: usize, rows: &[&[i64]]) -> Subspace<Rationals> {
        Subspace::new(n, &Matrix::from_i64_rows(Rationals, rows).unwrap()).unwrap()
    }

    #[test]
    fn make_subspace_examples() {
        let l = sub(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(l.basis(), &Matrix::from_i64_rows(Rationals, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap());
        assert_eq!(l.dim(), 1);

        let p = sub(3, &[&[1, 0, 0, 0], &[2, 0, 0, 0]]);
        assert_eq!(p.dim(), 0);
        assert_eq!(p, sub(3, &[&[1, 0, 0, 0]]));

        assert_eq!(sub(3, &[&[1, 1, 0, 0], &[1, 0, 0, 0]]), l);

        let zero = Matrix::from_i64_rows(Rationals, &[&[0, 0, 0, 0]]).unwrap();
        assert_eq!(Subspace::new(3, &zero), Err(ProjectiveError::AllZero));
        let narrow = Matrix::from_i64_rows(Rationals, &[&[1, 0, 0]]).unwrap();
        assert!(matches!(Subspace::new(3, &narrow), Err(ProjectiveError::WidthMismatch { .. })));
    }

    #[test]
    fn join_examples() {
        let l = sub(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(l.join(&l).unwrap(), l);
        let m = sub(3, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(l.join(&m).unwrap(), Subspace::whole(Rationals, 3));
        let other = sub(4, &[&[1, 0, 0, 0, 0]]);
        assert_eq!(l.join(&other), Err(ProjectiveError::AmbientMismatch(3, 4)));
    }

    #[test]
    fn meet_examples() {
        let l = sub(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(l.meet(&l).unwrap(), Some(l.clone()));
        let skew = sub(3, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(l.meet(&skew).unwrap(), None);
        let m = sub(3, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(l.meet(&m).unwrap(), Some(sub(3, &[&[1, 0, 0, 0]])));
    }

    #[test]
    fn incident_examples() {
        let l = sub(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(l.incident(&l).unwrap());
        assert!(!l.incident(&sub(3, &[&[0, 0, 1, 0], &[0, 0, 0, 1]])).unwrap());
        let plane = sub(3, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(l.incident(&plane).unwrap());
    }

    #[test]
    fn field_mismatch_detected() {
        let f3 = PrimeField::new(3).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        let a = Subspace::point(f3, vec![1, 0]).unwrap();
        let b = Subspace::point(f5, vec![1, 0]).unwrap();
        assert_eq!(a.join(&b), Err(ProjectiveError::FieldMismatch));
    }

    #[test]
    fn containment() {
        let p = sub(3, &[&[1, 1, 0, 0]]);
        let l = sub(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(p.is_contained_in(&l).unwrap());
        assert!(!l.is_contained_in(&p).unwrap());
    }
}
