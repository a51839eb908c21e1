use serde::Serialize;

use super::config::{Configuration, SpecialPositionError};
use super::linear::cb_linear_test;
use crate::linalg::Field;
use crate::projective::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Holds,
    Violated,
    /// k = 1: the bound is false for points (three collinear points are
    /// special yet span a line).
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpanBound {
    pub span_dim: usize,
    /// ⌊kd/2⌋ − 1.
    pub bound: i64,
    pub status: BoundStatus,
}

/// Dimension of the joint span of a configuration against ⌊kd/2⌋ − 1.
///
/// For special configurations with k ≥ 2 the span never exceeds the
/// bound. When d > n the bound is at least n, so it holds trivially.
pub fn check_span_bound<F: Field>(c: &Configuration<F>) -> SpanBound {
    let span = Subspace::join_all(c.subspaces())
        .expect("configuration subspaces are compatible")
        .expect("configuration is nonempty");
    let span_dim = span.dim();
    let bound = (c.k() * c.d() / 2) as i64 - 1;
    let status = if c.k() < 2 {
        BoundStatus::NotApplicable
    } else if span_dim as i64 <= bound {
        BoundStatus::Holds
    } else {
        BoundStatus::Violated
    };
    SpanBound { span_dim, bound, status }
}

/// Whether l_j lies in the join R of the other subspaces.
///
/// For special configurations this is always true. With `strict` set the
/// configuration must carry a linear certificate, otherwise
/// [`SpecialPositionError::NotCertified`] is returned.
pub fn all_but_one_containment<F: Field>(
    c: &Configuration<F>,
    j: usize,
    strict: bool,
) -> Result<bool, SpecialPositionError> {
    c.check_index(j)?;
    if strict && cb_linear_test(c).is_none() {
        return Err(SpecialPositionError::NotCertified);
    }
    let others = c.subspaces().iter().enumerate().filter(|(i, _)| *i != j).map(|(_, s)| s);
    let rest = Subspace::join_all(others)?.expect("d >= 2");
    Ok(c.subspaces()[j].is_contained_in(&rest)?)
}
