use super::certificate::Certificate;
use super::config::Configuration;
use crate::linalg::{Field, Matrix};
use crate::projective::plucker;

/// Sufficient test for special position.
///
/// Every Schubert divisor σ₁(L) is a hyperplane section in Plücker space:
/// l meets L iff a linear form in p(l) vanishes. If each p(l_j) lies in the
/// span of the others, a form vanishing on all but one Plücker point
/// vanishes on the last, so the configuration is special. Returns the
/// dependency coefficients, or `None` as soon as some p(l_j) is outside the
/// span of the rest.
pub fn cb_linear_test<F: Field>(c: &Configuration<F>) -> Option<Certificate<F>> {
    let f = c.field();
    let points: Vec<Vec<F::Elem>> = c.subspaces().iter().map(|s| plucker(s).coords).collect();
    let len = points[0].len();
    let d = points.len();
    let mut dependencies = Vec::with_capacity(d);
    for j in 0..d {
        let others: Vec<usize> = (0..d).filter(|&i| i != j).collect();
        let mut columns = Matrix::zeros(f.clone(), len, others.len());
        for (col, &i) in others.iter().enumerate() {
            for (t, x) in points[i].iter().enumerate() {
                columns.set(t, col, x.clone());
            }
        }
        let solution = columns.solve_linear(&points[j])?;
        let mut coeffs = vec![f.zero(); d];
        for (x, &i) in solution.into_iter().zip(&others) {
            coeffs[i] = x;
        }
        dependencies.push(coeffs);
    }
    Some(Certificate::Special { dependencies })
}
