use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::subspace::{ProjectiveError, Subspace};
use crate::linalg::{Field, Matrix};

/// All `k`-subsets of `0..n`, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// Sign of the permutation listing `first` then `rest`, both sorted and
/// together covering `0..n`.
pub fn shuffle_sign(first: &[usize]) -> bool {
    // inversions = sum over t of (first[t] - t)
    let inversions: usize = first.iter().enumerate().map(|(t, &i)| i - t).sum();
    inversions % 2 == 0
}

/// Maximal minors of a k×(n+1) matrix over lexicographic column subsets,
/// without any rescaling.
pub fn raw_minors<F: Field>(m: &Matrix<F>) -> Vec<F::Elem> {
    k_subsets(m.cols(), m.rows())
        .iter()
        .map(|cols| m.select_cols(cols).determinant())
        .collect()
}

/// Plücker coordinates of a subspace, canonically scaled.
///
/// Coordinates are indexed by the `k`-subsets of `{0..n}` in lexicographic
/// order, where `k` is the vector dimension of the subspace. Over ℚ the
/// vector is integral with content 1 and first nonzero entry positive; over
/// F_p the first nonzero entry is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PluckerVector<F: Field> {
    pub ambient_n: usize,
    pub k: usize,
    pub coords: Vec<F::Elem>,
}

impl<F: Field> PluckerVector<F> {
    pub fn index_sets(&self) -> Vec<Vec<usize>> {
        k_subsets(self.ambient_n + 1, self.k)
    }

    /// Coordinate for an arbitrary ordered index list, alternating in its
    /// arguments (zero on repeats).
    pub fn signed_coord(&self, field: &F, indices: &[usize]) -> F::Elem {
        let mut idx = indices.to_vec();
        let mut even = true;
        // insertion sort, tracking parity
        for i in 1..idx.len() {
            let mut j = i;
            while j > 0 && idx[j - 1] > idx[j] {
                idx.swap(j - 1, j);
                even = !even;
                j -= 1;
            }
        }
        if idx.windows(2).any(|w| w[0] == w[1]) {
            return field.zero();
        }
        let pos = self
            .index_sets()
            .binary_search(&idx)
            .expect("indices lie in range");
        let v = self.coords[pos].clone();
        if even {
            v
        } else {
            field.neg(&v)
        }
    }

    /// Checks every Grassmann–Plücker quadric
    /// `Σ_t (-1)^t p[I + j_t] p[J - j_t] = 0` for |I| = k−1, |J| = k+1.
    pub fn satisfies_plucker_relations(&self, field: &F) -> bool {
        let n1 = self.ambient_n + 1;
        let k = self.k;
        if k == 0 || k >= n1 {
            return true;
        }
        for small in k_subsets(n1, k - 1) {
            for big in k_subsets(n1, k + 1) {
                let mut acc = field.zero();
                for t in 0..big.len() {
                    let mut a = small.clone();
                    a.push(big[t]);
                    let b: Vec<usize> = big.iter().enumerate().filter(|(s, _)| *s != t).map(|(_, &x)| x).collect();
                    let term = field.mul(&self.signed_coord(field, &a), &self.signed_coord(field, &b));
                    acc = if t % 2 == 0 { field.add(&acc, &term) } else { field.sub(&acc, &term) };
                }
                if !field.is_zero(&acc) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn plucker<F: Field>(s: &Subspace<F>) -> PluckerVector<F> {
    let mut coords = raw_minors(s.basis());
    s.field().normalize_projective(&mut coords);
    PluckerVector {
        ambient_n: s.ambient_n(),
        k: s.vector_dim(),
        coords,
    }
}

/// Determinant of the stacked spanning matrices of two subspaces of
/// complementary dimension (`dim l + dim big_l = n − 1`). Zero exactly when
/// they meet. Rows of `l` come first.
pub fn incidence_pairing<F: Field>(l: &Subspace<F>, big_l: &Subspace<F>) -> Result<F::Elem, ProjectiveError> {
    check_complementary(l, big_l)?;
    Ok(l.basis().stack(big_l.basis()).determinant())
}

/// Same quantity as [`incidence_pairing`], expanded as the bilinear form
/// `Σ_I ε(I, Iᶜ) p_I(l) p_{Iᶜ}(L)` on raw minors of the stored bases.
pub fn incidence_pairing_bilinear<F: Field>(l: &Subspace<F>, big_l: &Subspace<F>) -> Result<F::Elem, ProjectiveError> {
    check_complementary(l, big_l)?;
    let f = l.field();
    let n1 = l.ambient_n() + 1;
    let small = raw_minors(l.basis());
    let large = raw_minors(big_l.basis());
    let large_sets = k_subsets(n1, big_l.vector_dim());
    let mut acc = f.zero();
    for (i, set) in k_subsets(n1, l.vector_dim()).iter().enumerate() {
        let complement: Vec<usize> = (0..n1).filter(|c| !set.contains(c)).collect();
        let j = large_sets.binary_search(&complement).expect("complement is a valid subset");
        let term = f.mul(&small[i], &large[j]);
        acc = if shuffle_sign(set) { f.add(&acc, &term) } else { f.sub(&acc, &term) };
    }
    Ok(acc)
}

fn check_complementary<F: Field>(l: &Subspace<F>, big_l: &Subspace<F>) -> Result<(), ProjectiveError> {
    if l.ambient_n() != big_l.ambient_n() {
        return Err(ProjectiveError::AmbientMismatch(l.ambient_n(), big_l.ambient_n()));
    }
    if l.field() != big_l.field() {
        return Err(ProjectiveError::FieldMismatch);
    }
    if l.dim() + big_l.dim() + 1 != l.ambient_n() {
        return Err(ProjectiveError::DimensionMismatch(l.dim(), big_l.dim(), l.ambient_n()));
    }
    Ok(())
}

/// Number of `k`-dimensional linear subspaces of F_q^n.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigUint {
    assert!(k <= n, "k must not exceed n");
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n - i) - 1u32;
        den *= q.pow(i + 1) - 1u32;
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Rationals};

    fn sub(rows: &[&[i64]]) -> Subspace<Rationals> {
        let m = Matrix::from_i64_rows(Rationals, rows).unwrap();
        Subspace::new(m.cols() - 1, &m).unwrap()
    }

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(
            k_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(k_subsets(9, 4).len(), 126);
    }

    #[test]
    fn coordinate_line() {
        let p = plucker(&sub(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert_eq!(p.coords, vec![int(1), int(0), int(0), int(0), int(0), int(0)]);
    }

    #[test]
    fn minors_by_hand() {
        let p = plucker(&sub(&[&[1, 0, 0, 0], &[0, 0, 1, 1]]));
        // order: 01 02 03 12 13 23
        assert_eq!(p.coords, vec![int(0), int(1), int(1), int(0), int(0), int(0)]);
        assert!(p.satisfies_plucker_relations(&Rationals));
        let c = &p.coords;
        assert_eq!(&c[0] * &c[5] - &c[1] * &c[4] + &c[2] * &c[3], int(0));
    }

    #[test]
    fn pairing_examples() {
        let l = sub(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let skew = sub(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(incidence_pairing(&l, &skew).unwrap(), int(1));
        let concurrent = sub(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(incidence_pairing(&l, &concurrent).unwrap(), int(0));

        // cofactor expansion along the first row gives +2 for this stacking
        let a = sub(&[&[1, 0, 0, 0], &[0, 0, 1, 1]]);
        let b = sub(&[&[0, 1, 0, 0], &[0, 0, 1, -1]]);
        assert_eq!(incidence_pairing(&a, &b).unwrap(), int(2));
        assert_eq!(incidence_pairing_bilinear(&a, &b).unwrap(), int(2));
        assert!(!a.incident(&b).unwrap());

        let point = sub(&[&[1, 0, 0, 0]]);
        assert!(matches!(
            incidence_pairing(&l, &point),
            Err(ProjectiveError::DimensionMismatch(1, 0, 3))
        ));
    }

    #[test]
    fn gaussian_binomials() {
        for q in 2..7u64 {
            assert_eq!(gaussian_binomial(2, 1, q), BigUint::from(q + 1));
        }
        assert_eq!(gaussian_binomial(4, 2, 3), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(5, 0, 7), BigUint::one());
    }
}
