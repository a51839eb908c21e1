use num_bigint::BigUint;

use super::plucker::k_subsets;
use crate::linalg::{Matrix, PrimeField};

/// A Schubert cell of the Grassmannian of `m`-dimensional subspaces of
/// F_p^{n+1}: all reduced row-echelon matrices with the given pivot columns.
///
/// Members are addressed by an index in `0..p^free.len()`, read as base-p
/// digits filling the free positions in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertCell {
    pub width: usize,
    pub pivots: Vec<usize>,
    pub free: Vec<(usize, usize)>,
}

impl SchubertCell {
    pub fn new(width: usize, pivots: Vec<usize>) -> Self {
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..width {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        Self { width, pivots, free }
    }

    pub fn size(&self, p: u32) -> BigUint {
        BigUint::from(p).pow(self.free.len() as u32)
    }

    /// The member with the given index. `index` must be below `size(p)`.
    pub fn member(&self, fp: PrimeField, mut index: u64) -> Matrix<PrimeField> {
        let p = fp.modulus() as u64;
        let mut m = Matrix::zeros(fp, self.pivots.len(), self.width);
        for (r, &pc) in self.pivots.iter().enumerate() {
            m.set(r, pc, 1);
        }
        for &(r, c) in &self.free {
            m.set(r, c, (index % p) as u32);
            index /= p;
        }
        m
    }
}

/// Cells covering the Grassmannian of `m`-dimensional subspaces of an
/// `width`-dimensional space, in lexicographic order of pivot sets.
pub fn schubert_cells(width: usize, m: usize) -> Vec<SchubertCell> {
    k_subsets(width, m)
        .into_iter()
        .map(|pivots| SchubertCell::new(width, pivots))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::plucker::gaussian_binomial;
    use crate::linalg::Field;
    use std::collections::HashSet;

    #[test]
    fn cells_partition_lines_of_p3_over_f3() {
        let fp = PrimeField::new(3).unwrap();
        let cells = schubert_cells(4, 2);
        let total: BigUint = cells.iter().map(|c| c.size(3)).sum();
        assert_eq!(total, gaussian_binomial(4, 2, 3));
        assert_eq!(total, BigUint::from(130u32));

        let mut seen = HashSet::new();
        for cell in &cells {
            let count = 3u64.pow(cell.free.len() as u32);
            for i in 0..count {
                let m = cell.member(fp, i);
                let r = m.rref();
                assert_eq!(r.reduced, m, "members are already reduced");
                assert_eq!(r.pivot_cols, cell.pivots);
                assert!(seen.insert(m.entries().to_vec()));
            }
        }
        assert_eq!(seen.len(), 130);
        let _ = fp.one();
    }

    #[test]
    fn cell_counts_match_product_formula() {
        for (width, m, p) in [(5usize, 2usize, 2u32), (5, 3, 3), (6, 3, 2), (3, 1, 5)] {
            let total: BigUint = schubert_cells(width, m).iter().map(|c| c.size(p)).sum();
            assert_eq!(total, gaussian_binomial(width as u32, m as u32, p as u64));
        }
    }
}
