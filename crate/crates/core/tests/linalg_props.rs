use proptest::prelude::*;
use symprod_core::linalg::{reduce_matrix, Field, Matrix, PrimeField, Rationals};

fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn to_matrix<F: Field>(field: F, rows: &[Vec<i64>]) -> Matrix<F> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64_rows(field, &refs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_of_transpose(rows in int_matrix(5, 6)) {
        let m = to_matrix(Rationals, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_is_idempotent(rows in int_matrix(5, 6)) {
        let m = to_matrix(Rationals, &rows);
        let r = m.rref();
        let again = r.reduced.rref();
        prop_assert_eq!(&again.reduced, &r.reduced);
        prop_assert_eq!(again.pivot_cols, r.pivot_cols.clone());
        prop_assert!(r.pivot_cols.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(r.rank, r.pivot_cols.len());
    }

    #[test]
    fn kernel_is_annihilated_and_complete(rows in int_matrix(5, 6)) {
        let m = to_matrix(Rationals, &rows);
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows(), m.cols() - m.rank());
        for v in k.row_iter() {
            prop_assert!(m.mul_vec(v).iter().all(|x| Rationals.is_zero(x)));
        }
        if k.rows() > 0 {
            prop_assert_eq!(k.rank(), k.rows());
        }
    }

    #[test]
    fn solve_linear_is_exact(rows in int_matrix(5, 5), x in prop::collection::vec(-5i64..=5, 5)) {
        let m = to_matrix(Rationals, &rows);
        let x: Vec<_> = x[..m.cols()].iter().map(|&v| Rationals.from_i64(v)).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve_linear(&b).expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn determinant_is_multiplicative(a in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
                                     b in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3)) {
        let (a, b) = (to_matrix(Rationals, &a), to_matrix(Rationals, &b));
        prop_assert_eq!(a.mul(&b).determinant(), Rationals.mul(&a.determinant(), &b.determinant()));
        prop_assert_eq!(a.determinant() == Rationals.zero(), a.rank() < 3);
    }

    #[test]
    fn reduction_never_raises_rank(rows in int_matrix(4, 5), p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let m = to_matrix(Rationals, &rows);
        let fp = PrimeField::new(p).unwrap();
        let reduced = reduce_matrix(&m, fp).unwrap();
        prop_assert!(reduced.rank() <= m.rank());
        prop_assert_eq!(reduced, to_matrix(fp, &rows));
    }

    #[test]
    fn prime_field_rank_of_transpose(rows in int_matrix(5, 6), p in prop::sample::select(vec![2u64, 3, 13])) {
        let m = to_matrix(PrimeField::new(p).unwrap(), &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows(), m.cols() - m.rank());
    }
}

#[test]
fn spec_examples() {
    let id = Matrix::identity(Rationals, 3);
    let r = id.rref();
    assert_eq!((r.reduced, r.rank, r.pivot_cols), (id.clone(), 3, vec![0, 1, 2]));
    assert_eq!(id.kernel_basis().rows(), 0);

    let m = to_matrix(Rationals, &[vec![1, 2], vec![2, 4]]);
    let r = m.rref();
    assert_eq!((r.rank, r.pivot_cols), (1, vec![0]));
    let k = m.kernel_basis();
    assert_eq!(k.rows(), 1);
    assert!(in_row_space(&k, &[2, -1]));

    let m = to_matrix(Rationals, &[vec![1, 2], vec![3, 4]]);
    assert_eq!(m.rank(), 2);
    assert_eq!(m.determinant(), Rationals.from_i64(-2));

    let m = to_matrix(Rationals, &[vec![1, 1]]);
    let k = m.kernel_basis();
    assert!(in_row_space(&k, &[1, -1]));

    let m = to_matrix(Rationals, &[vec![1, 1], vec![1, 1]]);
    assert_eq!(m.solve_linear(&[Rationals.from_i64(1), Rationals.from_i64(2)]), None);
}

fn in_row_space(basis: &Matrix<Rationals>, v: &[i64]) -> bool {
    let row = to_matrix(Rationals, &[v.to_vec()]);
    basis.stack(&row).rank() == basis.rank()
}
