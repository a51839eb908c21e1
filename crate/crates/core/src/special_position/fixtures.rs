use rand::Rng;

use super::config::{Configuration, SpecialPositionError};
use crate::linalg::{Field, Matrix, Rationals};
use crate::projective::Subspace;
use crate::rng::seeded;

/// Coordinate range for `random_skew` lines.
const SKEW_BOUND: i64 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// d distinct lines through e0 inside the plane spanned by e0, e1, e2.
    Pencil { d: usize, n: usize },
    /// Lines span{(1,t,0,0), (0,0,1,t)}, t = 0..d−1, on the quadric xw = yz.
    QuadricRuling { d: usize },
    /// Lines span{(1,t,0,…,0), (0,0,1,t,…,t^{d−3})}, t = 0..d−1, on the
    /// rational normal scroll of degree d − 2 in P^{d−1}.
    Scroll { d: usize },
    /// The three sides of the coordinate triangle in the plane w = 0 of P³.
    Triangle,
    /// d pairwise skew lines of Pⁿ with small random integer coordinates.
    RandomSkew { d: usize, n: usize, seed: u64 },
}

fn line(n: usize, a: Vec<i64>, b: Vec<i64>) -> Subspace<Rationals> {
    debug_assert_eq!(a.len(), n + 1);
    let m = Matrix::from_i64_rows(Rationals, &[&a, &b]).expect("equal widths");
    Subspace::new(n, &m).expect("nonzero rows")
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[i] = 1;
    v
}

pub fn gen_fixture(family: Family) -> Result<Configuration<Rationals>, SpecialPositionError> {
    let bad = |msg: &str| Err(SpecialPositionError::BadParams(msg.to_string()));
    match family {
        Family::Pencil { d, n } => {
            if d < 2 || n < 3 {
                return bad("pencil needs d >= 2 and n >= 3");
            }
            let mut lines = vec![line(n, unit(n, 0), unit(n, 1)), line(n, unit(n, 0), unit(n, 2))];
            for t in 1..=(d as i64 - 2) {
                let mut dir = unit(n, 1);
                dir[2] = t;
                lines.push(line(n, unit(n, 0), dir));
            }
            Configuration::new(n, 2, lines)
        }
        Family::QuadricRuling { d } => {
            if d < 2 {
                return bad("quadric ruling needs d >= 2");
            }
            let lines = (0..d as i64).map(|t| line(3, vec![1, t, 0, 0], vec![0, 0, 1, t])).collect();
            Configuration::new(3, 2, lines)
        }
        Family::Scroll { d } => {
            if d < 4 {
                return bad("scroll needs d >= 4");
            }
            let n = d - 1;
            let lines = (0..d as i64)
                .map(|t| {
                    let mut a = vec![0; d];
                    a[0] = 1;
                    a[1] = t;
                    let mut b = vec![0; d];
                    let mut pow = 1;
                    for slot in b.iter_mut().skip(2) {
                        *slot = pow;
                        pow *= t;
                    }
                    line(n, a, b)
                })
                .collect();
            Configuration::new(n, 2, lines)
        }
        Family::Triangle => {
            let n = 3;
            Configuration::new(
                n,
                2,
                vec![
                    line(n, unit(n, 0), unit(n, 1)),
                    line(n, unit(n, 1), unit(n, 2)),
                    line(n, unit(n, 0), unit(n, 2)),
                ],
            )
        }
        Family::RandomSkew { d, n, seed } => {
            if d < 2 || n < 3 {
                return bad("random skew lines need d >= 2 and n >= 3");
            }
            let mut rng = seeded(seed, 0);
            let mut lines: Vec<Subspace<Rationals>> = Vec::with_capacity(d);
            while lines.len() < d {
                let rows: Vec<Vec<i64>> = (0..2)
                    .map(|_| (0..=n).map(|_| rng.gen_range(-SKEW_BOUND..=SKEW_BOUND)).collect())
                    .collect();
                let m = Matrix::from_i64_rows(Rationals, &[&rows[0], &rows[1]]).expect("widths");
                let Ok(l) = Subspace::new(n, &m) else { continue };
                if l.dim() != 1 {
                    continue;
                }
                let mut skew = true;
                for other in &lines {
                    if l.incident(other)? {
                        skew = false;
                        break;
                    }
                }
                if skew {
                    lines.push(l);
                }
            }
            Configuration::new(n, 2, lines)
        }
    }
}

/// Whether the four lines of P³ lie on the quadric xw − yz = 0.
pub fn on_quadric_xw_yz(c: &Configuration<Rationals>) -> bool {
    let f = Rationals;
    c.subspaces().iter().all(|l| {
        // a line lies on a quadric iff the quadric vanishes at three of its points
        let b = l.basis();
        let pts = [
            b.row(0).to_vec(),
            b.row(1).to_vec(),
            b.row(0).iter().zip(b.row(1)).map(|(x, y)| f.add(x, y)).collect::<Vec<_>>(),
        ];
        pts.iter().all(|p| f.is_zero(&f.sub(&f.mul(&p[0], &p[3]), &f.mul(&p[1], &p[2]))))
    })
}
