use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::config::{Configuration, SpecialPositionError};
use crate::linalg::{Field, PrimeField};
use crate::projective::{gaussian_binomial, schubert_cells, Subspace};

/// Upper limit on the number of (n−k)-planes the oracle will visit.
pub const ORACLE_LIMIT: u64 = 10_000_000;

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub special: bool,
    pub planes_enumerated: u64,
    /// First (in enumeration order) plane meeting all subspaces but one,
    /// with the index of the missed subspace.
    pub counterexample: Option<(usize, Subspace<PrimeField>)>,
}

/// Exhaustive check of special position over F_p.
///
/// Visits every (n−k)-plane of Pⁿ(F_p) exactly once by walking the Schubert
/// cells of the Grassmannian, and reports whether any of them meets all but
/// exactly one of the configuration's subspaces.
pub fn oracle_ffield(c: &Configuration<PrimeField>) -> Result<OracleReport, SpecialPositionError> {
    let fp = *c.field();
    let p = fp.modulus();
    let (n, k) = (c.n(), c.k());
    let width = n + 1;
    let m = n - k + 1;
    let expected = gaussian_binomial(width as u32, m as u32, p as u64);
    if expected > BigUint::from(ORACLE_LIMIT) {
        return Err(SpecialPositionError::TooLarge {
            count: expected.to_string(),
            limit: ORACLE_LIMIT,
        });
    }

    let cells = schubert_cells(width, m);
    let mut jobs = Vec::new();
    for (ci, cell) in cells.iter().enumerate() {
        let size = cell.size(p).to_u64().expect("bounded by the oracle limit");
        let mut start = 0;
        while start < size {
            let end = (start + CHUNK).min(size);
            jobs.push((ci, start, end));
            start = end;
        }
    }

    let results: Vec<(u64, Option<(usize, u64, usize)>)> = jobs
        .par_iter()
        .map(|&(ci, start, end)| {
            let cell = &cells[ci];
            let mut first = None;
            for idx in start..end {
                let plane = cell.member(fp, idx);
                let mut missed = None;
                let mut misses = 0;
                for (i, l) in c.subspaces().iter().enumerate() {
                    let det = l.basis().stack(&plane).determinant();
                    if !fp.is_zero(&det) {
                        misses += 1;
                        missed = Some(i);
                        if misses > 1 {
                            break;
                        }
                    }
                }
                if misses == 1 && first.is_none() {
                    first = Some((ci, idx, missed.expect("one miss")));
                }
            }
            (end - start, first)
        })
        .collect();

    let visited: u64 = results.iter().map(|r| r.0).sum();
    let first = results.iter().find_map(|r| r.1);
    let counterexample = first.map(|(ci, idx, j)| {
        let plane = cells[ci].member(fp, idx);
        (j, Subspace::new(n, &plane).expect("cell members have full rank"))
    });
    Ok(OracleReport {
        special: counterexample.is_none(),
        planes_enumerated: visited,
        counterexample,
    })
}
