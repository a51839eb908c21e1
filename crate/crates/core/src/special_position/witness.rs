//! Randomized search for (n−k)-planes that refute special position.
//!
//! Two constructions are implemented:
//!
//! * **T2**, used when `d − 1 ≤ n − k + 1`: pick one point on each l_i
//!   (i ≠ j), span them and pad with random points up to dimension n − k.
//!   When two of the remaining subspaces meet, a point of their intersection
//!   may serve both, which keeps the span small enough for configurations
//!   such as the sides of a triangle.
//! * **T3**, for four lines of P³: through a random point p of a pivot line
//!   l_a, the line `join(p, l_b) ∩ join(p, l_c)` is the unique transversal
//!   from p to l_b and l_c.

use rand::seq::SliceRandom;
use rand::Rng;

use super::certificate::verify_witness;
use super::config::{Configuration, SpecialPositionError};
use crate::linalg::Field;
use crate::projective::Subspace;
use crate::rng::{random_point, random_point_on, seeded};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchTier {
    T2,
    T3,
}

/// Which construction (if any) applies to the configuration.
pub fn search_tier<F: Field>(c: &Configuration<F>) -> Option<SearchTier> {
    let (n, k, d) = (c.n(), c.k(), c.d());
    if d - 1 <= n - k + 1 {
        Some(SearchTier::T2)
    } else if k == 2 && n == 3 && d == 4 {
        Some(SearchTier::T3)
    } else {
        None
    }
}

/// Index of the first successful trial together with the witness.
pub fn sample_witness_indexed<F: Field>(
    c: &Configuration<F>,
    j: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<(usize, Subspace<F>)>, SpecialPositionError> {
    c.check_index(j)?;
    let Some(tier) = search_tier(c) else {
        return Ok(None);
    };
    let mut rng = seeded(seed, j as u64);
    for trial in 0..trials {
        let candidate = match tier {
            SearchTier::T2 => t2_candidate(c, j, &mut rng)?,
            SearchTier::T3 => t3_candidate(c, j, &mut rng)?,
        };
        if let Some(l) = candidate {
            if verify_witness(c, j, &l) {
                return Ok(Some((trial, l)));
            }
        }
    }
    Ok(None)
}

/// Searches for an (n−k)-plane meeting every l_i, i ≠ j, and missing l_j.
/// Deterministic in `seed`; returns `None` when the search tier does not
/// apply or every trial fails.
pub fn sample_witness<F: Field>(
    c: &Configuration<F>,
    j: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<Subspace<F>>, SpecialPositionError> {
    Ok(sample_witness_indexed(c, j, trials, seed)?.map(|(_, l)| l))
}

fn t2_candidate<F: Field, R: Rng>(
    c: &Configuration<F>,
    j: usize,
    rng: &mut R,
) -> Result<Option<Subspace<F>>, SpecialPositionError> {
    let target = c.n() - c.k();
    let ls = c.subspaces();
    let mut order: Vec<usize> = (0..c.d()).filter(|&i| i != j).collect();
    order.shuffle(rng);

    let mut span: Option<Subspace<F>> = None;
    for (pos, &i) in order.iter().enumerate() {
        if let Some(s) = &span {
            if s.incident(&ls[i])? {
                continue;
            }
        }
        let mut shared = None;
        if rng.gen_bool(0.75) {
            for &m in &order[pos + 1..] {
                let already = match &span {
                    Some(s) => s.incident(&ls[m])?,
                    None => false,
                };
                if already {
                    continue;
                }
                if let Some(meet) = ls[i].meet(&ls[m])? {
                    shared = Some(meet);
                    break;
                }
            }
        }
        let point = random_point_on(shared.as_ref().unwrap_or(&ls[i]), rng);
        span = Some(match span {
            None => point,
            Some(s) => s.join(&point)?,
        });
    }

    let mut span = span.expect("at least one other subspace");
    if span.dim() > target {
        return Ok(None);
    }
    while span.dim() < target {
        span = span.join(&random_point(c.field(), c.n(), rng))?;
    }
    Ok(Some(span))
}

fn t3_candidate<F: Field, R: Rng>(
    c: &Configuration<F>,
    j: usize,
    rng: &mut R,
) -> Result<Option<Subspace<F>>, SpecialPositionError> {
    let ls = c.subspaces();
    let others: Vec<usize> = (0..4).filter(|&i| i != j).collect();
    let (a, b, cc) = (others[0], others[1], others[2]);
    let p = random_point_on(&ls[a], rng);
    let plane_b = p.join(&ls[b])?;
    let plane_c = p.join(&ls[cc])?;
    if plane_b.dim() != 2 || plane_c.dim() != 2 {
        return Ok(None);
    }
    Ok(plane_b.meet(&plane_c)?.filter(|l| l.dim() == 1))
}
