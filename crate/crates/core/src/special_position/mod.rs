//! Configurations of (k−1)-planes l₁, …, l_d ⊂ Pⁿ in *special position with
//! respect to (n−k)-planes*: every (n−k)-plane meeting all but one of the
//! l_i also meets the remaining one.
//!
//! [`decide`] is sound but incomplete. A `Special` verdict carries linear
//! dependencies among Plücker vectors; a `NotSpecial` verdict carries an
//! explicit (n−k)-plane. Anything else is `Undecided`. Over a prime field
//! [`oracle_ffield`] settles the question by exhaustive enumeration.

pub mod certificate;
pub mod config;
pub mod fixtures;
pub mod linear;
pub mod oracle;
pub mod span;
pub mod witness;

use rayon::prelude::*;

pub use certificate::{verify_dependencies, verify_witness, Certificate, Verdict};
pub use config::{Configuration, SpecialPositionError};
pub use fixtures::{gen_fixture, on_quadric_xw_yz, Family};
pub use linear::cb_linear_test;
pub use oracle::{oracle_ffield, OracleReport, ORACLE_LIMIT};
pub use span::{all_but_one_containment, check_span_bound, BoundStatus, SpanBound};
pub use witness::{sample_witness, sample_witness_indexed, search_tier, SearchTier};

use crate::linalg::Field;

/// Linear certificate first, then a witness search for each index in turn.
///
/// Searches for different indices run in parallel on the current rayon pool;
/// the reported witness is always the one for the lowest index that has
/// any, so the result depends only on `seed`.
pub fn decide<F: Field>(c: &Configuration<F>, trials: usize, seed: u64) -> Certificate<F> {
    if let Some(cert) = cb_linear_test(c) {
        return cert;
    }
    if search_tier(c).is_none() {
        return Certificate::Undecided { trials_used: 0 };
    }
    let found = (0..c.d()).into_par_iter().find_map_first(|j| {
        sample_witness(c, j, trials, seed)
            .expect("index in range")
            .map(|w| (j, w))
    });
    match found {
        Some((excluded_index, witness)) => Certificate::NotSpecial {
            excluded_index,
            witness,
        },
        None => Certificate::Undecided { trials_used: trials },
    }
}
