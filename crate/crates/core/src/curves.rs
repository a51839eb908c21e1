//! Brill–Noether arithmetic and the classical bounds on linear series.
//!
//! All functions are total. Where a bound only holds under hypotheses on the
//! curve (Martens needs a non-hyperelliptic curve of genus ≥ 5), the
//! profile-aware variant reports whether those hypotheses are met.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveClass {
    VeryGeneral,
    Hyperelliptic,
    NonHyperelliptic,
    Arbitrary,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("inconsistent profile: {0}")]
    Inconsistent(String),
}

/// What is known about a curve C of genus g.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProfile {
    pub genus: u32,
    pub class: CurveClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gonality: Option<u32>,
    /// δ_m for m ∈ {1, 2, 3}: δ₁ is the gonality, δ_m (m ≥ 2) the least
    /// degree of a birational map onto a non-degenerate curve of Pᵐ.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub delta: BTreeMap<u32, u32>,
    /// Degree of a covering C → E of an elliptic curve, if one is known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elliptic_cover_degree: Option<u32>,
    /// Whether Aut(C) is trivial, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial_automorphisms: Option<bool>,
}

impl CurveProfile {
    pub fn new(genus: u32, class: CurveClass) -> Self {
        Self {
            genus,
            class,
            gonality: None,
            delta: BTreeMap::new(),
            elliptic_cover_degree: None,
            trivial_automorphisms: None,
        }
    }

    pub fn with_gonality(mut self, gon: u32) -> Self {
        self.gonality = Some(gon);
        self
    }

    pub fn with_delta(mut self, m: u32, value: u32) -> Self {
        self.delta.insert(m, value);
        self
    }

    pub fn validate(&self) -> Result<(), ProfileError> {
        let g = self.genus;
        let bad = |m: String| Err(ProfileError::Inconsistent(m));
        if let Some(&m) = self.delta.keys().find(|m| !(1..=3).contains(*m)) {
            return bad(format!("delta index {m} outside 1..=3"));
        }
        if let (Some(gon), Some(&d1)) = (self.gonality, self.delta.get(&1)) {
            if gon != d1 {
                return bad(format!("gonality {gon} differs from delta_1 = {d1}"));
            }
        }
        if self.gonality == Some(0) {
            return bad("gonality must be positive".into());
        }
        match self.class {
            CurveClass::Hyperelliptic => {
                if g < 2 {
                    return bad(format!("hyperelliptic curves have genus >= 2, got {g}"));
                }
                if let Some(gon) = self.gonality {
                    if gon != 2 {
                        return bad(format!("hyperelliptic gonality is 2, got {gon}"));
                    }
                }
                if self.trivial_automorphisms == Some(true) {
                    return bad("hyperelliptic curves carry an involution".into());
                }
            }
            CurveClass::NonHyperelliptic => {
                if g < 3 {
                    return bad(format!("non-hyperelliptic curves have genus >= 3, got {g}"));
                }
                if let Some(gon) = self.gonality {
                    if gon < 3 {
                        return bad(format!("non-hyperelliptic gonality is >= 3, got {gon}"));
                    }
                }
            }
            CurveClass::VeryGeneral => {
                if g == 2 {
                    return bad("genus 2 curves are hyperelliptic".into());
                }
                if let Some(gon) = self.gonality {
                    if gon != generic_gonality(g) {
                        return bad(format!("very general gonality is {}, got {gon}", generic_gonality(g)));
                    }
                }
                for (&m, &v) in &self.delta {
                    let expected = generic_delta(g, m);
                    if expected != Some(v) {
                        return bad(format!("very general delta_{m} is {expected:?}, got {v}"));
                    }
                }
                if g >= 2 && self.elliptic_cover_degree.is_some() {
                    return bad("very general curves do not cover elliptic curves".into());
                }
                if g >= 3 && self.trivial_automorphisms == Some(false) {
                    return bad("very general curves of genus >= 3 have no automorphisms".into());
                }
            }
            CurveClass::Arbitrary => {
                if g == 2 {
                    return bad("genus 2 curves must be declared hyperelliptic".into());
                }
            }
        }
        Ok(())
    }

    /// Gonality from the profile, or from the class when it is forced.
    pub fn known_gonality(&self) -> Option<u32> {
        if let Some(gon) = self.gonality.or_else(|| self.delta.get(&1).copied()) {
            return Some(gon);
        }
        match (self.class, self.genus) {
            (_, 0) => Some(1),
            (_, 1 | 2) => Some(2),
            (CurveClass::Hyperelliptic, _) => Some(2),
            (CurveClass::VeryGeneral, g) => Some(generic_gonality(g)),
            _ => None,
        }
    }

    /// δ_m from the profile, or from the generic formulas for very general
    /// curves. δ₁ falls back to [`CurveProfile::known_gonality`].
    pub fn known_delta(&self, m: u32) -> Option<u32> {
        if m == 1 {
            return self.known_gonality();
        }
        if let Some(&v) = self.delta.get(&m) {
            return Some(v);
        }
        match self.class {
            CurveClass::VeryGeneral if self.genus >= 3 => generic_delta(self.genus, m),
            _ => None,
        }
    }
}

/// ρ(g, r, d) = g − (r+1)(g − d + r).
pub fn brill_noether_rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// Least d with ρ(g, r, d) ≥ 0, i.e. g + r − ⌊g/(r+1)⌋.
pub fn generic_min_degree(g: u32, r: u32) -> u32 {
    g + r - g / (r + 1)
}

/// Gonality of a very general curve of genus g.
pub fn generic_gonality(g: u32) -> u32 {
    match g {
        0 => 1,
        1 | 2 => 2,
        _ => (g + 3) / 2,
    }
}

/// δ_m of a very general curve of genus g ≥ 3.
pub fn generic_delta(g: u32, m: u32) -> Option<u32> {
    match m {
        1 => Some(generic_gonality(g)),
        2 | 3 => Some(generic_min_degree(g, m)),
        _ => None,
    }
}

/// Clifford: dim |D| ≤ deg D / 2 for special divisors.
pub fn clifford_max_dim(deg: u32) -> u32 {
    deg / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CliffordCase {
    /// dim |D| < deg D / 2.
    Strict,
    /// Equality with D = 0.
    ZeroDivisor,
    /// Equality with deg D = 2g − 2, forcing D canonical.
    Canonical,
    /// Equality with 0 < deg D < 2g − 2: only possible on hyperelliptic curves.
    ForcesHyperelliptic,
    /// dim |D| > deg D / 2: impossible for a special divisor.
    Exceeds,
}

/// Which case of Clifford's theorem a special divisor with these
/// numbers falls into.
pub fn clifford_case(g: u32, deg: u32, dim: u32) -> CliffordCase {
    let twice = 2 * dim;
    if twice > deg {
        CliffordCase::Exceeds
    } else if twice < deg {
        CliffordCase::Strict
    } else if deg == 0 {
        CliffordCase::ZeroDivisor
    } else if g >= 1 && deg == 2 * g - 2 {
        CliffordCase::Canonical
    } else {
        CliffordCase::ForcesHyperelliptic
    }
}

/// Martens: dim W^r_m(C) ≤ m − 2r − 1. A negative value means W^r_m is empty.
pub fn martens_bound(m: i64, r: i64) -> i64 {
    m - 2 * r - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MartensBound {
    pub dim_bound: i64,
    /// `Some(true)` if the curve is known to be non-hyperelliptic of genus
    /// ≥ 5, `Some(false)` if known not to be, `None` if unknown.
    pub hypotheses_met: Option<bool>,
}

pub fn martens_bound_for(profile: &CurveProfile, m: i64, r: i64) -> MartensBound {
    let g = profile.genus;
    let hypotheses_met = match profile.class {
        CurveClass::Hyperelliptic => Some(false),
        _ if g < 5 => Some(false),
        CurveClass::VeryGeneral | CurveClass::NonHyperelliptic => Some(true),
        CurveClass::Arbitrary => match profile.known_gonality() {
            Some(2) => Some(false),
            Some(_) => Some(true),
            None => None,
        },
    };
    MartensBound {
        dim_bound: martens_bound(m, r),
        hypotheses_met,
    }
}

/// Geometric Riemann–Roch: dim |D| = deg D − 1 − dim ⟨φ(D)⟩ for the
/// canonical image φ(D) of an effective divisor.
pub fn geometric_rr(deg: i64, span_dim: i64) -> i64 {
    deg - 1 - span_dim
}
