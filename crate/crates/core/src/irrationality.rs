//! Bounds on the degree of irrationality and the degree of gonality of the
//! symmetric square C^(2), driven by a [`CurveProfile`].
//!
//! An upper bound is only reported when it comes from data the profile
//! actually determines. For arbitrary curves without δ data `hi` stays
//! empty instead of being guessed.

use serde::Serialize;
use thiserror::Error;

use crate::curves::{CurveClass, CurveProfile, ProfileError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),
    #[error("gonality is required for an arbitrary curve of genus {0}")]
    MissingGonality(u32),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

impl From<ProfileError> for BoundError {
    fn from(e: ProfileError) -> Self {
        match e {
            ProfileError::Inconsistent(m) => BoundError::InconsistentProfile(m),
        }
    }
}

/// Stable tags naming the result behind each side of an interval.
pub mod tags {
    pub const RATIONAL: &str = "rational_curve";
    pub const ELLIPTIC: &str = "elliptic_curve";
    pub const KFOLD_LOWER: &str = "kfold_lower";
    pub const HYPERELLIPTIC_LOW_GENUS: &str = "hyperelliptic_low_genus";
    pub const HYPERELLIPTIC_EXACT: &str = "hyperelliptic_exact";
    pub const VERY_GENERAL_LOWER: &str = "very_general_lower";
    pub const NON_HYPERELLIPTIC_LOWER: &str = "non_hyperelliptic_lower";
    pub const LINEAR_SERIES_UPPER: &str = "linear_series_upper";
    pub const ELLIPTIC_COVER_UPPER: &str = "elliptic_cover_upper";
    pub const GONALITY_EXACT: &str = "gonality_of_moving_curves";
    pub const GENUS_TWO: &str = "genus_two";
    pub const UNIRULED: &str = "uniruled";
    pub const COVERED_BY_COPIES: &str = "covered_by_copies_of_c";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundInterval {
    pub lo: u64,
    pub hi: Option<u64>,
    pub exact: bool,
    pub provenance: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
}

impl BoundInterval {
    fn exact(value: u64, tag: &str) -> Self {
        Self {
            lo: value,
            hi: Some(value),
            exact: true,
            provenance: vec![tag.to_string()],
            annotations: Vec::new(),
        }
    }
}

fn push_tag(v: &mut Vec<String>, tag: &str) {
    if !v.iter().any(|t| t == tag) {
        v.push(tag.to_string());
    }
}

/// Lower bound for non-hyperelliptic curves, listed by genus. `gon` raises
/// the bound from genus 7 on.
fn non_hyperelliptic_lower(g: u32, gon: Option<u32>) -> u64 {
    match g {
        3 | 4 => 3,
        5 => 4,
        6 => 5,
        _ => 6.max(gon.unwrap_or(0)) as u64,
    }
}

/// min{δ₁², δ₂(δ₂−1)/2, (δ₃−1)(δ₃−2)/2 − g} over the δ's that are known.
fn linear_series_upper(p: &CurveProfile) -> Option<u64> {
    let g = p.genus as i64;
    let mut candidates = Vec::new();
    if let Some(d1) = p.known_delta(1) {
        candidates.push((d1 as i64).pow(2));
    }
    if let Some(d2) = p.known_delta(2) {
        let d2 = d2 as i64;
        candidates.push(d2 * (d2 - 1) / 2);
    }
    if let Some(d3) = p.known_delta(3) {
        let d3 = d3 as i64;
        candidates.push((d3 - 1) * (d3 - 2) / 2 - g);
    }
    candidates.into_iter().min().map(|v| v.max(0) as u64)
}

/// Bounds on deg_r(C^(2)).
pub fn degirr_interval(p: &CurveProfile) -> Result<BoundInterval, BoundError> {
    p.validate()?;
    let g = p.genus;
    if g == 0 {
        return Ok(BoundInterval::exact(1, tags::RATIONAL));
    }
    if g == 1 {
        return Ok(BoundInterval::exact(2, tags::ELLIPTIC));
    }

    let gon = p.known_gonality();
    let hyperelliptic = match p.class {
        CurveClass::Hyperelliptic => Some(true),
        CurveClass::NonHyperelliptic | CurveClass::VeryGeneral => Some(false),
        CurveClass::Arbitrary => gon.map(|x| x == 2),
    };

    let mut lo_tags = vec![tags::KFOLD_LOWER.to_string()];
    let mut lo: u64 = 3;
    let mut annotations = Vec::new();

    match hyperelliptic {
        Some(true) if g >= 4 => {
            let mut out = BoundInterval::exact(4, tags::HYPERELLIPTIC_EXACT);
            push_tag(&mut out.provenance, tags::LINEAR_SERIES_UPPER);
            return Ok(out);
        }
        Some(true) => {
            push_tag(&mut lo_tags, tags::HYPERELLIPTIC_LOW_GENUS);
            annotations.push("exact value between 3 and 4 is open in genus 2 and 3".to_string());
        }
        Some(false) => {
            let nh = non_hyperelliptic_lower(g, gon);
            if nh >= lo {
                lo = nh;
                push_tag(&mut lo_tags, tags::NON_HYPERELLIPTIC_LOWER);
            }
            if p.class == CurveClass::VeryGeneral && g >= 4 && (g as u64 - 1) >= lo {
                lo = g as u64 - 1;
                push_tag(&mut lo_tags, tags::VERY_GENERAL_LOWER);
            }
        }
        None => {
            // either class is possible: take the weaker of the two
            let hyp = if g >= 4 { 4 } else { 3 };
            let nh = non_hyperelliptic_lower(g, None);
            lo = lo.max(hyp.min(nh));
            if lo > 3 {
                push_tag(&mut lo_tags, tags::HYPERELLIPTIC_EXACT);
                push_tag(&mut lo_tags, tags::NON_HYPERELLIPTIC_LOWER);
            }
        }
    }

    let mut hi = linear_series_upper(p);
    let mut hi_tags = Vec::new();
    if hi.is_some() {
        push_tag(&mut hi_tags, tags::LINEAR_SERIES_UPPER);
    }
    if let Some(d) = p.elliptic_cover_degree {
        let d = d as u64;
        if d >= 2 && g as u64 >= 2 * d * d + 2 {
            let bound = 2 * d * d;
            if hi.map_or(true, |h| bound < h) {
                hi = Some(bound);
                hi_tags = vec![tags::ELLIPTIC_COVER_UPPER.to_string()];
            }
            annotations.push(format!("degree {d} elliptic cover gives deg_r <= {bound} < g - 1 = {}", g - 1));
        }
    }
    if let Some(h) = hi {
        if h < lo {
            return Err(BoundError::InconsistentProfile(format!(
                "supplied data give upper bound {h} below lower bound {lo}"
            )));
        }
    }
    if p.class == CurveClass::VeryGeneral {
        if let Some(d2) = p.known_delta(2) {
            let conj = d2 as u64 * (d2 as u64 - 1) / 2;
            annotations.push(format!("conjectured value binomial(delta_2, 2) = {conj}, not used as a bound"));
        }
    }

    let exact = hi == Some(lo);
    let mut provenance = lo_tags;
    for t in hi_tags {
        push_tag(&mut provenance, &t);
    }
    Ok(BoundInterval {
        lo,
        hi,
        exact,
        provenance,
        annotations,
    })
}

/// deg_r(C^(k)) ≥ k + 1 for a curve of genus g ≥ k ≥ 2.
pub fn degirr_kfold_lower(g: u32, k: u32) -> Result<u32, BoundError> {
    if k < 2 || g < k {
        return Err(BoundError::BadParams(format!("need g >= k >= 2, got g = {g}, k = {k}")));
    }
    Ok(k + 1)
}

/// Bounds on deg_o(C^(k)), the least gonality of a curve through a general
/// point of C^(k).
pub fn deg_gonality(p: &CurveProfile, k: u32) -> Result<BoundInterval, BoundError> {
    p.validate()?;
    if k < 2 {
        return Err(BoundError::BadParams(format!("fold must be >= 2, got {k}")));
    }
    let g = p.genus;
    if k > g {
        // C^(k) is birational to J(C) × P^(k−g), which is uniruled
        return Ok(BoundInterval::exact(1, tags::UNIRULED));
    }
    if k == 2 && g == 2 {
        return Ok(BoundInterval::exact(2, tags::GENUS_TWO));
    }
    let gon = p.known_gonality().ok_or(BoundError::MissingGonality(g))?;
    if k == 2 {
        return Ok(BoundInterval::exact(gon as u64, tags::GONALITY_EXACT));
    }
    Ok(BoundInterval {
        lo: 1,
        hi: Some(gon as u64),
        exact: false,
        provenance: vec![tags::COVERED_BY_COPIES.to_string()],
        annotations: Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MovingGonality {
    pub bound: u32,
    /// Whether equality forces the moving curves to be copies of C
    /// (g ≥ 6 and Aut(C) trivial). `None` when automorphisms are unknown.
    pub rigidity_applies: Option<bool>,
}

/// Lower bound on the gonality of curves covering C^(2).
pub fn moving_gonality_lower(p: &CurveProfile) -> Result<MovingGonality, BoundError> {
    p.validate()?;
    let g = p.genus;
    if g < 3 {
        return Err(BoundError::BadParams(format!("genus must be >= 3, got {g}")));
    }
    let bound = p.known_gonality().ok_or(BoundError::MissingGonality(g))?;
    let rigidity_applies = if g < 6 || p.class == CurveClass::Hyperelliptic {
        Some(false)
    } else if p.class == CurveClass::VeryGeneral {
        Some(true)
    } else {
        p.trivial_automorphisms
    };
    Ok(MovingGonality {
        bound,
        rigidity_applies,
    })
}
