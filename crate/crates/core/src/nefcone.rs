//! The Néron–Severi plane of C^(2) and certificates bounding the slope τ(C)
//! of its nef cone.
//!
//! N¹(C^(2)) is spanned by x (the class of C + p) and δ/2 (half the
//! diagonal), with x² = 1, x·δ/2 = 1 and (δ/2)² = 1 − g. The nef cone is
//! bounded by (g−1)x − δ/2 and (τ(C)+1)x − δ/2, and τ(C) ≥ √g.
//!
//! A pair (a, b) certifies τ(C) ≤ a/b for a very general curve C of genus g
//! when a/b ≥ τ(D) for a very general curve D of genus g − 1 and the class
//! L = (a+b)x − b·δ/2 on D^(2) satisfies L² > 0 together with
//!
//! ```text
//! f(m) = L²·(m² − m + c) − (b·m − 1)² > 0   for every integer m ≥ 2,
//! ```
//!
//! where c bounds from below the gonality of curves through a general point
//! of D^(2). Positivity of f is decided exactly, from the discriminant or by
//! evaluating f on the finitely many integers up to its larger root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::generic_gonality;
use crate::linalg::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NefConeError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("no valid certificate with b <= {0}")]
    NoCertificate(u64),
}

/// coeff_x · x + coeff_half_delta · (δ/2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NSClass {
    pub coeff_x: Rational,
    pub coeff_half_delta: Rational,
}

impl NSClass {
    pub fn new(coeff_x: Rational, coeff_half_delta: Rational) -> Self {
        Self {
            coeff_x,
            coeff_half_delta,
        }
    }

    /// The class (a + b)x − b·δ/2.
    pub fn from_ab(a: &Rational, b: &Rational) -> Self {
        Self::new(a + b, -b.clone())
    }
}

/// Intersection product on N¹(C^(2)) for a curve of genus g.
pub fn intersect(u: &NSClass, v: &NSClass, g: u64) -> Rational {
    let one_minus_g = Rational::from_integer(BigInt::from(1) - BigInt::from(g));
    &u.coeff_x * &v.coeff_x
        + &u.coeff_x * &v.coeff_half_delta
        + &u.coeff_half_delta * &v.coeff_x
        + &u.coeff_half_delta * &v.coeff_half_delta * one_minus_g
}

/// The rays (g−1)x − δ/2 and (τ+1)x − δ/2.
pub fn nef_boundary_rays(g: u64, tau: &Rational) -> Result<(NSClass, NSClass), NefConeError> {
    if g < 2 {
        return Err(NefConeError::BadInput(format!("genus must be >= 2, got {g}")));
    }
    if tau.is_negative() {
        return Err(NefConeError::BadInput("tau must be nonnegative".into()));
    }
    let minus_one = -Rational::one();
    let ray1 = NSClass::new(Rational::from_integer(BigInt::from(g - 1)), minus_one.clone());
    let ray2 = NSClass::new(tau + Rational::one(), minus_one);
    Ok((ray1, ray2))
}

/// The gonality constant c for curves through a general point of D^(2),
/// where D is very general of genus g − 1. Returns `(c, advisory)`;
/// `advisory` is true outside g ∈ {6, 7, 8}, where the value is the generic
/// extrapolation rather than an established bound.
pub fn default_gonality_constant(g: u32) -> (u32, bool) {
    match g {
        6 => (4, false),
        7 => (5, false),
        8 => (6, false),
        _ => {
            let base = generic_gonality(g.saturating_sub(1));
            (base + u32::from(g >= 7), true)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailedCheck {
    Ratio,
    LSquared,
    LeadingCoefficient,
    IntegerPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    /// B² − 4AC < 0, so f has no real root.
    NegativeDiscriminant(BigInt),
    /// f was evaluated at every integer in `from..=to` and was positive;
    /// beyond `to` it is positive because `to` exceeds the larger root.
    /// `to < from` means the larger root is below 2 and nothing needed checking.
    IntegerPoints { from: BigInt, to: BigInt },
    /// f(m) ≤ 0 at this m.
    Counterexample { m: BigInt, value: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertReport {
    pub valid: bool,
    pub g: u64,
    pub a: BigInt,
    pub b: BigInt,
    pub c: u64,
    pub ratio: Rational,
    pub l_squared: BigInt,
    /// (A, B, C) with f(m) = A m² + B m + C.
    pub quadratic: (BigInt, BigInt, BigInt),
    pub discriminant: BigInt,
    pub evidence: Option<Infeasibility>,
    pub failed_check: Option<FailedCheck>,
    /// True when g is outside the genera for which c is established.
    pub advisory: bool,
}

fn eval(q: &(BigInt, BigInt, BigInt), m: &BigInt) -> BigInt {
    (&q.0 * m + &q.1) * m + &q.2
}

/// Checks the certificate (a, b) for genus g against the previous slope
/// bound `tau_prev` and gonality constant `c`.
pub fn verify_tau_certificate(
    g: u64,
    a: &BigInt,
    b: &BigInt,
    tau_prev: &Rational,
    c: u64,
) -> Result<CertReport, NefConeError> {
    if !a.is_positive() || !b.is_positive() {
        return Err(NefConeError::BadInput("a and b must be positive".into()));
    }
    if g < 3 {
        return Err(NefConeError::BadInput(format!("genus must be >= 3, got {g}")));
    }
    let l2 = a * a - b * b * BigInt::from(g - 1);
    let lead = &l2 - b * b;
    let lin = -&l2 + BigInt::from(2) * b;
    let cons = &l2 * BigInt::from(c) - BigInt::one();
    let quadratic = (lead, lin, cons);
    let discriminant = &quadratic.1 * &quadratic.1 - BigInt::from(4) * &quadratic.0 * &quadratic.2;
    let advisory = g > u32::MAX as u64 || default_gonality_constant(g as u32).1;

    let mut report = CertReport {
        valid: false,
        g,
        a: a.clone(),
        b: b.clone(),
        c,
        ratio: Rational::new(a.clone(), b.clone()),
        l_squared: l2,
        quadratic,
        discriminant,
        evidence: None,
        failed_check: None,
        advisory,
    };

    // a/b ≥ p/q  ⇔  a·q ≥ p·b  (q > 0)
    if a * tau_prev.denom() < tau_prev.numer() * b {
        report.failed_check = Some(FailedCheck::Ratio);
        return Ok(report);
    }
    if !report.l_squared.is_positive() {
        report.failed_check = Some(FailedCheck::LSquared);
        return Ok(report);
    }
    if !report.quadratic.0.is_positive() {
        report.failed_check = Some(FailedCheck::LeadingCoefficient);
        return Ok(report);
    }
    if report.discriminant.is_negative() {
        report.evidence = Some(Infeasibility::NegativeDiscriminant(report.discriminant.clone()));
        report.valid = true;
        return Ok(report);
    }

    // larger root (−B + √Δ)/(2A) ≤ (−B + ⌈√Δ⌉)/(2A) ≤ `to`
    let s = report.discriminant.sqrt();
    let ceil_sqrt = if &s * &s == report.discriminant { s } else { s + 1 };
    let two_a = BigInt::from(2) * &report.quadratic.0;
    let to = (-&report.quadratic.1 + ceil_sqrt).div_ceil(&two_a);
    let from = BigInt::from(2);
    let mut m = from.clone();
    while m <= to {
        let value = eval(&report.quadratic, &m);
        if !value.is_positive() {
            report.evidence = Some(Infeasibility::Counterexample { m, value });
            report.failed_check = Some(FailedCheck::IntegerPoint);
            return Ok(report);
        }
        m += 1;
    }
    report.evidence = Some(Infeasibility::IntegerPoints { from, to });
    report.valid = true;
    Ok(report)
}

/// Smallest a with a valid certificate (a, b). Validity is monotone in a:
/// raising a raises L², and f grows with L² because m² − m + c > 0.
fn min_a_for_b(g: u64, b: u64, tau_prev: &Rational, c: u64) -> CertReport {
    let bb = BigInt::from(b);
    // a ≥ ⌈τ_prev·b⌉ and a² > b²(g−1)
    let from_ratio = (tau_prev.numer() * &bb).div_ceil(tau_prev.denom());
    let from_l2 = (&bb * &bb * BigInt::from(g - 1)).sqrt() + 1;
    let mut a = from_ratio.max(from_l2).max(BigInt::one());
    loop {
        let report = verify_tau_certificate(g, &a, &bb, tau_prev, c).expect("positive inputs");
        if report.valid {
            return report;
        }
        a += 1;
    }
}

/// Over 1 ≤ b ≤ b_max, the valid certificate of least ratio a/b
/// (smallest b on ties).
pub fn search_min_ratio(g: u64, c: u64, tau_prev: &Rational, b_max: u64) -> Result<CertReport, NefConeError> {
    if g < 3 {
        return Err(NefConeError::BadInput(format!("genus must be >= 3, got {g}")));
    }
    if tau_prev.is_negative() {
        return Err(NefConeError::BadInput("tau_prev must be nonnegative".into()));
    }
    (1..=b_max)
        .into_par_iter()
        .map(|b| min_a_for_b(g, b, tau_prev, c))
        .min_by(|x, y| x.ratio.cmp(&y.ratio).then(x.b.cmp(&y.b)))
        .ok_or(NefConeError::NoCertificate(b_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn intersection_basics() {
        let x = NSClass::new(int(1), int(0));
        let h = NSClass::new(int(0), int(1));
        assert_eq!(intersect(&x, &x, 6), int(1));
        assert_eq!(intersect(&h, &h, 6), int(-5));
        assert_eq!(intersect(&x, &h, 6), int(1));
        let l = NSClass::from_ab(&int(32), &int(13));
        assert_eq!(intersect(&l, &l, 5), int(179));
    }

    #[test]
    fn boundary_rays() {
        let (r1, r2) = nef_boundary_rays(6, &rat(32, 13)).unwrap();
        assert_eq!(r1, NSClass::new(int(5), int(-1)));
        assert_eq!(intersect(&r1, &r1, 6), int(10));
        let t = rat(32, 13);
        assert_eq!(intersect(&r2, &r2, 6), &t * &t - int(6));
        // the rays coincide exactly when τ = g − 2
        let (r1, r2) = nef_boundary_rays(2, &int(0)).unwrap();
        assert_eq!(r1, NSClass::new(int(1), int(-1)));
        assert_eq!(r1, r2);
        let (r1, r2) = nef_boundary_rays(2, &int(1)).unwrap();
        assert_ne!(r1, r2);
        assert!(nef_boundary_rays(1, &int(1)).is_err());
        assert!(nef_boundary_rays(3, &int(-1)).is_err());
    }

    #[test]
    fn gonality_constants() {
        assert_eq!(default_gonality_constant(6), (4, false));
        assert_eq!(default_gonality_constant(7), (5, false));
        assert_eq!(default_gonality_constant(8), (6, false));
        assert!(default_gonality_constant(9).1);
        assert!(default_gonality_constant(5).1);
    }

    #[test]
    fn three_certificates() {
        let cases = [
            (6, 32, 13, rat(9, 4), 4, 179, (10, -153, 715), -5191),
            (7, 77, 29, rat(32, 13), 5, 883, (42, -825, 4414), -60927),
            (8, 17, 6, rat(77, 29), 6, 37, (1, -25, 221), -259),
        ];
        for (g, a, b, tau, c, l2, q, disc) in cases {
            let r = verify_tau_certificate(g, &bi(a), &bi(b), &tau, c).unwrap();
            assert!(r.valid, "g = {g}");
            assert_eq!(r.l_squared, bi(l2));
            assert_eq!(r.quadratic, (bi(q.0), bi(q.1), bi(q.2)));
            assert_eq!(r.discriminant, bi(disc));
            assert_eq!(r.evidence, Some(Infeasibility::NegativeDiscriminant(bi(disc))));
            assert!(!r.advisory);
        }
    }

    #[test]
    fn ratio_failure() {
        let r = verify_tau_certificate(6, &bi(29), &bi(13), &rat(9, 4), 4).unwrap();
        assert!(!r.valid);
        assert_eq!(r.failed_check, Some(FailedCheck::Ratio));
    }

    #[test]
    fn integer_point_path() {
        // g = 5, (a, b) = (3, 1), c = 0: f = 4m² − 3m − 1 = (4m + 1)(m − 1)
        let r = verify_tau_certificate(5, &bi(3), &bi(1), &int(0), 0).unwrap();
        assert_eq!(r.quadratic, (bi(4), bi(-3), bi(-1)));
        assert!(r.valid);
        assert!(matches!(r.evidence, Some(Infeasibility::IntegerPoints { .. })));
        // L² = 1, A = 0
        let r = verify_tau_certificate(4, &bi(2), &bi(1), &int(0), 4).unwrap();
        assert_eq!(r.l_squared, bi(1));
        assert_eq!(r.failed_check, Some(FailedCheck::LeadingCoefficient));
        let r = verify_tau_certificate(6, &bi(2), &bi(1), &int(0), 4).unwrap();
        assert_eq!(r.failed_check, Some(FailedCheck::LSquared));
    }

    #[test]
    fn integer_point_counterexample() {
        // g = 3, (a, b) = (7, 4), c = 0: L² = 17, f = m² − 9m − 1, f(2) < 0
        let r = verify_tau_certificate(3, &bi(7), &bi(4), &int(0), 0).unwrap();
        assert_eq!(r.quadratic, (bi(1), bi(-9), bi(-1)));
        assert!(!r.valid);
        assert_eq!(r.failed_check, Some(FailedCheck::IntegerPoint));
        assert!(matches!(r.evidence, Some(Infeasibility::Counterexample { .. })));
    }

    #[test]
    fn bad_input() {
        assert!(verify_tau_certificate(6, &bi(0), &bi(1), &int(0), 4).is_err());
        assert!(verify_tau_certificate(2, &bi(3), &bi(1), &int(0), 4).is_err());
    }

    #[test]
    fn search_examples() {
        let r = search_min_ratio(8, 6, &rat(77, 29), 6).unwrap();
        assert_eq!((r.a.clone(), r.b.clone()), (bi(17), bi(6)));

        let r = search_min_ratio(6, 4, &rat(9, 4), 13).unwrap();
        assert!(r.ratio <= rat(32, 13));
        assert!(verify_tau_certificate(6, &bi(32), &bi(13), &rat(9, 4), 4).unwrap().valid);

        let r = search_min_ratio(6, 4, &rat(9, 4), 1).unwrap();
        assert_eq!(r.b, bi(1));
        assert!(&r.ratio * &r.ratio > int(5));

        assert_eq!(search_min_ratio(6, 4, &rat(9, 4), 0), Err(NefConeError::NoCertificate(0)));
    }
}
