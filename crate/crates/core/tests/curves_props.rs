use proptest::prelude::*;
use symprod_core::curves::*;

fn scan_min_degree(g: u32, r: u32) -> u32 {
    (0..=2 * g + r)
        .find(|&d| brill_noether_rho(g as i64, r as i64, d as i64) >= 0)
        .expect("rho is eventually nonnegative")
}

#[test]
fn closed_form_matches_scan() {
    for g in 1..=60 {
        for r in 1..=5 {
            assert_eq!(generic_min_degree(g, r), scan_min_degree(g, r), "g = {g}, r = {r}");
        }
    }
}

#[test]
fn gonality_is_the_least_pencil_degree() {
    for g in 2..=60 {
        assert_eq!(generic_gonality(g), generic_min_degree(g, 1));
    }
}

#[test]
fn martens_is_consistent_with_brill_noether() {
    // on a very general curve dim W^r_m = rho(g, r, m) whenever rho >= 0,
    // and Martens' bound must dominate it
    let profile = |g| CurveProfile::new(g, CurveClass::VeryGeneral);
    for g in 5..=20u32 {
        for r in 1..=g as i64 {
            for m in (2 * r)..=(g as i64 - 1) {
                let rho = brill_noether_rho(g as i64, r, m);
                if rho < 0 {
                    continue;
                }
                let mb = martens_bound_for(&profile(g), m, r);
                assert_eq!(mb.hypotheses_met, Some(true));
                assert!(mb.dim_bound >= 0, "g = {g}, r = {r}, m = {m}");
                assert!(rho <= mb.dim_bound, "g = {g}, r = {r}, m = {m}");
            }
        }
    }
}

#[test]
fn clifford_classifier_covers_the_equality_cases() {
    for g in 2..=12u32 {
        assert_eq!(clifford_case(g, 2 * g - 2, g - 1), CliffordCase::Canonical);
        assert_eq!(clifford_case(g, 0, 0), CliffordCase::ZeroDivisor);
        for deg in (2..2 * g - 2).step_by(2) {
            assert_eq!(clifford_case(g, deg, deg / 2), CliffordCase::ForcesHyperelliptic);
        }
    }
}

proptest! {
    #[test]
    fn rho_is_affine_in_d(g in 0i64..200, r in 0i64..20, d in 0i64..300) {
        prop_assert_eq!(brill_noether_rho(g, r, d + 1) - brill_noether_rho(g, r, d), r + 1);
    }

    #[test]
    fn clifford_bound_never_below_half(deg in 0u32..1000) {
        let c = clifford_max_dim(deg);
        prop_assert!(2 * c <= deg && deg < 2 * c + 2);
    }

    #[test]
    fn geometric_rr_general_position(deg in 1i64..200) {
        prop_assert_eq!(geometric_rr(deg, deg - 1), 0);
    }

    #[test]
    fn profiles_round_trip(g in 3u32..40, gon in proptest::option::of(3u32..10)) {
        let mut p = CurveProfile::new(g, CurveClass::NonHyperelliptic);
        p.gonality = gon;
        let text = serde_json::to_string(&p).unwrap();
        let back: CurveProfile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }
}
