use crown_core::graphs::Crowns;
use crown_core::loday::*;
use crown_core::monoid::{build_t, build_z, Sign};
use crown_core::{Caps, Field, Rational, F2};

fn algs<F: Field>(n: usize) -> CrownAlgebras<F> {
    CrownAlgebras::new(Crowns::new(n).unwrap())
}

#[test]
fn lemma_holds_below_level() {
    let caps = Caps::default();
    assert!(lemma_check(&algs::<Rational>(2), 1, &caps).unwrap());
    assert!(lemma_check(&algs::<F2>(3), 1, &caps).unwrap());
    assert!(lemma_check(&algs::<F2>(3), 2, &caps).unwrap());
}

#[test]
fn lemma_fails_at_level() {
    let caps = Caps::default();
    assert!(!lemma_check(&algs::<Rational>(2), 2, &caps).unwrap());
}

#[test]
fn lemma_trace_n2() {
    let caps = Caps::default();
    let a = algs::<Rational>(2);
    let trace = lemma_proof_trace(&a, 1, &caps).unwrap();
    assert!(trace.passed(), "{trace:?}");
    assert_eq!(trace.words_checked, 18);
    let beyond = lemma_proof_trace(&a, 2, &caps).unwrap();
    assert!(!beyond.passed());
    assert!(beyond.injective && beyond.intertwines);
}

#[test]
fn transport_squares_commute() {
    let caps = Caps::default();
    let a = algs::<Rational>(2);
    let t = build_t::<Rational>(2).unwrap();
    for s in Sign::BOTH {
        assert!(transport_square_check(&a, 1, &t, s, s.flip(), &caps).unwrap());
    }
}

#[test]
fn iso_n2_rational() {
    let caps = Caps::default();
    let report = iso_check(&algs::<Rational>(2), &caps).unwrap();
    assert!(report.passed(), "{report:?}");
    assert!(report.z_vanishes);
    assert!(report.composites.iter().all(|c| c.factors && c.matches_one_minus_z == Some(true)));
}

#[test]
fn iso_n3_f2() {
    let caps = Caps::default();
    let report = iso_check(&algs::<F2>(3), &caps).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn z_is_not_invertible_control() {
    let caps = Caps::default();
    let a = algs::<Rational>(2);
    let z = build_z::<Rational>(2).unwrap();
    let report = mutual_inverse_check(&a, &z, 1, &caps).unwrap();
    assert!(!report.passed());
}

#[test]
fn loday_functor_laws_on_crown() {
    let caps = Caps::default();
    let a = algs::<F2>(2);
    assert!(functor_check(&a.plus, 2, &caps).unwrap().passed());
}
