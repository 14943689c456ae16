use cfhankel::algebra::{Field, Rational};
use cfhankel::cf::{build_chain, detect_period, hankel_from_chain, hankel_sequence, tau, Chain, ChainStep};
use cfhankel::genfunc::{series_from_fe, GFKind};
use cfhankel::oracle::hankel_det;
use proptest::prelude::*;

fn kinds(r_max: u32) -> Vec<GFKind> {
    (1..=r_max).flat_map(|r| [GFKind::f(r), GFKind::g(r)]).collect()
}

fn hankels_of(fe: &cfhankel::cf::QuadraticFE<Rational>, n: usize) -> Vec<Rational> {
    let s = series_from_fe(fe, 2 * n + 1).unwrap();
    (0..=n).map(|m| hankel_det(s.coeffs(), m)).collect()
}

/// Each step's determinant relation, checked on the series of both sides,
/// together with the zero rule `H_m = 0` for `1 <= m <= d`.
#[test]
fn every_step_honours_its_determinant_relation() {
    let n = 12;
    for kind in kinds(9) {
        let chain = build_chain(kind.fe().unwrap(), 40).unwrap();
        let mut before = hankels_of(&chain.initial, n);
        for (i, (step, fe)) in chain.steps.iter().enumerate() {
            let after = hankels_of(fe, n);
            let prev_fe = chain.fe_at(i);
            for m in 1..=prev_fe.d.min(n) {
                assert!(before[m].is_zero(), "{kind} step {i}: zero rule at m={m}");
            }
            for m in 0..=n {
                let expect = match step {
                    ChainStep::Scale { u0 } => u0.powi(-(m as i64)).unwrap() * &after[m],
                    ChainStep::Shift { d, sign } => {
                        if m == 0 {
                            Rational::from(1)
                        } else if m <= *d {
                            Rational::from(0)
                        } else if m - d - 1 <= n {
                            Rational::from(*sign as i64) * &after[m - d - 1]
                        } else {
                            continue;
                        }
                    }
                };
                assert_eq!(before[m], expect, "{kind} step {i} m={m}");
            }
            before = after;
        }
    }
}

#[test]
fn walker_and_incremental_evaluator_match_elimination() {
    for kind in kinds(12) {
        let mut chain = Chain::new(kind.fe().unwrap());
        let seq = chain.hankel_sequence_grow(30).unwrap();
        let coeffs = kind.coeffs(61);
        for n in 0..=30 {
            let oracle = hankel_det(&coeffs, n);
            assert_eq!(seq[n], oracle, "{kind} n={n}");
            assert_eq!(hankel_from_chain(&chain, n).unwrap(), oracle, "{kind} n={n}");
        }
    }
}

#[test]
fn tau_cases_are_exclusive() {
    for kind in kinds(9) {
        let chain = build_chain(kind.fe().unwrap(), 30).unwrap();
        for fe in chain.fes() {
            let (step, _) = tau(fe).unwrap();
            let scaled = !fe.u0().is_one();
            assert_eq!(matches!(step, ChainStep::Scale { .. }), scaled, "{kind}");
        }
    }
}

#[test]
fn periods_drop_expected_indices() {
    let cases: &[(GFKind, usize, usize)] = &[
        (GFKind::f(3), 2, 3),
        (GFKind::f(5), 4, 5),
        (GFKind::f(7), 6, 7),
        (GFKind::f(9), 8, 9),
        (GFKind::f(4), 2, 2),
        (GFKind::f(6), 3, 3),
        (GFKind::f(8), 4, 4),
        (GFKind::g(3), 3, 3),
        (GFKind::g(5), 5, 5),
        (GFKind::g(2), 2, 2),
        (GFKind::g(8), 8, 8),
    ];
    for &(kind, order, drop) in cases {
        let chain = build_chain(kind.fe().unwrap(), 80).unwrap();
        let rep = detect_period(&chain).unwrap();
        assert_eq!((rep.order, rep.index_drop_per_period), (order, drop), "{kind}");
        assert!(rep.d_pattern.len() == order && !rep.d_pattern.is_empty());
    }
}

#[test]
fn short_chain_is_reported() {
    let chain = build_chain(GFKind::f(5).fe().unwrap(), 3).unwrap();
    assert!(hankel_sequence(&chain, 100).is_err());
    assert!(hankel_from_chain(&chain, 100).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chain_json_round_trip(r in 1u32..=9, g in any::<bool>(), steps in 0usize..30, fes in any::<bool>()) {
        let kind = if g { GFKind::g(r) } else { GFKind::f(r) };
        let chain = build_chain(kind.fe().unwrap(), steps).unwrap();
        let text = chain.to_json(fes);
        let back = Chain::from_json(&text).unwrap();
        prop_assert_eq!(back.len(), chain.len());
        prop_assert_eq!(back.to_json(fes), text);
    }
}

#[test]
fn tampered_chain_json_is_rejected() {
    let chain = build_chain(GFKind::f(5).fe().unwrap(), 6).unwrap();
    let text = chain.to_json(false);
    let forged = text.replacen("\"sign\":1", "\"sign\":-1", 1);
    assert!(Chain::from_json(&forged).is_err());
    let forged = text.replacen("{\"scale\":\"", "{\"scale\":\"2", 1);
    assert!(Chain::from_json(&forged).is_err());
    assert!(Chain::from_json("{\"initial\":1}").is_err());
}
