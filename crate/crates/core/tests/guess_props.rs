use cfhankel::algebra::{Poly, Rational};
use cfhankel::cf::Chain;
use cfhankel::genfunc::GFKind;
use cfhankel::guess::{
    check_named_results, class_sequence, class_structure, evaluate, expected_class_degrees, guess_class,
    named_identities, GuessResult, HankelTable, SignPattern,
};
use cfhankel::identities::{
    check_substitution, check_z_recurrence_f, check_z_recurrence_g, verify_f_identity, verify_g_identity, z_sum_f,
    z_sum_g,
};
use proptest::prelude::*;

#[test]
fn fitted_classes_reproduce_chain_values() {
    for kind in [GFKind::f(5), GFKind::f(6), GFKind::f(7), GFKind::g(4), GFKind::g(5)] {
        let (m, _) = class_structure(kind);
        let (expected, _) = expected_class_degrees(kind);
        for j in 0..m {
            let count = expected[j].map_or(2, |d| d + 2) + 3;
            let g = guess_class(kind, j, count, 3).unwrap();
            assert_eq!(g.degree(), expected[j], "{kind} class {j}");
            let again = guess_class(kind, j, count, 3).unwrap();
            assert_eq!(g, again);
            let mut chain = Chain::new(kind.fe().unwrap());
            let values = class_sequence(m, j, count + 4, &mut chain).unwrap();
            for (n, v) in values.iter().enumerate() {
                assert_eq!(&g.eval(n as i64), v, "{kind} class {j} n={n}");
            }
        }
    }
}

#[test]
fn closed_forms_hold_on_small_range() {
    let mut kinds: Vec<GFKind> = named_identities().iter().map(|i| i.primary_kind()).collect();
    kinds.dedup();
    for kind in kinds {
        let reps = check_named_results(kind, 8).unwrap();
        assert!(reps.iter().all(|r| r.passed() || !r.asserted), "{kind}");
    }
}

#[test]
fn wrong_closed_form_is_caught() {
    let mut ids = named_identities();
    ids.retain(|i| i.id == "H_{5n+2}(F(x,5))");
    let mut id = ids.pop().unwrap();
    let orig = id.rhs.clone();
    id.rhs = std::sync::Arc::new(move |n| orig(n) + Rational::from(if n == 3 { 1 } else { 0 }));
    let reps = evaluate(&[id], &mut HankelTable::new(), 6).unwrap();
    assert_eq!(reps[0].first_failure, Some(3));
}

#[test]
fn identity_suite() {
    for t in 1..=40 {
        assert!(verify_f_identity(t) && verify_g_identity(t), "t={t}");
    }
    for t in 1..=30i64 {
        for m in 0..=2 * t + 1 {
            let inner = m != 0 && m != 2 * t + 1;
            let f = if inner { 0 } else if m == 0 { -1 } else { 1 };
            let g = if inner { 0 } else { 1 };
            assert_eq!(z_sum_f(t, m), Rational::from(f), "t={t} m={m}");
            assert_eq!(z_sum_g(t, m), Rational::from(g), "t={t} m={m}");
            if t <= 29 {
                assert!(check_z_recurrence_f(t, m) && check_z_recurrence_g(t, m), "t={t} m={m}");
            }
        }
    }
    for r in 1..=9 {
        assert!(check_substitution(r, 30).unwrap(), "r={r}");
    }
}

fn sign_strategy() -> impl Strategy<Value = SignPattern> {
    prop_oneof![Just(SignPattern::None), (1u32..20).prop_map(SignPattern::Tn), (1u32..20).prop_map(SignPattern::NBinomT)]
}

proptest! {
    #[test]
    fn guess_json_round_trip(
        sign in sign_strategy(),
        cs in prop::collection::vec((-50i64..50, 1i64..9), 0..6),
        a in 0i64..10, len in 0i64..10, verify in prop::option::of(1i64..5),
    ) {
        let poly = Poly::new(cs.iter().map(|&(n, d)| Rational::from_frac(n, d)).collect());
        let g = GuessResult { sign, poly, fitted_on: (a, a + len), verified_on: verify.map(|v| (a + len + 1, a + len + v)) };
        let text = g.to_json();
        prop_assert_eq!(GuessResult::from_json(&text).unwrap(), g);
    }
}

#[test]
fn zero_polynomial_encodes_degree_minus_one() {
    let g = GuessResult { sign: SignPattern::None, poly: Poly::zero(), fitted_on: (0, 1), verified_on: None };
    assert!(g.to_json().contains("\"degree\":-1"));
    assert!(GuessResult::from_json(r#"{"sign":"1","poly":[],"degree":0,"fitted_on":[0,1],"verified_on":null}"#).is_err());
}
