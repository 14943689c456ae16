use cfhankel::algebra::{
    poly_gcd_reduce, series_expand, series_reciprocal, Field, Fp, Poly, Rational, RationalFunction,
};
use cfhankel::oracle::{det_bareiss, det_mod_p};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(cs: &[i64]) -> Poly<Rational> {
    Poly::from_i64s(cs)
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 1..=max_len)
}

/// Rational function with nonzero denominator at 0.
fn regular_rf() -> impl Strategy<Value = RationalFunction<Rational>> {
    (coeffs(5), 1i64..=4, prop::collection::vec(-5i64..=5, 0..4), any::<bool>()).prop_map(|(n, d0, rest, neg)| {
        let mut den = vec![if neg { -d0 } else { d0 }];
        den.extend(rest);
        RationalFunction::new(poly(&n), poly(&den)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn truncation_consistency(rf in regular_rf(), n in 0usize..25) {
        let short = series_expand(&rf, n).unwrap();
        let long = series_expand(&rf, n + 1).unwrap();
        prop_assert_eq!(short.coeffs(), &long.coeffs()[..=n]);
    }

    #[test]
    fn reciprocal_of_expansion(rf in regular_rf(), n in 0usize..20) {
        prop_assume!(!rf.num().coeff(0).is_zero());
        let inv = rf.recip().unwrap();
        prop_assert_eq!(series_reciprocal(&series_expand(&rf, n).unwrap()).unwrap(), series_expand(&inv, n).unwrap());
    }

    #[test]
    fn gcd_reduce_idempotent_and_value_preserving(a in coeffs(4), b in coeffs(4), c in coeffs(3)) {
        let common = poly(&c);
        prop_assume!(!common.is_zero() && !poly(&b).is_zero());
        let num = &poly(&a) * &common;
        let den = &poly(&b) * &common;
        let once = poly_gcd_reduce(num.clone(), den.clone()).unwrap();
        let twice = poly_gcd_reduce(once.num().clone(), once.den().clone()).unwrap();
        prop_assert_eq!(&once, &twice);
        let mut checked = 0;
        for k in -60i64..=60 {
            if checked == 100 {
                break;
            }
            let x = Rational::from_frac(k, 7);
            let (Some(orig), Some(red)) = (num.eval(&x).quo(&den.eval(&x)), once.eval(&x)) else { continue };
            prop_assert_eq!(orig, red);
            checked += 1;
        }
    }

    #[test]
    fn bareiss_integral_and_matches_mod_p(rows in (1usize..=12).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-50i64..=50, n), n))) {
        let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        let det = det_bareiss(&m);
        prop_assert!(det.is_integer());
        let p = 274177u64;
        let red: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
        prop_assert_eq!(det.mod_prime(p).unwrap(), det_mod_p(&red, p));
        let t: Vec<Vec<Rational>> = (0..m.len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect();
        prop_assert_eq!(det_bareiss(&t), det);
    }
}

#[test]
fn random_matrix_batch_of_two_hundred() {
    // Deterministic sweep complementing the proptest cases above.
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 201) as i64 - 100
    };
    for k in 0..200 {
        let n = 1 + k % 12;
        let ints: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let m: Vec<Vec<Rational>> = ints.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        let det = det_bareiss(&m);
        for p in [274177u64, 1_000_000_007] {
            let red: Vec<Vec<u64>> = ints.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
            assert_eq!(det.mod_prime(p).unwrap(), det_mod_p(&red, p), "matrix {k}");
        }
    }
}

#[test]
fn prime_field_rational_functions_have_monic_denominators() {
    type F7 = Fp<7>;
    let num = Poly::new(vec![F7::from_i64(3)]);
    let den = Poly::new(vec![F7::from_i64(2), F7::from_i64(4)]);
    let rf = RationalFunction::new(num, den).unwrap();
    assert!(rf.den().leading().unwrap().is_one());
}

#[test]
fn content_normalization() {
    let rf = RationalFunction::new(poly(&[0, 2]), poly(&[4])).unwrap();
    assert_eq!((rf.num(), rf.den()), (&poly(&[0, 1]), &poly(&[2])));
    let big = Rational::from(BigInt::from(10).pow(30));
    assert!(big.is_integer());
}
