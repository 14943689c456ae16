use cfhankel::algebra::{binomial, Poly, PowerSeries, Rational};
use cfhankel::genfunc::{build_fe_f, build_fe_g, conv_coeff, derive_fe, g_base_poly, g_coeff, series_from_fe, GFKind};
use cfhankel::identities::check_integer_coefficients;

/// `C(x)^r` as a plain product of Catalan series.
fn catalan_power(r: u32, n: usize) -> PowerSeries<Rational> {
    let c = PowerSeries::new((0..=n).map(|k| Rational::from(binomial(2 * k as i64, k as i64)) / Rational::from(k as i64 + 1)).collect());
    let one = PowerSeries::from_poly(&Poly::one(), n);
    (0..r).fold(one, |acc, _| acc.mul(&c))
}

#[test]
fn equations_reproduce_binomial_coefficients() {
    for r in 1..=13 {
        let n = 200;
        let f = series_from_fe(&build_fe_f(r).unwrap(), n).unwrap();
        let g = series_from_fe(&build_fe_g(r).unwrap(), n).unwrap();
        for k in 0..=n {
            assert_eq!(f.coeff(k), conv_coeff(k, r), "F r={r} n={k}");
            assert_eq!(g.coeff(k), g_coeff(k, r), "G r={r} n={k}");
        }
    }
}

#[test]
fn binomial_coefficients_match_series_products() {
    for r in 0..=6 {
        let s = catalan_power(r, 30);
        for k in 0..=30 {
            assert_eq!(s.coeff(k), conv_coeff(k, r));
            assert!(conv_coeff(k, r).is_integer() && g_coeff(k, r).is_integer());
        }
    }
}

#[test]
fn g_is_catalan_power_over_square_root() {
    // G(x,r)·(1-2xC) = C^r
    for r in 1..=8 {
        let n = 25;
        let c = catalan_power(1, n);
        let two_x = PowerSeries::from_poly(&Poly::from_i64s(&[0, 2]), n);
        let one_minus = PowerSeries::from_poly(&Poly::one(), n).sub(&c.mul(&two_x));
        let g = PowerSeries::new(GFKind::g(r).coeffs(n + 1));
        assert_eq!(g.mul(&one_minus), catalan_power(r, n));
    }
}

#[test]
fn derived_relations_match_closed_forms() {
    for r in 1..=13u32 {
        let t = (r / 2) as usize;
        let s = series_from_fe(&build_fe_f(r).unwrap(), 3 * r as usize + 12).unwrap();
        let (a, b, c) = derive_fe(&s, r as usize, t, 0).unwrap();
        let fe = build_fe_f(r).unwrap();
        let (ra, rb, rc) = fe.relation();
        // Proportional to x^r v F^2 + u F - 1 = 0.
        let scale = &c.coeff(0) / &rc.num().coeff(0);
        assert_eq!(a, ra.num().scale(&scale), "r={r}");
        assert_eq!(b, rb.num().scale(&scale), "r={r}");
        assert!(ra.den() == &Poly::one() && rb.den() == &Poly::one());
    }
}

#[test]
fn g_base_polynomial_small_cases() {
    assert_eq!(g_base_poly(1), Poly::from_i64s(&[1]));
    assert_eq!(g_base_poly(3), Poly::from_i64s(&[1, -1]));
    assert_eq!(g_base_poly(4), Poly::from_i64s(&[1, -2]));
}

#[test]
fn odd_coefficients_are_integers() {
    for t in 0..=200 {
        for i in 0..=t {
            assert!(check_integer_coefficients(t, i), "t={t} i={i}");
        }
    }
}
